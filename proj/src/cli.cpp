#include "rskop/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rskop/analysis.hpp"
#include "rskop/contingency.hpp"
#include "rskop/operator.hpp"
#include "rskop/verify.hpp"
#include "rskop/weights.hpp"

namespace rskop::cli {

using nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::capacity: return capacity_exceeded;
    case ErrorKind::internal: return internal_fault;
    default: return invalid_input;
  }
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& text, std::size_t pos) {
  fail(ErrorKind::invalid_argument,
       what + " at position " + std::to_string(pos + 1) + " in \"" + text + "\"");
}

// Splits on sep, remembering where each piece starts.
std::vector<std::pair<std::string, std::size_t>> split(const std::string& s, char sep, std::size_t base = 0) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start), base + start);
      start = i + 1;
    }
  return out;
}

int parse_int(const std::string& piece, std::size_t at, const std::string& whole, const char* what) {
  std::size_t b = 0, e = piece.size();
  while (b < e && std::isspace(static_cast<unsigned char>(piece[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(piece[e - 1]))) --e;
  if (b == e) parse_fail(std::string("empty ") + what, whole, at + b);
  long v = 0;
  for (std::size_t i = b; i < e; ++i) {
    char c = piece[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      parse_fail(std::string("unexpected character '") + c + "' in " + what, whole, at + i);
    v = v * 10 + (c - '0');
    if (v > 1'000'000) parse_fail(std::string(what) + " too large", whole, at + b);
  }
  return static_cast<int>(v);
}

}  // namespace

WeightVector parse_weight(const std::string& text) {
  std::string s = text;
  std::size_t offset = 0;
  if (!s.empty() && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
    offset = 1;
  }
  if (s.empty()) fail(ErrorKind::invalid_argument, "empty weight literal");
  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    for (const auto& [piece, at] : split(s, ',', offset)) parts.push_back(parse_int(piece, at, text, "weight entry"));
  } else {
    // Compact form: one digit per entry, so entries of 10 or more need commas.
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        parse_fail(std::string("unexpected character '") + s[i] + "' in weight literal", text, i + offset);
      parts.push_back(s[i] - '0');
    }
  }
  return WeightVector(std::move(parts));
}

ContingencyTable parse_table(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      fail(ErrorKind::invalid_argument, std::string("matrix JSON: ") + e.what());
    }
    IntMatrix m = matrix_from_json(j);
    std::vector<int> flat;
    for (int i = 0; i < m.rows(); ++i)
      for (int j2 = 0; j2 < m.cols(); ++j2) {
        const BigInt& x = m.at(i, j2);
        if (x < 0 || x > 1'000'000) fail(ErrorKind::invalid_argument, "matrix entries must be in [0, 1000000]");
        flat.push_back(static_cast<int>(x.get_si()));
      }
    return ContingencyTable(m.rows(), m.cols(), std::move(flat));
  }
  std::vector<std::vector<int>> rows;
  std::string trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  if (trimmed.empty()) return ContingencyTable();
  for (const auto& [row, at] : split(trimmed, ';')) {
    std::vector<int> r;
    for (const auto& [piece, at2] : split(row, ',', at)) r.push_back(parse_int(piece, at2, text, "matrix entry"));
    if (!rows.empty() && r.size() != rows[0].size())
      parse_fail("row of a different length", text, at);
    rows.push_back(std::move(r));
  }
  return ContingencyTable::from_rows(rows);
}

Tableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> rows;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return Tableau();
  for (const auto& [row, at] : split(text, ';')) {
    std::vector<int> r;
    for (const auto& [piece, at2] : split(row, ',', at)) r.push_back(parse_int(piece, at2, text, "tableau label"));
    rows.push_back(std::move(r));
  }
  Tableau t(rows);
  if (!t.is_semistandard()) fail(ErrorKind::invalid_tableau, "tableau \"" + text + "\" is not semistandard");
  return t;
}

json matrix_to_json(const IntMatrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).get_str());
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

namespace {

BigInt json_integer(const json& v) {
  if (v.is_string()) {
    BigInt x;
    if (x.set_str(v.get<std::string>(), 10) != 0) fail(ErrorKind::invalid_argument, "not a decimal integer: " + v.dump());
    return x;
  }
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  fail(ErrorKind::invalid_argument, "expected an integer, got " + v.dump());
}

}  // namespace

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
      !j["rows"].is_number_integer() || !j["cols"].is_number_integer() || !j["entries"].is_array())
    fail(ErrorKind::invalid_argument, "matrix JSON needs integer rows, cols and an entries array");
  int r = j["rows"].get<int>(), c = j["cols"].get<int>();
  if (r < 0 || c < 0 || j["entries"].size() != static_cast<std::size_t>(r) * c)
    fail(ErrorKind::invalid_argument, "matrix JSON entry count does not match rows x cols");
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.at(i, k) = json_integer(j["entries"][static_cast<std::size_t>(i) * c + k]);
  return m;
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& x : p.coeffs()) coeffs.push_back(x.get_str());
  return {{"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    fail(ErrorKind::invalid_argument, "polynomial JSON needs a coeffs array");
  std::vector<BigInt> c;
  for (const auto& v : j["coeffs"]) c.push_back(json_integer(v));
  return IntPoly(std::move(c));
}

std::string factored(const IntPoly& p) {
  if (p.is_zero()) return "0";
  PlusMinusOneSplit s = strip_pm1_factors(p);
  std::string out;
  auto power = [](const std::string& base, int e) { return e == 1 ? base : base + "^" + std::to_string(e); };
  if (s.a) out += power("(t-1)", s.a);
  if (s.b) out += power("(t+1)", s.b);
  if (s.remainder.degree() > 0 || out.empty()) {
    if (s.remainder.degree() == 0 && s.remainder.lead() == 1 && !out.empty()) return out;
    out += "(" + s.remainder.str() + ")";
  } else if (s.remainder.lead() != 1) {
    out = s.remainder.str() + out;
  }
  return out;
}

namespace {

enum class Format { text, json, csv };

struct Context {
  Format format = Format::text;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string command;

  void emit_json(const json& payload) const {
    out << json{{"command", command}, {"format", "json"}, {"payload", payload}}.dump(2) << '\n';
  }
};

std::string read_arg(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

json rows_json(const Tableau& t) { return t.rows(); }

json weight_json(const WeightVector& w) { return w.entries; }

json pair_json(const WeightPair& p) { return {{"sigma", weight_json(p.sigma)}, {"pi", weight_json(p.pi)}}; }

std::string divisor_text(const ContingencyTable& t) {
  std::string s;
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) {
      int e = t.at(i, j);
      if (!e) continue;
      if (!s.empty()) s += ' ';
      s += "z" + std::to_string(i + 1) + std::to_string(j + 1);
      if (e > 1) s += "^" + std::to_string(e);
    }
  return s.empty() ? "1" : s;
}

void print_matrix_text(std::ostream& os, const IntMatrix& m) {
  std::size_t w = 1;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) w = std::max(w, m.at(i, j).get_str().size());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(w)) << m.at(i, j).get_str();
    os << '\n';
  }
}

void print_matrix_csv(std::ostream& os, const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j).get_str();
    os << '\n';
  }
}

// ---- commands ----

int cmd_apply(const Context& cx, const std::vector<std::string>& args, bool inverse) {
  if (!inverse) {
    if (args.size() != 1) fail(ErrorKind::invalid_argument, "apply takes one matrix literal");
    ContingencyTable a = parse_table(read_arg(args[0], cx.in));
    TableauPair pq = rsk(a);
    if (cx.format == Format::json) {
      cx.emit_json({{"P", rows_json(pq.p)}, {"Q", rows_json(pq.q)}});
    } else if (cx.format == Format::csv) {
      cx.out << "tableau,row,labels\n";
      for (auto [name, t] : {std::pair{"P", &pq.p}, std::pair{"Q", &pq.q}})
        for (std::size_t r = 0; r < t->rows().size(); ++r) {
          cx.out << name << ',' << r + 1 << ',';
          for (std::size_t k = 0; k < t->rows()[r].size(); ++k) cx.out << (k ? " " : "") << t->rows()[r][k];
          cx.out << '\n';
        }
    } else {
      cx.out << "P = " << pq.p.str() << "\nQ = " << pq.q.str() << '\n';
    }
    return ok;
  }
  if (args.size() != 2) fail(ErrorKind::invalid_argument, "apply --inverse takes two tableau literals P and Q");
  Tableau p = parse_tableau(read_arg(args[0], cx.in));
  Tableau q = parse_tableau(read_arg(args[1], cx.in));
  ContingencyTable a = inverse_rsk({p, q});
  IntMatrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  if (cx.format == Format::json)
    cx.emit_json({{"matrix", matrix_to_json(m)}});
  else if (cx.format == Format::csv)
    print_matrix_csv(cx.out, m);
  else
    cx.out << a.str() << '\n';
  return ok;
}

struct MatrixFlags {
  bool inverse = false, charpoly = false, minpoly = false, diag = false, spectrum = false;
};

int cmd_matrix(const Context& cx, const std::string& s, const std::string& p, const MatrixFlags& f) {
  WeightPair pair{parse_weight(s), parse_weight(p)};
  RskMatrix m = f.inverse ? build_inverse(pair) : build_matrix(pair);
  // Analyses always refer to the matrix that was printed.
  std::optional<IntPoly> ch, mu;
  if (f.charpoly || f.spectrum) ch = char_poly(m.entries);
  if (f.minpoly || f.diag) mu = min_poly(m.entries);
  std::optional<bool> diag;
  if (f.diag) diag = gcd(*mu, mu->derivative()).degree() <= 0;
  std::optional<PlusMinusOneSplit> split;
  int real_roots = 0;
  if (f.spectrum) {
    split = strip_pm1_factors(*ch);
    real_roots = sturm_real_root_count(*ch);
  }
  if (cx.format == Format::json) {
    json basis = json::array();
    for (const auto& t : m.basis) basis.push_back(t.str());
    json payload{{"pair", pair_json(pair)}, {"inverse", f.inverse}, {"basis", basis}, {"matrix", matrix_to_json(m.entries)}};
    if (ch) payload["charpoly"] = poly_to_json(*ch);
    if (mu && f.minpoly) payload["minpoly"] = poly_to_json(*mu);
    if (diag) payload["diagonalizable"] = *diag;
    if (split)
      payload["spectrum"] = {{"distinct_real_roots", real_roots},
                             {"mult_plus_one", split->a},
                             {"mult_minus_one", split->b},
                             {"remainder", poly_to_json(split->remainder)}};
    cx.emit_json(payload);
    return ok;
  }
  if (cx.format == Format::csv) {
    print_matrix_csv(cx.out, m.entries);
    return ok;
  }
  cx.out << (f.inverse ? "inverse of " : "") << "RSK" << pair.str() << ", dimension " << m.dim() << '\n';
  cx.out << "basis:";
  for (const auto& t : m.basis) cx.out << ' ' << t.str();
  cx.out << '\n';
  print_matrix_text(cx.out, m.entries);
  if (ch) cx.out << "charpoly: " << ch->str() << "  = " << factored(*ch) << '\n';
  if (mu && f.minpoly) cx.out << "minpoly: " << mu->str() << "  = " << factored(*mu) << '\n';
  if (diag) cx.out << "diagonalizable: " << (*diag ? "yes" : "no") << '\n';
  if (split)
    cx.out << "spectrum: " << real_roots << " distinct real roots; eigenvalue 1 x" << split->a << ", -1 x" << split->b
           << "; remainder " << split->remainder.str() << '\n';
  return ok;
}

int cmd_blocks(const Context& cx, int m, int n, int d, bool materialize) {
  BlockDecomposition bd = assemble_blocks(m, n, d, materialize);
  if (cx.format == Format::json) {
    json blocks = json::array();
    for (const auto& b : bd.blocks) {
      json e{{"pair", pair_json(b.pair)}, {"multiplicity", b.multiplicity.get_str()},
             {"dim", count_tables(b.pair.sigma, b.pair.pi).get_str()}};
      if (b.matrix) e["matrix"] = matrix_to_json(b.matrix->entries);
      blocks.push_back(e);
    }
    cx.emit_json({{"m", m}, {"n", n}, {"d", d}, {"n0", bd.n0.get_str()}, {"blocks", blocks},
                  {"total_dimension", bd.total_dimension().get_str()}});
    return ok;
  }
  if (cx.format == Format::csv) {
    cx.out << "sigma,pi,multiplicity,dim\n";
    cx.out << "0,0," << bd.n0.get_str() << ",1\n";
    for (const auto& b : bd.blocks)
      cx.out << b.pair.sigma.str() << ',' << b.pair.pi.str() << ',' << b.multiplicity.get_str() << ','
             << count_tables(b.pair.sigma, b.pair.pi).get_str() << '\n';
    return ok;
  }
  cx.out << "RSK_{" << m << "," << n << "," << d << "}: identity x" << bd.n0.get_str() << '\n';
  for (const auto& b : bd.blocks)
    cx.out << "  RSK" << b.pair.str() << " (dim " << count_tables(b.pair.sigma, b.pair.pi).get_str() << ") x"
           << b.multiplicity.get_str() << '\n';
  cx.out << "total dimension " << bd.total_dimension().get_str() << '\n';
  return ok;
}

using Fields = std::vector<std::pair<std::string, int>>;

int emit_scalar(const Context& cx, const std::string& key, const std::string& value, const Fields& args) {
  if (cx.format == Format::json) {
    json payload = json::object();
    for (const auto& [k, v] : args) payload[k] = v;
    payload[key] = value;
    cx.emit_json(payload);
  } else if (cx.format == Format::csv) {
    for (const auto& [k, v] : args) cx.out << k << ',';
    cx.out << key << '\n';
    for (const auto& [k, v] : args) cx.out << v << ',';
    cx.out << value << '\n';
  } else {
    cx.out << value << '\n';
  }
  return ok;
}

// Degrees printed per row of the m = n grids, as far as each row was computed.
int row_cap(int m) {
  static const int caps[] = {0, 9, 9, 7, 5, 4};
  return m >= 1 && m <= 5 ? caps[m] : 4;
}

int cmd_tables(const Context& cx, const std::string& which, int max_m, int max_d) {
  if (which == "det" || which == "trace" || which == "trace-inv") {
    std::vector<std::vector<std::string>> grid;
    for (int m = 1; m <= max_m; ++m) {
      std::vector<std::string> row;
      for (int d = 1; d <= std::min(max_d, row_cap(m)); ++d) {
        if (which == "det")
          row.push_back(std::to_string(det_rsk(m, m, d)));
        else
          row.push_back(trace_rsk(m, m, d, which == "trace-inv").get_str());
      }
      grid.push_back(row);
    }
    if (cx.format == Format::json) {
      json rows = json::array();
      for (int m = 1; m <= max_m; ++m) rows.push_back({{"m", m}, {"values", grid[m - 1]}});
      cx.emit_json({{"which", which}, {"rows", rows}});
    } else if (cx.format == Format::csv) {
      cx.out << "m,d,value\n";
      for (int m = 1; m <= max_m; ++m)
        for (std::size_t d = 0; d < grid[m - 1].size(); ++d) cx.out << m << ',' << d + 1 << ',' << grid[m - 1][d] << '\n';
    } else {
      std::size_t w = 2;
      for (const auto& r : grid)
        for (const auto& v : r) w = std::max(w, v.size());
      cx.out << std::setw(4) << std::left << "m\\d" << std::right;
      for (int d = 1; d <= max_d; ++d) cx.out << ' ' << std::setw(static_cast<int>(w)) << d;
      cx.out << '\n';
      for (int m = 1; m <= max_m; ++m) {
        cx.out << std::setw(4) << std::left << m << std::right;
        for (const auto& v : grid[m - 1]) cx.out << ' ' << std::setw(static_cast<int>(w)) << v;
        cx.out << '\n';
      }
    }
    return ok;
  }
  int degree = which == "reduced-d3" ? 3 : which == "reduced-d4" ? 4 : which == "reduced-d5" ? 5 : 0;
  if (!degree) fail(ErrorKind::invalid_argument, "unknown table '" + which + "'");
  json rows = json::array();
  if (cx.format == Format::csv) cx.out << "sigma,pi,det,trace,charpoly\n";
  for (const auto& p : enumerate_reduced_pairs(degree, 3, 3)) {
    if (p.degree() != degree || p.pi.length() != 3) continue;
    IntMatrix m = build_matrix(p).entries;
    BigInt dt = det(m), tr = trace(m);
    IntPoly ch = char_poly(m);
    if (cx.format == Format::json)
      rows.push_back({{"pair", pair_json(p)}, {"det", dt.get_str()}, {"trace", tr.get_str()}, {"charpoly", poly_to_json(ch)},
                      {"factored", factored(ch)}});
    else if (cx.format == Format::csv)
      cx.out << p.sigma.str() << ',' << p.pi.str() << ',' << dt.get_str() << ',' << tr.get_str() << ",\"" << factored(ch)
             << "\"\n";
    else
      cx.out << std::left << std::setw(5) << p.sigma.str() << std::setw(5) << p.pi.str() << std::right << std::setw(3)
             << dt.get_str() << std::setw(4) << tr.get_str() << "  " << factored(ch) << '\n';
  }
  if (cx.format == Format::json) cx.emit_json({{"which", which}, {"rows", rows}});
  return ok;
}

int cmd_verify(const Context& cx, const std::string& suite) {
  std::vector<std::string> names = suite.empty() ? suite_names() : std::vector<std::string>{suite};
  bool all = true;
  json results = json::array();
  for (const auto& name : names)
    for (const auto& r : run_suite(name)) {
      all = all && r.pass;
      if (cx.format == Format::json)
        results.push_back({{"suite", r.suite}, {"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      else if (cx.format == Format::csv)
        cx.out << r.suite << ",\"" << r.name << "\"," << (r.pass ? "pass" : "fail") << '\n';
      else
        cx.out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.pass ? "" : " (" + r.detail + ")")
               << '\n';
    }
  if (cx.format == Format::json) cx.emit_json({{"all_pass", all}, {"results", results}});
  return all ? ok : verification_failed;
}

int default_workers() {
  if (const char* s = std::getenv("RSKOP_WORKERS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"RSK as a linear operator on weight spaces, in exact arithmetic", "rskop"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  std::size_t max_basis = 0;
  app.add_option("--max-basis", max_basis, "Largest basis to enumerate (default from RSKOP_MAX_BASIS or 2000000)");

  Context cx{Format::text, in, out, err, ""};
  std::function<int()> action;

  std::vector<std::string> apply_args;
  bool apply_inverse = false;
  auto* apply = app.add_subcommand("apply", "RSK of a matrix, or with --inverse the matrix of a tableau pair");
  apply->add_option("args", apply_args, "Matrix literal, or P and Q with --inverse ('-' reads stdin)")->required();
  apply->add_flag("--inverse", apply_inverse);
  apply->callback([&] { action = [&] { return cmd_apply(cx, apply_args, apply_inverse); }; });

  std::string ms, mp;
  MatrixFlags mf;
  auto* matrix = app.add_subcommand("matrix", "Matrix of RSK on the weight space of (sigma, pi)");
  matrix->add_option("sigma", ms)->required();
  matrix->add_option("pi", mp)->required();
  matrix->add_flag("--inverse", mf.inverse);
  matrix->add_flag("--charpoly", mf.charpoly);
  matrix->add_flag("--minpoly", mf.minpoly);
  matrix->add_flag("--diag", mf.diag);
  matrix->add_flag("--spectrum", mf.spectrum);
  matrix->callback([&] { action = [&] { return cmd_matrix(cx, ms, mp, mf); }; });

  int m = 0, n = 0, d = 0;
  auto add_mnd = [&](CLI::App* sub) {
    sub->add_option("m", m)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("d", d)->required()->check(CLI::NonNegativeNumber);
  };

  bool materialize = false;
  auto* blocks = app.add_subcommand("blocks", "Block decomposition of RSK_{m,n,d}");
  add_mnd(blocks);
  blocks->add_flag("--materialize", materialize, "Build every block matrix");
  blocks->callback([&] { action = [&] { return cmd_blocks(cx, m, n, d, materialize); }; });

  bool direct = false, inverse = false;
  auto* detc = app.add_subcommand("det", "Determinant of RSK_{m,n,d}");
  add_mnd(detc);
  detc->add_flag("--direct", direct, "Multiply the determinants of all weight spaces");
  detc->callback([&] {
    action = [&] {
      int v = direct ? det_rsk_direct(m, n, d) : det_rsk(m, n, d);
      return emit_scalar(cx, "det", std::to_string(v), {{"m", m}, {"n", n}, {"d", d}});
    };
  });

  auto* tracec = app.add_subcommand("trace", "Trace of RSK_{m,n,d} or its inverse");
  add_mnd(tracec);
  tracec->add_flag("--direct", direct, "Sum the traces of all weight spaces");
  tracec->add_flag("--inverse", inverse, "Trace of the inverse operator");
  tracec->callback([&] {
    action = [&] {
      BigInt v = direct ? trace_rsk_direct(m, n, d, inverse) : trace_rsk(m, n, d, inverse);
      return emit_scalar(cx, inverse ? "trace_inverse" : "trace", v.get_str(), {{"m", m}, {"n", n}, {"d", d}});
    };
  });

  int workers = default_workers();
  auto* tperm = app.add_subcommand("trace-perm", "Trace of RSK on the permutation weight space 1^d");
  tperm->add_option("d", d)->required()->check(CLI::NonNegativeNumber);
  tperm->add_option("--workers", workers, "Worker threads (default from RSKOP_WORKERS or 1)")->check(CLI::PositiveNumber);
  tperm->callback([&] {
    action = [&] { return emit_scalar(cx, "trace", std::to_string(trace_perm(d, workers)), {{"d", d}}); };
  });

  auto* cd = app.add_subcommand("cd", "Number of permutation tables with zero diagonal entry");
  cd->add_option("d", d)->required()->check(CLI::NonNegativeNumber);
  cd->add_option("--workers", workers, "Worker threads (default from RSKOP_WORKERS or 1)")->check(CLI::PositiveNumber);
  cd->callback([&] {
    action = [&] { return emit_scalar(cx, "count", std::to_string(count_Cd(d, workers)), {{"d", d}}); };
  });

  bool cross_check = false;
  auto* classify = app.add_subcommand("classify", "Diagonalizability of RSK_{m,n,d}");
  add_mnd(classify);
  classify->add_flag("--cross-check", cross_check, "Also test every block's minimal polynomial");
  classify->callback([&] {
    action = [&] {
      ClassificationResult r = classify_diagonalizable(m, n, d);
      std::optional<bool> blocks_ok;
      if (cross_check) {
        blocks_ok = true;
        for (const auto& b : block_multiplicities(m, n, d).blocks)
          if (!is_diagonalizable(build_matrix(b.pair).entries)) blocks_ok = false;
      }
      if (cx.format == Format::json) {
        json payload{{"m", m}, {"n", n}, {"d", d}, {"diagonalizable", r.diagonalizable}, {"dynkin", r.dynkin_label}, {"rule", r.rule}};
        if (blocks_ok) payload["blocks_diagonalizable"] = *blocks_ok;
        cx.emit_json(payload);
      } else if (cx.format == Format::csv) {
        cx.out << "m,n,d,diagonalizable,dynkin\n" << m << ',' << n << ',' << d << ',' << (r.diagonalizable ? "yes" : "no") << ','
               << r.dynkin_label << '\n';
      } else {
        cx.out << (r.diagonalizable ? "diagonalizable, " : "not diagonalizable, ") << r.dynkin_label << '\n'
               << "rule: " << r.rule << '\n';
        if (blocks_ok) cx.out << "blocks: " << (*blocks_ok ? "all diagonalizable" : "some block is not diagonalizable") << '\n';
      }
      if (blocks_ok && *blocks_ok != r.diagonalizable) return static_cast<int>(verification_failed);
      return static_cast<int>(ok);
    };
  });

  std::string rs, rp;
  auto* reducec = app.add_subcommand("reduce", "Normalize and reduce a weight pair");
  reducec->add_option("sigma", rs)->required();
  reducec->add_option("pi", rp)->required();
  reducec->callback([&] {
    action = [&] {
      Normalized nz = normalize({parse_weight(rs), parse_weight(rp)});
      ReductionRecord rec = reduce(nz.pair);
      if (cx.format == Format::json) {
        cx.emit_json({{"normalized", pair_json(nz.pair)}, {"transposed", nz.transposed}, {"reduced", pair_json(rec.reduced)},
                      {"divisor", rec.divisor.to_rows()}, {"divisor_monomial", divisor_text(rec.divisor)}});
      } else if (cx.format == Format::csv) {
        cx.out << "sigma,pi,transposed,divisor\n" << rec.reduced.sigma.str() << ',' << rec.reduced.pi.str() << ','
               << (nz.transposed ? "yes" : "no") << ',' << divisor_text(rec.divisor) << '\n';
      } else {
        cx.out << "normalized " << nz.pair.str() << (nz.transposed ? " (transposed)" : "") << '\n'
               << "reduced " << rec.reduced.str() << '\n'
               << "divisor " << divisor_text(rec.divisor) << '\n';
      }
      return static_cast<int>(ok);
    };
  });

  std::string which;
  int max_m = 5, max_d = 9;
  auto* tables = app.add_subcommand("tables", "Regenerate the determinant, trace and reduced-pair tables");
  tables->add_option("--which", which)
      ->required()
      ->check(CLI::IsMember({"det", "trace", "trace-inv", "reduced-d3", "reduced-d4", "reduced-d5"}));
  tables->add_option("--max-m", max_m)->check(CLI::Range(1, 8));
  tables->add_option("--max-d", max_d)->check(CLI::Range(1, 12));
  tables->callback([&] { action = [&] { return cmd_tables(cx, which, max_m, max_d); }; });

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", suite, "One suite; all suites when omitted");
  verify->callback([&] { action = [&] { return cmd_verify(cx, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_input;
  }
  cx.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  for (auto* sub : app.get_subcommands()) cx.command = sub->get_name();
  if (max_basis > 0) default_limits().max_basis = max_basis;
  try {
    return action();
  } catch (const Error& e) {
    if (cx.format == Format::json)
      err << json{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}}.dump() << '\n';
    else
      err << "error (" << kind_name(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return internal_fault;
  }
}

}  // namespace rskop::cli
