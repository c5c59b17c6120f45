#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rskop/error.hpp"
#include "rskop/linalg.hpp"
#include "rskop/table.hpp"
#include "rskop/tableau.hpp"
#include "rskop/weight.hpp"

namespace rskop::cli {

enum ExitCode { ok = 0, invalid_input = 2, capacity_exceeded = 3, verification_failed = 4, internal_fault = 5 };

int exit_code(ErrorKind kind);

// "232" or "2,3,2"; parentheses are ignored.
WeightVector parse_weight(const std::string& text);
// "0,3,2;1,2,0;2,0,2" or a matrix JSON object.
ContingencyTable parse_table(const std::string& text);
// Rows separated by ';', labels by ','.
Tableau parse_tableau(const std::string& text);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

// (t-1)^a(t+1)^b(rest), the rest printed expanded.
std::string factored(const IntPoly& p);

// Runs the command line; stdin is read for "-" arguments.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rskop::cli
