#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace rskop {

// A weight (margin) vector. Entries may be zero; order matters.
struct WeightVector {
  std::vector<int> entries;

  WeightVector() = default;
  WeightVector(std::initializer_list<int> e) : entries(e) {}
  explicit WeightVector(std::vector<int> e) : entries(std::move(e)) {}

  int length() const { return static_cast<int>(entries.size()); }
  int degree() const;
  int max_entry() const;
  int operator[](int i) const { return entries[i]; }

  // "232" when every entry is a single digit, otherwise "2,13,2".
  std::string str() const;

  auto operator<=>(const WeightVector&) const = default;
};

struct WeightPair {
  WeightVector sigma;
  WeightVector pi;

  int degree() const { return sigma.degree(); }
  // Throws invalid_weight unless both are nonnegative with equal degree.
  void validate() const;
  WeightPair transposed() const { return {pi, sigma}; }
  std::string str() const { return "(" + sigma.str() + "," + pi.str() + ")"; }

  auto operator<=>(const WeightPair&) const = default;
};

// n copies of 1.
WeightVector ones(int n);

}  // namespace rskop
