#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace teleo {

/// A named, nonempty set of distinct element names.
struct BaseSet {
  std::string name;
  std::vector<std::string> elements;

  friend bool operator==(const BaseSet&, const BaseSet&) = default;
};

/// Finite product of base sets. The empty product is the one-element unit
/// set "1" = {*}. Products concatenate factors, so they are strictly
/// associative and unital. Elements are indexed in mixed radix, first
/// factor most significant.
struct FinSet {
  std::vector<BaseSet> factors;

  std::size_t size() const;
  std::string name() const;
  std::string element_name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& element) const;
  std::vector<std::size_t> digits(std::size_t i) const;
  std::size_t from_digits(const std::vector<std::size_t>& digits) const;

  friend bool operator==(const FinSet&, const FinSet&) = default;
};

/// Throws invalid_input on an empty set or repeated element names.
FinSet make_set(std::string name, std::vector<std::string> elements);
FinSet unit_set();
FinSet product(const FinSet& a, const FinSet& b);
/// n-fold product of a with itself; a^0 is the unit.
FinSet power(const FinSet& a, std::size_t n);

/// Index of a pair (i in a, j in b) in product(a, b).
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t size_b) {
  return i * size_b + j;
}

using Rational = boost::rational<long long>;

/// Accepts "n", "n/d", "-n/d". Throws invalid_input.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace teleo
