#include "teleo/finset.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "teleo/error.hpp"

namespace teleo {

std::size_t FinSet::size() const {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.elements.size();
  return n;
}

std::string FinSet::name() const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "×";
    out += factors[i].name;
  }
  return out;
}

std::vector<std::size_t> FinSet::digits(std::size_t i) const {
  std::vector<std::size_t> out(factors.size());
  for (std::size_t k = factors.size(); k-- > 0;) {
    auto radix = factors[k].elements.size();
    out[k] = i % radix;
    i /= radix;
  }
  return out;
}

std::size_t FinSet::from_digits(const std::vector<std::size_t>& d) const {
  std::size_t i = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) i = i * factors[k].elements.size() + d[k];
  return i;
}

std::string FinSet::element_name(std::size_t i) const {
  if (factors.empty()) return "*";
  auto d = digits(i);
  if (factors.size() == 1) return factors[0].elements[d[0]];
  std::string out = "(";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += ",";
    out += factors[k].elements[d[k]];
  }
  return out + ")";
}

std::optional<std::size_t> FinSet::index_of(const std::string& element) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (element_name(i) == element) return i;
  }
  return std::nullopt;
}

FinSet make_set(std::string name, std::vector<std::string> elements) {
  if (elements.empty()) throw Error(ErrorCode::invalid_input, "set '" + name + "' is empty");
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) {
      throw Error(ErrorCode::invalid_input, "set '" + name + "' repeats element '" + e + "'");
    }
  }
  return FinSet{{BaseSet{std::move(name), std::move(elements)}}};
}

FinSet unit_set() { return FinSet{}; }

FinSet product(const FinSet& a, const FinSet& b) {
  FinSet out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

FinSet power(const FinSet& a, std::size_t n) {
  FinSet out;
  for (std::size_t i = 0; i < n; ++i) out = product(out, a);
  return out;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::invalid_input, "'" + text + "' is not a rational number");
  };
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail();
    return v;
  };
  std::string_view view(text);
  if (slash == std::string::npos) return Rational(parse_int(view));
  auto num = parse_int(view.substr(0, slash));
  auto den = parse_int(view.substr(slash + 1));
  if (den == 0) fail();
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace teleo
