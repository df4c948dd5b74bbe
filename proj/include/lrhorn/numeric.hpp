#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lrhorn {

// Exact arithmetic everywhere: coefficient counts and cone tests must never
// saturate or round.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::size_t to_size(const Int& n) {
  if (n < 0) throw std::invalid_argument("expected a nonnegative integer");
  if (n > std::numeric_limits<std::size_t>::max())
    throw std::invalid_argument("integer too large for an index");
  return n.convert_to<std::size_t>();
}

inline Int parse_int(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size())
    throw std::invalid_argument("empty integer literal");
  for (std::size_t p = pos; p < text.size(); ++p)
    if (!std::isdigit(static_cast<unsigned char>(text[p])))
      throw std::invalid_argument("bad integer literal: '" + std::string(text) + "'");
  return Int(std::string(text));
}

/// Accepts "p" or "p/q" with q > 0 after sign normalization.
inline Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int num = parse_int(text.substr(0, slash));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rat(num, den);
}

/// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
inline std::string rational_to_string(const Rat& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Splits "a,b,c" on commas; rejects empty fields.
inline std::vector<std::string> split_csv(std::string_view text) {
  std::vector<std::string> fields;
  if (text.empty()) return fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    if (field.empty()) throw std::invalid_argument("empty field in list");
    fields.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace lrhorn
