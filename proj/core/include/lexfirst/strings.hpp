#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lexfirst {

/// A k-coloring written as a digit string, one digit per vertex in vertex order.
struct Coloring {
  int k = 0;
  std::vector<std::uint8_t> digits;

  Coloring() = default;
  Coloring(int k_, std::vector<std::uint8_t> d);

  /// Parses "0123"; every digit must be < k.
  static Coloring parse(std::string_view text, int k);

  std::size_t size() const noexcept { return digits.size(); }
  std::uint8_t operator[](std::size_t i) const { return digits[i]; }
  std::string str() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Truth assignment over {1,2}: 1 = true, 2 = false.
struct TFAssignment {
  std::vector<std::uint8_t> symbols;

  TFAssignment() = default;
  explicit TFAssignment(std::vector<std::uint8_t> s);

  static TFAssignment parse(std::string_view text);
  static TFAssignment from_bools(const std::vector<bool>& values);

  std::size_t size() const noexcept { return symbols.size(); }
  /// 0-based variable index.
  bool is_true(std::size_t var) const { return symbols.at(var) == 1; }
  std::string str() const;

  friend bool operator==(const TFAssignment&, const TFAssignment&) = default;
};

/// A string over a declared, ascending alphabet of single-character symbols.
class BitString {
 public:
  BitString() : alphabet_("01") {}
  BitString(std::string symbols, std::string alphabet);

  const std::string& symbols() const noexcept { return symbols_; }
  const std::string& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::string symbols_;
  std::string alphabet_;
};

/// Positional comparison for equal-length strings.
std::strong_ordering lex_compare(const Coloring& a, const Coloring& b);
std::strong_ordering lex_compare(const TFAssignment& a, const TFAssignment& b);

/// Length first, then positional order. Alphabets must match.
std::strong_ordering shortlex_compare(const BitString& a, const BitString& b);

/// Shortlex on raw strings whose symbols are ordered by character code.
std::strong_ordering shortlex_compare(std::string_view a, std::string_view b);

/// "1" followed by `zeros` zeros: the 10^n coloring sentinel and bin(2^p).
std::string power_of_two_string(std::size_t zeros);

/// Parity of the integer value of the final symbol; the empty string is even.
bool is_odd(std::string_view s);

/// p(s) = sum c_i s^i with nonnegative integer coefficients.
struct PolynomialBound {
  std::vector<std::uint64_t> coefficients;

  PolynomialBound() = default;
  PolynomialBound(std::initializer_list<std::uint64_t> c) : coefficients(c) {}
  explicit PolynomialBound(std::vector<std::uint64_t> c) : coefficients(std::move(c)) {}

  static PolynomialBound constant(std::uint64_t c) { return PolynomialBound{c}; }
  /// s + c
  static PolynomialBound identity_plus(std::uint64_t c) { return PolynomialBound{c, 1}; }

  std::uint64_t operator()(std::uint64_t s) const;
  PolynomialBound plus(std::uint64_t c) const;
  std::string str() const;

  friend bool operator==(const PolynomialBound&, const PolynomialBound&) = default;
};

}  // namespace lexfirst
