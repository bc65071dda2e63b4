#include "lexfirst/strings.hpp"

#include <algorithm>

#include "lexfirst/errors.hpp"

namespace lexfirst {

Coloring::Coloring(int k_, std::vector<std::uint8_t> d) : k(k_), digits(std::move(d)) {
  if (k < 2 || k > 10) throw UsageError("color count must be in [2,10], got " + std::to_string(k));
  for (auto c : digits) {
    if (c >= k) throw UsageError("color digit " + std::to_string(c) + " out of range for k=" + std::to_string(k));
  }
}

Coloring Coloring::parse(std::string_view text, int k) {
  std::vector<std::uint8_t> d;
  d.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw UsageError(std::string("not a color digit: '") + ch + "'");
    d.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Coloring(k, std::move(d));
}

std::string Coloring::str() const {
  std::string s;
  s.reserve(digits.size());
  for (auto c : digits) s.push_back(static_cast<char>('0' + c));
  return s;
}

TFAssignment::TFAssignment(std::vector<std::uint8_t> s) : symbols(std::move(s)) {
  for (auto c : symbols) {
    if (c != 1 && c != 2) throw UsageError("assignment symbols must be 1 or 2");
  }
}

TFAssignment TFAssignment::parse(std::string_view text) {
  std::vector<std::uint8_t> s;
  s.reserve(text.size());
  for (char ch : text) {
    if (ch != '1' && ch != '2') throw UsageError(std::string("not an assignment symbol: '") + ch + "'");
    s.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return TFAssignment(std::move(s));
}

TFAssignment TFAssignment::from_bools(const std::vector<bool>& values) {
  std::vector<std::uint8_t> s;
  s.reserve(values.size());
  for (bool v : values) s.push_back(v ? 1 : 2);
  return TFAssignment(std::move(s));
}

std::string TFAssignment::str() const {
  std::string s;
  for (auto c : symbols) s.push_back(static_cast<char>('0' + c));
  return s;
}

BitString::BitString(std::string symbols, std::string alphabet)
    : symbols_(std::move(symbols)), alphabet_(std::move(alphabet)) {
  if (alphabet_.empty() || !std::is_sorted(alphabet_.begin(), alphabet_.end()) ||
      std::adjacent_find(alphabet_.begin(), alphabet_.end()) != alphabet_.end()) {
    throw UsageError("alphabet must be nonempty, strictly ascending: \"" + alphabet_ + "\"");
  }
  for (char ch : symbols_) {
    if (alphabet_.find(ch) == std::string::npos) {
      throw UsageError(std::string("symbol '") + ch + "' not in alphabet \"" + alphabet_ + "\"");
    }
  }
}

namespace {

template <class Seq>
std::strong_ordering positional(const Seq& a, const Seq& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering lex_compare(const Coloring& a, const Coloring& b) {
  if (a.size() != b.size()) throw UsageError("lex_compare: length mismatch");
  if (a.k != b.k) throw UsageError("lex_compare: alphabet mismatch (different k)");
  return positional(a.digits, b.digits);
}

std::strong_ordering lex_compare(const TFAssignment& a, const TFAssignment& b) {
  if (a.size() != b.size()) throw UsageError("lex_compare: length mismatch");
  return positional(a.symbols, b.symbols);
}

std::strong_ordering shortlex_compare(const BitString& a, const BitString& b) {
  if (a.alphabet() != b.alphabet()) throw UsageError("shortlex_compare: alphabet mismatch");
  return shortlex_compare(std::string_view(a.symbols()), std::string_view(b.symbols()));
}

std::strong_ordering shortlex_compare(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return positional(a, b);
}

std::string power_of_two_string(std::size_t zeros) {
  std::string s(zeros + 1, '0');
  s[0] = '1';
  return s;
}

bool is_odd(std::string_view s) {
  if (s.empty()) return false;
  const char last = s.back();
  return ((last - '0') & 1) != 0;
}

std::uint64_t PolynomialBound::operator()(std::uint64_t s) const {
  std::uint64_t acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * s + *it;
  return acc;
}

PolynomialBound PolynomialBound::plus(std::uint64_t c) const {
  auto coeffs = coefficients;
  if (coeffs.empty()) coeffs.push_back(0);
  coeffs[0] += c;
  return PolynomialBound(std::move(coeffs));
}

std::string PolynomialBound::str() const {
  std::string out;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = coefficients[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(coefficients[i]);
    if (i >= 1) out += "s";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace lexfirst
