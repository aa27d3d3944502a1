#pragma once

// Polynomials with complex coefficients in the chart coordinates
// (x1, y1, x2, y2, t).
//
// Grammar accepted by parse_poly (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-') factor | primary ('^' uint)?
//   primary := number 'i'? | 'i' | variable | '(' expr ')'

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include "swcheck/scalar.hpp"

namespace swcheck {

inline constexpr int kChartDim = 5;
inline constexpr std::array<std::string_view, kChartDim> kChartVariables = {"x1", "y1", "x2", "y2", "t"};

using Exponents = std::array<int, kChartDim>;
using ChartPoint = std::array<double, kChartDim>;

/// Graded order: higher total degree first, then lexicographically larger
/// exponent tuples first.
struct GradedDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int k = 0; k < kChartDim; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db;
    return a > b;
  }
};

class PolyParseError : public std::runtime_error {
 public:
  PolyParseError(std::size_t position, const std::string& what)
      : std::runtime_error("position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PolyExpr {
 public:
  using TermMap = std::map<Exponents, Complex, GradedDescending>;

  PolyExpr() = default;
  PolyExpr(Complex c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  PolyExpr(double c) : PolyExpr(Complex(c)) {}  // NOLINT(google-explicit-constructor)

  static PolyExpr variable(int k) {
    if (k < 0 || k >= kChartDim) throw std::out_of_range("PolyExpr::variable: index out of range");
    Exponents e{};
    e[static_cast<std::size_t>(k)] = 1;
    PolyExpr p;
    p.add_term(e, 1.0);
    return p;
  }
  static PolyExpr monomial(const Exponents& e, Complex c = 1.0) {
    PolyExpr p;
    p.add_term(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// True iff every coefficient has zero imaginary part.
  bool is_real() const {
    for (const auto& [e, c] : terms_)
      if (c.imag() != 0.0) return false;
    return true;
  }

  /// Constant value if the polynomial has no variable dependence.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{}); }
  Complex constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Complex{} : it->second;
  }

  Complex evaluate(const ChartPoint& p) const {
    Complex sum = 0;
    for (const auto& [e, c] : terms_) {
      double m = 1.0;
      for (int k = 0; k < kChartDim; ++k)
        for (int n = 0; n < e[static_cast<std::size_t>(k)]; ++n) m *= p[static_cast<std::size_t>(k)];
      sum += c * m;
    }
    return sum;
  }

  PolyExpr derivative(int k) const {
    if (k < 0 || k >= kChartDim) throw std::out_of_range("PolyExpr::derivative: index out of range");
    PolyExpr r;
    for (const auto& [e, c] : terms_) {
      const int n = e[static_cast<std::size_t>(k)];
      if (n == 0) continue;
      Exponents d = e;
      d[static_cast<std::size_t>(k)] = n - 1;
      r.add_term(d, c * static_cast<double>(n));
    }
    return r;
  }

  PolyExpr& operator+=(const PolyExpr& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyExpr& operator-=(const PolyExpr& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  PolyExpr& operator*=(const PolyExpr& o) { return *this = *this * o; }

  friend PolyExpr operator+(PolyExpr a, const PolyExpr& b) { return a += b; }
  friend PolyExpr operator-(PolyExpr a, const PolyExpr& b) { return a -= b; }
  friend PolyExpr operator-(const PolyExpr& a) {
    PolyExpr r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
    PolyExpr r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t k = 0; k < kChartDim; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;

 private:
  void add_term(const Exponents& e, Complex c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }

  TermMap terms_;
};

// ---------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of negative zero
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline bool coefficient_is_negative(Complex c) {
  return c.imag() == 0.0 ? c.real() < 0.0 : (c.real() == 0.0 && c.imag() < 0.0);
}

/// Coefficient as it appears in front of a monomial, or alone for constants.
inline std::string format_coefficient(Complex c) {
  if (c.imag() == 0.0) return format_double(c.real());
  if (c.real() == 0.0) return c.imag() == 1.0 ? "i" : c.imag() == -1.0 ? "-i" : format_double(c.imag()) + "i";
  std::string s = "(" + format_double(c.real());
  s += c.imag() < 0.0 ? "-" : "+";
  s += format_double(std::abs(c.imag())) + "i)";
  return s;
}

inline std::string format_monomial(const Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < kChartDim; ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += kChartVariables[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

inline std::string format_term(const Exponents& e, Complex c) {
  const std::string mono = format_monomial(e);
  if (mono.empty()) return format_coefficient(c);
  if (c == Complex(1.0)) return mono;
  if (c == Complex(-1.0)) return "-" + mono;
  return format_coefficient(c) + "*" + mono;
}

}  // namespace detail

inline std::string to_string(const PolyExpr& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      s = detail::format_term(e, c);
      first = false;
    } else if (detail::coefficient_is_negative(c)) {
      s += " - " + detail::format_term(e, -c);
    } else {
      s += " + " + detail::format_term(e, c);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view src) : src_(src) {}

  PolyExpr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw PolyParseError(pos_, "empty expression");
    PolyExpr r = expr();
    skip_ws();
    if (pos_ != src_.size()) throw PolyParseError(pos_, std::string("unexpected character '") + src_[pos_] + "'");
    return r;
  }

 private:
  static constexpr int kMaxExponent = 64;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyExpr expr() {
    PolyExpr r = term();
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  PolyExpr term() {
    PolyExpr r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  PolyExpr factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    PolyExpr base = primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    int n = 0;
    const auto res = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), n);
    if (res.ec != std::errc{} || res.ptr == src_.data() + start)
      throw PolyParseError(start, "expected a non-negative integer exponent");
    if (n < 0 || n > kMaxExponent) throw PolyParseError(start, "exponent out of range");
    pos_ = static_cast<std::size_t>(res.ptr - src_.data());
    PolyExpr r(1.0);
    for (int k = 0; k < n; ++k) r = r * base;
    return r;
  }

  PolyExpr primary() {
    skip_ws();
    if (pos_ == src_.size()) throw PolyParseError(pos_, "unexpected end of expression");
    const char ch = src_[pos_];
    if (ch == '(') {
      ++pos_;
      PolyExpr r = expr();
      if (!accept(')')) throw PolyParseError(pos_, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return identifier();
    throw PolyParseError(pos_, std::string("unexpected character '") + ch + "'");
  }

  PolyExpr number() {
    const std::size_t start = pos_;
    double v = 0;
    const auto res = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v,
                                     std::chars_format::general);
    if (res.ec != std::errc{}) throw PolyParseError(start, "malformed number");
    if (!std::isfinite(v)) throw PolyParseError(start, "number out of range");
    pos_ = static_cast<std::size_t>(res.ptr - src_.data());
    if (pos_ < src_.size() && src_[pos_] == 'i') {
      ++pos_;
      if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
        throw PolyParseError(pos_, "expected '*' between factors");
      return PolyExpr(Complex(0.0, v));
    }
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
      throw PolyParseError(pos_, "expected '*' between factors");
    return PolyExpr(v);
  }

  PolyExpr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "i") return PolyExpr(Complex(0.0, 1.0));
    for (int k = 0; k < kChartDim; ++k)
      if (kChartVariables[static_cast<std::size_t>(k)] == name) return PolyExpr::variable(k);
    throw PolyParseError(start, "unknown variable '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PolyExpr parse_poly(std::string_view src) { return detail::PolyParser(src).parse(); }

inline std::ostream& operator<<(std::ostream& os, const PolyExpr& p) { return os << to_string(p); }

}  // namespace swcheck
