#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmap/rational.hpp"

namespace qmap {

/// Laurent polynomial in (hbar, q) with rational coefficients. Exponent pairs
/// are (hbar, q); zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exp = std::pair<int, int>;
  using Terms = std::map<Exp, mpq_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(const mpq_class& c);
  static LaurentPoly monomial(int hbar_exp, int q_exp, const mpq_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly scaled(const mpq_class& c, int hbar_shift, int q_shift) const;

  /// Exact quotient if `d` divides this polynomial in Q[hbar^±1, q^±1].
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& d) const;

  Rational evaluate(const Rational& hbar, const Rational& q) const;
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void add_term(const Exp& e, const mpq_class& c);
  Terms terms_;
};

/// Exact rational function in (hbar, q): symbolic-mode coefficient field.
///
/// The denominator is kept as a product of normalized primitive factors
/// (integer content 1, minimal exponents 0, positive leading coefficient).
/// Binomials 1 - hbar^a q^b are split into cyclotomic pieces, so the
/// denominators produced by Pochhammer symbols have a unique factored form
/// and sums use an exact factor-wise LCM. Other divisors are kept as opaque
/// factors. Equality is decided by cross-multiplication.
class RatFunc {
 public:
  using Factors = std::map<LaurentPoly, int>;

  RatFunc() = default;
  RatFunc(long n) : num_(mpq_class(n)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFunc(LaurentPoly num) : num_(std::move(num)) {}

  static RatFunc from_rational(const mpq_class& r) { return RatFunc(LaurentPoly(r)); }
  static RatFunc hbar() { return RatFunc(LaurentPoly::monomial(1, 0)); }
  static RatFunc q() { return RatFunc(LaurentPoly::monomial(0, 1)); }

  const LaurentPoly& numerator() const { return num_; }
  const Factors& denominator_factors() const { return den_; }
  LaurentPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  Rational evaluate(const Rational& hbar, const Rational& q) const;
  std::string to_string() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b);

 private:
  void cancel();
  LaurentPoly num_;
  Factors den_;
};

namespace detail {

/// Writes `p` as c * hbar^a q^b * prod(factors) with each factor normalized.
struct Split {
  mpq_class constant;
  LaurentPoly::Exp shift;
  std::vector<LaurentPoly> factors;
};
Split split_factors(const LaurentPoly& p);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<mpz_class> cyclotomic(int n);

}  // namespace detail

}  // namespace qmap
