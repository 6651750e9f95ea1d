#pragma once

#include <doctest.h>

#include <array>
#include <vector>

#include "qmap/field.hpp"
#include "qmap/series.hpp"

namespace qmap::test {

inline std::vector<Scalars<Rational>> points() {
  return {Scalars<Rational>(Rational(2, 3), Rational(1, 5)),
          Scalars<Rational>(Rational(3, 7), Rational(2, 11)),
          Scalars<Rational>(Rational(5, 13), Rational(7, 17))};
}

/// One-variable series, coefficients indexed by degree.
template <class F>
std::vector<F> poly_mul(const std::vector<F>& a, const std::vector<F>& b, int cap) {
  std::vector<F> r(static_cast<std::size_t>(cap + 1), F(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(cap); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

/// prod_{i>=0} (1 - hbar c q^i t)/(1 - c q^i t) as exp(sum_n (1 - hbar^n)/(1 - q^n) c^n t^n / n).
template <class F>
std::vector<F> brute_qbinomial(const Scalars<F>& s, const F& c, int cap) {
  std::vector<F> log(static_cast<std::size_t>(cap + 1), F(0));
  for (int n = 1; n <= cap; ++n) {
    log[static_cast<std::size_t>(n)] = (F(1) - s.mono(n, 0)) / (F(1) - s.mono(0, n)) *
                                       Scalars<F>::pow(c, n) / F(n);
  }
  // f' = (log)' f, solved degree by degree.
  std::vector<F> f(static_cast<std::size_t>(cap + 1), F(0));
  f[0] = F(1);
  for (int d = 1; d <= cap; ++d) {
    F acc(0);
    for (int n = 1; n <= d; ++n) acc = acc + F(n) * log[static_cast<std::size_t>(n)] * f[static_cast<std::size_t>(d - n)];
    f[static_cast<std::size_t>(d)] = acc / F(d);
  }
  return f;
}

}  // namespace qmap::test

namespace doctest {
template <>
struct StringMaker<qmap::Rational> {
  static String convert(const qmap::Rational& r) { return r.to_string().c_str(); }
};
}  // namespace doctest
