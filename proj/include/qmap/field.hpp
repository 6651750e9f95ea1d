#pragma once

#include <gmpxx.h>

#include <concepts>
#include <map>
#include <string>
#include <utility>

#include "qmap/errors.hpp"
#include "qmap/ratfunc.hpp"
#include "qmap/rational.hpp"

namespace qmap {

/// An exact scalar field usable as a coefficient ring.
template <class F>
concept ExactField = std::regular<F> && requires(const F a, const F b, const mpq_class& r) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { F::from_rational(r) } -> std::convertible_to<F>;
  F(1);
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RatFunc>);

/// The two torus parameters hbar and q as elements of the field, with a
/// cache of the monomials hbar^a q^b the Pochhammer code asks for.
///
/// Not thread-safe: each worker needs its own instance.
template <ExactField F>
class Scalars {
 public:
  Scalars(F hbar, F q) : hbar_(std::move(hbar)), q_(std::move(q)) {
    if (hbar_.is_zero() || q_.is_zero()) throw ConfigError("hbar and q must be nonzero");
  }

  const F& hbar() const { return hbar_; }
  const F& q() const { return q_; }

  /// hbar^a q^b.
  const F& mono(int a, int b) const {
    const auto key = std::make_pair(a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    F v = pow(hbar_, a) * pow(q_, b);
    return cache_.emplace(key, std::move(v)).first->second;
  }
  /// (hbar/q)^k.
  const F& hq(int k) const { return mono(k, -k); }

  static F pow(const F& x, int e) {
    F r(1);
    F base = e < 0 ? F(1) / x : x;
    for (int k = e < 0 ? -e : e; k > 0; k >>= 1) {
      if (k & 1) r = r * base;
      if (k > 1) base = base * base;
    }
    return r;
  }

 private:
  F hbar_;
  F q_;
  mutable std::map<std::pair<int, int>, F> cache_;
};

inline Scalars<RatFunc> symbolic_scalars() { return {RatFunc::hbar(), RatFunc::q()}; }

}  // namespace qmap
