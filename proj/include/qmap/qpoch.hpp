#pragma once

#include <string>

#include "qmap/field.hpp"

namespace qmap {

/// Pochhammer argument of the form hbar^hbar_exp * q^q_exp.
struct QArg {
  int hbar_exp = 0;
  int q_exp = 0;

  QArg times_q(int k) const { return {hbar_exp, q_exp + k}; }
  std::string to_string() const {
    return "hbar^" + std::to_string(hbar_exp) + "*q^" + std::to_string(q_exp);
  }
  friend bool operator==(const QArg&, const QArg&) = default;
};

/// (x)_d = phi(x)/phi(x q^d): the finite product prod_{k<d}(1 - x q^k) for
/// d >= 0 and prod_{k=1..n} (1 - x q^-k)^-1 for d = -n < 0.
template <ExactField F>
F qpoch(const Scalars<F>& s, const F& x, int d) {
  F r(1);
  if (d >= 0) {
    for (int k = 0; k < d; ++k) r = r * (F(1) - x * s.mono(0, k));
    return r;
  }
  for (int k = 1; k <= -d; ++k) {
    const F f = F(1) - x * s.mono(0, -k);
    if (f.is_zero()) {
      throw PoleError("qpoch: factor 1 - x q^-" + std::to_string(k) + " vanishes in (" +
                      x.to_string() + ")_" + std::to_string(d));
    }
    r = r * f;
  }
  return F(1) / r;
}

template <ExactField F>
F qpoch(const Scalars<F>& s, QArg x, int d) {
  return qpoch(s, s.mono(x.hbar_exp, x.q_exp), d);
}

/// Accumulates a product of Pochhammer symbols and their inverses as a
/// numerator and a denominator of factors (1 - hbar^a q^b).
///
/// A vanishing factor in the numerator makes the whole product an exact
/// zero; the denominator is not inspected in that case. A vanishing
/// denominator factor with a nonzero numerator raises PoleError.
template <ExactField F>
class PochProduct {
 public:
  explicit PochProduct(const Scalars<F>& s) : s_(&s) {}

  /// Multiplies by (x)_d.
  PochProduct& times(QArg x, int d) { return apply(x, d, false); }
  /// Divides by (x)_d.
  PochProduct& over(QArg x, int d) { return apply(x, d, true); }
  /// Multiplies by (x)_d / (y)_d.
  PochProduct& ratio(QArg x, QArg y, int d) { return times(x, d).over(y, d); }
  PochProduct& times(const F& c) {
    if (!zero_) {
      if (c.is_zero()) {
        zero_ = true;
      } else {
        num_ = num_ * c;
      }
    }
    return *this;
  }

  bool is_zero() const { return zero_; }

  F value() const {
    if (zero_) return F(0);
    if (!pole_.empty()) throw PoleError("vanishing Pochhammer denominator: " + pole_);
    return num_ / den_;
  }

 private:
  PochProduct& apply(QArg x, int d, bool invert) {
    if (zero_ || d == 0) return *this;
    // Factors 1 - x q^k that land on top or bottom of the fraction.
    const bool top = (d > 0) != invert;
    const int lo = d > 0 ? 0 : d;
    const int hi = d > 0 ? d - 1 : -1;
    for (int k = lo; k <= hi; ++k) {
      const F f = F(1) - s_->mono(x.hbar_exp, x.q_exp + k);
      if (top) {
        if (f.is_zero()) {
          zero_ = true;
          return *this;
        }
        num_ = num_ * f;
      } else if (f.is_zero()) {
        if (pole_.empty()) pole_ = "(" + x.to_string() + ")_" + std::to_string(d);
      } else {
        den_ = den_ * f;
      }
    }
    return *this;
  }

  const Scalars<F>* s_;
  F num_{1};
  F den_{1};
  bool zero_ = false;
  std::string pole_;
};

}  // namespace qmap
