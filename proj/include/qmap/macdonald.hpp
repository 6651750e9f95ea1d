#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmap/partitions.hpp"
#include "qmap/series.hpp"

namespace qmap {

/// A symmetric function written in the power-sum basis: p_mu -> coefficient.
/// Degrees may be mixed.
template <ExactField F>
using PowerSum = std::map<Partition, F>;

/// Union of parts: p_a p_b = p_{a u b}.
Partition merge_parts(const Partition& a, const Partition& b);

template <ExactField F>
void add_to(PowerSum<F>& f, const Partition& mu, const F& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.try_emplace(mu, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) f.erase(it);
  }
}

template <ExactField F>
PowerSum<F> psum_mul(const PowerSum<F>& a, const PowerSum<F>& b) {
  PowerSum<F> r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(r, merge_parts(ma, mb), ca * cb);
  return r;
}

/// <p_mu, p_mu> = prod_n n^{m_n} m_n! * prod_i (1 - q^{mu_i})/(1 - hbar^{mu_i}).
template <ExactField F>
F pnorm(const Scalars<F>& s, const Partition& mu);

/// The (q, hbar) inner product, diagonal on power sums.
template <ExactField F>
F inner_product(const Scalars<F>& s, const PowerSum<F>& f, const PowerSum<F>& g);

/// Coefficient of m_lambda in p_mu, i.e. the number of maps from the parts of
/// mu to the rows of lambda whose fibre sums are the rows.
long p_to_m(const Partition& mu, const Partition& lambda);

/// Macdonald polynomials of every degree up to `max_degree`, computed by
/// Gram-Schmidt on the monomial basis in increasing lexicographic order.
template <ExactField F>
struct MacdonaldBasis {
  int max_degree = 0;
  /// Monomial functions in power sums.
  std::map<Partition, PowerSum<F>> monomial;
  /// M_lambda as m-coefficients u_{lambda mu}.
  std::map<Partition, std::map<Partition, F>> in_monomial;
  /// M_lambda in power sums.
  std::map<Partition, PowerSum<F>> in_power_sum;
  std::map<Partition, F> norm2;

  /// Coefficients of f (homogeneous pieces up to max_degree) in the M basis,
  /// read off by orthogonality.
  std::map<Partition, F> expand(const Scalars<F>& s, const PowerSum<F>& f) const;
};

/// Throws DegenerateSpecialization if a norm vanishes at this (hbar, q).
template <ExactField F>
MacdonaldBasis<F> macdonald_basis(const Scalars<F>& s, int max_degree);

/// Pieri coefficient c_{mu/lambda} from the closed double product. Throws
/// NotInterlacing unless mu > lambda.
template <ExactField F>
F pieri_c(const Scalars<F>& s, const Partition& mu, const Partition& lambda);

/// Adjoint Pieri coefficient d_{lambda/mu} from its closed form. Throws
/// NotInterlacing unless mu < lambda.
template <ExactField F>
F pieri_d(const Scalars<F>& s, const Partition& lambda, const Partition& mu);

/// d_{lambda/mu} as ||M_lambda||^2 / ||M_mu||^2 * c_{lambda/mu}.
template <ExactField F>
F pieri_d_by_norms(const Scalars<F>& s, const MacdonaldBasis<F>& b, const Partition& lambda,
                   const Partition& mu);

/// Gamma_+(1) straight from its definition: multiplication by
/// exp(sum_n (1 - hbar^n)/(1 - q^n) p_n / n), kept up to `max_degree`.
template <ExactField F>
PowerSum<F> gamma_plus_exp(const Scalars<F>& s, const PowerSum<F>& f, int max_degree);

/// Gamma_-(1) from its definition: the shift p_n -> p_n + 1.
template <ExactField F>
PowerSum<F> gamma_minus_shift(const PowerSum<F>& f);

/// sum_mu c_mu M_mu with series coefficients in the z variables.
template <ExactField F>
class FockVector {
 public:
  explicit FockVector(int cap) : cap_(cap) {}
  static FockVector basis(const Partition& mu, int cap) {
    FockVector v(cap);
    v.add(mu, TruncatedSeries<F>::one(cap));
    return v;
  }
  static FockVector vacuum(int cap) { return basis(Partition{}, cap); }

  int cap() const { return cap_; }
  const std::map<Partition, TruncatedSeries<F>>& terms() const { return terms_; }

  TruncatedSeries<F> coeff(const Partition& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? TruncatedSeries<F>(cap_) : it->second;
  }

  void add(const Partition& mu, const TruncatedSeries<F>& c) {
    if (c.size() == 0) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (it->second.size() == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  int cap_;
  std::map<Partition, TruncatedSeries<F>> terms_;
};

/// Gamma_+(w): M_lambda -> sum_{mu > lambda} c_{mu/lambda} w^{|mu|-|lambda|} M_mu,
/// keeping |mu| <= max_size.
template <ExactField F>
FockVector<F> gamma_plus(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& w,
                         int max_size);

/// Gamma_-(z) with u standing for 1/z:
/// M_lambda -> sum_{mu < lambda} d_{lambda/mu} u^{|lambda|-|mu|} M_mu.
template <ExactField F>
FockVector<F> gamma_minus(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& u);

/// m^L: M_mu -> m^{|mu|} M_mu.
template <ExactField F>
FockVector<F> z_L(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& m);

/// M_empty coefficient of Gamma_-(1) Lambda_lo ... Lambda_hi M_empty with
/// Lambda_i = zhat_i^L Gamma_{tau(i)}(1).
template <ExactField F>
TruncatedSeries<F> matrix_element(const Scalars<F>& s, const Partition& lambda, int cap);

struct CommutationResult {
  std::size_t compared = 0;           ///< (partition, monomial) pairs compared
  int max_order = 0;                  ///< highest power of w/z seen among them
  std::optional<std::string> mismatch;
};

/// Applies Gamma_-(z) Gamma_+(w) and the scalar-times-reversed side to M_start
/// in the variables w = z_0 and 1/z = z_1, exact through (w/z)^order.
template <ExactField F>
CommutationResult commutation_check(const Scalars<F>& s, const Partition& start, int order);

}  // namespace qmap
