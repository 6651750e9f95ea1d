#pragma once

#include "qmap/partitions.hpp"
#include "qmap/series.hpp"

namespace qmap {

struct VertexRequest {
  Partition lambda;
  int cap = 0;
};

/// Hook-product form: prod over boxes of prod_{i>=0} (1 - hbar z_box q^i)/(1 - z_box q^i).
template <ExactField F>
TruncatedSeries<F> zfun_product(const Scalars<F>& s, const VertexRequest& req);

/// Sum over interlacing tuples of alpha * prod beta * prod gamma * z^{|lambda^i|}.
template <ExactField F>
TruncatedSeries<F> zfun_sum(const Scalars<F>& s, const VertexRequest& req);

/// Unreduced lattice sum over every d_{i,j} >= 0. Terms outside the
/// interlacing region vanish through zero Pochhammer numerators.
template <ExactField F>
TruncatedSeries<F> zfun_raw_sum(const Scalars<F>& s, const VertexRequest& req);

/// Corner-column factor; `v0` is the height of column 0.
template <ExactField F>
F coeff_alpha(const Scalars<F>& s, const Partition& lambda0, int v0);

/// Coupling between column i and column i+1 of the profile `v`.
template <ExactField F>
F coeff_beta(const Scalars<F>& s, const Partition& a, const Partition& b, int i,
             const ColumnProfile& v);

/// Self-interaction of a column of height `vi`.
template <ExactField F>
F coeff_gamma(const Scalars<F>& s, const Partition& a, int vi);

/// gamma rewritten as delta * epsilon * prod_{j<=k} (hbar/q)^{a_j - a_k}.
template <ExactField F>
F coeff_gamma_rewritten(const Scalars<F>& s, const Partition& a, int vi);

/// beta with the pairs j <_{tau(i)} k flipped to positive Pochhammer index.
template <ExactField F>
F coeff_beta_rewritten(const Scalars<F>& s, const Partition& a, const Partition& b, int i,
                       const ColumnProfile& v);

}  // namespace qmap
