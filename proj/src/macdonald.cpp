#include "qmap/macdonald.hpp"

#include <algorithm>
#include <functional>

namespace qmap {

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

long p_to_m(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return 0;
  std::vector<int> room = lambda.parts();
  const auto& parts = mu.parts();
  std::function<long(std::size_t)> rec = [&](std::size_t k) -> long {
    if (k == parts.size()) return 1;
    long n = 0;
    for (auto& r : room) {
      if (r < parts[k]) continue;
      r -= parts[k];
      n += rec(k + 1);
      r += parts[k];
    }
    return n;
  };
  return rec(0);
}

namespace {

std::map<int, int> multiplicities(const Partition& mu) {
  std::map<int, int> m;
  for (int p : mu.parts()) ++m[p];
  return m;
}

template <ExactField F>
F factorial(int n) {
  F r(1);
  for (int k = 2; k <= n; ++k) r = r * F(k);
  return r;
}

// Inverse of a square matrix by Gauss-Jordan elimination.
template <ExactField F>
std::vector<std::vector<F>> inverse(std::vector<std::vector<F>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<F>> inv(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = F(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw Error("singular transition matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    const F d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] = a[c][k] / d;
      inv[c][k] = inv[c][k] / d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const F f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] = a[r][k] - f * a[c][k];
        inv[r][k] = inv[r][k] - f * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace

template <ExactField F>
F pnorm(const Scalars<F>& s, const Partition& mu) {
  F r(1);
  for (const auto& [n, m] : multiplicities(mu)) r = r * Scalars<F>::pow(F(n), m) * factorial<F>(m);
  for (int p : mu.parts()) r = r * (F(1) - s.mono(0, p)) / (F(1) - s.mono(p, 0));
  return r;
}

template <ExactField F>
F inner_product(const Scalars<F>& s, const PowerSum<F>& f, const PowerSum<F>& g) {
  F r(0);
  for (const auto& [mu, c] : f) {
    auto it = g.find(mu);
    if (it != g.end()) r = r + c * it->second * pnorm(s, mu);
  }
  return r;
}

template <ExactField F>
std::map<Partition, F> MacdonaldBasis<F>::expand(const Scalars<F>& s, const PowerSum<F>& f) const {
  std::map<Partition, F> out;
  for (const auto& [la, M] : in_power_sum) {
    const F c = inner_product(s, f, M) / norm2.at(la);
    if (!c.is_zero()) out.emplace(la, c);
  }
  return out;
}

template <ExactField F>
MacdonaldBasis<F> macdonald_basis(const Scalars<F>& s, int max_degree) {
  MacdonaldBasis<F> b;
  b.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    const auto parts = partitions_of(n);
    const std::size_t k = parts.size();
    std::vector<std::vector<F>> a(k, std::vector<F>(k, F(0)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = F(p_to_m(parts[i], parts[j]));
    // p = A m, so m = A^{-1} p.
    const auto ainv = inverse(a);
    for (std::size_t i = 0; i < k; ++i) {
      PowerSum<F> m;
      for (std::size_t j = 0; j < k; ++j) add_to(m, parts[j], ainv[i][j]);
      b.monomial.emplace(parts[i], std::move(m));
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto& la = parts[i];
      const auto& m = b.monomial.at(la);
      PowerSum<F> M = m;
      std::map<Partition, F> u{{la, F(1)}};
      for (std::size_t j = 0; j < i; ++j) {
        const auto& mu = parts[j];
        const F c = inner_product(s, m, b.in_power_sum.at(mu)) / b.norm2.at(mu);
        if (c.is_zero()) continue;
        for (const auto& [nu, x] : b.in_power_sum.at(mu)) add_to(M, nu, F(0) - c * x);
        for (const auto& [nu, x] : b.in_monomial.at(mu)) add_to(u, nu, F(0) - c * x);
      }
      const F nrm = inner_product(s, M, M);
      if (nrm.is_zero()) {
        throw DegenerateSpecialization("norm of M" + la.to_string() + " vanishes at hbar=" +
                                       s.hbar().to_string() + ", q=" + s.q().to_string());
      }
      b.norm2.emplace(la, nrm);
      b.in_power_sum.emplace(la, std::move(M));
      b.in_monomial.emplace(la, std::move(u));
    }
  }
  return b;
}

template <ExactField F>
F pieri_c(const Scalars<F>& s, const Partition& mu, const Partition& lambda) {
  if (!interlaces(mu, lambda)) {
    throw NotInterlacing(mu.to_string() + " does not interlace " + lambda.to_string() + " from above");
  }
  const int l = mu.length();
  PochProduct<F> p(s);
  for (int i = 1; i <= l; ++i) {
    for (int j = i; j <= l; ++j) {
      p.ratio({j - i + 1, 0}, {j - i, 1}, mu.part(i) - lambda.part(j));
      p.ratio({j - i, 1}, {j - i + 1, 0}, mu.part(i) - mu.part(j));
      if (i < j) {
        p.ratio({j - i, 0}, {j - i - 1, 1}, lambda.part(i) - mu.part(j));
        p.ratio({j - i - 1, 1}, {j - i, 0}, lambda.part(i) - lambda.part(j));
      }
    }
  }
  return p.value();
}

template <ExactField F>
F pieri_d(const Scalars<F>& s, const Partition& lambda, const Partition& mu) {
  if (!interlaces(lambda, mu)) {
    throw NotInterlacing(lambda.to_string() + " does not interlace " + mu.to_string() + " from above");
  }
  const int l = lambda.length();
  PochProduct<F> p(s);
  for (int i = 1; i <= mu.length(); ++i) p.ratio({l - i + 1, 0}, {l - i, 1}, mu.part(i));
  for (int i = 1; i <= l; ++i) p.ratio({l - i, 1}, {l - i + 1, 0}, lambda.part(i));
  for (int i = 1; i <= l; ++i) {
    for (int j = i; j <= l; ++j) {
      p.ratio({j - i + 1, 0}, {j - i, 1}, lambda.part(i) - mu.part(j));
      p.ratio({j - i, 1}, {j - i + 1, 0}, mu.part(i) - mu.part(j));
      if (i < j) {
        p.ratio({j - i - 1, 1}, {j - i, 0}, lambda.part(i) - lambda.part(j));
        p.ratio({j - i, 0}, {j - i - 1, 1}, mu.part(i) - lambda.part(j));
      }
    }
  }
  return p.value();
}

template <ExactField F>
F pieri_d_by_norms(const Scalars<F>& s, const MacdonaldBasis<F>& b, const Partition& lambda,
                   const Partition& mu) {
  return b.norm2.at(lambda) / b.norm2.at(mu) * pieri_c(s, lambda, mu);
}

template <ExactField F>
PowerSum<F> gamma_plus_exp(const Scalars<F>& s, const PowerSum<F>& f, int max_degree) {
  PowerSum<F> e;
  for (const auto& rho : partitions_up_to(max_degree)) {
    F c(1);
    for (const auto& [n, m] : multiplicities(rho)) {
      const F a = (F(1) - s.mono(n, 0)) / (F(1) - s.mono(0, n)) / F(n);
      c = c * Scalars<F>::pow(a, m) / factorial<F>(m);
    }
    add_to(e, rho, c);
  }
  PowerSum<F> r;
  for (const auto& [mu, c] : psum_mul(f, e))
    if (mu.size() <= max_degree) add_to(r, mu, c);
  return r;
}

template <ExactField F>
PowerSum<F> gamma_minus_shift(const PowerSum<F>& f) {
  PowerSum<F> r;
  for (const auto& [mu, c] : f) {
    const auto& parts = mu.parts();
    const std::size_t n = parts.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> kept;
      for (std::size_t k = 0; k < n; ++k)
        if (mask >> k & 1) kept.push_back(parts[k]);
      add_to(r, Partition(std::move(kept)), c);
    }
  }
  return r;
}

template <ExactField F>
FockVector<F> gamma_plus(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& w,
                         int max_size) {
  FockVector<F> out(v.cap());
  for (const auto& [la, c] : v.terms()) {
    if (la.size() > max_size) continue;
    for (const auto& mu : strips_above(la, max_size - la.size())) {
      out.add(mu, c.times(s, w.pow(mu.size() - la.size())).scaled(pieri_c(s, mu, la)));
    }
  }
  return out;
}

template <ExactField F>
FockVector<F> gamma_minus(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& u) {
  FockVector<F> out(v.cap());
  for (const auto& [la, c] : v.terms()) {
    for (const auto& mu : strips_below(la)) {
      out.add(mu, c.times(s, u.pow(la.size() - mu.size())).scaled(pieri_d(s, la, mu)));
    }
  }
  return out;
}

template <ExactField F>
FockVector<F> z_L(const Scalars<F>& s, const FockVector<F>& v, const ZMonomial& m) {
  FockVector<F> out(v.cap());
  for (const auto& [mu, c] : v.terms()) out.add(mu, c.times(s, m.pow(mu.size())));
  return out;
}

template <ExactField F>
TruncatedSeries<F> matrix_element(const Scalars<F>& s, const Partition& lambda, int cap) {
  auto v = FockVector<F>::vacuum(cap);
  if (!lambda.empty()) {
    const auto prof = column_profile(lambda);
    for (int i = prof.hi(); i >= prof.lo(); --i) {
      // A state above size cap picks up z_i^{size} next and is truncated away.
      v = tau(prof, i) == Slope::Plus ? gamma_plus(s, v, ZMonomial{}, cap)
                                      : gamma_minus(s, v, ZMonomial{});
      v = z_L(s, v, ZMonomial::var(i, sigma_hat(prof, i)));
    }
  }
  return gamma_minus(s, v, ZMonomial{}).coeff(Partition{});
}

template <ExactField F>
CommutationResult commutation_check(const Scalars<F>& s, const Partition& start, int order) {
  const int cap = 2 * order + start.size() + 2;
  const int max_size = cap + start.size();
  const auto w = ZMonomial::var(0);
  const auto u = ZMonomial::var(1);
  const auto v = FockVector<F>::basis(start, cap);

  const auto lhs = gamma_minus(s, gamma_plus(s, v, w, max_size), u);
  const auto swapped = gamma_plus(s, gamma_minus(s, v, u), w, max_size);
  const auto factor = qbinomial_series(s, ZMonomial{0, {{0, 1}, {1, 1}}}, cap);
  FockVector<F> rhs(cap);
  for (const auto& [mu, c] : swapped.terms()) rhs.add(mu, series_mul(factor, c));

  CommutationResult res;
  std::map<Partition, bool> keys;
  for (const auto& [mu, c] : lhs.terms()) keys[mu] = true;
  for (const auto& [mu, c] : rhs.terms()) keys[mu] = true;
  for (const auto& [mu, unused] : keys) {
    const auto a = lhs.coeff(mu);
    const auto b = rhs.coeff(mu);
    if (auto bad = first_mismatch(a, b)) {
      if (!res.mismatch) {
        res.mismatch = "M" + mu.to_string() + " at " + exps_to_string(*bad) + ": " +
                       a.coeff(*bad).to_string() + " vs " + b.coeff(*bad).to_string();
      }
    }
    for (const auto& [e, c] : a.terms()) {
      ++res.compared;
      for (const auto& [i, d] : e)
        if (i == 1) res.max_order = std::max(res.max_order, d);
    }
  }
  return res;
}

#define QMAP_INSTANTIATE_MACDONALD(F)                                                          \
  template F pnorm(const Scalars<F>&, const Partition&);                                       \
  template F inner_product(const Scalars<F>&, const PowerSum<F>&, const PowerSum<F>&);         \
  template struct MacdonaldBasis<F>;                                                           \
  template MacdonaldBasis<F> macdonald_basis(const Scalars<F>&, int);                          \
  template F pieri_c(const Scalars<F>&, const Partition&, const Partition&);                   \
  template F pieri_d(const Scalars<F>&, const Partition&, const Partition&);                   \
  template F pieri_d_by_norms(const Scalars<F>&, const MacdonaldBasis<F>&, const Partition&,   \
                              const Partition&);                                               \
  template PowerSum<F> gamma_plus_exp(const Scalars<F>&, const PowerSum<F>&, int);             \
  template PowerSum<F> gamma_minus_shift(const PowerSum<F>&);                                  \
  template FockVector<F> gamma_plus(const Scalars<F>&, const FockVector<F>&, const ZMonomial&, \
                                    int);                                                      \
  template FockVector<F> gamma_minus(const Scalars<F>&, const FockVector<F>&,                  \
                                     const ZMonomial&);                                        \
  template FockVector<F> z_L(const Scalars<F>&, const FockVector<F>&, const ZMonomial&);       \
  template TruncatedSeries<F> matrix_element(const Scalars<F>&, const Partition&, int);        \
  template CommutationResult commutation_check(const Scalars<F>&, const Partition&, int);

QMAP_INSTANTIATE_MACDONALD(Rational)
QMAP_INSTANTIATE_MACDONALD(RatFunc)

}  // namespace qmap
