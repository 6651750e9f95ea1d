#include "qmap/vertex.hpp"

#include <functional>

namespace qmap {

namespace {

template <ExactField F>
void alpha_into(PochProduct<F>& p, const Partition& a, int v0) {
  for (int j = 1; j <= v0; ++j) {
    p.ratio({v0 - j + 1, 0}, {v0 - j, 1}, a.part(j));
  }
}

template <ExactField F>
void beta_into(PochProduct<F>& p, const Partition& a, const Partition& b, int i,
               const ColumnProfile& v) {
  const int sg = sigma(v, i + 1);
  const int shift = i >= 0 ? 1 : 0;
  for (int j = 1; j <= v[i]; ++j) {
    for (int k = 1; k <= v[i + 1]; ++k) {
      const int e = j - k - sg;
      p.ratio({e + shift, 0}, {e + shift - 1, 1}, b.part(k) - a.part(j));
    }
  }
}

template <ExactField F>
void gamma_into(PochProduct<F>& p, const Partition& a, int vi) {
  for (int j = 1; j <= vi; ++j) {
    for (int k = 1; k <= vi; ++k) {
      p.ratio({j - k, 1}, {j - k + 1, 0}, a.part(k) - a.part(j));
    }
  }
}

}  // namespace

template <ExactField F>
F coeff_alpha(const Scalars<F>& s, const Partition& lambda0, int v0) {
  PochProduct<F> p(s);
  alpha_into(p, lambda0, v0);
  return p.value();
}

template <ExactField F>
F coeff_beta(const Scalars<F>& s, const Partition& a, const Partition& b, int i,
             const ColumnProfile& v) {
  PochProduct<F> p(s);
  beta_into(p, a, b, i, v);
  return p.value();
}

template <ExactField F>
F coeff_gamma(const Scalars<F>& s, const Partition& a, int vi) {
  PochProduct<F> p(s);
  gamma_into(p, a, vi);
  return p.value();
}

template <ExactField F>
F coeff_gamma_rewritten(const Scalars<F>& s, const Partition& a, int vi) {
  PochProduct<F> delta(s);
  for (int k = 1; k <= vi; ++k) {
    for (int j = k + 1; j <= vi; ++j) delta.ratio({j - k, 1}, {j - k + 1, 0}, a.part(k) - a.part(j));
  }
  PochProduct<F> eps(s);
  int hq = 0;
  for (int j = 1; j <= vi; ++j) {
    for (int k = j; k <= vi; ++k) {
      eps.ratio({k - j - 1, 1}, {k - j, 0}, a.part(j) - a.part(k));
      hq += a.part(j) - a.part(k);
    }
  }
  return delta.value() * eps.value() * s.hq(hq);
}

template <ExactField F>
F coeff_beta_rewritten(const Scalars<F>& s, const Partition& a, const Partition& b, int i,
                       const ColumnProfile& v) {
  const int sg = sigma(v, i + 1);
  const int shift = i >= 0 ? 1 : 0;
  const bool plus = tau(v, i) == Slope::Plus;
  PochProduct<F> p(s);
  int hq = 0;
  for (int j = 1; j <= v[i]; ++j) {
    for (int k = 1; k <= v[i + 1]; ++k) {
      const bool flipped = plus ? j <= k : j < k;
      if (!flipped) {
        const int e = j - k - sg;
        p.ratio({e + shift, 0}, {e + shift - 1, 1}, b.part(k) - a.part(j));
      } else {
        // (hbar x)_{-n}/(q x)_{-n} = (q/hbar)^n (1/x)_n / ((q/hbar)/x)_n
        const int m = a.part(j) - b.part(k);
        const int e = k - j + sg + 1 - shift;
        p.ratio({e, 0}, {e - 1, 1}, m);
        hq -= m;
      }
    }
  }
  return p.value() * s.hq(hq);
}

template <ExactField F>
TruncatedSeries<F> zfun_product(const Scalars<F>& s, const VertexRequest& req) {
  return pleth_exp(s, l_char(req.lambda), req.cap);
}

template <ExactField F>
TruncatedSeries<F> zfun_sum(const Scalars<F>& s, const VertexRequest& req) {
  TruncatedSeries<F> out(req.cap);
  if (req.lambda.empty()) return TruncatedSeries<F>::one(req.cap);
  const auto v = column_profile(req.lambda);
  for_each_interlacing(req.lambda, {req.cap, std::nullopt}, [&](const InterlacingTuple& t) {
    PochProduct<F> p(s);
    alpha_into(p, t.at(0), v[0]);
    for (int i = v.lo(); i < v.hi(); ++i) beta_into(p, t.at(i), t.at(i + 1), i, v);
    for (int i = v.lo(); i <= v.hi(); ++i) gamma_into(p, t.at(i), v[i]);
    out.add(t.degrees(), p.value());
  });
  return out;
}

template <ExactField F>
TruncatedSeries<F> zfun_raw_sum(const Scalars<F>& s, const VertexRequest& req) {
  TruncatedSeries<F> out(req.cap);
  if (req.lambda.empty()) return TruncatedSeries<F>::one(req.cap);
  const auto v = column_profile(req.lambda);
  const int ncols = v.hi() - v.lo() + 1;
  // d[c][j-1] is d_{i,j} for column i = v.lo() + c.
  std::vector<std::vector<int>> d(static_cast<std::size_t>(ncols));
  for (int c = 0; c < ncols; ++c) d[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(v[v.lo() + c]), 0);
  auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i - v.lo())][static_cast<std::size_t>(j - 1)]; };

  auto term = [&] {
    PochProduct<F> p(s);
    for (int j = 1; j <= v[0]; ++j) p.ratio({j, 0}, {j - 1, 1}, at(0, j));
    for (int i = v.lo(); i < v.hi(); ++i) {
      const int shift = i >= 0 ? 1 : 0;
      for (int j = 1; j <= v[i]; ++j) {
        for (int k = 1; k <= v[i + 1]; ++k) {
          p.ratio({k - j + shift, 0}, {k - j + shift - 1, 1}, at(i + 1, k) - at(i, j));
          if (p.is_zero()) return p;
        }
      }
    }
    for (int i = v.lo(); i <= v.hi(); ++i) {
      for (int j = 1; j <= v[i]; ++j) {
        for (int k = 1; k <= v[i]; ++k) p.ratio({k - j, 1}, {k - j + 1, 0}, at(i, k) - at(i, j));
      }
    }
    return p;
  };

  std::function<void(int, int, int)> rec = [&](int c, int j, int left) {
    if (c == ncols) {
      auto p = term();
      if (p.is_zero()) return;
      ExpVec e;
      for (int cc = 0; cc < ncols; ++cc) {
        int sum = 0;
        for (int x : d[static_cast<std::size_t>(cc)]) sum += x;
        if (sum > 0) e.emplace_back(v.lo() + cc, sum);
      }
      out.add(e, p.value());
      return;
    }
    auto& col = d[static_cast<std::size_t>(c)];
    if (j == static_cast<int>(col.size())) {
      rec(c + 1, 0, left);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      col[static_cast<std::size_t>(j)] = x;
      rec(c, j + 1, left - x);
    }
    col[static_cast<std::size_t>(j)] = 0;
  };
  rec(0, 0, req.cap);
  return out;
}

#define QMAP_INSTANTIATE_VERTEX(F)                                                              \
  template TruncatedSeries<F> zfun_product(const Scalars<F>&, const VertexRequest&);            \
  template TruncatedSeries<F> zfun_sum(const Scalars<F>&, const VertexRequest&);                \
  template TruncatedSeries<F> zfun_raw_sum(const Scalars<F>&, const VertexRequest&);            \
  template F coeff_alpha(const Scalars<F>&, const Partition&, int);                             \
  template F coeff_beta(const Scalars<F>&, const Partition&, const Partition&, int,             \
                        const ColumnProfile&);                                                  \
  template F coeff_gamma(const Scalars<F>&, const Partition&, int);                             \
  template F coeff_gamma_rewritten(const Scalars<F>&, const Partition&, int);                   \
  template F coeff_beta_rewritten(const Scalars<F>&, const Partition&, const Partition&, int,   \
                                  const ColumnProfile&);

QMAP_INSTANTIATE_VERTEX(Rational)
QMAP_INSTANTIATE_VERTEX(RatFunc)

}  // namespace qmap
