#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmap/qpoch.hpp"

namespace qmap {

/// Sparse exponent vector over Kahler variables z_i, i in Z: sorted by
/// index, exponents strictly positive.
using ExpVec = std::vector<std::pair<int, int>>;

int total_degree(const ExpVec& e);
ExpVec add_exps(const ExpVec& a, const ExpVec& b);
ExpVec scale_exps(const ExpVec& e, int k);
/// Applies an index map (e.g. content -> quiver vertex); merges collisions.
template <class Fn>
ExpVec relabel(const ExpVec& e, Fn&& fn) {
  std::map<int, int> m;
  for (const auto& [i, d] : e) m[fn(i)] += d;
  return {m.begin(), m.end()};
}
std::string exps_to_string(const ExpVec& e);

/// (hbar/q)^hq_exp * prod z_i^{d_i}.
struct ZMonomial {
  int hq_exp = 0;
  ExpVec z;

  static ZMonomial var(int i, int hq = 0) { return {hq, {{i, 1}}}; }
  int degree() const { return total_degree(z); }
  ZMonomial pow(int k) const { return {hq_exp * k, scale_exps(z, k)}; }
  friend ZMonomial operator*(const ZMonomial& a, const ZMonomial& b) {
    return {a.hq_exp + b.hq_exp, add_exps(a.z, b.z)};
  }
  friend bool operator==(const ZMonomial&, const ZMonomial&) = default;
  friend auto operator<=>(const ZMonomial&, const ZMonomial&) = default;
};

/// Power series in the z_i truncated at total degree `cap`. Zero
/// coefficients are pruned on insertion, so equality is map equality.
template <ExactField F>
class TruncatedSeries {
 public:
  using Terms = std::map<ExpVec, F>;

  explicit TruncatedSeries(int cap) : cap_(cap) {
    if (cap < 0) throw Error("TruncatedSeries: negative cap");
  }
  static TruncatedSeries one(int cap) {
    TruncatedSeries s(cap);
    s.add(ExpVec{}, F(1));
    return s;
  }

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  F coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Adds c * z^e; ignored when e exceeds the cap.
  void add(const ExpVec& e, const F& c) {
    if (c.is_zero() || total_degree(e) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_cap(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }

  TruncatedSeries scaled(const F& c) const {
    TruncatedSeries r(cap_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
  }

  /// Multiplies by a monomial, dropping terms pushed past the cap.
  TruncatedSeries times(const Scalars<F>& s, const ZMonomial& m) const {
    TruncatedSeries r(cap_);
    const F& c = s.hq(m.hq_exp);
    for (const auto& [e, v] : terms_) r.add(add_exps(e, m.z), v * c);
    return r;
  }

  /// Applies f(e) -> (e', k): re-indexes variables and multiplies by
  /// (hbar/q)^k.
  template <class Fn>
  TruncatedSeries transformed(const Scalars<F>& s, Fn&& fn) const {
    TruncatedSeries r(cap_);
    for (const auto& [e, v] : terms_) {
      auto [e2, k] = fn(e);
      r.add(e2, v * s.hq(k));
    }
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

  void check_cap(const TruncatedSeries& o) const {
    if (o.cap_ != cap_) {
      throw CapMismatch("series caps differ: " + std::to_string(cap_) + " vs " +
                        std::to_string(o.cap_));
    }
  }

 private:
  int cap_;
  Terms terms_;
};

template <ExactField F>
TruncatedSeries<F> operator+(TruncatedSeries<F> a, const TruncatedSeries<F>& b) {
  return a += b;
}

/// Cauchy product with every term of total degree above the cap dropped.
template <ExactField F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  a.check_cap(b);
  TruncatedSeries<F> r(a.cap());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > a.cap()) continue;
      r.add(add_exps(ea, eb), ca * cb);
    }
  }
  return r;
}

/// sum_{d>=0} (hbar)_d/(q)_d w^d, truncated at total z-degree D.
template <ExactField F>
TruncatedSeries<F> qbinomial_series(const Scalars<F>& s, const ZMonomial& w, int D) {
  if (w.degree() < 1) {
    throw NonTruncatingError("q-binomial series needs a monomial of positive z-degree");
  }
  TruncatedSeries<F> r(D);
  F coeff(1);
  for (int d = 0; d * w.degree() <= D; ++d) {
    if (d > 0) {
      // (hbar)_d/(q)_d from (hbar)_{d-1}/(q)_{d-1}.
      coeff = coeff * (F(1) - s.mono(1, d - 1)) / (F(1) - s.mono(0, d));
    }
    r.add(scale_exps(w.z, d), coeff * s.hq(w.hq_exp * d));
  }
  return r;
}

/// S^.((1-hbar)/(1-q) L): product of the q-binomial series of each monomial.
template <ExactField F>
TruncatedSeries<F> pleth_exp(const Scalars<F>& s, const std::vector<ZMonomial>& L, int D) {
  auto r = TruncatedSeries<F>::one(D);
  for (const auto& w : L) r = series_mul(r, qbinomial_series(s, w, D));
  return r;
}

/// Canonical JSON form: {"cap": D, "terms": [{"z": {"i": d_i}, "coeff": "..."}]}.
template <ExactField F>
nlohmann::ordered_json to_json(const TruncatedSeries<F>& s) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : s.terms()) {
    nlohmann::ordered_json z = nlohmann::ordered_json::object();
    for (const auto& [i, d] : e) z[std::to_string(i)] = d;
    terms.push_back({{"z", z}, {"coeff", c.to_string()}});
  }
  nlohmann::ordered_json j;
  j["cap"] = s.cap();
  j["terms"] = std::move(terms);
  return j;
}

/// Reads the canonical JSON form back (specialized mode only).
TruncatedSeries<Rational> series_from_json(const nlohmann::json& j);

/// Evaluates a symbolic series at a rational (hbar, q).
TruncatedSeries<Rational> specialize(const TruncatedSeries<RatFunc>& s, const Rational& hbar,
                                     const Rational& q);

/// First exponent vector where the two series disagree, if any.
template <ExactField F>
std::optional<ExpVec> first_mismatch(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.terms().end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

}  // namespace qmap
