#include "qmap/ratfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qmap/errors.hpp"

namespace qmap {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (sgn(c) != 0) terms_.emplace(Exp{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(int hbar_exp, int q_exp, const mpq_class& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.emplace(Exp{hbar_exp, q_exp}, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

void LaurentPoly::add_term(const Exp& e, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c, int hbar_shift, int q_shift) const {
  LaurentPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, v] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), Exp{e.first + hbar_shift, e.second + q_shift}, v * c);
  }
  return r;
}

namespace {

struct Box {
  int hmin, hmax, qmin, qmax;
};

Box bounding_box(const LaurentPoly::Terms& t) {
  Box b{t.begin()->first.first, t.rbegin()->first.first, t.begin()->first.second,
        t.begin()->first.second};
  for (const auto& [e, c] : t) {
    b.qmin = std::min(b.qmin, e.second);
    b.qmax = std::max(b.qmax, e.second);
  }
  return b;
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw Error("LaurentPoly: division by zero");
  if (is_zero()) return LaurentPoly{};
  // Exponent ranges of a product add variable by variable, so an exact
  // quotient must live inside this box.
  const Box bp = bounding_box(terms_);
  const Box bd = bounding_box(d.terms_);
  const Box bound{bp.hmin - bd.hmin, bp.hmax - bd.hmax, bp.qmin - bd.qmin, bp.qmax - bd.qmax};
  if (bound.hmin > bound.hmax || bound.qmin > bound.qmax) return std::nullopt;

  const auto& [lead_e, lead_c] = *d.terms_.rbegin();
  LaurentPoly rem = *this;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    const Exp t{re.first - lead_e.first, re.second - lead_e.second};
    if (t.first < bound.hmin || t.first > bound.hmax || t.second < bound.qmin ||
        t.second > bound.qmax) {
      return std::nullopt;
    }
    const mpq_class c = rc / lead_c;
    quot.add_term(t, c);
    rem -= d.scaled(c, t.first, t.second);
  }
  return quot;
}

namespace {

Rational ipow(const Rational& x, int e) {
  Rational r(1);
  Rational base = e < 0 ? Rational(1) / x : x;
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

std::string format_monomial(const LaurentPoly::Exp& e) {
  std::string s;
  auto var = [&s](const char* name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (k != 1) s += "^" + std::to_string(k);
  };
  var("h", e.first);
  var("q", e.second);
  return s;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& hbar, const Rational& q) const {
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    r += Rational(c) * ipow(hbar, e.first) * ipow(q, e.second);
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class mag = abs(c);
    const bool neg = sgn(c) < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    const std::string mono = format_monomial(e);
    if (mono.empty()) {
      s += mag.get_str();
    } else if (mag == 1) {
      s += mono;
    } else {
      s += mag.get_str() + "*" + mono;
    }
  }
  return s;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

// ---------------------------------------------------------------------------
// Factoring helpers

namespace detail {

std::vector<mpz_class> cyclotomic(int n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n.
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto phi = cyclotomic(d);
    // Monic exact division, highest degree first.
    std::vector<mpz_class> quot(p.size() - phi.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const mpz_class c = p[k + phi.size() - 1];
      quot[k] = c;
      for (std::size_t j = 0; j < phi.size(); ++j) p[k + j] -= c * phi[j];
    }
    p = std::move(quot);
  }
  return p;
}

namespace {

/// c * hbar^a q^b * f with f primitive, minimal exponents 0, positive leading coefficient.
std::tuple<mpq_class, LaurentPoly::Exp, LaurentPoly> normalize(const LaurentPoly& p) {
  const auto& t = p.terms();
  int hmin = t.begin()->first.first;
  int qmin = t.begin()->first.second;
  for (const auto& [e, c] : t) qmin = std::min(qmin, e.second);
  // Content: gcd of numerators over lcm of denominators.
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : t) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  mpq_class content(g, l);
  content.canonicalize();
  if (sgn(t.rbegin()->second) < 0) content = -content;
  LaurentPoly f = p.scaled(mpq_class(1) / content, -hmin, -qmin);
  return {content, LaurentPoly::Exp{hmin, qmin}, f};
}

LaurentPoly cyclotomic_in(int d, int alpha, int beta) {
  const auto coeffs = cyclotomic(d);
  LaurentPoly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const int kk = static_cast<int>(k);
    r += LaurentPoly::monomial(alpha * kk, beta * kk, mpq_class(coeffs[k]));
  }
  return r;
}

}  // namespace

Split split_factors(const LaurentPoly& p) {
  if (p.is_zero()) throw Error("split_factors: zero polynomial");
  auto [c, shift, f] = normalize(p);
  Split out{c, shift, {}};
  if (f.is_constant()) return out;

  std::vector<LaurentPoly> pieces;
  if (f.size() == 2) {
    const auto& lo = *f.terms().begin();
    const auto& hi = *f.terms().rbegin();
    if (abs(lo.second) == abs(hi.second)) {
      // f = hi.c * m1 * (1 + s*u) with u = m0/m1 written as mu^g, mu primitive.
      int a = hi.first.first - lo.first.first;
      int b = hi.first.second - lo.first.second;
      const int g = std::gcd(std::abs(a), std::abs(b));
      int alpha = a / g, beta = b / g;
      if (alpha < 0 || (alpha == 0 && beta < 0)) {
        alpha = -alpha;
        beta = -beta;
      }
      const bool plus = lo.second == hi.second;
      for (int d = 1; d <= 2 * g; ++d) {
        const bool take = plus ? (2 * g % d == 0 && g % d != 0) : (d <= g && g % d == 0);
        if (!take) continue;
        pieces.push_back(std::get<2>(normalize(cyclotomic_in(d, alpha, beta))));
      }
    }
  }
  if (pieces.empty()) {
    out.factors.push_back(std::move(f));
    return out;
  }
  LaurentPoly prod(mpq_class(1));
  for (const auto& piece : pieces) prod = prod * piece;
  auto rest = f.divide_exact(prod);
  if (!rest || rest->size() != 1) throw Error("split_factors: cyclotomic split failed");
  const auto& [e, k] = *rest->terms().begin();
  out.constant *= k;
  out.shift = {out.shift.first + e.first, out.shift.second + e.second};
  out.factors = std::move(pieces);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// RatFunc

namespace {

LaurentPoly expand(const RatFunc::Factors& fs) {
  LaurentPoly r(mpq_class(1));
  for (const auto& [f, e] : fs) {
    for (int k = 0; k < e; ++k) r = r * f;
  }
  return r;
}

/// Multiplies `num` by the factors in `lcm` that `have` is missing.
LaurentPoly lift(const LaurentPoly& num, const RatFunc::Factors& have,
                 const RatFunc::Factors& lcm) {
  LaurentPoly r = num;
  for (const auto& [f, e] : lcm) {
    auto it = have.find(f);
    const int missing = e - (it == have.end() ? 0 : it->second);
    for (int k = 0; k < missing; ++k) r = r * f;
  }
  return r;
}

RatFunc::Factors lcm_of(const RatFunc::Factors& a, const RatFunc::Factors& b) {
  RatFunc::Factors r = a;
  for (const auto& [f, e] : b) {
    auto& slot = r[f];
    slot = std::max(slot, e);
  }
  return r;
}

}  // namespace

LaurentPoly RatFunc::denominator() const { return expand(den_); }

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.divide_exact(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    Factors l = lcm_of(den_, o.den_);
    num_ = lift(num_, den_, l) + lift(o.num_, o.den_, l);
    den_ = std::move(l);
  }
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  for (const auto& [f, e] : o.den_) den_[f] += e;
  cancel();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error("RatFunc: division by zero");
  const auto split = detail::split_factors(o.num_);
  num_ = (num_ * expand(o.den_)).scaled(mpq_class(1) / split.constant, -split.shift.first,
                                        -split.shift.second);
  for (const auto& f : split.factors) den_[f] += 1;
  cancel();
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  const auto l = lcm_of(a.den_, b.den_);
  return lift(a.num_, a.den_, l) == lift(b.num_, b.den_, l);
}

Rational RatFunc::evaluate(const Rational& hbar, const Rational& q) const {
  Rational den(1);
  for (const auto& [f, e] : den_) {
    const Rational v = f.evaluate(hbar, q);
    if (v.is_zero()) throw PoleError("RatFunc: denominator vanishes at the evaluation point");
    for (int k = 0; k < e; ++k) den *= v;
  }
  return num_.evaluate(hbar, q) / den;
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::string s = "(" + num_.to_string() + ")/(";
  bool first = true;
  for (const auto& [f, e] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + f.to_string() + ")";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s + ")";
}

}  // namespace qmap
