#include "qmap/anquiver.hpp"

#include <algorithm>
#include <functional>

#include "qmap/vertex.hpp"

namespace qmap {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ConfigError(std::string("fixed point: missing array '") + key + "'");
  std::vector<int> out;
  for (const auto& x : j.at(key)) {
    if (!x.is_number_integer()) throw ConfigError(std::string("fixed point: non-integer in '") + key + "'");
    out.push_back(x.get<int>());
  }
  return out;
}

// Boxes of unit k with color i.
int color_count(const FixedPoint& p, std::size_t k, int i) {
  const int n = p.quiver.n;
  int c = 0;
  for (const auto& b : boxes(p.units[k].lambda)) {
    const int col = p.color(k, content(b));
    if (p.quiver.affine ? col == mod(i, n) : col == i) ++c;
  }
  return c;
}

}  // namespace

FixedPoint FixedPoint::from_json(const nlohmann::json& j) {
  FixedPoint p;
  try {
    p.quiver.n = j.at("n").get<int>();
    p.quiver.affine = j.value("affine", false);
    p.quiver.v = int_list(j, "v");
    p.quiver.w = int_list(j, "w");
    for (const auto& u : j.at("partitions")) {
      std::vector<int> parts;
      for (const auto& x : u.at("parts")) parts.push_back(x.get<int>());
      p.units.push_back({u.at("vertex").get<int>(), Partition(parts)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("fixed point JSON: ") + e.what());
  }
  if (p.quiver.n < 1) throw ConfigError("fixed point: n must be positive");
  if (static_cast<int>(p.quiver.v.size()) != p.quiver.n || static_cast<int>(p.quiver.w.size()) != p.quiver.n) {
    throw ConfigError("fixed point: v and w must have length n");
  }
  return p;
}

nlohmann::ordered_json FixedPoint::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = quiver.n;
  j["affine"] = quiver.affine;
  j["v"] = quiver.v;
  j["w"] = quiver.w;
  j["partitions"] = nlohmann::ordered_json::array();
  for (const auto& u : units) j["partitions"].push_back({{"vertex", u.vertex}, {"parts", u.lambda.parts()}});
  return j;
}

int FixedPoint::color(std::size_t k, int c) const {
  const int i = units.at(k).vertex + c;
  return quiver.affine ? mod(i, quiver.n) : i;
}

int FixedPoint::total_boxes() const {
  int t = 0;
  for (const auto& u : units) t += u.lambda.size();
  return t;
}

namespace {

std::optional<std::string> first_violation(const FixedPoint& p) {
  const int n = p.quiver.n;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < p.units.size(); ++k) {
    const int b = p.units[k].vertex;
    if (b < 0 || b >= n) return "framing vertex " + std::to_string(b) + " out of range";
    ++w[static_cast<std::size_t>(b)];
    for (const auto& box : boxes(p.units[k].lambda)) {
      const int c = p.color(k, content(box));
      if (c < 0 || c >= n) return "box colored " + std::to_string(c) + " lies outside the quiver";
      ++v[static_cast<std::size_t>(c)];
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (w[k] != p.quiver.w[k]) {
      return "vertex " + std::to_string(i) + ": " + std::to_string(w[k]) + " framing units, w = " + std::to_string(p.quiver.w[k]);
    }
    if (v[k] != p.quiver.v[k]) {
      return "vertex " + std::to_string(i) + ": " + std::to_string(v[k]) + " boxes, v = " + std::to_string(p.quiver.v[k]);
    }
  }
  return std::nullopt;
}

}  // namespace

bool validate_fixed_point(const FixedPoint& p) { return !first_violation(p).has_value(); }

void require_valid(const FixedPoint& p) {
  if (auto why = first_violation(p)) throw InvalidFixedPoint(*why);
}

Chamber Chamber::from_order(const std::vector<int>& order, std::size_t units) {
  if (order.size() != units) throw ConfigError("chamber must order every framing unit");
  std::vector<int> w(units, 0);
  std::vector<bool> seen(units, false);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const int k = order[pos];
    if (k < 0 || static_cast<std::size_t>(k) >= units || seen[static_cast<std::size_t>(k)]) {
      throw ConfigError("chamber is not a permutation of the framing units");
    }
    seen[static_cast<std::size_t>(k)] = true;
    // Earliest in the order tends to zero fastest.
    w[static_cast<std::size_t>(k)] = static_cast<int>(units - pos);
  }
  return Chamber(std::move(w));
}

int nu_shift(const FixedPoint& p, std::size_t k, int vertex, const Chamber& chamber) {
  auto sigma_of = [&](std::size_t m, int i) { return color_count(p, m, i - 1) - color_count(p, m, i); };
  int nu = 0;
  for (std::size_t m = 0; m < p.units.size(); ++m) {
    if (m == k) continue;
    if (chamber.precedes(m, k)) {
      nu += sigma_of(m, vertex);
      const int b = p.units[m].vertex;
      if (p.quiver.affine ? b == mod(vertex, p.quiver.n) : b == vertex) nu += 1;
    } else if (chamber.precedes(k, m)) {
      nu += sigma_of(m, vertex + 1);
    } else {
      throw UnresolvedLimit("framing units " + std::to_string(k) + " and " + std::to_string(m) + " are not ordered by the chamber");
    }
  }
  return nu;
}

template <ExactField F>
TruncatedSeries<F> vertex_limit_factorized(const Scalars<F>& s, const FixedPoint& p,
                                           const Chamber& chamber, int cap) {
  require_valid(p);
  if (chamber.size() != p.units.size()) throw ConfigError("chamber size differs from the number of framing units");
  auto out = TruncatedSeries<F>::one(cap);
  for (std::size_t k = 0; k < p.units.size(); ++k) {
    const auto z = zfun_product(s, {p.units[k].lambda, cap});
    std::map<int, int> nu;
    for (const auto& b : boxes(p.units[k].lambda)) {
      const int i = p.color(k, content(b));
      if (!nu.count(i)) nu[i] = nu_shift(p, k, i, chamber);
    }
    const auto moved = z.transformed(s, [&](const ExpVec& e) {
      int shift = 0;
      for (const auto& [c, d] : e) shift += d * nu.at(p.color(k, c));
      return std::pair{relabel(e, [&](int c) { return p.color(k, c); }), shift};
    });
    out = series_mul(out, moved);
  }
  return out;
}

template <ExactField F>
TruncatedSeries<F> chamber_limit_oracle(const Scalars<F>& s, const FixedPoint& p,
                                        const Chamber& chamber, int cap) {
  require_valid(p);
  if (p.quiver.affine) throw ConfigError("the chamber-limit oracle covers finite quivers only");
  if (chamber.size() != p.units.size()) throw ConfigError("chamber size differs from the number of framing units");

  // Grothendieck roots a_k hbar^{col-1}, one per box.
  struct Root {
    int vertex;
    std::size_t unit;
    int hexp;
  };
  std::vector<Root> roots;
  for (std::size_t k = 0; k < p.units.size(); ++k)
    for (const auto& b : boxes(p.units[k].lambda)) roots.push_back({p.color(k, content(b)), k, b.col - 1});

  // u = x_beta / x_alpha; alpha < 0 stands for the framing parameter of `unit`.
  struct Ratio {
    int alpha;
    int beta;
    int hexp;
    int weight;
    bool same_unit;
    bool self;
  };
  std::vector<Ratio> ratios;
  const int nr = static_cast<int>(roots.size());
  auto pair = [&](int a, int b, bool self) {
    const auto& rb = roots[static_cast<std::size_t>(b)];
    const auto& ra = roots[static_cast<std::size_t>(a)];
    ratios.push_back({a, b, rb.hexp - ra.hexp, chamber.weight(rb.unit) - chamber.weight(ra.unit),
                      ra.unit == rb.unit, self});
  };
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      const int va = roots[static_cast<std::size_t>(a)].vertex;
      const int vb = roots[static_cast<std::size_t>(b)].vertex;
      if (vb == va + 1) pair(a, b, false);
      if (vb == va) pair(a, b, true);
    }
  }
  std::vector<std::pair<int, std::size_t>> framings;  // (root, framing unit)
  for (int b = 0; b < nr; ++b) {
    const auto& rb = roots[static_cast<std::size_t>(b)];
    for (std::size_t k = 0; k < p.units.size(); ++k) {
      if (p.units[k].vertex != rb.vertex) continue;
      ratios.push_back({-1, b, rb.hexp, chamber.weight(rb.unit) - chamber.weight(k), rb.unit == k, false});
    }
  }

  TruncatedSeries<F> out(cap);
  std::vector<int> d(roots.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
    if (r < roots.size()) {
      for (int x = 0; x <= left; ++x) {
        d[r] = x;
        rec(r + 1, left - x);
      }
      d[r] = 0;
      return;
    }
    PochProduct<F> prod(s);
    int hq = 0;
    for (const auto& t : ratios) {
      const int n = d[static_cast<std::size_t>(t.beta)] - (t.alpha < 0 ? 0 : d[static_cast<std::size_t>(t.alpha)]);
      if (t.same_unit) {
        if (t.self) {
          prod.ratio({t.hexp, 1}, {t.hexp + 1, 0}, n);
        } else {
          prod.ratio({t.hexp + 1, 0}, {t.hexp, 1}, n);
        }
        if (prod.is_zero()) return;
      } else if (t.weight == 0) {
        throw UnresolvedLimit("two framing units have equal chamber weight");
      } else if (t.weight < 0) {
        // u -> infinity: (hbar u)_n/(q u)_n -> (hbar/q)^n.
        hq += t.self ? -n : n;
      }
    }
    ExpVec e;
    std::map<int, int> deg;
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (d[k] > 0) deg[roots[k].vertex] += d[k];
    e.assign(deg.begin(), deg.end());
    out.add(e, prod.value() * s.hq(hq));
  };
  rec(0, cap);
  return out;
}

KCharacter mirror_tangent_character(const FixedPoint& p) {
  KCharacter out;
  for (std::size_t k = 0; k < p.units.size(); ++k) {
    for (const auto& m : l_char(p.units[k].lambda)) {
      const auto e = relabel(m.z, [&](int c) { return p.color(k, c); });
      out.push_back(e);
      out.push_back(scale_exps(e, -1));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> character_strings(const KCharacter& ch) {
  std::vector<std::string> out;
  out.reserve(ch.size());
  for (const auto& e : ch) out.push_back(exps_to_string(e));
  std::sort(out.begin(), out.end());
  return out;
}

bool inversion_closed(const KCharacter& ch) {
  KCharacter inv;
  for (const auto& e : ch) inv.push_back(scale_exps(e, -1));
  auto a = ch;
  std::sort(a.begin(), a.end());
  std::sort(inv.begin(), inv.end());
  return a == inv;
}

std::vector<FixedPoint> two_unit_fixed_points(int n, int max_boxes) {
  std::vector<FixedPoint> out;
  const auto parts = partitions_up_to(max_boxes);
  for (int b0 = 0; b0 < n; ++b0) {
    for (int b1 = b0; b1 < n; ++b1) {
      for (const auto& m0 : parts) {
        for (const auto& m1 : parts) {
          if (m0.size() + m1.size() > max_boxes) continue;
          if (b0 == b1 && m1 < m0) continue;
          FixedPoint p;
          p.quiver.n = n;
          p.quiver.v.assign(static_cast<std::size_t>(n), 0);
          p.quiver.w.assign(static_cast<std::size_t>(n), 0);
          p.units = {{b0, m0}, {b1, m1}};
          bool inside = true;
          for (std::size_t k = 0; k < 2 && inside; ++k) {
            ++p.quiver.w[static_cast<std::size_t>(p.units[k].vertex)];
            for (const auto& box : boxes(p.units[k].lambda)) {
              const int c = p.color(k, content(box));
              if (c < 0 || c >= n) {
                inside = false;
                break;
              }
              ++p.quiver.v[static_cast<std::size_t>(c)];
            }
          }
          if (inside) out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

#define QMAP_INSTANTIATE_ANQUIVER(F)                                                           \
  template TruncatedSeries<F> vertex_limit_factorized(const Scalars<F>&, const FixedPoint&,    \
                                                      const Chamber&, int);                    \
  template TruncatedSeries<F> chamber_limit_oracle(const Scalars<F>&, const FixedPoint&,       \
                                                   const Chamber&, int);

QMAP_INSTANTIATE_ANQUIVER(Rational)
QMAP_INSTANTIATE_ANQUIVER(RatFunc)

}  // namespace qmap
