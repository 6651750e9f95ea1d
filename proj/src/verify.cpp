#include "qmap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "qmap/macdonald.hpp"
#include "qmap/qpoch.hpp"
#include "qmap/vertex.hpp"

namespace qmap {

namespace {

using Point = std::pair<Rational, Rational>;
using Json = nlohmann::ordered_json;

Json point_json(const Point& p) { return {{"hbar", p.first.to_string()}, {"q", p.second.to_string()}}; }

Json partition_json(const Partition& p) { return p.parts(); }

// Times `body`, which fills in pass/witness/checks.
VerificationReport timed(std::string check, Json params, const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void fail(VerificationReport& r, Json witness) {
  if (r.pass) {
    r.pass = false;
    r.witness = std::move(witness);
  }
}

// Compares two series; the first disagreement becomes the witness.
void compare_series(VerificationReport& r, const std::string& left, const TruncatedSeries<Rational>& a,
                    const std::string& right, const TruncatedSeries<Rational>& b) {
  ++r.checks;
  if (auto e = first_mismatch(a, b)) {
    fail(r, {{"left", left},
             {"right", right},
             {"exponent", exps_to_string(*e)},
             {left, a.coeff(*e).to_string()},
             {right, b.coeff(*e).to_string()}});
  }
}

void compare_values(VerificationReport& r, const Json& where, const Rational& got, const Rational& want) {
  ++r.checks;
  if (got != want) fail(r, {{"at", where}, {"got", got.to_string()}, {"expected", want.to_string()}});
}

Rational lookup(const std::map<Partition, Rational>& m, const Partition& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

std::vector<Scalars<Rational>> scalars_of(const VerifyOptions& opt) {
  if (opt.points.empty()) throw ConfigError("no (hbar, q) points configured");
  std::vector<Scalars<Rational>> out;
  for (const auto& [h, q] : opt.points) out.emplace_back(h, q);
  return out;
}

// ---- suites ----

std::vector<VerificationReport> hook_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  auto scal = scalars_of(opt);
  std::vector<std::pair<Partition, int>> jobs;
  for (int n = 1; n <= opt.max_size; ++n)
    for (const auto& la : partitions_of(n)) jobs.emplace_back(la, opt.degree);
  for (const auto& la : opt.extra) jobs.emplace_back(la, opt.extra_degree);
  for (const auto& [la, D] : jobs) {
    for (std::size_t k = 0; k < scal.size(); ++k) {
      const auto& s = scal[k];
      Json params{{"lambda", partition_json(la)}, {"degree", D}, {"point", point_json(opt.points[k])}};
      out.push_back(timed("hook", params, [&](VerificationReport& r) {
        const VertexRequest req{la, D};
        const auto prod = zfun_product(s, req);
        compare_series(r, "product", prod, "sum", zfun_sum(s, req));
        compare_series(r, "product", prod, "macdonald", matrix_element(s, la, D));
        if (D <= opt.raw_degree) compare_series(r, "product", prod, "raw", zfun_raw_sum(s, req));
      }));
    }
  }
  return out;
}

std::vector<VerificationReport> macdonald_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  const int N = opt.max_size;
  auto scal = scalars_of(opt);
  for (std::size_t k = 0; k < scal.size(); ++k) {
    const auto& s = scal[k];
    const Json params{{"max_degree", N}, {"point", point_json(opt.points[k])}};
    const auto b = macdonald_basis(s, N);

    out.push_back(timed("orthogonality", params, [&](VerificationReport& r) {
      for (const auto& [la, M] : b.in_power_sum)
        for (const auto& [mu, P] : b.in_power_sum)
          if (la < mu)
            compare_values(r, {partition_json(la), partition_json(mu)}, inner_product(s, M, P), Rational(0));
    }));
    out.push_back(timed("triangularity", params, [&](VerificationReport& r) {
      for (const auto& [la, u] : b.in_monomial) {
        compare_values(r, partition_json(la), lookup(u, la), Rational(1));
        for (const auto& [mu, c] : u) {
          ++r.checks;
          if (!dominated_by(mu, la)) fail(r, {{"lambda", partition_json(la)}, {"mu", partition_json(mu)}});
        }
      }
    }));
    out.push_back(timed("pieri", params, [&](VerificationReport& r) {
      for (int n = 1; n <= N; ++n) {
        const Rational pre = qpoch(s, QArg{0, 1}, n) / qpoch(s, QArg{1, 0}, n);
        for (const auto& la : partitions_up_to(N - n)) {
          const auto got = b.expand(s, psum_mul(b.in_power_sum.at(Partition{n}), b.in_power_sum.at(la)));
          for (const auto& mu : partitions_of(la.size() + n)) {
            const Rational want = interlaces(mu, la) ? pre * pieri_c(s, mu, la) : Rational(0);
            compare_values(r, {{"n", n}, {"lambda", partition_json(la)}, {"mu", partition_json(mu)}},
                           lookup(got, mu), want);
          }
        }
      }
    }));
    out.push_back(timed("adjoint_pieri", params, [&](VerificationReport& r) {
      for (const auto& la : partitions_up_to(N))
        for (const auto& mu : strips_below(la))
          compare_values(r, {partition_json(la), partition_json(mu)}, pieri_d(s, la, mu),
                         pieri_d_by_norms(s, b, la, mu));
    }));
    out.push_back(timed("adjointness", params, [&](VerificationReport& r) {
      for (const auto& [la, f] : b.in_power_sum) {
        const auto up = gamma_plus_exp(s, f, N);
        for (const auto& [mu, g] : b.in_power_sum)
          compare_values(r, {partition_json(la), partition_json(mu)}, inner_product(s, up, g),
                         inner_product(s, f, gamma_minus_shift(g)));
      }
    }));
  }
  return out;
}

std::vector<VerificationReport> lemma_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = 1; n <= opt.max_size; ++n) {
    for (const auto& la : partitions_of(n)) {
      Json params{{"lambda", partition_json(la)}, {"max_entry", opt.max_entry}};
      out.push_back(timed("lemma", params, [&](VerificationReport& r) {
        // Column heights sum to |lambda|, which bounds the number of parts.
        EnumerationBounds bounds{opt.max_entry * la.size(), opt.max_entry};
        for_each_interlacing(la, bounds, [&](const InterlacingTuple& t) {
          ++r.checks;
          const auto [lhs, rhs] = lemma_sum(la, t);
          if (lhs != rhs) fail(r, {{"tuple", t.to_json()}, {"lhs", lhs}, {"rhs", rhs}});
        });
      }));
    }
  }
  return out;
}

std::vector<VerificationReport> dimension_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  for (int n = 0; n <= opt.max_size; ++n) {
    out.push_back(timed("dimension", {{"size", n}}, [&](VerificationReport& r) {
      for (const auto& la : partitions_of(n)) {
        ++r.checks;
        const long d = dim_formula(column_profile(la));
        if (d != 0) fail(r, {{"lambda", partition_json(la)}, {"dim", d}});
      }
    }));
  }
  return out;
}

std::vector<VerificationReport> commutation_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  auto scal = scalars_of(opt);
  for (std::size_t k = 0; k < scal.size(); ++k) {
    for (const auto& start : {Partition{}, Partition{1}}) {
      Json params{{"start", partition_json(start)}, {"order", opt.order}, {"point", point_json(opt.points[k])}};
      out.push_back(timed("commutation", params, [&](VerificationReport& r) {
        const auto res = commutation_check(scal[k], start, opt.order);
        r.checks = res.compared;
        if (res.mismatch) fail(r, {{"mismatch", *res.mismatch}});
        if (res.max_order < opt.order) fail(r, {{"max_order_reached", res.max_order}});
      }));
    }
  }
  return out;
}

std::vector<FixedPoint> thm2_points(const VerifyOptions& opt) {
  std::vector<FixedPoint> pts{figure_fixed_point()};
  for (int n : {2, 3})
    for (auto& p : two_unit_fixed_points(n, opt.max_boxes)) pts.push_back(std::move(p));
  return pts;
}

std::vector<VerificationReport> anquiver_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  auto scal = scalars_of(opt);
  for (const auto& p : thm2_points(opt)) {
    for (const auto& order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      const auto ch = Chamber::from_order(order, p.units.size());
      for (std::size_t k = 0; k < scal.size(); ++k) {
        Json params{{"fixed_point", p.to_json()},
                    {"chamber", order},
                    {"degree", opt.degree},
                    {"point", point_json(opt.points[k])}};
        out.push_back(timed("anquiver", params, [&](VerificationReport& r) {
          compare_series(r, "oracle", chamber_limit_oracle(scal[k], p, ch, opt.degree), "factorized",
                         vertex_limit_factorized(scal[k], p, ch, opt.degree));
        }));
      }
    }
  }
  return out;
}

void check_character(VerificationReport& r, const KCharacter& ch, int boxes) {
  ++r.checks;
  if (static_cast<int>(ch.size()) != 2 * boxes)
    fail(r, {{"size", ch.size()}, {"expected", 2 * boxes}});
  ++r.checks;
  if (!inversion_closed(ch)) fail(r, {{"not_inversion_closed", character_strings(ch)}});
}

std::vector<VerificationReport> mirror_suite(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  for (const auto& p : thm2_points(opt)) {
    out.push_back(timed("mirror", {{"fixed_point", p.to_json()}}, [&](VerificationReport& r) {
      check_character(r, mirror_tangent_character(p), p.total_boxes());
    }));
  }
  std::vector<Partition> singles;
  for (int n = 1; n <= opt.max_size; ++n)
    for (const auto& la : partitions_of(n)) singles.push_back(la);
  const Partition spot{5, 4, 3, 2};
  if (std::find(singles.begin(), singles.end(), spot) == singles.end()) singles.push_back(spot);
  for (const auto& la : singles) {
    out.push_back(timed("mirror", {{"lambda", partition_json(la)}}, [&](VerificationReport& r) {
      const auto p = single_unit_point(la);
      const auto ch = mirror_tangent_character(p);
      check_character(r, ch, la.size());
      if (la == spot) {
        // The hook monomial of the box at the corner, in content labels.
        const int b = p.units[0].vertex;
        const ExpVec hook{{b, 1}, {b + 1, 1}, {b + 2, 1}, {b + 3, 1}};
        for (const auto& m : {hook, scale_exps(hook, -1)}) {
          ++r.checks;
          if (std::count(ch.begin(), ch.end(), m) != 1)
            fail(r, {{"missing", exps_to_string(m)}, {"corner_vertex", b}});
        }
      }
    }));
  }
  return out;
}

}  // namespace

std::vector<Point> default_points() {
  return {{Rational(2, 3), Rational(1, 5)}, {Rational(3, 7), Rational(2, 11)}, {Rational(5, 13), Rational(7, 17)}};
}

void check_point(const Rational& hbar, const Rational& q, int max_power) {
  if (hbar.is_zero()) throw ConfigError("hbar must be nonzero");
  if (q.is_zero()) throw ConfigError("q must be nonzero");
  if (q == Rational(1) || q == Rational(-1)) throw ConfigError("q must not be 1 or -1");
  Rational up(1), down(1);
  const Rational qinv = Rational(1) / q;
  for (int k = 0; k <= max_power; ++k) {
    if (hbar == up || hbar == down) {
      throw ConfigError("hbar = q^" + std::string(hbar == up ? "" : "-") + std::to_string(k) +
                        " puts a pole in range (guard exponent " + std::to_string(max_power) + ")");
    }
    up = up * q;
    down = down * qinv;
  }
}

std::vector<Point> random_points(std::uint64_t seed, int count, int max_power) {
  static constexpr long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, std::size(primes) - 1);
  std::vector<Point> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t idx[4];
    for (auto& i : idx) i = pick(gen);
    if (std::set<std::size_t>(std::begin(idx), std::end(idx)).size() != 4) continue;
    Point p{Rational(primes[idx[0]], primes[idx[1]]), Rational(primes[idx[2]], primes[idx[3]])};
    try {
      check_point(p.first, p.second, max_power);
    } catch (const ConfigError&) {
      continue;
    }
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  return out;
}

Json VerificationReport::to_json(bool with_timing) const {
  Json j{{"check", check}, {"params", params}, {"pass", pass}, {"checks", checks}};
  if (witness) j["witness"] = *witness;
  if (with_timing) j["seconds"] = seconds;
  return j;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"hook",    "macdonald", "lemma",     "dimension",
                                              "commutation", "anquiver", "mirror"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "hook") return hook_suite(opt);
  if (name == "macdonald") return macdonald_suite(opt);
  if (name == "lemma") return lemma_suite(opt);
  if (name == "dimension") return dimension_suite(opt);
  if (name == "commutation") return commutation_suite(opt);
  if (name == "anquiver") return anquiver_suite(opt);
  if (name == "mirror") return mirror_suite(opt);
  throw ConfigError("unknown suite '" + name + "'");
}

FixedPoint figure_fixed_point() {
  FixedPoint p;
  p.quiver = {4, false, {1, 3, 2, 1}, {0, 1, 1, 0}};
  p.units = {{1, Partition{2, 2}}, {2, Partition{2, 1}}};
  return p;
}

FixedPoint single_unit_point(const Partition& lambda) {
  // Just wide enough: contents run from 1 - lambda_1 to l(lambda) - 1.
  const int corner = std::max(lambda.part(1) - 1, 0);
  const int n = std::max(lambda.part(1) + lambda.length() - 1, 1);
  FixedPoint p;
  p.quiver = {n, false, std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
  p.quiver.w[static_cast<std::size_t>(corner)] = 1;
  p.units = {{corner, lambda}};
  for (const auto& b : boxes(lambda)) ++p.quiver.v[static_cast<std::size_t>(p.color(0, content(b)))];
  return p;
}

}  // namespace qmap
