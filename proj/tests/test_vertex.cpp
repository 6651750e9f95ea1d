#include <doctest.h>

#include "qmap/vertex.hpp"
#include <set>

#include "support.hpp"

using namespace qmap;

TEST_CASE("empty diagram and zero cap") {
  const auto s = test::points()[0];
  const auto one = TruncatedSeries<Rational>::one(5);
  CHECK(zfun_product(s, {Partition{}, 5}) == one);
  CHECK(zfun_sum(s, {Partition{}, 5}) == one);
  CHECK(zfun_raw_sum(s, {Partition{}, 5}) == one);
  for (const auto& la : partitions_up_to(4)) {
    CHECK(zfun_sum(s, {la, 0}) == TruncatedSeries<Rational>::one(0));
    CHECK(zfun_raw_sum(s, {la, 0}) == TruncatedSeries<Rational>::one(0));
  }
}

TEST_CASE("single box is the q-binomial series") {
  for (const auto& s : test::points()) {
    const auto brute = test::brute_qbinomial(s, Rational(1), 6);
    for (auto z : {zfun_product(s, {Partition{1}, 6}), zfun_sum(s, {Partition{1}, 6}),
                   zfun_raw_sum(s, {Partition{1}, 6})}) {
      CHECK(z.size() == 7);
      for (int d = 0; d <= 6; ++d) CHECK(z.coeff(d ? ExpVec{{0, d}} : ExpVec{}) == brute[static_cast<std::size_t>(d)]);
    }
    for (int d = 0; d <= 6; ++d) {
      CHECK(coeff_alpha(s, Partition(std::vector<int>{d}), 1) ==
            qpoch(s, QArg{1, 0}, d) / qpoch(s, QArg{0, 1}, d));
    }
  }
}

TEST_CASE("three routes agree on small diagrams") {
  const auto s = test::points()[1];
  for (const auto& la : partitions_up_to(4)) {
    CAPTURE(la.to_string());
    const auto prod = zfun_product(s, {la, 3});
    CHECK(zfun_sum(s, {la, 3}) == prod);
    CHECK(zfun_raw_sum(s, {la, 3}) == prod);
  }
  CHECK(zfun_raw_sum(s, {Partition{2, 2}, 3}) == zfun_product(s, {Partition{2, 2}, 3}));
}

TEST_CASE("coefficient rewrites hold on every tuple") {
  for (const auto& s : test::points()) {
    for (const auto& la : partitions_up_to(5)) {
      const auto v = column_profile(la);
      for_each_interlacing(la, {4, std::nullopt}, [&](const InterlacingTuple& t) {
        for (int i = v.lo(); i <= v.hi(); ++i) {
          CHECK(coeff_gamma_rewritten(s, t.at(i), v[i]) == coeff_gamma(s, t.at(i), v[i]));
          if (i < v.hi()) {
            CHECK(coeff_beta_rewritten(s, t.at(i), t.at(i + 1), i, v) ==
                  coeff_beta(s, t.at(i), t.at(i + 1), i, v));
          }
        }
      });
    }
  }
  const auto s = test::points()[0];
  const ColumnProfile v = column_profile({1, 1});
  CHECK(coeff_gamma(s, Partition{}, 2) == Rational(1));
  CHECK(coeff_beta(s, Partition{}, Partition{}, 0, v) == Rational(1));
  CHECK(coeff_alpha(s, Partition{}, 1) == Rational(1));
}

TEST_CASE("nonzero coefficients are realized by tuples") {
  const auto s = test::points()[2];
  for (const auto& la : partitions_up_to(4)) {
    std::set<ExpVec> realized;
    for_each_interlacing(la, {3, std::nullopt}, [&](const InterlacingTuple& t) { realized.insert(t.degrees()); });
    const auto z = zfun_product(s, {la, 3});
    for (const auto& [e, c] : z.terms()) CHECK(realized.count(e) == 1);
  }
}

TEST_CASE("q-difference equation for a single box") {
  for (const auto& s : test::points()) {
    const int D = 6;
    const auto z = zfun_product(s, {Partition{1}, D});
    TruncatedSeries<Rational> shifted(D);
    for (const auto& [e, c] : z.terms()) shifted.add(e, c * s.mono(0, total_degree(e)));
    TruncatedSeries<Rational> one_minus_z(D), one_minus_hz(D);
    one_minus_z.add({}, 1);
    one_minus_z.add({{0, 1}}, -1);
    one_minus_hz.add({}, 1);
    one_minus_hz.add({{0, 1}}, Rational(0) - s.hbar());
    // Z(z)/Z(qz) = (1 - hbar z)/(1 - z).
    CHECK(series_mul(one_minus_z, z) == series_mul(one_minus_hz, shifted));
    // The sides swapped are already different at order 1.
    const auto swapped = first_mismatch(series_mul(one_minus_z, shifted), series_mul(one_minus_hz, z));
    REQUIRE(swapped.has_value());
    CHECK(*swapped == ExpVec{{0, 1}});
  }
}

TEST_CASE("symbolic mode agrees with specialization") {
  const auto sym = symbolic_scalars();
  for (const auto& la : partitions_up_to(3)) {
    const auto p = zfun_product(sym, {la, 2});
    CHECK(zfun_sum(sym, {la, 2}) == p);
    for (const auto& s : test::points()) CHECK(specialize(p, s.hbar(), s.q()) == zfun_sum(s, {la, 2}));
  }
}
