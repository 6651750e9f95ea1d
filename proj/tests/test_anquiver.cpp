#include <doctest.h>

#include "qmap/anquiver.hpp"
#include "qmap/vertex.hpp"
#include "support.hpp"

using namespace qmap;

namespace {

FixedPoint fig3() {
  return FixedPoint::from_json(nlohmann::json::parse(R"({
    "n": 4, "affine": false, "v": [1, 3, 2, 1], "w": [0, 1, 1, 0],
    "partitions": [{"vertex": 1, "parts": [2, 2]}, {"vertex": 2, "parts": [2, 1]}]})"));
}

FixedPoint single(int n, int vertex, const Partition& la, bool affine = false) {
  FixedPoint p;
  p.quiver = {n, affine, std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
  p.units = {{vertex, la}};
  p.quiver.w[static_cast<std::size_t>(vertex)] = 1;
  for (const auto& b : boxes(la)) ++p.quiver.v[static_cast<std::size_t>(p.color(0, content(b)))];
  return p;
}

// sigma_mu(i) from a direct count of colored boxes.
int sigma_direct(const FixedPoint& p, std::size_t m, int i) {
  int a = 0, b = 0;
  for (const auto& box : boxes(p.units[m].lambda)) {
    const int c = p.units[m].vertex + content(box);
    a += c == i - 1;
    b += c == i;
  }
  return a - b;
}

}  // namespace

TEST_CASE("fixed point validation") {
  auto p = fig3();
  CHECK(validate_fixed_point(p));
  std::swap(p.units[0].lambda, p.units[1].lambda);
  CHECK_FALSE(validate_fixed_point(p));
  CHECK_THROWS_AS(require_valid(p), InvalidFixedPoint);

  FixedPoint empty;
  empty.quiver = {3, false, {0, 0, 0}, {1, 0, 0}};
  empty.units = {{0, Partition{}}};
  CHECK(validate_fixed_point(empty));
  CHECK_THROWS_AS(FixedPoint::from_json(nlohmann::json::parse(R"({"n": 2, "v": [1], "w": [1, 0], "partitions": []})")),
                  ConfigError);
  CHECK(FixedPoint::from_json(fig3().to_json()).to_json() == fig3().to_json());
}

TEST_CASE("chambers") {
  const auto c = Chamber::from_order({1, 0}, 2);
  CHECK(c.precedes(1, 0));
  CHECK_FALSE(c.precedes(0, 1));
  CHECK_THROWS_AS(Chamber::from_order({0, 0}, 2), ConfigError);
  CHECK_THROWS_AS(Chamber::from_order({0}, 2), ConfigError);
}

TEST_CASE("nu shifts") {
  const auto one = single(3, 1, Partition{2, 1});
  for (int i = -1; i <= 4; ++i) CHECK(nu_shift(one, 0, i, Chamber::from_order({0}, 1)) == 0);

  const auto p = fig3();
  // (2,2) before (2,1): nu for (2,1) collects sigma of (2,2) at i and the base count.
  const auto c = Chamber::from_order({0, 1}, 2);
  const auto r = Chamber::from_order({1, 0}, 2);
  for (int i = 0; i < 4; ++i) {
    CHECK(nu_shift(p, 1, i, c) == sigma_direct(p, 0, i) + (i == 1 ? 1 : 0));
    CHECK(nu_shift(p, 0, i, c) == sigma_direct(p, 1, i + 1));
    CHECK(nu_shift(p, 0, i, r) == sigma_direct(p, 1, i) + (i == 2 ? 1 : 0));
    CHECK(nu_shift(p, 1, i, r) == sigma_direct(p, 0, i + 1));
  }
  CHECK_THROWS_AS(nu_shift(p, 0, 1, Chamber::from_weights({1, 1})), UnresolvedLimit);
}

TEST_CASE("single framing reduces to the vertex function") {
  const auto s = test::points()[0];
  for (const auto& la : partitions_up_to(3)) {
    const auto p = single(7, 3, la);
    const auto ch = Chamber::from_order({0}, 1);
    const auto z = zfun_product(s, {la, 3});
    const auto moved = z.transformed(s, [](const ExpVec& e) {
      return std::pair{relabel(e, [](int c) { return c + 3; }), 0};
    });
    CHECK(vertex_limit_factorized(s, p, ch, 3) == moved);
    CHECK(chamber_limit_oracle(s, p, ch, 3) == moved);
  }
  const auto a1 = single(1, 0, Partition{1});
  const auto q = chamber_limit_oracle(s, a1, Chamber::from_order({0}, 1), 6);
  const auto brute = test::brute_qbinomial(s, Rational(1), 6);
  for (int d = 0; d <= 6; ++d) CHECK(q.coeff(d ? ExpVec{{0, d}} : ExpVec{}) == brute[static_cast<std::size_t>(d)]);
}

TEST_CASE("factorization at the figure fixed point") {
  const auto p = fig3();
  for (const auto& s : test::points()) {
    for (const auto& order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
      const auto ch = Chamber::from_order(order, 2);
      CHECK(chamber_limit_oracle(s, p, ch, 2) == vertex_limit_factorized(s, p, ch, 2));
    }
  }
  CHECK_THROWS_AS(chamber_limit_oracle(test::points()[0], p, Chamber::from_weights({2, 2}), 2), UnresolvedLimit);
}

TEST_CASE("factorization on small two-framing points") {
  const auto s = test::points()[1];
  for (int n : {2, 3}) {
    for (const auto& p : two_unit_fixed_points(n, 3)) {
      CAPTURE(p.to_json().dump());
      for (const auto& order : {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
        const auto ch = Chamber::from_order(order, 2);
        CHECK(chamber_limit_oracle(s, p, ch, 2) == vertex_limit_factorized(s, p, ch, 2));
      }
    }
  }
}

TEST_CASE("affine folding") {
  const auto s = test::points()[2];
  const auto p = single(2, 0, Partition{2}, true);
  CHECK(validate_fixed_point(p));
  const auto folded = vertex_limit_factorized(s, p, Chamber::from_order({0}, 1), 3);
  const auto z = zfun_product(s, {Partition{2}, 3});
  // Contents 0 and -1 land on vertices 0 and 1.
  const auto expect = z.transformed(s, [](const ExpVec& e) {
    return std::pair{relabel(e, [](int c) { return ((c % 2) + 2) % 2; }), 0};
  });
  CHECK(folded == expect);
  CHECK_THROWS_AS(chamber_limit_oracle(s, p, Chamber::from_order({0}, 1), 2), ConfigError);
}

TEST_CASE("mirror tangent character") {
  const auto one = mirror_tangent_character(single(1, 0, Partition{1}));
  CHECK(character_strings(one) == std::vector<std::string>{"z_0", "z_0^-1"});

  const auto big = mirror_tangent_character(single(4, 0, Partition{5, 4, 3, 2}, true));
  // A finite quiver wide enough to hold every content, corner at vertex 4.
  const auto line = single(9, 4, Partition{5, 4, 3, 2});
  const auto ch = mirror_tangent_character(line);
  CHECK(ch.size() == 28);
  CHECK(inversion_closed(ch));
  const ExpVec hook{{4, 1}, {5, 1}, {6, 1}, {7, 1}};
  CHECK(std::count(ch.begin(), ch.end(), hook) == 1);
  CHECK(std::count(ch.begin(), ch.end(), scale_exps(hook, -1)) == 1);
  CHECK(big.size() == 28);

  const auto f = mirror_tangent_character(fig3());
  CHECK(f.size() == 14);
  CHECK(inversion_closed(f));
  CHECK(mirror_tangent_character(fig3()) == f);
}
