#include <doctest.h>

#include <set>

#include "qmap/partitions.hpp"

using namespace qmap;

namespace {

// mu_1 >= lambda_1 >= mu_2 >= ..., written out from the definition.
bool above(const Partition& mu, const Partition& lambda) {
  const int n = std::max(mu.length(), lambda.length()) + 1;
  for (int k = 1; k <= n; ++k) {
    if (mu.part(k) < lambda.part(k)) return false;
    if (lambda.part(k) < mu.part(k + 1)) return false;
  }
  return true;
}

// Every partition with at most `len` parts, each at most `maxp`.
std::vector<Partition> boxed(int len, int maxp) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int k, int bound) -> void {
    out.emplace_back(cur);
    if (k == len) return;
    for (int x = 1; x <= bound; ++x) {
      cur.push_back(x);
      self(self, k + 1, x);
      cur.pop_back();
    }
  };
  rec(rec, 0, maxp);
  return out;
}

// Brute-force S_lambda: all tuples with l(lambda^i) <= v_i and parts <= maxp,
// filtered by the slope conditions.
std::set<std::vector<Partition>> brute_shape(const Partition& lambda, int maxp, int maxdeg) {
  const auto v = column_profile(lambda);
  std::vector<std::vector<Partition>> choices;
  for (int i = v.lo(); i <= v.hi(); ++i) choices.push_back(boxed(v[i], maxp));
  std::set<std::vector<Partition>> out;
  std::vector<Partition> cur;
  auto rec = [&](auto&& self, std::size_t c, int deg) -> void {
    if (deg > maxdeg) return;
    if (c == choices.size()) {
      for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
        const int i = v.lo() + static_cast<int>(k);
        const bool plus = i >= 0 ? v[i] - v[i + 1] == 1 : v[i] == v[i + 1];
        if (plus ? !above(cur[k], cur[k + 1]) : !above(cur[k + 1], cur[k])) return;
      }
      out.insert(cur);
      return;
    }
    for (const auto& p : choices[c]) {
      cur.push_back(p);
      self(self, c + 1, deg + p.size());
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

TEST_CASE("partition parsing and validation") {
  CHECK(Partition::parse("5,4,3,2") == Partition{5, 4, 3, 2});
  CHECK(Partition::parse("").empty());
  CHECK(Partition{2, 1, 0}.length() == 2);
  CHECK_THROWS_AS(Partition({1, 2}), ConfigError);
  CHECK_THROWS_AS(Partition::parse("a,1"), ConfigError);
  CHECK(Partition{5, 4, 3, 2}.to_string() == "(5,4,3,2)");
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{5, 4, 3, 2}.part(7) == 0);
}

TEST_CASE("partition enumeration counts") {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(p[n]));
  CHECK(partitions_of(3) == std::vector<Partition>{{1, 1, 1}, {2, 1}, {3}});
  CHECK(partitions_up_to(3).size() == 7);
}

TEST_CASE("interlacing and dominance") {
  CHECK(interlaces({2, 1}, {1}));
  CHECK(interlaces({2}, {1}));
  CHECK_FALSE(interlaces({1, 1}, {2}));
  CHECK_FALSE(interlaces({1, 1, 1}, {1}));
  for (const auto& mu : partitions_up_to(5))
    for (const auto& la : partitions_up_to(5)) CHECK(interlaces(mu, la) == above(mu, la));
  CHECK(dominated_by({1, 1}, {2}));
  CHECK_FALSE(dominated_by({3, 1, 1, 1}, {2, 2, 2}));
  CHECK_FALSE(dominated_by({2, 2, 2}, {3, 1, 1, 1}));
  for (const auto& la : partitions_up_to(4)) {
    for (const auto& mu : strips_above(la, 3)) CHECK(above(mu, la));
    for (const auto& mu : strips_below(la)) CHECK(above(la, mu));
  }
  CHECK(strips_above({}, 2).size() == 3);
  CHECK(strips_below({2, 1}).size() == 4);
}

TEST_CASE("column profile") {
  const auto v = column_profile({5, 4, 3, 2});
  CHECK(v.lo() == -4);
  CHECK(v.hi() == 3);
  const int expect[] = {1, 1, 2, 2, 3, 2, 2, 1};
  for (int i = -4; i <= 3; ++i) CHECK(v[i] == expect[i + 4]);
  CHECK(v[-5] == 0);
  CHECK(v[4] == 0);

  const auto one = column_profile({1});
  CHECK(one.lo() == 0);
  CHECK(one.hi() == 0);
  CHECK(one[0] == 1);

  const auto v21 = column_profile({2, 1});
  CHECK(v21[-1] == 1);
  CHECK(v21[0] == 1);
  CHECK(v21[1] == 1);
}

TEST_CASE("sigma-hat and tau") {
  const Partition big{5, 4, 3, 2};
  CHECK(sigma_hat(big, 0) == 0);
  CHECK(sigma_hat(big, 1) == 1);
  CHECK(sigma_hat(big, 2) == 0);
  CHECK(sigma_hat(big, 3) == 1);
  CHECK(sigma_hat(Partition{1}, 0) == 0);
  CHECK(sigma_hat(Partition{2, 1}, -1) == -1);

  std::string slopes;
  for (int i = -4; i <= 3; ++i) slopes += slope_char(tau(big, i));
  CHECK(slopes == "+-+-+-++");
  CHECK(tau(Partition{1}, 0) == Slope::Plus);
  CHECK(tau(Partition{1}, -1) == Slope::Minus);
}

TEST_CASE("hooks and shifted monomials") {
  const Partition big{5, 4, 3, 2};
  const auto m = z_box(big, {3, 1});
  CHECK(m.hq_exp == 2);
  CHECK(m.z == ExpVec{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(z_box(Partition{1}, {1, 1}) == ZMonomial::var(0));
  const auto corner = z_box(Partition{2, 1}, {1, 1});
  CHECK(corner.z == ExpVec{{-1, 1}, {0, 1}, {1, 1}});
  CHECK(corner.hq_exp == sigma_hat(Partition{2, 1}, -1) + sigma_hat(Partition{2, 1}, 0) +
                             sigma_hat(Partition{2, 1}, 1));
  CHECK_THROWS_AS(z_box(big, {1, 6}), OutOfDiagram);

  CHECK(l_char({}).empty());
  CHECK(l_char({1}) == std::vector<ZMonomial>{ZMonomial::var(0)});
  // (2): hooks {(1,1),(1,2)} and {(1,2)}, contents {-1,0} and {-1}.
  CHECK(l_char({2}) == std::vector<ZMonomial>{ZMonomial{0, {{-1, 1}, {0, 1}}}, ZMonomial{-1, {{-1, 1}}}});
  CHECK(l_char(big).size() == 14);

  for (const auto& la : partitions_up_to(6)) {
    const auto v = column_profile(la);
    std::map<int, int> total;
    for (const auto& b : boxes(la)) {
      const auto h = hook(la, b);
      const auto zb = z_box(la, b);
      CHECK(zb.degree() == h.size());
      CHECK(zb.z.front().first == content(b) - h.arm);
      CHECK(zb.z.back().first == content(b) + h.leg);
      for (const auto& [i, d] : zb.z) total[i] += d;
    }
    // Boxes of column i covered by hooks, counted box by box.
    std::map<int, int> direct;
    for (const auto& b : boxes(la)) {
      for (const auto& b2 : boxes(la)) {
        const bool in_hook = (b2.row == b.row && b2.col >= b.col) || (b2.col == b.col && b2.row > b.row);
        if (in_hook) direct[content(b2)] += 1;
      }
    }
    CHECK(total == direct);
  }
}

TEST_CASE("profiles are zero-dimensional") {
  for (const auto& la : partitions_up_to(8)) {
    const auto v = column_profile(la);
    CHECK(v.total() == la.size());
    CHECK(dim_formula(v) == 0);
  }
  CHECK(dim_formula(ColumnProfile(0, {2})) == -4);
}

TEST_CASE("interlacing tuple enumeration") {
  const auto t1 = enumerate_interlacing({1}, 2);
  REQUIRE(t1.size() == 3);
  CHECK(t1[0].at(0).empty());
  CHECK(t1[2].at(0) == Partition{2});

  const auto t11 = enumerate_interlacing({1, 1}, 1);
  REQUIRE(t11.size() == 2);
  // Contents 0 and 1, slope - between them: lambda^0 < lambda^1.
  CHECK(t11[0].at(0).empty());
  CHECK(t11[1].at(0).empty());
  CHECK(t11[1].at(1) == Partition{1});

  for (const auto& la : partitions_up_to(5)) {
    CHECK(enumerate_interlacing(la, 0).size() == 1);
    std::set<std::vector<Partition>> got;
    for_each_interlacing(la, {4, 2}, [&](const InterlacingTuple& t) {
      CHECK(in_shape(la, t));
      CHECK(got.insert(t.parts()).second);
    });
    CHECK(got == brute_shape(la, 2, 4));
  }
}

TEST_CASE("slope lemma, exhaustive") {
  for (const auto& la : partitions_up_to(5)) {
    std::size_t n = 0;
    for_each_interlacing(la, {1000, 3}, [&](const InterlacingTuple& t) {
      const auto [lhs, rhs] = lemma_sum(la, t);
      CHECK(lhs == rhs);
      ++n;
    });
    CHECK(n >= 1);
  }
  const auto [l0, r0] = lemma_sum({1, 1}, InterlacingTuple(0, {Partition{}, Partition{1}}));
  CHECK(l0 == r0);
}
