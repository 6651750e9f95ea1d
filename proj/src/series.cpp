#include "qmap/series.hpp"

#include <algorithm>

namespace qmap {

int total_degree(const ExpVec& e) {
  int d = 0;
  for (const auto& [i, k] : e) d += k;
  return d;
}

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  r.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      r.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      r.push_back(*ib++);
    } else {
      r.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return r;
}

ExpVec scale_exps(const ExpVec& e, int k) {
  if (k == 0) return {};
  ExpVec r = e;
  for (auto& [i, d] : r) d *= k;
  return r;
}

std::string exps_to_string(const ExpVec& e) {
  if (e.empty()) return "1";
  std::string s;
  for (const auto& [i, d] : e) {
    if (!s.empty()) s += "*";
    s += "z_" + std::to_string(i);
    if (d != 1) s += "^" + std::to_string(d);
  }
  return s;
}

TruncatedSeries<Rational> series_from_json(const nlohmann::json& j) {
  TruncatedSeries<Rational> s(j.at("cap").get<int>());
  for (const auto& t : j.at("terms")) {
    ExpVec e;
    for (const auto& [k, v] : t.at("z").items()) e.emplace_back(std::stoi(k), v.get<int>());
    std::sort(e.begin(), e.end());
    s.add(e, Rational::parse(t.at("coeff").get<std::string>()));
  }
  return s;
}

TruncatedSeries<Rational> specialize(const TruncatedSeries<RatFunc>& s, const Rational& hbar,
                                     const Rational& q) {
  TruncatedSeries<Rational> r(s.cap());
  for (const auto& [e, c] : s.terms()) r.add(e, c.evaluate(hbar, q));
  return r;
}

}  // namespace qmap
