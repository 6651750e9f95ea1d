#include "qmap/partitions.hpp"

#include <algorithm>
#include <cctype>

#include "qmap/errors.hpp"

namespace qmap {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
      throw ConfigError("not a partition: " + to_string());
    }
    size_ += parts_[k];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&](bool allow_empty) {
    if (cur.empty()) {
      if (!allow_empty) throw ConfigError("empty part in partition '" + std::string(text) + "'");
      return;
    }
    for (char c : cur) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ConfigError("bad part '" + cur + "' in partition '" + std::string(text) + "'");
      }
    }
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    any = true;
    if (c == ',') {
      flush(false);
    } else {
      cur.push_back(c);
    }
  }
  if (any) flush(false);
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int col = 1; col <= part(1); ++col) {
    int n = 0;
    while (n < length() && parts_[static_cast<std::size_t>(n)] >= col) ++n;
    c.push_back(n);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

bool interlaces(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length() + 1) return false;
  for (int k = 1; k <= mu.length() + 1; ++k) {
    if (mu.part(k) < lambda.part(k)) return false;
    if (lambda.part(k) < mu.part(k + 1)) return false;
  }
  return lambda.length() <= mu.length();
}

bool dominated_by(const Partition& mu, const Partition& lambda) {
  int a = 0, b = 0;
  const int n = std::max(mu.length(), lambda.length());
  for (int k = 1; k <= n; ++k) {
    a += mu.part(k);
    b += lambda.part(k);
    if (a > b) return false;
  }
  return true;
}

namespace {

// Weakly decreasing sequences of `len` parts, part k in [lo[k], hi[k]], sum <= budget.
void bounded_sequences(const std::vector<int>& lo, const std::vector<int>& hi, int budget,
                       const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t len = lo.size();
  std::vector<int> cur(len, 0);
  // Minimal completion cost from position k onward.
  std::vector<int> tail(len + 1, 0);
  for (std::size_t k = len; k-- > 0;) tail[k] = tail[k + 1] + lo[k];
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int cap, int left) {
    if (k == len) {
      fn(cur);
      return;
    }
    const int top = std::min({hi[k], cap, left - tail[k + 1]});
    for (int x = lo[k]; x <= top; ++x) {
      cur[k] = x;
      rec(k + 1, x, left - x);
    }
  };
  if (tail[0] <= budget) rec(0, budget, budget);
}

}  // namespace

void for_each_bounded_partition(int max_len, int max_part, int max_size,
                                const std::function<void(const Partition&)>& fn) {
  if (max_len < 0 || max_size < 0) return;
  std::vector<int> lo(static_cast<std::size_t>(max_len), 0);
  std::vector<int> hi(static_cast<std::size_t>(max_len), max_part);
  bounded_sequences(lo, hi, max_size, [&](const std::vector<int>& seq) { fn(Partition(seq)); });
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_bounded_partition(n, n, n, [&](const Partition& p) {
    if (p.size() == n) out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::vector<Partition> strips_above(const Partition& lambda, int max_added) {
  const int len = lambda.length() + 1;
  std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k) {
    lo[static_cast<std::size_t>(k - 1)] = lambda.part(k);
    hi[static_cast<std::size_t>(k - 1)] = k == 1 ? lambda.part(1) + max_added : lambda.part(k - 1);
  }
  std::vector<Partition> out;
  bounded_sequences(lo, hi, lambda.size() + max_added,
                    [&](const std::vector<int>& s) { out.emplace_back(s); });
  return out;
}

std::vector<Partition> strips_below(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> lo(static_cast<std::size_t>(len)), hi(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k) {
    lo[static_cast<std::size_t>(k - 1)] = lambda.part(k + 1);
    hi[static_cast<std::size_t>(k - 1)] = lambda.part(k);
  }
  std::vector<Partition> out;
  bounded_sequences(lo, hi, lambda.size(), [&](const std::vector<int>& s) { out.emplace_back(s); });
  return out;
}

std::vector<BoxCoord> boxes(const Partition& lambda) {
  std::vector<BoxCoord> out;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = 1; c <= lambda.part(r); ++c) out.push_back({r, c});
  }
  return out;
}

ColumnProfile::ColumnProfile(int lo, std::vector<int> counts) : lo_(lo), v_(std::move(counts)) {
  while (!v_.empty() && v_.back() == 0) v_.pop_back();
  while (!v_.empty() && v_.front() == 0) {
    v_.erase(v_.begin());
    ++lo_;
  }
  if (v_.empty()) lo_ = 0;
}

int ColumnProfile::total() const {
  int t = 0;
  for (int x : v_) t += x;
  return t;
}

nlohmann::ordered_json ColumnProfile::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int i = lo(); i <= hi(); ++i) j[std::to_string(i)] = (*this)[i];
  return j;
}

ColumnProfile column_profile(const Partition& lambda) {
  if (lambda.empty()) return {};
  const int lo = 1 - lambda.part(1);
  const int hi = lambda.length() - 1;
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& b : boxes(lambda)) ++v[static_cast<std::size_t>(content(b) - lo)];
  return {lo, std::move(v)};
}

int sigma_hat(const ColumnProfile& v, int i) { return v[i - 1] - v[i] + (i == 0 ? 1 : 0); }

Slope tau(const ColumnProfile& v, int i) {
  const int drop = v[i] - v[i + 1];
  if (i >= 0) return drop == 1 ? Slope::Plus : Slope::Minus;
  return drop == 0 ? Slope::Plus : Slope::Minus;
}

Hook hook(const Partition& lambda, BoxCoord b) {
  if (!lambda.contains(b.row, b.col)) {
    throw OutOfDiagram("box (" + std::to_string(b.row) + "," + std::to_string(b.col) +
                       ") is not in " + lambda.to_string());
  }
  int leg = 0;
  while (lambda.part(b.row + leg + 1) >= b.col) ++leg;
  return {lambda.part(b.row) - b.col, leg};
}

ZMonomial z_box(const Partition& lambda, BoxCoord b) {
  const Hook h = hook(lambda, b);
  const auto v = column_profile(lambda);
  ZMonomial m;
  for (int c = content(b) - h.arm; c <= content(b) + h.leg; ++c) {
    m.hq_exp += sigma_hat(v, c);
    m.z.emplace_back(c, 1);
  }
  return m;
}

std::vector<ZMonomial> l_char(const Partition& lambda) {
  std::vector<ZMonomial> out;
  for (const auto& b : boxes(lambda)) out.push_back(z_box(lambda, b));
  return out;
}

long dim_formula(const ColumnProfile& v) {
  long s = v[0];
  for (int i = v.lo() - 1; i <= v.hi(); ++i) {
    s += static_cast<long>(v[i]) * v[i + 1];
    s -= static_cast<long>(v[i]) * v[i];
  }
  return 2 * s;
}

int InterlacingTuple::total_size() const {
  int t = 0;
  for (const auto& p : parts_) t += p.size();
  return t;
}

ExpVec InterlacingTuple::degrees() const {
  ExpVec e;
  for (int i = lo(); i <= hi(); ++i) {
    if (at(i).size() > 0) e.emplace_back(i, at(i).size());
  }
  return e;
}

nlohmann::ordered_json InterlacingTuple::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (int i = lo(); i <= hi(); ++i) j[std::to_string(i)] = at(i).parts();
  return j;
}

bool in_shape(const Partition& lambda, const InterlacingTuple& t) {
  const auto v = column_profile(lambda);
  if (lambda.empty()) return t.parts().empty();
  if (t.lo() != v.lo() || t.hi() != v.hi()) return false;
  for (int i = t.lo(); i <= t.hi(); ++i) {
    if (t.at(i).length() > v[i]) return false;
    if (i == t.hi()) continue;
    const bool ok = tau(v, i) == Slope::Plus ? interlaces(t.at(i), t.at(i + 1))
                                             : interlaces(t.at(i + 1), t.at(i));
    if (!ok) return false;
  }
  return true;
}

void for_each_interlacing(const Partition& lambda, const EnumerationBounds& bounds,
                          const std::function<void(const InterlacingTuple&)>& fn) {
  if (lambda.empty()) {
    fn(InterlacingTuple{});
    return;
  }
  const auto v = column_profile(lambda);
  const int budget = bounds.max_degree;
  const int entry_cap = bounds.max_entry.value_or(budget);
  std::vector<Partition> cols;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i > v.hi()) {
      fn(InterlacingTuple(v.lo(), cols));
      return;
    }
    const int len = v[i];
    std::vector<int> lo(static_cast<std::size_t>(len), 0);
    std::vector<int> hi(static_cast<std::size_t>(len), entry_cap);
    if (i > v.lo()) {
      const Partition& prev = cols.back();
      for (int k = 1; k <= len; ++k) {
        auto& l = lo[static_cast<std::size_t>(k - 1)];
        auto& h = hi[static_cast<std::size_t>(k - 1)];
        if (tau(v, i - 1) == Slope::Plus) {
          // prev > this: prev_{k+1} <= this_k <= prev_k.
          l = prev.part(k + 1);
          h = std::min(h, prev.part(k));
        } else {
          // this > prev: prev_k <= this_k <= prev_{k-1}.
          l = prev.part(k);
          if (k > 1) h = std::min(h, prev.part(k - 1));
        }
      }
      // Parts of prev beyond this column's length must still interlace.
      if (tau(v, i - 1) == Slope::Plus && prev.length() > len + 1) return;
      if (tau(v, i - 1) == Slope::Minus && prev.length() > len) return;
    }
    bounded_sequences(lo, hi, left, [&](const std::vector<int>& seq) {
      cols.emplace_back(seq);
      rec(i + 1, left - cols.back().size());
      cols.pop_back();
    });
  };
  rec(v.lo(), budget);
}

std::vector<InterlacingTuple> enumerate_interlacing(const Partition& lambda, int max_degree) {
  std::vector<InterlacingTuple> out;
  for_each_interlacing(lambda, {max_degree, std::nullopt},
                       [&](const InterlacingTuple& t) { out.push_back(t); });
  return out;
}

std::pair<long, long> lemma_sum(const Partition& lambda, const InterlacingTuple& t) {
  if (lambda.empty()) return {0, 0};
  const auto v = column_profile(lambda);
  long lhs = 0;
  for (int i = v.lo(); i < v.hi(); ++i) {
    const Partition& a = t.at(i);
    const Partition& b = t.at(i + 1);
    const bool weak = tau(v, i) == Slope::Plus;
    for (int j = 1; j <= v[i]; ++j) {
      for (int k = 1; k <= v[i + 1]; ++k) {
        if (weak ? j <= k : j < k) lhs += a.part(j) - b.part(k);
      }
    }
  }
  for (int i = v.lo(); i <= v.hi(); ++i) {
    const Partition& a = t.at(i);
    for (int j = 1; j <= v[i]; ++j) {
      for (int k = j + 1; k <= v[i]; ++k) lhs += a.part(k) - a.part(j);
    }
  }
  long rhs = 0;
  for (int i = v.lo(); i <= v.hi(); ++i) rhs -= static_cast<long>(sigma_hat(v, i)) * t.at(i).size();
  return {lhs, rhs};
}

}  // namespace qmap
