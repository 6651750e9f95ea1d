#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmap/series.hpp"

namespace qmap {

/// A Young diagram: weakly decreasing positive parts. Parts past the length
/// read as 0.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws ConfigError if not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Comma-separated parts, e.g. "5,4,3,2"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  /// 1-based part; 0 beyond the length.
  int part(int k) const { return k >= 1 && k <= length() ? parts_[static_cast<std::size_t>(k - 1)] : 0; }
  bool contains(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }

  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// mu interlaces lambda from above: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...
bool interlaces(const Partition& mu, const Partition& lambda);
/// mu <= lambda in dominance order (equal sizes assumed).
bool dominated_by(const Partition& mu, const Partition& lambda);

/// All partitions of n in increasing lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions of size <= n, grouped by size then lexicographic.
std::vector<Partition> partitions_up_to(int n);
/// Partitions with at most `max_len` parts, each at most `max_part`, size at most `max_size`.
void for_each_bounded_partition(int max_len, int max_part, int max_size,
                                const std::function<void(const Partition&)>& fn);

/// Horizontal strips: every mu with mu > lambda (interlacing from above)
/// and |mu| - |lambda| <= max_added.
std::vector<Partition> strips_above(const Partition& lambda, int max_added);
/// Every mu with mu < lambda.
std::vector<Partition> strips_below(const Partition& lambda);

struct BoxCoord {
  int row = 1;
  int col = 1;
  friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
};

/// Content with the corner box at 0, increasing down the first column.
inline int content(BoxCoord b) { return b.row - b.col; }

std::vector<BoxCoord> boxes(const Partition& lambda);

/// Box counts per content v_i, supported on [-r, s].
class ColumnProfile {
 public:
  ColumnProfile() = default;
  /// Counts from index `lo` upward.
  ColumnProfile(int lo, std::vector<int> counts);

  int operator[](int i) const {
    const int k = i - lo_;
    return k >= 0 && k < static_cast<int>(v_.size()) ? v_[static_cast<std::size_t>(k)] : 0;
  }
  /// Leftmost and rightmost nonzero index (-r and s). Empty profile: lo > hi.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(v_.size()) - 1; }
  int total() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const ColumnProfile&, const ColumnProfile&) = default;

 private:
  int lo_ = 0;
  std::vector<int> v_;
};

ColumnProfile column_profile(const Partition& lambda);

/// sigma-hat(i) = v_{i-1} - v_i, plus 1 at i = 0.
int sigma_hat(const ColumnProfile& v, int i);
inline int sigma_hat(const Partition& lambda, int i) { return sigma_hat(column_profile(lambda), i); }
/// sigma(i) = v_{i-1} - v_i without the corner correction.
inline int sigma(const ColumnProfile& v, int i) { return v[i - 1] - v[i]; }

enum class Slope { Plus, Minus };
inline char slope_char(Slope s) { return s == Slope::Plus ? '+' : '-'; }

/// Boundary slope sign: + iff (i >= 0 and v_i - v_{i+1} = 1) or (i < 0 and v_i = v_{i+1}).
Slope tau(const ColumnProfile& v, int i);
inline Slope tau(const Partition& lambda, int i) { return tau(column_profile(lambda), i); }

struct Hook {
  int arm = 0;
  int leg = 0;
  int size() const { return arm + leg + 1; }
};
Hook hook(const Partition& lambda, BoxCoord b);

/// z_box = prod over the hook's contents of (hbar/q)^{sigma-hat(c)} z_c.
ZMonomial z_box(const Partition& lambda, BoxCoord b);
/// One z_box per box of lambda, row-major.
std::vector<ZMonomial> l_char(const Partition& lambda);

/// dim = 2 (v_0 + sum v_i v_{i+1} - sum v_i^2).
long dim_formula(const ColumnProfile& v);

/// A tuple of partitions (lambda^{lo}, ..., lambda^{hi}), one per column.
class InterlacingTuple {
 public:
  InterlacingTuple() = default;
  InterlacingTuple(int lo, std::vector<Partition> parts) : lo_(lo), parts_(std::move(parts)) {}

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(parts_.size()) - 1; }
  const Partition& at(int i) const { return parts_.at(static_cast<std::size_t>(i - lo_)); }
  const std::vector<Partition>& parts() const { return parts_; }
  int total_size() const;
  /// z-exponent vector d_i = |lambda^i|.
  ExpVec degrees() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const InterlacingTuple&, const InterlacingTuple&) = default;

 private:
  int lo_ = 0;
  std::vector<Partition> parts_;
};

/// True iff t interlaces according to the shape of lambda.
bool in_shape(const Partition& lambda, const InterlacingTuple& t);

struct EnumerationBounds {
  int max_degree = 0;                    ///< bound on sum_i |lambda^i|
  std::optional<int> max_entry;          ///< bound on every part, if set
};

/// Streams every tuple of S_lambda within the bounds exactly once, in a
/// deterministic order (column by column from the left, parts lexicographic).
void for_each_interlacing(const Partition& lambda, const EnumerationBounds& bounds,
                          const std::function<void(const InterlacingTuple&)>& fn);
std::vector<InterlacingTuple> enumerate_interlacing(const Partition& lambda, int max_degree);

/// Both sides of the slope identity used to match the Macdonald matrix
/// element with the vertex sum:
///   lhs = sum_i sum_j sum_{k : j <_{tau(i)} k} (lambda^i_j - lambda^{i+1}_k)
///         + sum_i sum_{j<k} (lambda^i_k - lambda^i_j)
///   rhs = -sum_i sigma-hat(i) |lambda^i|
std::pair<long, long> lemma_sum(const Partition& lambda, const InterlacingTuple& t);

}  // namespace qmap
