#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qmap/partitions.hpp"
#include "qmap/series.hpp"

namespace qmap {

/// A_n quiver with vertices 0..n-1 and arrows i -> i+1 (plus n-1 -> 0 if affine).
struct QuiverSpec {
  int n = 1;
  bool affine = false;
  std::vector<int> v;
  std::vector<int> w;
};

/// One framing unit: a partition whose corner box sits over `vertex`.
struct FramedPartition {
  int vertex = 0;
  Partition lambda;
};

struct FixedPoint {
  QuiverSpec quiver;
  std::vector<FramedPartition> units;

  /// {"n", "affine", "v", "w", "partitions": [{"vertex", "parts"}]}. Throws
  /// ConfigError on malformed input.
  static FixedPoint from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  /// Quiver vertex of content c for unit k (reduced mod n when affine; may
  /// fall outside [0, n) for finite quivers).
  int color(std::size_t k, int c) const;
  int total_boxes() const;
};

/// True iff framing units match w and the box colors match v.
bool validate_fixed_point(const FixedPoint& p);
/// Throws InvalidFixedPoint naming the first failing vertex.
void require_valid(const FixedPoint& p);

/// A cocharacter a_k = t^{weight_k} on the framing units. mu < lambda in the
/// chamber iff a_mu / a_lambda -> 0, i.e. weight_mu > weight_lambda.
class Chamber {
 public:
  /// `order` lists unit indices from smallest to largest. Throws ConfigError
  /// unless it is a permutation of 0..units-1.
  static Chamber from_order(const std::vector<int>& order, std::size_t units);
  /// Raw weights; ties are allowed here and surface as UnresolvedLimit.
  static Chamber from_weights(std::vector<int> weights) { return Chamber(std::move(weights)); }

  int weight(std::size_t k) const { return weights_.at(k); }
  std::size_t size() const { return weights_.size(); }
  bool precedes(std::size_t a, std::size_t b) const { return weights_.at(a) > weights_.at(b); }

 private:
  explicit Chamber(std::vector<int> w) : weights_(std::move(w)) {}
  std::vector<int> weights_;
};

/// Exponent of hbar/q in the shifted variable z_i^# for unit k at vertex i.
int nu_shift(const FixedPoint& p, std::size_t k, int vertex, const Chamber& chamber);

/// Product over units of the hook-product vertex function, with content c of
/// unit k mapped to vertex color(k, c) and shifted by nu_shift.
template <ExactField F>
TruncatedSeries<F> vertex_limit_factorized(const Scalars<F>& s, const FixedPoint& p,
                                           const Chamber& chamber, int cap);

/// Lattice sum over Grothendieck-root shifts with every cross-unit Pochhammer
/// ratio replaced by its chamber limit. Finite quivers only.
template <ExactField F>
TruncatedSeries<F> chamber_limit_oracle(const Scalars<F>& s, const FixedPoint& p,
                                        const Chamber& chamber, int cap);

/// Laurent monomials in the vertex variables; exponents may be negative.
using KCharacter = std::vector<ExpVec>;

/// Every box monomial at hbar = q and its inverse, sorted.
KCharacter mirror_tangent_character(const FixedPoint& p);
std::vector<std::string> character_strings(const KCharacter& ch);
bool inversion_closed(const KCharacter& ch);

/// Every valid two-unit fixed point on finite A_n with at most `max_boxes`
/// boxes in total.
std::vector<FixedPoint> two_unit_fixed_points(int n, int max_boxes);

}  // namespace qmap
