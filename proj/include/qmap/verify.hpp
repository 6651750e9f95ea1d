#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "qmap/anquiver.hpp"
#include "qmap/partitions.hpp"
#include "qmap/series.hpp"

namespace qmap {

/// The documented default (hbar, q) specialization points.
std::vector<std::pair<Rational, Rational>> default_points();

/// Rejects points that would put a pole into Pochhammer symbols in play:
/// zero parameters, q = +-1, and hbar = q^k for |k| <= max_power.
void check_point(const Rational& hbar, const Rational& q, int max_power);

/// Pole guard exponent for degree cap D and diagrams up to `max_hook`.
inline int guard_power(int degree, int max_hook) { return 2 * degree + max_hook; }

/// Points whose coordinates are ratios of distinct small primes, drawn from
/// one seeded generator and re-rolled until check_point passes.
std::vector<std::pair<Rational, Rational>> random_points(std::uint64_t seed, int count, int max_power);

struct VerifyOptions {
  std::vector<std::pair<Rational, Rational>> points;
  int degree = 4;
  int raw_degree = 3;    ///< the unreduced lattice sum is only run up to this cap
  int max_size = 5;
  int max_entry = 3;
  int order = 5;         ///< commutation order in w/z
  int max_boxes = 4;     ///< two-unit fixed points
  std::vector<Partition> extra;  ///< spot diagrams for the hook suite
  int extra_degree = 3;
};

struct VerificationReport {
  std::string check;
  nlohmann::ordered_json params;
  bool pass = true;
  std::optional<nlohmann::ordered_json> witness;  ///< present whenever pass is false
  std::size_t checks = 0;
  double seconds = 0;

  nlohmann::ordered_json to_json(bool with_timing) const;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws ConfigError for an unknown name.
std::vector<VerificationReport> run_suite(const std::string& name, const VerifyOptions& opt);

/// The figure fixed point: A_4, v = (1,3,2,1), w = (0,1,1,0).
FixedPoint figure_fixed_point();

/// One framing unit carrying `lambda` on the narrowest finite A_n that holds
/// all of its contents; the corner sits at vertex lambda_1 - 1.
FixedPoint single_unit_point(const Partition& lambda);

}  // namespace qmap
