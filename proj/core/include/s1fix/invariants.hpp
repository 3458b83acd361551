#pragma once

// Index-theoretic identities and counting constraints that any fixed point
// data of a circle action must satisfy, in arbitrary even dimension.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s1fix/core.hpp"
#include "s1fix/polynomial.hpp"

namespace s1fix {

// Sum of the signs.
std::int64_t signature(const FixedPointData& data);

// Clearing denominators in
//   sum_p sign(p) prod_i (1 + t^{w_p^i}) / (1 - t^{w_p^i})
// gives numerator N and common denominator D = prod_p prod_i (1 - t^{w_p^i}).
IntegerPolynomial series_numerator(const FixedPointData& data);
IntegerPolynomial series_denominator(const FixedPointData& data);

struct SeriesCheck {
  std::optional<std::int64_t> constant;   // set iff N == constant * D
  std::size_t first_mismatch_degree = 0;  // lowest degree of N - N(0) * D otherwise

  bool ok() const noexcept { return constant.has_value(); }
};

SeriesCheck signature_series_check(const FixedPointData& data);

// sum_p sign(p) * (multiplicity of the minimum weight at p). Throws EmptyData.
std::int64_t smallest_weight_balance(const FixedPointData& data);

struct ParityTable {
  std::map<Weight, std::size_t> multiplicity;  // weight -> occurrences over all points
  bool all_even = true;
};

ParityTable weight_parity_check(const FixedPointData& data);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct InvariantReport {
  std::int64_t signature = 0;
  std::optional<std::int64_t> series_constant;
  std::int64_t smallest_weight_balance = 0;
  ParityTable parity;
  std::size_t euler_characteristic = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const noexcept;
  const CheckResult* find(const std::string& name) const noexcept;
};

// Check names, shared with the decider's obstruction reporting.
namespace check_names {
inline constexpr const char* kSignatureIdentity = "signature_identity";
inline constexpr const char* kSmallestWeightBalance = "smallest_weight_balance";
inline constexpr const char* kWeightParity = "weight_parity";
inline constexpr const char* kOddCountDimension = "odd_count_dimension";
inline constexpr const char* kTwoPoints = "two_points";
inline constexpr const char* kUniformWeights = "uniform_weights";
inline constexpr const char* kSemiFree = "semi_free";
inline constexpr const char* kSignatureBound = "signature_bound";
}  // namespace check_names

// Runs every check above plus:
//   - an odd number of points forces an even arity (dimension divisible by 4);
//   - exactly two points carry equal weights and opposite signs;
//   - if every point has the same weights, the signature vanishes;
//   - semi-free data (all weights 1) has as many '+' as '-' points;
//   - for arity 2, |signature| <= k - 2 with k points.
// Euler characteristic is reported as the number of points.
InvariantReport structural_checks(const FixedPointData& data);

// Dimension-4 signature bound; vacuous for empty data.
bool signature_within_bound(const FixedPointData& data);

Json to_json(const InvariantReport& report);

}  // namespace s1fix
