#pragma once

// Fixed point data of a circle action with isolated fixed points: for each
// fixed point a sign and the multiset of (positive) weights of the isotropy
// representation on the tangent space.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "s1fix/error.hpp"

namespace s1fix {

using Weight = std::uint32_t;
using Json = nlohmann::ordered_json;

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }
Sign sign_from_int(long long value);  // throws BadSign unless value is +1 or -1

// One fixed point. Weights are kept sorted; every weight is >= 1.
class FixedPointDatum {
 public:
  FixedPointDatum(Sign sign, std::vector<Weight> weights);

  Sign sign() const noexcept { return sign_; }
  std::span<const Weight> weights() const noexcept { return weights_; }
  std::size_t arity() const noexcept { return weights_.size(); }
  bool contains(Weight w) const noexcept;

  FixedPointDatum reversed() const { return {-sign_, weights_}; }

  // Canonical order: '+' before '-', then weights lexicographically.
  std::strong_ordering operator<=>(const FixedPointDatum& other) const noexcept;
  bool operator==(const FixedPointDatum& other) const noexcept = default;

  std::string to_string() const;  // "(+,1,2)"

 private:
  Sign sign_;
  std::vector<Weight> weights_;
};

// A multiset of fixed points of common arity n (the manifold has dimension
// 2n), always held in canonical order. Empty data has arity 0.
class FixedPointData {
 public:
  FixedPointData() = default;
  explicit FixedPointData(std::vector<FixedPointDatum> points);

  const std::vector<FixedPointDatum>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t arity() const noexcept { return arity_; }

  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }
  const FixedPointDatum& operator[](std::size_t i) const { return points_[i]; }

  std::size_t count(const FixedPointDatum& p) const;
  Weight max_weight() const noexcept;  // 0 for empty data
  Weight min_weight() const noexcept;  // 0 for empty data

  std::strong_ordering operator<=>(const FixedPointData& other) const noexcept;
  bool operator==(const FixedPointData& other) const noexcept = default;

  std::string to_string() const;  // "{(+,1,2),(-,1,2)}"

 private:
  std::vector<FixedPointDatum> points_;
  std::size_t arity_ = 0;
};

// Sorts points into canonical order; throws MixedArity on unequal arities.
FixedPointData canonicalize(std::vector<FixedPointDatum> points);
inline FixedPointData canonicalize(const FixedPointData& data) { return data; }

enum class ValidationMode { General, EffectiveDim4 };

enum class ViolationCode { NonPositiveWeight, MixedArity, ArityNotTwo, NonEffectivePoint };
std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
  std::optional<std::size_t> index;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationCode code) const noexcept;
};

ValidationReport validate(const FixedPointData& data, ValidationMode mode);

FixedPointData reverse_orientation(const FixedPointData& data);

// Divides every weight by the gcd of all weights. Throws EmptyData.
FixedPointData make_effective(const FixedPointData& data);

// {"points":[{"sign":1,"weights":[1,2]},...]}
Json to_json(const FixedPointData& data);
FixedPointData data_from_json(const Json& json);
std::string serialize(const FixedPointData& data);
FixedPointData parse(std::string_view text);

Json parse_json_text(std::string_view text);  // throws Malformed with byte offset

}  // namespace s1fix

template <>
struct std::hash<s1fix::FixedPointData> {
  std::size_t operator()(const s1fix::FixedPointData& data) const noexcept;
};
