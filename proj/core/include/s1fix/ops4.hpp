#pragma once

// Rewrites on dimension-4 fixed point data. Starting from no fixed points,
// adding rotated 4-spheres and blowing up fixed points generates exactly the
// realizable data; a ConstructionTrace records one such derivation.

#include <cstddef>
#include <string>
#include <vector>

#include "s1fix/core.hpp"

namespace s1fix {

struct ConstructionStep {
  enum class Kind { AddSphere, BlowUp };

  Kind kind;
  Sign sign = Sign::Plus;  // BlowUp only
  Weight a;                // a <= b after construction through the factories
  Weight b;

  static ConstructionStep add_sphere(Weight a, Weight b);
  static ConstructionStep blow_up(Sign sign, Weight a, Weight b);

  bool operator==(const ConstructionStep&) const = default;
  std::string to_string() const;
};

using ConstructionTrace = std::vector<ConstructionStep>;

// Adds {(+,a,b),(-,a,b)}. Throws NotCoprime unless gcd(a, b) = 1.
FixedPointData add_sphere(const FixedPointData& data, Weight a, Weight b);

// Replaces one copy of `point` = (s,{a,b}) by (s,{a,a+b}) and (s,{b,a+b}).
// Throws PointNotPresent, ArityMismatch for non-pairs, Overflow if a+b wraps.
FixedPointData blow_up(const FixedPointData& data, const FixedPointDatum& point);

// Inverse of blow_up: p1 = (s,{a,w}), p2 = (s,{b,w}) with a + b = w become
// (s,{a,b}). Throws PairInvalid or PointNotPresent.
FixedPointData blow_down(const FixedPointData& data, const FixedPointDatum& p1, const FixedPointDatum& p2);

// Removes (+,{a,w}) and (-,{a,w}). Throws PairNotPresent.
FixedPointData remove_sphere(const FixedPointData& data, Weight a, Weight w);

// Union of the two data sets, each reversed first when its orientation is '-'.
// Throws ArityMismatch unless the arities agree or one side is empty.
FixedPointData equivariant_sum(const FixedPointData& first, Sign first_orientation,
                               const FixedPointData& second, Sign second_orientation);

FixedPointData apply(const FixedPointData& data, const ConstructionStep& step);

// Folds the trace from empty data. Throws StepInapplicable carrying the
// index of the first step that cannot be applied.
FixedPointData replay(const ConstructionTrace& trace);

Json to_json(const ConstructionStep& step);
Json to_json(const ConstructionTrace& trace);
ConstructionStep step_from_json(const Json& json);
ConstructionTrace trace_from_json(const Json& json);
std::string serialize(const ConstructionTrace& trace);
ConstructionTrace parse_trace(std::string_view text);

}  // namespace s1fix
