#pragma once

// Realizability of dimension-4 fixed point data.
//
// The data is reduced one step at a time at its largest weight w > 1. The
// canonically first point p = (s,{a,w}) must share an isotropy 2-sphere with
// some partner q that also carries w: either q = (s,{b,w}) with a + b = w,
// in which case p and q come from blowing up (s,{a,b}), or q = (-s,{a,w}),
// in which case p and q are the poles of a rotated 4-sphere summand. Partner
// choices are backtracked; once only weight 1 is left, the data is realizable
// iff the signs balance.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>

#include "s1fix/core.hpp"
#include "s1fix/ops4.hpp"

namespace s1fix {

struct Obstruction {
  std::string check;   // a check_names value, or "search_exhausted"
  std::string detail;
  std::optional<Weight> weight_level;  // set for search_exhausted
};

struct SearchStats {
  std::size_t nodes = 0;           // reduction states visited
  std::size_t memo_hits = 0;
  std::size_t late_partner_successes = 0;  // first partner failed, a later one worked
};

struct Decision {
  bool realizable = false;
  std::optional<ConstructionTrace> trace;  // present iff realizable
  std::optional<Obstruction> obstruction;  // present iff not realizable
  SearchStats stats;
};

inline constexpr const char* kSearchExhausted = "search_exhausted";

// Per-call search state: canonical forms already shown to be unrealizable.
class Decider {
 public:
  // Throws ValidationFailed unless `data` is effective dimension-4 data.
  Decision decide(const FixedPointData& data);

 private:
  std::optional<ConstructionTrace> reduce(const FixedPointData& data);

  std::unordered_set<FixedPointData> unrealizable_;
  SearchStats stats_;
  Weight failed_level_ = 0;
};

Decision decide(const FixedPointData& data);

// True iff the trace replays to exactly `data`.
bool verify_trace(const ConstructionTrace& trace, const FixedPointData& data);

Json to_json(const Decision& decision);

}  // namespace s1fix
