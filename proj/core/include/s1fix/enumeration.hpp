#pragma once

// Bounded exhaustive generation of realizable dimension-4 fixed point data:
// the closure of the empty data under sphere addition and blow-up, restricted
// to at most K points and weights at most W. Both rewrites only increase the
// point count and the largest weight, so pruning at the bounds loses nothing.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "s1fix/core.hpp"
#include "s1fix/ops4.hpp"

namespace s1fix {

struct EnumerationBounds {
  std::size_t max_points = 0;
  Weight max_weight = 1;
};

// Every reachable canonical data set with the first trace that reached it.
// Entry 0 is the empty data.
class Corpus {
 public:
  struct Entry {
    FixedPointData data;
    std::optional<std::size_t> parent;
    ConstructionStep step;  // meaningless for the root
  };

  std::size_t size() const noexcept { return entries_.size(); }
  const Entry& operator[](std::size_t i) const { return entries_[i]; }
  const FixedPointData& data(std::size_t i) const { return entries_[i].data; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::optional<std::size_t> find(const FixedPointData& data) const;
  bool contains(const FixedPointData& data) const { return find(data).has_value(); }
  ConstructionTrace trace(std::size_t i) const;

  // Indices ordered by (point count, canonical data order).
  std::vector<std::size_t> canonical_order() const;

  // Insert-if-absent; returns true when the entry is new.
  bool insert(FixedPointData data, std::optional<std::size_t> parent, ConstructionStep step);

 private:
  std::vector<Entry> entries_;
  std::unordered_map<FixedPointData, std::size_t> index_;
};

// `jobs` > 1 expands each BFS level on that many threads; the result does not
// depend on it.
Corpus enumerate(const EnumerationBounds& bounds, unsigned jobs = 1);

// Every multiset of at most K signed coprime pairs with weights at most W,
// realizable or not, ordered by (point count, canonical order). Includes the
// empty data.
std::vector<FixedPointData> candidate_universe(const EnumerationBounds& bounds);

// Signatures of the entries with exactly k points.
std::set<std::int64_t> signature_spectrum(const Corpus& corpus, std::size_t k);
std::set<std::int64_t> signature_spectrum(std::size_t k, Weight max_weight);

enum class Family {
  MirroredPair,      // {(+,a,b),(-,a,b)}
  SingleBlowUp,      // +-{(-,a,b),(+,a,a+b),(+,b,a+b)}
  TwoMirroredPairs,  // {(+,a,b),(-,a,b),(+,c,d),(-,c,d)}
  DoubleBlowUp,      // +-{(-,a,b),(+,a,a+b),(+,b,a+2b),(+,a+b,a+2b)}
};
std::string_view to_string(Family family);

struct Classification {
  FixedPointData data;
  Family family;
  Sign orientation = Sign::Plus;  // '-' when the data is the reversal of the listed form
  std::vector<Weight> parameters; // a,b or a,b,c,d
  std::int64_t signature = 0;
};

// Pattern-matches data with 2, 3 or 4 points against the closed forms above.
// Returns every family that matches (at most one parameterization each).
std::vector<Classification> match_families(const FixedPointData& data);

// Classifies every k-point entry of enumerate({k, max_weight}); throws
// UnmatchedEntry if an entry matches no family or more than one.
std::vector<Classification> classify_small(std::size_t k, Weight max_weight);

Json to_json(const Classification& c);

}  // namespace s1fix
