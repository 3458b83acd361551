#include "s1fix/decider.hpp"

#include <algorithm>

#include "s1fix/invariants.hpp"

namespace s1fix {

namespace {

// Necessary conditions; the first failure names the obstruction.
std::optional<Obstruction> screen(const FixedPointData& data) {
  if (data.empty()) return std::nullopt;
  const ParityTable parity = weight_parity_check(data);
  if (!parity.all_even) {
    for (const auto& [w, m] : parity.multiplicity) {
      if (m % 2) {
        return Obstruction{check_names::kWeightParity,
                           "weight " + std::to_string(w) + " occurs " + std::to_string(m) + " times",
                           std::nullopt};
      }
    }
  }
  if (const auto balance = smallest_weight_balance(data); balance != 0) {
    return Obstruction{check_names::kSmallestWeightBalance,
                       "weight " + std::to_string(data.min_weight()) + " balance " + std::to_string(balance),
                       std::nullopt};
  }
  if (!signature_within_bound(data)) {
    return Obstruction{check_names::kSignatureBound,
                       "signature " + std::to_string(signature(data)) + " with " + std::to_string(data.size()) +
                           " points",
                       std::nullopt};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ConstructionTrace> Decider::reduce(const FixedPointData& data) {
  ++stats_.nodes;
  if (data.empty()) return ConstructionTrace{};
  if (unrealizable_.contains(data)) {
    ++stats_.memo_hits;
    return std::nullopt;
  }
  if (screen(data)) {
    unrealizable_.insert(data);
    return std::nullopt;
  }

  const Weight w = data.max_weight();
  if (w == 1) {
    const auto plus = std::count_if(data.begin(), data.end(),
                                    [](const FixedPointDatum& p) { return p.sign() == Sign::Plus; });
    const auto minus = static_cast<std::ptrdiff_t>(data.size()) - plus;
    if (plus != minus) {
      unrealizable_.insert(data);
      return std::nullopt;
    }
    return ConstructionTrace(static_cast<std::size_t>(plus), ConstructionStep::add_sphere(1, 1));
  }

  // Canonically first point carrying w. Coprimality and w > 1 give a < w.
  const auto p_it = std::find_if(data.begin(), data.end(), [w](const FixedPointDatum& p) { return p.contains(w); });
  const FixedPointDatum& p = *p_it;
  const Weight a = p.weights()[0];
  const std::size_t p_index = static_cast<std::size_t>(p_it - data.begin());

  bool tried_any = false;
  const FixedPointDatum* previous = nullptr;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i == p_index) continue;
    const FixedPointDatum& q = data[i];
    if (!q.contains(w)) continue;
    // Identical partners lead to identical reductions.
    if (previous && *previous == q) continue;
    previous = &q;

    const Weight b = q.weights()[0];
    std::optional<ConstructionTrace> sub;
    ConstructionStep step{};
    bool prepend = false;
    if (q.sign() == p.sign() && static_cast<std::uint64_t>(a) + b == w) {
      sub = reduce(blow_down(data, p, q));
      step = ConstructionStep::blow_up(p.sign(), a, b);
    } else if (q.sign() == -p.sign() && b == a) {
      sub = reduce(remove_sphere(data, a, w));
      step = ConstructionStep::add_sphere(a, w);
      prepend = true;
    } else {
      continue;
    }
    if (sub) {
      if (tried_any) ++stats_.late_partner_successes;
      if (prepend) sub->insert(sub->begin(), step);
      else sub->push_back(step);
      return sub;
    }
    tried_any = true;
  }
  failed_level_ = std::max(failed_level_, w);
  unrealizable_.insert(data);
  return std::nullopt;
}

Decision Decider::decide(const FixedPointData& data) {
  const ValidationReport report = validate(data, ValidationMode::EffectiveDim4);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(ErrorCode::ValidationFailed, std::string(to_string(v.code)) + ": " + v.message, v.index);
  }

  Decision decision;
  if (auto obstruction = screen(data)) {
    decision.obstruction = std::move(obstruction);
    return decision;
  }
  failed_level_ = 0;
  auto trace = reduce(data);
  decision.stats = stats_;
  if (trace) {
    decision.realizable = true;
    decision.trace = std::move(trace);
  } else {
    Obstruction o{kSearchExhausted, "", std::nullopt};
    if (failed_level_ > 0) {
      o.weight_level = failed_level_;
      o.detail = "no partner pairing at weight " + std::to_string(failed_level_) + " extends to a construction";
    } else {
      o.detail = "every reduction ends in unbalanced weight-1 data";
    }
    decision.obstruction = std::move(o);
  }
  return decision;
}

Decision decide(const FixedPointData& data) { return Decider{}.decide(data); }

bool verify_trace(const ConstructionTrace& trace, const FixedPointData& data) {
  try {
    return replay(trace) == data;
  } catch (const Error&) {
    return false;
  }
}

Json to_json(const Decision& decision) {
  Json j;
  j["realizable"] = decision.realizable;
  if (decision.trace) j["trace"] = to_json(*decision.trace);
  if (decision.obstruction) {
    Json o{{"check", decision.obstruction->check}, {"detail", decision.obstruction->detail}};
    if (decision.obstruction->weight_level) o["weight_level"] = *decision.obstruction->weight_level;
    j["obstruction"] = std::move(o);
  }
  return j;
}

}  // namespace s1fix
