#include "s1fix/ops4.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace s1fix {

ConstructionStep ConstructionStep::add_sphere(Weight a, Weight b) {
  return {Kind::AddSphere, Sign::Plus, std::min(a, b), std::max(a, b)};
}

ConstructionStep ConstructionStep::blow_up(Sign sign, Weight a, Weight b) {
  return {Kind::BlowUp, sign, std::min(a, b), std::max(a, b)};
}

std::string ConstructionStep::to_string() const {
  if (kind == Kind::AddSphere) {
    return "AddSphere(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return std::string("BlowUp(") + to_char(sign) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

std::vector<FixedPointDatum> copy_points(const FixedPointData& data) {
  return {data.points().begin(), data.points().end()};
}

bool erase_one(std::vector<FixedPointDatum>& points, const FixedPointDatum& p) {
  auto it = std::find(points.begin(), points.end(), p);
  if (it == points.end()) return false;
  points.erase(it);
  return true;
}

void require_dim4(const FixedPointData& data, const char* what) {
  if (!data.empty() && data.arity() != 2) {
    throw Error(ErrorCode::ArityMismatch, std::string(what) + " needs arity-2 data, got arity " +
                                              std::to_string(data.arity()));
  }
}

Weight checked_sum(Weight a, Weight b) {
  if (a > std::numeric_limits<Weight>::max() - b) {
    throw Error(ErrorCode::Overflow, "weight sum " + std::to_string(a) + "+" + std::to_string(b) + " overflows");
  }
  return a + b;
}

}  // namespace

FixedPointData add_sphere(const FixedPointData& data, Weight a, Weight b) {
  require_dim4(data, "add_sphere");
  if (a == 0 || b == 0) throw Error(ErrorCode::NonPositiveWeight, "sphere weights must be positive");
  if (std::gcd(a, b) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "sphere weights " + std::to_string(a) + "," + std::to_string(b) + " are not coprime");
  }
  auto points = copy_points(data);
  points.emplace_back(Sign::Plus, std::vector<Weight>{a, b});
  points.emplace_back(Sign::Minus, std::vector<Weight>{a, b});
  return FixedPointData(std::move(points));
}

FixedPointData blow_up(const FixedPointData& data, const FixedPointDatum& point) {
  if (point.arity() != 2) throw Error(ErrorCode::ArityMismatch, "blow-up is defined for arity-2 points only");
  auto points = copy_points(data);
  if (!erase_one(points, point)) {
    throw Error(ErrorCode::PointNotPresent, point.to_string() + " is not a fixed point of " + data.to_string());
  }
  const Weight a = point.weights()[0];
  const Weight b = point.weights()[1];
  const Weight w = checked_sum(a, b);
  points.emplace_back(point.sign(), std::vector<Weight>{a, w});
  points.emplace_back(point.sign(), std::vector<Weight>{b, w});
  return FixedPointData(std::move(points));
}

FixedPointData blow_down(const FixedPointData& data, const FixedPointDatum& p1, const FixedPointDatum& p2) {
  if (p1.arity() != 2 || p2.arity() != 2) throw Error(ErrorCode::PairInvalid, "blow-down needs arity-2 points");
  if (p1.sign() != p2.sign()) {
    throw Error(ErrorCode::PairInvalid, p1.to_string() + " and " + p2.to_string() + " have opposite signs");
  }
  // Find the shared weight w = a + b; try each weight of p1 as w.
  std::optional<std::pair<Weight, Weight>> remaining;
  for (int i = 0; i < 2 && !remaining; ++i) {
    const Weight w = p1.weights()[i];
    const Weight a = p1.weights()[1 - i];
    for (int j = 0; j < 2; ++j) {
      if (p2.weights()[j] != w) continue;
      const Weight b = p2.weights()[1 - j];
      if (static_cast<std::uint64_t>(a) + b == w) {
        remaining = {a, b};
        break;
      }
    }
  }
  if (!remaining) {
    throw Error(ErrorCode::PairInvalid,
                p1.to_string() + " and " + p2.to_string() + " do not arise from a blow-up");
  }
  auto points = copy_points(data);
  if (!erase_one(points, p1) || !erase_one(points, p2)) {
    throw Error(ErrorCode::PointNotPresent,
                "pair " + p1.to_string() + "," + p2.to_string() + " not present in " + data.to_string());
  }
  points.emplace_back(p1.sign(), std::vector<Weight>{remaining->first, remaining->second});
  return FixedPointData(std::move(points));
}

FixedPointData remove_sphere(const FixedPointData& data, Weight a, Weight w) {
  auto points = copy_points(data);
  const FixedPointDatum plus(Sign::Plus, {a, w});
  const FixedPointDatum minus(Sign::Minus, {a, w});
  if (!erase_one(points, plus) || !erase_one(points, minus)) {
    throw Error(ErrorCode::PairNotPresent, "mirrored pair " + plus.to_string() + "," + minus.to_string() +
                                               " not present in " + data.to_string());
  }
  return FixedPointData(std::move(points));
}

FixedPointData equivariant_sum(const FixedPointData& first, Sign first_orientation,
                               const FixedPointData& second, Sign second_orientation) {
  if (!first.empty() && !second.empty() && first.arity() != second.arity()) {
    throw Error(ErrorCode::ArityMismatch, "cannot sum arity " + std::to_string(first.arity()) + " with arity " +
                                              std::to_string(second.arity()));
  }
  std::vector<FixedPointDatum> points;
  points.reserve(first.size() + second.size());
  for (const auto& p : first) points.push_back(first_orientation == Sign::Plus ? p : p.reversed());
  for (const auto& p : second) points.push_back(second_orientation == Sign::Plus ? p : p.reversed());
  return FixedPointData(std::move(points));
}

FixedPointData apply(const FixedPointData& data, const ConstructionStep& step) {
  if (step.kind == ConstructionStep::Kind::AddSphere) return add_sphere(data, step.a, step.b);
  return blow_up(data, FixedPointDatum(step.sign, {step.a, step.b}));
}

FixedPointData replay(const ConstructionTrace& trace) {
  FixedPointData data;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      data = apply(data, trace[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::StepInapplicable,
                  "step " + std::to_string(i) + " " + trace[i].to_string() + ": " + e.what(), i);
    }
  }
  return data;
}

Json to_json(const ConstructionStep& step) {
  if (step.kind == ConstructionStep::Kind::AddSphere) {
    return Json{{"op", "add_sphere"}, {"a", step.a}, {"b", step.b}};
  }
  return Json{{"op", "blow_up"}, {"sign", to_int(step.sign)}, {"a", step.a}, {"b", step.b}};
}

Json to_json(const ConstructionTrace& trace) {
  Json arr = Json::array();
  for (const auto& s : trace) arr.push_back(to_json(s));
  return arr;
}

namespace {

Weight step_weight(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::Malformed, std::string("missing integer \"") + key + "\"", std::nullopt, where);
  }
  const auto v = j.at(key).get<std::int64_t>();
  if (v <= 0) throw Error(ErrorCode::NonPositiveWeight, "step weights must be positive", std::nullopt, where);
  if (static_cast<std::uint64_t>(v) > std::numeric_limits<Weight>::max()) {
    throw Error(ErrorCode::Overflow, "step weight too large", std::nullopt, where);
  }
  return static_cast<Weight>(v);
}

}  // namespace

ConstructionStep step_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("op") || !json.at("op").is_string()) {
    throw Error(ErrorCode::Malformed, "a step needs a string \"op\"");
  }
  const auto op = json.at("op").get<std::string>();
  if (op == "add_sphere") {
    return ConstructionStep::add_sphere(step_weight(json, "a", "/a"), step_weight(json, "b", "/b"));
  }
  if (op == "blow_up") {
    if (!json.contains("sign") || !json.at("sign").is_number_integer()) {
      throw Error(ErrorCode::BadSign, "blow_up needs an integer sign", std::nullopt, "/sign");
    }
    const Sign s = sign_from_int(json.at("sign").get<long long>());
    return ConstructionStep::blow_up(s, step_weight(json, "a", "/a"), step_weight(json, "b", "/b"));
  }
  throw Error(ErrorCode::Malformed, "unknown op \"" + op + "\"", std::nullopt, "/op");
}

ConstructionTrace trace_from_json(const Json& json) {
  // Accept a bare array or any object carrying a "trace" array (e.g. the
  // output of the decider).
  const Json* arr = &json;
  if (json.is_object() && json.contains("trace")) arr = &json.at("trace");
  if (!arr->is_array()) throw Error(ErrorCode::Malformed, "a trace is an array of steps", std::nullopt, "/");
  ConstructionTrace trace;
  trace.reserve(arr->size());
  for (std::size_t i = 0; i < arr->size(); ++i) {
    try {
      trace.push_back(step_from_json((*arr)[i]));
    } catch (const Error& e) {
      throw Error(e.code(), e.message(), i, "/" + std::to_string(i) + e.location());
    }
  }
  return trace;
}

std::string serialize(const ConstructionTrace& trace) { return to_json(trace).dump(); }

ConstructionTrace parse_trace(std::string_view text) { return trace_from_json(parse_json_text(text)); }

}  // namespace s1fix
