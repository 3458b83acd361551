#include "s1fix/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace s1fix {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::MixedArity: return "MixedArity";
    case ErrorCode::BadSign: return "BadSign";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::PointNotPresent: return "PointNotPresent";
    case ErrorCode::PairInvalid: return "PairInvalid";
    case ErrorCode::PairNotPresent: return "PairNotPresent";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::StepInapplicable: return "StepInapplicable";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::TraceInvalid: return "TraceInvalid";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::UnmatchedEntry: return "UnmatchedEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index, std::string location)
    : std::runtime_error(location.empty() ? message : location + ": " + message),
      code_(code),
      index_(index),
      location_(std::move(location)),
      message_(message) {}

Sign sign_from_int(long long value) {
  if (value == 1) return Sign::Plus;
  if (value == -1) return Sign::Minus;
  throw Error(ErrorCode::BadSign, "sign must be +1 or -1, got " + std::to_string(value));
}

// --- FixedPointDatum ------------------------------------------------------

FixedPointDatum::FixedPointDatum(Sign sign, std::vector<Weight> weights)
    : sign_(sign), weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorCode::Malformed, "a fixed point needs at least one weight");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) {
      throw Error(ErrorCode::NonPositiveWeight, "weights must be positive", i);
    }
  }
  std::sort(weights_.begin(), weights_.end());
}

bool FixedPointDatum::contains(Weight w) const noexcept {
  return std::binary_search(weights_.begin(), weights_.end(), w);
}

std::strong_ordering FixedPointDatum::operator<=>(const FixedPointDatum& other) const noexcept {
  if (sign_ != other.sign_) {
    return sign_ == Sign::Plus ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::lexicographical_compare_three_way(weights_.begin(), weights_.end(),
                                                other.weights_.begin(), other.weights_.end());
}

std::string FixedPointDatum::to_string() const {
  std::string out = "(";
  out += to_char(sign_);
  for (Weight w : weights_) {
    out += ',';
    out += std::to_string(w);
  }
  out += ')';
  return out;
}

// --- FixedPointData -------------------------------------------------------

FixedPointData::FixedPointData(std::vector<FixedPointDatum> points) : points_(std::move(points)) {
  if (!points_.empty()) {
    arity_ = points_.front().arity();
    for (std::size_t i = 1; i < points_.size(); ++i) {
      if (points_[i].arity() != arity_) {
        throw Error(ErrorCode::MixedArity,
                    "point " + std::to_string(i) + " has arity " +
                        std::to_string(points_[i].arity()) + ", expected " + std::to_string(arity_),
                    i);
      }
    }
  }
  std::sort(points_.begin(), points_.end());
}

std::size_t FixedPointData::count(const FixedPointDatum& p) const {
  auto [lo, hi] = std::equal_range(points_.begin(), points_.end(), p);
  return static_cast<std::size_t>(hi - lo);
}

Weight FixedPointData::max_weight() const noexcept {
  Weight m = 0;
  for (const auto& p : points_) m = std::max(m, p.weights().back());
  return m;
}

Weight FixedPointData::min_weight() const noexcept {
  if (points_.empty()) return 0;
  Weight m = std::numeric_limits<Weight>::max();
  for (const auto& p : points_) m = std::min(m, p.weights().front());
  return m;
}

std::strong_ordering FixedPointData::operator<=>(const FixedPointData& other) const noexcept {
  return std::lexicographical_compare_three_way(points_.begin(), points_.end(),
                                                other.points_.begin(), other.points_.end());
}

std::string FixedPointData::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ',';
    out += points_[i].to_string();
  }
  out += '}';
  return out;
}

FixedPointData canonicalize(std::vector<FixedPointDatum> points) {
  return FixedPointData(std::move(points));
}

// --- validation -----------------------------------------------------------

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::NonPositiveWeight: return "NonPositiveWeight";
    case ViolationCode::MixedArity: return "MixedArity";
    case ViolationCode::ArityNotTwo: return "ArityNotTwo";
    case ViolationCode::NonEffectivePoint: return "NonEffectivePoint";
  }
  return "Unknown";
}

bool ValidationReport::has(ViolationCode code) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

ValidationReport validate(const FixedPointData& data, ValidationMode mode) {
  ValidationReport report;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& p = data[i];
    if (p.arity() != data.arity()) {
      report.violations.push_back({ViolationCode::MixedArity, "arity differs from the first point", i});
    }
    if (std::any_of(p.weights().begin(), p.weights().end(), [](Weight w) { return w == 0; })) {
      report.violations.push_back({ViolationCode::NonPositiveWeight, "non-positive weight", i});
    }
  }
  if (mode == ValidationMode::General || data.empty()) return report;

  if (data.arity() != 2) {
    report.violations.push_back({ViolationCode::ArityNotTwo,
                                 "dimension-4 data needs exactly two weights per point, got " +
                                     std::to_string(data.arity()),
                                 std::nullopt});
    return report;
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto w = data[i].weights();
    if (std::gcd(w[0], w[1]) != 1) {
      report.violations.push_back({ViolationCode::NonEffectivePoint,
                                   "weights of " + data[i].to_string() + " share the factor " +
                                       std::to_string(std::gcd(w[0], w[1])),
                                   i});
    }
  }
  return report;
}

FixedPointData reverse_orientation(const FixedPointData& data) {
  std::vector<FixedPointDatum> points;
  points.reserve(data.size());
  for (const auto& p : data) points.push_back(p.reversed());
  return FixedPointData(std::move(points));
}

FixedPointData make_effective(const FixedPointData& data) {
  if (data.empty()) throw Error(ErrorCode::EmptyData, "make_effective needs at least one fixed point");
  Weight g = 0;
  for (const auto& p : data) {
    for (Weight w : p.weights()) g = std::gcd(g, w);
  }
  if (g == 1) return data;
  std::vector<FixedPointDatum> points;
  points.reserve(data.size());
  for (const auto& p : data) {
    std::vector<Weight> ws(p.weights().begin(), p.weights().end());
    for (auto& w : ws) w /= g;
    points.emplace_back(p.sign(), std::move(ws));
  }
  return FixedPointData(std::move(points));
}

// --- serialization --------------------------------------------------------

Json to_json(const FixedPointData& data) {
  Json points = Json::array();
  for (const auto& p : data) {
    Json weights = Json::array();
    for (Weight w : p.weights()) weights.push_back(w);
    points.push_back(Json{{"sign", to_int(p.sign())}, {"weights", std::move(weights)}});
  }
  return Json{{"points", std::move(points)}};
}

namespace {

Weight weight_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Malformed, "weight must be an integer", std::nullopt, where);
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v == 0) throw Error(ErrorCode::NonPositiveWeight, "weight must be positive", std::nullopt, where);
    if (v > std::numeric_limits<Weight>::max()) {
      throw Error(ErrorCode::Overflow, "weight exceeds " + std::to_string(std::numeric_limits<Weight>::max()),
                  std::nullopt, where);
    }
    return static_cast<Weight>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v <= 0) throw Error(ErrorCode::NonPositiveWeight, "weight must be positive, got " + std::to_string(v),
                          std::nullopt, where);
  if (static_cast<std::uint64_t>(v) > std::numeric_limits<Weight>::max()) {
    throw Error(ErrorCode::Overflow, "weight too large", std::nullopt, where);
  }
  return static_cast<Weight>(v);
}

}  // namespace

FixedPointData data_from_json(const Json& json) {
  if (!json.is_object() || !json.contains("points")) {
    throw Error(ErrorCode::Malformed, "expected an object with a \"points\" array", std::nullopt, "/");
  }
  const Json& arr = json.at("points");
  if (!arr.is_array()) throw Error(ErrorCode::Malformed, "\"points\" must be an array", std::nullopt, "/points");

  std::vector<FixedPointDatum> points;
  points.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "/points/" + std::to_string(i);
    const Json& item = arr[i];
    if (!item.is_object() || !item.contains("sign") || !item.contains("weights")) {
      throw Error(ErrorCode::Malformed, "expected {\"sign\":..,\"weights\":[..]}", i, where);
    }
    const Json& s = item.at("sign");
    if (!s.is_number_integer()) throw Error(ErrorCode::BadSign, "sign must be +1 or -1", i, where + "/sign");
    Sign sign;
    try {
      sign = sign_from_int(s.get<long long>());
    } catch (const Error& e) {
      throw Error(ErrorCode::BadSign, e.what(), i, where + "/sign");
    }
    const Json& ws = item.at("weights");
    if (!ws.is_array() || ws.empty()) {
      throw Error(ErrorCode::Malformed, "weights must be a non-empty array", i, where + "/weights");
    }
    std::vector<Weight> weights;
    weights.reserve(ws.size());
    for (std::size_t k = 0; k < ws.size(); ++k) {
      weights.push_back(weight_from_json(ws[k], where + "/weights/" + std::to_string(k)));
    }
    if (!points.empty() && weights.size() != points.front().arity()) {
      throw Error(ErrorCode::MixedArity,
                  "expected " + std::to_string(points.front().arity()) + " weights, got " +
                      std::to_string(weights.size()),
                  i, where + "/weights");
    }
    points.emplace_back(sign, std::move(weights));
  }
  return FixedPointData(std::move(points));
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Malformed, e.what(), e.byte, "byte " + std::to_string(e.byte));
  }
}

std::string serialize(const FixedPointData& data) { return to_json(data).dump(); }

FixedPointData parse(std::string_view text) { return data_from_json(parse_json_text(text)); }

}  // namespace s1fix

std::size_t std::hash<s1fix::FixedPointData>::operator()(const s1fix::FixedPointData& data) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& p : data) {
    mix(static_cast<std::size_t>(p.sign() == s1fix::Sign::Plus));
    for (auto w : p.weights()) mix(w);
  }
  return h;
}
