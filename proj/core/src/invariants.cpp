#include "s1fix/invariants.hpp"

#include <algorithm>

namespace s1fix {

std::int64_t signature(const FixedPointData& data) {
  std::int64_t s = 0;
  for (const auto& p : data) s += to_int(p.sign());
  return s;
}

namespace {

IntegerPolynomial minus_factor(const FixedPointDatum& p) {
  IntegerPolynomial f = IntegerPolynomial::constant(1);
  for (Weight w : p.weights()) f *= IntegerPolynomial::one_minus_t_pow(w);
  return f;
}

IntegerPolynomial plus_factor(const FixedPointDatum& p) {
  IntegerPolynomial f = IntegerPolynomial::constant(1);
  for (Weight w : p.weights()) f *= IntegerPolynomial::one_plus_t_pow(w);
  return f;
}

}  // namespace

IntegerPolynomial series_denominator(const FixedPointData& data) {
  IntegerPolynomial d = IntegerPolynomial::constant(1);
  for (const auto& p : data) d *= minus_factor(p);
  return d;
}

IntegerPolynomial series_numerator(const FixedPointData& data) {
  const std::size_t k = data.size();
  std::vector<IntegerPolynomial> factors;
  factors.reserve(k);
  for (const auto& p : data) factors.push_back(minus_factor(p));

  // prefix[i] = prod_{q<i} F_q, suffix[i] = prod_{q>=i} F_q
  std::vector<IntegerPolynomial> prefix(k + 1), suffix(k + 1);
  prefix[0] = IntegerPolynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * factors[i];
  suffix[k] = IntegerPolynomial::constant(1);
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * factors[i];

  IntegerPolynomial n;
  for (std::size_t i = 0; i < k; ++i) {
    IntegerPolynomial term = plus_factor(data[i]) * prefix[i] * suffix[i + 1];
    if (data[i].sign() == Sign::Minus) n -= term;
    else n += term;
  }
  return n;
}

SeriesCheck signature_series_check(const FixedPointData& data) {
  const IntegerPolynomial n = series_numerator(data);
  const IntegerPolynomial d = series_denominator(data);
  // D(0) = 1, so the only candidate constant is N(0), which is the signature.
  const BigInt s = n.coefficient(0);
  const IntegerPolynomial residual = n - d * s;

  SeriesCheck result;
  if (residual.is_zero()) {
    result.constant = static_cast<std::int64_t>(s);
    return result;
  }
  const auto& c = residual.coefficients();
  result.first_mismatch_degree =
      static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](const BigInt& x) { return x != 0; }) - c.begin());
  return result;
}

std::int64_t smallest_weight_balance(const FixedPointData& data) {
  if (data.empty()) throw Error(ErrorCode::EmptyData, "smallest weight of empty data is undefined");
  const Weight w = data.min_weight();
  std::int64_t balance = 0;
  for (const auto& p : data) {
    const auto ws = p.weights();
    balance += to_int(p.sign()) * static_cast<std::int64_t>(std::count(ws.begin(), ws.end(), w));
  }
  return balance;
}

ParityTable weight_parity_check(const FixedPointData& data) {
  ParityTable table;
  for (const auto& p : data) {
    for (Weight w : p.weights()) ++table.multiplicity[w];
  }
  table.all_even = std::all_of(table.multiplicity.begin(), table.multiplicity.end(),
                               [](const auto& kv) { return kv.second % 2 == 0; });
  return table;
}

bool signature_within_bound(const FixedPointData& data) {
  if (data.empty()) return true;
  const auto k = static_cast<std::int64_t>(data.size());
  const std::int64_t s = signature(data);
  return (s < 0 ? -s : s) <= k - 2;
}

bool InvariantReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* InvariantReport::find(const std::string& name) const noexcept {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

InvariantReport structural_checks(const FixedPointData& data) {
  namespace cn = check_names;
  InvariantReport r;
  r.signature = signature(data);
  r.euler_characteristic = data.size();

  const SeriesCheck series = signature_series_check(data);
  r.series_constant = series.constant;
  r.checks.push_back({cn::kSignatureIdentity, series.ok(),
                      series.ok() ? "constant " + std::to_string(*series.constant)
                                  : "not constant; first mismatch at degree " +
                                        std::to_string(series.first_mismatch_degree)});

  r.smallest_weight_balance = data.empty() ? 0 : smallest_weight_balance(data);
  r.checks.push_back({cn::kSmallestWeightBalance, r.smallest_weight_balance == 0,
                      data.empty() ? "no points"
                                   : "weight " + std::to_string(data.min_weight()) + " balance " +
                                         std::to_string(r.smallest_weight_balance)});

  r.parity = weight_parity_check(data);
  {
    std::string odd;
    for (const auto& [w, m] : r.parity.multiplicity) {
      if (m % 2) odd += (odd.empty() ? "" : ",") + std::to_string(w) + "x" + std::to_string(m);
    }
    r.checks.push_back({cn::kWeightParity, r.parity.all_even, odd.empty() ? "all even" : "odd: " + odd});
  }

  const bool odd_count = data.size() % 2 == 1;
  r.checks.push_back({cn::kOddCountDimension, !odd_count || data.arity() % 2 == 0,
                      std::to_string(data.size()) + " points, dimension " + std::to_string(2 * data.arity())});

  if (data.size() == 2) {
    const bool same = std::ranges::equal(data[0].weights(), data[1].weights());
    const bool opposite = data[0].sign() != data[1].sign();
    r.checks.push_back({cn::kTwoPoints, same && opposite,
                        std::string(same ? "equal weights" : "weights differ") +
                            (opposite ? ", opposite signs" : ", equal signs")});
  } else {
    r.checks.push_back({cn::kTwoPoints, true, "not applicable"});
  }

  std::int64_t plus = 0, minus = 0;
  for (const auto& p : data) (p.sign() == Sign::Plus ? plus : minus) += 1;

  const bool uniform = !data.empty() && std::all_of(data.begin(), data.end(), [&](const FixedPointDatum& p) {
    return std::ranges::equal(p.weights(), data[0].weights());
  });
  r.checks.push_back({cn::kUniformWeights, !uniform || r.signature == 0,
                      uniform ? "uniform weights, signature " + std::to_string(r.signature) : "not applicable"});

  const bool semi_free = !data.empty() && data.max_weight() == 1;
  r.checks.push_back({cn::kSemiFree, !semi_free || plus == minus,
                      semi_free ? std::to_string(plus) + " '+' vs " + std::to_string(minus) + " '-'"
                                : "not applicable"});

  if (data.arity() == 2) {
    r.checks.push_back({cn::kSignatureBound, signature_within_bound(data),
                        "|" + std::to_string(r.signature) + "| <= " +
                            std::to_string(static_cast<std::int64_t>(data.size()) - 2)});
  }
  return r;
}

Json to_json(const InvariantReport& report) {
  Json parity = Json::array();
  for (const auto& [w, m] : report.parity.multiplicity) {
    parity.push_back(Json{{"weight", w}, {"multiplicity", m}});
  }
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.passed}, {"detail", c.detail}});
  }
  Json j;
  j["signature"] = report.signature;
  j["series_constant"] = report.series_constant ? Json(*report.series_constant) : Json(nullptr);
  j["smallest_weight_balance"] = report.smallest_weight_balance;
  j["euler_characteristic"] = report.euler_characteristic;
  j["parity_table"] = std::move(parity);
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace s1fix
