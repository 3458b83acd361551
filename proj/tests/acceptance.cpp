// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "s1fix/decider.hpp"
#include "s1fix/enumeration.hpp"
#include "s1fix/invariants.hpp"
#include "s1fix/multigraph.hpp"
#include "support.hpp"

using namespace s1fix;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kOracleSeconds = 60.0;
constexpr double kSeriesSeconds = 60.0;
constexpr double kEnumerateSeconds = 10.0;
constexpr double kDecideMillis = 50.0;
constexpr std::size_t kMinMutants = 1000;
constexpr int kRoundTrips = 10000;
constexpr std::int64_t kSeriesTolerance = 0;  // exact

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome oracle_equivalence() {
  const auto t0 = Clock::now();
  const Corpus corpus = enumerate({4, 6});
  const auto universe = candidate_universe({4, 6});
  std::size_t discrepancies = 0, realizable = 0;
  for (const auto& d : universe) {
    const bool accepted = decide(d).realizable;
    realizable += accepted;
    if (accepted != corpus.contains(d)) {
      if (discrepancies++ < 5) std::cerr << "  discrepancy: " << d.to_string() << '\n';
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream o;
  o << universe.size() << " candidates, " << realizable << " realizable, corpus " << corpus.size() << ", "
    << discrepancies << " discrepancies, " << s << " s (limit " << kOracleSeconds << ")";
  return {discrepancies == 0 && realizable == corpus.size() && s < kOracleSeconds, o.str()};
}

Outcome signature_identity() {
  const auto t0 = Clock::now();
  const Corpus corpus = enumerate({5, 8});
  std::size_t bad = 0;
  for (const auto& e : corpus) {
    const auto c = signature_series_check(e.data);
    const std::int64_t sig = signature(e.data);
    if (!c.constant || std::llabs(*c.constant - sig) > kSeriesTolerance) ++bad;
  }
  const double s = seconds_since(t0);
  std::ostringstream o;
  o << corpus.size() << " entries, " << bad << " mismatches, " << s << " s (limit " << kSeriesSeconds << ")";
  return {bad == 0 && s < kSeriesSeconds, o.str()};
}

Outcome spectrum() {
  bool ok = true;
  std::ostringstream o;
  for (std::int64_t k = 2; k <= 7; ++k) {
    std::set<std::int64_t> expected;
    for (std::int64_t j = 2 - k; j <= k - 2; j += 2) expected.insert(j);
    const auto got = signature_spectrum(static_cast<std::size_t>(k), 12);
    ok = ok && got == expected;
    o << "k=" << k << ":{";
    for (auto it = got.begin(); it != got.end(); ++it) o << (it == got.begin() ? "" : ",") << *it;
    o << "} ";
  }
  o << "(W=12)";
  return {ok, o.str()};
}

Outcome classification() {
  bool ok = true;
  std::ostringstream o;
  for (std::size_t k = 2; k <= 4; ++k) {
    const Corpus corpus = enumerate({k, 10});
    std::size_t entries = 0;
    for (const auto& e : corpus) entries += e.data.size() == k;
    std::size_t matched = 0;
    try {
      for (const auto& c : classify_small(k, 10)) {
        // Recovered parameters must rebuild the entry.
        const auto& p = c.parameters;
        FixedPointData rebuilt;
        switch (c.family) {
          case Family::MirroredPair:
            rebuilt = add_sphere({}, p[0], p[1]);
            break;
          case Family::SingleBlowUp:
            rebuilt = blow_up(add_sphere({}, p[0], p[1]), FixedPointDatum(Sign::Plus, {p[0], p[1]}));
            break;
          case Family::TwoMirroredPairs:
            rebuilt = add_sphere(add_sphere({}, p[0], p[1]), p[2], p[3]);
            break;
          case Family::DoubleBlowUp: {
            const Weight a = p[0], b = p[1];
            rebuilt = blow_up(blow_up(add_sphere({}, a, b), FixedPointDatum(Sign::Plus, {a, b})),
                              FixedPointDatum(Sign::Plus, {b, a + b}));
            break;
          }
        }
        if (c.orientation == Sign::Minus) rebuilt = reverse_orientation(rebuilt);
        matched += rebuilt == c.data;
      }
    } catch (const Error& e) {
      o << "k=" << k << " " << to_string(e.code()) << ": " << e.what() << ' ';
      ok = false;
      continue;
    }
    ok = ok && matched == entries;
    o << "k=" << k << ": " << matched << "/" << entries << ' ';
  }
  o << "(W=10)";
  return {ok, o.str()};
}

Outcome multigraph_loop() {
  const Corpus corpus = enumerate({4, 6});
  std::size_t loop_failures = 0, mutants = 0, rejected_by_checks = 0, accepted = 0, inconsistent = 0;
  auto judge = [&](const Multigraph& g) {
    ++mutants;
    if (!validate_graph(g).ok()) {
      ++rejected_by_checks;
      return;
    }
    try {
      const auto r = realize(g);
      if (r.trace) ++accepted;
      else ++rejected_by_checks;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InternalInconsistency) throw;
      ++inconsistent;
      std::cerr << "  inconsistent mutant: " << serialize(g) << '\n';
    }
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto trace = corpus.trace(i);
    const auto g = graph_of(trace);
    const bool loop_ok = validate_graph(g).ok() && check_properties(g).all_passed() && data_of(g) == replay(trace) &&
                         [&] {
                           const auto r = realize(g);
                           return r.trace && verify_trace(*r.trace, data_of(g));
                         }();
    loop_failures += !loop_ok;

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      auto m = g;
      m.vertices[v].sign = -m.vertices[v].sign;
      judge(m);
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      for (std::int64_t delta : {-2, -1, 1, 2}) {
        if (g.edges[e].label + delta < 1) continue;
        auto m = g;
        m.edges[e].label += delta;
        judge(m);
      }
    }
  }
  std::ostringstream o;
  o << corpus.size() << " corpus graphs, " << loop_failures << " loop failures; " << mutants << " mutants: "
    << rejected_by_checks << " fail a property, " << accepted << " accepted, " << inconsistent
    << " inconsistent";
  return {loop_failures == 0 && mutants >= kMinMutants && inconsistent == 0, o.str()};
}

// The standard action on CP^4 with weights 0..4: at p_i the tangent weights
// are j - i for j != i; the sign counts negative weights.
FixedPointData cp4_from_local_weights() {
  std::vector<FixedPointDatum> points;
  for (int i = 0; i <= 4; ++i) {
    std::vector<Weight> w;
    int negatives = 0;
    for (int j = 0; j <= 4; ++j) {
      if (j == i) continue;
      negatives += j < i;
      w.push_back(static_cast<Weight>(std::abs(j - i)));
    }
    points.emplace_back(negatives % 2 ? Sign::Minus : Sign::Plus, std::move(w));
  }
  return FixedPointData(std::move(points));
}

Outcome invariant_battery() {
  const auto& d = test::cp4_data();
  const auto r = structural_checks(d);
  const FixedPointDatum p0(Sign::Plus, {1, 2, 3, 4}), p3(Sign::Minus, {1, 1, 2, 3});
  const bool verbatim = d.count(p0) == 2 && d.count(p3) == 2;
  const bool ok = d == cp4_from_local_weights() && r.signature == 1 && r.series_constant == 1 &&
                  r.smallest_weight_balance == 0 && r.parity.all_even && verbatim;
  std::ostringstream o;
  o << "signature " << r.signature << ", series constant "
    << (r.series_constant ? std::to_string(*r.series_constant) : "none") << ", balance " << r.smallest_weight_balance
    << ", parity " << (r.parity.all_even ? "even" : "odd") << ", p0 " << p0.to_string() << ", p3 " << p3.to_string();
  return {ok, o.str()};
}

Outcome rewrite_properties() {
  test::Gen gen(20240707);
  std::size_t failures = 0, ops = 0;
  auto parity = [](const FixedPointData& x) { return weight_parity_check(x).all_even; };
  for (int iter = 0; iter < kRoundTrips; ++iter) {
    const auto data = replay(gen.trace(7, 12, gen.uniform(1, 6)));
    if (data.empty()) continue;
    const auto& p = gen.pick(data.points());
    const Weight a = p.weights()[0], b = p.weights()[1];
    const auto up = blow_up(data, p);
    const auto down = blow_down(up, FixedPointDatum(p.sign(), {a, a + b}), FixedPointDatum(p.sign(), {b, a + b}));
    failures += down != data;
    failures += !parity(up) || signature(up) != signature(data) + to_int(p.sign());
    failures += !parity(down) || signature(down) != signature(up) - to_int(p.sign());

    const auto [x, y] = gen.coprime_pair(12);
    const auto more = add_sphere(data, x, y);
    const auto less = remove_sphere(more, x, y);
    failures += !parity(more) || signature(more) != signature(data);
    failures += less != data || !parity(less);

    const auto other = replay(gen.trace(5, 8, 4));
    const Sign o1 = gen.sign(), o2 = gen.sign();
    const auto sum = equivariant_sum(data, o1, other, o2);
    failures += !parity(sum) || signature(sum) != to_int(o1) * signature(data) + to_int(o2) * signature(other);
    ops += 6;
  }
  std::ostringstream o;
  o << kRoundTrips << " round trips, " << ops << " operations checked, " << failures << " failures";
  return {failures == 0, o.str()};
}

Outcome performance() {
  const auto t0 = Clock::now();
  const Corpus corpus = enumerate({6, 10});
  const double enum_s = seconds_since(t0);

  double worst_ms = 0;
  std::string worst;
  for (const auto& d : candidate_universe({4, 6})) {
    const auto t1 = Clock::now();
    decide(d);
    const double ms = seconds_since(t1) * 1000.0;
    if (ms > worst_ms) {
      worst_ms = ms;
      worst = d.to_string();
    }
  }
  std::ostringstream o;
  o << "enumerate(6,10): " << corpus.size() << " entries in " << enum_s << " s (limit " << kEnumerateSeconds
    << "); slowest decide " << worst_ms << " ms (limit " << kDecideMillis << ") on " << worst;
  return {enum_s < kEnumerateSeconds && worst_ms < kDecideMillis, o.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"signature identity", signature_identity},
      {"signature spectrum", spectrum},
      {"small-k classification", classification},
      {"multigraph loop and mutants", multigraph_loop},
      {"invariant battery", invariant_battery},
      {"inverse rewrites", rewrite_properties},
      {"performance envelope", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failed += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << out.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed;
}
