#include <gtest/gtest.h>

#include <iostream>

#include "s1fix/decider.hpp"
#include "s1fix/enumeration.hpp"
#include "s1fix/invariants.hpp"
#include "support.hpp"

using namespace s1fix;
using s1fix::test::D;

namespace {

using Steps = ConstructionTrace;
const auto Sphere = ConstructionStep::add_sphere;
const auto Blow = ConstructionStep::blow_up;

}  // namespace

TEST(Decide, MirroredPair) {
  const auto d = decide(D({{+1, {1, 2}}, {-1, {1, 2}}}));
  ASSERT_TRUE(d.realizable);
  EXPECT_EQ(*d.trace, (Steps{Sphere(1, 2)}));
  EXPECT_FALSE(d.obstruction);
}

TEST(Decide, BlownUpSphere) {
  const auto d = decide(D({{-1, {1, 1}}, {+1, {1, 2}}, {+1, {1, 2}}}));
  ASSERT_TRUE(d.realizable);
  EXPECT_EQ(*d.trace, (Steps{Sphere(1, 1), Blow(Sign::Plus, 1, 1)}));
}

TEST(Decide, DoubleBlowUpFamily) {
  const auto data = D({{-1, {1, 1}}, {+1, {1, 2}}, {+1, {1, 3}}, {+1, {2, 3}}});
  const auto d = decide(data);
  ASSERT_TRUE(d.realizable);
  EXPECT_TRUE(verify_trace(*d.trace, data));
}

TEST(Decide, UnequalWeightsRejected) {
  const auto d = decide(D({{+1, {1, 2}}, {-1, {1, 3}}}));
  EXPECT_FALSE(d.realizable);
  ASSERT_TRUE(d.obstruction);
  EXPECT_EQ(d.obstruction->check, check_names::kWeightParity);
  EXPECT_FALSE(d.trace);
}

TEST(Decide, SignatureScreen) {
  const auto d = decide(D({{+1, {1, 1}}, {+1, {1, 1}}}));
  EXPECT_FALSE(d.realizable);
  ASSERT_TRUE(d.obstruction);
  // Balance fails first for this input; both are screens.
  EXPECT_TRUE(d.obstruction->check == check_names::kSignatureBound ||
              d.obstruction->check == check_names::kSmallestWeightBalance);

  const auto bound = decide(D({{+1, {1, 2}}, {+1, {1, 2}}, {-1, {1, 1}}, {+1, {1, 2}}, {+1, {1, 2}}, {-1, {1, 1}},
                               {+1, {1, 1}}, {+1, {1, 1}}}));
  EXPECT_FALSE(bound.realizable);
}

TEST(Decide, SearchExhaustion) {
  // Parity, balance and the signature bound hold, but the two points
  // carrying 3 share a sign and 1 + 1 != 3. The series identity, which the
  // decider does not consult, also rejects it.
  const auto data = D({{+1, {1, 1}}, {-1, {1, 3}}, {-1, {1, 3}}});
  const auto report = structural_checks(data);
  EXPECT_TRUE(report.find(check_names::kWeightParity)->passed);
  EXPECT_TRUE(report.find(check_names::kSmallestWeightBalance)->passed);
  EXPECT_TRUE(report.find(check_names::kSignatureBound)->passed);
  EXPECT_FALSE(report.find(check_names::kSignatureIdentity)->passed);
  const auto r = decide(data);
  EXPECT_FALSE(r.realizable);
  ASSERT_TRUE(r.obstruction);
  EXPECT_EQ(r.obstruction->check, kSearchExhausted);
  EXPECT_EQ(r.obstruction->weight_level, 3u);
}

TEST(Decide, InvalidInputThrows) {
  try {
    decide(D({{+1, {2, 4}}, {-1, {2, 4}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailed);
  }
  EXPECT_THROW(decide(test::cp4_data()), Error);
}

TEST(Decide, EmptyDataIsRealizable) {
  const auto d = decide(FixedPointData{});
  EXPECT_TRUE(d.realizable);
  EXPECT_TRUE(d.trace->empty());
}

TEST(VerifyTrace, Examples) {
  EXPECT_TRUE(verify_trace({Sphere(1, 2)}, D({{+1, {1, 2}}, {-1, {1, 2}}})));
  EXPECT_FALSE(verify_trace({Sphere(1, 1)}, D({{+1, {1, 2}}, {-1, {1, 2}}})));
  EXPECT_FALSE(verify_trace({Blow(Sign::Plus, 1, 1)}, D({{+1, {1, 2}}, {-1, {1, 2}}})));
}

TEST(Decide, AcceptsEveryCorpusEntryWithVerifiedTrace) {
  const Corpus corpus = enumerate({6, 10});
  for (const auto& e : corpus) {
    const auto d = decide(e.data);
    ASSERT_TRUE(d.realizable) << e.data.to_string();
    ASSERT_TRUE(verify_trace(*d.trace, e.data)) << e.data.to_string();
  }
}

TEST(Decide, RandomTracesProperty) {
  // Deeper than the corpus bounds: random constructions with up to 10 points.
  test::Gen gen(41);
  std::size_t late = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    const auto data = replay(gen.trace(10, 40, 12));
    const auto d = decide(data);
    ASSERT_TRUE(d.realizable) << data.to_string();
    ASSERT_TRUE(verify_trace(*d.trace, data));
    late += d.stats.late_partner_successes;
  }
  std::cout << "[ decider ] late partner successes over random traces: " << late << '\n';
}

TEST(Decide, RejectionsFailAnInvariantOrExhaustSearch) {
  // Every rejection names either a screen or exhaustion, and screens agree
  // with the invariant report.
  test::Gen gen(42);
  for (int iter = 0; iter < 3000; ++iter) {
    const auto data = gen.candidate(gen.uniform(1, 6), 7);
    const auto d = decide(data);
    if (d.realizable) {
      EXPECT_TRUE(verify_trace(*d.trace, data));
      EXPECT_TRUE(structural_checks(data).all_passed()) << data.to_string();
      continue;
    }
    ASSERT_TRUE(d.obstruction);
    if (d.obstruction->check != kSearchExhausted) {
      const auto report = structural_checks(data);
      const auto* c = report.find(d.obstruction->check);
      ASSERT_NE(c, nullptr) << d.obstruction->check;
      EXPECT_FALSE(c->passed) << data.to_string();
    }
  }
}

TEST(Decide, OrientationSymmetric) {
  test::Gen gen(43);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto data = gen.coin() ? replay(gen.trace(7, 10, 6)) : gen.candidate(gen.uniform(1, 5), 6);
    EXPECT_EQ(decide(data).realizable, decide(reverse_orientation(data)).realizable) << data.to_string();
  }
}

TEST(Decide, JsonShape) {
  const Json ok = to_json(decide(D({{+1, {1, 2}}, {-1, {1, 2}}})));
  EXPECT_EQ(ok.dump(), R"({"realizable":true,"trace":[{"op":"add_sphere","a":1,"b":2}]})");
  const Json no = to_json(decide(D({{+1, {1, 2}}, {-1, {1, 3}}})));
  EXPECT_EQ(no["realizable"], false);
  EXPECT_EQ(no["obstruction"]["check"], "weight_parity");
}

TEST(Decide, MatchesEnumerationOracle) {
  // Every multiset of signed coprime pairs within the bounds, realizable or
  // not, against membership in the bounded closure.
  for (const EnumerationBounds b : {EnumerationBounds{5, 5}, EnumerationBounds{6, 4}}) {
    const Corpus corpus = enumerate(b);
    std::size_t accepted = 0;
    for (const auto& d : candidate_universe(b)) {
      const bool realizable = decide(d).realizable;
      accepted += realizable;
      ASSERT_EQ(realizable, corpus.contains(d)) << d.to_string();
    }
    EXPECT_EQ(accepted, corpus.size());
  }
}
