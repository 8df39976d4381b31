#include <gtest/gtest.h>

#include <random>

#include "linkstream/oracle.hpp"
#include "support.hpp"

using namespace linkstream;
using namespace linkstream::oracle;
using testing_support::id;
using testing_support::make_stream;

TEST(Oracle, ContactExample) {
  const auto s = testing_support::contact_example();
  const auto r = enumerate_metrics(s, {1, id(s, "g")});
  const auto* a9 = r.at({9, id(s, "a")});
  ASSERT_NE(a9, nullptr);
  EXPECT_EQ(a9->distance, 2u);
  EXPECT_EQ(a9->latency, 3);
  EXPECT_EQ(a9->sf_metric, 3u);
  EXPECT_EQ(r.at({9, id(s, "f")})->sf_metric, 1u);
  const auto from_f = enumerate_metrics(s, {9, id(s, "f")});
  EXPECT_EQ(from_f.at({9, id(s, "a")})->sf_metric, 1u);
  EXPECT_EQ(r.at({3, 0}), nullptr);
}

TEST(Oracle, IntervalExample) {
  const auto s = testing_support::interval_example();
  const auto r = enumerate_metrics(s, {0, id(s, "d")});
  const auto* a3 = r.at({3, id(s, "a")});
  ASSERT_NE(a3, nullptr);
  EXPECT_EQ(a3->distance, 3u);
  EXPECT_EQ(a3->latency, 3);
  EXPECT_EQ(a3->fastest, (std::vector<StartArrival>{{0, 3}}));
}

TEST(Oracle, DelayedChain) {
  const auto s = make_stream({{"a", "b", 0, 0}, {"b", "c", 1, 1}, {"c", "d", 1.5, 1.5}});
  const auto r = enumerate_metrics(s, {0, id(s, "a")}, 1);
  EXPECT_EQ(r.at({1, id(s, "c")})->latency, 1);
  EXPECT_FALSE(r.at({1.5, id(s, "d")})->reachable);
  const auto list = r.reach_list(id(s, "c"));
  ASSERT_EQ(list.size(), 1u);
  EXPECT_EQ(list[0], (ReachTriple{0, 2, 2}));
}

TEST(Oracle, RefusesLargeInstances) {
  std::vector<IntervalLink> raw;
  for (NodeId u = 0; u + 1 < 200; ++u) raw.push_back({u, u + 1, Time(u), Time(u)});
  const auto s = build_link_stream(raw, 200);
  EXPECT_THROW(enumerate_metrics(s, {0, 0}), PreconditionError);
  EXPECT_THROW(enumerate_metrics(testing_support::contact_example(), {1, 0}, -1),
               PreconditionError);
}

TEST(Oracle, PrefixPropertyOnExamples) {
  const auto s = testing_support::contact_example();
  EXPECT_TRUE(check_lemma1(s, {1, id(s, "g")}));
  EXPECT_TRUE(check_lemma1(s, {2, id(s, "f")}));
  const auto single = make_stream({{"x", "y", 1, 1}});
  EXPECT_TRUE(check_lemma1(single, {1, id(single, "x")}));
}

TEST(Oracle, DecompositionOnExamples) {
  const auto s = testing_support::contact_example();
  EXPECT_TRUE(check_lemma2(s, {1, id(s, "g")}));
  const auto d = decomposition_at(s, {4, id(s, "g")}, {7, id(s, "a")}, 7);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->total(), 3u);
  EXPECT_EQ(d->entry, id(s, "c"));
  EXPECT_EQ(d->outer, 2u);
  EXPECT_EQ(d->inner, 1u);
  EXPECT_EQ(d->rest, 0u);
  std::vector<NodeId> abc{id(s, "a"), id(s, "b"), id(s, "c")};
  std::sort(abc.begin(), abc.end());
  EXPECT_EQ(d->component, abc);

  const auto single = make_stream({{"x", "y", 1, 1}});
  const auto direct = decomposition_at(single, {1, id(single, "x")}, {1, id(single, "y")}, 1);
  ASSERT_TRUE(direct.has_value());
  EXPECT_EQ(direct->outer, 0u);
  EXPECT_EQ(direct->total(), 1u);
}

TEST(Oracle, LemmasHoldOnRandomStreams) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 50; ++round) {
    const auto s = testing_support::random_stream(rng, {2, 8, 5, 0.5, round % 2 == 1});
    if (s.empty()) continue;
    const EventNode source{s.event_times().front(), static_cast<NodeId>(round % s.node_count())};
    EXPECT_TRUE(check_lemma1(s, source)) << "round " << round;
    EXPECT_TRUE(check_lemma2(s, source)) << "round " << round;
  }
}

TEST(Oracle, SelfConsistency) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    const auto s = testing_support::random_stream(rng, {2, 8, 5, 0.5, round % 2 == 0});
    if (s.empty()) continue;
    const EventNode source{s.event_times().front(), 0};
    const auto r = enumerate_metrics(s, source);
    for (NodeId v = 0; v < s.node_count(); ++v) {
      Time previous = kInfiniteTime;
      for (std::size_t k = 0; k < r.times().size(); ++k) {
        const auto& rec = r.record(k, v);
        if (!rec.reachable) continue;
        EXPECT_GE(rec.sf_metric, rec.distance);
        EXPECT_LE(rec.latency, r.times()[k] - source.t);
        EXPECT_LE(rec.latency, previous);
        previous = rec.latency;
        ASSERT_FALSE(rec.fastest.empty());
        for (const auto& p : rec.fastest) EXPECT_EQ(p.arrival - p.start, rec.latency);
      }
    }
  }
}
