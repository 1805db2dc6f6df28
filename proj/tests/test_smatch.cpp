#include <doctest.h>

#include <random>
#include <stdexcept>

#include "amrize/penman.hpp"
#include "amrize/smatch.hpp"
#include "support.hpp"

using namespace amrize;

namespace {

// gold with the :ARG1 subtree (leave-01 and both its edges) deleted
AmrGraph boy_wants_arg1_deleted() {
  AmrGraph g;
  NodeId want = g.add_node("want-01");
  NodeId boy = g.add_node("boy");
  g.add_edge(want, ":ARG0", boy);
  g.root = want;
  return g;
}

// gold minus the reentrant leave-01 :ARG0 boy edge
AmrGraph boy_wants_no_reentrancy() {
  AmrGraph g = testsup::boy_wants_gold();
  g.edges.pop_back();
  return g;
}

}  // namespace

TEST_SUITE("smatch") {

TEST_CASE("triple extraction: 3 instances + 3 relations + TOP") {
  TripleSet t = extract_triples(testsup::boy_wants_gold());
  CHECK(t.instances.size() == 3);
  CHECK(t.relations.size() == 3);
  REQUIRE(t.attributes.size() == 1);
  CHECK(std::get<1>(t.attributes[0]) == "TOP");
  CHECK(std::get<2>(t.attributes[0]) == "want-01");
  CHECK(t.total() == 7);
}

TEST_CASE("identical graphs score 1.0") {
  AmrGraph g = testsup::boy_wants_gold();
  MetricScore s = smatch(g, g)[Metric::Smatch];
  CHECK(s.f1 == doctest::Approx(1.0));
  CHECK(s.matched == 7);
  CHECK(s.applicable);
}

TEST_CASE("deleting the :ARG1 subtree gives P=1, R=4/7") {
  AmrGraph gold = testsup::boy_wants_gold();
  AmrGraph pred = boy_wants_arg1_deleted();
  // pred triples: 2 instances + 1 relation + TOP = 4, all present in gold
  MetricScore s = smatch(gold, pred)[Metric::Smatch];
  CHECK(s.matched == 4);
  CHECK(s.pred_total == 4);
  CHECK(s.gold_total == 7);
  CHECK(s.precision == doctest::Approx(1.0));
  CHECK(s.recall == doctest::Approx(4.0 / 7.0));

  MetricScore oracle = brute_force_smatch(gold, pred)[Metric::Smatch];
  CHECK(oracle.matched == 4);
  CHECK(oracle.f1 == doctest::Approx(s.f1));
}

TEST_CASE("disjoint concept sets match only structure") {
  AmrGraph a = from_penman("(x / aaa :mod (y / bbb))");
  AmrGraph b = from_penman("(p / ccc :mod (q / ddd))");
  // relation triples match on aligned variables alone, so the :mod edge
  // is the single possible hit (hand-enumerable: 2 injective mappings)
  MetricScore s = brute_force_smatch(a, b)[Metric::Smatch];
  CHECK(s.matched == 1);
  CHECK(s.f1 == doctest::Approx(0.25));
  MetricScore h = smatch(a, b, 8, 11)[Metric::Smatch];
  CHECK(h.matched <= 1);
}

TEST_CASE("scores are invariant under variable renaming") {
  AmrGraph gold = testsup::boy_wants_gold();
  // same graph, nodes declared in a different order / different names
  AmrGraph renamed = from_penman(
      "(w / want-01 :ARG1 (l / leave-01 :ARG0 (b / boy)) :ARG0 b)");
  MetricScore s = brute_force_smatch(gold, renamed)[Metric::Smatch];
  CHECK(s.f1 == doctest::Approx(1.0));
  MetricScore h = smatch(gold, renamed, 8, 7)[Metric::Smatch];
  CHECK(h.f1 == doctest::Approx(1.0));
}

TEST_CASE("restarts=0 is an error; brute force is bounded") {
  AmrGraph g = testsup::boy_wants_gold();
  CHECK_THROWS_AS(smatch(g, g, 0, 0), std::invalid_argument);
  std::mt19937_64 eng(51);
  AmrGraph big = testsup::random_graph(eng, 20, 0.0);
  while (big.node_count() <= 8) big = testsup::random_graph(eng, 20, 0.0);
  CHECK_THROWS_AS(brute_force_smatch(big, big), std::invalid_argument);
}

TEST_CASE("hill climbing never exceeds the oracle and usually matches it") {
  std::mt19937_64 eng(53);
  int equal = 0, trials = 300;
  for (int i = 0; i < trials; ++i) {
    AmrGraph a = testsup::random_graph(eng, 6, 0.3);
    AmrGraph b = testsup::random_graph(eng, 6, 0.3);
    MetricScore hill = smatch(a, b, 16, 1000 + i)[Metric::Smatch];
    MetricScore oracle = brute_force_smatch(a, b)[Metric::Smatch];
    CHECK(hill.matched <= oracle.matched);
    if (hill.matched == oracle.matched) ++equal;
  }
  CHECK(equal >= trials * 99 / 100);
}

TEST_CASE("determinism: same seed, same result") {
  std::mt19937_64 eng(57);
  for (int i = 0; i < 50; ++i) {
    AmrGraph a = testsup::random_graph(eng, 12, 0.3);
    AmrGraph b = testsup::random_graph(eng, 12, 0.3);
    MetricScore s1 = smatch(a, b, 4, 42)[Metric::Smatch];
    MetricScore s2 = smatch(a, b, 4, 42)[Metric::Smatch];
    CHECK(s1.matched == s2.matched);
    CHECK(s1.f1 == s2.f1);
  }
}

TEST_CASE("mix_seed separates nearby salts") {
  CHECK(mix_seed(0, 0) != mix_seed(0, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
  CHECK(mix_seed(0, 0) != 0);
}

TEST_CASE("fine-grained identity is 1.0 on every applicable metric") {
  AmrGraph g = from_penman(
      "(s / say-01 :ARG0 (p / person :name (n / name :op1 (a / Anna))) "
      ":ARG1 (g / go-02 :polarity (ng / -) :ARG0 p))");
  ScoreReport r = fine_grained(g, g, 8, 3);
  for (Metric m : kAllMetrics) {
    INFO(metric_name(m));
    if (r[m].applicable) CHECK(r[m].f1 == doctest::Approx(1.0));
  }
  CHECK(r[Metric::Negation].applicable);
  CHECK(r[Metric::Ner].applicable);
  CHECK(r[Metric::Reentrancy].applicable);
}

TEST_CASE("missing reentrant edge: reentrancy F1 = 0, srl recall = 2/3") {
  AmrGraph gold = testsup::boy_wants_gold();
  AmrGraph pred = boy_wants_no_reentrancy();
  ScoreReport r = fine_grained(gold, pred, 8, 0);
  CHECK(r[Metric::Reentrancy].f1 == doctest::Approx(0.0));
  CHECK(r[Metric::Reentrancy].applicable);  // gold side has reentrancy triples
  CHECK(r[Metric::Srl].recall == doctest::Approx(2.0 / 3.0));
  CHECK(r[Metric::Srl].precision == doctest::Approx(1.0));
}

TEST_CASE("no_wsd ignores sense suffixes") {
  AmrGraph a = from_penman("(w / want-01 :ARG0 (b / boy))");
  AmrGraph b = from_penman("(w / want-02 :ARG0 (b / boy))");
  ScoreReport r = fine_grained(a, b, 8, 0);
  CHECK(r[Metric::NoWsd].f1 == doctest::Approx(1.0));
  CHECK(r[Metric::Smatch].f1 < 1.0);
}

TEST_CASE("unlabeled ignores relation labels") {
  AmrGraph a = from_penman("(w / want-01 :ARG0 (b / boy))");
  AmrGraph b = from_penman("(w / want-01 :ARG7 (b / boy))");
  ScoreReport r = fine_grained(a, b, 8, 0);
  CHECK(r[Metric::Unlabeled].f1 == doctest::Approx(1.0));
  CHECK(r[Metric::Smatch].f1 < 1.0);
}

TEST_CASE("concept metric scores instances only") {
  AmrGraph a = from_penman("(w / want-01 :ARG0 (b / boy))");
  AmrGraph b = from_penman("(b / boy :ARG0 (w / want-01))");
  ScoreReport r = fine_grained(a, b, 8, 0);
  CHECK(r[Metric::Concept].f1 == doctest::Approx(1.0));
}

TEST_CASE("negation is not applicable without :polarity") {
  AmrGraph g = testsup::boy_wants_gold();
  ScoreReport r = fine_grained(g, g, 4, 0);
  CHECK_FALSE(r[Metric::Negation].applicable);
  CHECK(r[Metric::Negation].f1 == doctest::Approx(0.0));
  CHECK(r[Metric::Negation].gold_total == 0);
}

TEST_CASE("srl metric counts :ARG edges including :ARGn-of") {
  AmrGraph a = from_penman("(w / want-01 :ARG1-of (b / boy) :mod (c / cat))");
  TripleSet t = transform_for_metric(extract_triples(a), Metric::Srl);
  // relation triples only: role edges are what this metric grades
  CHECK(t.relations.size() == 1);
  CHECK(std::get<1>(t.relations[0]) == ":ARG1-of");
  CHECK(t.instances.empty());
  CHECK(t.attributes.empty());
}

TEST_CASE("ner keeps only :name subgraphs and their heads") {
  AmrGraph g = from_penman(
      "(s / say-01 :ARG0 (p / person :name (n / name :op1 (a / Anna) :op2 (l / Lee))) "
      ":ARG1 (x / thing))");
  TripleSet t = transform_for_metric(extract_triples(g), Metric::Ner);
  bool has_person = false, has_thing = false;
  for (const auto& [var, concept_label] : t.instances) {
    if (concept_label == "person") has_person = true;
    if (concept_label == "thing") has_thing = true;
  }
  CHECK(has_person);
  CHECK_FALSE(has_thing);
  CHECK(t.attributes.empty());
}

TEST_CASE("empty-side convention: zero totals on both sides") {
  TripleSet empty_gold, empty_pred;
  MetricScore s = score_triples(empty_gold, empty_pred, 4, 0);
  CHECK_FALSE(s.applicable);
  CHECK(s.f1 == doctest::Approx(0.0));

  // one-sided emptiness is applicable and scores zero
  TripleSet gold = extract_triples(testsup::boy_wants_gold());
  MetricScore s2 = score_triples(gold, empty_pred, 4, 0);
  CHECK(s2.applicable);
  CHECK(s2.f1 == doctest::Approx(0.0));
  CHECK(s2.gold_total == 7);
}

TEST_CASE("deleting prediction triples never increases recall") {
  std::mt19937_64 eng(61);
  for (int i = 0; i < 50; ++i) {
    AmrGraph gold = testsup::random_graph(eng, 6, 0.3);
    AmrGraph pred = testsup::random_graph(eng, 6, 0.3);
    TripleSet pt = extract_triples(pred);
    MetricScore full = score_triples_exact(extract_triples(gold), pt);
    if (!pt.relations.empty()) {
      TripleSet cut = pt;
      cut.relations.pop_back();
      MetricScore less = score_triples_exact(extract_triples(gold), cut);
      CHECK(less.recall <= full.recall + 1e-12);
    }
  }
}

}  // TEST_SUITE
