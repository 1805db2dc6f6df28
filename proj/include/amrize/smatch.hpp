#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "amrize/graph.hpp"

namespace amrize {

// Standard triple decomposition of a graph for alignment-based scoring.
struct TripleSet {
  // (variable, concept)
  std::vector<std::pair<std::string, std::string>> instances;
  // (variable, relation, constant) — carries the distinguished TOP entry
  std::vector<std::tuple<std::string, std::string, std::string>> attributes;
  // (source variable, relation, target variable)
  std::vector<std::tuple<std::string, std::string, std::string>> relations;

  std::size_t total() const {
    return instances.size() + attributes.size() + relations.size();
  }
};

TripleSet extract_triples(const AmrGraph& g);

enum class Metric : int {
  Smatch = 0,
  Unlabeled,
  NoWsd,
  Concept,
  Ner,
  Negation,
  Reentrancy,
  Srl,
};

inline constexpr std::array<Metric, 8> kAllMetrics = {
    Metric::Smatch,   Metric::Unlabeled, Metric::NoWsd,      Metric::Concept,
    Metric::Ner,      Metric::Negation,  Metric::Reentrancy, Metric::Srl,
};

const char* metric_name(Metric m);

struct MetricScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t gold_total = 0;
  std::size_t pred_total = 0;
  // false when neither side has a single triple for this metric
  bool applicable = false;
};

struct ScoreReport {
  std::array<MetricScore, 8> by_metric{};
  MetricScore& operator[](Metric m) { return by_metric[static_cast<int>(m)]; }
  const MetricScore& operator[](Metric m) const {
    return by_metric[static_cast<int>(m)];
  }
};

// Per-metric projection of a triple set (identity for Metric::Smatch).
TripleSet transform_for_metric(const TripleSet& triples, Metric m);

// Hill-climbing alignment between the two variable sets; seeded and
// reproducible. Restart 0 is concept-seeded, later restarts are random.
MetricScore score_triples(const TripleSet& gold, const TripleSet& pred,
                          unsigned restarts, std::uint64_t seed);

// Exhaustive-alignment oracle; requires min(|vars|, |vars|) <= 8.
MetricScore score_triples_exact(const TripleSet& gold, const TripleSet& pred);

// gold, predicted. Fills only the Smatch slot of the report.
ScoreReport smatch(const AmrGraph& gold, const AmrGraph& pred,
                   unsigned restarts = 4, std::uint64_t seed = 0);

ScoreReport brute_force_smatch(const AmrGraph& gold, const AmrGraph& pred);

// All eight metrics, each scored on its own transformed pair.
ScoreReport fine_grained(const AmrGraph& gold, const AmrGraph& pred,
                         unsigned restarts = 4, std::uint64_t seed = 0);

// splitmix-style mixer used to derive per-pair / per-metric seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace amrize
