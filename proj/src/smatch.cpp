#include "amrize/smatch.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace amrize {

namespace {

constexpr const char* kMetricNames[8] = {
    "smatch", "unlabeled", "no_wsd", "concept",
    "ner",    "negation",  "reentrancy", "srl",
};

bool has_sense_suffix(const std::string& concept_label, std::size_t& cut) {
  auto dash = concept_label.rfind('-');
  if (dash == std::string::npos || dash == 0) return false;
  if (concept_label.size() - dash - 1 < 2) return false;
  for (std::size_t i = dash + 1; i < concept_label.size(); ++i)
    if (concept_label[i] < '0' || concept_label[i] > '9') return false;
  cut = dash;
  return true;
}

std::string strip_sense(const std::string& concept_label) {
  std::size_t cut = 0;
  if (has_sense_suffix(concept_label, cut)) return concept_label.substr(0, cut);
  return concept_label;
}

}  // namespace

const char* metric_name(Metric m) { return kMetricNames[static_cast<int>(m)]; }

TripleSet extract_triples(const AmrGraph& g) {
  auto vars = assign_variables(g);  // throws on disconnected graphs
  TripleSet t;
  for (const Node& n : g.nodes) t.instances.emplace_back(vars[n.id], n.concept_name);
  t.attributes.emplace_back(vars[g.root], "TOP", g.nodes[g.root].concept_name);
  for (const Edge& e : g.edges)
    t.relations.emplace_back(vars[e.source], e.relation, vars[e.target]);
  return t;
}

TripleSet transform_for_metric(const TripleSet& triples, Metric m) {
  switch (m) {
    case Metric::Smatch:
      return triples;
    case Metric::Unlabeled: {
      TripleSet t = triples;
      for (auto& r : t.relations) std::get<1>(r) = ":rel";
      return t;
    }
    case Metric::NoWsd: {
      TripleSet t = triples;
      for (auto& inst : t.instances) inst.second = strip_sense(inst.second);
      // the TOP constant mirrors the root concept, so it is stripped too
      for (auto& a : t.attributes)
        if (std::get<1>(a) == "TOP") std::get<2>(a) = strip_sense(std::get<2>(a));
      return t;
    }
    case Metric::Concept: {
      TripleSet t;
      t.instances = triples.instances;
      return t;
    }
    case Metric::Ner: {
      // :name edges, the name subgraphs they point into, and head instances
      std::unordered_map<std::string, std::vector<std::string>> out_edges;
      for (const auto& r : triples.relations)
        out_edges[std::get<0>(r)].push_back(std::get<2>(r));
      std::unordered_set<std::string> sub_vars, head_vars;
      for (const auto& r : triples.relations) {
        if (std::get<1>(r) != ":name") continue;
        head_vars.insert(std::get<0>(r));
        std::vector<std::string> frontier = {std::get<2>(r)};
        while (!frontier.empty()) {
          std::string v = frontier.back();
          frontier.pop_back();
          if (!sub_vars.insert(v).second) continue;
          auto it = out_edges.find(v);
          if (it != out_edges.end())
            frontier.insert(frontier.end(), it->second.begin(), it->second.end());
        }
      }
      TripleSet t;
      for (const auto& inst : triples.instances)
        if (sub_vars.count(inst.first) || head_vars.count(inst.first))
          t.instances.push_back(inst);
      for (const auto& r : triples.relations)
        if (std::get<1>(r) == ":name" || sub_vars.count(std::get<0>(r)))
          t.relations.push_back(r);
      return t;
    }
    case Metric::Negation: {
      TripleSet t;
      for (const auto& r : triples.relations)
        if (std::get<1>(r) == ":polarity") t.relations.push_back(r);
      return t;
    }
    case Metric::Reentrancy: {
      std::unordered_map<std::string, int> indeg;
      for (const auto& r : triples.relations) ++indeg[std::get<2>(r)];
      std::unordered_set<std::string> keep;
      TripleSet t;
      for (const auto& r : triples.relations) {
        auto it = indeg.find(std::get<2>(r));
        if (it == indeg.end() || it->second < 2) continue;
        t.relations.push_back(r);
        keep.insert(std::get<0>(r));
        keep.insert(std::get<2>(r));
      }
      for (const auto& inst : triples.instances)
        if (keep.count(inst.first)) t.instances.push_back(inst);
      return t;
    }
    case Metric::Srl: {
      TripleSet t;
      for (const auto& r : triples.relations)
        if (std::get<1>(r).rfind(":ARG", 0) == 0) t.relations.push_back(r);
      return t;
    }
  }
  return triples;
}

namespace {

// Interned, integer-coded view of one side's triples. Variable ids are
// per-side; symbol ids (concepts, relations, constants) are shared.
struct SymbolPool {
  std::unordered_map<std::string, int> ids;
  int intern(const std::string& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(ids.size()));
    return it->second;
  }
};

struct Side {
  std::vector<std::string> vars;
  std::unordered_map<std::string, int> var_id;
  std::vector<std::pair<int, int>> inst;    // (var, concept)
  std::vector<std::array<int, 3>> attr;     // (var, rel, const)
  std::vector<std::array<int, 3>> rel;      // (var, rel, var)

  int var(const std::string& name) {
    auto [it, inserted] = var_id.emplace(name, static_cast<int>(vars.size()));
    if (inserted) vars.push_back(name);
    return it->second;
  }

  std::size_t total() const { return inst.size() + attr.size() + rel.size(); }
};

Side encode(const TripleSet& t, SymbolPool& pool) {
  Side s;
  for (const auto& [v, c] : t.instances) s.inst.push_back({s.var(v), pool.intern(c)});
  for (const auto& [v, r, c] : t.attributes)
    s.attr.push_back({s.var(v), pool.intern(r), pool.intern(c)});
  for (const auto& [v1, r, v2] : t.relations)
    s.rel.push_back({s.var(v1), pool.intern(r), s.var(v2)});
  return s;
}

std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return (a << 42) | (b << 21) | c;
}

// Multiset counts of the large side's triples, keyed by packed encoding.
struct TargetCounts {
  std::unordered_map<std::uint64_t, int> inst, attr, rel;

  explicit TargetCounts(const Side& large) {
    for (const auto& [v, c] : large.inst) ++inst[pack(0, v, c)];
    for (const auto& a : large.attr) ++attr[pack(a[0], a[1], a[2])];
    for (const auto& r : large.rel) ++rel[pack(r[0], r[1], r[2])];
  }
};

// Matched-triple count for an injective total mapping small→large.
std::size_t matched_count(const Side& small, const TargetCounts& counts,
                          const std::vector<int>& mapping) {
  std::unordered_map<std::uint64_t, int> used_inst, used_attr, used_rel;
  std::size_t matched = 0;
  auto consume = [&](const std::unordered_map<std::uint64_t, int>& pool,
                     std::unordered_map<std::uint64_t, int>& used,
                     std::uint64_t key) {
    auto it = pool.find(key);
    if (it == pool.end()) return;
    int& u = used[key];
    if (u < it->second) {
      ++u;
      ++matched;
    }
  };
  for (const auto& [v, c] : small.inst)
    consume(counts.inst, used_inst, pack(0, mapping[v], c));
  for (const auto& a : small.attr)
    consume(counts.attr, used_attr, pack(mapping[a[0]], a[1], a[2]));
  for (const auto& r : small.rel)
    consume(counts.rel, used_rel, pack(mapping[r[0]], r[1], mapping[r[2]]));
  return matched;
}

struct AlignProblem {
  Side small, large;
  bool small_is_pred = false;

  std::size_t evaluate(const std::vector<int>& mapping,
                       const TargetCounts& counts) const {
    return matched_count(small, counts, mapping);
  }
};

AlignProblem make_problem(const TripleSet& gold, const TripleSet& pred) {
  SymbolPool pool;
  Side g = encode(gold, pool);
  Side p = encode(pred, pool);
  AlignProblem prob;
  if (p.vars.size() <= g.vars.size()) {
    prob.small = std::move(p);
    prob.large = std::move(g);
    prob.small_is_pred = true;
  } else {
    prob.small = std::move(g);
    prob.large = std::move(p);
    prob.small_is_pred = false;
  }
  return prob;
}

MetricScore finish_score(std::size_t matched, std::size_t gold_total,
                         std::size_t pred_total) {
  MetricScore s;
  s.matched = matched;
  s.gold_total = gold_total;
  s.pred_total = pred_total;
  s.applicable = gold_total > 0 || pred_total > 0;
  s.precision = pred_total ? static_cast<double>(matched) / pred_total : 0.0;
  s.recall = gold_total ? static_cast<double>(matched) / gold_total : 0.0;
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

// deterministic Fisher–Yates over indices [0, n)
std::vector<int> shuffled_indices(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

std::vector<int> concept_seeded_mapping(const AlignProblem& prob) {
  const std::size_t ns = prob.small.vars.size(), nl = prob.large.vars.size();
  // first concept per variable on each side
  std::vector<int> small_concept(ns, -1), large_concept(nl, -1);
  for (const auto& [v, c] : prob.small.inst)
    if (small_concept[v] < 0) small_concept[v] = c;
  for (const auto& [v, c] : prob.large.inst)
    if (large_concept[v] < 0) large_concept[v] = c;
  std::vector<int> mapping(ns, -1);
  std::vector<bool> used(nl, false);
  for (std::size_t i = 0; i < ns; ++i) {
    if (small_concept[i] < 0) continue;
    for (std::size_t j = 0; j < nl; ++j) {
      if (used[j] || large_concept[j] != small_concept[i]) continue;
      mapping[i] = static_cast<int>(j);
      used[j] = true;
      break;
    }
  }
  std::size_t next_free = 0;
  for (std::size_t i = 0; i < ns; ++i) {
    if (mapping[i] >= 0) continue;
    while (used[next_free]) ++next_free;
    mapping[i] = static_cast<int>(next_free);
    used[next_free] = true;
  }
  return mapping;
}

std::size_t hill_climb(const AlignProblem& prob, const TargetCounts& counts,
                       std::vector<int>& mapping) {
  const std::size_t ns = prob.small.vars.size(), nl = prob.large.vars.size();
  std::size_t best = prob.evaluate(mapping, counts);
  bool improved = true;
  while (improved) {
    improved = false;
    std::size_t best_gain_score = best;
    int move_i = -1, move_j = -1;
    bool move_is_swap = false;

    std::vector<bool> used(nl, false);
    for (int t : mapping) used[t] = true;

    for (std::size_t i = 0; i < ns; ++i) {
      // reassign small var i to an unused large var
      int original = mapping[i];
      for (std::size_t j = 0; j < nl; ++j) {
        if (used[j]) continue;
        mapping[i] = static_cast<int>(j);
        std::size_t sc = prob.evaluate(mapping, counts);
        if (sc > best_gain_score) {
          best_gain_score = sc;
          move_i = static_cast<int>(i);
          move_j = static_cast<int>(j);
          move_is_swap = false;
        }
      }
      mapping[i] = original;
      // swap targets with a later small var
      for (std::size_t k = i + 1; k < ns; ++k) {
        std::swap(mapping[i], mapping[k]);
        std::size_t sc = prob.evaluate(mapping, counts);
        if (sc > best_gain_score) {
          best_gain_score = sc;
          move_i = static_cast<int>(i);
          move_j = static_cast<int>(k);
          move_is_swap = true;
        }
        std::swap(mapping[i], mapping[k]);
      }
    }

    if (move_i >= 0) {
      if (move_is_swap)
        std::swap(mapping[move_i], mapping[move_j]);
      else
        mapping[move_i] = move_j;
      best = best_gain_score;
      improved = true;
    }
  }
  return best;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MetricScore score_triples(const TripleSet& gold, const TripleSet& pred,
                          unsigned restarts, std::uint64_t seed) {
  if (restarts == 0)
    throw std::invalid_argument("score_triples: restarts must be positive");
  AlignProblem prob = make_problem(gold, pred);
  const std::size_t ns = prob.small.vars.size(), nl = prob.large.vars.size();
  if (ns == 0)
    return finish_score(0, gold.total(), pred.total());

  TargetCounts counts(prob.large);
  std::mt19937_64 rng(seed);
  std::size_t best = 0;
  for (unsigned r = 0; r < restarts; ++r) {
    std::vector<int> mapping;
    if (r == 0) {
      mapping = concept_seeded_mapping(prob);
    } else {
      std::vector<int> perm = shuffled_indices(nl, rng);
      mapping.assign(perm.begin(), perm.begin() + ns);
    }
    best = std::max(best, hill_climb(prob, counts, mapping));
  }
  return finish_score(best, gold.total(), pred.total());
}

MetricScore score_triples_exact(const TripleSet& gold, const TripleSet& pred) {
  AlignProblem prob = make_problem(gold, pred);
  const std::size_t ns = prob.small.vars.size(), nl = prob.large.vars.size();
  if (ns > 8)
    throw std::invalid_argument("score_triples_exact: too many variables");
  if (ns == 0)
    return finish_score(0, gold.total(), pred.total());

  TargetCounts counts(prob.large);
  std::vector<int> mapping(ns, -1);
  std::vector<bool> used(nl, false);
  std::size_t best = 0;
  // depth-first over all injective assignments
  std::size_t depth = 0;
  std::vector<int> cursor(ns, -1);
  while (true) {
    if (depth == ns) {
      best = std::max(best, prob.evaluate(mapping, counts));
      --depth;
    }
    int j = cursor[depth] + 1;
    if (mapping[depth] >= 0) {
      used[mapping[depth]] = false;
      mapping[depth] = -1;
    }
    while (j < static_cast<int>(nl) && used[j]) ++j;
    if (j >= static_cast<int>(nl)) {
      cursor[depth] = -1;
      if (depth == 0) break;
      --depth;
      continue;
    }
    cursor[depth] = j;
    mapping[depth] = j;
    used[j] = true;
    ++depth;
  }
  return finish_score(best, gold.total(), pred.total());
}

ScoreReport smatch(const AmrGraph& gold, const AmrGraph& pred, unsigned restarts,
                   std::uint64_t seed) {
  ScoreReport report;
  report[Metric::Smatch] =
      score_triples(extract_triples(gold), extract_triples(pred), restarts, seed);
  return report;
}

ScoreReport brute_force_smatch(const AmrGraph& gold, const AmrGraph& pred) {
  ScoreReport report;
  report[Metric::Smatch] =
      score_triples_exact(extract_triples(gold), extract_triples(pred));
  return report;
}

ScoreReport fine_grained(const AmrGraph& gold, const AmrGraph& pred,
                         unsigned restarts, std::uint64_t seed) {
  TripleSet g = extract_triples(gold);
  TripleSet p = extract_triples(pred);
  ScoreReport report;
  for (Metric m : kAllMetrics) {
    auto idx = static_cast<std::uint64_t>(m);
    report[m] = score_triples(transform_for_metric(g, m), transform_for_metric(p, m),
                              restarts, mix_seed(seed, idx));
  }
  return report;
}

}  // namespace amrize
