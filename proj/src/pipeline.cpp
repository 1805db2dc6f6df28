#include "amrize/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "amrize/penman.hpp"

namespace amrize {

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
  std::string v = lower(trim(value));
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw StructuralError("config: key '" + key + "' expects a boolean, got '" +
                        value + "'");
}

Restoration parse_restoration(const std::string& value) {
  std::string v = lower(trim(value));
  if (v == "none") return Restoration::none;
  if (v == "dfs") return Restoration::dfs;
  if (v == "dependency_guided" || v == "dependency-guided")
    return Restoration::dependency_guided;
  throw StructuralError("unknown restoration '" + value +
                        "' (expected none | dfs | dependency_guided)");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// Per-sentence outcome; collected in input order.
struct LineResult {
  bool ok = false;
  std::string penman;   // full block text (comments + graph)
  std::string seq;      // linearized line
  std::string source;   // raw sentence text
  std::string error;
};

// Order-preserving parallel map: worker threads pull indices from an
// atomic counter and write into a preallocated slot, so the output is
// byte-identical at any parallelism degree.
std::vector<LineResult> parallel_lines(
    std::size_t count, unsigned jobs,
    const std::function<LineResult(std::size_t)>& fn) {
  std::vector<LineResult> results(count);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<unsigned>(jobs, 64);
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

std::string join_forms(const std::vector<Token>& tokens) {
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) s += ' ';
    s += tokens[i].form;
  }
  return s;
}

std::string render_block(const std::vector<std::string>& comments,
                         const AmrGraph& g) {
  std::string out;
  for (const std::string& c : comments) out += c + "\n";
  out += to_penman(g) + "\n";
  return out;
}

struct CorpusOutputs {
  std::string amr, seq, src, err;
  RunReport report;
};

CorpusOutputs collect_corpus(const std::vector<LineResult>& results) {
  CorpusOutputs out;
  bool first_block = true;
  for (const LineResult& r : results) {
    if (!r.ok) {
      out.err += r.error + "\n";
      ++out.report.failed_lines;
      continue;
    }
    if (!first_block) out.amr += "\n";
    first_block = false;
    out.amr += r.penman;
    out.seq += r.seq + "\n";
    out.src += r.source + "\n";
    ++out.report.ok_lines;
  }
  return out;
}

void write_corpus(const CorpusOutputs& out, const std::string& prefix) {
  write_file(prefix + ".amr", out.amr);
  write_file(prefix + ".seq", out.seq);
  write_file(prefix + ".src", out.src);
  write_file(prefix + ".err", out.err);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw StructuralError("failed writing '" + path + "'");
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(cur);
  }
  return lines;
}

SrlAmrizeConfig srl_preset(const std::string& name) {
  SrlAmrizeConfig cfg;
  std::string n = lower(trim(name));
  if (n == "trivial") {
    // defaults
  } else if (n == "arg-reduction") {
    cfg.argument_reduction = true;
  } else if (n == "reentrancy") {
    cfg.restoration = Restoration::dfs;
  } else if (n == "all") {
    cfg.argument_reduction = true;
    cfg.restoration = Restoration::dfs;
  } else if (n == "dependency_guided" || n == "dependency-guided") {
    cfg.restoration = Restoration::dependency_guided;
  } else {
    throw StructuralError("unknown SRL preset '" + name +
                          "' (expected trivial | arg-reduction | reentrancy | "
                          "all | dependency_guided)");
  }
  return cfg;
}

DpAmrizeConfig dp_preset(const std::string& name) {
  DpAmrizeConfig cfg;
  std::string n = lower(trim(name));
  if (n == "trivial") {
    cfg.relation_blocklist.clear();
    cfg.lemmatize = false;
  } else if (n == "lemma") {
    cfg.relation_blocklist.clear();
    cfg.lemmatize = true;
  } else if (n == "rel-removal") {
    cfg.lemmatize = false;
  } else if (n == "all") {
    cfg.lemmatize = true;
  } else {
    throw StructuralError(
        "unknown DP preset '" + name +
        "' (expected trivial | lemma | rel-removal | all)");
  }
  return cfg;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::size_t lineno = 0;
  for (const std::string& raw : split_lines(read_file(path))) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw StructuralError("config " + path + ": line " +
                            std::to_string(lineno) + ": expected key=value");
    kv[lower(trim(line.substr(0, eq)))] = trim(line.substr(eq + 1));
  }
  return kv;
}

SrlAmrizeConfig resolve_srl_config(const std::optional<std::string>& preset,
                                   const std::optional<std::string>& config_path,
                                   const std::optional<std::string>& restoration) {
  std::map<std::string, std::string> kv;
  if (config_path) kv = parse_config_file(*config_path);
  SrlAmrizeConfig cfg;
  if (kv.count("preset")) cfg = srl_preset(kv["preset"]);
  if (preset) cfg = srl_preset(*preset);  // flag wins over file
  if (kv.count("argument_reduction"))
    cfg.argument_reduction = parse_bool(kv["argument_reduction"], "argument_reduction");
  if (kv.count("restoration")) cfg.restoration = parse_restoration(kv["restoration"]);
  if (restoration) cfg.restoration = parse_restoration(*restoration);
  if (kv.count("virtual_root_concept")) cfg.virtual_root_concept = kv["virtual_root_concept"];
  if (kv.count("virtual_edge_prefix")) cfg.virtual_edge_prefix = kv["virtual_edge_prefix"];
  return cfg;
}

DpAmrizeConfig resolve_dp_config(const std::optional<std::string>& preset,
                                 const std::optional<std::string>& config_path) {
  std::map<std::string, std::string> kv;
  if (config_path) kv = parse_config_file(*config_path);
  DpAmrizeConfig cfg;
  if (kv.count("preset")) cfg = dp_preset(kv["preset"]);
  if (preset) cfg = dp_preset(*preset);
  if (kv.count("blocklist")) cfg.relation_blocklist = split_list(kv["blocklist"]);
  if (kv.count("lemmatize")) cfg.lemmatize = parse_bool(kv["lemmatize"], "lemmatize");
  return cfg;
}

RunReport run_amrize_srl(const std::string& srl_path,
                         const std::optional<std::string>& dep_path,
                         const SrlAmrizeConfig& cfg, const std::string& out_prefix,
                         unsigned jobs) {
  std::vector<SrlFrameSet> records;
  try {
    records = read_srl_jsonl(read_file(srl_path));
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructuralError(e.what());
  }

  std::vector<DepTree> trees;
  bool have_dep = dep_path.has_value();
  if (have_dep) {
    try {
      trees = read_conllu(read_file(*dep_path));
    } catch (const StructuralError&) {
      throw;
    } catch (const std::exception& e) {
      throw StructuralError(e.what());
    }
    if (trees.size() != records.size())
      throw StructuralError("sentence count mismatch: " + srl_path + " has " +
                            std::to_string(records.size()) + ", " + *dep_path +
                            " has " + std::to_string(trees.size()));
  } else if (cfg.argument_reduction ||
             cfg.restoration == Restoration::dependency_guided) {
    throw StructuralError(
        "this preset needs a dependency file (--dep) for reduction/restoration");
  }

  auto results = parallel_lines(records.size(), jobs, [&](std::size_t i) {
    LineResult r;
    r.source = join_forms(records[i].sentence);
    try {
      SrlAmrizeResult res =
          amrize_srl(records[i], have_dep ? &trees[i] : nullptr, cfg);
      std::vector<std::string> comments = {
          "# ::id " + std::to_string(i + 1), "# ::snt " + r.source};
      for (const std::string& w : res.warnings) comments.push_back("# ::warn " + w);
      r.penman = render_block(comments, res.graph);
      r.seq = to_line(linearize(res.graph));
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = "line " + std::to_string(i + 1) + ": " + e.what();
    }
    return r;
  });

  CorpusOutputs out = collect_corpus(results);
  write_corpus(out, out_prefix);
  return out.report;
}

RunReport run_amrize_dp(const std::string& dep_path, const DpAmrizeConfig& cfg,
                        const std::string& out_prefix, unsigned jobs) {
  std::vector<DepTree> trees;
  try {
    trees = read_conllu(read_file(dep_path));
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructuralError(e.what());
  }

  auto results = parallel_lines(trees.size(), jobs, [&](std::size_t i) {
    LineResult r;
    r.source = join_forms(trees[i].tokens);
    try {
      AmrGraph g = amrize_dp(trees[i], cfg);
      std::vector<std::string> comments = {
          "# ::id " + std::to_string(i + 1), "# ::snt " + r.source};
      r.penman = render_block(comments, g);
      r.seq = to_line(linearize(g));
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = "line " + std::to_string(i + 1) + ": " + e.what();
    }
    return r;
  });

  CorpusOutputs out = collect_corpus(results);
  write_corpus(out, out_prefix);
  return out.report;
}

RunReport linearize_file(const std::string& in_path, const std::string& out_path,
                         const std::optional<std::string>& tag, unsigned jobs) {
  auto blocks = split_penman_blocks(read_file(in_path));

  auto results = parallel_lines(blocks.size(), jobs, [&](std::size_t i) {
    LineResult r;
    try {
      AmrGraph g = from_penman(blocks[i].body);
      LinearSeq seq = linearize(g);
      if (tag) seq = tag_sequence(std::move(seq), *tag);
      r.seq = to_line(seq);
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = "block at line " + std::to_string(blocks[i].first_line) + ": " +
                e.what();
    }
    return r;
  });

  std::string out, err;
  RunReport report;
  for (const LineResult& r : results) {
    if (r.ok) {
      out += r.seq + "\n";
      ++report.ok_lines;
    } else {
      err += r.error + "\n";
      ++report.failed_lines;
    }
  }
  write_file(out_path, out);
  write_file(out_path + ".err", err);
  return report;
}

RunReport delinearize_file(const std::string& in_path, const std::string& out_path,
                           ParseMode mode, unsigned jobs) {
  auto lines = split_lines(read_file(in_path));

  auto results = parallel_lines(lines.size(), jobs, [&](std::size_t i) {
    LineResult r;
    try {
      DelinearizeResult res = delinearize(from_line(lines[i]), mode);
      std::vector<std::string> comments = {"# ::id " + std::to_string(i + 1)};
      if (res.repairs > 0)
        comments.push_back("# ::repairs " + std::to_string(res.repairs));
      r.penman = render_block(comments, res.graph);
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = "line " + std::to_string(i + 1) + ": " + e.what();
    }
    return r;
  });

  std::string out, err;
  RunReport report;
  bool first = true;
  for (const LineResult& r : results) {
    if (r.ok) {
      if (!first) out += "\n";
      first = false;
      out += r.penman;
      ++report.ok_lines;
    } else {
      err += r.error + "\n";
      ++report.failed_lines;
    }
  }
  write_file(out_path, out);
  write_file(out_path + ".err", err);
  return report;
}

RunReport eval_files(const std::string& gold_path, const std::string& pred_path,
                     const EvalOptions& opts, std::ostream& out) {
  if (opts.restarts == 0) throw StructuralError("eval: restarts must be positive");
  std::vector<PenmanBlock> gold, pred;
  try {
    gold = read_penman_corpus(read_file(gold_path));
    pred = read_penman_corpus(read_file(pred_path));
  } catch (const StructuralError&) {
    throw;
  } catch (const std::exception& e) {
    throw StructuralError(e.what());
  }
  if (gold.size() != pred.size())
    throw StructuralError("eval: corpora differ in size (" +
                          std::to_string(gold.size()) + " gold vs " +
                          std::to_string(pred.size()) + " predicted blocks)");

  std::vector<ScoreReport> reports(gold.size());
  auto worker_results = parallel_lines(gold.size(), opts.jobs, [&](std::size_t i) {
    LineResult r;
    try {
      reports[i] = fine_grained(gold[i].graph, pred[i].graph, opts.restarts,
                                mix_seed(opts.seed, i));
      r.ok = true;
    } catch (const std::exception& e) {
      r.error = "pair " + std::to_string(i + 1) + ": " + e.what();
    }
    return r;
  });
  for (std::size_t i = 0; i < worker_results.size(); ++i)
    if (!worker_results[i].ok)
      throw StructuralError(worker_results[i].error);

  // micro-average: sum matched and totals per metric over all pairs
  ScoreReport corpus;
  for (Metric m : kAllMetrics) {
    MetricScore sum;
    for (const ScoreReport& r : reports) {
      sum.matched += r[m].matched;
      sum.gold_total += r[m].gold_total;
      sum.pred_total += r[m].pred_total;
    }
    sum.applicable = sum.gold_total > 0 || sum.pred_total > 0;
    sum.precision = sum.pred_total
                        ? static_cast<double>(sum.matched) / sum.pred_total
                        : 0.0;
    sum.recall = sum.gold_total
                     ? static_cast<double>(sum.matched) / sum.gold_total
                     : 0.0;
    sum.f1 = (sum.precision + sum.recall) > 0.0
                 ? 2.0 * sum.precision * sum.recall / (sum.precision + sum.recall)
                 : 0.0;
    corpus[m] = sum;
  }

  out << "pairs=" << gold.size() << "\n";
  out << "metric        P       R       F1      matched gold    pred    n/a\n";
  for (Metric m : kAllMetrics) {
    const MetricScore& s = corpus[m];
    char row[160];
    std::snprintf(row, sizeof row, "%-12s  %s  %s  %s  %-7zu %-7zu %-7zu %s\n",
                  metric_name(m), fmt4(s.precision).c_str(),
                  fmt4(s.recall).c_str(), fmt4(s.f1).c_str(), s.matched,
                  s.gold_total, s.pred_total, s.applicable ? "-" : "yes");
    out << row;
  }
  for (Metric m : kAllMetrics) {
    const MetricScore& s = corpus[m];
    out << "metric=" << metric_name(m) << " p=" << fmt4(s.precision)
        << " r=" << fmt4(s.recall) << " f=" << fmt4(s.f1)
        << " matched=" << s.matched << " gold=" << s.gold_total
        << " pred=" << s.pred_total << " na=" << (s.applicable ? 0 : 1) << "\n";
  }

  if (opts.json_path) {
    nlohmann::json j;
    j["pairs"] = gold.size();
    j["restarts"] = opts.restarts;
    j["seed"] = opts.seed;
    nlohmann::json metrics = nlohmann::json::object();
    for (Metric m : kAllMetrics) {
      const MetricScore& s = corpus[m];
      metrics[metric_name(m)] = {
          {"precision", s.precision}, {"recall", s.recall},   {"f1", s.f1},
          {"matched", s.matched},     {"gold", s.gold_total}, {"pred", s.pred_total},
          {"not_applicable", !s.applicable},
      };
    }
    j["metrics"] = metrics;
    write_file(*opts.json_path, j.dump(2) + "\n");
  }

  RunReport report;
  report.ok_lines = gold.size();
  return report;
}

CorpusStats collect_stats(const std::string& penman_text,
                          std::vector<std::string>& errors) {
  CorpusStats stats;
  for (const RawPenmanBlock& block : split_penman_blocks(penman_text)) {
    try {
      AmrGraph g = from_penman(block.body);
      ++stats.sentences;
      stats.nodes += g.nodes.size();
      stats.edges += g.edges.size();
      stats.reentrancies += reentrancy_count(g);
      for (const Edge& e : g.edges) ++stats.relation_histogram[e.relation];
    } catch (const std::exception& e) {
      errors.push_back("block at line " + std::to_string(block.first_line) +
                       ": " + e.what());
    }
  }
  return stats;
}

namespace {

void print_stats(std::ostream& out, const std::string& label,
                 const CorpusStats& s) {
  out << label << ".sentences=" << s.sentences << "\n";
  out << label << ".nodes=" << s.nodes << "\n";
  out << label << ".edges=" << s.edges << "\n";
  out << label << ".reentrancies=" << s.reentrancies << "\n";
  for (const auto& [rel, count] : s.relation_histogram)
    out << label << ".relation " << rel << "=" << count << "\n";
}

}  // namespace

RunReport stats_files(const std::string& in_path,
                      const std::optional<std::string>& compare_path,
                      std::ostream& out) {
  std::vector<std::string> errors;
  CorpusStats main_stats = collect_stats(read_file(in_path), errors);
  print_stats(out, "in", main_stats);
  if (compare_path) {
    CorpusStats cmp = collect_stats(read_file(*compare_path), errors);
    print_stats(out, "compare", cmp);
    long long delta = static_cast<long long>(main_stats.reentrancies) -
                      static_cast<long long>(cmp.reentrancies);
    out << "reentrancy_delta=" << delta << "\n";
  }
  for (const std::string& e : errors) out << "error: " << e << "\n";
  RunReport report;
  report.ok_lines = main_stats.sentences;
  report.failed_lines = errors.size();
  return report;
}

RunReport make_mtl(const std::vector<MtlTask>& tasks, const std::string& out_prefix,
                   bool shuffle, std::uint64_t seed) {
  if (tasks.empty()) throw StructuralError("make-mtl: no tasks given");
  struct Pair {
    std::string src, tgt;
  };
  std::vector<Pair> merged;
  nlohmann::json manifest_tasks = nlohmann::json::array();
  for (const MtlTask& task : tasks) {
    auto src = split_lines(read_file(task.source_path));
    auto tgt = split_lines(read_file(task.target_path));
    if (src.size() != tgt.size())
      throw StructuralError("task " + task.name + ": source has " +
                            std::to_string(src.size()) + " lines, target has " +
                            std::to_string(tgt.size()));
    std::size_t start = merged.size();
    std::string tag = "<" + task.name + ">";
    for (std::size_t i = 0; i < src.size(); ++i)
      merged.push_back({tag + " " + src[i], tgt[i]});
    nlohmann::json t;
    t["name"] = task.name;
    t["tag"] = tag;
    t["source"] = task.source_path;
    t["target"] = task.target_path;
    t["count"] = src.size();
    if (shuffle)
      t["range"] = nullptr;
    else
      t["range"] = {start, merged.size()};
    manifest_tasks.push_back(t);
  }

  if (shuffle) {
    // deterministic Fisher–Yates, same draw sequence on every platform
    std::mt19937_64 rng(seed);
    for (std::size_t i = merged.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(merged[i - 1], merged[j]);
    }
  }

  std::string src_out, tgt_out;
  for (const Pair& p : merged) {
    src_out += p.src + "\n";
    tgt_out += p.tgt + "\n";
  }
  write_file(out_prefix + ".src", src_out);
  write_file(out_prefix + ".tgt", tgt_out);

  nlohmann::json manifest;
  manifest["seed"] = seed;
  manifest["shuffled"] = shuffle;
  manifest["total"] = merged.size();
  manifest["tasks"] = manifest_tasks;
  write_file(out_prefix + ".manifest.json", manifest.dump(2) + "\n");

  RunReport report;
  report.ok_lines = merged.size();
  return report;
}

RunReport make_itl(const std::vector<MtlTask>& tasks, const std::string& out_prefix) {
  if (tasks.empty()) throw StructuralError("make-itl: no tasks given");
  RunReport report;
  for (const MtlTask& task : tasks) {
    auto src = split_lines(read_file(task.source_path));
    auto tgt = split_lines(read_file(task.target_path));
    if (src.size() != tgt.size())
      throw StructuralError("task " + task.name + ": source has " +
                            std::to_string(src.size()) + " lines, target has " +
                            std::to_string(tgt.size()));
    std::string src_out, tgt_out;
    for (const std::string& s : src) src_out += s + "\n";
    for (const std::string& t : tgt) tgt_out += t + "\n";
    write_file(out_prefix + "." + task.name + ".src", src_out);
    write_file(out_prefix + "." + task.name + ".tgt", tgt_out);
    report.ok_lines += src.size();
  }
  return report;
}

}  // namespace amrize
