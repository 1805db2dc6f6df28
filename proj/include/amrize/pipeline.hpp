#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "amrize/dp_amrize.hpp"
#include "amrize/linearize.hpp"
#include "amrize/smatch.hpp"
#include "amrize/srl_amrize.hpp"

namespace amrize {

// Structural problems abort a run before (or instead of) per-line work:
// unreadable files, count mismatches, unknown presets. Exit code 1.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunReport {
  std::size_t ok_lines = 0;
  std::size_t failed_lines = 0;
  int exit_code() const { return failed_lines ? 2 : 0; }
};

// Ablation presets.
//   SRL: trivial | arg-reduction | reentrancy | all | dependency_guided
//   DP:  trivial | lemma | rel-removal | all
SrlAmrizeConfig srl_preset(const std::string& name);
DpAmrizeConfig dp_preset(const std::string& name);

// "key=value" lines, '#' comments. Returned in file order, later duplicates
// override earlier ones when applied.
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Assemble configs from an optional preset name, optional config file, and
// optional individual overrides (restoration / blocklist / lemmatize).
SrlAmrizeConfig resolve_srl_config(const std::optional<std::string>& preset,
                                   const std::optional<std::string>& config_path,
                                   const std::optional<std::string>& restoration);
DpAmrizeConfig resolve_dp_config(const std::optional<std::string>& preset,
                                 const std::optional<std::string>& config_path);

// Corpus runs write <prefix>.amr, <prefix>.seq, <prefix>.src and a
// <prefix>.err sidecar with one line per failed sentence; failed sentences
// are skipped, so error-log lines + output lines = input lines.
RunReport run_amrize_srl(const std::string& srl_path,
                         const std::optional<std::string>& dep_path,
                         const SrlAmrizeConfig& cfg, const std::string& out_prefix,
                         unsigned jobs);
RunReport run_amrize_dp(const std::string& dep_path, const DpAmrizeConfig& cfg,
                        const std::string& out_prefix, unsigned jobs);

// Penman corpus -> one linearized line per block (optionally task-tagged).
RunReport linearize_file(const std::string& in_path, const std::string& out_path,
                         const std::optional<std::string>& tag, unsigned jobs);
// One sequence line per input line -> Penman corpus. Lenient repairs are
// recorded as "# ::repairs N" comments on the affected blocks.
RunReport delinearize_file(const std::string& in_path, const std::string& out_path,
                           ParseMode mode, unsigned jobs);

struct EvalOptions {
  unsigned restarts = 4;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::optional<std::string> json_path;
};

// Micro-averaged fine-grained scores over aligned corpora; human-readable
// table plus one machine-readable "metric=... p=..." line per metric.
RunReport eval_files(const std::string& gold_path, const std::string& pred_path,
                     const EvalOptions& opts, std::ostream& out);

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t reentrancies = 0;
  std::map<std::string, std::size_t> relation_histogram;
};

CorpusStats collect_stats(const std::string& penman_text,
                          std::vector<std::string>& errors);

// Counts for one corpus; with a comparison corpus, also the
// restored-reentrancy delta (in minus compare).
RunReport stats_files(const std::string& in_path,
                      const std::optional<std::string>& compare_path,
                      std::ostream& out);

struct MtlTask {
  std::string name;  // tag is "<NAME>"
  std::string source_path;
  std::string target_path;
};

// Merged multi-task files <prefix>.src/.tgt (sources tag-prefixed) plus a
// <prefix>.manifest.json with per-task counts and (unshuffled) line ranges.
RunReport make_mtl(const std::vector<MtlTask>& tasks, const std::string& out_prefix,
                   bool shuffle, std::uint64_t seed);
// Intermediate-task layout: untagged per-task copies <prefix>.<NAME>.src/.tgt.
RunReport make_itl(const std::vector<MtlTask>& tasks, const std::string& out_prefix);

// Shared file helpers (exposed for tests and the CLI).
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::vector<std::string> split_lines(const std::string& text);

}  // namespace amrize
