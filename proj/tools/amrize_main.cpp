#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "amrize/pipeline.hpp"

namespace {

amrize::MtlTask parse_task_spec(const std::string& spec) {
  auto first = spec.find(':');
  auto second = first == std::string::npos ? std::string::npos
                                           : spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw amrize::StructuralError("--task expects NAME:SOURCE:TARGET, got '" +
                                  spec + "'");
  amrize::MtlTask task;
  task.name = spec.substr(0, first);
  task.source_path = spec.substr(first + 1, second - first - 1);
  task.target_path = spec.substr(second + 1);
  if (task.name.empty() || task.source_path.empty() || task.target_path.empty())
    throw amrize::StructuralError("--task expects NAME:SOURCE:TARGET, got '" +
                                  spec + "'");
  return task;
}

std::optional<std::string> opt(const std::string& s) {
  return s.empty() ? std::nullopt : std::optional<std::string>(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PseudoAMR corpus toolkit: AMRization, linearization, evaluation"};
  app.require_subcommand(1);

  // amrize-srl
  std::string srl_path, srl_dep, srl_preset_name, srl_config, srl_restoration;
  std::string srl_prefix = "out";
  unsigned srl_jobs = 1;
  auto* cmd_srl = app.add_subcommand(
      "amrize-srl", "SRL JSONL (+ CoNLL-U) -> PseudoAMR corpus");
  cmd_srl->add_option("--srl", srl_path, "SRL frames, one JSON record per line")
      ->required();
  cmd_srl->add_option("--dep", srl_dep, "CoNLL-U dependency file (same sentences)");
  cmd_srl->add_option("--preset", srl_preset_name,
                      "trivial | arg-reduction | reentrancy | all | dependency_guided");
  cmd_srl->add_option("--config", srl_config, "key=value config file");
  cmd_srl->add_option("--restoration", srl_restoration,
                      "none | dfs | dependency_guided (overrides preset)");
  cmd_srl->add_option("--out-prefix", srl_prefix, "output prefix (.amr/.seq/.src/.err)");
  cmd_srl->add_option("--jobs", srl_jobs, "worker threads");

  // amrize-dp
  std::string dp_dep, dp_preset_name, dp_config;
  std::string dp_prefix = "out";
  unsigned dp_jobs = 1;
  auto* cmd_dp = app.add_subcommand("amrize-dp", "CoNLL-U -> PseudoAMR corpus");
  cmd_dp->add_option("--dep", dp_dep, "CoNLL-U dependency file")->required();
  cmd_dp->add_option("--preset", dp_preset_name, "trivial | lemma | rel-removal | all");
  cmd_dp->add_option("--config", dp_config, "key=value config file");
  cmd_dp->add_option("--out-prefix", dp_prefix, "output prefix (.amr/.seq/.src/.err)");
  cmd_dp->add_option("--jobs", dp_jobs, "worker threads");

  // linearize
  std::string lin_in, lin_out, lin_tag;
  unsigned lin_jobs = 1;
  auto* cmd_lin = app.add_subcommand("linearize", "Penman corpus -> sequence lines");
  cmd_lin->add_option("--in", lin_in, "Penman corpus")->required();
  cmd_lin->add_option("--out", lin_out, "sequence file")->required();
  cmd_lin->add_option("--tag", lin_tag, "task tag prepended as <TAG>");
  cmd_lin->add_option("--jobs", lin_jobs, "worker threads");

  // delinearize
  std::string del_in, del_out, del_mode = "strict";
  unsigned del_jobs = 1;
  auto* cmd_del = app.add_subcommand("delinearize", "sequence lines -> Penman corpus");
  cmd_del->add_option("--in", del_in, "sequence file")->required();
  cmd_del->add_option("--out", del_out, "Penman corpus")->required();
  cmd_del->add_option("--mode", del_mode, "strict | lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));
  cmd_del->add_option("--jobs", del_jobs, "worker threads");

  // eval
  std::string eval_gold, eval_pred, eval_json;
  unsigned eval_restarts = 4, eval_jobs = 1;
  std::uint64_t eval_seed = 0;
  auto* cmd_eval = app.add_subcommand("eval", "score predicted graphs against gold");
  cmd_eval->add_option("--gold", eval_gold, "gold Penman corpus")->required();
  cmd_eval->add_option("--pred", eval_pred, "predicted Penman corpus")->required();
  cmd_eval->add_option("--restarts", eval_restarts, "hill-climbing restarts");
  cmd_eval->add_option("--seed", eval_seed, "alignment seed");
  cmd_eval->add_option("--jobs", eval_jobs, "worker threads");
  cmd_eval->add_option("--json", eval_json, "also write a JSON report here");

  // stats
  std::string stats_in, stats_compare;
  auto* cmd_stats = app.add_subcommand("stats", "corpus counts and reentrancy totals");
  cmd_stats->add_option("--in", stats_in, "Penman corpus")->required();
  cmd_stats->add_option("--compare", stats_compare,
                        "second corpus for the reentrancy delta");

  // make-mtl
  std::vector<std::string> mtl_specs;
  std::string mtl_prefix = "mtl";
  bool mtl_shuffle = false;
  std::uint64_t mtl_seed = 0;
  auto* cmd_mtl = app.add_subcommand("make-mtl", "merge tasks into tagged files");
  cmd_mtl->add_option("--task", mtl_specs, "NAME:SOURCE:TARGET (repeatable)")
      ->required();
  cmd_mtl->add_flag("--shuffle", mtl_shuffle, "shuffle merged lines (seeded)");
  cmd_mtl->add_option("--seed", mtl_seed, "shuffle seed");
  cmd_mtl->add_option("--out-prefix", mtl_prefix, "output prefix");

  // make-itl
  std::vector<std::string> itl_specs;
  std::string itl_prefix = "itl";
  auto* cmd_itl = app.add_subcommand("make-itl", "emit per-task files, untagged");
  cmd_itl->add_option("--task", itl_specs, "NAME:SOURCE:TARGET (repeatable)")
      ->required();
  cmd_itl->add_option("--out-prefix", itl_prefix, "output prefix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    amrize::RunReport report;
    if (cmd_srl->parsed()) {
      auto cfg = amrize::resolve_srl_config(opt(srl_preset_name), opt(srl_config),
                                            opt(srl_restoration));
      report = amrize::run_amrize_srl(srl_path, opt(srl_dep), cfg, srl_prefix,
                                      srl_jobs);
    } else if (cmd_dp->parsed()) {
      auto cfg = amrize::resolve_dp_config(opt(dp_preset_name), opt(dp_config));
      report = amrize::run_amrize_dp(dp_dep, cfg, dp_prefix, dp_jobs);
    } else if (cmd_lin->parsed()) {
      report = amrize::linearize_file(lin_in, lin_out, opt(lin_tag), lin_jobs);
    } else if (cmd_del->parsed()) {
      report = amrize::delinearize_file(del_in, del_out,
                                        del_mode == "lenient"
                                            ? amrize::ParseMode::lenient
                                            : amrize::ParseMode::strict,
                                        del_jobs);
    } else if (cmd_eval->parsed()) {
      amrize::EvalOptions opts;
      opts.restarts = eval_restarts;
      opts.seed = eval_seed;
      opts.jobs = eval_jobs;
      opts.json_path = opt(eval_json);
      report = amrize::eval_files(eval_gold, eval_pred, opts, std::cout);
    } else if (cmd_stats->parsed()) {
      report = amrize::stats_files(stats_in, opt(stats_compare), std::cout);
    } else if (cmd_mtl->parsed()) {
      std::vector<amrize::MtlTask> tasks;
      for (const std::string& s : mtl_specs) tasks.push_back(parse_task_spec(s));
      report = amrize::make_mtl(tasks, mtl_prefix, mtl_shuffle, mtl_seed);
    } else if (cmd_itl->parsed()) {
      std::vector<amrize::MtlTask> tasks;
      for (const std::string& s : itl_specs) tasks.push_back(parse_task_spec(s));
      report = amrize::make_itl(tasks, itl_prefix);
    }
    if (report.failed_lines)
      std::cerr << report.failed_lines << " sentence(s) failed; see the .err log\n";
    return report.exit_code();
  } catch (const amrize::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
