#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amrize/dp_amrize.hpp"
#include "amrize/graph.hpp"
#include "amrize/lemmatizer.hpp"
#include "amrize/linearize.hpp"
#include "amrize/penman.hpp"
#include "amrize/pipeline.hpp"
#include "amrize/smatch.hpp"
#include "amrize/srl.hpp"
#include "amrize/srl_amrize.hpp"

namespace py = pybind11;
using namespace amrize;

namespace {

py::dict score_to_dict(const MetricScore& s) {
  py::dict d;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f1"] = s.f1;
  d["matched"] = s.matched;
  d["gold"] = s.gold_total;
  d["pred"] = s.pred_total;
  d["applicable"] = s.applicable;
  return d;
}

py::dict report_to_dict(const ScoreReport& r) {
  py::dict d;
  for (Metric m : kAllMetrics) d[metric_name(m)] = score_to_dict(r[m]);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "PseudoAMR toolkit: AMRization, linearization, graph scoring";

  py::class_<Node>(m, "Node")
      .def_readonly("id", &Node::id)
      .def_readonly("concept", &Node::concept_name)
      .def("__repr__", [](const Node& n) {
        return "Node(" + std::to_string(n.id) + ", '" + n.concept_name + "')";
      });

  py::class_<Edge>(m, "Edge")
      .def_readonly("source", &Edge::source)
      .def_readonly("relation", &Edge::relation)
      .def_readonly("target", &Edge::target);

  py::class_<AmrGraph>(m, "AmrGraph")
      .def(py::init<>())
      .def_readonly("nodes", &AmrGraph::nodes)
      .def_readonly("edges", &AmrGraph::edges)
      .def_readonly("root", &AmrGraph::root)
      .def("add_node", &AmrGraph::add_node, py::arg("concept"))
      .def("add_edge", &AmrGraph::add_edge, py::arg("source"), py::arg("relation"),
           py::arg("target"))
      .def("set_root", [](AmrGraph& g, NodeId root) { g.root = root; })
      .def("__repr__", [](const AmrGraph& g) { return to_penman(g); });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("well_formed", &ValidationReport::well_formed)
      .def_readonly("connected", &ValidationReport::connected)
      .def_readonly("acyclic", &ValidationReport::acyclic)
      .def_readonly("unreachable_nodes", &ValidationReport::unreachable_nodes);

  m.def("validate", &validate, py::arg("graph"));
  m.def("reentrancy_count", &reentrancy_count, py::arg("graph"));
  m.def("assign_variables", &assign_variables, py::arg("graph"));

  m.def("to_penman", &to_penman, py::arg("graph"));
  m.def("from_penman", &from_penman, py::arg("text"));

  m.def(
      "linearize",
      [](const AmrGraph& g) { return linearize(g).tokens; },
      py::arg("graph"));
  m.def(
      "delinearize",
      [](const std::vector<std::string>& tokens, const std::string& mode) {
        LinearSeq seq;
        seq.tokens = tokens;
        DelinearizeResult r = delinearize(
            seq, mode == "lenient" ? ParseMode::lenient : ParseMode::strict);
        return py::make_tuple(r.graph, r.repairs, r.notes);
      },
      py::arg("tokens"), py::arg("mode") = "strict",
      "Returns (graph, repair_count, repair_notes).");

  m.def("lemmatize_token", &lemmatize_token, py::arg("form"));

  py::class_<Token>(m, "Token")
      .def_readonly("index", &Token::index)
      .def_readonly("form", &Token::form);

  py::class_<DepTree>(m, "DepTree")
      .def_readonly("tokens", &DepTree::tokens)
      .def_readonly("heads", &DepTree::heads)
      .def_readonly("relations", &DepTree::relations);

  m.def("read_conllu", &read_conllu, py::arg("text"));

  py::class_<SrlArgument>(m, "SrlArgument")
      .def_readonly("role", &SrlArgument::role)
      .def_readonly("start", &SrlArgument::start)
      .def_readonly("end", &SrlArgument::end);

  py::class_<SrlFrame>(m, "SrlFrame")
      .def_readonly("predicate_index", &SrlFrame::predicate_index)
      .def_readonly("sense", &SrlFrame::sense)
      .def_readonly("arguments", &SrlFrame::arguments);

  py::class_<SrlFrameSet>(m, "SrlFrameSet")
      .def_readonly("sentence", &SrlFrameSet::sentence)
      .def_readonly("frames", &SrlFrameSet::frames);

  m.def("read_srl_jsonl", &read_srl_jsonl, py::arg("text"));

  m.def(
      "amrize_dp",
      [](const DepTree& dep, const std::string& preset) {
        return amrize_dp(dep, dp_preset(preset));
      },
      py::arg("dep"), py::arg("preset") = "all");

  m.def(
      "amrize_srl",
      [](const SrlFrameSet& frames, const DepTree* dep, const std::string& preset) {
        SrlAmrizeResult r = amrize_srl(frames, dep, srl_preset(preset));
        return py::make_tuple(r.graph, r.warnings);
      },
      py::arg("frames"), py::arg("dep") = nullptr, py::arg("preset") = "trivial",
      "Returns (graph, warnings).");

  m.def(
      "smatch",
      [](const AmrGraph& gold, const AmrGraph& pred, unsigned restarts,
         std::uint64_t seed) {
        return score_to_dict(smatch(gold, pred, restarts, seed)[Metric::Smatch]);
      },
      py::arg("gold"), py::arg("pred"), py::arg("restarts") = 4,
      py::arg("seed") = 0);

  m.def(
      "fine_grained",
      [](const AmrGraph& gold, const AmrGraph& pred, unsigned restarts,
         std::uint64_t seed) {
        return report_to_dict(fine_grained(gold, pred, restarts, seed));
      },
      py::arg("gold"), py::arg("pred"), py::arg("restarts") = 4,
      py::arg("seed") = 0);
}
