#include "amrize/srl.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace amrize {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw std::runtime_error("srl: line " + std::to_string(line_no) + ": " + msg);
}

SrlFrameSet parse_record(const json& rec, std::size_t line_no) {
  if (!rec.is_object()) fail(line_no, "record is not an object");
  if (!rec.contains("tokens") || !rec["tokens"].is_array())
    fail(line_no, "missing 'tokens' array");
  if (!rec.contains("frames") || !rec["frames"].is_array())
    fail(line_no, "missing 'frames' array");

  SrlFrameSet fs;
  int idx = 0;
  for (const json& t : rec["tokens"]) {
    if (!t.is_string() || t.get<std::string>().empty())
      fail(line_no, "tokens must be non-empty strings");
    fs.sentence.push_back(Token{++idx, t.get<std::string>(), std::nullopt});
  }
  int n = idx;

  for (const json& f : rec["frames"]) {
    if (!f.is_object() || !f.contains("predicate") || !f.contains("sense") ||
        !f.contains("args"))
      fail(line_no, "frame needs 'predicate', 'sense' and 'args'");
    if (!f["predicate"].is_number_integer()) fail(line_no, "'predicate' must be an integer");
    if (!f["sense"].is_string() || f["sense"].get<std::string>().empty())
      fail(line_no, "'sense' must be a non-empty string");
    if (!f["args"].is_array()) fail(line_no, "'args' must be an array");

    SrlFrame frame;
    frame.predicate_index = f["predicate"].get<int>();
    frame.sense = f["sense"].get<std::string>();
    if (frame.predicate_index < 1 || frame.predicate_index > n)
      fail(line_no, "predicate index " + std::to_string(frame.predicate_index) +
                        " out of bounds for " + std::to_string(n) + " tokens");

    for (const json& a : f["args"]) {
      if (!a.is_object() || !a.contains("role") || !a.contains("start") || !a.contains("end"))
        fail(line_no, "argument needs 'role', 'start' and 'end'");
      if (!a["role"].is_string() || !a["start"].is_number_integer() ||
          !a["end"].is_number_integer())
        fail(line_no, "argument fields have wrong types");
      SrlArgument arg;
      arg.role = a["role"].get<std::string>();
      arg.start = a["start"].get<int>();
      arg.end = a["end"].get<int>();
      if (arg.role.empty() || !is_valid_relation(":" + arg.role))
        fail(line_no, "bad role '" + arg.role + "'");
      if (arg.end < arg.start)
        fail(line_no, "span end " + std::to_string(arg.end) + " before start " +
                          std::to_string(arg.start));
      if (arg.start < 1 || arg.end > n)
        fail(line_no, "span [" + std::to_string(arg.start) + "," + std::to_string(arg.end) +
                          "] out of bounds for " + std::to_string(n) + " tokens");
      if (frame.predicate_index >= arg.start && frame.predicate_index <= arg.end)
        fail(line_no, "predicate " + std::to_string(frame.predicate_index) +
                          " lies inside its own argument span");
      frame.arguments.push_back(std::move(arg));
    }
    fs.frames.push_back(std::move(frame));
  }
  return fs;
}

}  // namespace

std::vector<SrlFrameSet> read_srl_jsonl(const std::string& text) {
  std::vector<SrlFrameSet> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      fail(line_no, std::string("malformed record: ") + e.what());
    }
    out.push_back(parse_record(rec, line_no));
  }
  return out;
}

std::string write_srl_jsonl(const std::vector<SrlFrameSet>& records) {
  std::string out;
  for (const SrlFrameSet& fs : records) {
    json rec;
    rec["tokens"] = json::array();
    for (const Token& t : fs.sentence) rec["tokens"].push_back(t.form);
    rec["frames"] = json::array();
    for (const SrlFrame& f : fs.frames) {
      json jf;
      jf["predicate"] = f.predicate_index;
      jf["sense"] = f.sense;
      jf["args"] = json::array();
      for (const SrlArgument& a : f.arguments)
        jf["args"].push_back({{"role", a.role}, {"start", a.start}, {"end", a.end}});
      rec["frames"].push_back(std::move(jf));
    }
    out += rec.dump();
    out += '\n';
  }
  return out;
}

}  // namespace amrize
