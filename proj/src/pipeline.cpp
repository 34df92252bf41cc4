#include "relbraid/pipeline.hpp"

#include "relbraid/errors.hpp"

#include <algorithm>

namespace relbraid {

namespace {

void finish_diagram(PreparedDiagram& prepared, const PipelineOptions& options) {
  auto& trace = prepared.trace;
  if (!prepared.diagram.is_augmented()) {
    if (!options.augment) {
      throw InvalidInput("diagram is not augmented and augmentation was disabled; the class would be unbounded");
    }
    prepared.diagram = augment(prepared.diagram);
    prepared.notices.push_back("diagram augmented with constant strands below and above");
  }
  trace["augmented"] = true;
  if (options.refine > 1) prepared.diagram = refine(prepared.diagram, options.refine);
  trace["refine"] = options.refine;
  trace["d"] = prepared.diagram.d();
  auto report = crossing_report(prepared.diagram);
  trace["crossing_total"] = report.total;
  bool connected = connectivity_bound_ok(prepared.diagram);
  trace["connectivity_bound"] = connected;
  if (!connected) {
    prepared.notices.push_back("d = " + std::to_string(prepared.diagram.d()) + " does not exceed the crossing total " +
                               std::to_string(report.total) + "; the fiber may be disconnected");
  }
}

}  // namespace

PreparedDiagram prepare_word(const WordInput& word, const PipelineOptions& options) {
  if (word.free_labels.empty()) throw InvalidInput("at least one free strand is required");
  auto parsed = parse_word(word.text, word.strands, word.free_labels);
  auto twist = minimal_positive_twists(parsed);
  PreparedDiagram prepared{
      {{"word", word.text}, {"strands", word.strands}, {"free", std::vector<int>(word.free_labels.begin(), word.free_labels.end())}},
      {{"twists", twist.full_twists}, {"positive_word", twist.positive_word.to_string()}},
      word_to_diagram(twist.positive_word),
      {}};
  finish_diagram(prepared, options);
  return prepared;
}

PreparedDiagram prepare_diagram(const nlohmann::json& doc, const PipelineOptions& options) {
  PreparedDiagram prepared{doc, {{"twists", 0}}, diagram_from_json(doc), {}};
  finish_diagram(prepared, options);
  return prepared;
}

std::string interpretation_for(int euler) {
  if (euler != 0) return "χ ≠ 0: closed integral curves are forced in this class";
  return "χ = 0: no forcing conclusion";
}

nlohmann::json RunReport::to_json() const {
  return {{"input", input},
          {"pipeline", pipeline},
          {"result", relbraid::to_json(result)},
          {"interpretation", interpretation}};
}

namespace {

nlohmann::json component_summary(const ComponentInfo& info) {
  nlohmann::json entry{{"id", info.id},
                       {"proper", info.verdict.proper},
                       {"interior_cells", info.interior_cells},
                       {"closure_cells", info.closure_cells},
                       {"crossing_number", info.crossing_number},
                       {"truncated", info.truncated}};
  if (!info.verdict.proper) entry["reason"] = info.verdict.reason;
  if (info.truncated) entry["truncation"] = info.truncation;
  if (!info.certificate.empty()) {
    entry["exit_cells"] = info.exit_cells;
    entry["certificate"] = info.certificate;
    entry["group"] = info.group;
    entry["undecided"] = info.undecided;
  }
  return entry;
}

}  // namespace

RunReport run(PreparedDiagram prepared, const PipelineOptions& options) {
  RunReport report;
  report.input = std::move(prepared.input);
  report.pipeline = std::move(prepared.trace);
  report.notices = std::move(prepared.notices);

  auto [grid, cell] = normalize(prepared.diagram);
  report.grid.emplace(grid);
  std::vector<ComponentHomology> parts;

  if (options.mode == Mode::component) {
    report.pipeline["mode"] = "component";
    auto component = enumerate_component(cell, grid);
    auto pair = close(component, grid, 0);
    auto verdict = properness_check(pair, grid);
    report.pipeline["proper"] = verdict.proper;
    if (!verdict.proper) throw ImproperClass(verdict.reason);
    exit_set(pair, grid);
    report.pipeline["interior_cells"] = component.size();
    report.pipeline["closure_cells"] = pair.size();
    report.pipeline["exit_cells"] = std::count(pair.in_exit.begin(), pair.in_exit.end(), true);
    report.pipeline["crossing_number"] = pair.crossing_number;
    parts.push_back(pair_homology(pair));
    report.pairs.push_back(std::move(pair));
  } else {
    report.pipeline["mode"] = "exhaustive";
    const auto start = grid.pack(cell);
    std::vector<ComplexPair> pairs;
    int input_component = -1;
    auto infos = enumerate_all(grid, [&](const ComplexPair& pair, const ComponentInfo& info) {
      parts.push_back(pair_homology(pair));
      auto idx = pair.index_of(start);
      if (idx < pair.size() && pair.interior[idx]) input_component = info.id;
      if (options.keep_pairs) pairs.push_back(pair);
    });
    auto list = nlohmann::json::array();
    int proper = 0;
    for (const auto& info : infos) {
      auto entry = component_summary(info);
      if (info.id == input_component) entry["contains_input"] = true;
      if (info.verdict.proper && !info.truncated) ++proper;
      report.undecided = report.undecided || info.undecided;
      list.push_back(std::move(entry));
    }
    report.pipeline["components"] = std::move(list);
    report.pipeline["component_count"] = infos.size();
    report.pipeline["proper_count"] = proper;
    report.pipeline["undecided"] = report.undecided;
    report.pairs = std::move(pairs);
  }

  report.result = euler_characteristic(std::move(parts));
  report.interpretation = interpretation_for(report.result.euler);
  return report;
}

}  // namespace relbraid
