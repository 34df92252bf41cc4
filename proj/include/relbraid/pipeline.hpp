#pragma once

#include "relbraid/braid_complex.hpp"
#include "relbraid/braid_diagram.hpp"
#include "relbraid/homology_gf2.hpp"

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace relbraid {

enum class Mode { component, exhaustive };

struct WordInput {
  std::string text;
  int strands = 0;
  std::set<int> free_labels;
};

struct PipelineOptions {
  Mode mode = Mode::component;
  int refine = 1;
  bool augment = true;
  bool keep_pairs = false;  // exhaustive mode: retain every proper pair for a cell dump
};

/// Diagram ready for the complex, with the trace of how it was obtained.
struct PreparedDiagram {
  nlohmann::json input;
  nlohmann::json trace;
  DiscreteRelativeBraid diagram;
  std::vector<std::string> notices;
};

PreparedDiagram prepare_word(const WordInput& word, const PipelineOptions& options);
PreparedDiagram prepare_diagram(const nlohmann::json& doc, const PipelineOptions& options);

struct RunReport {
  nlohmann::json input;
  nlohmann::json pipeline;
  HomologyResult result;
  std::string interpretation;
  std::vector<ComplexPair> pairs;  // proper pairs, ordered by component id
  std::optional<CodeGrid> grid;
  bool undecided = false;
  std::vector<std::string> notices;

  nlohmann::json to_json() const;
};

std::string interpretation_for(int euler);

// Throws ImproperClass, GapSeparationError or the input errors.
RunReport run(PreparedDiagram prepared, const PipelineOptions& options);

}  // namespace relbraid
