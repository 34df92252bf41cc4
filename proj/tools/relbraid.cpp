#include "relbraid/errors.hpp"
#include "relbraid/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace relbraid;

namespace {

enum Exit { ok = 0, invalid = 2, improper = 3, gap = 4, undecided = 5, internal = 6 };

struct Args {
  std::string input;
  std::string word;
  int strands = 0;
  std::string free;
  std::string mode = "component";
  int refine = 1;
  bool json = false;
  bool no_augment = false;
  std::string emit_cells;
};

std::set<int> parse_free(const std::string& text) {
  std::set<int> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw SyntaxError("malformed free label '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw SyntaxError("malformed free label '" + item + "'");
    labels.insert(value);
  }
  return labels;
}

PipelineOptions options_of(const Args& args) {
  PipelineOptions options;
  if (args.mode == "exhaustive") {
    options.mode = Mode::exhaustive;
  } else if (args.mode != "component") {
    throw InvalidInput("unknown mode '" + args.mode + "'");
  }
  if (args.refine < 1) throw InvalidInput("--refine must be at least 1");
  options.refine = args.refine;
  options.augment = !args.no_augment;
  options.keep_pairs = !args.emit_cells.empty();
  return options;
}

PreparedDiagram prepare(const Args& args, const PipelineOptions& options) {
  if (!args.word.empty() || args.strands > 0) {
    if (!args.input.empty()) throw InvalidInput("give either an input file or --word/--strands, not both");
    if (args.strands < 1) throw InvalidInput("--strands is required with --word");
    return prepare_word({args.word, args.strands, parse_free(args.free)}, options);
  }
  if (args.input.empty()) throw InvalidInput("no input: give a diagram JSON file or --word/--strands/--free");
  std::ifstream file(args.input);
  if (!file) throw InvalidInput("cannot open " + args.input);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("malformed JSON: ") + e.what());
  }
  return prepare_diagram(doc, options);
}

void print_notices(const std::vector<std::string>& notices) {
  for (const auto& note : notices) std::cerr << "note: " << note << "\n";
}

void write_cells(const RunReport& report, const std::string& path) {
  nlohmann::json doc;
  if (report.pairs.size() == 1) {
    doc = cell_dump(report.pairs.front(), *report.grid);
  } else {
    doc = nlohmann::json::array();
    for (const auto& pair : report.pairs) doc.push_back(cell_dump(pair, *report.grid));
  }
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << doc.dump(2) << "\n";
}

void print_human(const RunReport& report) {
  const auto& p = report.pipeline;
  std::cout << "twists: " << p.value("twists", 0) << "\n";
  std::cout << "d: " << p["d"] << ", crossings: " << p["crossing_total"]
            << ", connectivity bound: " << (p["connectivity_bound"].get<bool>() ? "holds" : "fails") << "\n";
  if (p.contains("proper_count")) {
    std::cout << "components: " << p["component_count"] << ", proper: " << p["proper_count"]
              << (report.undecided ? " (some groupings UNDECIDED)" : "") << "\n";
  } else {
    std::cout << "component: " << p["interior_cells"] << " interior cells, " << p["closure_cells"]
              << " in the closure, " << p["exit_cells"] << " in the exit set\n";
  }
  std::cout << "betti (GF(2)):";
  for (int b : report.result.betti) std::cout << ' ' << b;
  std::cout << "\neuler: " << report.result.euler << "\n" << report.interpretation << "\n";
}

int cmd_chi(const Args& args) {
  auto options = options_of(args);
  auto report = run(prepare(args, options), options);
  print_notices(report.notices);
  if (args.json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    print_human(report);
  }
  if (!args.emit_cells.empty()) write_cells(report, args.emit_cells);
  return report.undecided ? undecided : ok;
}

int cmd_from_word(const Args& args) {
  if (args.word.empty() && args.strands < 1) throw InvalidInput("--word and --strands are required");
  auto options = options_of(args);
  auto prepared = prepare_word({args.word, args.strands, parse_free(args.free)}, options);
  std::cerr << "twists: " << prepared.trace["twists"] << ", positive word: \""
            << prepared.trace["positive_word"].get<std::string>() << "\", d: " << prepared.diagram.d() << "\n";
  print_notices(prepared.notices);
  std::cout << to_json(prepared.diagram).dump(2) << "\n";
  return ok;
}

int cmd_check(const Args& args) {
  auto options = options_of(args);
  nlohmann::json checks;
  int code = ok;
  try {
    auto prepared = prepare(args, options);
    print_notices(prepared.notices);
    checks["non_singular"] = true;
    checks["connectivity_bound"] = prepared.trace["connectivity_bound"];
    try {
      auto [grid, cell] = normalize(prepared.diagram);
      checks["gap_separated"] = true;
      auto pair = close(enumerate_component(cell, grid), grid);
      auto verdict = properness_check(pair, grid);
      checks["proper"] = verdict.proper;
      if (!verdict.proper) {
        checks["improper_reason"] = verdict.reason;
        code = improper;
      }
    } catch (const GapSeparationError& e) {
      checks["gap_separated"] = false;
      checks["gap_detail"] = e.what();
      code = gap;
    }
  } catch (const SingularityError& e) {
    checks["non_singular"] = false;
    checks["singular_at"] = {{"strand", e.strand()}, {"slice", e.slice()}};
    checks["detail"] = e.what();
    code = invalid;
  }
  if (args.json) {
    std::cout << checks.dump(2) << "\n";
  } else {
    for (auto& [key, value] : checks.items()) std::cout << key << ": " << value.dump() << "\n";
  }
  return code;
}

int cmd_complex(const Args& args) {
  auto options = options_of(args);
  auto report = run(prepare(args, options), options);
  print_notices(report.notices);
  if (options.mode == Mode::exhaustive) {
    nlohmann::json summary{{"component_count", report.pipeline["component_count"]},
                           {"proper_count", report.pipeline["proper_count"]},
                           {"components", report.pipeline["components"]},
                           {"undecided", report.undecided}};
    std::cout << summary.dump(2) << "\n";
    if (!args.emit_cells.empty()) write_cells(report, args.emit_cells);
  } else {
    write_cells(report, args.emit_cells.empty() ? "-" : args.emit_cells);
  }
  return report.undecided ? undecided : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristic of relative braid classes via the discrete cube complex"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&](CLI::App* cmd, bool with_mode) {
    cmd->add_option("input", args.input, "diagram JSON file");
    cmd->add_option("--word", args.word, "braid word, e.g. \"1 2 -1\"");
    cmd->add_option("--strands", args.strands, "strand count of the word");
    cmd->add_option("--free", args.free, "free strand labels, e.g. \"0,2\"");
    cmd->add_option("--refine", args.refine, "refine every segment into k pieces");
    cmd->add_flag("--no-augment", args.no_augment, "do not add constant extremal strands");
    cmd->add_flag("--json", args.json, "JSON output");
    if (with_mode) {
      cmd->add_option("--mode", args.mode, "component or exhaustive")->check(CLI::IsMember({"component", "exhaustive"}));
      cmd->add_option("--emit-cells", args.emit_cells, "write the cell dump to PATH");
    }
  };

  auto* chi = app.add_subcommand("chi", "run the full pipeline and report the Euler characteristic");
  add_common(chi, true);
  auto* from_word = app.add_subcommand("from-word", "build a diagram from a braid word");
  add_common(from_word, false);
  auto* check = app.add_subcommand("check", "diagnose a diagram");
  add_common(check, false);
  auto* complex = app.add_subcommand("complex", "dump the cube complex");
  add_common(complex, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : invalid;
  }

  try {
    if (chi->parsed()) return cmd_chi(args);
    if (from_word->parsed()) return cmd_from_word(args);
    if (check->parsed()) return cmd_check(args);
    if (complex->parsed()) return cmd_complex(args);
  } catch (const ImproperClass& e) {
    std::cerr << "improper class: " << e.what() << "\n";
    return improper;
  } catch (const GapSeparationError& e) {
    std::cerr << "gap separation: " << e.what() << "\n";
    return gap;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return internal;
  } catch (const CapExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return invalid;
  } catch (const std::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return invalid;
  }
  return invalid;
}
