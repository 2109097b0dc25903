// Copyright 2026 The lgcompile Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "lgc/class_table.hpp"
#include "lgc/defining.hpp"
#include "lgc/error.hpp"
#include "lgc/extractor.hpp"
#include "lgc/greek.hpp"
#include "lgc/lglex.hpp"
#include "lgc/normalizer.hpp"
#include "lgc/table.hpp"
#include "lgc/text.hpp"

namespace fs = std::filesystem;

namespace lgc::cli {
namespace {

struct RunConfig {
  std::vector<std::string> tables;
  std::string rules;
  std::string defining;
  std::string lexicons;
  std::string script;
  std::string loader;
  std::string format = "text";
  std::string out;
  bool no_expand_prefixes = false;
  std::size_t max_distance = 1;
};

void require_path(const std::string& path, const char* what) {
  if (!path.empty() && !fs::exists(path)) throw IoError(std::string(what) + " not found: " + path);
}

std::vector<fs::path> table_files(const RunConfig& cfg) {
  std::vector<fs::path> files;
  for (const auto& arg : cfg.tables) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.is_regular_file() && e.path().extension() == ".tsv") files.push_back(e.path());
      }
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw IoError("table path not found: " + arg);
    }
  }
  return files;
}

LoaderConfig loader_config(const RunConfig& cfg) {
  LoaderConfig lc;
  if (!cfg.loader.empty()) {
    lc = LoaderConfig::from_file(cfg.loader);
  } else if (!cfg.tables.empty()) {
    fs::path first(cfg.tables.front());
    fs::path dir = fs::is_directory(first) ? first : first.parent_path();
    if (dir.empty()) dir = ".";
    if (fs::exists(dir / "loader.conf")) lc = LoaderConfig::from_file(dir / "loader.conf");
  }
  lc.allow_duplicate_headings = true;
  return lc;
}

struct Inputs {
  LoaderConfig loader;
  std::vector<Table> tables;
  RuleSet rules;
  DefiningConfig defining;
  Lexicons lexicons;
  std::optional<ExtractionScript> script;
};

// Checks every referenced path before reading anything.
Inputs load_inputs(const RunConfig& cfg) {
  require_path(cfg.rules, "rules file");
  require_path(cfg.defining, "defining config");
  require_path(cfg.lexicons, "lexicon directory");
  require_path(cfg.script, "extraction script");
  require_path(cfg.loader, "loader config");
  const auto files = table_files(cfg);

  Inputs in;
  in.loader = loader_config(cfg);
  if (!cfg.rules.empty()) in.rules = RuleSet::from_file(cfg.rules);
  if (!cfg.defining.empty()) in.defining = DefiningConfig::from_file(cfg.defining);
  if (!cfg.lexicons.empty()) in.lexicons = Lexicons::load_dir(cfg.lexicons);
  if (!cfg.script.empty()) in.script = ExtractionScript::from_file(cfg.script);

  std::set<std::string> names;
  for (const auto& f : files) {
    Table t;
    try {
      t = load_table(f, in.loader);
    } catch (const RaggedRowError& e) {
      throw ConfigError(f.string() + ": " + e.what());
    }
    if (!names.insert(t.name).second) throw ConfigError("two tables named " + t.name);
    in.tables.push_back(std::move(t));
  }
  std::sort(in.tables.begin(), in.tables.end(), [](const Table& a, const Table& b) { return a.name < b.name; });
  return in;
}

fs::path out_dir(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ConfigError("--out is required for this command");
  return cfg.out;
}

std::pair<std::vector<Table>, ChangeReport> normalize_all(const Inputs& in) {
  std::vector<Table> tables;
  ChangeReport report;
  for (const auto& t : in.tables) {
    auto r = normalize_table(t, in.rules, in.defining);
    tables.push_back(std::move(r.table));
    report.append(r.report);
  }
  return {std::move(tables), std::move(report)};
}

std::size_t count_properties(const std::vector<Table>& tables) {
  std::set<std::string> props;
  for (const auto& t : tables) {
    for (const auto& c : t.columns) {
      if (c.is_property()) props.insert(std::string(text::trim(c.raw_heading)));
    }
  }
  return props.size();
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = load_inputs(cfg);
  ValidationReport all;
  const Lexicons* lex = cfg.lexicons.empty() ? nullptr : &in.lexicons;
  for (const auto& t : in.tables) {
    auto r = validate_table(t, lex);
    std::size_t errors = 0;
    for (const auto& i : r.items) errors += i.severity == Severity::kError;
    out << t.name << ": " << errors << " errors, " << r.items.size() - errors << " warnings\n";
    all.items.insert(all.items.end(), r.items.begin(), r.items.end());
  }
  if (!cfg.out.empty()) text::write_file_atomic(fs::path(cfg.out) / "validation.tsv", render_report(all));
  return all.has_errors() ? kValidationFailed : kOk;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = out_dir(cfg);
  const Inputs in = load_inputs(cfg);
  auto [tables, report] = normalize_all(in);
  for (const auto& t : tables) text::write_file_atomic(dir / (t.name + ".tsv"), write_table(t, in.loader));
  // Reports go one level down so the output directory reads back as tables.
  text::write_file_atomic(dir / "reports" / "changes.tsv", render_changes(report));
  std::string suspects = "table\theading\trule\n";
  for (const auto& t : tables) {
    for (const auto& [heading, rule] : linguistic_suspects(t, in.rules)) {
      suspects += t.name + '\t' + heading + '\t' + rule + '\n';
    }
  }
  text::write_file_atomic(dir / "reports" / "linguistic_suspects.tsv", suspects);
  out << "tables=" << tables.size() << " changes=" << report.changes.size() << '\n';
  out << render_histogram(change_stats(report));
  return kOk;
}

int cmd_class_table(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = out_dir(cfg);
  if (cfg.defining.empty()) throw ConfigError("--defining is required for class-table");
  const Inputs in = load_inputs(cfg);
  const auto tables = cfg.rules.empty() ? in.tables : normalize_all(in).first;
  const ClassTable ct = build_class_table(tables, in.defining);
  const auto suspects = find_suspect_labels(ct, cfg.max_distance);
  text::write_file_atomic(dir / "class_table.tsv", write_class_table(ct));
  text::write_file_atomic(dir / "suspects.tsv", render_suspects(suspects));
  out << "tables=" << ct.tables.size() << " properties=" << ct.properties.size()
      << " suspects=" << suspects.size() << '\n';
  return kOk;
}

ExtractionResult run_extraction(const RunConfig& cfg, const Inputs& in) {
  if (cfg.defining.empty()) throw ConfigError("--defining is required for extraction");
  if (!in.script) throw ConfigError("--script is required for extraction");
  const auto tables = normalize_all(in).first;
  for (const auto& t : tables) check_script_coverage(t, *in.script);
  ExtractOptions opts;
  opts.expand_prefixes = !cfg.no_expand_prefixes;
  return extract_lexicon(tables, *in.script, in.defining, in.lexicons, opts);
}

int cmd_extract(const RunConfig& cfg, std::ostream& out) {
  const fs::path dir = out_dir(cfg);
  const Inputs in = load_inputs(cfg);
  const auto result = run_extraction(cfg, in);
  // Serialize both forms before writing either, so a bad value writes nothing.
  std::optional<std::string> txt;
  std::optional<std::string> xml;
  if (cfg.format != "xml") txt = write_text(result.lexicon);
  if (cfg.format != "text") xml = write_xml(result.lexicon);
  if (txt) text::write_file_atomic(dir / "lglex.txt", *txt);
  if (xml) text::write_file_atomic(dir / "lglex.xml", *xml);
  out << "rows=" << result.stats.rows << " entries=" << result.stats.entries << '\n';
  return kOk;
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
  const Inputs in = load_inputs(cfg);
  std::size_t rows = 0;
  for (const auto& t : in.tables) rows += t.rows.size();
  out << "tables=" << in.tables.size() << " rows=" << rows;
  if (in.script && !cfg.defining.empty()) out << " entries=" << run_extraction(cfg, in).stats.entries;
  out << " properties=" << count_properties(in.tables);
  if (!cfg.rules.empty()) {
    auto [tables, report] = normalize_all(in);
    out << " normalized_properties=" << count_properties(tables) << '\n';
    out << render_histogram(change_stats(report));
  } else {
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile Lexicon-Grammar tables into an LGLex lexicon", "lgc"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--tables", cfg.tables, "Table files or directories of .tsv tables")->required();
    sub->add_option("--loader", cfg.loader, "Loader config (default: loader.conf beside the tables)");
    sub->add_option("--rules", cfg.rules, "Rewrite rules file");
    sub->add_option("--defining", cfg.defining, "Defining-property config");
    sub->add_option("--lexicons", cfg.lexicons, "Directory of Greek lexicon files");
    sub->add_option("--script", cfg.script, "Extraction script");
    sub->add_option("--out", cfg.out, "Output directory");
  };
  auto* validate = app.add_subcommand("validate", "Check tables and report problems");
  auto* normalize = app.add_subcommand("normalize", "Rewrite headings and write normalized tables");
  auto* klass = app.add_subcommand("class-table", "Build the property x table matrix");
  auto* extract = app.add_subcommand("extract", "Compile tables into LGLex");
  auto* stats = app.add_subcommand("stats", "Print row, entry and property counts");
  for (auto* s : {validate, normalize, klass, extract, stats}) common(s);
  klass->add_option("--max-distance", cfg.max_distance, "Edit distance for suspect pairs")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  extract->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "xml", "both"}));
  extract->add_flag("--no-expand-prefixes", cfg.no_expand_prefixes, "Do not clone prefixed verbs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*validate) return cmd_validate(cfg, out);
    if (*normalize) return cmd_normalize(cfg, out);
    if (*klass) return cmd_class_table(cfg, out);
    if (*extract) return cmd_extract(cfg, out);
    return cmd_stats(cfg, out);
  } catch (const InvariantError& e) {
    err << "lgc: internal error: " << e.what() << '\n';
    return kInvariantError;
  } catch (const Error& e) {
    err << "lgc: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "lgc: internal error: " << e.what() << '\n';
    return kInvariantError;
  }
}

}  // namespace lgc::cli
