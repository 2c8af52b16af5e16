/*
 * Copyright 2026 The crossconn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "crossconn/cli.hpp"

#include <filesystem>  // for path, create_directories
#include <fstream>     // for ofstream
#include <ostream>     // for ostream
#include <set>         // for set
#include <sstream>     // for istringstream

#include <fmt/format.h>  // for fmt::format

#include "CLI11.hpp"  // for CLI::App

#include "crossconn/builders.hpp"         // for strong_semilattice_of_groups
#include "crossconn/category_export.hpp"  // for to_json, to_dot
#include "crossconn/cayley_io.hpp"        // for read_cayley_file
#include "crossconn/error.hpp"            // for Error
#include "crossconn/fixtures.hpp"         // for fixture
#include "crossconn/kernels.hpp"          // for set_num_jobs
#include "crossconn/report.hpp"           // for run_verification
#include "crossconn/slg_json.hpp"         // for read_slg_file

namespace crossconn {

  namespace {

    struct RunConfig {
      std::string fixture;
      std::string table;
      std::string slg;
      std::string out_dir;
      std::string formats;
      std::string side = "left";
      std::size_t budget        = EnumerationOptions{}.budget_per_apex;
      std::size_t search_budget = SearchOptions{}.node_budget;
      int         jobs          = 0;
      bool        timings       = false;
    };

    std::set<std::string> parse_formats(RunConfig const& cfg,
                                        std::string const& fallback) {
      std::string const text = cfg.formats.empty() ? fallback : cfg.formats;
      std::set<std::string> result;
      std::istringstream    in(text);
      std::string           item;
      while (std::getline(in, item, ',')) {
        if (item != "json" && item != "dot" && item != "text") {
          throw Error(ErrorCode::ParseError,
                      fmt::format("unknown format '{}'", item));
        }
        result.insert(item);
      }
      if (result.empty()) {
        throw Error(ErrorCode::ParseError, "no output format given");
      }
      return result;
    }

    std::pair<FiniteSemigroup, std::string> load(RunConfig const& cfg) {
      if (!cfg.fixture.empty()) {
        return {fixture(cfg.fixture), "fixture:" + cfg.fixture};
      }
      if (!cfg.table.empty()) {
        return {read_cayley_file(cfg.table), "table:" + cfg.table};
      }
      return {strong_semilattice_of_groups(read_slg_file(cfg.slg)),
              "slg:" + cfg.slg};
    }

    VerifyOptions options(RunConfig const& cfg) {
      VerifyOptions opts;
      opts.enumeration.budget_per_apex = cfg.budget;
      opts.search.node_budget          = cfg.search_budget;
      return opts;
    }

    // Writes \p content to <out_dir>/<file>, or to \p out without --out.
    class Sink {
     public:
      Sink(RunConfig const& cfg, std::ostream& out) : _cfg(cfg), _out(out) {
        if (!cfg.out_dir.empty()) {
          std::filesystem::create_directories(cfg.out_dir);
        }
      }

      bool to_files() const {
        return !_cfg.out_dir.empty();
      }

      void emit(std::string const& file, std::string const& content) {
        if (!to_files()) {
          _out << content;
          return;
        }
        auto const    path = std::filesystem::path(_cfg.out_dir) / file;
        std::ofstream f(path, std::ios::binary);
        if (!(f << content)) {
          throw Error(ErrorCode::ParseError,
                      fmt::format("cannot write {}", path.string()));
        }
      }

     private:
      RunConfig const& _cfg;
      std::ostream&    _out;
    };

    std::string dump(nlohmann::json const& j) {
      return j.dump(2) + "\n";
    }

    int cmd_build(RunConfig const& cfg, std::ostream& out) {
      auto const [S, source] = load(cfg);
      Sink       sink(cfg, out);
      auto const formats = parse_formats(cfg, sink.to_files() ? "json,text" : "text");
      if (sink.to_files()) {
        sink.emit("table.txt", to_cayley_string(S));
      }
      if (formats.contains("json")) {
        sink.emit("summary.json", dump(analysis_summary(S)));
      }
      if (formats.contains("text")) {
        sink.emit("summary.txt",
                  sink.to_files() ? analysis_text(S)
                                  : to_cayley_string(S) + analysis_text(S));
      }
      if (sink.to_files()) {
        out << analysis_text(S);
      }
      return exit_ok;
    }

    int cmd_category(RunConfig const& cfg, std::ostream& out) {
      auto const [S, source] = load(cfg);
      Sink       sink(cfg, out);
      auto const formats = parse_formats(cfg, sink.to_files() ? "json,dot,text" : "text");
      auto const L       = build_L(S);
      auto const R       = build_R(S);
      std::string text;
      for (auto const& [name, C] : {std::pair{"L", &L}, std::pair{"R", &R}}) {
        if (formats.contains("json")) {
          sink.emit(fmt::format("{}.json", name), dump(to_json(*C)));
        }
        if (formats.contains("dot")) {
          sink.emit(fmt::format("{}.dot", name), to_dot(*C, name));
        }
        text += fmt::format("{}(S): {} objects, {} morphisms\n",
                            name,
                            C->num_objects(),
                            C->num_morphisms());
      }
      if (formats.contains("text")) {
        sink.emit("category.txt", text);
      }
      if (sink.to_files()) {
        out << text;
      }
      return exit_ok;
    }

    int cmd_cones(RunConfig const& cfg, std::ostream& out) {
      auto const [S, source] = load(cfg);
      if (cfg.side != "left" && cfg.side != "right") {
        throw Error(ErrorCode::ParseError,
                    fmt::format("unknown side '{}'", cfg.side));
      }
      Sink       sink(cfg, out);
      auto const formats = parse_formats(cfg, sink.to_files() ? "json,text" : "text");
      auto const C  = cfg.side == "left" ? build_L(S) : build_R(S);
      auto const tl = build_TL(C, options(cfg).enumeration);
      if (formats.contains("json")) {
        sink.emit("cones.json", dump(cone_dump(tl)));
      }
      if (formats.contains("text")) {
        sink.emit("cones.txt", cone_text(tl));
      }
      if (sink.to_files()) {
        out << cone_text(tl);
      }
      return exit_ok;
    }

    int cmd_verify(RunConfig const& cfg, std::ostream& out) {
      auto const [S, source] = load(cfg);
      Sink       sink(cfg, out);
      auto const formats = parse_formats(cfg, sink.to_files() ? "json,text" : "text");
      auto const report  = run_verification(S, source, options(cfg), cfg.timings);
      if (formats.contains("json")) {
        sink.emit("report.json", dump(to_json(report)));
      }
      if (formats.contains("text")) {
        sink.emit("report.txt", to_text(report));
      }
      if (sink.to_files()) {
        out << to_text(report);
      }
      return report.failed() ? exit_verification : exit_ok;
    }

    int cmd_fixtures(std::ostream& out) {
      for (auto const& name : fixture_names()) {
        out << name << '\n';
      }
      return exit_ok;
    }

    void add_common(CLI::App* sub, RunConfig& cfg) {
      auto* input = sub->add_option_group("input", "exactly one input source");
      input->add_option("--fixture", cfg.fixture, "built-in fixture name");
      input->add_option("--table", cfg.table, "Cayley table file")
          ->check(CLI::ExistingFile);
      input->add_option("--slg", cfg.slg, "strong semilattice of groups JSON")
          ->check(CLI::ExistingFile);
      input->require_option(1);
      sub->add_option("--out", cfg.out_dir, "output directory");
      sub->add_option("--format", cfg.formats, "comma separated: json,dot,text");
      sub->add_option("--budget", cfg.budget, "cone assignments visited per apex")
          ->check(CLI::PositiveNumber);
      sub->add_option("--search-budget", cfg.search_budget, "isomorphism search nodes")
          ->check(CLI::PositiveNumber);
      sub->add_option("--jobs", cfg.jobs, "worker threads (0 = default)")
          ->check(CLI::NonNegativeNumber);
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    RunConfig cfg;
    CLI::App  app("Clifford semigroups, normal categories and cone semigroups",
                 "crossconn");
    app.require_subcommand(1);

    auto* build    = app.add_subcommand("build", "Cayley table and analysis summary");
    auto* category = app.add_subcommand("category", "export L(S) and R(S)");
    auto* cones    = app.add_subcommand("cones", "enumerate normal cones");
    auto* verify   = app.add_subcommand("verify", "run every check");
    auto* list     = app.add_subcommand("fixtures", "list built-in fixtures");
    for (auto* sub : {build, category, cones, verify}) {
      add_common(sub, cfg);
    }
    cones->add_option("--side", cfg.side, "left or right");
    verify->add_flag("--timings", cfg.timings, "include per-row timings");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(std::move(reversed));
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input_error;
    }

    try {
      set_num_jobs(cfg.jobs);
      if (*build) {
        return cmd_build(cfg, out);
      }
      if (*category) {
        return cmd_category(cfg, out);
      }
      if (*cones) {
        return cmd_cones(cfg, out);
      }
      if (*verify) {
        return cmd_verify(cfg, out);
      }
      if (*list) {
        return cmd_fixtures(out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return e.is_budget() ? exit_budget : exit_input_error;
    } catch (std::filesystem::filesystem_error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    }
    return exit_input_error;
  }

}  // namespace crossconn
