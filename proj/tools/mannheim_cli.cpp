// Copyright 2026 The mannheim authors
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

// Command line front end: field/code/CSS analysis, the reference-catalog
// reproduction report, and protocol simulation. Exit status 0 on success,
// 1 on any error, 2 when a simulation completes but fails to correct.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mannheim/catalog.hpp"
#include "mannheim/css.hpp"
#include "mannheim/qudit.hpp"
#include "mannheim/serialize.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mannheim::ParseError("cannot open spec file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CommonFlags {
  std::string format = "text";
  std::int64_t cap = 0;   // 0 means "not set"
  int workers = 0;        // 0 means "not set"

  bool structured() const { return format == "structured"; }
  void apply(mannheim::SearchOptions& search) const {
    if (cap > 0) search.cap = cap;
    if (workers > 0) search.workers = workers;
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--cap", flags.cap, "Enumeration cap for distance scans")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", flags.workers, "Worker threads for distance scans")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-integer residue fields, Mannheim-metric codes and "
               "nested-code quantum constructions"};
  app.require_subcommand(1);

  std::string pi_text;
  std::string spec_path;
  std::string interpretation = "both";
  CommonFlags flags;

  CLI::App* cmd_field = app.add_subcommand("field", "Analyze a residue field G_pi");
  cmd_field->add_option("--pi", pi_text, "Field modulus, e.g. \"4+1i\"")->required();
  add_common(cmd_field, flags);

  CLI::App* cmd_code = app.add_subcommand("code", "Analyze a linear code from a spec file");
  cmd_code->add_option("--spec", spec_path, "Code spec document")->required();
  add_common(cmd_code, flags);

  CLI::App* cmd_css = app.add_subcommand("css", "Analyze a nested code pair");
  cmd_css->add_option("--spec", spec_path, "CSS spec document")->required();
  add_common(cmd_css, flags);

  CLI::App* cmd_table = app.add_subcommand("table", "Reproduce the reference catalog");
  cmd_table->add_option("--interpretation", interpretation, "Catalog column reading")
      ->check(CLI::IsMember({"a", "b", "both"}))
      ->capture_default_str();
  add_common(cmd_table, flags);

  CLI::App* cmd_simulate = app.add_subcommand("simulate", "Run the correction protocol");
  cmd_simulate->add_option("--spec", spec_path, "Protocol spec document")->required();
  add_common(cmd_simulate, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_field->parsed()) {
      mannheim::FieldPtr field = mannheim::PrimeField::make(mannheim::parse_gauss_int(pi_text));
      std::cout << mannheim::make_field_report(field, flags.structured());
      return 0;
    }
    if (cmd_code->parsed()) {
      mannheim::LinearCode code = mannheim::code_from_spec_json(read_file(spec_path));
      mannheim::SearchOptions search;
      flags.apply(search);
      std::cout << mannheim::make_code_report(code, search, flags.structured());
      return 0;
    }
    if (cmd_css->parsed()) {
      mannheim::CssSpec spec = mannheim::css_from_spec_json(read_file(spec_path));
      flags.apply(spec.search);
      mannheim::CssCode css = mannheim::build_css(spec.c1, spec.c2, spec.search);
      mannheim::SymplecticParams pair = mannheim::build_symplectic(spec.c1, spec.c2, spec.search);
      std::cout << mannheim::make_css_report(css, pair, flags.structured());
      return 0;
    }
    if (cmd_table->parsed()) {
      mannheim::TableOptions opts;
      opts.interp_a = interpretation != "b";
      opts.interp_b = interpretation != "a";
      flags.apply(opts.search);
      std::cout << mannheim::make_table_report(mannheim::reproduce_catalog(opts),
                                               flags.structured());
      return 0;
    }
    mannheim::ProtocolSpec spec = mannheim::protocol_from_spec_json(read_file(spec_path));
    flags.apply(spec.options.search);
    mannheim::ProtocolRun run = mannheim::run_css_protocol(spec.css.c1, spec.css.c2, spec.x,
                                                           spec.e1, spec.e2, spec.options);
    std::cout << mannheim::make_transcript_report(run.transcript, flags.structured());
    return run.transcript.corrected ? 0 : 2;
  } catch (const mannheim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
