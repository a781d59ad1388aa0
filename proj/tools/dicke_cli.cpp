// Copyright 2026 The dickeprep authors
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

// Command-line front end: build, count, tabulate, simulate, sample, map,
// rank variants and export Dicke preparation circuits.
//
// Exit codes: 0 success, 1 internal or invariant failure, 2 usage error,
// 3 infeasible mapping request.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dicke/circuit_io.hpp"
#include "dicke/dicke_builder.hpp"
#include "dicke/error_model.hpp"
#include "dicke/simulator.hpp"
#include "dicke/synth.hpp"
#include "dicke/topology.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DICKE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 12345;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dicke::VariantMask parse_mask(const std::string& bits, const dicke::DickeParams& p) {
  dicke::VariantMask mask;
  if (bits.empty()) return dicke::VariantMask::zeros(p);
  for (char c : bits) {
    if (c != '0' && c != '1') throw CLI::ValidationError("--mask must be a 0/1 string");
    mask.bits.push_back(c == '1');
  }
  if (static_cast<int>(mask.bits.size()) != dicke::VariantMask::expected_length(p)) {
    throw CLI::ValidationError("--mask needs exactly " +
                               std::to_string(dicke::VariantMask::expected_length(p)) +
                               " bits for this (n, k)");
  }
  return mask;
}

std::string mask_to_string(const dicke::VariantMask& mask) {
  if (mask.bits.empty()) return "-";
  std::string s;
  for (bool b : mask.bits) s += b ? '1' : '0';
  return s;
}

dicke::Architecture load_architecture(const std::string& spec) {
  for (const auto& a : dicke::bundled_architectures()) {
    if (a.name == spec) return a;
  }
  return dicke::architecture_from_json(read_file(spec));
}

// --rates "0-1:0.02,0-2:0.01" overrides per-edge error rates.
void apply_rates(dicke::Architecture& arch, const std::string& rates) {
  std::stringstream ss(rates);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    const auto colon = item.find(':');
    if (dash == std::string::npos || colon == std::string::npos || colon < dash) {
      throw CLI::ValidationError("--rates items look like a-b:rate");
    }
    const int a = std::stoi(item.substr(0, dash));
    const int b = std::stoi(item.substr(dash + 1, colon - dash - 1));
    const double rate = std::stod(item.substr(colon + 1));
    arch.set_error(a, b, rate);
  }
}

dicke::ResponseFunction parse_response(const std::string& spec) {
  if (spec.empty() || spec == "identity") return dicke::ResponseFunction::identity();
  if (spec.rfind("affine:", 0) == 0) {
    const std::string body = spec.substr(7);
    const auto comma = body.find(',');
    if (comma == std::string::npos) {
      throw CLI::ValidationError("--response affine:slope,offset");
    }
    return dicke::ResponseFunction::affine(std::stod(body.substr(0, comma)),
                                           std::stod(body.substr(comma + 1)));
  }
  if (spec.rfind("table:", 0) == 0) {
    std::vector<std::pair<double, double>> pts;
    std::stringstream ss(spec.substr(6));
    std::string item;
    while (std::getline(ss, item, ';')) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) {
        throw CLI::ValidationError("--response table:x0,y0;x1,y1;...");
      }
      pts.emplace_back(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
    }
    return dicke::ResponseFunction::tabulated(pts);
  }
  throw CLI::ValidationError("unknown response '" + spec + "'");
}

std::string assignment_to_text(const dicke::Assignment& asg) {
  std::string s;
  for (const auto& [logical, phys] : asg) {
    if (!s.empty()) s += " ";
    s += "q" + std::to_string(logical) + "->" + std::to_string(phys);
  }
  return s;
}

struct TableRow {
  int n, k;
  dicke::GateCounts baseline;
  dicke::GateCounts optimized;
};

std::vector<TableRow> table_rows(int nmax) {
  std::vector<TableRow> rows;
  for (int n = 4; n <= nmax; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const dicke::DickeParams p(n, k);
      rows.push_back({n, k, dicke::gate_counts(dicke::build_baseline(p)),
                      dicke::gate_counts(dicke::build_optimized(p, dicke::VariantMask::zeros(p)))});
    }
  }
  return rows;
}

int run_table(int nmax, const std::string& csv_path) {
  const auto rows = table_rows(nmax);
  for (const auto& row : rows) {
    const dicke::GateCounts pb = dicke::predicted_counts(dicke::DickeParams(row.n, row.k), false);
    const dicke::GateCounts po = dicke::predicted_counts(dicke::DickeParams(row.n, row.k), true);
    if (row.baseline.cnot != pb.cnot || row.baseline.ry != pb.ry ||
        row.optimized.cnot != po.cnot || row.optimized.ry != po.ry) {
      std::cerr << "internal: built counts disagree with closed forms at (" << row.n << ","
                << row.k << ")\n";
      return kExitInternal;
    }
  }
  auto print_grid = [&](const char* title, auto select) {
    std::printf("%s (baseline,optimized)\n", title);
    std::printf("  k\\n");
    for (int n = 4; n <= nmax; ++n) std::printf("%12d", n);
    std::printf("\n");
    for (int k = 2; k <= nmax - 1; ++k) {
      std::printf("%5d", k);
      for (int n = 4; n <= nmax; ++n) {
        bool found = false;
        for (const auto& row : rows) {
          if (row.n == n && row.k == k) {
            const auto [b, o] = select(row);
            std::string cell = std::to_string(b) + "," + std::to_string(o);
            std::printf("%12s", cell.c_str());
            found = true;
            break;
          }
        }
        if (!found) std::printf("%12s", "");
      }
      std::printf("\n");
    }
  };
  print_grid("CNOT", [](const TableRow& r) { return std::make_pair(r.baseline.cnot, r.optimized.cnot); });
  std::printf("\n");
  print_grid("Ry", [](const TableRow& r) { return std::make_pair(r.baseline.ry, r.optimized.ry); });

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "n,k,cnot_baseline,cnot_optimized,ry_baseline,ry_optimized\n";
    for (const auto& row : rows) {
      csv << row.n << "," << row.k << "," << row.baseline.cnot << "," << row.optimized.cnot
          << "," << row.baseline.ry << "," << row.optimized.ry << "\n";
    }
    write_output(csv_path, csv.str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic Dicke-state preparation circuits: construction, "
               "verification, counting, layout mapping and noise-aware variant selection"};
  app.require_subcommand(1);

  int n = 4, k = 2;
  std::string mask_bits;
  bool baseline = false;
  bool entry_shift = false;
  std::string out_path;
  bool qasm = false;
  bool measure = false;
  int nmax = 8;
  std::string csv_path;
  std::uint64_t shots = 8192;
  std::uint64_t seed = default_seed();
  bool seed_given = false;
  std::string arch_spec;
  std::string rates;
  std::string response_spec;
  std::string hist_path;
  std::string what = "circuit";

  auto add_nk = [&](CLI::App* cmd, bool with_variant = true) {
    cmd->add_option("--n", n, "qubit count")->required();
    cmd->add_option("--k", k, "Hamming weight")->required();
    if (with_variant) {
      cmd->add_option("--mask", mask_bits, "variant bits, one per eligible block");
      cmd->add_flag("--shift-entry", entry_shift, "relocate the entry CNOT variant");
    }
  };

  CLI::App* cmd_build = app.add_subcommand("build", "emit a preparation circuit");
  add_nk(cmd_build);
  cmd_build->add_flag("--baseline", baseline, "unoptimized construction");
  cmd_build->add_option("--out", out_path, "output file (default stdout)");
  cmd_build->add_flag("--qasm", qasm, "emit OpenQASM 2.0 instead of JSON");
  cmd_build->add_flag("--measure", measure, "append measurements to QASM");

  CLI::App* cmd_counts = app.add_subcommand("counts", "built vs predicted gate counts");
  add_nk(cmd_counts, false);
  cmd_counts->add_flag("--baseline", baseline, "check the unoptimized construction");

  CLI::App* cmd_table = app.add_subcommand("table", "gate-count grids for 4 <= n <= nmax");
  cmd_table->add_option("--nmax", nmax, "largest qubit count")->check(CLI::Range(4, 12));
  cmd_table->add_option("--csv", csv_path, "also write CSV to this file");

  CLI::App* cmd_simulate = app.add_subcommand("simulate", "fidelity against the ideal state");
  add_nk(cmd_simulate);
  cmd_simulate->add_flag("--baseline", baseline, "simulate the unoptimized construction");

  CLI::App* cmd_sample = app.add_subcommand("sample", "measurement histogram and its deviation");
  add_nk(cmd_sample);
  cmd_sample->add_option("--shots", shots, "number of shots");
  cmd_sample->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) {
    seed_given = true;
  });
  cmd_sample->add_option("--out", out_path, "histogram JSON file (default stdout)");

  CLI::App* cmd_map = app.add_subcommand("map", "layout assignments onto an architecture");
  add_nk(cmd_map);
  cmd_map->add_option("--arch", arch_spec, "bundled name or JSON file")->required();

  CLI::App* cmd_variants = app.add_subcommand("variants", "rank variants by expected CNOT error");
  add_nk(cmd_variants, false);
  cmd_variants->add_option("--arch", arch_spec, "bundled name or JSON file")->required();
  cmd_variants->add_option("--rates", rates, "edge rate overrides a-b:rate,...");
  cmd_variants->add_option("--response", response_spec,
                           "identity | affine:a,b | table:x,y;x,y;...");

  CLI::App* cmd_expected = app.add_subcommand("expected-error", "expected faulty-CNOT count");
  add_nk(cmd_expected);
  cmd_expected->add_option("--arch", arch_spec, "bundled name or JSON file")->required();
  cmd_expected->add_option("--rates", rates, "edge rate overrides a-b:rate,...");
  cmd_expected->add_option("--response", response_spec,
                           "identity | affine:a,b | table:x,y;x,y;...");

  CLI::App* cmd_em = app.add_subcommand("em", "deviation measure of a histogram");
  add_nk(cmd_em, false);
  cmd_em->add_option("--hist", hist_path, "histogram JSON file")->required();

  CLI::App* cmd_export = app.add_subcommand("export", "DOT export of maps and architectures");
  cmd_export->add_option("--what", what, "circuit | gnk | arch")->required();
  cmd_export->add_option("--n", n, "qubit count");
  cmd_export->add_option("--k", k, "Hamming weight");
  cmd_export->add_option("--mask", mask_bits, "variant bits");
  cmd_export->add_flag("--shift-entry", entry_shift, "relocate the entry CNOT variant");
  cmd_export->add_flag("--baseline", baseline, "use the unoptimized construction");
  cmd_export->add_option("--arch", arch_spec, "bundled name or JSON file");
  cmd_export->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto build_requested = [&](const dicke::DickeParams& p) {
      dicke::BuildOptions options;
      options.entry_shift = entry_shift;
      if (baseline) return dicke::build_baseline(p);
      if (p.k == 1) return dicke::build_w_linear(p.n);
      return dicke::build_optimized(p, parse_mask(mask_bits, p), options);
    };

    if (app.got_subcommand(cmd_build)) {
      if (k == n) {
        dicke::Circuit c(n);
        for (int q = 1; q <= n; ++q) c.x(q);
        write_output(out_path, qasm ? dicke::circuit_to_qasm(c, measure)
                                    : dicke::circuit_to_json(c));
        return kExitOk;
      }
      const dicke::Circuit c = build_requested(dicke::DickeParams(n, k));
      write_output(out_path,
                   qasm ? dicke::circuit_to_qasm(c, measure) : dicke::circuit_to_json(c));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_counts)) {
      const dicke::DickeParams p(n, k);
      const dicke::Circuit c = build_requested(p);
      const dicke::GateCounts built = dicke::gate_counts(c);
      const dicke::GateCounts predicted = dicke::predicted_counts(p, !baseline);
      const bool ok = built.cnot == predicted.cnot && built.ry == predicted.ry;
      std::printf("built %ld CNOT, predicted %ld — %s\n", built.cnot, predicted.cnot,
                  built.cnot == predicted.cnot ? "OK" : "MISMATCH");
      std::printf("built %ld Ry, predicted %ld — %s\n", built.ry, predicted.ry,
                  built.ry == predicted.ry ? "OK" : "MISMATCH");
      return ok ? kExitOk : kExitInternal;
    }

    if (app.got_subcommand(cmd_table)) {
      return run_table(nmax, csv_path);
    }

    if (app.got_subcommand(cmd_simulate)) {
      const dicke::DickeParams p(n, k);
      const dicke::Circuit c = build_requested(p);
      const double fid = dicke::fidelity(dicke::simulate(c), dicke::dicke_reference(n, k));
      std::printf("fidelity %.15f\n", fid);
      if (std::abs(fid - 1.0) > 1e-10) {
        std::fprintf(stderr, "internal: prepared state is not the ideal state\n");
        return kExitInternal;
      }
      return kExitOk;
    }

    if (app.got_subcommand(cmd_sample)) {
      (void)seed_given;
      const dicke::DickeParams p(n, k);
      const dicke::Circuit c = build_requested(p);
      const auto hist = dicke::sample(dicke::simulate(c), shots, seed);
      write_output(out_path, dicke::histogram_to_json(hist));
      std::printf("EM = %.6f\n", dicke::em_measure(hist, n, k));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_map)) {
      const dicke::DickeParams p(n, k);
      const dicke::Architecture arch = load_architecture(arch_spec);
      const dicke::CnotMap cm = dicke::extract_map(build_requested(p));
      const auto assignments = dicke::find_mappings(cm, arch);
      if (assignments.empty()) {
        std::printf("infeasible: no assignment satisfies the CNOT constraints on %s\n",
                    arch.name.c_str());
        return kExitInfeasible;
      }
      for (const auto& asg : assignments) {
        std::printf("%s\n", assignment_to_text(asg).c_str());
      }
      std::printf("%zu assignment(s)\n", assignments.size());
      return kExitOk;
    }

    if (app.got_subcommand(cmd_variants)) {
      const dicke::DickeParams p(n, k);
      dicke::Architecture arch = load_architecture(arch_spec);
      if (!rates.empty()) apply_rates(arch, rates);
      const dicke::ResponseFunction f = parse_response(response_spec);
      struct Row {
        dicke::VariantMask mask;
        bool shift;
        dicke::Assignment asg;
        double value;
      };
      std::vector<Row> rows;
      for (const auto& mask : dicke::enumerate_variants(p)) {
        for (const bool shift : {false, true}) {
          dicke::BuildOptions options;
          options.entry_shift = shift;
          const dicke::CnotMap wm = dicke::extract_map(dicke::build_optimized(p, mask, options));
          for (const auto& asg : dicke::find_mappings(wm, arch)) {
            rows.push_back({mask, shift, asg, dicke::expected_cnot_error(wm, asg, arch, f).value});
          }
        }
      }
      if (rows.empty()) {
        std::printf("infeasible: no variant embeds into %s\n", arch.name.c_str());
        return kExitInfeasible;
      }
      std::stable_sort(rows.begin(), rows.end(),
                       [](const Row& x, const Row& y) { return x.value < y.value; });
      std::printf("%-8s %-6s %-10s %s\n", "mask", "entry", "E[faults]", "assignment");
      for (const auto& row : rows) {
        std::printf("%-8s %-6s %-10.6f %s\n", mask_to_string(row.mask).c_str(),
                    row.shift ? "shift" : "plain", row.value,
                    assignment_to_text(row.asg).c_str());
      }
      return kExitOk;
    }

    if (app.got_subcommand(cmd_expected)) {
      const dicke::DickeParams p(n, k);
      dicke::Architecture arch = load_architecture(arch_spec);
      if (!rates.empty()) apply_rates(arch, rates);
      const dicke::ResponseFunction f = parse_response(response_spec);
      dicke::BuildOptions options;
      options.entry_shift = entry_shift;
      const dicke::CnotMap wm =
          dicke::extract_map(dicke::build_optimized(p, parse_mask(mask_bits, p), options));
      const auto assignments = dicke::find_mappings(wm, arch);
      if (assignments.empty()) {
        std::printf("infeasible: no assignment satisfies the CNOT constraints on %s\n",
                    arch.name.c_str());
        return kExitInfeasible;
      }
      dicke::Selection s;
      s.feasible = true;
      s.mask = parse_mask(mask_bits, p);
      s.entry_shift = entry_shift;
      s.assignment = assignments.front();
      s.error = dicke::expected_cnot_error(wm, assignments.front(), arch, f);
      write_output(out_path, dicke::selection_to_json(s));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_em)) {
      const auto hist = dicke::histogram_from_json(read_file(hist_path));
      std::printf("EM = %.6f\n", dicke::em_measure(hist, n, k));
      return kExitOk;
    }

    if (app.got_subcommand(cmd_export)) {
      std::string dot;
      if (what == "arch") {
        if (arch_spec.empty()) throw CLI::ValidationError("export --what arch needs --arch");
        dot = dicke::to_dot(load_architecture(arch_spec));
      } else if (what == "gnk") {
        dot = dicke::to_dot(dicke::gnk_map(n, k));
      } else if (what == "circuit") {
        const dicke::DickeParams p(n, k);
        dot = dicke::to_dot(dicke::extract_map(build_requested(p)));
      } else {
        throw CLI::ValidationError("--what must be circuit, gnk or arch");
      }
      write_output(out_path, dot);
      return kExitOk;
    }

    std::fprintf(stderr, "no subcommand handled\n");
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInternal;
  }
}
