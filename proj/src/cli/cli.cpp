// Copyright 2026 The opgrid Authors
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

#include "opgrid/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>

#include "opgrid/errors.hpp"
#include "opgrid/grids/transforms.hpp"
#include "opgrid/hnk/space.hpp"
#include "opgrid/hnk/split.hpp"
#include "opgrid/hnk/uij.hpp"
#include "opgrid/opspace/opspace.hpp"
#include "opgrid/random.hpp"

namespace opgrid::cli {

namespace {

const std::vector<std::string> kKinds = {"hnk",  "rectangular", "hermitian", "symplectic",
                                         "spin", "spin-system", "diag-hnk",  "diag-rect"};
const std::vector<std::string> kTargets = {"grid", "hnk", "uij-grid", "projection", "trace", "split", "matrix-units"};

void need(bool ok, const std::string& what) {
  if (!ok) throw ArgumentError(what);
}

std::string hnk_name(int n, int k) { return "H_" + std::to_string(n) + "^" + std::to_string(k); }

std::string fixed(double x, int digits = 8) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

io::Json ks_json(const std::vector<int>& ks) {
  io::Json j = io::Json::array();
  for (int k : ks) j.push_back(k);
  return j;
}

std::vector<ExactScalar> parse_coeffs(const std::string& text) {
  std::vector<ExactScalar> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    mpq_class re;
    mpq_class im;
    if (re.set_str(item.substr(0, colon), 10) != 0 ||
        (colon != std::string::npos && im.set_str(item.substr(colon + 1), 10) != 0) || re.get_den() == 0 ||
        im.get_den() == 0) {
      throw ArgumentError("coefficient \"" + item + "\" is not re or re:im with rational parts");
    }
    re.canonicalize();
    im.canonicalize();
    out.emplace_back(re, im);
    start = end + 1;
  }
  return out;
}

VerificationReport trace_report(const HnkSpace& space, const std::vector<ExactScalar>& a) {
  const TraceFormulaReport t = trace_formula_check(space, a);
  VerificationReport report("trace formula on " + hnk_name(space.n, space.k) + ", m = " +
                            std::to_string(t.multiplicity));
  report.require(t.trace_identity, "tr(x x*) = m |a|^2", "exact");
  report.require(t.single_eigenvalue, "(x x*)^2 = |a|^2 x x*", "exact, eigenvalue " + t.eigenvalue.get_str());
  report.require(t.residual <= 1e-9, "trace norm = m |a|",
                 "svd " + io::format_double(t.lhs) + ", m |a| " + io::format_double(t.rhs), t.residual);
  const std::string literal = "m^(1/2) |a| = " + io::format_double(t.literal_value);
  if (t.literal_matches) {
    report.pass("literal m^(1/2) |a|", literal);
  } else {
    report.flag("literal m^(1/2) |a|", literal + " differs from the trace norm");
  }
  return report;
}

VerificationReport verify_target(const std::string& target, const Params& p, const std::string& input,
                                 int samples, std::uint64_t seed, const std::string& coeffs,
                                 const std::string& kind) {
  if (target == "grid") {
    if (!input.empty()) {
      std::ifstream in(input);
      need(static_cast<bool>(in), "cannot read \"" + input + "\"");
      io::Json j;
      try {
        j = io::Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("invalid JSON: ") + e.what());
      }
      return verify_grid(io::to_grid(io::construction_from_json(j)));
    }
    need(!kind.empty(), "verify grid requires --kind or --input");
    return verify_grid(io::to_grid(construct(kind, p)));
  }
  if (target == "matrix-units") {
    need(kind == "hermitian" || kind == "symplectic" || kind == "spin",
         "verify matrix-units requires --kind hermitian, symplectic or spin");
    if (kind == "spin") {
      need(p.r > 0, "verify matrix-units --kind spin requires --r");
      return spin_to_spin_system(spin_grid(p.r, p.odd)).report;
    }
    need(p.m > 0, "verify matrix-units requires --m");
    return kind == "hermitian" ? hermitian_to_matrix_units(hermitian_grid(p.m)).report
                               : symplectic_to_matrix_units(symplectic_grid(p.m)).report;
  }
  if (target == "split") {
    if (!p.ks.empty()) {
      need(p.n > 0, "verify split --ks requires --n");
      return peirce_split(diag_hnk(p.n, p.ks)).report;
    }
    need(p.p > 0 && p.q > 0, "verify split requires --n with --ks, or --p and --q");
    return rectangular_split(diag_rect(p.p, p.q)).report;
  }
  need(p.n > 0 && p.k > 0, "verify " + target + " requires --n and --k");
  const HnkSpace space = build_hnk(p.n, p.k);
  if (target == "hnk") {
    VerificationReport report(hnk_name(p.n, p.k));
    report.merge(verify_grid(rank_one_grid(space.basis)), "grid: ");
    const Indices got = indices(space.realization());
    report.require(got == Indices{p.k, p.n - p.k + 1}, "indices (i_R, i_L) = (k, n-k+1)",
                   "(" + std::to_string(got.right) + ", " + std::to_string(got.left) + ")");
    report.merge(verify_support_sums(space));
    return report;
  }
  if (target == "uij-grid") {
    const RankOneRealization real = space.realization();
    VerificationReport report("u_IJ calculus on " + hnk_name(p.n, p.k));
    report.merge(verify_uIJ_grid(real));
    report.merge(verify_hnk_signatures(space), "signatures: ");
    report.merge(verify_signature_coherence(real), "coherence: ");
    return report;
  }
  if (target == "projection") {
    need(samples > 0, "--samples must be positive");
    return verify_projection(space, samples, seed);
  }
  // trace
  std::vector<ExactScalar> a;
  if (!coeffs.empty()) {
    a = parse_coeffs(coeffs);
    need(static_cast<int>(a.size()) == p.n, "--coeffs needs exactly n entries");
  } else {
    Rng rng(seed);
    for (int i = 0; i < p.n; ++i) a.push_back(random_scalar(rng));
  }
  return trace_report(space, a);
}

int witness(const Params& p, const std::string& format, std::ostream& out) {
  need(p.n > 0 && p.k > 0, "witness requires --n and --k");
  const CbSeparationReport r = cb_separation_report(p.n, p.k);
  const HnkSpace space = build_hnk(p.n, p.k);
  const AmplifiedElement row = row_witness(space);
  const ExactMatrix in_h = row.materialize(space.basis);
  const ExactMatrix in_r = row.materialize(row_space_basis(p.n));
  const std::string h = hnk_name(p.n, p.k);
  const std::string rn = "R_" + std::to_string(p.n);
  const std::string cn = "C_" + std::to_string(p.n);
  if (format == "json") {
    io::Json j = io::Json::object();
    j["n"] = p.n;
    j["k"] = p.k;
    j["row"] = {{"norm", r.row_norm}, {"image_norm", r.row_image_norm}, {"ratio", r.row_ratio},
                {"separates", r.separates_from_rows}};
    j["column"] = {{"norm", r.col_norm}, {"image_norm", r.col_image_norm}, {"ratio", r.col_ratio},
                   {"separates", r.separates_from_columns}};
    j["row_witness"] = io::to_json(in_h);
    j["row_image"] = io::to_json(in_r);
    j["report"] = io::to_json(r.report, false);
    out << j.dump() << '\n';
  } else {
    out << "block row [u_1 ... u_" << p.n << "]\n";
    out << "in " << h << " (" << in_h.rows() << 'x' << in_h.cols() << ")\n" << io::pretty(in_h);
    out << "in " << rn << " (" << in_r.rows() << 'x' << in_r.cols() << ")\n" << io::pretty(in_r);
    out << "row norm in " << h << ": " << fixed(r.row_norm) << '\n';
    out << "row norm in " << rn << ": " << fixed(r.row_image_norm) << '\n';
    out << "ratio: " << fixed(r.row_ratio) << (r.separates_from_rows ? "" : ", no separation") << '\n';
    out << "column norm in " << h << ": " << fixed(r.col_norm) << '\n';
    out << "column norm in " << cn << ": " << fixed(r.col_image_norm) << '\n';
    out << "column ratio: " << fixed(r.col_ratio) << (r.separates_from_columns ? "" : ", no separation") << '\n';
    out << io::render_text(r.report, false);
  }
  return r.report.passed() ? kPass : kFail;
}

void add_params(CLI::App* app, Params& p) {
  app->add_option("--n", p.n, "ground set size n")->check(CLI::PositiveNumber);
  app->add_option("--k", p.k, "H_n^k level k")->check(CLI::PositiveNumber);
  app->add_option("--p", p.p, "rows p")->check(CLI::PositiveNumber);
  app->add_option("--q", p.q, "columns q")->check(CLI::PositiveNumber);
  app->add_option("--m", p.m, "size m")->check(CLI::PositiveNumber);
  app->add_option("--r", p.r, "spin rank r")->check(CLI::PositiveNumber);
  app->add_flag("--odd", p.odd, "spin grid with u_0");
  app->add_option("--ks", p.ks, "decreasing levels, comma separated")->delimiter(',');
}

}  // namespace

io::Construction construct(const std::string& kind, const Params& p) {
  if (kind == "hnk") {
    need(p.n > 0 && p.k > 0, "construct hnk requires --n and --k");
    const HnkSpace space = build_hnk(p.n, p.k);
    io::Construction c = io::from_grid(kind, {{"n", p.n}, {"k", p.k}}, rank_one_grid(space.basis));
    c.rows = space.rows;
    c.cols = space.cols;
    return c;
  }
  if (kind == "rectangular" || kind == "diag-rect") {
    need(p.p > 0 && p.q > 0, "construct " + kind + " requires --p and --q");
    return io::from_grid(kind, {{"p", p.p}, {"q", p.q}},
                         kind == "rectangular" ? rectangular_grid(p.p, p.q) : diag_rect(p.p, p.q));
  }
  if (kind == "hermitian" || kind == "symplectic") {
    need(p.m > 0, "construct " + kind + " requires --m");
    return io::from_grid(kind, {{"m", p.m}}, kind == "hermitian" ? hermitian_grid(p.m) : symplectic_grid(p.m));
  }
  if (kind == "spin") {
    need(p.r > 0, "construct spin requires --r");
    return io::from_grid(kind, {{"r", p.r}, {"odd", p.odd}}, spin_grid(p.r, p.odd));
  }
  if (kind == "diag-hnk") {
    need(p.n > 0 && !p.ks.empty(), "construct diag-hnk requires --n and --ks");
    return io::from_grid(kind, {{"n", p.n}, {"ks", ks_json(p.ks)}}, rank_one_grid(diag_hnk(p.n, p.ks).elements()));
  }
  if (kind == "spin-system") {
    need(p.k > 0, "construct spin-system requires --k");
    io::Construction c;
    c.kind = kind;
    c.params = {{"k", p.k}};
    const auto system = spin_system(p.k);
    for (std::size_t i = 0; i < system.size(); ++i) {
      c.matrices.push_back({"s" + std::to_string(i + 1), system[i], std::nullopt});
    }
    return c;
  }
  throw ArgumentError("unknown construction kind \"" + kind + "\"");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify finite-dimensional grids, H_n^k spaces and their operator space witnesses",
               "opgrid"};
  app.require_subcommand(1);

  Params params;
  std::string kind;
  std::string target;
  std::string format;
  std::string input;
  std::string coeffs;
  int samples = 1000;
  std::uint64_t seed = 0;
  bool timing = false;

  auto* cons = app.add_subcommand("construct", "construct matrices of a grid or space");
  cons->add_option("kind", kind, "what to construct")->required()->check(CLI::IsMember(kKinds));
  add_params(cons, params);
  cons->add_option("--format", format, "json, csv or pretty")
      ->default_val("pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("target", target, "suite to run")->required()->check(CLI::IsMember(kTargets));
  add_params(ver, params);
  ver->add_option("--kind", kind, "construction kind for grid and matrix-units");
  ver->add_option("--input", input, "construction JSON for verify grid");
  ver->add_option("--samples", samples, "random inputs for projection")->default_val(1000);
  ver->add_option("--seed", seed, "generator seed")->default_val(0);
  ver->add_option("--coeffs", coeffs, "trace coefficients re[:im], comma separated");
  ver->add_option("--format", format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--timing", timing, "report elapsed time");

  auto* wit = app.add_subcommand("witness", "norms of the block row and column witnesses");
  add_params(wit, params);
  wit->add_option("--format", format, "text or json")->default_val("text")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (cons->parsed()) {
      const io::Construction c = construct(kind, params);
      if (format == "json") {
        out << io::to_json(c).dump() << '\n';
      } else if (format == "csv") {
        io::write_csv(out, c);
      } else {
        io::write_pretty(out, c);
      }
      return kPass;
    }
    if (wit->parsed()) return witness(params, format, out);

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report = verify_target(target, params, input, samples, seed, coeffs, kind);
    report.set_elapsed_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    if (format == "json") {
      out << io::to_json(report, timing).dump() << '\n';
    } else {
      out << io::render_text(report, timing);
    }
    return report.passed() ? kPass : kFail;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const ArgumentError& e) {
    err << "usage: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "usage: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const Error& e) {
    err << "failed: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace opgrid::cli
