// Copyright 2026 The ulc Authors
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

#include "cli.h"

#include <filesystem>
#include <sstream>
#include <string_view>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "ulc/counterexample.h"
#include "ulc/errors.h"
#include "ulc/geometry.h"
#include "ulc/io.h"
#include "ulc/liggett.h"
#include "ulc/sequence.h"
#include "ulc/shephard.h"

namespace ulc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool machine = false;
  fs::path witness_dir;
};

json ToJson(const Seq& s) { return json::parse(SequenceToJson(s)); }
json ToJson(const ViolationReport& r) { return json::parse(ReportToJson(r)); }

std::string Describe(const ViolationReport& r) {
  if (r.holds) return "holds";
  std::ostringstream os;
  os << "violated at index " << *r.index << ": ";
  if (r.kind == CheckKind::kNonNegativity) {
    os << "entry " << ToString(*r.lhs) << " < 0";
  } else {
    os << "lhs " << ToString(*r.lhs) << " < rhs " << ToString(*r.rhs);
  }
  return os.str();
}

std::string Label(const ViolationReport& r, unsigned order) {
  if (r.kind == CheckKind::kNonNegativity) return "nonnegativity";
  return std::string(ToString(r.kind)) + "(" + std::to_string(order) + ")";
}

void WriteWitness(const Context& ctx, const std::string& name,
                  const std::string& text) {
  fs::create_directories(ctx.witness_dir);
  const fs::path path = ctx.witness_dir / name;
  WriteTextFile(path, text);
  ctx.out << "witness: " << path.string() << '\n';
}

void EmitMachine(const Context& ctx, const json& summary) {
  if (ctx.machine) ctx.out << summary.dump() << '\n';
}

// --- check -----------------------------------------------------------------

int RunCheck(const Context& ctx, const std::string& file, unsigned order,
             bool signed_entries) {
  const Seq a = LoadSequence(file);
  const ViolationReport r =
      signed_entries ? NewtonCheck(a, order) : IsUlc(a, order);
  ctx.out << Label(r, order) << ": " << Describe(r) << '\n';
  if (!r.holds) {
    WriteWitness(ctx, "check_sequence.json", SequenceToJson(a));
    WriteWitness(ctx, "check_report.json",
                 json{{"command", "check"},
                      {"order", order},
                      {"signed", signed_entries},
                      {"sequence", ToJson(a)},
                      {"report", ToJson(r)}}
                     .dump());
  }
  EmitMachine(ctx, json{{"command", "check"},
                        {"order", order},
                        {"signed", signed_entries},
                        {"report", ToJson(r)}});
  return r.holds ? kSuccess : kViolation;
}

// --- convolve --------------------------------------------------------------

int RunConvolve(const Context& ctx, const std::string& a_file,
                const std::string& b_file, const std::string& output) {
  const Seq c = Convolve(LoadSequence(a_file), LoadSequence(b_file));
  if (output.empty()) {
    ctx.out << SequenceToJson(c) << '\n';
  } else {
    WriteTextFile(output, SequenceToJson(c));
    ctx.out << "wrote " << output << '\n';
  }
  EmitMachine(ctx, json{{"command", "convolve"}, {"c", ToJson(c)}});
  return kSuccess;
}

// --- realize ---------------------------------------------------------------

int RunRealize(const Context& ctx, const std::string& file,
               const std::string& output_dir) {
  const Seq a = LoadSequence(file);
  if (a.degree() == 0 || !a.IsStrictlyPositive()) {
    throw PreconditionError(
        "realize needs a strictly positive sequence of length >= 2");
  }
  const auto n = static_cast<unsigned>(a.degree());
  const ViolationReport report = IsUlc(a, n);
  if (!report.holds) {
    ctx.out << Label(report, n) << ": " << Describe(report) << '\n';
    WriteWitness(ctx, "realize_report.json",
                 json{{"command", "realize"},
                      {"sequence", ToJson(a)},
                      {"report", ToJson(report)}}
                     .dump());
    EmitMachine(ctx, json{{"command", "realize"},
                          {"realized", false},
                          {"report", ToJson(report)}});
    return kViolation;
  }

  const Realization r = Realize(a);
  const std::string doc = RealizationToJson(a, r);
  json lambda = json::array();
  for (const Rat& x : r.lambda()) lambda.push_back(ToString(x));
  ctx.out << "n: " << r.n() << '\n'
          << "lambda: " << lambda.dump() << '\n'
          << "proportionality: " << ToString(r.proportionality()) << '\n'
          << "verified: c * Vol_n(tP + Q) == a\n";
  if (!output_dir.empty()) {
    fs::create_directories(output_dir);
    const BodyPair bodies = r.bodies();
    WriteTextFile(fs::path(output_dir) / "P.json", BodyToJson(bodies.p));
    WriteTextFile(fs::path(output_dir) / "Q.json", BodyToJson(bodies.q));
    WriteTextFile(fs::path(output_dir) / "realization.json", doc);
    ctx.out << "wrote " << (fs::path(output_dir) / "realization.json").string()
            << '\n';
  } else {
    ctx.out << doc << '\n';
  }
  EmitMachine(ctx, json{{"command", "realize"},
                        {"realized", true},
                        {"lambda", lambda},
                        {"proportionality", ToString(r.proportionality())}});
  return kSuccess;
}

// --- volpoly ---------------------------------------------------------------

int RunVolPoly(const Context& ctx, const std::string& p_file,
               const std::string& q_file) {
  const Body p = LoadBody(p_file);
  const Body q = LoadBody(q_file);
  const VolPoly poly = VolumePoly(p, q);
  const auto n = static_cast<unsigned>(poly.dim);
  json mixed = json::array();
  for (std::size_t k = 0; k <= poly.dim; ++k) {
    mixed.push_back(ToString(Rat(Factorial(k) * Factorial(poly.dim - k)) *
                             poly.coeffs[k]));
  }
  const ViolationReport r = IsUlc(poly.coeffs, n);
  ctx.out << "dim: " << poly.dim << '\n'
          << "coeffs: " << SequenceToJson(poly.coeffs) << '\n'
          << "mixed volumes: " << mixed.dump() << '\n'
          << Label(r, n) << ": " << Describe(r) << '\n';
  if (!r.holds) {
    WriteWitness(ctx, "volpoly_P.json", BodyToJson(p));
    WriteWitness(ctx, "volpoly_Q.json", BodyToJson(q));
    WriteWitness(ctx, "volpoly_report.json",
                 json{{"command", "volpoly"},
                      {"coeffs", ToJson(poly.coeffs)},
                      {"report", ToJson(r)}}
                     .dump());
  }
  EmitMachine(ctx, json{{"command", "volpoly"},
                        {"dim", poly.dim},
                        {"coeffs", ToJson(poly.coeffs)},
                        {"mixed_volumes", mixed},
                        {"report", ToJson(r)}});
  return r.holds ? kSuccess : kViolation;
}

// --- theorem ---------------------------------------------------------------

json VerdictJson(const TheoremVerdict& v) {
  json doc{{"a", ToJson(v.a)},          {"l", v.l},
           {"b", ToJson(v.b)},          {"d", v.d},
           {"c", ToJson(v.c)},          {"report", ToJson(v.ulc_report)},
           {"geometric_checked", v.geometric_checked}};
  if (v.geometric_match) doc["geometric_match"] = *v.geometric_match;
  return doc;
}

void PrintVerdict(const Context& ctx, const TheoremVerdict& v) {
  ctx.out << "c: " << SequenceToJson(v.c) << '\n'
          << Label(v.ulc_report, v.l + v.d) << ": " << Describe(v.ulc_report)
          << '\n';
  if (v.geometric_checked) {
    ctx.out << "geometric: "
            << (*v.geometric_match ? "c_a c_b Vol(tP + Q) == a * b"
                                   : "MISMATCH")
            << '\n';
  }
}

int RunTheorem(const Context& ctx, const std::string& a_file, unsigned l,
               const std::string& b_file, unsigned d, bool geometric) {
  const Seq a = LoadSequence(a_file);
  const Seq b = LoadSequence(b_file);
  const TheoremVerdict v = TheoremCheck(a, l, b, d, geometric);
  PrintVerdict(ctx, v);
  if (!v.ok()) {
    WriteWitness(ctx, "theorem_a.json", SequenceToJson(a));
    WriteWitness(ctx, "theorem_b.json", SequenceToJson(b));
    WriteWitness(ctx, "theorem_verdict.json", VerdictJson(v).dump());
  }
  json summary = VerdictJson(v);
  summary["command"] = "theorem";
  summary["ok"] = v.ok();
  EmitMachine(ctx, summary);
  return v.ok() ? kSuccess : kViolation;
}

// --- fuzz ------------------------------------------------------------------

int RunFuzz(const Context& ctx, const FuzzOptions& options) {
  const FuzzSummary s = Fuzz(options);
  ctx.out << "trials: " << s.trials << '\n'
          << "geometric checks: " << s.geometric_checks << '\n'
          << "ulc violations: " << s.ulc_violations << '\n'
          << "geometric mismatches: " << s.geometric_mismatches << '\n';
  // Timing goes to stderr so that stdout is reproducible.
  ctx.err << "elapsed: " << s.elapsed_seconds << " s\n";
  for (const FuzzFailure& f : s.failures) {
    const std::string stem = "fuzz_trial_" + std::to_string(f.trial);
    ctx.out << "FAIL trial " << f.trial << ": "
            << Label(f.verdict.ulc_report, f.verdict.l + f.verdict.d) << " "
            << Describe(f.verdict.ulc_report) << '\n';
    WriteWitness(ctx, stem + "_a.json", SequenceToJson(f.verdict.a));
    WriteWitness(ctx, stem + "_b.json", SequenceToJson(f.verdict.b));
    WriteWitness(ctx, stem + "_verdict.json", VerdictJson(f.verdict).dump());
  }
  json failed = json::array();
  for (const FuzzFailure& f : s.failures) failed.push_back(f.trial);
  EmitMachine(ctx, json{{"command", "fuzz"},
                        {"seed", options.seed},
                        {"trials", s.trials},
                        {"geometric_checks", s.geometric_checks},
                        {"ulc_violations", s.ulc_violations},
                        {"geometric_mismatches", s.geometric_mismatches},
                        {"failed_trials", failed}});
  return s.clean() ? kSuccess : kViolation;
}

// --- counterexample --------------------------------------------------------

json PointJson(const FamilyPoint& p) {
  return json{{"a", ToString(p.a)},
              {"b", ToString(p.b)},
              {"seq", ToJson(p.seq)},
              {"conv", ToJson(p.conv)},
              {"ratio", ToString(p.ratio)},
              {"threshold", ToString(p.threshold)},
              {"violated", p.violated},
              {"index", kCounterexampleIndex},
              {"seq_newton4", ToJson(p.seq_newton)},
              {"conv_newton8", ToJson(p.conv_newton)}};
}

int RunCounterexample(const Context& ctx,
                      const std::vector<FamilyPoint>& points) {
  ctx.out << "a\tb\tc4\tc5\tc6\tratio\tthreshold\tnewton4(seq)\tverdict\n";
  bool any = false;
  for (const FamilyPoint& p : points) {
    ctx.out << ToString(p.a) << '\t' << ToString(p.b) << '\t'
            << ToString(p.conv[4]) << '\t' << ToString(p.conv[5]) << '\t'
            << ToString(p.conv[6]) << '\t' << ToString(p.ratio) << '\t'
            << ToString(p.threshold) << '\t'
            << (p.seq_newton.holds ? "holds" : "fails") << '\t'
            << (p.violated ? "violated at index 5: ratio < threshold"
                           : "not violated")
            << '\n';
    if (ctx.machine) ctx.out << PointJson(p).dump() << '\n';
    any = any || p.violated;
  }
  if (any) {
    json records = json::array();
    for (const FamilyPoint& p : points) {
      if (p.violated) records.push_back(PointJson(p));
    }
    WriteWitness(ctx, "counterexample.json", records.dump());
  }
  std::size_t violated = 0;
  for (const FamilyPoint& p : points) violated += p.violated;
  EmitMachine(ctx, json{{"command", "counterexample"},
                        {"points", points.size()},
                        {"violated", violated}});
  return any ? kViolation : kSuccess;
}

std::vector<Rat> ParseRationalList(const std::string& text) {
  std::vector<Rat> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(ParseRational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact ultra-logconcavity and mixed-volume toolkit", "ulc"};
  app.require_subcommand(1);
  app.fallthrough();

  bool machine = false;
  std::string witness_dir = "ulc-witness";
  app.add_flag("--machine", machine,
               "Append a machine-readable JSON summary line");
  app.add_option("--witness-dir", witness_dir,
                 "Directory for witness files written on violations");

  unsigned order = 0;
  bool signed_entries = false;
  std::string seq_file;
  auto* check = app.add_subcommand("check", "Check ULC(d) or, with --signed, "
                                            "the Newton inequalities of order d");
  check->add_option("--order", order, "Order d")->required();
  check->add_flag("--signed", signed_entries, "Allow negative entries");
  check->add_option("SEQFILE", seq_file, "Sequence file")->required();

  std::string a_file, b_file, output;
  auto* convolve = app.add_subcommand("convolve", "Convolve two sequences");
  convolve->add_option("A", a_file, "First sequence file")->required();
  convolve->add_option("B", b_file, "Second sequence file")->required();
  convolve->add_option("-o,--output", output, "Write the result here");

  std::string realize_file, realize_dir;
  auto* realize = app.add_subcommand(
      "realize", "Realize a positive ULC(n) sequence by two simplices");
  realize->add_option("SEQFILE", realize_file, "Sequence file")->required();
  realize->add_option("-o,--output", realize_dir,
                      "Write P.json, Q.json, realization.json here");

  std::string p_file, q_file;
  auto* volpoly = app.add_subcommand("volpoly", "Coefficients of Vol_n(tP + Q)");
  volpoly->add_option("P", p_file, "Polytope file")->required();
  volpoly->add_option("Q", q_file, "Polytope file")->required();

  std::string ta_file, tb_file;
  unsigned la = 0, lb = 0;
  bool geometric = false;
  auto* theorem = app.add_subcommand(
      "theorem", "Check that a ULC(l) * ULC(d) convolution is ULC(l + d)");
  theorem->add_option("A", ta_file, "Sequence a")->required();
  theorem->add_option("B", tb_file, "Sequence b")->required();
  theorem->add_option("--la", la, "Order l of a")->required();
  theorem->add_option("--lb", lb, "Order d of b")->required();
  theorem->add_flag("--geometric", geometric,
                    "Also verify through the product-of-simplices bodies");

  FuzzOptions fuzz_options;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized theorem check");
  fuzz->add_option("--trials", fuzz_options.trials, "Number of trials")
      ->capture_default_str();
  fuzz->add_option("--max-order", fuzz_options.max_order, "Largest l and d")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fuzz_options.seed, "Random seed")
      ->capture_default_str();
  fuzz->add_option("--geometric-every", fuzz_options.geometric_every,
                   "Run the geometric route every K-th trial (0: never)")
      ->capture_default_str();
  fuzz->add_option("--threads", fuzz_options.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::string a_param, b_param, scan;
  auto* counter = app.add_subcommand(
      "counterexample", "Signed family (1, a, 0, -b, 1) and its square");
  auto* a_opt = counter->add_option("--a", a_param, "Parameter a as p/q");
  auto* b_opt = counter->add_option("--b", b_param, "Parameter b as p/q");
  auto* scan_opt = counter->add_option(
      "--scan", scan, "Comma-separated eps values; uses a = eps^2, b = eps");
  a_opt->needs(b_opt);
  b_opt->needs(a_opt);
  scan_opt->excludes(a_opt)->excludes(b_opt);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ulc");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Context ctx{out, err, machine, witness_dir};
  try {
    if (check->parsed()) {
      return RunCheck(ctx, seq_file, order, signed_entries);
    }
    if (convolve->parsed()) return RunConvolve(ctx, a_file, b_file, output);
    if (realize->parsed()) return RunRealize(ctx, realize_file, realize_dir);
    if (volpoly->parsed()) return RunVolPoly(ctx, p_file, q_file);
    if (theorem->parsed()) {
      return RunTheorem(ctx, ta_file, la, tb_file, lb, geometric);
    }
    if (fuzz->parsed()) return RunFuzz(ctx, fuzz_options);
    if (counter->parsed()) {
      if (!scan.empty()) {
        const std::vector<Rat> eps = ParseRationalList(scan);
        return RunCounterexample(ctx, LimitScan(eps));
      }
      if (a_param.empty()) {
        err << "error: counterexample needs --a and --b, or --scan\n";
        return kUsage;
      }
      return RunCounterexample(
          ctx, {EvaluateFamilyPoint(ParseRational(a_param),
                                    ParseRational(b_param))});
    }
  } catch (const VerificationError& e) {
    out << "verification failure: " << e.what() << '\n';
    WriteWitness(ctx, "verification_failure.json",
                 json{{"error", e.what()}, {"args", args}}.dump());
    return kViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace ulc::cli
