// qdis: two-qubit correlation and disentanglement toolkit.
//
// Subcommands: gen, analyze, channel, sweep, ideal, cloning.
// Exit codes: 0 success, 1 input/parse error, 2 unphysical state,
// 3 failed ideal-disentanglement precondition.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qdis/channels.hpp"
#include "qdis/cloning.hpp"
#include "qdis/correlation.hpp"
#include "qdis/disentangle.hpp"
#include "qdis/separability.hpp"
#include "qdis/state_io.hpp"
#include "qdis/states.hpp"

namespace {

using namespace qdis;

// Validation tolerance for states read or generated by the CLI; the
// QDIS_TOL environment variable overrides the library default.
double cli_tol() {
  const char* env = std::getenv("QDIS_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0))
    throw FileFormatError("QDIS_TOL must be a positive number, got \"" +
                          std::string(env) + "\"");
  return v;
}

TwoQubitState load_state(const std::string& path, const StateFile& file) {
  (void)path;
  return TwoQubitState(file.matrix, cli_tol());
}

json analysis_json(const TwoQubitState& state,
                   const std::optional<std::string>& label) {
  json j;
  if (label) j["label"] = *label;
  j["decomposition"] = decomposition_json(decompose(state));
  j["profile"] = profile_json(profile(state));
  j["verdict"] = verdict_json(ppt_verdict(state));
  return j;
}

void print_analysis_csv(const TwoQubitState& state) {
  const BlochDecomposition d = decompose(state);
  std::cout << "r1,r2,r3,s1,s2,s3,t11,t12,t13,t21,t22,t23,t31,t32,t33\n";
  for (int i = 0; i < 3; ++i) std::cout << format_double(d.r(i)) << ',';
  for (int i = 0; i < 3; ++i) std::cout << format_double(d.s(i)) << ',';
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      std::cout << format_double(d.T(i, k)) << (i == 2 && k == 2 ? '\n' : ',');
  std::cout << kProfileCsvHeader << '\n'
            << profile_csv_row(profile(state)) << '\n'
            << kVerdictCsvHeader << '\n'
            << verdict_csv_row(ppt_verdict(state)) << '\n';
}

std::string rational_str(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

int run_gen(const std::string& kind, int index, double theta, double p,
            std::uint64_t seed, bool theta_set, bool p_set, bool seed_set,
            const std::string& out_path) {
  StateSpec spec;
  std::string label;
  if (kind == "bell") {
    spec = StateSpec::bell(index);
    label = "bell(" + std::to_string(index) + ")";
  } else if (kind == "schmidt") {
    if (!theta_set) throw InvalidSpec("schmidt requires --theta");
    spec = StateSpec::schmidt(theta);
    label = "schmidt(theta=" + format_double(theta) + ")";
  } else if (kind == "werner") {
    if (!p_set) throw InvalidSpec("werner requires --p");
    spec = StateSpec::werner(p);
    label = "werner(p=" + format_double(p) + ")";
  } else if (kind == "pure" || kind == "mixed" || kind == "product") {
    if (!seed_set) throw InvalidSpec(kind + " requires --seed");
    spec = kind == "pure"    ? StateSpec::random_pure(seed)
           : kind == "mixed" ? StateSpec::random_mixed(seed)
                             : StateSpec::random_product(seed);
    label = kind + "(seed=" + std::to_string(seed) + ")";
  } else {
    throw InvalidSpec("unknown state kind \"" + kind + "\"");
  }
  const TwoQubitState state = make_state(spec);
  if (out_path.empty())
    std::cout << state_file_json(state.matrix(), label).dump(2) << '\n';
  else
    write_state_file(out_path, state.matrix(), label);
  return 0;
}

int run_analyze(const std::string& file, const std::string& format) {
  const StateFile f = read_state_file(file);
  const TwoQubitState state = load_state(file, f);
  if (format == "csv")
    print_analysis_csv(state);
  else
    std::cout << analysis_json(state, f.label).dump(2) << '\n';
  return 0;
}

int run_channel(const std::string& file, double eta1, double eta2,
                const std::string& out_path) {
  const StateFile f = read_state_file(file);
  const TwoQubitState before = load_state(file, f);
  const TwoQubitState after =
      apply_local(before, isotropic_kraus(eta1), isotropic_kraus(eta2));

  json j;
  j["eta1"] = eta1;
  j["eta2"] = eta2;
  j["quality_factor"] = quality_factor(eta1, eta2);
  j["threshold_ok"] = threshold_ok(eta1, eta2);
  j["before"] = analysis_json(before, f.label);
  j["after"] = analysis_json(after, std::nullopt);
  std::cout << j.dump(2) << '\n';

  if (!out_path.empty()) {
    std::string label = "channel(eta1=" + format_double(eta1) +
                        ",eta2=" + format_double(eta2) + ")";
    if (f.label) label += " of " + *f.label;
    write_state_file(out_path, after.matrix(), label);
  }
  return 0;
}

int run_sweep(int eta_steps, int theta_steps, const std::string& out_path) {
  const SweepResult result = threshold_sweep(eta_steps, theta_steps);
  std::ofstream out(out_path);
  if (!out)
    throw FileFormatError("cannot write sweep CSV: " + out_path);
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : result.rows) {
    out << format_double(row.eta1) << ',' << format_double(row.eta2) << ','
        << format_double(row.product) << ','
        << format_double(row.worst_margin) << ','
        << (row.ppt_all_theta ? "true" : "false") << ','
        << (row.threshold_predict ? "true" : "false") << ','
        << (row.agree ? "true" : "false") << '\n';
  }
  std::cout << "disagreements_outside_band="
            << result.disagreements_outside_band << '\n';
  return 0;
}

int run_ideal(const std::vector<std::string>& files, double tol) {
  std::vector<TwoQubitState> states;
  states.reserve(files.size());
  std::vector<std::optional<std::string>> labels;
  for (const std::string& file : files) {
    const StateFile f = read_state_file(file);
    states.push_back(load_state(file, f));
    labels.push_back(f.label);
  }
  const BatchIdealResult result = batch_ideal_check(states, tol);

  bool all_ideal = result.commuting_family;
  json reports = json::array();
  for (const DisentanglementReport& r : result.reports) {
    reports.push_back(report_json(r));
    if (!ideal_ok(r, tol)) all_ideal = false;
  }
  json j;
  j["commuting_family"] = result.commuting_family;
  if (result.failing_pair) {
    j["failing_pair"] =
        json::array({result.failing_pair->first, result.failing_pair->second});
    json pair_files = json::array();
    pair_files.push_back(files[result.failing_pair->first]);
    pair_files.push_back(files[result.failing_pair->second]);
    j["failing_files"] = pair_files;
  }
  j["all_ideal"] = all_ideal;
  j["reports"] = reports;
  std::cout << j.dump(2) << '\n';
  return all_ideal ? 0 : 3;
}

int run_cloning(int max_m) {
  if (max_m < 1) throw InvalidSpec("--max-m must be at least 1");
  const Rational threshold(1, 3);
  std::cout << "mode,M,eta,net_shrink,meets_threshold\n";
  const std::pair<CloningMode, const char*> modes[] = {
      {CloningMode::local_symmetric, "local_symmetric"},
      {CloningMode::local_single, "local_single"},
      {CloningMode::nonlocal, "nonlocal"},
  };
  for (const auto& [mode, name] : modes)
    for (int m = 1; m <= max_m; ++m) {
      const Rational eta = clone_eta(mode, m);
      const Rational net = net_shrink(mode, m);
      std::cout << name << ',' << m << ',' << rational_str(eta) << ','
                << rational_str(net) << ','
                << (net <= threshold ? "true" : "false") << '\n';
    }
  for (const auto& [mode, name] : modes) {
    const MinCopies mc = min_copies(mode);
    std::cout << "min_copies " << name << '=';
    if (mc.copies)
      std::cout << *mc.copies << '\n';
    else
      std::cout << "unattainable (infimum " << rational_str(mc.infimum)
                << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit correlation and disentanglement toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a state file");
  std::string kind;
  int bell_index = 0;
  double theta = 0.0, p = 0.0;
  std::uint64_t seed = 0;
  std::string gen_out;
  gen->add_option("--kind", kind,
                  "bell | schmidt | werner | pure | mixed | product")
      ->required();
  gen->add_option("--index", bell_index, "Bell state index 0..3");
  auto* theta_opt = gen->add_option("--theta", theta, "Schmidt angle");
  auto* p_opt = gen->add_option("--p", p, "Werner weight");
  auto* seed_opt = gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--out", gen_out, "output path (default: stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "decompose and classify");
  std::string analyze_file, analyze_format = "json";
  analyze->add_option("file", analyze_file, "state file")->required();
  analyze->add_option("--format", analyze_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // channel
  auto* channel =
      app.add_subcommand("channel", "apply the two-sided isotropic channel");
  std::string channel_file, channel_out;
  double eta1 = 1.0, eta2 = 1.0;
  channel->add_option("file", channel_file, "state file")->required();
  channel->add_option("--eta1", eta1, "reduction factor, qubit 1")
      ->required();
  channel->add_option("--eta2", eta2, "reduction factor, qubit 2")
      ->required();
  channel->add_option("--out", channel_out, "write post-channel state here");

  // sweep
  auto* sweep =
      app.add_subcommand("sweep", "threshold agreement sweep over eta grid");
  int eta_steps = 0, theta_steps = 0;
  std::string sweep_out;
  sweep->add_option("--eta-steps", eta_steps, "points per eta axis")
      ->required()
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--theta-steps", theta_steps, "points on [0, pi/2]")
      ->required()
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", sweep_out, "CSV output path")->required();

  // ideal
  auto* ideal =
      app.add_subcommand("ideal", "dephasing disentanglement check");
  std::vector<std::string> ideal_files;
  double ideal_tol = 1e-10;
  ideal->add_option("files", ideal_files, "state files")->required();
  ideal->add_option("--tol", ideal_tol, "commutation/ideality tolerance");

  // cloning
  auto* cloning =
      app.add_subcommand("cloning", "cloning-based disentanglement bounds");
  int max_m = 12;
  cloning->add_option("--max-m", max_m, "largest copy count in the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed())
      return run_gen(kind, bell_index, theta, p, seed, theta_opt->count() > 0,
                     p_opt->count() > 0, seed_opt->count() > 0, gen_out);
    if (analyze->parsed()) return run_analyze(analyze_file, analyze_format);
    if (channel->parsed())
      return run_channel(channel_file, eta1, eta2, channel_out);
    if (sweep->parsed()) return run_sweep(eta_steps, theta_steps, sweep_out);
    if (ideal->parsed()) return run_ideal(ideal_files, ideal_tol);
    if (cloning->parsed()) return run_cloning(max_m);
  } catch (const ValidationError& e) {
    std::cerr << "error: unphysical state: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
