// iecoctl — command-line front end for the key-binding toolkit.
//
// Subcommands:
//   enroll      bind a fresh key to a set of feature templates, emit helper file
//   reproduce   recover the key from query templates plus a helper file
//   simulate    cohort-level FAR/FRR study across code configurations
//   analyze     channel formulas, unlinkability, score histograms, attacks
//
// Exit codes: 0 success, 1 authentication reject, 2 input error,
// 3 corrupt helper file.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ieco/analysis.hpp"
#include "ieco/bch.hpp"
#include "ieco/helper_file.hpp"
#include "ieco/pipeline.hpp"
#include "ieco/rng.hpp"
#include "ieco/scheme.hpp"
#include "ieco/study.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitReject = 1;
constexpr int kExitInput = 2;
constexpr int kExitCorruptHelper = 3;

// Thrown for anything the caller got wrong: files, formats, dimensions.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& token, std::size_t row) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw InputError("row " + std::to_string(row + 1) +
                     ": not a number: '" + token + "'");
  }
  return value;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// One template per row, comma-separated feature values, equal column counts.
std::vector<std::vector<double>> read_templates(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open templates file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    const std::string body = trimmed(line);
    ++lineno;
    if (body.empty() || body[0] == '#') continue;
    std::vector<double> row;
    std::stringstream cells(body);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(parse_double(trimmed(cell), lineno - 1));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw InputError("row " + std::to_string(lineno) + " has " +
                       std::to_string(row.size()) + " columns, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("templates file is empty: " + path);
  return rows;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open output file: " + path);
  out << text;
  if (!out) throw InputError("write failed: " + path);
}

// Key text goes to --key-out when given, else to stdout (sole stdout payload).
void emit_key(const ieco::BitString& key, const std::string& key_out) {
  const std::string hex = key.to_hex() + "\n";
  if (key_out.empty()) {
    std::cout << hex;
  } else {
    write_text_file(key_out, hex);
  }
}

void emit_report(const json& summary, const std::string& tsv,
                 const std::string& out_base) {
  if (out_base.empty()) {
    std::cout << summary.dump(2) << "\n";
  } else {
    write_text_file(out_base + ".json", summary.dump(2) + "\n");
    write_text_file(out_base + ".tsv", tsv);
    std::cerr << "wrote " << out_base << ".json and " << out_base << ".tsv\n";
  }
}

// --- enroll ---------------------------------------------------------------

struct EnrollArgs {
  std::string templates_path;
  std::string helper_path;
  std::string key_out;
  unsigned n = 255;
  unsigned k = 139;
  unsigned phi = 2;
  unsigned gamma = 128;
  std::optional<std::uint64_t> seed;
};

int run_enroll(const EnrollArgs& a) {
  const auto templates = read_templates(a.templates_path);
  if (templates.size() < 2) {
    throw InputError("enrollment needs at least two templates, got " +
                     std::to_string(templates.size()));
  }
  const std::size_t feature_dim = templates.front().size();
  if (feature_dim < 2) throw InputError("templates need at least two columns");
  const std::size_t needed = static_cast<std::size_t>(a.phi) * a.n;
  if (feature_dim - 1 < needed) {
    throw InputError("projected dimension " + std::to_string(feature_dim - 1) +
                     " cannot supply " + std::to_string(needed) +
                     " selected bits; provide wider templates");
  }

  const ieco::BchCode code = ieco::BchCode::construct(a.n, a.k);
  ieco::SystemRandom system_rng;
  std::optional<ieco::SplitMixRandom> seeded;
  if (a.seed) seeded.emplace(*a.seed);
  ieco::RandomSource& rng =
      seeded ? static_cast<ieco::RandomSource&>(*seeded) : system_rng;

  const std::uint64_t rp_seed = rng.next_u64();
  const ieco::EnrollmentString enrolled =
      ieco::enroll_string(templates, rp_seed, a.phi, a.n);
  const ieco::IecoEnrollment binding =
      ieco::ieco_generate(enrolled.symbols, code, a.gamma, rng);

  ieco::HelperData helper;
  helper.phi = a.phi;
  helper.gamma = a.gamma;
  helper.n = static_cast<std::uint16_t>(a.n);
  helper.k = static_cast<std::uint16_t>(a.k);
  helper.rp_seed = rp_seed;
  helper.input_dim = static_cast<std::uint32_t>(feature_dim);
  helper.proj_dim = static_cast<std::uint32_t>(feature_dim - 1);
  helper.reliable_indices = enrolled.meta.indices;
  helper.points = binding.points;
  helper.key_locker = binding.key_locker;
  ieco::write_helper_file(a.helper_path, helper);

  emit_key(binding.key, a.key_out);
  std::cerr << "helper written: " << a.helper_path << " ("
            << ieco::serialize_helper(helper).size() << " bytes)\n";
  return kExitOk;
}

// --- reproduce ------------------------------------------------------------

struct ReproduceArgs {
  std::string templates_path;
  std::string helper_path;
  std::string key_out;
};

int run_reproduce(const ReproduceArgs& a) {
  const ieco::HelperData helper = ieco::read_helper_file(a.helper_path);
  const auto templates = read_templates(a.templates_path);
  if (templates.front().size() != helper.input_dim) {
    throw InputError("templates have " +
                     std::to_string(templates.front().size()) +
                     " columns but the helper expects " +
                     std::to_string(helper.input_dim));
  }

  ieco::PipelineMeta meta;
  meta.rp_seed = helper.rp_seed;
  meta.input_dim = helper.input_dim;
  meta.proj_dim = helper.proj_dim;
  meta.phi = helper.phi;
  meta.indices = helper.reliable_indices;

  const ieco::SymbolString query = ieco::reproduce_string(templates, meta);
  const ieco::BchCode code = ieco::BchCode::construct(helper.n, helper.k);
  const std::optional<ieco::BitString> key =
      ieco::ieco_reproduce(query, helper, code);
  if (!key) {
    std::cerr << "authentication rejected\n";
    return kExitReject;
  }
  emit_key(*key, a.key_out);
  return kExitOk;
}

// --- simulate ---------------------------------------------------------------

struct SimulateArgs {
  ieco::SimulationConfig config;
  std::string out_base;
};

json row_to_json(const ieco::SimulationRow& row) {
  return json{{"n", row.n},
              {"k", row.k},
              {"t", row.t},
              {"frr_percent", row.rates.frr_percent},
              {"far_percent", row.rates.far_percent},
              {"genuine_failures", row.rates.genuine_failures},
              {"genuine_total", row.rates.genuine_total},
              {"impostor_accepts", row.rates.impostor_accepts},
              {"impostor_total", row.rates.impostor_total}};
}

int run_simulate(const SimulateArgs& a) {
  for (unsigned k : a.config.k_values) {
    (void)ieco::BchCode::construct(a.config.n, k);  // validate before the run
  }
  const ieco::SimulationReport report = ieco::run_far_frr_simulation(a.config);

  json summary;
  summary["config"] = {{"feature_dim", a.config.feature_dim},
                       {"num_users", a.config.num_users},
                       {"enroll_captures", a.config.enroll_captures},
                       {"query_sets_per_user", a.config.query_sets_per_user},
                       {"intra_sigma", a.config.intra_sigma},
                       {"phi", a.config.phi},
                       {"gamma", a.config.gamma},
                       {"n", a.config.n},
                       {"k_values", a.config.k_values},
                       {"seed", a.config.seed},
                       {"max_impostor_attempts", a.config.max_impostor_attempts}};
  summary["rows"] = json::array();
  for (const auto& row : report.rows) summary["rows"].push_back(row_to_json(row));
  summary["genuine"] = {{"attempts", report.genuine_attempts},
                        {"sigma_hat", report.intra_sigma_hat}};
  summary["impostor"] = {{"attempts", report.impostor_attempts},
                         {"mu_hat", report.inter_mu_hat},
                         {"sigma_hat", report.inter_sigma_hat}};

  std::ostringstream tsv;
  tsv << "n\tk\tt\tfrr_percent\tfar_percent\tgenuine_failures\tgenuine_total"
         "\timpostor_accepts\timpostor_total\n";
  for (const auto& row : report.rows) {
    tsv << row.n << '\t' << row.k << '\t' << row.t << '\t'
        << row.rates.frr_percent << '\t' << row.rates.far_percent << '\t'
        << row.rates.genuine_failures << '\t' << row.rates.genuine_total
        << '\t' << row.rates.impostor_accepts << '\t'
        << row.rates.impostor_total << '\n';
  }
  emit_report(summary, tsv.str(), a.out_base);
  return kExitOk;
}

// --- analyze ----------------------------------------------------------------

struct AnalyzeArgs {
  std::string mode;
  std::vector<double> zetas{0.01, 0.05, 0.1};
  std::vector<double> etas{0.5, 0.7, 0.9};
  std::vector<unsigned> phis{1, 2, 3, 4};
  unsigned n = 15;
  unsigned k = 5;
  unsigned gamma = 32;
  std::size_t trials = 20000;
  std::size_t users = 6;
  std::size_t seeds = 24;
  std::size_t sets = 8;
  std::size_t feature_dim = 256;
  double intra_sigma = 0.05;
  std::size_t bins = 0;
  std::uint64_t seed = 1;
  std::string out_base;
};

int analyze_formulas(const AnalyzeArgs& a) {
  const ieco::BchCode code = ieco::BchCode::construct(a.n, a.k);
  ieco::SplitMixRandom rng(a.seed);

  json summary;
  std::ostringstream tsv;
  summary["same_user_error"] = json::array();
  tsv << "# same-user per-position codeword error\n"
         "zeta\tphi\tfirst_order\texact\tsimulated\tsigma\tobservations\n";
  for (double zeta : a.zetas) {
    for (unsigned phi : a.phis) {
      const double first = ieco::p_intra_codeword_error(zeta, phi);
      const double exact = ieco::p_intra_codeword_error_exact(zeta, phi);
      const auto mc =
          ieco::mc_intra_codeword_error(code, phi, zeta, a.gamma, a.trials, rng);
      summary["same_user_error"].push_back({{"zeta", zeta},
                                            {"phi", phi},
                                            {"first_order", first},
                                            {"exact", exact},
                                            {"simulated", mc.rate},
                                            {"sigma", mc.sigma},
                                            {"observations", mc.observations}});
      tsv << zeta << '\t' << phi << '\t' << first << '\t' << exact << '\t'
          << mc.rate << '\t' << mc.sigma << '\t' << mc.observations << '\n';
    }
  }

  summary["cross_user_match"] = json::array();
  tsv << "\n# cross-user per-position codeword match\n"
         "eta\tphi\tpredicted\tsimulated\tsigma\tobservations\n";
  for (double eta : a.etas) {
    for (unsigned phi : a.phis) {
      const double predicted = ieco::p_inter_codeword_match(eta, phi);
      const auto mc =
          ieco::mc_inter_codeword_match(code, phi, eta, a.gamma, a.trials, rng);
      summary["cross_user_match"].push_back({{"eta", eta},
                                             {"phi", phi},
                                             {"predicted", predicted},
                                             {"simulated", mc.rate},
                                             {"sigma", mc.sigma},
                                             {"observations", mc.observations}});
      tsv << eta << '\t' << phi << '\t' << predicted << '\t' << mc.rate << '\t'
          << mc.sigma << '\t' << mc.observations << '\n';
    }
  }

  summary["match_rate_limit"] = json::array();
  tsv << "\n# cross-user match rate vs symbol width\n"
         "eta\tphi\tvalue\tgap_to_half\n";
  for (double eta : a.etas) {
    for (const auto& row : ieco::inter_match_limit_table(eta, 12)) {
      summary["match_rate_limit"].push_back({{"eta", eta},
                                             {"phi", row.phi},
                                             {"value", row.value},
                                             {"gap_to_half", row.gap_to_half}});
      tsv << eta << '\t' << row.phi << '\t' << row.value << '\t'
          << row.gap_to_half << '\n';
    }
  }
  emit_report(summary, tsv.str(), a.out_base);
  return kExitOk;
}

int analyze_unlinkability(const AnalyzeArgs& a) {
  ieco::SeedStudyConfig config;
  config.feature_dim = a.feature_dim;
  config.num_users = a.users;
  config.seeds_per_user = a.seeds;
  config.intra_sigma = a.intra_sigma;
  config.phi = a.phis.front();
  config.n = a.n;
  config.nonmated_samples = a.trials;
  config.seed = a.seed;
  const std::size_t needed = static_cast<std::size_t>(config.phi) * config.n;
  if (config.feature_dim - 1 < needed) {
    throw InputError("feature dimension too small for phi*n selected bits");
  }
  const ieco::SeedStudyReport report = ieco::run_seed_study(config);

  json summary;
  summary["d_sys"] = report.unlink.d_sys;
  summary["mated_pairs"] = report.mated_pairs;
  summary["nonmated_pairs"] = report.nonmated_pairs;
  summary["mated_mean_distance"] = report.mated_mean_distance;
  summary["per_user_mean_distance"] = report.per_user_mean_distance;

  std::ostringstream tsv;
  tsv << "score_bin_center\td_local\tmated_density\tnonmated_density\n";
  for (std::size_t b = 0; b < report.unlink.bin_centers.size(); ++b) {
    tsv << report.unlink.bin_centers[b] << '\t' << report.unlink.d_local[b]
        << '\t' << report.unlink.mated_density[b] << '\t'
        << report.unlink.nonmated_density[b] << '\n';
  }
  emit_report(summary, tsv.str(), a.out_base);
  return kExitOk;
}

int analyze_histograms(const AnalyzeArgs& a) {
  ieco::SimulationConfig config;
  config.feature_dim = a.feature_dim;
  config.num_users = a.users;
  config.query_sets_per_user = a.sets;
  config.intra_sigma = a.intra_sigma;
  config.phi = a.phis.front();
  config.gamma = a.gamma;
  config.n = a.n;
  config.k_values = {a.k};
  config.seed = a.seed;
  config.max_impostor_attempts = a.trials;
  (void)ieco::BchCode::construct(config.n, a.k);
  const ieco::SimulationReport report = ieco::run_far_frr_simulation(config);

  const std::size_t bins =
      a.bins != 0 ? a.bins
                  : static_cast<std::size_t>(std::lround(std::sqrt(
                        static_cast<double>(report.genuine_distances.size()))));
  const ieco::Histogram genuine =
      ieco::make_histogram(report.genuine_distances, bins);
  const ieco::Histogram impostor =
      ieco::make_histogram(report.impostor_distances, bins);

  json summary;
  summary["bins"] = bins;
  summary["genuine"] = {{"lo", genuine.lo},
                        {"hi", genuine.hi},
                        {"total", genuine.total},
                        {"counts", genuine.counts}};
  summary["impostor"] = {{"lo", impostor.lo},
                         {"hi", impostor.hi},
                         {"total", impostor.total},
                         {"counts", impostor.counts}};
  summary["genuine_sigma_hat"] = report.intra_sigma_hat;
  summary["impostor_mu_hat"] = report.inter_mu_hat;
  summary["impostor_sigma_hat"] = report.inter_sigma_hat;

  std::ostringstream tsv;
  tsv << "population\tbin_center\tcount\n";
  for (std::size_t b = 0; b < genuine.counts.size(); ++b) {
    tsv << "genuine\t" << genuine.center(b) << '\t' << genuine.counts[b]
        << '\n';
  }
  for (std::size_t b = 0; b < impostor.counts.size(); ++b) {
    tsv << "impostor\t" << impostor.center(b) << '\t' << impostor.counts[b]
        << '\n';
  }
  emit_report(summary, tsv.str(), a.out_base);
  return kExitOk;
}

int analyze_attack(const AnalyzeArgs& a) {
  const ieco::BchCode code = ieco::BchCode::construct(a.n, a.k);
  const unsigned phi = a.phis.front();
  ieco::SplitMixRandom rng(a.seed);

  ieco::SymbolString enrolled;
  enrolled.phi = phi;
  const std::uint64_t alphabet = 1ULL << phi;
  for (unsigned i = 0; i < a.n; ++i) {
    enrolled.symbols.push_back(static_cast<std::uint32_t>(rng.below(alphabet)));
  }

  const ieco::EcoEnrollment baseline =
      ieco::eco_generate(enrolled, code, a.gamma, rng);
  const ieco::EcoAttackResult eco = ieco::attack_eco_with_key(
      baseline.message, code, baseline.points, phi, enrolled);

  const ieco::IecoEnrollment hardened =
      ieco::ieco_generate(enrolled, code, a.gamma, rng);
  const bool exhaustive = code.k() <= 20;
  const ieco::IecoAttackResult ieco_res = ieco::attack_ieco_with_key(
      hardened.key, hardened.key_locker, a.gamma, code.k(),
      exhaustive ? 0 : a.trials, exhaustive, rng);

  json summary;
  summary["baseline_with_bound_secret"] = {
      {"one_positions", eco.one_positions},
      {"recovered", eco.recovered},
      {"matches_truth", eco.matches_truth},
      {"unlock_calls", eco.unlock_calls},
      {"recovered_fraction",
       static_cast<double>(eco.recovered) / static_cast<double>(a.n)}};
  summary["hardened_with_derived_key"] = {
      {"exhaustive", exhaustive},
      {"guesses", ieco_res.guesses},
      {"key_hits", ieco_res.key_hits}};
  if (ieco_res.success_at) {
    summary["hardened_with_derived_key"]["success_at"] = *ieco_res.success_at;
  }

  std::ostringstream tsv;
  tsv << "scheme\tmetric\tvalue\n"
      << "baseline\tone_positions\t" << eco.one_positions << '\n'
      << "baseline\trecovered\t" << eco.recovered << '\n'
      << "baseline\tmatches_truth\t" << eco.matches_truth << '\n'
      << "baseline\tunlock_calls\t" << eco.unlock_calls << '\n'
      << "hardened\tguesses\t" << ieco_res.guesses << '\n'
      << "hardened\tkey_hits\t" << ieco_res.key_hits << '\n';
  emit_report(summary, tsv.str(), a.out_base);
  return kExitOk;
}

int run_analyze(const AnalyzeArgs& a) {
  if (a.phis.empty()) throw InputError("at least one --phi is required");
  if (a.mode == "formulas") return analyze_formulas(a);
  if (a.mode == "unlinkability") return analyze_unlinkability(a);
  if (a.mode == "histograms") return analyze_histograms(a);
  if (a.mode == "attack") return analyze_attack(a);
  throw InputError("unknown analyze mode: " + a.mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"key binding over noisy feature templates"};
  app.require_subcommand(1);

  EnrollArgs enroll_args;
  std::uint64_t enroll_seed = 0;
  auto* enroll = app.add_subcommand("enroll", "bind a fresh key to templates");
  enroll->add_option("--templates", enroll_args.templates_path,
                     "CSV, one template per row")->required();
  enroll->add_option("--helper", enroll_args.helper_path,
                     "output helper file")->required();
  enroll->add_option("--key-out", enroll_args.key_out,
                     "write the key hex here instead of stdout");
  enroll->add_option("--n", enroll_args.n, "code length");
  enroll->add_option("--k", enroll_args.k, "code dimension");
  enroll->add_option("--phi", enroll_args.phi, "bits per symbol");
  enroll->add_option("--gamma", enroll_args.gamma, "locker check bits");
  auto* enroll_seed_opt =
      enroll->add_option("--seed", enroll_seed,
                         "deterministic randomness (default: system entropy)");

  ReproduceArgs reproduce_args;
  auto* reproduce =
      app.add_subcommand("reproduce", "recover the key from query templates");
  reproduce->add_option("--templates", reproduce_args.templates_path,
                        "CSV, one template per row")->required();
  reproduce->add_option("--helper", reproduce_args.helper_path,
                        "helper file from enroll")->required();
  reproduce->add_option("--key-out", reproduce_args.key_out,
                        "write the key hex here instead of stdout");

  SimulateArgs simulate_args;
  std::vector<unsigned> sim_k;
  auto* simulate =
      app.add_subcommand("simulate", "cohort FAR/FRR study across codes");
  simulate->add_option("--users", simulate_args.config.num_users, "cohort size");
  simulate->add_option("--sets", simulate_args.config.query_sets_per_user,
                       "query sets per user");
  simulate->add_option("--captures", simulate_args.config.enroll_captures,
                       "captures per set");
  simulate->add_option("--feature-dim", simulate_args.config.feature_dim,
                       "feature dimension");
  simulate->add_option("--intra-sigma", simulate_args.config.intra_sigma,
                       "same-user capture noise scale");
  simulate->add_option("--phi", simulate_args.config.phi, "bits per symbol");
  simulate->add_option("--gamma", simulate_args.config.gamma,
                       "locker check bits");
  simulate->add_option("--n", simulate_args.config.n, "code length");
  simulate->add_option("--k", sim_k, "code dimension (repeatable)");
  simulate->add_option("--max-impostors",
                       simulate_args.config.max_impostor_attempts,
                       "cap on cross-user attempts (0 = all pairs)");
  simulate->add_option("--seed", simulate_args.config.seed, "study seed");
  simulate->add_option("--out", simulate_args.out_base,
                       "write BASE.json and BASE.tsv instead of stdout");

  AnalyzeArgs analyze_args;
  std::vector<unsigned> analyze_phis;
  auto* analyze = app.add_subcommand("analyze", "channel and privacy reports");
  analyze->add_option("--mode", analyze_args.mode,
                      "formulas | unlinkability | histograms | attack")
      ->required();
  analyze->add_option("--zeta", analyze_args.zetas,
                      "same-user bit flip rates (repeatable)");
  analyze->add_option("--eta", analyze_args.etas,
                      "cross-user bit agreement rates (repeatable)");
  analyze->add_option("--phi", analyze_phis, "bits per symbol (repeatable)");
  analyze->add_option("--n", analyze_args.n, "code length");
  analyze->add_option("--k", analyze_args.k, "code dimension");
  analyze->add_option("--gamma", analyze_args.gamma, "locker check bits");
  analyze->add_option("--trials", analyze_args.trials,
                      "simulation observations / guess budget");
  analyze->add_option("--users", analyze_args.users, "cohort size");
  analyze->add_option("--seeds", analyze_args.seeds,
                      "re-enrollments per user (unlinkability)");
  analyze->add_option("--sets", analyze_args.sets,
                      "query sets per user (histograms)");
  analyze->add_option("--feature-dim", analyze_args.feature_dim,
                      "feature dimension");
  analyze->add_option("--intra-sigma", analyze_args.intra_sigma,
                      "same-user capture noise scale");
  analyze->add_option("--bins", analyze_args.bins,
                      "histogram bins (0 = sqrt rule)");
  analyze->add_option("--seed", analyze_args.seed, "study seed");
  analyze->add_option("--out", analyze_args.out_base,
                      "write BASE.json and BASE.tsv instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*enroll) {
      if (*enroll_seed_opt) enroll_args.seed = enroll_seed;
      return run_enroll(enroll_args);
    }
    if (*reproduce) return run_reproduce(reproduce_args);
    if (*simulate) {
      if (!sim_k.empty()) simulate_args.config.k_values = sim_k;
      return run_simulate(simulate_args);
    }
    if (*analyze) {
      if (!analyze_phis.empty()) analyze_args.phis = analyze_phis;
      return run_analyze(analyze_args);
    }
  } catch (const ieco::HelperFormatError& e) {
    std::cerr << "corrupt helper file: " << e.what() << "\n";
    return kExitCorruptHelper;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
