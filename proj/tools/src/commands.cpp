#include "polytor/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "polytor/combinatorics.hpp"
#include "polytor/error.hpp"
#include "polytor/harness/constants.hpp"
#include "polytor/harness/experiment.hpp"
#include "polytor/projections.hpp"
#include "polytor/random.hpp"

namespace polytor::cli {

std::optional<std::uint64_t> env_seed() {
  const char* raw = std::getenv("POLYTOR_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw std::invalid_argument("POLYTOR_SEED must be a nonnegative integer, got '" + std::string(text) + "'");
  }
  return value;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto experiment = harness::load_config(config.config_path);
    if (config.max_grid_points) experiment.budget.max_grid_points = *config.max_grid_points;
    if (config.mc_samples) experiment.budget.mc_samples = *config.mc_samples;
    harness::RunOptions options;
    options.seed_override = config.seed_override ? config.seed_override : env_seed();
    options.jobs = config.jobs;
    options.filter = config.filter;
    const auto result = harness::run_experiment(experiment, options);
    harness::write_outputs(result, config.output_dir);
    out << "reports " << result.reports.size() << ", fail " << result.failures << ", inconclusive "
        << result.inconclusive << "\n"
        << "digest " << result.digest << "\n"
        << "wrote " << (config.output_dir / "results.json").string() << "\n";
    return result.exit_code() == 0 ? kExitPass : kExitFail;
  } catch (const Error& e) {
    err << "polytor: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "polytor: " << e.what() << "\n";
    return kExitConfig;
  }
}

int cmd_constants(const ConstantsConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.q.has_value() == config.p.has_value()) {
      err << "polytor: pass exactly one of --q (cotype) and --p (type)\n";
      return kExitConfig;
    }
    if (config.q && !(*config.q >= 2.0)) {
      err << "polytor: cotype needs q >= 2\n";
      return kExitConfig;
    }
    if (config.p && !(*config.p >= 1.0 && *config.p <= 2.0)) {
      err << "polytor: type needs 1 <= p <= 2\n";
      return kExitConfig;
    }
    if (config.budget == 0 || config.n == 0) {
      err << "polytor: budget and n must be positive\n";
      return kExitConfig;
    }
    nlohmann::json space_json;
    try {
      space_json = nlohmann::json::parse(config.space_json);
    } catch (const nlohmann::json::parse_error& e) {
      err << "polytor: bad --space JSON: " << e.what() << "\n";
      return kExitConfig;
    }
    const auto space = NormedSpace::from_json(space_json);
    const std::uint64_t seed = config.seed ? *config.seed : env_seed().value_or(0);
    AutoNormOptions opts;
    opts.seed = derive_seed(seed, "norms");
    // The search evaluates hundreds of norms; a 2^16-point grid keeps each one cheap and still
    // reports its gap estimate.
    opts.max_grid_points = std::uint64_t{1} << 16;
    const auto estimate = config.q ? harness::estimate_cotype_constant(space, *config.q, config.n, config.budget, seed, opts)
                                   : harness::estimate_type_constant(space, *config.p, config.n, config.budget, seed, opts);
    out << estimate.to_json().dump(2) << "\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "polytor: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "polytor: " << e.what() << "\n";
    return kExitConfig;
  }
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::config, "cannot write '" + path.string() + "'");
  f << body;
}

std::string hilbert_table() {
  std::string csv = "m,max_abs_inverse,log_max_abs_inverse,envelope,base\n";
  for (int m = 0; m <= 14; ++m) {
    const double max_abs = hilbert_inverse(m).max_abs().get_d();
    char row[160];
    std::snprintf(row, sizeof row, "%d,%.17g,%.17g,%.17g,%.17g\n", m, max_abs, std::log(max_abs), lemma3_envelope(m),
                  lemma3_base(m));
    csv += row;
  }
  return csv;
}

std::string stirling_table() {
  std::string csv = "n,m,k,ratio\n";
  for (int m = 1; m <= 40; ++m) {
    for (int k = 1; k * m <= 40; ++k) {
      char row[96];
      std::snprintf(row, sizeof row, "%d,%d,%d,%.17g\n", k * m, m, k, stirling_ratio(k * m, m, k));
      csv += row;
    }
  }
  return csv;
}

std::string kahane_table() {
  std::string csv = "space,m,s,r,max_ratio,bound\n";
  const std::vector<std::pair<std::string, NormedSpace>> spaces{
      {"l1^2", NormedSpace::ellp(1.0, 2)},
      {"l2^2", NormedSpace::euclidean(2)},
      {"linf^2", NormedSpace::ellp(Exponent::infinity(), 2)}};
  harness::Budget budget;
  budget.max_grid_points = std::uint64_t{1} << 18;
  for (const auto& [label, space] : spaces) {
    for (std::uint32_t m = 1; m <= 3; ++m) {
      harness::CheckSpec spec;
      spec.name = "kahane";
      spec.kind = "kahane";
      spec.space = space;
      spec.instances = 16;
      spec.seed = derive_seed(m, label);
      spec.params = {{"m_max", m}, {"n_max", 3}};
      const auto result = harness::run_check(spec, budget);
      for (const auto& [s, r] : {std::pair{1.0, 2.0}, std::pair{2.0, 4.0}}) {
        double best = 0.0;
        for (const auto& rep : result.reports) {
          if (rep.params.value("s", 0.0) == s && rep.params.value("r", 0.0) == r &&
              rep.exponent_m == static_cast<int>(m) && rep.rhs.value > 0.0) {
            best = std::max(best, rep.lhs.value / rep.rhs.value);
          }
        }
        char row[160];
        std::snprintf(row, sizeof row, "%s,%u,%g,%g,%.17g,%.17g\n", label.c_str(), m, s, r, best,
                      std::pow(r / s, m / 2.0));
        csv += row;
      }
    }
  }
  return csv;
}

}  // namespace

int cmd_tables(const std::filesystem::path& output_dir, std::ostream& out, std::ostream& err) {
  try {
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw Error(ErrorKind::config, "cannot create '" + output_dir.string() + "': " + ec.message());
    write_file(output_dir / "hilbert_growth.csv", hilbert_table());
    write_file(output_dir / "stirling_ratios.csv", stirling_table());
    write_file(output_dir / "kahane_ratios.csv", kahane_table());
    out << "wrote 3 tables to " << output_dir.string() << "\n";
    return kExitPass;
  } catch (const Error& e) {
    err << "polytor: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace polytor::cli
