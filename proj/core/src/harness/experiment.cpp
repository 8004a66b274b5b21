#include "polytor/harness/experiment.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "polytor/digest.hpp"
#include "polytor/error.hpp"
#include "polytor/random.hpp"

namespace polytor::harness {

namespace {

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::uint64_t read_seed(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw Error(ErrorKind::config, where + ": seed must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

ConfiguredCheck parse_check(const nlohmann::json& j, std::size_t index) {
  const std::string where = "checks[" + std::to_string(index) + "]";
  if (!j.is_object()) throw Error(ErrorKind::config, where + " must be an object");
  if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty()) {
    throw Error(ErrorKind::config, where + " needs a nonempty string 'name'");
  }
  ConfiguredCheck c;
  c.spec.name = j["name"].get<std::string>();
  if (j.contains("check")) {
    if (!j["check"].is_string()) throw Error(ErrorKind::config, where + ": 'check' must be a string");
    c.spec.kind = j["check"].get<std::string>();
  } else {
    c.spec.kind = c.spec.name.substr(0, c.spec.name.find('/'));
  }
  if (!is_check_kind(c.spec.kind)) {
    throw Error(ErrorKind::config, where + ": unknown check kind '" + c.spec.kind + "'");
  }
  if (j.contains("space")) c.spec.space = NormedSpace::from_json(j["space"]);
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw Error(ErrorKind::config, where + ": 'params' must be an object");
    c.spec.params = j["params"];
  }
  if (j.contains("instances")) {
    if (!j["instances"].is_number_unsigned()) {
      throw Error(ErrorKind::config, where + ": 'instances' must be a nonnegative integer");
    }
    c.spec.instances = j["instances"].get<std::size_t>();
  }
  if (j.contains("seed")) {
    c.spec.seed = read_seed(j["seed"], where);
    c.has_seed = true;
  }
  return c;
}

void csv_field(std::ostringstream& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  auto checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e = {{"name", c.spec.name},
                        {"check", c.spec.kind},
                        {"space", c.spec.space.to_json()},
                        {"params", c.spec.params},
                        {"instances", c.spec.instances}};
    if (c.has_seed) e["seed"] = c.spec.seed;
    checks_json.push_back(std::move(e));
  }
  return {{"seed", seed}, {"budget", budget.to_json()}, {"checks", std::move(checks_json)}};
}

ExperimentConfig parse_config(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::config, "config parse error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::config, "config must be a JSON object");
  ExperimentConfig config;
  if (j.contains("seed")) config.seed = read_seed(j["seed"], "config");
  if (j.contains("budget")) config.budget = Budget::from_json(j["budget"]);
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) throw Error(ErrorKind::config, "'checks' must be an array");
    for (std::size_t i = 0; i < j["checks"].size(); ++i) config.checks.push_back(parse_check(j["checks"][i], i));
  }
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::config, "cannot open config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::json ExperimentResult::results_json(std::string_view timestamp) const {
  return {{"digest", digest}, {"timestamp", std::string(timestamp)}, {"payload", payload}};
}

std::string ExperimentResult::summary_csv() const {
  std::ostringstream out;
  out << "name,lhs,rhs,constant,margin,pass\n";
  for (const auto& r : reports) {
    out << r.name << ',';
    csv_field(out, r.lhs.value);
    out << ',';
    csv_field(out, r.rhs.value);
    out << ',';
    csv_field(out, r.constant);
    out << ',';
    csv_field(out, r.margin);
    out << ',' << to_string(r.verdict) << '\n';
  }
  return out.str();
}

std::uint64_t resolve_seed(const ConfiguredCheck& check, std::uint64_t config_seed,
                           std::optional<std::uint64_t> seed_override) {
  if (seed_override) return derive_seed(*seed_override, check.spec.name);
  if (check.has_seed) return check.spec.seed;
  return derive_seed(config_seed, check.spec.name);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  ExperimentResult result;
  auto checks_json = nlohmann::json::array();
  for (const auto& c : config.checks) {
    if (!options.filter.empty() && !glob_match(options.filter, c.spec.name)) continue;
    CheckSpec spec = c.spec;
    spec.seed = resolve_seed(c, config.seed, options.seed_override);
    const auto start = std::chrono::steady_clock::now();
    auto out = run_check(spec, config.budget, options.jobs);
    result.timings.emplace_back(spec.name,
                                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    auto reports = nlohmann::json::array();
    for (const auto& r : out.reports) {
      reports.push_back(r.to_json());
      if (r.verdict == Verdict::fail) ++result.failures;
      if (r.verdict == Verdict::inconclusive) ++result.inconclusive;
    }
    auto constants = nlohmann::json::array();
    for (const auto& e : out.constants) constants.push_back(e.to_json());
    checks_json.push_back({{"name", spec.name},
                           {"check", spec.kind},
                           {"seed", spec.seed},
                           {"space", spec.space.to_json()},
                           {"params", spec.params},
                           {"instances", spec.instances},
                           {"reports", std::move(reports)},
                           {"constants", std::move(constants)}});
    for (auto& r : out.reports) result.reports.push_back(std::move(r));
    for (auto& e : out.constants) result.constants.push_back(std::move(e));
  }
  nlohmann::json run = {{"filter", options.filter}};
  if (options.seed_override) run["seed_override"] = *options.seed_override;
  result.payload = {{"config", config.to_json()},
                    {"run", std::move(run)},
                    {"checks", std::move(checks_json)},
                    {"totals",
                     {{"reports", result.reports.size()},
                      {"fail", result.failures},
                      {"inconclusive", result.inconclusive},
                      {"pass", result.reports.size() - result.failures - result.inconclusive}}}};
  result.digest = sha256_hex(result.payload.dump());
  return result;
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::config, "cannot create output directory '" + dir.string() + "': " + ec.message());
  auto write = [&dir](const char* file, const std::string& body) {
    std::ofstream out(dir / file, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::config, "cannot write '" + (dir / file).string() + "'");
    out << body;
    if (!out) throw Error(ErrorKind::config, "write failed for '" + (dir / file).string() + "'");
  };
  write("results.json", result.results_json(utc_timestamp()).dump(2) + "\n");
  write("summary.csv", result.summary_csv());
}

bool glob_match(std::string_view pattern, std::string_view text) noexcept {
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t star = std::string_view::npos;
  std::size_t mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace polytor::harness
