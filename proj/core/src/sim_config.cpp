#include "nematic2d/sim_config.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "nematic2d/errors.hpp"
#include "nematic2d/snapshot_io.hpp"

namespace nematic2d {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;

double parse_double(const Entry& e, const std::string& key) {
  try {
    size_t used = 0;
    double v = std::stod(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(e.line, "value of '" + key + "' is not a number: '" + e.value + "'");
  }
}

long parse_long(const Entry& e, const std::string& key) {
  try {
    size_t used = 0;
    long v = std::stol(e.value, &used);
    if (used != e.value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(e.line, "value of '" + key + "' is not an integer: '" + e.value + "'");
  }
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw ConfigError(e.line, "value of '" + key + "' must be true or false: '" + e.value + "'");
}

std::vector<double> parse_double_list(const Entry& e, const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(e.value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(e.line, "empty element in list '" + key + "'");
    out.push_back(parse_double({item, e.line}, key));
  }
  return out;
}

// Semicolon-separated groups of comma-separated numbers.
std::vector<std::vector<double>> parse_groups(const Entry& e, const std::string& key,
                                              size_t arity) {
  std::vector<std::vector<double>> out;
  std::stringstream ss(e.value);
  std::string group;
  while (std::getline(ss, group, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    auto nums = parse_double_list({group, e.line}, key);
    if (nums.size() != arity)
      throw ConfigError(e.line, "each group in '" + key + "' needs " + std::to_string(arity) +
                                    " comma-separated numbers");
    out.push_back(std::move(nums));
  }
  return out;
}

class SectionReader {
 public:
  SectionReader(const Section* s, std::string name) : s_(s), name_(std::move(name)) {}

  bool has(const std::string& key) const { return s_ && s_->count(key) > 0; }
  const Entry& get(const std::string& key) {
    used_.insert(key);
    return s_->at(key);
  }
  double number(const std::string& key, double fallback) {
    return has(key) ? parse_double(get(key), key) : fallback;
  }
  long integer(const std::string& key, long fallback) {
    return has(key) ? parse_long(get(key), key) : fallback;
  }
  bool boolean(const std::string& key, bool fallback) {
    return has(key) ? parse_bool(get(key), key) : fallback;
  }
  std::string text(const std::string& key, const std::string& fallback) {
    return has(key) ? get(key).value : fallback;
  }

  void reject_unknown() const {
    if (!s_) return;
    for (const auto& [key, entry] : *s_) {
      if (!used_.count(key))
        throw ConfigError(entry.line, "unknown key '" + key + "' in section [" + name_ + "]");
    }
  }

 private:
  const Section* s_;
  std::string name_;
  std::set<std::string> used_;
};

void require(bool ok, const std::string& field, const std::string& why) {
  if (!ok) throw ConfigError(0, "invalid value for " + field + ": " + why);
}

}  // namespace

bool operator==(const SimConfig& a, const SimConfig& b) {
  auto as_tuple = [](const SimConfig& c) {
    return std::tie(c.n, c.length, c.parodi_tol, c.cond_tol, c.dt, c.steps, c.snapshot_every,
                    c.ledger_every, c.mode, c.epsilon, c.dealias, c.cfl_guard, c.initial,
                    c.amplitude, c.geodesic_k, c.bubble_lambda, c.bubble_degree, c.center_x,
                    c.center_y, c.initial_path, c.scan_radii, c.scan_threshold, c.scan_flag_tol,
                    c.scan_every, c.phi_probes, c.local_windows, c.output_dir);
  };
  bool head = as_tuple(a) == as_tuple(b);
  bool mus = std::equal(std::begin(a.mu), std::end(a.mu), std::begin(b.mu));
  bool rnd = a.random.seed == b.random.seed && a.random.spectrum_slope == b.random.spectrum_slope &&
             a.random.cutoff == b.random.cutoff && a.random.u_amplitude == b.random.u_amplitude &&
             a.random.d_amplitude == b.random.d_amplitude;
  return head && mus && rnd;
}

SimConfig parse_config(const std::string& text) {
  std::map<std::string, Section> sections;
  static const std::set<std::string> known_sections = {
      "grid", "coefficients", "time", "mode", "initial", "diagnostics", "output"};

  std::istringstream in(text);
  std::string raw;
  std::string current;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(current))
        throw ConfigError(lineno, "unknown section [" + current + "]");
      sections[current];  // a section may be empty
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected 'key = value'");
    if (current.empty()) throw ConfigError(lineno, "key outside of any [section]");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(lineno, "empty key");
    auto [it, inserted] = sections[current].emplace(key, Entry{value, lineno});
    if (!inserted)
      throw ConfigError(lineno, "duplicate key '" + key + "' (first defined on line " +
                                    std::to_string(it->second.line) + ")");
  }

  auto section = [&](const std::string& name) -> const Section* {
    auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  };

  SimConfig c;

  SectionReader grid(section("grid"), "grid");
  c.n = static_cast<int>(grid.integer("n", c.n));
  c.length = grid.number("length", c.length);
  grid.reject_unknown();

  SectionReader coeff(section("coefficients"), "coefficients");
  const char* mu_keys[6] = {"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"};
  for (int i = 0; i < 6; ++i) c.mu[i] = coeff.number(mu_keys[i], c.mu[i]);
  c.parodi_tol = coeff.number("parodi_tol", c.parodi_tol);
  c.cond_tol = coeff.number("cond_tol", c.cond_tol);
  coeff.reject_unknown();

  SectionReader time(section("time"), "time");
  c.dt = time.number("dt", c.dt);
  c.steps = time.integer("steps", c.steps);
  c.snapshot_every = static_cast<int>(time.integer("snapshot_every", c.snapshot_every));
  c.ledger_every = static_cast<int>(time.integer("ledger_every", c.ledger_every));
  time.reject_unknown();

  SectionReader mode(section("mode"), "mode");
  if (mode.has("mode")) {
    const Entry& e = mode.get("mode");
    if (e.value == "projection")
      c.mode = DirectorMode::projection;
    else if (e.value == "ginzburg_landau")
      c.mode = DirectorMode::ginzburg_landau;
    else
      throw ConfigError(e.line, "mode must be 'projection' or 'ginzburg_landau'");
  }
  c.epsilon = mode.number("epsilon", c.epsilon);
  c.dealias = mode.boolean("dealias", c.dealias);
  c.cfl_guard = mode.number("cfl_guard", c.cfl_guard);
  mode.reject_unknown();

  SectionReader init(section("initial"), "initial");
  if (init.has("preset")) {
    const Entry& e = init.get("preset");
    if (e.value == "taylor_green")
      c.initial = InitialKind::taylor_green;
    else if (e.value == "geodesic")
      c.initial = InitialKind::geodesic;
    else if (e.value == "bubble")
      c.initial = InitialKind::bubble;
    else if (e.value == "random_seeded")
      c.initial = InitialKind::random_seeded;
    else if (e.value == "file")
      c.initial = InitialKind::file;
    else
      throw ConfigError(e.line, "unknown initial preset '" + e.value + "'");
  }
  c.amplitude = init.number("amplitude", c.amplitude);
  c.geodesic_k = static_cast<int>(init.integer("k", c.geodesic_k));
  c.bubble_lambda = init.number("lambda", c.bubble_lambda);
  c.bubble_degree = static_cast<int>(init.integer("m", c.bubble_degree));
  if (init.has("center")) {
    const Entry& e = init.get("center");
    auto xy = parse_double_list(e, "center");
    if (xy.size() != 2) throw ConfigError(e.line, "center must be 'x,y'");
    c.center_x = xy[0];
    c.center_y = xy[1];
  }
  c.random.seed = static_cast<uint64_t>(init.integer("seed", static_cast<long>(c.random.seed)));
  c.random.spectrum_slope = init.number("spectrum_slope", c.random.spectrum_slope);
  c.random.cutoff = static_cast<int>(init.integer("cutoff", c.random.cutoff));
  c.random.u_amplitude = init.number("u_amplitude", c.random.u_amplitude);
  c.random.d_amplitude = init.number("d_amplitude", c.random.d_amplitude);
  c.initial_path = init.text("path", c.initial_path);
  init.reject_unknown();

  SectionReader diag(section("diagnostics"), "diagnostics");
  if (diag.has("scan_radii")) c.scan_radii = parse_double_list(diag.get("scan_radii"), "scan_radii");
  c.scan_threshold = diag.number("scan_threshold", c.scan_threshold);
  c.scan_flag_tol = diag.number("scan_flag_tol", c.scan_flag_tol);
  c.scan_every = static_cast<int>(diag.integer("scan_every", c.scan_every));
  if (diag.has("phi_probes")) {
    for (const auto& g : parse_groups(diag.get("phi_probes"), "phi_probes", 4))
      c.phi_probes.push_back({g[0], g[1], g[2], g[3]});
  }
  if (diag.has("local_windows")) {
    for (const auto& g : parse_groups(diag.get("local_windows"), "local_windows", 4))
      c.local_windows.push_back({g[0], g[1], g[2], g[3]});
  }
  diag.reject_unknown();

  SectionReader output(section("output"), "output");
  c.output_dir = output.text("dir", c.output_dir);
  output.reject_unknown();

  // Semantic validation, by field.
  require(c.n >= 8 && c.n % 2 == 0, "grid.n", "must be even and >= 8");
  require(std::isfinite(c.length) && c.length > 0, "grid.length", "must be positive");
  for (int i = 0; i < 6; ++i)
    require(std::isfinite(c.mu[i]), std::string("coefficients.") + mu_keys[i], "must be finite");
  require(c.parodi_tol >= 0, "coefficients.parodi_tol", "must be nonnegative");
  require(c.cond_tol >= 0, "coefficients.cond_tol", "must be nonnegative");
  require(std::isfinite(c.dt) && c.dt > 0, "time.dt", "must be positive");
  require(c.steps >= 0, "time.steps", "must be nonnegative");
  require(c.snapshot_every >= 0, "time.snapshot_every", "must be nonnegative");
  require(c.ledger_every >= 0, "time.ledger_every", "must be nonnegative");
  require(std::isfinite(c.epsilon) && c.epsilon > 0, "mode.epsilon", "must be positive");
  require(std::isfinite(c.cfl_guard) && c.cfl_guard > 0, "mode.cfl_guard", "must be positive");
  require(c.amplitude >= 0 && std::isfinite(c.amplitude), "initial.amplitude", "must be nonnegative");
  require(c.geodesic_k >= 1, "initial.k", "must be a positive integer");
  require(c.bubble_lambda > 0, "initial.lambda", "must be positive");
  require(c.bubble_degree >= 1, "initial.m", "must be a positive integer");
  require(c.random.cutoff >= 1, "initial.cutoff", "must be a positive integer");
  require(c.random.u_amplitude >= 0, "initial.u_amplitude", "must be nonnegative");
  require(c.random.d_amplitude >= 0, "initial.d_amplitude", "must be nonnegative");
  if (c.initial == InitialKind::file)
    require(!c.initial_path.empty(), "initial.path", "required for the file preset");
  for (double r : c.scan_radii) require(r > 0, "diagnostics.scan_radii", "radii must be positive");
  require(c.scan_threshold > 0, "diagnostics.scan_threshold", "must be positive");
  require(c.scan_flag_tol >= 0 && c.scan_flag_tol < 1, "diagnostics.scan_flag_tol",
          "must lie in [0, 1)");
  require(c.scan_every >= 0, "diagnostics.scan_every", "must be nonnegative");
  for (const auto& p : c.phi_probes) require(p.r > 0, "diagnostics.phi_probes", "radius must be positive");
  for (const auto& w : c.local_windows)
    require(w.outer_r > w.inner_r && w.inner_r > 0, "diagnostics.local_windows",
            "needs 0 < inner < outer");
  require(!c.output_dir.empty(), "output.dir", "must not be empty");

  return c;
}

namespace {
std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}
}  // namespace

std::string serialize_config(const SimConfig& c) {
  std::ostringstream os;
  os << "[grid]\n";
  os << "n = " << c.n << "\n";
  os << "length = " << num(c.length) << "\n\n";

  os << "[coefficients]\n";
  const char* mu_keys[6] = {"mu1", "mu2", "mu3", "mu4", "mu5", "mu6"};
  for (int i = 0; i < 6; ++i) os << mu_keys[i] << " = " << num(c.mu[i]) << "\n";
  os << "parodi_tol = " << num(c.parodi_tol) << "\n";
  os << "cond_tol = " << num(c.cond_tol) << "\n\n";

  os << "[time]\n";
  os << "dt = " << num(c.dt) << "\n";
  os << "steps = " << c.steps << "\n";
  os << "snapshot_every = " << c.snapshot_every << "\n";
  os << "ledger_every = " << c.ledger_every << "\n\n";

  os << "[mode]\n";
  os << "mode = " << (c.mode == DirectorMode::projection ? "projection" : "ginzburg_landau") << "\n";
  os << "epsilon = " << num(c.epsilon) << "\n";
  os << "dealias = " << (c.dealias ? "true" : "false") << "\n";
  os << "cfl_guard = " << num(c.cfl_guard) << "\n\n";

  os << "[initial]\n";
  const char* preset = nullptr;
  switch (c.initial) {
    case InitialKind::taylor_green: preset = "taylor_green"; break;
    case InitialKind::geodesic: preset = "geodesic"; break;
    case InitialKind::bubble: preset = "bubble"; break;
    case InitialKind::random_seeded: preset = "random_seeded"; break;
    case InitialKind::file: preset = "file"; break;
  }
  os << "preset = " << preset << "\n";
  os << "amplitude = " << num(c.amplitude) << "\n";
  os << "k = " << c.geodesic_k << "\n";
  os << "lambda = " << num(c.bubble_lambda) << "\n";
  os << "m = " << c.bubble_degree << "\n";
  os << "center = " << num(c.center_x) << "," << num(c.center_y) << "\n";
  os << "seed = " << c.random.seed << "\n";
  os << "spectrum_slope = " << num(c.random.spectrum_slope) << "\n";
  os << "cutoff = " << c.random.cutoff << "\n";
  os << "u_amplitude = " << num(c.random.u_amplitude) << "\n";
  os << "d_amplitude = " << num(c.random.d_amplitude) << "\n";
  if (!c.initial_path.empty()) os << "path = " << c.initial_path << "\n";
  os << "\n";

  os << "[diagnostics]\n";
  if (!c.scan_radii.empty()) {
    os << "scan_radii = ";
    for (size_t i = 0; i < c.scan_radii.size(); ++i)
      os << (i ? "," : "") << num(c.scan_radii[i]);
    os << "\n";
  }
  os << "scan_threshold = " << num(c.scan_threshold) << "\n";
  os << "scan_flag_tol = " << num(c.scan_flag_tol) << "\n";
  os << "scan_every = " << c.scan_every << "\n";
  if (!c.phi_probes.empty()) {
    os << "phi_probes = ";
    for (size_t i = 0; i < c.phi_probes.size(); ++i) {
      const auto& p = c.phi_probes[i];
      os << (i ? ";" : "") << num(p.cx) << "," << num(p.cy) << "," << num(p.t0) << "," << num(p.r);
    }
    os << "\n";
  }
  if (!c.local_windows.empty()) {
    os << "local_windows = ";
    for (size_t i = 0; i < c.local_windows.size(); ++i) {
      const auto& w = c.local_windows[i];
      os << (i ? ";" : "") << num(w.cx) << "," << num(w.cy) << "," << num(w.inner_r) << ","
         << num(w.outer_r);
    }
    os << "\n";
  }
  os << "\n[output]\n";
  os << "dir = " << c.output_dir << "\n";
  return os.str();
}

FlowState build_initial_state(const SimConfig& c) {
  TorusGrid grid(c.n, c.length);
  switch (c.initial) {
    case InitialKind::taylor_green:
      return taylor_green_state(grid, c.amplitude);
    case InitialKind::geodesic:
      return geodesic_state(grid, c.geodesic_k);
    case InitialKind::bubble:
      return bubble_state(grid, c.center_x, c.center_y, c.bubble_lambda, c.bubble_degree);
    case InitialKind::random_seeded:
      return random_state(grid, c.random);
    case InitialKind::file: {
      Snapshot snap = read_snapshot(c.initial_path);
      if (snap.state.u.n() != c.n)
        throw ConfigError(0, "snapshot grid size " + std::to_string(snap.state.u.n()) +
                                 " does not match configured n = " + std::to_string(c.n));
      return std::move(snap.state);
    }
  }
  throw std::logic_error("unreachable initial kind");
}

}  // namespace nematic2d
