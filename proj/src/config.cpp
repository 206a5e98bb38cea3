#include "hapsim/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "hapsim/errors.hpp"
#include "hapsim/units.hpp"

namespace hapsim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  int line;
  int col;  // first column of the value, 1-based
};

[[noreturn]] void fail(const std::string& origin, int line, int col,
                       const std::string& what) {
  std::ostringstream os;
  os << origin << ":" << line << ":" << col << ": " << what;
  throw config_error(os.str());
}

double parse_double(const Entry& e, const std::string& origin) {
  const std::string_view v = e.value;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(origin, e.line, e.col, "expected a number for '" + e.key + "'");
  }
  return out;
}

std::uint64_t parse_u64(const Entry& e, const std::string& origin) {
  const std::string_view v = e.value;
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(origin, e.line, e.col, "expected an unsigned integer for '" + e.key + "'");
  }
  return out;
}

int parse_int(const Entry& e, const std::string& origin) {
  const std::string_view v = e.value;
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(origin, e.line, e.col, "expected an integer for '" + e.key + "'");
  }
  return out;
}

std::size_t parse_size(const Entry& e, const std::string& origin) {
  return static_cast<std::size_t>(parse_u64(e, origin));
}

bool parse_bool(const Entry& e, const std::string& origin) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  fail(origin, e.line, e.col, "expected true/false for '" + e.key + "'");
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  while (!v.empty()) {
    const std::size_t pos = v.find(',');
    out.emplace_back(trim(v.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    v.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<double> parse_double_list(const Entry& e, const std::string& origin) {
  std::vector<double> out;
  for (const std::string& item : split_list(e.value)) {
    double d = 0.0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), d);
    if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
      fail(origin, e.line, e.col, "expected a number list for '" + e.key + "'");
    }
    out.push_back(d);
  }
  return out;
}

std::vector<Entry> tokenize(const std::string& text, const std::string& origin) {
  std::vector<Entry> entries;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(origin, line_no, 1, "unterminated section header");
      }
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section.empty()) fail(origin, line_no, 1, "empty section name");
      continue;
    }
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) {
      fail(origin, line_no, 1, "expected 'key = value'");
    }
    if (section.empty()) {
      fail(origin, line_no, 1, "key outside of any section");
    }
    Entry e;
    e.section = section;
    e.key = std::string(trim(std::string_view(raw).substr(0, eq)));
    e.value = std::string(trim(std::string_view(raw).substr(eq + 1)));
    e.line = line_no;
    std::size_t vstart = eq + 1;
    while (vstart < raw.size() && (raw[vstart] == ' ' || raw[vstart] == '\t')) ++vstart;
    e.col = static_cast<int>(vstart) + 1;
    if (e.key.empty()) fail(origin, line_no, 1, "empty key");
    entries.push_back(std::move(e));
  }
  return entries;
}

void apply_scenario(ScenarioSpec& s, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "d_ap1_km") s.d_ap1_km = parse_double(e, origin);
  else if (k == "d_ap2_km") s.d_ap2_km = parse_double(e, origin);
  else if (k == "d_z_km") s.d_z_km = parse_double(e, origin);
  else if (k == "d_a_km") s.d_a_km = parse_double(e, origin);
  else if (k == "g_t_dbi") s.g_t_dbi = parse_double(e, origin);
  else if (k == "g_r_dbi") s.g_r_dbi = parse_double(e, origin);
  else if (k == "f_ghz") s.f_ghz = parse_double(e, origin);
  else if (k == "eta") s.eta = parse_double(e, origin);
  else if (k == "tau") s.tau = parse_double(e, origin);
  else if (k == "t_s") s.t_s = parse_double(e, origin);
  else if (k == "p_t_dbm") s.p_t_dbm = parse_double(e, origin);
  else if (k == "p_t_min_dbm") s.p_t_min_dbm = parse_double(e, origin);
  else if (k == "bandwidth_mhz") s.bandwidth_mhz = parse_double(e, origin);
  else if (k == "temperature_k") s.temperature_k = parse_double(e, origin);
  else if (k == "noise_figure_db") s.noise_figure_db = parse_double(e, origin);
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [scenario]");
}

void apply_circuit(CircuitSpec& c, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "m_sat_mw") c.m_sat_mw = parse_double(e, origin);
  else if (k == "sigma_per_w") c.sigma_per_w = parse_double(e, origin);
  else if (k == "rho_mw") c.rho_mw = parse_double(e, origin);
  else if (k == "transmit_scaled") c.transmit_scaled = parse_bool(e, origin);
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [circuit]");
}

void apply_sweep(SweepSpec& s, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "variable") s.variable = e.value;
  else if (k == "start") s.start = parse_double(e, origin);
  else if (k == "stop") s.stop = parse_double(e, origin);
  else if (k == "step") s.step = parse_double(e, origin);
  else if (k == "models") s.models = split_list(e.value);
  else if (k == "fair_energy") s.fair_energy = parse_bool(e, origin);
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [sweep]");
}

void apply_method(MethodSpec& m, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "name") m.name = e.value;
  else if (k == "model") m.model = e.value;
  else if (k == "d_a_points") m.d_a_points = parse_size(e, origin);
  else if (k == "tau_points") m.tau_points = parse_size(e, origin);
  else if (k == "d_a_list_km") m.d_a_list_km = parse_double_list(e, origin);
  else if (k == "tau_list") m.tau_list = parse_double_list(e, origin);
  else if (k == "n_max") m.n_max = parse_int(e, origin);
  else if (k == "epsilon_bps") m.epsilon_bps = parse_double(e, origin);
  else if (k == "learning_rate") m.learning_rate = parse_double(e, origin);
  else if (k == "discount") m.discount = parse_double(e, origin);
  else if (k == "exploration_initial") m.exploration_initial = parse_double(e, origin);
  else if (k == "exploration_decay") m.exploration_decay = parse_double(e, origin);
  else if (k == "exploration_floor") m.exploration_floor = parse_double(e, origin);
  else if (k == "episodes") m.episodes = parse_int(e, origin);
  else if (k == "steps_per_episode") m.steps_per_episode = parse_int(e, origin);
  else if (k == "seed") m.seed = parse_u64(e, origin);
  else if (k == "random_draws") m.random_draws = parse_int(e, origin);
  else if (k == "baseline_d_a_km") m.baseline_d_a_km = parse_double_list(e, origin);
  else if (k == "jobs") m.jobs = static_cast<unsigned>(parse_u64(e, origin));
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [method]");
}

void apply_power(PowerSpec& p, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "p_req_dbm") p.p_req_dbm = parse_double(e, origin);
  else if (k == "flight_times_h") p.flight_times_h = parse_double_list(e, origin);
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [power]");
}

void apply_output(OutputSpec& o, const Entry& e, const std::string& origin) {
  const std::string& k = e.key;
  if (k == "path") o.path = e.value;
  else if (k == "format") o.format = e.value;
  else fail(origin, e.line, 1, "unknown key '" + k + "' in [output]");
}

void validate_config(const ExperimentConfig& c, const std::string& origin) {
  try {
    const ScenarioGeometry g = make_geometry(c.scenario);
    validate(g);
    validate(make_radio(c.scenario));
    validate(make_time_switch(c.scenario));
    validate(make_circuit(c.circuit));
  } catch (const std::invalid_argument& ex) {
    throw config_error(origin + ": " + ex.what());
  }
  if (c.sweep) {
    if (!(c.sweep->step > 0.0)) {
      throw config_error(origin + ": sweep step must be positive");
    }
    if (c.sweep->start > c.sweep->stop) {
      throw config_error(origin + ": sweep start must not exceed stop");
    }
    if (c.sweep->models.empty()) {
      throw config_error(origin + ": sweep models must not be empty");
    }
    for (const std::string& m : c.sweep->models) {
      if (m != "linear" && m != "nonlinear" && m != "no_eh") {
        throw config_error(origin + ": unknown model '" + m +
                           "' (expected linear, nonlinear or no_eh)");
      }
    }
  }
  const MethodSpec& m = c.method;
  if (m.name != "exhaustive" && m.name != "idfa" && m.name != "qlearn") {
    throw config_error(origin + ": unknown method '" + m.name +
                       "' (expected exhaustive, idfa or qlearn)");
  }
  if (m.model != "linear" && m.model != "nonlinear") {
    throw config_error(origin + ": method model must be linear or nonlinear");
  }
  if (m.d_a_points == 0 || m.tau_points == 0) {
    throw config_error(origin + ": grid point counts must be positive");
  }
  if (m.n_max < 1) throw config_error(origin + ": n_max must be at least 1");
  if (!(m.epsilon_bps > 0.0)) {
    throw config_error(origin + ": epsilon_bps must be positive");
  }
  if (m.episodes < 1 || m.steps_per_episode < 1) {
    throw config_error(origin + ": episodes and steps_per_episode must be at least 1");
  }
  if (m.learning_rate < 0.0 || m.learning_rate > 1.0) {
    throw config_error(origin + ": learning_rate must lie in [0, 1]");
  }
  if (m.discount < 0.0 || m.discount > 1.0) {
    throw config_error(origin + ": discount must lie in [0, 1]");
  }
  if (m.random_draws < 0) {
    throw config_error(origin + ": random_draws must be non-negative");
  }
  if (c.power) {
    for (double h : c.power->flight_times_h) {
      if (!(h >= 0.0)) {
        throw config_error(origin + ": flight times must be non-negative");
      }
    }
    if (c.power->flight_times_h.empty()) {
      throw config_error(origin + ": flight_times_h must not be empty");
    }
  }
  if (c.output.format != "csv" && c.output.format != "json") {
    throw config_error(origin + ": output format must be csv or json");
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += fmt(v[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i];
  }
  return out;
}

}  // namespace

ScenarioGeometry make_geometry(const ScenarioSpec& s) {
  return {s.d_ap1_km * 1000.0, s.d_ap2_km * 1000.0, s.d_z_km * 1000.0,
          s.d_a_km * 1000.0};
}

RadioParams make_radio(const ScenarioSpec& s) {
  RadioParams r;
  r.p_t_w = units::dbm_to_watts(s.p_t_dbm);
  r.p_t_min_w = s.p_t_min_dbm ? units::dbm_to_watts(*s.p_t_min_dbm) : 0.0;
  r.g_t = units::db_to_linear(s.g_t_dbi);
  r.g_r = units::db_to_linear(s.g_r_dbi);
  r.f_hz = s.f_ghz * 1e9;
  r.eta = s.eta;
  r.bandwidth_hz = s.bandwidth_mhz * 1e6;
  r.temperature_k = s.temperature_k;
  r.noise_figure = units::db_to_linear(s.noise_figure_db);
  return r;
}

TimeSwitch make_time_switch(const ScenarioSpec& s) { return {s.tau, s.t_s}; }

NonlinearEhCircuit make_circuit(const CircuitSpec& c) {
  return {c.m_sat_mw * 1e-3, c.sigma_per_w, c.rho_mw * 1e-3};
}

EhModel model_from_name(const std::string& name) {
  if (name == "linear") return EhModel::linear;
  if (name == "nonlinear") return EhModel::nonlinear;
  throw invalid_input("unknown model '" + name + "'");
}

ExperimentConfig default_config() { return ExperimentConfig{}; }

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg;
  for (const Entry& e : tokenize(text, origin)) {
    if (e.section == "scenario") {
      apply_scenario(cfg.scenario, e, origin);
    } else if (e.section == "circuit") {
      apply_circuit(cfg.circuit, e, origin);
    } else if (e.section == "sweep") {
      if (!cfg.sweep) cfg.sweep.emplace();
      apply_sweep(*cfg.sweep, e, origin);
    } else if (e.section == "method") {
      apply_method(cfg.method, e, origin);
    } else if (e.section == "power") {
      if (!cfg.power) cfg.power.emplace();
      apply_power(*cfg.power, e, origin);
    } else if (e.section == "output") {
      apply_output(cfg.output, e, origin);
    } else {
      fail(origin, e.line, 1, "unknown section [" + e.section + "]");
    }
  }
  validate_config(cfg, origin);
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw config_error("cannot open config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

std::string write_config(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "[scenario]\n";
  os << "d_ap1_km = " << fmt(c.scenario.d_ap1_km) << "\n";
  os << "d_ap2_km = " << fmt(c.scenario.d_ap2_km) << "\n";
  os << "d_z_km = " << fmt(c.scenario.d_z_km) << "\n";
  os << "d_a_km = " << fmt(c.scenario.d_a_km) << "\n";
  os << "g_t_dbi = " << fmt(c.scenario.g_t_dbi) << "\n";
  os << "g_r_dbi = " << fmt(c.scenario.g_r_dbi) << "\n";
  os << "f_ghz = " << fmt(c.scenario.f_ghz) << "\n";
  os << "eta = " << fmt(c.scenario.eta) << "\n";
  os << "tau = " << fmt(c.scenario.tau) << "\n";
  os << "t_s = " << fmt(c.scenario.t_s) << "\n";
  os << "p_t_dbm = " << fmt(c.scenario.p_t_dbm) << "\n";
  if (c.scenario.p_t_min_dbm) {
    os << "p_t_min_dbm = " << fmt(*c.scenario.p_t_min_dbm) << "\n";
  }
  os << "bandwidth_mhz = " << fmt(c.scenario.bandwidth_mhz) << "\n";
  os << "temperature_k = " << fmt(c.scenario.temperature_k) << "\n";
  os << "noise_figure_db = " << fmt(c.scenario.noise_figure_db) << "\n";
  os << "\n[circuit]\n";
  os << "m_sat_mw = " << fmt(c.circuit.m_sat_mw) << "\n";
  os << "sigma_per_w = " << fmt(c.circuit.sigma_per_w) << "\n";
  os << "rho_mw = " << fmt(c.circuit.rho_mw) << "\n";
  os << "transmit_scaled = " << (c.circuit.transmit_scaled ? "true" : "false") << "\n";
  if (c.sweep) {
    os << "\n[sweep]\n";
    os << "variable = " << c.sweep->variable << "\n";
    os << "start = " << fmt(c.sweep->start) << "\n";
    os << "stop = " << fmt(c.sweep->stop) << "\n";
    os << "step = " << fmt(c.sweep->step) << "\n";
    os << "models = " << join(c.sweep->models) << "\n";
    os << "fair_energy = " << (c.sweep->fair_energy ? "true" : "false") << "\n";
  }
  os << "\n[method]\n";
  os << "name = " << c.method.name << "\n";
  os << "model = " << c.method.model << "\n";
  os << "d_a_points = " << c.method.d_a_points << "\n";
  os << "tau_points = " << c.method.tau_points << "\n";
  if (!c.method.d_a_list_km.empty()) {
    os << "d_a_list_km = " << fmt_list(c.method.d_a_list_km) << "\n";
  }
  if (!c.method.tau_list.empty()) {
    os << "tau_list = " << fmt_list(c.method.tau_list) << "\n";
  }
  os << "n_max = " << c.method.n_max << "\n";
  os << "epsilon_bps = " << fmt(c.method.epsilon_bps) << "\n";
  os << "learning_rate = " << fmt(c.method.learning_rate) << "\n";
  os << "discount = " << fmt(c.method.discount) << "\n";
  os << "exploration_initial = " << fmt(c.method.exploration_initial) << "\n";
  os << "exploration_decay = " << fmt(c.method.exploration_decay) << "\n";
  os << "exploration_floor = " << fmt(c.method.exploration_floor) << "\n";
  os << "episodes = " << c.method.episodes << "\n";
  os << "steps_per_episode = " << c.method.steps_per_episode << "\n";
  os << "seed = " << c.method.seed << "\n";
  os << "random_draws = " << c.method.random_draws << "\n";
  if (!c.method.baseline_d_a_km.empty()) {
    os << "baseline_d_a_km = " << fmt_list(c.method.baseline_d_a_km) << "\n";
  }
  os << "jobs = " << c.method.jobs << "\n";
  if (c.power) {
    os << "\n[power]\n";
    os << "p_req_dbm = " << fmt(c.power->p_req_dbm) << "\n";
    os << "flight_times_h = " << fmt_list(c.power->flight_times_h) << "\n";
  }
  os << "\n[output]\n";
  if (!c.output.path.empty()) os << "path = " << c.output.path << "\n";
  os << "format = " << c.output.format << "\n";
  return os.str();
}

}  // namespace hapsim
