#include "turret/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace turret {

using nlohmann::json;

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char ch : key) {
    if (ch == '~') {
      k += "~0";
    } else if (ch == '/') {
      k += "~1";
    } else {
      k += ch;
    }
  }
  return ptr + "/" + k;
}

std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

void expect_object(const json& j, const std::string& ptr, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw ConfigError(ptr, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) throw ConfigError(child(ptr, k), "unknown key");
  }
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& require(const json& j, const std::string& ptr, const char* key) {
  const json* v = find(j, key);
  if (!v) throw ConfigError(child(ptr, key), "missing required key");
  return *v;
}

double as_number(const json& v, const std::string& ptr) {
  if (!v.is_number()) throw ConfigError(ptr, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(ptr, "expected a finite number");
  return x;
}

double number(const json& j, const std::string& ptr, const char* key, double fallback) {
  const json* v = find(j, key);
  return v ? as_number(*v, child(ptr, key)) : fallback;
}

double positive(const json& j, const std::string& ptr, const char* key, double fallback) {
  const double x = number(j, ptr, key, fallback);
  if (!(x > 0.0)) throw ConfigError(child(ptr, key), "must be positive");
  return x;
}

bool boolean(const json& j, const std::string& ptr, const char* key, bool fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ConfigError(child(ptr, key), "expected true or false");
  return v->get<bool>();
}

std::string text(const json& j, const std::string& ptr, const char* key, const std::string& fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_string()) throw ConfigError(child(ptr, key), "expected a string");
  return v->get<std::string>();
}

std::uint64_t unsigned_int(const json& v, const std::string& ptr) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
    throw ConfigError(ptr, "expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

int count(const json& v, const std::string& ptr) {
  const auto n = unsigned_int(v, ptr);
  if (n < 2 || n > 100000) throw ConfigError(ptr, "step count must be between 2 and 100000");
  return static_cast<int>(n);
}

PolicySpec parse_policy(const json& j, const std::string& ptr, bool turret_side, std::uint64_t default_seed) {
  expect_object(j, ptr, {"name", "attacker", "direction", "seed", "interval", "speed"});
  PolicySpec p;
  const json& name = require(j, ptr, "name");
  if (!name.is_string()) throw ConfigError(child(ptr, "name"), "expected a string");
  p.name = name.get<std::string>();
  const auto& known = turret_side ? turret_policy_names() : attacker_policy_names();
  if (std::find(known.begin(), known.end(), p.name) == known.end()) {
    throw ConfigError(child(ptr, "name"), "unknown policy '" + p.name + "'");
  }
  if (const json* a = find(j, "attacker")) {
    const auto k = unsigned_int(*a, child(ptr, "attacker"));
    if (k != 1 && k != 2) throw ConfigError(child(ptr, "attacker"), "attacker must be 1 or 2");
    p.attacker = static_cast<int>(k) - 1;
  }
  const std::string dir = text(j, ptr, "direction", "CW");
  if (dir != "CW" && dir != "CCW") throw ConfigError(child(ptr, "direction"), "direction must be CW or CCW");
  p.direction = dir == "CW" ? Rotation::CW : Rotation::CCW;
  p.seed = default_seed;
  if (const json* s = find(j, "seed")) p.seed = unsigned_int(*s, child(ptr, "seed"));
  p.interval = positive(j, ptr, "interval", p.interval);
  p.speed = text(j, ptr, "speed", "true");
  if (p.speed != "slow" && p.speed != "fast" && p.speed != "true") {
    throw ConfigError(child(ptr, "speed"), "speed must be slow, fast or true");
  }
  return p;
}

json policy_json(const PolicySpec& p) {
  return {{"name", p.name},         {"attacker", p.attacker + 1}, {"direction", to_string(p.direction)},
          {"seed", p.seed},         {"interval", p.interval},     {"speed", p.speed}};
}

}  // namespace

RunConfig parse_config(const json& doc, const ParseOptions& opt) {
  const double unit = opt.degrees ? std::numbers::pi / 180.0 : 1.0;
  expect_object(doc, "", {"speeds", "state", "sim", "policies", "sweep", "output"});
  RunConfig c;

  const json& sp = require(doc, "", "speeds");
  expect_object(sp, "/speeds", {"nu_slow", "nu_fast", "true_nu"});
  c.speeds.nu_slow = as_number(require(sp, "/speeds", "nu_slow"), "/speeds/nu_slow");
  c.speeds.nu_fast = as_number(require(sp, "/speeds", "nu_fast"), "/speeds/nu_fast");
  try {
    c.speeds.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("/speeds", e.what());
  }
  const std::string tn = text(sp, "/speeds", "true_nu", "slow");
  if (tn != "slow" && tn != "fast") throw ConfigError("/speeds/true_nu", "true_nu must be slow or fast");
  c.true_speed = tn == "slow" ? Speed::Slow : Speed::Fast;

  const json& st = require(doc, "", "state");
  expect_object(st, "/state", {"theta_T", "attackers"});
  c.state.theta_T = as_number(require(st, "/state", "theta_T"), "/state/theta_T") * unit;
  const json& atk = require(st, "/state", "attackers");
  if (!atk.is_array() || atk.size() != kNumAttackers) {
    throw ConfigError("/state/attackers", "expected an array of two attackers");
  }
  for (std::size_t i = 0; i < atk.size(); ++i) {
    const auto ptr = child("/state/attackers", i);
    expect_object(atk[i], ptr, {"r", "theta"});
    c.state.attackers[i].r = as_number(require(atk[i], ptr, "r"), child(ptr, "r"));
    c.state.attackers[i].theta = as_number(require(atk[i], ptr, "theta"), child(ptr, "theta")) * unit;
  }

  if (const json* sim = find(doc, "sim")) {
    expect_object(*sim, "/sim",
                  {"dt", "t_max", "seed", "tolerances", "track_regions", "stop_when_regions_vanish", "scenario"});
    c.sim.dt = positive(*sim, "/sim", "dt", c.sim.dt);
    c.sim.t_max = positive(*sim, "/sim", "t_max", c.sim.t_max);
    if (const json* s = find(*sim, "seed")) c.sim.seed = unsigned_int(*s, "/sim/seed");
    if (const json* tol = find(*sim, "tolerances")) {
      expect_object(*tol, "/sim/tolerances", {"capture", "breach"});
      c.sim.tol.capture = positive(*tol, "/sim/tolerances", "capture", c.sim.tol.capture);
      c.sim.tol.breach = positive(*tol, "/sim/tolerances", "breach", c.sim.tol.breach);
    }
    c.sim.track_regions = boolean(*sim, "/sim", "track_regions", c.sim.track_regions);
    c.sim.stop_when_regions_vanish = boolean(*sim, "/sim", "stop_when_regions_vanish", c.sim.stop_when_regions_vanish);
    c.sim.scenario = text(*sim, "/sim", "scenario", c.sim.scenario);
    if (c.sim.scenario != "single" && c.sim.scenario != "open_loop") {
      throw ConfigError("/sim/scenario", "scenario must be single or open_loop");
    }
  }
  if (opt.seed) c.sim.seed = *opt.seed;

  if (const json* pol = find(doc, "policies")) {
    expect_object(*pol, "/policies", {"turret", "attackers"});
    if (const json* t = find(*pol, "turret")) {
      c.turret.clear();
      if (t->is_array()) {
        if (t->empty()) throw ConfigError("/policies/turret", "expected at least one policy");
        for (std::size_t i = 0; i < t->size(); ++i) {
          c.turret.push_back(parse_policy((*t)[i], child("/policies/turret", i), true, c.sim.seed));
        }
      } else {
        c.turret.push_back(parse_policy(*t, "/policies/turret", true, c.sim.seed));
      }
    }
    if (const json* a = find(*pol, "attackers")) c.attackers = parse_policy(*a, "/policies/attackers", false, c.sim.seed);
  }

  c.sweep.a1 = c.state.attackers[0];
  c.sweep.theta_T = c.state.theta_T;
  c.sweep.speeds = c.speeds;
  c.sweep.theta_min = c.state.theta_T - kPi;
  c.sweep.theta_max = c.state.theta_T;
  if (const json* sw = find(doc, "sweep")) {
    expect_object(*sw, "/sweep", {"ranges", "steps", "reading", "threads"});
    if (const json* rg = find(*sw, "ranges")) {
      expect_object(*rg, "/sweep/ranges", {"r", "theta"});
      const auto pair = [](const json& v, const std::string& ptr) {
        if (!v.is_array() || v.size() != 2) throw ConfigError(ptr, "expected [lo, hi]");
        const double lo = as_number(v[0], child(ptr, 0));
        const double hi = as_number(v[1], child(ptr, 1));
        if (!(hi > lo)) throw ConfigError(ptr, "range must satisfy lo < hi");
        return std::pair{lo, hi};
      };
      if (const json* r = find(*rg, "r")) {
        std::tie(c.sweep.r_min, c.sweep.r_max) = pair(*r, "/sweep/ranges/r");
        if (c.sweep.r_min < 1.0) throw ConfigError("/sweep/ranges/r/0", "radius range must start at 1 or above");
      }
      if (const json* th = find(*rg, "theta")) {
        auto [lo, hi] = pair(*th, "/sweep/ranges/theta");
        c.sweep.theta_min = lo * unit;
        c.sweep.theta_max = hi * unit;
      }
    }
    if (const json* steps = find(*sw, "steps")) {
      expect_object(*steps, "/sweep/steps", {"r", "theta"});
      if (const json* n = find(*steps, "r")) c.sweep.n_r = count(*n, "/sweep/steps/r");
      if (const json* n = find(*steps, "theta")) c.sweep.n_theta = count(*n, "/sweep/steps/theta");
    }
    const std::string reading = text(*sw, "/sweep", "reading", "derived");
    if (reading != "derived" && reading != "as_printed") {
      throw ConfigError("/sweep/reading", "reading must be derived or as_printed");
    }
    c.sweep.reading = reading == "derived" ? BoundaryReading::Derived : BoundaryReading::AsPrinted;
    if (const json* th = find(*sw, "threads")) c.sweep.threads = static_cast<unsigned>(unsigned_int(*th, "/sweep/threads"));
  }

  if (const json* out = find(doc, "output")) {
    expect_object(*out, "/output", {"dir", "prefix"});
    c.output_dir = text(*out, "/output", "dir", c.output_dir);
    c.output_prefix = text(*out, "/output", "prefix", c.output_prefix);
    if (c.output_prefix.empty()) throw ConfigError("/output/prefix", "prefix must not be empty");
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path, const ParseOptions& opt) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc, opt);
}

json to_json(const RunConfig& c) {
  json turret = json::array();
  for (const auto& t : c.turret) turret.push_back(policy_json(t));
  json attackers = json::array();
  for (const auto& a : c.state.attackers) attackers.push_back({{"r", a.r}, {"theta", a.theta}});
  return {
      {"speeds",
       {{"nu_slow", c.speeds.nu_slow},
        {"nu_fast", c.speeds.nu_fast},
        {"true_nu", c.true_speed == Speed::Slow ? "slow" : "fast"}}},
      {"state", {{"theta_T", c.state.theta_T}, {"attackers", attackers}}},
      {"sim",
       {{"dt", c.sim.dt},
        {"t_max", c.sim.t_max},
        {"seed", c.sim.seed},
        {"tolerances", {{"capture", c.sim.tol.capture}, {"breach", c.sim.tol.breach}}},
        {"track_regions", c.sim.track_regions},
        {"stop_when_regions_vanish", c.sim.stop_when_regions_vanish},
        {"scenario", c.sim.scenario}}},
      {"policies", {{"turret", turret}, {"attackers", policy_json(c.attackers)}}},
      {"sweep",
       {{"ranges", {{"r", {c.sweep.r_min, c.sweep.r_max}}, {"theta", {c.sweep.theta_min, c.sweep.theta_max}}}},
        {"steps", {{"r", c.sweep.n_r}, {"theta", c.sweep.n_theta}}},
        {"reading", to_string(c.sweep.reading)},
        {"threads", c.sweep.threads}}},
      {"output", {{"dir", c.output_dir}, {"prefix", c.output_prefix}}},
  };
}

std::string config_hash(const RunConfig& c) {
  auto doc = to_json(c);
  // Where the files go does not change what is in them.
  doc.erase("output");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : doc.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SimConfig make_sim_config(const RunConfig& c, const PolicySpec& turret) {
  SimConfig s;
  s.initial = c.state;
  s.speeds = c.speeds;
  s.true_speed = c.true_speed;
  s.turret = make_turret_policy(turret);
  s.attackers = make_attacker_policy(c.attackers);
  s.dt = c.sim.dt;
  s.t_max = c.sim.t_max;
  s.tol = c.sim.tol;
  s.track_regions = c.sim.track_regions;
  s.stop_when_regions_vanish = c.sim.stop_when_regions_vanish;
  return s;
}

json output_header(const RunConfig& c) {
  return {{"artifact", "turret-dilemma"}, {"version", kVersion}, {"config_hash", config_hash(c)}};
}

std::string csv_header(const RunConfig& c) {
  return std::string("# turret-dilemma ") + kVersion + " config_hash=" + config_hash(c) + "\n";
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& t, const RunConfig& c) {
  std::ostringstream out;
  out << csv_header(c);
  out << "t,theta_T,r_A1,theta_A1,r_A2,theta_A2,omega_T,v_A1,phi_A1,v_A2,phi_A2,d1,d2,theta_B1,theta_B2\n";
  const double nan = std::nan("");
  for (const auto& s : t.samples) {
    const auto& st = s.state;
    const auto& d = s.dist;
    const double row[] = {s.t,
                          st.theta_T,
                          st.attackers[0].r,
                          st.attackers[0].theta,
                          st.attackers[1].r,
                          st.attackers[1].theta,
                          s.controls.omega_T,
                          s.controls.attackers[0].speed,
                          s.controls.attackers[0].heading,
                          s.controls.attackers[1].speed,
                          s.controls.attackers[1].heading,
                          d ? d->d1 : nan,
                          d ? d->d2 : nan,
                          d && d->d1 != kNoBoundary ? d->theta_B1 : nan,
                          d && d->d2 != kNoBoundary ? d->theta_B2 : nan};
    for (std::size_t k = 0; k < std::size(row); ++k) out << (k ? "," : "") << format_number(row[k]);
    out << '\n';
  }
  return out.str();
}

json events_json(const Trajectory& t, const RunConfig& c) {
  json ev = json::array();
  for (const auto& e : t.events) {
    json item = {{"kind", to_string(e.kind)}, {"t", e.t}};
    item["attacker"] = e.attacker >= 0 ? json(e.attacker + 1) : json(nullptr);
    if (!e.detail.empty()) item["detail"] = e.detail;
    ev.push_back(item);
  }
  json tf = json::array();
  for (const auto& x : t.t_final) tf.push_back(x ? json(*x) : json(nullptr));
  return {{"header", output_header(c)}, {"J", t.J},         {"captures", t.captures()},
          {"t_F", t.t_F},               {"t_final", tf},    {"horizon_reached", t.horizon_reached},
          {"events", ev}};
}

std::string sweep_csv(const SweepGrid& g, const RunConfig& c) {
  std::ostringstream out;
  out << csv_header(c) << "r,theta,label,witness_order\n";
  for (const auto& cell : g.cells) {
    out << format_number(cell.r) << ',' << format_number(cell.theta) << ',' << to_string(cell.label) << ','
        << (cell.order ? to_string(*cell.order) : std::string()) << '\n';
  }
  return out.str();
}

json curves_json(const std::vector<NamedCurve>& curves, const RunConfig& c) {
  json arr = json::array();
  for (const auto& cv : curves) {
    json pts = json::array();
    for (const auto& p : cv.points) pts.push_back({p[0], p[1]});
    arr.push_back({{"name", cv.name}, {"points", pts}});
  }
  return {{"header", output_header(c)}, {"curves", arr}};
}

json arcset_json(const ArcSet& s) {
  json arr = json::array();
  for (const auto& a : s.arcs()) arr.push_back({a.lower(), a.upper()});
  return arr;
}

json classification_json(const Classification& cls, const RunConfig& c) {
  const auto& m = cls.m;
  json memberships = {
      {"theta_T in U2(fast)", m.in_u2_fast},
      {"theta_T in U1(slow)", m.in_u1_slow},
      {"theta_T in U1(fast)", m.in_u1_fast},
      {"theta_T in U2(slow)", m.in_u2_slow},
      {"theta_T in R(A1->A2, slow)", m.in_two_slow[0]},
      {"theta_T in R(A2->A1, slow)", m.in_two_slow[1]},
      {"theta_T in R(A1, fast)", m.in_one_fast[0]},
      {"theta_T in R(A2, fast)", m.in_one_fast[1]},
      {"I1(fast) empty", m.i1_fast_empty},
      {"I2(slow) empty", m.i2_slow_empty},
      {"theta_T in R1v1", m.in_r1v1},
      {"theta_T in R2v1", m.in_r2v1},
  };
  json witnesses = {
      {"slow_order", cls.slow_order ? json(to_string(*cls.slow_order)) : json(nullptr)},
      {"fast_attacker", cls.fast_attacker ? json("A" + std::to_string(*cls.fast_attacker + 1)) : json(nullptr)},
  };
  return {{"header", output_header(c)},
          {"label", to_string(cls.label)},
          {"memberships", memberships},
          {"witnesses", witnesses}};
}

json regions_json(const RegionBundle& b, const GameState& s, const RunConfig& c) {
  const auto d = dilemma_distances(s.theta_T, b);
  const auto dist = [](double x) { return x == kNoBoundary ? json(nullptr) : json(x); };
  return {{"header", output_header(c)},
          {"theta_T", s.theta_T},
          {"regions",
           {{"R(A1, slow)", arcset_json(b.one_slow[0])},
            {"R(A2, slow)", arcset_json(b.one_slow[1])},
            {"R(A1, fast)", arcset_json(b.one_fast[0])},
            {"R(A2, fast)", arcset_json(b.one_fast[1])},
            {"R(A1->A2, slow)", arcset_json(b.two_slow[0])},
            {"R(A2->A1, slow)", arcset_json(b.two_slow[1])},
            {"R(A1->A2, fast)", arcset_json(b.two_fast[0])},
            {"R(A2->A1, fast)", arcset_json(b.two_fast[1])},
            {"I1(fast)", arcset_json(b.i1_fast)},
            {"U1(fast)", arcset_json(b.u1_fast)},
            {"U1(slow)", arcset_json(b.u1_slow)},
            {"I2(slow)", arcset_json(b.i2_slow)},
            {"U2(slow)", arcset_json(b.u2_slow)},
            {"U2(fast)", arcset_json(b.u2_fast)},
            {"R1v1", arcset_json(b.r1v1)},
            {"R2v1", arcset_json(b.r2v1)}}},
          {"distances",
           {{"d1", dist(d.d1)},
            {"d2", dist(d.d2)},
            {"theta_B1", d.d1 == kNoBoundary ? json(nullptr) : json(d.theta_B1)},
            {"theta_B2", d.d2 == kNoBoundary ? json(nullptr) : json(d.theta_B2)},
            {"side1", to_string(d.side1)},
            {"side2", to_string(d.side2)}}}};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace turret
