#include "gmdual/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "gmdual/complex.hpp"
#include "gmdual/error.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/pieces.hpp"
#include "gmdual/resolution.hpp"

namespace gmdual {

using ojson = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"hilbert", {"window"}},
      {"resolve", {"length"}},
      {"ext", {"target", "i", "window"}},
      {"localcoh", {"i", "window", "tmax", "oracle"}},
      {"matlis", {"i", "window", "tmax"}},
      {"socle", {"i", "window", "tmax"}},
      {"depth", {"max"}},
      {"canonical", {"window"}},
      {"serre", {"window", "tmax"}},
      {"dse", {"window"}},
      {"dmat", {"window", "tmax"}},
      {"verifyA", {"range", "window", "tmax"}},
      {"verifyB", {"window", "tmax"}},
      {"puncture", {"range", "tmax"}},
      {"verifySerrePuncture", {"range", "tmax"}},
      {"proper", {}},
  };
  return keys;
}

int int_arg(const Command& c, const std::string& key, int fallback) {
  auto v = c.arg(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    int x = std::stoi(*v, &used);
    if (used != v->size()) throw std::invalid_argument(key);
    return x;
  } catch (const std::logic_error&) {
    throw UsageError("argument " + key + " expects an integer, got '" + *v + "'");
  }
}

Window window_arg(const Command& c, const std::string& key, Window fallback) {
  auto v = c.arg(key);
  if (!v) return fallback;
  try {
    return parse_window(*v);
  } catch (const ComputationError& e) {
    throw UsageError("argument " + key + ": " + e.what());
  }
}

struct Target {
  PresentedModule module;
  bool is_ring = false;
};

Target resolve_target(const Environment& env, const std::string& name) {
  if (auto it = env.rings.find(name); it != env.rings.end()) return {PresentedModule::free(it->second, {0}), true};
  if (auto it = env.modules.find(name); it != env.modules.end()) return {it->second, false};
  throw UsageError("unknown name '" + name + "'");
}

RingPtr ring_target(const Environment& env, const Command& c) {
  auto it = env.rings.find(*c.target);
  if (it == env.rings.end()) throw UsageError(c.verb + " expects a ring, '" + *c.target + "' is a module");
  return it->second;
}

ojson int_list(const std::vector<int>& v) {
  ojson a = ojson::array();
  for (int x : v) a.push_back(x);
  return a;
}

void add_report(Block& b, VerificationReport r) {
  b.verdicts.push_back({r.identity + " (" + r.mode + ")", r.pass});
  b.reports.push_back(std::move(r));
}

void run_localcoh(Block& b, const Command& c, const PresentedModule& m, Window w, int t_max) {
  const int n = static_cast<int>(m.ring()->nvars());
  std::vector<int> indices;
  if (c.arg("i")) {
    indices.push_back(int_arg(c, "i", 0));
  } else {
    for (int i = 0; i <= n; ++i) indices.push_back(i);
  }
  const std::string oracle = c.arg("oracle").value_or("none");
  if (oracle != "none" && oracle != "cech") throw UsageError("oracle must be 'none' or 'cech'");
  for (int i : indices) {
    ArtinianApprox h = local_cohomology(m, i, w, t_max);
    const std::string name = "H^" + std::to_string(i);
    b.tables.push_back({name, h.table()});
    b.stages.emplace_back(name, h.certificate);
    if (oracle == "cech") {
      HilbertTable cech = cech_local_cohomology(m, i, w, t_max);
      b.tables.push_back({name + " cech", cech});
      b.verdicts.push_back({name + " ext-colimit = cech", cech == h.table()});
    }
  }
}

void dispatch(Block& b, const Command& c, const Environment& env, const ReportOptions& opts) {
  if (!c.target) throw UsageError(c.verb + " needs a target name");
  const auto& keys = allowed_keys().at(c.verb);
  for (const auto& [k, v] : c.args)
    if (!keys.count(k)) throw UsageError("unknown argument '" + k + "' for " + c.verb);
  const Window w = window_arg(c, "window", opts.window);
  const int t_max = int_arg(c, "tmax", opts.t_max);
  const Target tgt = resolve_target(env, *c.target);
  const PresentedModule& m = tgt.module;
  const RingPtr& ring = m.ring();
  const int n = static_cast<int>(ring->nvars());

  if (c.verb == "hilbert") {
    b.tables.push_back({"dims", m.hilbert(w)});
    b.values["series"] = hilbert_series(m).str();
  } else if (c.verb == "resolve") {
    Resolution r = free_resolution(m, int_arg(c, "length", n + 2));
    ojson steps = ojson::array();
    for (int i = 0; i <= r.length(); ++i) steps.push_back(int_list(r.twists[static_cast<std::size_t>(i)]));
    b.values["twists"] = steps;
    ojson betti = ojson::array();
    for (int i = 0; i <= r.length(); ++i) betti.push_back(r.rank(i));
    b.values["betti"] = betti;
    b.values["complete"] = r.complete;
  } else if (c.verb == "ext") {
    auto other = c.arg("target");
    if (!other) throw UsageError("ext needs target=NAME");
    const Target t2 = resolve_target(env, *other);
    int lo = 0, hi = n;
    if (auto v = c.arg("i")) {
      if (v->find("..") != std::string::npos) {
        Window r = window_arg(c, "i", Window(0, n));
        lo = r.lo;
        hi = r.hi;
      } else {
        lo = hi = int_arg(c, "i", 0);
      }
    }
    for (const auto& e : ext(m, t2.module, lo, hi, w)) b.tables.push_back({"Ext^" + std::to_string(e.i), e.table});
  } else if (c.verb == "localcoh") {
    run_localcoh(b, c, m, w, t_max);
  } else if (c.verb == "matlis") {
    const int i = int_arg(c, "i", ring->krull_dimension());
    ArtinianApprox h = local_cohomology(m, i, w.reflected(), t_max);
    b.stages.emplace_back("H^" + std::to_string(i), h.certificate);
    b.tables.push_back({"H^" + std::to_string(i), h.table()});
    b.tables.push_back({"dual of H^" + std::to_string(i), matlis_dual(h, w).table()});
  } else if (c.verb == "socle") {
    if (c.arg("i")) {
      const int i = int_arg(c, "i", 0);
      ArtinianApprox h = local_cohomology(m, i, w, t_max);
      b.stages.emplace_back("H^" + std::to_string(i), h.certificate);
      b.tables.push_back({"socle of H^" + std::to_string(i), socle(h)});
    } else {
      b.tables.push_back({"socle", socle(GradedPieces(m), w)});
    }
  } else if (c.verb == "depth") {
    DepthResult d = depth(m, int_arg(c, "max", n));
    b.values["depth"] = d.depth ? ojson(*d.depth) : ojson(nullptr);
    b.values["searched_up_to"] = d.max_i;
  } else if (c.verb == "canonical") {
    DualizingData dd = canonical_module(ring_target(env, c));
    b.values["krull_dim"] = dd.krull_dim;
    b.values["weight_sum"] = dd.weight_sum;
    b.values["cohen_macaulay"] = dd.cohen_macaulay;
    b.values["a_invariant"] = dd.a_invariant ? ojson(*dd.a_invariant) : ojson(nullptr);
    if (dd.cohen_macaulay) {
      b.values["omega"] = dd.omega.describe();
      b.values["placement"] = dd.placement;
      b.tables.push_back({"omega", dd.omega.hilbert(w)});
    }
    for (const auto& [j, e] : dd.ambient_ext) b.tables.push_back({"ambient Ext^" + std::to_string(j), e.hilbert(w)});
  } else if (c.verb == "serre") {
    SerreObject s = serre_object(ring_target(env, c), w, t_max);
    b.tables.push_back({"S", s.approx.table()});
    b.stages.emplace_back("S", s.approx.certificate);
    HilbertTable soc = socle(s.approx);
    b.tables.push_back({"socle of S", soc});
    b.values["convention"] = ojson::parse(s.convention);
    b.verdicts.push_back({"socle of S is one-dimensional", soc.total() == 1});
  } else if (c.verb == "dse") {
    DerivedObject d = serre_dual(m, w);
    for (const auto& [spot, data] : d.spots) b.tables.push_back({"spot " + std::to_string(spot), data.table});
    b.tables.push_back({"euler", d.euler()});
  } else if (c.verb == "dmat") {
    for (const auto& [i, x] : matlis_functor(m, w, t_max)) {
      if (!x.table().is_zero()) b.tables.push_back({"spot " + std::to_string(i), x.table()});
    }
  } else if (c.verb == "verifyA") {
    add_report(b, verify_theorem_A(ring_target(env, c), window_arg(c, "range", Window(-8, 8)), w, t_max));
  } else if (c.verb == "verifyB") {
    add_report(b, verify_theorem_B(m, w, t_max));
    add_report(b, involution_check(m, w, t_max));
  } else if (c.verb == "puncture") {
    const Window range = window_arg(c, "range", Window(-8, 8));
    auto h = tgt.is_ring ? punctured_cohomology(ring, range, t_max) : punctured_cohomology(m, range, t_max);
    for (std::size_t i = 0; i < h.size(); ++i) b.tables.push_back({"H^" + std::to_string(i), h[i]});
  } else if (c.verb == "verifySerrePuncture") {
    add_report(b, verify_serre_puncture(ring_target(env, c), window_arg(c, "range", Window(-8, 8)), t_max));
  } else if (c.verb == "proper") {
    add_report(b, properness_check(ring_target(env, c)));
  } else {
    throw UsageError("unknown verb '" + c.verb + "'");
  }
}

}  // namespace

bool Block::passed() const {
  return !error && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

Block run_command(const Command& cmd, const Environment& env, const ReportOptions& opts) {
  Block b;
  b.command = print_node(cmd);
  b.loc = cmd.loc;
  b.verb = cmd.verb;
  const auto start = std::chrono::steady_clock::now();
  try {
    dispatch(b, cmd, env, opts);
  } catch (const UsageError& e) {
    b.error = e.what();
    b.exit_class = 2;
  } catch (const ComputationError& e) {
    b.error = e.what();
    switch (e.kind()) {
      case ErrorKind::InvalidInput: b.exit_class = 2; break;
      case ErrorKind::NotStabilized:
      case ErrorKind::WindowInsufficient: b.exit_class = 3; break;
      default: b.exit_class = 1; break;
    }
  }
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!b.error && !b.passed()) b.exit_class = 1;
  return b;
}

Report run_session(const SessionAST& ast, const Environment& env, const ReportOptions& opts, std::string source) {
  Report r{std::move(source), opts, {}};
  std::vector<const Command*> cmds;
  for (const auto& node : ast.nodes)
    if (const auto* c = std::get_if<Command>(&node)) cmds.push_back(c);
  r.blocks.resize(cmds.size());
  const long n = static_cast<long>(cmds.size());
#pragma omp parallel for schedule(dynamic, 1) if (opts.concurrent)
  for (long i = 0; i < n; ++i) r.blocks[static_cast<std::size_t>(i)] = run_command(*cmds[static_cast<std::size_t>(i)], env, opts);
  return r;
}

ojson table_json(const HilbertTable& t) {
  ojson j;
  j["window"] = {t.window.lo, t.window.hi};
  ojson dims = ojson::object();
  for (int d = t.window.lo; d <= t.window.hi; ++d)
    if (t.at(d) != 0) dims[std::to_string(d)] = t.at(d);
  j["dims"] = dims;
  return j;
}

ojson report_json(const VerificationReport& r) {
  ojson j;
  j["identity"] = r.identity;
  j["mode"] = r.mode;
  j["pass"] = r.pass;
  j["window"] = {r.window.lo, r.window.hi};
  j["t_max"] = r.t_max;
  ojson comps = ojson::array();
  for (const auto& c : r.comparisons) {
    ojson e;
    e["label"] = c.label;
    e["equal"] = c.equal();
    e["lhs"] = table_json(c.lhs);
    e["rhs"] = table_json(c.rhs);
    comps.push_back(e);
  }
  j["comparisons"] = comps;
  j["notes"] = r.notes;
  return j;
}

ojson block_json(const Block& b, bool timing) {
  ojson j;
  j["command"] = b.command;
  j["line"] = b.loc.line;
  j["verb"] = b.verb;
  j["status"] = b.error ? "error" : (b.passed() ? "ok" : "fail");
  if (b.error) j["error"] = *b.error;
  ojson tables = ojson::array();
  for (const auto& t : b.tables) {
    ojson e;
    e["name"] = t.name;
    e.update(table_json(t.table));
    tables.push_back(e);
  }
  j["tables"] = tables;
  j["values"] = b.values;
  ojson verdicts = ojson::array();
  for (const auto& v : b.verdicts) verdicts.push_back({{"label", v.label}, {"pass", v.pass}});
  j["verdicts"] = verdicts;
  ojson reports = ojson::array();
  for (const auto& r : b.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  ojson stages = ojson::array();
  for (const auto& [name, cert] : b.stages) {
    ojson s;
    s["name"] = name;
    s["route"] = cert.route;
    s["t_max"] = cert.t_max;
    ojson per = ojson::object();
    for (const auto& [d, t] : cert.stage) per[std::to_string(d)] = t;
    s["stage"] = per;
    stages.push_back(s);
  }
  j["stages"] = stages;
  if (timing) j["seconds"] = b.seconds;
  return j;
}

int exit_code(const Report& r) {
  int code = 0;
  auto rank = [](int c) { return c == 2 ? 3 : c == 3 ? 2 : c; };
  for (const auto& b : r.blocks)
    if (rank(b.exit_class) > rank(code)) code = b.exit_class;
  return code;
}

std::string emit_json(const Report& r) {
  ojson j;
  j["format"] = "gmdual-report";
  j["version"] = 1;
  j["source"] = r.source;
  j["defaults"] = {{"window", {r.options.window.lo, r.options.window.hi}}, {"tmax", r.options.t_max}};
  ojson blocks = ojson::array();
  for (const auto& b : r.blocks) blocks.push_back(block_json(b, r.options.timing));
  j["blocks"] = blocks;
  j["pass"] = exit_code(r) == 0;
  j["exit_code"] = exit_code(r);
  return j.dump(2) + "\n";
}

namespace {

void emit_grid(std::ostringstream& os, const std::vector<NamedTable>& tables) {
  if (tables.empty()) return;
  std::set<int> degrees;
  for (const auto& t : tables)
    for (int d = t.table.window.lo; d <= t.table.window.hi; ++d)
      if (t.table.at(d) != 0) degrees.insert(d);
  std::vector<std::size_t> width;
  for (const auto& t : tables) width.push_back(std::max<std::size_t>(t.name.size(), 3));
  os << "  " << std::setw(6) << "degree";
  for (std::size_t k = 0; k < tables.size(); ++k) os << "  " << std::setw(static_cast<int>(width[k])) << tables[k].name;
  os << "\n";
  if (degrees.empty()) {
    os << "  (all zero)\n";
    return;
  }
  for (int d : degrees) {
    os << "  " << std::setw(6) << d;
    for (std::size_t k = 0; k < tables.size(); ++k) {
      const auto& t = tables[k].table;
      os << "  " << std::setw(static_cast<int>(width[k]));
      if (t.window.contains(d))
        os << t.at(d);
      else
        os << ".";
    }
    os << "\n";
  }
}

}  // namespace

std::string emit_table(const Report& r) {
  std::ostringstream os;
  os << "# gmdual report";
  if (!r.source.empty()) os << " for " << r.source;
  os << "\n# defaults: window " << r.options.window.lo << ".." << r.options.window.hi << ", tmax " << r.options.t_max << "\n";
  for (const auto& b : r.blocks) {
    os << "\n[line " << b.loc.line << "] " << b.command << "  -> "
       << (b.error ? "ERROR" : (b.passed() ? "ok" : "FAIL")) << "\n";
    if (b.error) os << "  error: " << *b.error << "\n";
    for (auto it = b.values.begin(); it != b.values.end(); ++it) os << "  " << it.key() << ": " << it.value().dump() << "\n";
    emit_grid(os, b.tables);
    for (const auto& rep : b.reports) {
      os << "  " << rep.identity << " [" << rep.mode << "]: " << (rep.pass ? "pass" : "FAIL") << "\n";
      for (const auto& c : rep.comparisons)
        if (!c.equal()) {
          os << "    mismatch " << c.label << "\n";
          emit_grid(os, {{"lhs", c.lhs}, {"rhs", c.rhs}});
        }
      for (const auto& n : rep.notes) os << "    note: " << n << "\n";
    }
    for (const auto& v : b.verdicts) os << "  verdict: " << v.label << ": " << (v.pass ? "pass" : "FAIL") << "\n";
    if (r.options.timing) os << "  seconds: " << std::fixed << std::setprecision(3) << b.seconds << "\n";
  }
  os << "\nexit code " << exit_code(r) << "\n";
  return os.str();
}

}  // namespace gmdual
