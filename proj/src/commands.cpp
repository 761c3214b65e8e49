#include "ecdetect/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <ostream>

#include "ecdetect/colon.hpp"
#include "ecdetect/deflation.hpp"
#include "ecdetect/dual_engine.hpp"
#include "ecdetect/embedded.hpp"
#include "ecdetect/errors.hpp"
#include "ecdetect/interpolation.hpp"
#include "ecdetect/random.hpp"
#include "ecdetect/staircase.hpp"
#include "json.hpp"

namespace ecdetect {

using nlohmann::ordered_json;

namespace {

constexpr int kDefaultOrder = 4;
constexpr int kDefaultTruncationDegree = 1;
constexpr int kDefaultInterpolationDegree = 2;
// Output coefficients keep 10 significant digits; parts below this fraction
// of the largest coefficient are printed as zero.
constexpr double kOutputChop = 1e-10;

double round_sig(double v) {
  if (v == 0.0) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

Complex round_coefficient(Complex c, double scale) {
  double re = std::abs(c.real()) < kOutputChop * scale ? 0.0 : round_sig(c.real());
  double im = std::abs(c.imag()) < kOutputChop * scale ? 0.0 : round_sig(c.imag());
  return {re + 0.0, im + 0.0};
}

std::string show(const Polynomial& f) {
  double scale = 0.0;
  for (const auto& [e, c] : f.terms()) scale = std::max(scale, std::abs(c));
  Polynomial g(f.ring());
  for (const auto& [e, c] : f.terms()) {
    const Complex r = round_coefficient(c, scale);
    if (r != Complex{}) g.add_term(e, r);
  }
  return g.to_string();
}

std::string show(const DualFunctional& q) {
  double scale = 0.0;
  for (const auto& [e, c] : q.terms()) scale = std::max(scale, std::abs(c));
  DualFunctional r(q.ring(), q.basepoint());
  for (const auto& [e, c] : q.terms()) {
    const Complex v = round_coefficient(c, scale);
    if (v != Complex{}) r.add_term(e, v);
  }
  return r.to_string();
}

ordered_json complex_json(Complex c) {
  return ordered_json::array({round_sig(c.real()) + 0.0, round_sig(c.imag()) + 0.0});
}

ordered_json point_json(std::span<const Complex> p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p) out.push_back(complex_json(c));
  return out;
}

ordered_json monomials_json(const std::vector<Exponent>& ms, const RingContext& ring) {
  ordered_json out = ordered_json::array();
  for (const auto& m : ms) out.push_back(format_monomial(m, ring));
  return out;
}

ordered_json polys_json(const std::vector<Polynomial>& fs) {
  ordered_json out = ordered_json::array();
  for (const auto& f : fs) out.push_back(show(f));
  return out;
}

NumericalConfig effective_config(const Problem& p, const CommandOptions& o) {
  NumericalConfig cfg = p.config;
  if (o.delta) cfg.delta = *o.delta;
  if (o.seed) cfg.seed = *o.seed;
  if (o.max_degree) cfg.max_degree = *o.max_degree;
  return cfg;
}

int order_of(const Problem& p, const CommandOptions& o) {
  const int k = o.order ? *o.order : p.order.value_or(kDefaultOrder);
  if (k < 0) throw PreconditionError("order must be non-negative");
  return k;
}

int degree_of(const Problem& p, const CommandOptions& o, int fallback) {
  const int d = o.degree ? *o.degree : p.degree.value_or(fallback);
  if (d < 0) throw PreconditionError("degree must be non-negative");
  return d;
}

// Base points for the local commands: every suspect point, or the origin when
// the problem lists none.
std::vector<Point> base_points(const Problem& p) {
  std::vector<Point> out;
  for (const auto& s : p.suspects) out.push_back(Point{s.point, 0.0});
  if (out.empty()) out.push_back(Point::origin(p.ring->nvars()));
  return out;
}

void require_generators(const Problem& p) {
  if (p.generators.empty()) throw PreconditionError("the problem has no generators");
}

class Logger {
 public:
  Logger(std::ostream* log, bool quiet) : log_(quiet ? nullptr : log) {}
  void line(const std::string& s) const {
    if (log_) *log_ << s << '\n' << std::flush;
  }

 private:
  std::ostream* log_;
};

std::string seconds_since(std::chrono::steady_clock::time_point t0) {
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Per-item status shared by the commands that loop over points.
struct Tally {
  bool inconclusive = false;
  bool error = false;

  int exit_code() const {
    if (error) return kExitError;
    return inconclusive ? kExitInconclusive : kExitOk;
  }
};

// Runs `body` and turns library errors into a status entry of `item`.
template <class Body>
void guarded(ordered_json& item, Tally& tally, Body&& body) {
  try {
    body();
  } catch (const IncompleteStaircaseError& e) {
    tally.inconclusive = true;
    item["status"] = "inconclusive";
    item["reason"] = e.what();
  } catch (const InconclusiveError& e) {
    tally.inconclusive = true;
    item["status"] = "inconclusive";
    item["reason"] = e.what();
  } catch (const Error& e) {
    tally.error = true;
    item["status"] = "error";
    item["reason"] = e.what();
  }
}

// ---------------------------------------------------------------------------

ordered_json cmd_dual(const Problem& p, const CommandOptions& o, const NumericalConfig& cfg,
                      Tally& tally, const Logger&) {
  require_generators(p);
  const int k = order_of(p, o);
  ordered_json results = ordered_json::array();
  for (const Point& y : base_points(p)) {
    ordered_json item;
    item["point"] = point_json(y.coords);
    item["order"] = k;
    guarded(item, tally, [&] {
      const DualBasis b = truncated_dual(p.generators, y, k, cfg);
      DualEngine engine(p.ring, translate_all(p.generators, y.coords), cfg);
      ordered_json dims = ordered_json::array();
      for (int j = 0; j <= k; ++j) dims.push_back(engine.dim(j));
      item["dims"] = dims;
      ordered_json basis = ordered_json::array();
      for (const auto& q : b.functionals) basis.push_back(show(q));
      item["basis"] = basis;
      item["ill_conditioned"] = b.ill_conditioned;
      item["status"] = "ok";
    });
    results.push_back(item);
  }
  return results;
}

ordered_json hilbert_json(const HilbertData& h) {
  ordered_json out;
  out["values"] = h.values;
  out["dimension"] = h.dimension;
  out["multiplicity"] = h.multiplicity;
  out["regularity"] = h.regularity;
  if (h.dimension > 0) {
    out["hilbert_polynomial"] = {{"base", h.hp_base}, {"newton_differences", h.hp_diffs}};
  }
  return out;
}

ordered_json cmd_hilbert(const Problem& p, const CommandOptions& o, const NumericalConfig& cfg,
                         Tally& tally, const Logger&) {
  require_generators(p);
  ordered_json results = ordered_json::array();
  for (const Point& y : base_points(p)) {
    ordered_json item;
    item["point"] = point_json(y.coords);
    guarded(item, tally, [&] {
      check_on_variety(p.generators, y.coords, cfg);
      if (o.order || p.order) {
        item["hilbert_function"] = hilbert_values(p.generators, y, order_of(p, o), cfg);
      }
      const HilbertData h = staircase_stats(p.generators, y, cfg);
      item.update(hilbert_json(h));
      item["status"] = "ok";
    });
    results.push_back(item);
  }
  return results;
}

ordered_json cmd_corners(const Problem& p, const CommandOptions&, const NumericalConfig& cfg,
                         Tally& tally, const Logger&) {
  require_generators(p);
  ordered_json results = ordered_json::array();
  for (const Point& y : base_points(p)) {
    ordered_json item;
    item["point"] = point_json(y.coords);
    try {
      const Staircase st = gcorners(p.generators, y, cfg);
      const HilbertData h = staircase_stats(st);
      item["gcorners"] = monomials_json(st.gcorners, *p.ring);
      item["scorners"] = monomials_json(scorners(st, 1 << 20), *p.ring);
      item["rho"] = h.regularity;
      item["mu"] = h.multiplicity;
      item["dimension"] = h.dimension;
      item["degree_reached"] = st.degree_reached;
      item["status"] = "ok";
    } catch (const IncompleteStaircaseError& e) {
      tally.inconclusive = true;
      item["status"] = "inconclusive";
      item["reason"] = e.what();
      item["partial_gcorners"] = monomials_json(e.partial_corners(), *p.ring);
    } catch (const Error& e) {
      tally.error = true;
      item["status"] = "error";
      item["reason"] = e.what();
    }
    results.push_back(item);
  }
  return results;
}

ordered_json cmd_member(const Problem& p, const CommandOptions& o, const NumericalConfig& cfg,
                        Tally& tally, const Logger&) {
  require_generators(p);
  std::vector<Polynomial> gs = p.polynomials;
  for (const auto& text : o.polynomials) gs.push_back(parse_polynomial(text, p.ring));
  if (gs.empty()) throw PreconditionError("member needs polynomials (--poly or \"polynomials\")");
  ordered_json results = ordered_json::array();
  for (const Point& y : base_points(p)) {
    for (const auto& g : gs) {
      ordered_json item;
      item["point"] = point_json(y.coords);
      item["polynomial"] = show(g);
      guarded(item, tally, [&] {
        item["member"] = ideal_membership(p.generators, g, y, cfg);
        item["status"] = "ok";
      });
      results.push_back(item);
    }
  }
  return results;
}

ordered_json cmd_truncate(const Problem& p, const CommandOptions& o, const NumericalConfig& cfg,
                          Tally& tally, const Logger& log) {
  require_generators(p);
  const int d = degree_of(p, o, kDefaultTruncationDegree);
  const std::size_t n = p.ring->nvars();
  ordered_json results = ordered_json::array();
  for (std::size_t i = 0; i < p.suspects.size(); ++i) {
    const SuspectSpec& s = p.suspects[i];
    ordered_json item;
    item["suspect"] = s.id.empty() ? std::to_string(i) : s.id;
    item["point"] = point_json(s.point);
    item["d"] = d;
    guarded(item, tally, [&] {
      if (s.dim != 0) throw PreconditionError("truncate works at 0-dimensional suspects");
      const Point y{s.point, 0.0};
      check_on_variety(p.generators, y.coords, cfg);
      OracleHandle oracle(p.generators, p.components, split_seed(cfg.seed, i));
      OracleHandle local = localized_oracle(p.generators, y, oracle, cfg);
      const std::vector<Polynomial> shifted = translate_all(p.generators, y.coords);
      const TruncationSpace j = ideal_truncation(shifted, local, d, cfg);
      std::vector<Complex> back(n);
      for (std::size_t v = 0; v < n; ++v) back[v] = -y.coords[v];
      std::vector<Polynomial> basis;
      for (const auto& f : j.basis) basis.push_back(f.translate(back));
      item["e"] = j.e;
      item["certified"] = j.certified;
      item["dim"] = j.dim();
      item["basis"] = polys_json(basis);
      item["status"] = "ok";
    });
    log.line("truncate " + item["suspect"].get<std::string>() + ": " +
             item["status"].get<std::string>());
    results.push_back(item);
  }
  return results;
}

ordered_json verdict_json(const EmbeddedVerdict& v, const RingContext& ring) {
  ordered_json out;
  out["verdict"] = v.embedded;
  switch (v.certificate) {
    case EmbeddedVerdict::Certificate::Witness: out["certificate_type"] = "witness"; break;
    case EmbeddedVerdict::Certificate::Coverage: out["certificate_type"] = "coverage"; break;
    case EmbeddedVerdict::Certificate::Isolated: out["certificate_type"] = "isolated"; break;
  }
  if (v.witness) {
    out["witness_poly"] = show(*v.witness);
    out["witness_degree"] = v.witness->degree();
  } else {
    out["covered_scorners"] = monomials_json(v.covered_scorners, ring);
  }
  out["degrees"] = {{"d", v.d}, {"e", v.witness ? v.witness_e : -1}};
  out["gcorners"] = monomials_json(v.staircase.gcorners, ring);
  out["scorners"] = monomials_json(v.scorners, ring);
  if (v.slice_point) out["slice_point"] = point_json(*v.slice_point);
  return out;
}

ordered_json embedded_one(const Problem& p, std::size_t i, const NumericalConfig& cfg) {
  const SuspectSpec& s = p.suspects[i];
  ordered_json item;
  item["suspect"] = s.id.empty() ? std::to_string(i) : s.id;
  item["point"] = point_json(s.point);
  item["dim"] = s.dim;
  try {
    OracleHandle oracle(p.generators, p.components, split_seed(cfg.seed, i));
    EmbeddedVerdict v;
    if (s.dim == 0) {
      v = is_point_embedded(p.generators, Point{s.point, 0.0}, oracle, cfg);
    } else {
      SlicedProblem sp = slice_suspect(p.generators, p.suspect_component(i), oracle, cfg);
      v = is_point_embedded(sp.generators, sp.point, sp.oracle, cfg);
      v.slice_point = sp.point.coords;
    }
    item.update(verdict_json(v, *p.ring));
    item["status"] = "ok";
  } catch (const InconclusiveError& e) {
    item["verdict"] = "inconclusive";
    item["status"] = "inconclusive";
    item["reason"] = e.what();
  } catch (const Error& e) {
    item["status"] = "error";
    item["reason"] = e.what();
  }
  return item;
}

ordered_json cmd_embedded(const Problem& p, const CommandOptions&, const NumericalConfig& cfg,
                          Tally& tally, const Logger& log) {
  require_generators(p);
  if (p.suspects.empty()) throw PreconditionError("the problem lists no suspects");
  if (p.components.empty()) throw PreconditionError("the problem lists no components");
  {
    OracleHandle check(p.generators, p.components, cfg.seed);
    check.validate(cfg);
  }
  // Suspects are independent; each owns an oracle seeded from its index, so
  // the output does not depend on scheduling.
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::future<ordered_json>> jobs;
  for (std::size_t i = 0; i < p.suspects.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&p, i, &cfg] { return embedded_one(p, i, cfg); }));
  ordered_json results = ordered_json::array();
  for (auto& job : jobs) {
    ordered_json item = job.get();
    const std::string status = item["status"].get<std::string>();
    if (status == "inconclusive") tally.inconclusive = true;
    if (status == "error") tally.error = true;
    std::string verdict = status;
    if (status == "ok") verdict = item["verdict"].get<bool>() ? "embedded" : "not embedded";
    log.line("suspect " + item["suspect"].get<std::string>() + ": " + verdict + " (" +
             seconds_since(t0) + ")");
    results.push_back(std::move(item));
  }
  return results;
}

ordered_json cmd_deflate(const Problem& p, const CommandOptions& o, const NumericalConfig& cfg,
                         Tally& tally, const Logger&) {
  require_generators(p);
  const int d = std::max(1, degree_of(p, o, 1));
  const DeflationSystem sys = deflate(p.generators, d);
  ordered_json out;
  out["order"] = sys.order;
  out["variables"] = sys.ring->names();
  out["generators"] = polys_json(sys.generators);
  ordered_json fibers = ordered_json::array();
  for (const auto& s : p.suspects) {
    ordered_json item;
    item["point"] = point_json(s.point);
    guarded(item, tally, [&] {
      item["fiber_dim"] = fiber_dual_dim(p.generators, Point{s.point, 0.0}, d, cfg);
      item["status"] = "ok";
    });
    fibers.push_back(item);
  }
  out["fibers"] = fibers;
  return out;
}

ordered_json cmd_interpolate(const Problem& p, const CommandOptions& o,
                             const NumericalConfig& cfg, Tally& tally, const Logger& log) {
  require_generators(p);
  const int e = degree_of(p, o, kDefaultInterpolationDegree);
  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < p.components.size(); ++i)
    if (o.component.empty() || p.components[i].id == o.component) targets.push_back(i);
  if (targets.empty())
    throw PreconditionError(o.component.empty() ? "the problem lists no components"
                                                : "unknown component " + o.component);
  const int k = order_of(p, o);
  ordered_json results = ordered_json::array();
  for (std::size_t i : targets) {
    ordered_json item;
    item["component"] = p.components[i].id;
    item["e"] = e;
    guarded(item, tally, [&] {
      OracleHandle oracle(p.generators, p.components, split_seed(cfg.seed, i));
      const TruncationSpace t = interpolate_isolated(oracle, p.components[i].id, e, cfg);
      item["dim"] = t.dim();
      item["basis"] = polys_json(t.basis);
      ordered_json dims = ordered_json::array();
      for (const auto& s : p.suspects) {
        if (s.dim != 0) continue;
        dims.push_back({{"point", point_json(s.point)},
                        {"dims", dual_dims_of_truncated_ideal(t, Point{s.point, 0.0}, k, cfg)}});
      }
      if (!dims.empty()) item["dual_dims"] = dims;
      item["status"] = "ok";
    });
    log.line("interpolate " + p.components[i].id + ": " + item["status"].get<std::string>());
    results.push_back(item);
  }
  return results;
}

std::string flat_dump(const ordered_json& v) {
  if (!v.is_array()) return v.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
  return out + "]";
}

bool is_flat(const ordered_json& v) {
  if (!v.is_array()) return v.is_primitive();
  return std::all_of(v.begin(), v.end(), [](const ordered_json& x) {
    return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const ordered_json& y) {
                                  return y.is_primitive();
                                }));
  });
}

// Indented JSON with arrays of scalars (and of scalar pairs) kept on one line.
void pretty(const ordered_json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, x] : v.items()) {
      out += inner + ordered_json(key).dump() + ": ";
      pretty(x, out, indent + 2);
      out += ++i < v.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (v.is_array() && !v.empty() && !is_flat(v)) {
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += inner;
      pretty(v[i], out, indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else if (v.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + flat_dump(v[i]);
    out += "]";
  } else {
    out += v.dump();
  }
}

std::string render(const ordered_json& doc) {
  std::string out;
  pretty(doc, out, 0);
  return out + "\n";
}

using Handler = ordered_json (*)(const Problem&, const CommandOptions&, const NumericalConfig&,
                                 Tally&, const Logger&);

Handler handler_for(const std::string& command) {
  if (command == "dual") return cmd_dual;
  if (command == "hilbert") return cmd_hilbert;
  if (command == "corners") return cmd_corners;
  if (command == "member") return cmd_member;
  if (command == "truncate") return cmd_truncate;
  if (command == "embedded") return cmd_embedded;
  if (command == "deflate") return cmd_deflate;
  if (command == "interpolate") return cmd_interpolate;
  return nullptr;
}

CommandResult error_result(const std::string& command, const std::string& what) {
  ordered_json doc;
  doc["command"] = command;
  doc["status"] = "error";
  doc["error"] = what;
  return {kExitError, render(doc)};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"dual",     "hilbert",  "corners", "member",
                                              "truncate", "embedded", "deflate", "interpolate"};
  return names;
}

CommandResult run_command(const std::string& command, const Problem& problem,
                          const CommandOptions& opts, std::ostream* log) {
  const Handler h = handler_for(command);
  if (!h) return error_result(command, "unknown command \"" + command + "\"");
  try {
    const NumericalConfig cfg = effective_config(problem, opts);
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw PreconditionError("delta must lie in (0, 1)");
    Tally tally;
    const Logger logger(log, opts.quiet);
    ordered_json doc;
    doc["command"] = command;
    if (!problem.name.empty()) doc["problem"] = problem.name;
    doc["variables"] = problem.ring->names();
    doc["config"] = {{"delta", cfg.delta},
                     {"seed", cfg.seed},
                     {"max_degree", cfg.max_degree},
                     {"max_samples", cfg.max_samples}};
    doc["results"] = h(problem, opts, cfg, tally, logger);
    doc["status"] = tally.error ? "error" : tally.inconclusive ? "inconclusive" : "ok";
    return {tally.exit_code(), render(doc)};
  } catch (const Error& e) {
    return error_result(command, e.what());
  }
}

CommandResult run_command_file(const std::string& command, const std::string& path,
                               const CommandOptions& opts, std::ostream* log) {
  Problem problem;
  try {
    problem = load_problem(path);
  } catch (const Error& e) {
    return error_result(command, e.what());
  }
  return run_command(command, problem, opts, log);
}

}  // namespace ecdetect
