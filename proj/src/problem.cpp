#include "ecdetect/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ecdetect/errors.hpp"
#include "ecdetect/expression.hpp"
#include "json.hpp"

namespace ecdetect {

using nlohmann::json;

namespace {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ProblemFileError(path + ": " + what);
  }

  // Errors inside a string value: locate the literal in the source text so the
  // message can point at the exact character.
  [[noreturn]] void fail_in_string(const std::string& path, const std::string& value,
                                   const ParseError& e) const {
    const std::string literal = json(value).dump();
    const std::size_t at = text_.find(literal);
    if (at == std::string_view::npos) fail(path, e.what());
    const Position p = position_of(text_, at + e.column());
    throw ProblemFileError(path + ": " + e.what(), p.line, p.column);
  }

  static const json& field(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ProblemFileError(path + ": missing \"" + key + "\"");
    return *it;
  }

  Complex complex(const json& v, const std::string& path) const {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
      return {v[0].get<double>(), v[1].get<double>()};
    fail(path, "expected a complex number [re, im]");
  }

  std::vector<Complex> point(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a list of coordinates");
    std::vector<Complex> out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out.push_back(complex(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
  }

  std::vector<std::string> strings(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a list of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  int integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<int>();
  }

  double real(const json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
  }

  std::vector<Polynomial> polynomials(const json& v, const Ring& ring,
                                      const std::string& path) const {
    std::vector<Polynomial> out;
    const auto texts = strings(v, path);
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        out.push_back(parse_polynomial(texts[i], ring));
      } catch (const ParseError& e) {
        fail_in_string(path + "[" + std::to_string(i) + "]", texts[i], e);
      }
    }
    return out;
  }

  ComponentSpec component(const json& v, std::size_t nvars, const std::string& path) const {
    if (!v.is_object()) fail(path, "expected an object");
    const std::string id = v.contains("id") ? v["id"].get<std::string>() : path;
    if (v.contains("points")) {
      const json& pts = v["points"];
      if (!pts.is_array() || pts.empty()) fail(path + ".points", "expected a non-empty list");
      std::vector<std::vector<Complex>> points;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        points.push_back(point(pts[i], path + ".points[" + std::to_string(i) + "]"));
        if (points.back().size() != nvars) fail(path + ".points", "wrong number of coordinates");
      }
      return ComponentSpec::from_points(id, std::move(points));
    }
    const int dim = integer(field(v, "dim", path), path + ".dim");
    const auto texts = strings(field(v, "parametrization", path), path + ".parametrization");
    return parametrized(id, dim, texts, nvars, path + ".parametrization");
  }

  ComponentSpec parametrized(const std::string& id, int dim, const std::vector<std::string>& texts,
                             std::size_t nvars, const std::string& path) const {
    if (dim < 1) fail(path, "a parametrized component needs dim >= 1");
    if (texts.size() != nvars) fail(path, "needs one expression per variable");
    std::vector<std::string> params;
    for (int j = 1; j <= dim; ++j) params.push_back("t" + std::to_string(j));
    if (dim == 1) params.push_back("t");
    for (std::size_t i = 0; i < texts.size(); ++i) {
      try {
        (void)parse_expression(texts[i], params);
      } catch (const ParseError& e) {
        fail_in_string(path + "[" + std::to_string(i) + "]", texts[i], e);
      }
    }
    try {
      return ComponentSpec::from_parametrization(id, dim, texts, nvars);
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

 private:
  std::string_view text_;
};

void read_config(const Reader& r, const json& c, NumericalConfig& cfg) {
  if (!c.is_object()) r.fail("config", "expected an object");
  for (const auto& [key, v] : c.items()) {
    const std::string path = "config." + key;
    if (key == "delta") cfg.delta = r.real(v, path);
    else if (key == "seed") {
      if (!v.is_number_unsigned()) r.fail(path, "expected a non-negative integer");
      cfg.seed = v.get<std::uint64_t>();
    }
    else if (key == "max_degree") cfg.max_degree = r.integer(v, path);
    else if (key == "max_samples") cfg.max_samples = r.integer(v, path);
    else if (key == "max_d") cfg.max_d = r.integer(v, path);
    else if (key == "max_e") cfg.max_e = r.integer(v, path);
    else if (key == "pivot_tol") cfg.pivot_tol = r.real(v, path);
    else if (key == "residual_tol") cfg.residual_tol = r.real(v, path);
    else if (key == "chop_tol") cfg.chop_tol = r.real(v, path);
    else if (key == "corner_confirm") cfg.corner_confirm = r.integer(v, path);
    else r.fail(path, "unknown setting");
  }
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) r.fail("config.delta", "must lie in (0, 1)");
  if (cfg.max_degree < 1) r.fail("config.max_degree", "must be positive");
  if (cfg.max_samples < 1) r.fail("config.max_samples", "must be positive");
}

Problem read_problem(const json& doc, std::string_view text);

}  // namespace

ComponentSpec Problem::suspect_component(std::size_t i) const {
  const SuspectSpec& s = suspects.at(i);
  if (!s.component.empty()) {
    for (const auto& c : components)
      if (c.id == s.component) return c;
    throw ProblemFileError("suspects[" + std::to_string(i) + "]: unknown component \"" +
                           s.component + "\"");
  }
  if (s.parametrization.empty())
    throw ProblemFileError("suspects[" + std::to_string(i) + "]: dim > 0 needs a parametrization");
  const std::string id = s.id.empty() ? "suspect" + std::to_string(i) : s.id;
  return ComponentSpec::from_parametrization(id, s.dim, s.parametrization, ring->nvars());
}

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const Position p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ProblemFileError("malformed JSON", p.line, p.column);
  }
  if (!doc.is_object()) throw ProblemFileError("top level must be an object");
  try {
    return read_problem(doc, text);
  } catch (const json::exception& e) {
    throw ProblemFileError(std::string("wrong value type: ") + e.what());
  }
}

namespace {

Problem read_problem(const json& doc, std::string_view text) {

  static const std::set<std::string> known{"name",       "description", "variables", "generators",
                                           "suspects",   "components",  "config",    "polynomials",
                                           "order",      "degree"};
  for (const auto& [key, v] : doc.items())
    if (!known.contains(key)) throw ProblemFileError("unknown field \"" + key + "\"");

  const Reader r(text);
  Problem p;
  if (doc.contains("name")) p.name = doc["name"].get<std::string>();
  const auto vars = r.strings(Reader::field(doc, "variables", ""), "variables");
  if (vars.empty()) r.fail("variables", "need at least one variable");
  try {
    p.ring = make_ring(vars);
  } catch (const Error& e) {
    r.fail("variables", e.what());
  }
  const std::size_t n = vars.size();
  p.generators = r.polynomials(Reader::field(doc, "generators", ""), p.ring, "generators");

  if (doc.contains("components")) {
    const json& cs = doc["components"];
    if (!cs.is_array()) r.fail("components", "expected a list");
    std::set<std::string> ids;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      p.components.push_back(r.component(cs[i], n, "components[" + std::to_string(i) + "]"));
      if (!ids.insert(p.components.back().id).second)
        r.fail("components[" + std::to_string(i) + "]", "duplicate id");
    }
  }

  if (doc.contains("suspects")) {
    const json& ss = doc["suspects"];
    if (!ss.is_array()) r.fail("suspects", "expected a list");
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string path = "suspects[" + std::to_string(i) + "]";
      const json& s = ss[i];
      if (!s.is_object()) r.fail(path, "expected an object");
      SuspectSpec spec;
      if (s.contains("id")) spec.id = s["id"].get<std::string>();
      spec.point = r.point(Reader::field(s, "point", path), path + ".point");
      if (spec.point.size() != n) r.fail(path + ".point", "wrong number of coordinates");
      if (s.contains("dim")) spec.dim = r.integer(s["dim"], path + ".dim");
      if (spec.dim < 0 || spec.dim >= static_cast<int>(n)) r.fail(path + ".dim", "out of range");
      if (s.contains("component")) spec.component = s["component"].get<std::string>();
      if (s.contains("parametrization")) {
        spec.parametrization = r.strings(s["parametrization"], path + ".parametrization");
        (void)r.parametrized(spec.id.empty() ? path : spec.id, spec.dim, spec.parametrization, n,
                             path + ".parametrization");
      }
      p.suspects.push_back(std::move(spec));
      if (p.suspects.back().dim > 0) (void)p.suspect_component(i);
    }
  }

  if (doc.contains("config")) read_config(r, doc["config"], p.config);
  if (doc.contains("polynomials"))
    p.polynomials = r.polynomials(doc["polynomials"], p.ring, "polynomials");
  if (doc.contains("order")) p.order = r.integer(doc["order"], "order");
  if (doc.contains("degree")) p.degree = r.integer(doc["degree"], "degree");
  return p;
}

}  // namespace

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemFileError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

}  // namespace ecdetect
