#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecdetect/dual_space.hpp"
#include "ecdetect/oracle.hpp"

namespace ecdetect {

struct SuspectSpec {
  std::string id;
  std::vector<Complex> point;
  int dim = 0;
  /// Required for dim > 0, unless `component` names a listed component.
  std::vector<std::string> parametrization;
  std::string component;
};

/// Contents of a problem file. Complex numbers are [re, im] pairs.
///
///   {"variables": [...], "generators": [...],
///    "suspects": [{"point": [[re, im], ...], "dim": 0}],
///    "components": [{"id": ..., "dim": d, "parametrization": [...]} |
///                   {"id": ..., "points": [[[re, im], ...], ...]}],
///    "config": {"delta": ..., "seed": ..., "max_degree": ..., "max_samples": ...},
///    "polynomials": [...], "order": k, "degree": d}
///
/// The last three feed `member`, `dual`/`hilbert` and `truncate`/`deflate`/
/// `interpolate` respectively.
struct Problem {
  std::string name;
  Ring ring;
  std::vector<Polynomial> generators;
  std::vector<SuspectSpec> suspects;
  std::vector<ComponentSpec> components;
  NumericalConfig config;
  std::vector<Polynomial> polynomials;
  std::optional<int> order;
  std::optional<int> degree;

  /// The component fixture describing suspect i (dim > 0 only).
  ComponentSpec suspect_component(std::size_t i) const;
};

/// Throws ProblemFileError with the line and column of the offending text.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

}  // namespace ecdetect
