#pragma once

#include <string>
#include <vector>

#include "ecdetect/embedded.hpp"

namespace ecdetect {

/// Degree <= e part of the primary ideal of an isolated component, from the
/// full local dual spaces D_x[F + L] at generic points x, where L is a generic
/// affine plane through x whose codimension is the component dimension.
/// Points are added until the constraint rank survives one extra point
/// unchanged; throws InconclusiveError when cfg.max_samples is reached first.
TruncationSpace interpolate_isolated(OracleHandle& oracle, const std::string& component, int e,
                                     const NumericalConfig& cfg = {});

/// dim D_y^j[<basis of f>] for j = 0..k. An empty basis stands for the zero ideal.
std::vector<std::size_t> dual_dims_of_truncated_ideal(const TruncationSpace& f, const Point& y,
                                                      int k, const NumericalConfig& cfg = {});

}  // namespace ecdetect
