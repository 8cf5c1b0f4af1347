#ifndef PG3XRAY_TRANSFORM_HPP
#define PG3XRAY_TRANSFORM_HPP

#include "pg3xray/exact.hpp"
#include "pg3xray/pg3.hpp"

namespace pg3xray {

/// One rational value per point, in canonical point order.
struct PointFunction {
    RatVector values;
};

/// One rational value per line of the domain it was evaluated on
/// (the full line set or a complex), in domain order.
struct LineFunction {
    RatVector values;
};

struct BolkerConstants {
    int64_t alpha; // lines through each point
    int64_t beta;  // lines through each distinct point pair
};

/// Sum of f over the q+1 points of each line of the domain.
LineFunction xray(const Geometry& g, const PointFunction& f,
                  const std::vector<int>& domain);
LineFunction xray_full(const Geometry& g, const PointFunction& f);

/// Adjoint on the full line set: sum of g over the lines through each point.
PointFunction dual_xray(const Geometry& g, const LineFunction& lf);

/// Exhaustively verifies both uniformity conditions and returns
/// (alpha, beta) = (q^2+q+1, 1). Throws UniformityViolation if the
/// geometry construction were broken.
BolkerConstants bolker_check(const Geometry& g);

/// Explicit inversion on the full line set:
///   S = (sum rf) / alpha,  f(x) = (dual(rf)(x) - beta S) / (alpha - beta).
/// Exact left inverse of xray on full domain; applied outside the range it
/// returns the formula's value without detection.
PointFunction bolker_invert(const Geometry& g, const LineFunction& rf);

/// Matrix of the restricted transform: rows = lines of the domain,
/// columns = points, 0/1 entries.
IntMatrix xray_matrix(const Geometry& g, const std::vector<int>& domain);
IntMatrix xray_matrix_full(const Geometry& g);

} // namespace pg3xray

#endif
