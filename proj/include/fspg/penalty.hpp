#pragma once

#include <span>
#include <string>
#include <utility>

namespace fspg {

enum class PenaltyKind { MCP, SCAD, L1, None };

std::string to_string(PenaltyKind k);
PenaltyKind penalty_kind_from_string(const std::string& s);

struct PenaltyConfig {
    PenaltyKind kind = PenaltyKind::MCP;
    double lambda = 0.0;
    double gamma = 0.0;  // concavity parameter; ignored for L1/None

    // Throws ConfigError unless lambda >= 0 and gamma >= 1 (MCP) / >= 2 (SCAD).
    void validate() const;
};

// Smallest rho such that g(w) + rho/2 * w^2 is convex:
// 1/gamma for MCP, 1/(gamma-1) for SCAD, 0 for L1/None.
double weak_convexity_rho(const PenaltyConfig& cfg);

// g_{lambda,gamma}(w_p). Symmetric in sign, saturates at gamma*lambda^2/2
// (MCP) resp. (gamma+1)*lambda^2/2 (SCAD) beyond |w|=gamma*lambda.
double penalty_value(double w_p, const PenaltyConfig& cfg);

// Sum of penalty_value over a coefficient span (the intercept is never
// included by callers).
double penalty_total(std::span<const double> coeffs, const PenaltyConfig& cfg);

// argmin_w t*g(w) + (w-a)^2/2, closed form. Requires t < gamma (MCP) resp.
// t < gamma-1 (SCAD); otherwise the subproblem is not convex and a
// ConvexityError is thrown carrying the offending values.
double prox(double a, const PenaltyConfig& cfg, double t);

// True when prox's convexity precondition holds for this t.
bool prox_admissible(const PenaltyConfig& cfg, double t);

// Derivative selection dg/dw with sign(0) := 0 (so the value at w=0 is 0).
double penalty_subgrad(double w_p, const PenaltyConfig& cfg);

// Full subdifferential interval [lo, hi] of g at w_p ([-lambda, lambda] at 0).
std::pair<double, double> penalty_subgrad_interval(double w_p, const PenaltyConfig& cfg);

}  // namespace fspg
