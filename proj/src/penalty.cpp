#include "fspg/penalty.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fspg/errors.hpp"
#include "fspg/linalg.hpp"

namespace fspg {

namespace {
double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }
}

std::string to_string(PenaltyKind k) {
    switch (k) {
        case PenaltyKind::MCP: return "MCP";
        case PenaltyKind::SCAD: return "SCAD";
        case PenaltyKind::L1: return "L1";
        case PenaltyKind::None: return "None";
    }
    return "?";
}

PenaltyKind penalty_kind_from_string(const std::string& s) {
    if (s == "MCP") return PenaltyKind::MCP;
    if (s == "SCAD") return PenaltyKind::SCAD;
    if (s == "L1") return PenaltyKind::L1;
    if (s == "None") return PenaltyKind::None;
    throw ConfigError("unknown penalty kind: " + s);
}

void PenaltyConfig::validate() const {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw ConfigError("penalty lambda must be >= 0, got " + std::to_string(lambda));
    if (kind == PenaltyKind::MCP && !(gamma >= 1.0))
        throw ConfigError("MCP requires gamma >= 1, got " + std::to_string(gamma));
    if (kind == PenaltyKind::SCAD && !(gamma >= 2.0))
        throw ConfigError("SCAD requires gamma >= 2, got " + std::to_string(gamma));
}

double weak_convexity_rho(const PenaltyConfig& cfg) {
    cfg.validate();
    switch (cfg.kind) {
        case PenaltyKind::MCP: return 1.0 / cfg.gamma;
        case PenaltyKind::SCAD: return 1.0 / (cfg.gamma - 1.0);
        default: return 0.0;
    }
}

double penalty_value(double w_p, const PenaltyConfig& cfg) {
    cfg.validate();
    const double a = std::abs(w_p);
    const double lam = cfg.lambda;
    const double gam = cfg.gamma;
    switch (cfg.kind) {
        case PenaltyKind::MCP:
            if (a <= gam * lam) return lam * a - a * a / (2.0 * gam);
            return gam * lam * lam / 2.0;
        case PenaltyKind::SCAD:
            if (a <= lam) return lam * a;
            if (a <= gam * lam)
                return -(a * a - 2.0 * gam * lam * a + lam * lam) / (2.0 * (gam - 1.0));
            return (gam + 1.0) * lam * lam / 2.0;
        case PenaltyKind::L1: return lam * a;
        case PenaltyKind::None: return 0.0;
    }
    return 0.0;
}

double penalty_total(std::span<const double> coeffs, const PenaltyConfig& cfg) {
    KahanSum s;
    for (double w : coeffs) s.add(penalty_value(w, cfg));
    return s.value();
}

bool prox_admissible(const PenaltyConfig& cfg, double t) {
    switch (cfg.kind) {
        case PenaltyKind::MCP: return t < cfg.gamma;
        case PenaltyKind::SCAD: return t < cfg.gamma - 1.0;
        default: return true;
    }
}

double prox(double a, const PenaltyConfig& cfg, double t) {
    cfg.validate();
    if (!(t > 0.0))
        throw ConfigError("prox requires t > 0, got " + std::to_string(t));
    if (!prox_admissible(cfg, t)) {
        std::ostringstream os;
        os << "prox subproblem not convex for " << to_string(cfg.kind) << ": t=" << t
           << " vs gamma=" << cfg.gamma << " (caller's sigma <= n*rho)";
        throw ConvexityError(os.str());
    }
    const double lam = cfg.lambda;
    const double gam = cfg.gamma;
    const double aa = std::abs(a);
    const double s = sign(a);
    switch (cfg.kind) {
        case PenaltyKind::MCP:
            if (aa <= t * lam) return 0.0;
            if (aa <= gam * lam) return s * (aa - t * lam) / (1.0 - t / gam);
            return a;
        case PenaltyKind::SCAD:
            if (aa <= (1.0 + t) * lam) return s * std::max(aa - t * lam, 0.0);
            if (aa <= gam * lam) return ((gam - 1.0) * a - s * gam * lam * t) / (gam - 1.0 - t);
            return a;
        case PenaltyKind::L1: return s * std::max(aa - t * lam, 0.0);
        case PenaltyKind::None: return a;
    }
    return a;
}

double penalty_subgrad(double w_p, const PenaltyConfig& cfg) {
    const double lam = cfg.lambda;
    const double gam = cfg.gamma;
    const double a = std::abs(w_p);
    const double s = sign(w_p);
    switch (cfg.kind) {
        case PenaltyKind::MCP:
            if (a <= gam * lam) return s * lam - w_p / gam;
            return 0.0;
        case PenaltyKind::SCAD:
            if (a <= lam) return s * lam;
            if (a <= gam * lam) return s * (gam * lam - a) / (gam - 1.0);
            return 0.0;
        case PenaltyKind::L1: return s * lam;
        case PenaltyKind::None: return 0.0;
    }
    return 0.0;
}

std::pair<double, double> penalty_subgrad_interval(double w_p, const PenaltyConfig& cfg) {
    if (w_p != 0.0 || cfg.kind == PenaltyKind::None) {
        double g = penalty_subgrad(w_p, cfg);
        return {g, g};
    }
    return {-cfg.lambda, cfg.lambda};
}

}  // namespace fspg
