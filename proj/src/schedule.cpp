#include "fspg/schedule.hpp"

#include <string>

#include "fspg/errors.hpp"

namespace fspg {

void Schedule::validate() const {
    if (!(c > 0.0)) throw ConfigError("schedule c must be > 0, got " + std::to_string(c));
    if (!(beta > 0.0)) throw ConfigError("schedule beta must be > 0, got " + std::to_string(beta));
    if (!(d > 0.0 && d < 1.0)) throw ConfigError("schedule d must lie in (0,1), got " + std::to_string(d));
}

double sigma_at(const Schedule& s, std::int64_t k) {
    return s.c * std::pow(static_cast<double>(k + 1), s.d);
}

double mu_at(const Schedule& s, std::int64_t k) {
    return s.beta / std::pow(static_cast<double>(k + 1), s.d);
}

}  // namespace fspg
