#pragma once

#include <cmath>
#include <cstdint>

namespace fspg {

// sigma^(k+1) = c (k+1)^d, mu^(k+1) = beta / (k+1)^d, d in (0,1).
struct Schedule {
    double c = 1.0;
    double beta = 4.0;
    double d = 0.5;

    void validate() const;
};

// Value used by the update at iteration counter k (0-based), i.e. sigma^(k+1).
double sigma_at(const Schedule& s, std::int64_t k);

// mu^(k+1); strictly decreasing in k.
double mu_at(const Schedule& s, std::int64_t k);

}  // namespace fspg
