#pragma once

namespace fspg {

// Standard normal CDF, accurate to ~1e-16 via erfc.
double norm_cdf(double x);

// Standard normal quantile function. Rational initial guess refined by one
// Halley step against norm_cdf; absolute error well below 1e-12 on (0,1).
double norm_ppf(double p);

// Standard normal density.
double norm_pdf(double x);

}  // namespace fspg
