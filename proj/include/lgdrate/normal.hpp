#pragma once

namespace lgdrate {

// Standard normal density, CDF and quantile. The quantile uses Acklam's
// rational approximation polished with one Halley step against erfc, which
// keeps it accurate to ~1e-15 across (0,1).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_inverse_cdf(double p); // throws NumericalDomain unless 0 < p < 1

} // namespace lgdrate
