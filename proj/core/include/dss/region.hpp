#pragma once

#include <iosfwd>
#include <vector>

namespace dss {

/// One cell of the (p_0, p_N) feasibility scan: the closed-form separable
/// weight depends only on the endpoint probabilities, so the scan never
/// constructs full states.
struct RegionRow {
    double p0;
    double pn;
    double lambda;           // (p0^{1/N} + pN^{1/N})^N
    bool physical;           // p0 + pN <= 1
    bool full_npt_possible;  // lambda < 1
};

double region_lambda(int n, double p0, double pn);

/// resolution^2 rows on the uniform grid [0,1]^2, row-major with p0 as the
/// outer coordinate.
std::vector<RegionRow> region_scan(int n, int resolution);

/// CSV with header p0,pN,lambda,physical,full_npt_possible; floats printed
/// with 12 significant digits, booleans as 1/0.
void write_region_csv(std::ostream& out, const std::vector<RegionRow>& rows);

} // namespace dss
