#include "dss/region.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace dss {

double region_lambda(int n, double p0, double pn) {
    if (n < 2) throw std::invalid_argument("region_lambda: n must be >= 2");
    if (p0 < 0.0 || pn < 0.0) {
        throw std::invalid_argument("region_lambda: probabilities must be >= 0");
    }
    return std::pow(std::pow(p0, 1.0 / n) + std::pow(pn, 1.0 / n), n);
}

std::vector<RegionRow> region_scan(int n, int resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("region_scan: resolution must be >= 2");
    }
    std::vector<RegionRow> rows;
    rows.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i) {
        const double p0 = static_cast<double>(i) / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double pn = static_cast<double>(j) / (resolution - 1);
            RegionRow row;
            row.p0 = p0;
            row.pn = pn;
            row.lambda = region_lambda(n, p0, pn);
            row.physical = p0 + pn <= 1.0;
            row.full_npt_possible = row.lambda < 1.0;
            rows.push_back(row);
        }
    }
    return rows;
}

void write_region_csv(std::ostream& out, const std::vector<RegionRow>& rows) {
    out << "p0,pN,lambda,physical,full_npt_possible\n";
    char buf[128];
    for (const RegionRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%d,%d\n", row.p0,
                      row.pn, row.lambda, row.physical ? 1 : 0,
                      row.full_npt_possible ? 1 : 0);
        out << buf;
    }
}

} // namespace dss
