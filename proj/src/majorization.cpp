#include "framecomp/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace framecomp {

namespace {

void validate_entries(const std::vector<double>& entries) {
    if (entries.empty()) {
        throw validation_error("RealVec: length must be >= 1");
    }
    for (double v : entries) {
        if (!std::isfinite(v)) {
            throw validation_error("RealVec: entries must be finite");
        }
    }
}

} // namespace

RealVec::RealVec(std::vector<double> entries) : entries_(std::move(entries)) {
    validate_entries(entries_);
}

RealVec::RealVec(std::initializer_list<double> entries) : entries_(entries) {
    validate_entries(entries_);
}

RealVec RealVec::constant(std::size_t n, double value) {
    return RealVec(std::vector<double>(n, value));
}

RealVec sort_desc(const RealVec& x) {
    std::vector<double> v = x.entries();
    std::sort(v.begin(), v.end(), std::greater<double>());
    return RealVec(std::move(v));
}

RealVec sort_asc(const RealVec& x) {
    std::vector<double> v = x.entries();
    std::sort(v.begin(), v.end());
    return RealVec(std::move(v));
}

double trace(const RealVec& x) {
    double s = 0.0;
    for (double v : x.entries()) s += v;
    return s;
}

bool submajorizes(const RealVec& x, const RealVec& y, double tol) {
    // Zero-pad the shorter vector; with all entries sorted decreasingly the
    // padding only matters if an entry is negative, which the prefix test
    // handles uniformly by treating missing entries as 0.
    const RealVec xd = sort_desc(x);
    const RealVec yd = sort_desc(y);
    const std::size_t n = std::max(xd.size(), yd.size());
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        if (m < xd.size()) sx += xd[m];
        if (m < yd.size()) sy += yd[m];
        if (sx > sy + tol) return false;
    }
    return true;
}

bool majorizes(const RealVec& x, const RealVec& y, double tol) {
    if (std::fabs(trace(x) - trace(y)) > tol) return false;
    return submajorizes(x, y, tol);
}

bool strictly_majorizes(const RealVec& x, const RealVec& y, double tol) {
    return majorizes(x, y, tol) && !majorizes(y, x, tol);
}

bool entrywise_leq(const RealVec& x, const RealVec& y) {
    if (x.size() != y.size()) {
        throw validation_error("entrywise_leq: length mismatch");
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i]) return false;
    }
    return true;
}

} // namespace framecomp
