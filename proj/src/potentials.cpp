#include "framecomp/potentials.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <limits>

namespace framecomp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

#ifndef NDEBUG
// Midpoint convexity spot-check for user-supplied functions; convexity of a
// black box is not decidable, this only catches gross mistakes.
bool midpoint_convex_spot_check(const std::function<double(double)>& f) {
    const double pts[] = {0.1, 0.5, 1.0, 2.0, 3.5, 7.0};
    for (double a : pts) {
        for (double b : pts) {
            if (a >= b) continue;
            const double lhs = f(0.5 * (a + b));
            const double rhs = 0.5 * (f(a) + f(b));
            if (std::isfinite(lhs) && std::isfinite(rhs) && lhs > rhs + 1e-9) return false;
        }
    }
    return true;
}
#endif

} // namespace

PotentialSpec::PotentialSpec(std::string name, std::function<double(double)> f)
    : name_(std::move(name)), f_(std::move(f)) {}

PotentialSpec PotentialSpec::frame_potential() {
    return PotentialSpec("fp", [](double t) { return t * t; });
}

PotentialSpec PotentialSpec::mse() {
    return PotentialSpec("mse", [](double t) { return t == 0.0 ? kInf : 1.0 / t; });
}

PotentialSpec PotentialSpec::exponential() {
    return PotentialSpec("exp", [](double t) { return std::exp(t); });
}

PotentialSpec PotentialSpec::power(double p) {
    if (!(p > 1.0)) {
        throw validation_error("PotentialSpec::power: exponent must exceed 1");
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "pow:%g", p);
    return PotentialSpec(buf, [p](double t) { return std::pow(t, p); });
}

PotentialSpec PotentialSpec::custom(std::string name, std::function<double(double)> f) {
#ifndef NDEBUG
    assert(midpoint_convex_spot_check(f) && "custom potential fails midpoint convexity");
#endif
    return PotentialSpec(std::move(name), std::move(f));
}

PotentialSpec PotentialSpec::parse(const std::string& name) {
    if (name == "fp") return frame_potential();
    if (name == "mse") return mse();
    if (name == "exp") return exponential();
    if (name.rfind("pow:", 0) == 0) {
        const std::string arg = name.substr(4);
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(arg, &used);
        } catch (const std::exception&) {
            throw validation_error("unknown potential '" + name + "'");
        }
        if (used != arg.size()) {
            throw validation_error("unknown potential '" + name + "'");
        }
        return power(p);
    }
    throw validation_error("unknown potential '" + name + "' (expected fp, mse, exp or pow:<p>)");
}

double eval_vector(const PotentialSpec& f, const RealVec& gamma) {
    double s = 0.0;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        const double g = gamma[i];
        if (g < 0.0) {
            throw validation_error("eval_vector: entries must be nonnegative");
        }
        const double v = f(g);
        if (v == kInf) return kInf;
        s += v;
    }
    return s;
}

double eval_frame(const PotentialSpec& f, const VectorSequence& F) {
    return eval_vector(f, eigh_ascending(frame_operator(F)).lambda_asc);
}

} // namespace framecomp
