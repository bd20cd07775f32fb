#ifndef FRAMECOMP_POTENTIALS_HPP
#define FRAMECOMP_POTENTIALS_HPP

#include <functional>
#include <string>

#include "framecomp/majorization.hpp"
#include "framecomp/spectral_core.hpp"

namespace framecomp {

/// A convex scalar function on [0, inf) inducing the potential
/// P_f(F) = tr f(S_F) and the objective F(gamma) = sum_i f(gamma_i).
/// Built-ins are strictly convex; the MSE variant takes the extended value
/// f(0) = +inf.  Custom functions are trusted to be convex (a midpoint
/// spot-check runs in debug builds).
class PotentialSpec {
public:
    static PotentialSpec frame_potential();  // f(t) = t^2, CLI name "fp"
    static PotentialSpec mse();              // f(t) = 1/t, f(0) = inf, CLI name "mse"
    static PotentialSpec exponential();      // f(t) = e^t, CLI name "exp"
    static PotentialSpec power(double p);    // f(t) = t^p, p > 1, CLI name "pow:<p>"
    static PotentialSpec custom(std::string name, std::function<double(double)> f);

    /// Parse a CLI name: "fp" | "mse" | "exp" | "pow:<p>".
    static PotentialSpec parse(const std::string& name);

    double operator()(double t) const { return f_(t); }
    const std::string& name() const { return name_; }

private:
    PotentialSpec(std::string name, std::function<double(double)> f);
    std::string name_;
    std::function<double(double)> f_;
};

/// F(gamma) = sum_i f(gamma_i); +inf propagates.  Entries must be >= 0.
double eval_vector(const PotentialSpec& f, const RealVec& gamma);

/// P_f(F) = eval_vector on the spectrum of the frame operator.
double eval_frame(const PotentialSpec& f, const VectorSequence& F);

} // namespace framecomp

#endif
