#ifndef FRAMECOMP_COMPLETION_SOLVER_HPP
#define FRAMECOMP_COMPLETION_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "framecomp/majorization.hpp"

namespace framecomp {

/// Initial data of the completion problem: the ascending eigenvalue vector of
/// the starting frame operator and the prescribed squared norms, descending.
/// Inputs are sorted at construction; validation enforces lambda >= 0,
/// norms > 0 and the rank condition d - #(nonzero lambda) <= k.
class ProblemData {
public:
    ProblemData(const RealVec& lambda, const RealVec& norms);

    const RealVec& lambda_asc() const { return lambda_asc_; }
    const RealVec& norms_desc() const { return norms_desc_; }

    std::size_t dim() const { return lambda_asc_.size(); }         // d
    std::size_t norm_count() const { return norms_desc_.size(); }  // k

    /// t = tr lambda + tr norms.
    double total() const { return lambda_prefix_.back() + norms_prefix_.back(); }

    /// Sum of the first i entries (1-based count, i in [0, d] resp. [0, k]).
    double lambda_prefix(std::size_t i) const { return lambda_prefix_[i]; }
    double norms_prefix(std::size_t i) const { return norms_prefix_[i]; }

private:
    RealVec lambda_asc_;
    RealVec norms_desc_;
    std::vector<double> lambda_prefix_;
    std::vector<double> norms_prefix_;
};

/// Output of the feasible-case computation: either the uniform vector
/// (cut_index == d) or (c 1_s, lambda_{s+1}, ..., lambda_d) with
/// lambda_s <= c < lambda_{s+1}.  `result` is ascending.
struct FeasibleSpectrum {
    std::size_t cut_index;  // s
    double constant;        // c
    RealVec result;
};

/// The optimal completion spectrum in block form: constants c_1 > ... > c_p
/// on consecutive index blocks (s_{j-1}, s_j], followed by the untouched
/// eigenvalue tail lambda_{s_p+1}, ..., lambda_d.
class BlockSpectrum {
public:
    BlockSpectrum(std::vector<std::size_t> block_ends, std::vector<double> constants,
                  RealVec lambda_asc, std::vector<std::string> diagnostics = {});

    std::size_t block_count() const { return constants_.size(); }          // p
    const std::vector<std::size_t>& block_ends() const { return block_ends_; }
    const std::vector<double>& constants() const { return constants_; }
    const RealVec& lambda_asc() const { return lambda_asc_; }

    /// lambda entries past the last block, unchanged by the completion.
    std::vector<double> tail() const;

    /// The spectrum in block order: (c_1 1_{s_1}, ..., c_p 1_{s_p - s_{p-1}}, tail).
    RealVec flatten() const;

    /// flatten() - lambda, entrywise in block order; nonincreasing and >= 0.
    RealVec mu() const;

    /// Near-tie notes emitted by the solver (empty in the generic case).
    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::size_t> block_ends_;
    std::vector<double> constants_;
    RealVec lambda_asc_;
    std::vector<std::string> diagnostics_;
};

/// Final average Q_{j,r} = (sum_{i>j} a_i + sum_{j<i<=r} lambda_i) / (r - j),
/// for k >= d and 0 <= j < r <= d.
double final_average(const ProblemData& pd, std::size_t j, std::size_t r);

/// Initial average P_{j,r} = mean of h_i = lambda_i + a_i over i in [j, r],
/// for 1 <= j <= r <= min(d, k).
double initial_average(const ProblemData& pd, std::size_t j, std::size_t r);

/// Feasible-case spectrum nu(lambda, a) for k >= d: the uniform branch when
/// t/d >= lambda_d, otherwise the bracketed branch at the largest index
/// attaining the minimal final average.
FeasibleSpectrum feasible_case_spectrum(const ProblemData& pd, double tol = kDefaultTol);

/// nu(lambda, a) for any d, k: reduces d > k to the truncation
/// (lambda_1, ..., lambda_k) and appends the remaining eigenvalues unchanged.
RealVec feasible_spectrum_general(const ProblemData& pd, double tol = kDefaultTol);

/// mu(lambda, a) = nu(lambda, a) - lambda, entrywise.
RealVec mu_of(const ProblemData& pd, double tol = kDefaultTol);

/// True iff the pair (lambda, a) is feasible, i.e. a is majorized by
/// mu(lambda, a) after zero-padding.
bool is_feasible(const ProblemData& pd, double tol = kDefaultTol);

/// True iff the truncated pair (lambda_{s+1..d}, a_{s+1..k}) is feasible.
/// s = 0 means the full pair.  Requires k >= d and 0 <= s <= d-1.
bool is_feasible_index(const ProblemData& pd, std::size_t s, double tol = kDefaultTol);

/// Least feasible index; the final constant block of the optimal spectrum
/// starts there.  Requires k >= d.
std::size_t min_feasible_index(const ProblemData& pd, double tol = kDefaultTol);

/// The optimal completion spectrum nu_f(lambda, a).  Independent of the
/// convex potential, hence no potential argument.  Blocks before the least
/// feasible index come from running maxima of initial averages (largest
/// index wins ties); the last block is the feasible-case solution of the
/// truncated pair; for d > k the problem is solved on the first k
/// eigenvalues and the rest pass through unchanged.
BlockSpectrum optimal_spectrum(const ProblemData& pd, double tol = kDefaultTol);

} // namespace framecomp

#endif
