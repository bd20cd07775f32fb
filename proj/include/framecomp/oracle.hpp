#ifndef FRAMECOMP_ORACLE_HPP
#define FRAMECOMP_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "framecomp/completion_solver.hpp"
#include "framecomp/majorization.hpp"
#include "framecomp/potentials.hpp"
#include "framecomp/spectral_core.hpp"

namespace framecomp {

/// Sampler over the admissible completion spectra: descending nonnegative
/// d-vectors majorizing the prescribed norms.  Deterministic for a fixed
/// seed; the first emitted point is always the majorization-minimal element
/// of the set.
struct GammaSampler {
    RealVec norms_desc;
    std::size_t dim;
    std::uint64_t seed = 42;
    std::size_t count = 100;
};

std::vector<RealVec> sample_gamma(const GammaSampler& gs);

struct BruteForceResult {
    RealVec gamma;        // best admissible point found, descending
    double value;         // objective sum f(lambda_i + gamma_i)
    double runner_up_gap; // value gap to the best distinct candidate (inf if none)
};

/// Upper-bound certificate for the optimal completion objective: samples the
/// admissible set, then refines the best candidates by coordinate-pair
/// transfers with halving step sizes.  budget = 0 evaluates only the minimal
/// point.
BruteForceResult brute_force_min(const ProblemData& pd, const PotentialSpec& f,
                                 std::size_t budget, std::uint64_t seed);

/// Spot check of majorization minimality: true iff the flattened spectrum,
/// sorted decreasingly, is majorized by (lambda + gamma) sorted decreasingly
/// for every sampled admissible gamma.
bool check_majorization_min(const BlockSpectrum& nu, const ProblemData& pd,
                            std::size_t samples, std::uint64_t seed);

struct AuditCheck {
    std::string name;
    bool passed;
    double margin;  // how far the check cleared (negative = failed)
    std::string detail;
};

/// Structural audit of a completed pair (F0, G): eigenvector residuals of
/// the completion vectors in S_F, strictly decreasing eigenvalue constants,
/// consecutive index blocks, norm-gap dominance, linear independence of the
/// leading blocks and commutation of S_F0 with S_G.
struct StructureReport {
    std::vector<std::vector<std::size_t>> completion_blocks;  // J_j, 0-based
    std::vector<std::vector<std::size_t>> eigen_blocks;       // K_j, 0-based
    std::vector<double> constants;                            // c_j, descending
    std::vector<double> eigen_residuals;                      // per completion vector
    std::vector<std::size_t> block_ranks;                     // rank of each J_j block
    std::vector<AuditCheck> checks;

    bool passed() const;
};

StructureReport audit_structure(const VectorSequence& F0, const VectorSequence& G, double tol);

/// Parallelism cap for the oracle, from FRAME_COMPLETE_THREADS (default:
/// hardware concurrency clamped to [1, 8]).  Results never depend on it.
unsigned oracle_thread_cap();

} // namespace framecomp

#endif
