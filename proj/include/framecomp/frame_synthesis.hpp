#ifndef FRAMECOMP_FRAME_SYNTHESIS_HPP
#define FRAMECOMP_FRAME_SYNTHESIS_HPP

#include "framecomp/completion_solver.hpp"
#include "framecomp/majorization.hpp"
#include "framecomp/spectral_core.hpp"

namespace framecomp {

/// Hermitian matrix with prescribed diagonal and spectrum.  Requires
/// diag_target majorized by spectrum (zero-padded); the construction applies
/// one real Givens rotation per fixed diagonal entry, bracketing each target
/// between two adjacent working diagonal values.
ComplexMatrix schur_horn_matrix(const RealVec& diag_target, const RealVec& spectrum,
                                double tol = kDefaultTol);

/// Vector sequence G = {g_i}_{i<=k} with ||g_i||^2 = norms_i and frame
/// operator sum_i mu_i basis_i (x) basis_i.  Requires norms majorized by mu
/// (zero-padded) and an orthonormal basis of length mu.size().
VectorSequence design_sequence(const RealVec& norms, const RealVec& mu,
                               const std::vector<std::vector<cplx>>& basis,
                               double tol = kDefaultTol);

struct CompletionResult {
    VectorSequence completion;  // G, norms in descending order
    BlockSpectrum spectrum;     // nu
};

/// Optimal completion of F0 by vectors with the prescribed squared norms:
/// computes the optimal spectrum, pairs mu = nu - lambda against the
/// ascending eigenbasis of S_F0 and synthesizes G there.  The juxtaposition
/// (F0, G) then has spectrum flatten(nu) up to roundoff.
CompletionResult complete(const VectorSequence& F0, const RealVec& norms,
                          double tol = kDefaultTol);

} // namespace framecomp

#endif
