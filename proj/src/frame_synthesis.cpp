#include "framecomp/frame_synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace framecomp {

namespace {

struct DiagEntry {
    double value;
    std::size_t pos;  // matrix position
};

} // namespace

ComplexMatrix schur_horn_matrix(const RealVec& diag_target, const RealVec& spectrum, double tol) {
    const std::size_t n = diag_target.size();
    if (spectrum.size() != n) {
        throw validation_error("schur_horn_matrix: diagonal and spectrum must have equal length");
    }
    if (!majorizes(diag_target, spectrum, tol)) {
        throw validation_error("schur_horn_matrix: diagonal is not majorized by the spectrum");
    }

    // Start from diag(spectrum desc); each step fixes one diagonal entry on
    // its target with a Givens rotation between the two adjacent working
    // entries that bracket it.  The working principal submatrix stays
    // diagonal throughout, so every 2x2 subproblem is exact.
    const RealVec spec_desc = sort_desc(spectrum);
    ComplexMatrix A(n, n);
    std::vector<DiagEntry> working(n);
    for (std::size_t i = 0; i < n; ++i) {
        A(i, i) = spec_desc[i];
        working[i] = DiagEntry{spec_desc[i], i};
    }

    // Targets processed largest first; remember which matrix position serves
    // which original diagonal slot.
    std::vector<std::size_t> target_order(n);
    std::iota(target_order.begin(), target_order.end(), 0);
    std::stable_sort(target_order.begin(), target_order.end(), [&](std::size_t a, std::size_t b) {
        return diag_target[a] > diag_target[b];
    });
    std::vector<std::size_t> slot_of_target(n, 0);

    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t torig = target_order[step];
        const double t = diag_target[torig];

        if (working.size() == 1) {
            A(working[0].pos, working[0].pos) = t;
            slot_of_target[torig] = working[0].pos;
            working.pop_back();
            break;
        }

        // Adjacent bracket lo <= t <= hi in the descending working list.
        std::size_t hi_idx = 0;
        if (t >= working.front().value) {
            hi_idx = 0;
        } else if (t <= working.back().value) {
            hi_idx = working.size() - 2;
        } else {
            while (working[hi_idx + 1].value > t) ++hi_idx;
        }
        const std::size_t lo_idx = hi_idx + 1;
        const double hi = working[hi_idx].value;
        const double lo = working[lo_idx].value;
        const std::size_t q = working[hi_idx].pos;
        const std::size_t p = working[lo_idx].pos;

        double c = 1.0;
        double s = 0.0;
        const double denom = hi - lo;
        if (denom > 0.0) {
            double s2 = (t - lo) / denom;
            s2 = std::min(1.0, std::max(0.0, s2));
            s = std::sqrt(s2);
            c = std::sqrt(1.0 - s2);
        }

        // A <- G^T A G on the (p, q) plane with G = [[c, s], [-s, c]].
        for (std::size_t i = 0; i < n; ++i) {
            const cplx aip = A(i, p);
            const cplx aiq = A(i, q);
            A(i, p) = c * aip - s * aiq;
            A(i, q) = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const cplx apj = A(p, j);
            const cplx aqj = A(q, j);
            A(p, j) = c * apj - s * aqj;
            A(q, j) = s * apj + c * aqj;
        }
        A(p, p) = t;
        A(q, q) = lo + hi - t;

        slot_of_target[torig] = p;
        working[hi_idx].value = lo + hi - t;  // stays sorted: lo <= new value <= hi
        working.erase(working.begin() + static_cast<std::ptrdiff_t>(lo_idx));
    }

    // Permute so the diagonal appears in the caller's order.
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = A(slot_of_target[i], slot_of_target[j]);
        }
    }
    return out;
}

VectorSequence design_sequence(const RealVec& norms, const RealVec& mu,
                               const std::vector<std::vector<cplx>>& basis, double tol) {
    const std::size_t k = norms.size();
    const std::size_t d = mu.size();
    if (basis.size() != d) {
        throw validation_error("design_sequence: basis must have mu.size() vectors");
    }
    for (const auto& b : basis) {
        if (b.size() != d) {
            throw validation_error("design_sequence: basis vectors must have dimension d");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cplx ip(0.0, 0.0);
            for (std::size_t l = 0; l < d; ++l) ip += basis[i][l] * std::conj(basis[j][l]);
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(ip - expect) > 1e-8) {
                throw validation_error("design_sequence: basis is not orthonormal");
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (norms[i] <= 0.0) {
            throw validation_error("design_sequence: norms must be strictly positive");
        }
    }
    // The solver's mu can carry roundoff-level negatives at a block edge.
    std::vector<double> mu_clean = mu.entries();
    for (double& v : mu_clean) {
        if (v < 0.0) {
            if (v < -tol) {
                throw validation_error("design_sequence: mu entries must be nonnegative");
            }
            v = 0.0;
        }
    }
    const RealVec mu_vec(mu_clean);
    if (!majorizes(norms, mu_vec, std::max(tol, 1e-9 * (1.0 + trace(mu_vec))))) {
        throw validation_error("design_sequence: norms are not majorized by mu");
    }

    // Gram matrix with diagonal `norms` and spectrum mu (padded/truncated to
    // length k; entries past k are forced to zero by the majorization).
    const RealVec mu_desc = sort_desc(mu_vec);
    std::vector<double> spec(k, 0.0);
    for (std::size_t i = 0; i < std::min(k, d); ++i) spec[i] = mu_desc[i];
    const ComplexMatrix B = schur_horn_matrix(norms, RealVec(spec),
                                              std::max(tol, 1e-9 * (1.0 + trace(mu_vec))));
    const EigenSystem eb = eigh_ascending(B);

    // Match eigencolumns of B to mu entries by decreasing value, then carry
    // each matched column onto the corresponding basis direction.
    std::vector<std::size_t> col_desc(k);
    std::iota(col_desc.begin(), col_desc.end(), 0);
    std::stable_sort(col_desc.begin(), col_desc.end(), [&](std::size_t a, std::size_t b) {
        return eb.lambda_asc[a] > eb.lambda_asc[b];
    });
    std::vector<std::size_t> mu_order(d);
    std::iota(mu_order.begin(), mu_order.end(), 0);
    std::stable_sort(mu_order.begin(), mu_order.end(), [&](std::size_t a, std::size_t b) {
        return mu_vec[a] > mu_vec[b];
    });

    const std::size_t matched = std::min(k, d);
    VectorSequence G(d);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<cplx> g(d, cplx(0.0, 0.0));
        for (std::size_t j = 0; j < matched; ++j) {
            // A column paired with mu = 0 carries only eigensolver noise;
            // including it would leak sqrt(noise)-sized components outside
            // the intended range of the completion operator.
            if (mu_vec[mu_order[j]] <= 0.0) continue;
            const std::size_t col = col_desc[j];
            const double sigma = std::max(0.0, eb.lambda_asc[col]);
            const cplx coef = eb.basis[col][i] * std::sqrt(sigma);
            const auto& v = basis[mu_order[j]];
            for (std::size_t l = 0; l < d; ++l) g[l] += coef * v[l];
        }
        double nsq = 0.0;
        for (const cplx& z : g) nsq += std::norm(z);
        if (nsq <= 0.0) {
            throw internal_error("design_sequence: produced a zero vector for a positive norm");
        }
        const double rescale = std::sqrt(norms[i] / nsq);
        for (cplx& z : g) z *= rescale;
        G.push_back(std::move(g));
    }
    return G;
}

CompletionResult complete(const VectorSequence& F0, const RealVec& norms, double tol) {
    const EigenSystem es = eigh_ascending(frame_operator(F0));
    const ProblemData pd(es.lambda_asc, norms);
    BlockSpectrum nu = optimal_spectrum(pd, tol);
    const VectorSequence G = design_sequence(pd.norms_desc(), nu.mu(), es.basis, tol);
    return CompletionResult{G, std::move(nu)};
}

} // namespace framecomp
