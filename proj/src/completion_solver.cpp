#include "framecomp/completion_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace framecomp {

ProblemData::ProblemData(const RealVec& lambda, const RealVec& norms)
    : lambda_asc_(sort_asc(lambda)), norms_desc_(sort_desc(norms)) {
    for (std::size_t i = 0; i < lambda_asc_.size(); ++i) {
        if (lambda_asc_[i] < 0.0) {
            throw validation_error("ProblemData: lambda entries must be nonnegative");
        }
    }
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < lambda_asc_.size(); ++i) {
        if (lambda_asc_[i] > 0.0) ++nonzero;
    }
    for (std::size_t i = 0; i < norms_desc_.size(); ++i) {
        if (norms_desc_[i] <= 0.0) {
            throw validation_error("ProblemData: norms must be strictly positive");
        }
    }
    const std::size_t d = lambda_asc_.size();
    const std::size_t k = norms_desc_.size();
    if (d - nonzero > k) {
        std::ostringstream os;
        os << "ProblemData: rank deficiency " << (d - nonzero) << " exceeds the number of norms "
           << k << "; the completed sequence cannot span the space";
        throw validation_error(os.str());
    }
    lambda_prefix_.assign(d + 1, 0.0);
    for (std::size_t i = 0; i < d; ++i) lambda_prefix_[i + 1] = lambda_prefix_[i] + lambda_asc_[i];
    norms_prefix_.assign(k + 1, 0.0);
    for (std::size_t i = 0; i < k; ++i) norms_prefix_[i + 1] = norms_prefix_[i] + norms_desc_[i];
}

BlockSpectrum::BlockSpectrum(std::vector<std::size_t> block_ends, std::vector<double> constants,
                             RealVec lambda_asc, std::vector<std::string> diagnostics)
    : block_ends_(std::move(block_ends)),
      constants_(std::move(constants)),
      lambda_asc_(std::move(lambda_asc)),
      diagnostics_(std::move(diagnostics)) {
    if (block_ends_.empty() || block_ends_.size() != constants_.size()) {
        throw validation_error("BlockSpectrum: block ends and constants must align");
    }
    std::size_t prev = 0;
    for (std::size_t e : block_ends_) {
        if (e <= prev || e > lambda_asc_.size()) {
            throw validation_error("BlockSpectrum: block ends must be strictly increasing in [1, d]");
        }
        prev = e;
    }
}

std::vector<double> BlockSpectrum::tail() const {
    std::vector<double> out;
    for (std::size_t i = block_ends_.back(); i < lambda_asc_.size(); ++i) {
        out.push_back(lambda_asc_[i]);
    }
    return out;
}

RealVec BlockSpectrum::flatten() const {
    std::vector<double> out;
    out.reserve(lambda_asc_.size());
    std::size_t prev = 0;
    for (std::size_t j = 0; j < constants_.size(); ++j) {
        for (std::size_t i = prev; i < block_ends_[j]; ++i) out.push_back(constants_[j]);
        prev = block_ends_[j];
    }
    for (std::size_t i = prev; i < lambda_asc_.size(); ++i) out.push_back(lambda_asc_[i]);
    return RealVec(std::move(out));
}

RealVec BlockSpectrum::mu() const {
    const RealVec flat = flatten();
    std::vector<double> out(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i) out[i] = flat[i] - lambda_asc_[i];
    return RealVec(std::move(out));
}

double final_average(const ProblemData& pd, std::size_t j, std::size_t r) {
    const std::size_t d = pd.dim();
    const std::size_t k = pd.norm_count();
    if (k < d) throw validation_error("final_average: requires k >= d");
    if (!(j < r && r <= d)) throw validation_error("final_average: need 0 <= j < r <= d");
    const double norm_tail = pd.norms_prefix(k) - pd.norms_prefix(j);
    const double lambda_mid = pd.lambda_prefix(r) - pd.lambda_prefix(j);
    return (norm_tail + lambda_mid) / static_cast<double>(r - j);
}

double initial_average(const ProblemData& pd, std::size_t j, std::size_t r) {
    const std::size_t m = std::min(pd.dim(), pd.norm_count());
    if (!(j >= 1 && j <= r && r <= m)) {
        throw validation_error("initial_average: need 1 <= j <= r <= min(d, k)");
    }
    const double s = (pd.lambda_prefix(r) - pd.lambda_prefix(j - 1)) +
                     (pd.norms_prefix(r) - pd.norms_prefix(j - 1));
    return s / static_cast<double>(r - j + 1);
}

namespace {

// Feasible-case solution of the truncated pair (lambda_{s+1..d}, a_{s+1..k})
// expressed against the full problem's prefix sums.  Requires k >= d and
// 0 <= s <= d-1.  The block covers indexes (s, cut] at `constant`.
struct SuffixSolution {
    std::size_t cut;
    double constant;
    bool uniform;
};

SuffixSolution solve_suffix(const ProblemData& pd, std::size_t s, double tol) {
    const std::size_t d = pd.dim();
    const std::size_t k = pd.norm_count();
    const double total_s = (pd.lambda_prefix(d) - pd.lambda_prefix(s)) +
                           (pd.norms_prefix(k) - pd.norms_prefix(s));
    const double lam_top = pd.lambda_asc()[d - 1];
    const double mean = total_s / static_cast<double>(d - s);
    if (mean >= lam_top) {
        return SuffixSolution{d, mean, true};
    }

    // Bracketed branch: minimize the final averages Q_{s,w} over w in (s, d],
    // then take the largest w <= d-1 attaining the minimum within tol.
    double qmin = mean;  // w = d term
    for (std::size_t w = s + 1; w < d; ++w) {
        qmin = std::min(qmin, final_average(pd, s, w));
    }
    std::size_t cut = 0;
    double constant = 0.0;
    for (std::size_t w = d - 1; w > s; --w) {
        const double q = final_average(pd, s, w);
        if (q <= qmin + tol) {
            cut = w;
            constant = q;
            break;
        }
    }
    if (cut == 0) {
        throw internal_error("solve_suffix: no bracketing index found (tolerance breakdown)");
    }
    const double left = pd.lambda_asc()[cut - 1];
    const double right = pd.lambda_asc()[cut];  // cut <= d-1 here
    if (left > constant + tol || constant > right + tol) {
        throw internal_error("solve_suffix: bracketing lambda_s <= Q_s < lambda_{s+1} violated");
    }
    return SuffixSolution{cut, constant, false};
}

// a_{s+1..k} majorized by mu of the suffix solution, checked without
// materializing either vector.
bool suffix_pair_feasible(const ProblemData& pd, std::size_t s, double tol) {
    const SuffixSolution sol = solve_suffix(pd, s, tol);
    const std::size_t k = pd.norm_count();
    // mu entries: constant - lambda_i for i in (s, cut], then zeros.  This is
    // already nonincreasing because lambda is ascending.
    double sum_a = 0.0;
    double sum_mu = 0.0;
    for (std::size_t m = 1; m <= k - s; ++m) {
        sum_a += pd.norms_desc()[s + m - 1];
        if (m <= sol.cut - s) {
            sum_mu += sol.constant - pd.lambda_asc()[s + m - 1];
        }
        if (sum_a > sum_mu + tol) return false;
    }
    const double trace_a = pd.norms_prefix(k) - pd.norms_prefix(s);
    const double trace_mu = static_cast<double>(sol.cut - s) * sol.constant -
                            (pd.lambda_prefix(sol.cut) - pd.lambda_prefix(s));
    return std::fabs(trace_a - trace_mu) <= tol;
}

} // namespace

FeasibleSpectrum feasible_case_spectrum(const ProblemData& pd, double tol) {
    const std::size_t d = pd.dim();
    if (pd.norm_count() < d) {
        throw validation_error("feasible_case_spectrum: requires k >= d");
    }
    const SuffixSolution sol = solve_suffix(pd, 0, tol);
    std::vector<double> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = (i < sol.cut) ? sol.constant : pd.lambda_asc()[i];
    }
    return FeasibleSpectrum{sol.cut, sol.constant, RealVec(std::move(out))};
}

RealVec feasible_spectrum_general(const ProblemData& pd, double tol) {
    const std::size_t d = pd.dim();
    const std::size_t k = pd.norm_count();
    if (k >= d) {
        return feasible_case_spectrum(pd, tol).result;
    }
    std::vector<double> head(pd.lambda_asc().entries().begin(),
                             pd.lambda_asc().entries().begin() + static_cast<std::ptrdiff_t>(k));
    const ProblemData truncated(RealVec(std::move(head)), pd.norms_desc());
    const RealVec inner = feasible_case_spectrum(truncated, tol).result;
    std::vector<double> out = inner.entries();
    for (std::size_t i = k; i < d; ++i) out.push_back(pd.lambda_asc()[i]);
    return RealVec(std::move(out));
}

RealVec mu_of(const ProblemData& pd, double tol) {
    const RealVec nu = feasible_spectrum_general(pd, tol);
    std::vector<double> out(nu.size());
    for (std::size_t i = 0; i < nu.size(); ++i) out[i] = nu[i] - pd.lambda_asc()[i];
    return RealVec(std::move(out));
}

bool is_feasible(const ProblemData& pd, double tol) {
    const std::size_t d = pd.dim();
    const std::size_t k = pd.norm_count();
    if (k >= d) {
        return suffix_pair_feasible(pd, 0, tol);
    }
    std::vector<double> head(pd.lambda_asc().entries().begin(),
                             pd.lambda_asc().entries().begin() + static_cast<std::ptrdiff_t>(k));
    const ProblemData truncated(RealVec(std::move(head)), pd.norms_desc());
    return suffix_pair_feasible(truncated, 0, tol);
}

bool is_feasible_index(const ProblemData& pd, std::size_t s, double tol) {
    if (pd.norm_count() < pd.dim()) {
        throw validation_error("is_feasible_index: requires k >= d");
    }
    if (s >= pd.dim()) {
        throw validation_error("is_feasible_index: need 0 <= s <= d-1");
    }
    return suffix_pair_feasible(pd, s, tol);
}

std::size_t min_feasible_index(const ProblemData& pd, double tol) {
    if (pd.norm_count() < pd.dim()) {
        throw validation_error("min_feasible_index: requires k >= d");
    }
    for (std::size_t s = 0; s < pd.dim(); ++s) {
        if (suffix_pair_feasible(pd, s, tol)) return s;
    }
    // s = d-1 truncates to a single eigenvalue, which is always feasible.
    throw internal_error("min_feasible_index: no feasible index found");
}

BlockSpectrum optimal_spectrum(const ProblemData& pd, double tol) {
    const std::size_t d = pd.dim();
    const std::size_t k = pd.norm_count();
    if (k < d) {
        // Completion mass can only reach the k smallest eigenvalues; solve on
        // the truncation and let the remaining eigenvalues pass through.
        std::vector<double> head(pd.lambda_asc().entries().begin(),
                                 pd.lambda_asc().entries().begin() + static_cast<std::ptrdiff_t>(k));
        const ProblemData truncated(RealVec(std::move(head)), pd.norms_desc());
        const BlockSpectrum inner = optimal_spectrum(truncated, tol);
        return BlockSpectrum(inner.block_ends(), inner.constants(), pd.lambda_asc(),
                             inner.diagnostics());
    }

    const std::size_t s_star = min_feasible_index(pd, tol);
    std::vector<std::size_t> ends;
    std::vector<double> constants;
    std::vector<std::string> diagnostics;

    std::size_t sj = 0;
    while (sj < s_star) {
        // Largest r in (sj, s_star] attaining the maximal initial average.
        double pmax = initial_average(pd, sj + 1, sj + 1);
        for (std::size_t r = sj + 2; r <= s_star; ++r) {
            pmax = std::max(pmax, initial_average(pd, sj + 1, r));
        }
        std::size_t pick = 0;
        std::size_t near_ties = 0;
        for (std::size_t r = s_star; r > sj; --r) {
            const double p = initial_average(pd, sj + 1, r);
            if (p >= pmax - tol && pick == 0) pick = r;
            if (p >= pmax - 10.0 * tol) ++near_ties;
        }
        const std::size_t exact_ties = [&] {
            std::size_t n = 0;
            for (std::size_t r = sj + 1; r <= s_star; ++r) {
                if (initial_average(pd, sj + 1, r) >= pmax - tol) ++n;
            }
            return n;
        }();
        if (near_ties > exact_ties) {
            std::ostringstream os;
            os << "near-tie among initial averages on (" << sj << ", " << s_star
               << "]: " << near_ties << " candidates within 10*tol of the maximum, block end "
               << pick << " chosen by the max-index rule";
            diagnostics.push_back(os.str());
        }
        ends.push_back(pick);
        constants.push_back(initial_average(pd, sj + 1, pick));
        sj = pick;
    }

    const SuffixSolution last = solve_suffix(pd, s_star, tol);
    ends.push_back(last.cut);
    constants.push_back(last.constant);

    for (std::size_t j = 0; j + 1 < constants.size(); ++j) {
        if (!(constants[j] > constants[j + 1])) {
            throw internal_error("optimal_spectrum: block constants fail strict descent");
        }
        if (constants[j] - constants[j + 1] <= tol) {
            std::ostringstream os;
            os << "block constants c_" << (j + 1) << " and c_" << (j + 2)
               << " are separated by less than tol";
            diagnostics.push_back(os.str());
        }
    }
    if (constants.back() <= 0.0) {
        throw internal_error("optimal_spectrum: final block constant must be positive");
    }

    return BlockSpectrum(std::move(ends), std::move(constants), pd.lambda_asc(),
                         std::move(diagnostics));
}

} // namespace framecomp
