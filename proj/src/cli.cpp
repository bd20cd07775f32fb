#include "framecomp/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "framecomp/completion_solver.hpp"
#include "framecomp/errors.hpp"
#include "framecomp/frame_synthesis.hpp"
#include "framecomp/majorization.hpp"
#include "framecomp/oracle.hpp"
#include "framecomp/potentials.hpp"
#include "framecomp/spectral_core.hpp"

namespace framecomp {
namespace cli {

using nlohmann::json;

namespace {

constexpr double kAuditTol = 1e-8;
constexpr double kOracleSlack = 1e-6;
constexpr double kIndependenceTol = 1e-3;

// ---------------------------------------------------------------------------
// input document

struct Document {
    std::optional<std::vector<double>> lambda;
    std::optional<std::vector<double>> norms;
    std::optional<VectorSequence> vectors;                // F0
    std::optional<std::vector<std::vector<cplx>>> basis;  // eigenbasis for lambda
    std::optional<std::vector<double>> nu_blocks;         // solution under verification
    std::vector<std::string> potentials;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> budget;
    std::optional<double> tol;
};

std::vector<double> to_real_vector(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        throw validation_error("field '" + field + "' must be a nonempty array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw validation_error("field '" + field + "' must contain only numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::vector<cplx>> to_complex_rows(const json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) {
        throw validation_error("field '" + field + "' must be a nonempty array of rows");
    }
    std::vector<std::vector<cplx>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty()) {
            throw validation_error("field '" + field + "' rows must be nonempty arrays");
        }
        std::vector<cplx> r;
        for (const auto& e : row) {
            if (e.is_number()) {
                r.emplace_back(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                r.emplace_back(e[0].get<double>(), e[1].get<double>());
            } else {
                throw validation_error("field '" + field +
                                       "' entries must be numbers or [re, im] pairs");
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Document parse_document(const json& j) {
    Document doc;
    if (!j.is_object()) throw validation_error("input document must be a JSON object");
    if (j.contains("lambda")) doc.lambda = to_real_vector(j.at("lambda"), "lambda");
    if (j.contains("norms")) doc.norms = to_real_vector(j.at("norms"), "norms");
    if (j.contains("nu_blocks")) doc.nu_blocks = to_real_vector(j.at("nu_blocks"), "nu_blocks");
    if (j.contains("vectors")) {
        auto rows = to_complex_rows(j.at("vectors"), "vectors");
        const std::size_t d = rows.front().size();
        for (const auto& r : rows) {
            if (r.size() != d) throw validation_error("'vectors' rows must share one dimension");
        }
        doc.vectors = VectorSequence(d, std::move(rows));
    }
    if (j.contains("basis")) doc.basis = to_complex_rows(j.at("basis"), "basis");
    if (j.contains("potential")) {
        const auto& p = j.at("potential");
        if (p.is_string()) {
            doc.potentials.push_back(p.get<std::string>());
        } else if (p.is_array()) {
            for (const auto& e : p) {
                if (!e.is_string()) throw validation_error("'potential' must hold strings");
                doc.potentials.push_back(e.get<std::string>());
            }
        } else {
            throw validation_error("'potential' must be a string or an array of strings");
        }
    }
    if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("budget")) doc.budget = j.at("budget").get<std::size_t>();
    if (j.contains("tol")) doc.tol = j.at("tol").get<double>();
    return doc;
}

Document load_document(const Options& opts) {
    Document doc;
    if (!opts.input_path.empty()) {
        std::ifstream in(opts.input_path);
        if (!in) throw validation_error("cannot open input file '" + opts.input_path + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw validation_error("input file '" + opts.input_path + "' is not valid JSON: " +
                                   e.what());
        }
        doc = parse_document(j);
    }
    // command-line flags take precedence over file fields
    if (!opts.lambda.empty()) doc.lambda = opts.lambda;
    if (!opts.norms.empty()) doc.norms = opts.norms;
    if (!opts.potentials.empty()) doc.potentials = opts.potentials;
    return doc;
}

// ---------------------------------------------------------------------------
// output helpers

json num(double x) { return json(round_sig(x, 12)); }

json num_array(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(num(x));
    return a;
}

json num_array(const RealVec& v) { return num_array(v.entries()); }

bool sequence_is_real(const VectorSequence& seq) {
    for (const auto& v : seq.vectors()) {
        for (const cplx& z : v) {
            if (z.imag() != 0.0) return false;
        }
    }
    return true;
}

json vectors_json(const VectorSequence& seq) {
    const bool real = sequence_is_real(seq);
    json rows = json::array();
    for (const auto& v : seq.vectors()) {
        json row = json::array();
        for (const cplx& z : v) {
            if (real) {
                row.push_back(num(z.real()));
            } else {
                row.push_back(json::array({num(z.real()), num(z.imag())}));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string vectors_csv(const VectorSequence& seq) {
    const bool real = sequence_is_real(seq);
    std::ostringstream os;
    for (const auto& v : seq.vectors()) {
        bool first = true;
        for (const cplx& z : v) {
            if (!first) os << ",";
            first = false;
            char buf[64];
            if (real) {
                std::snprintf(buf, sizeof buf, "%.12g", z.real());
                os << buf;
            } else {
                std::snprintf(buf, sizeof buf, "%.12g", z.real());
                os << buf << ",";
                std::snprintf(buf, sizeof buf, "%.12g", z.imag());
                os << buf;
            }
        }
        os << "\n";
    }
    return os.str();
}

void emit(const Options& opts, const std::string& payload, std::ostream& out) {
    if (opts.output_path.empty()) {
        out << payload;
        if (!payload.empty() && payload.back() != '\n') out << "\n";
        return;
    }
    std::ofstream f(opts.output_path);
    if (!f) throw validation_error("cannot open output file '" + opts.output_path + "'");
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << "\n";
}

void print_vec_text(std::ostream& os, const char* label, const std::vector<double>& v) {
    os << label;
    for (double x : v) os << " " << round_sig(x, 6);
    os << "\n";
}

// ---------------------------------------------------------------------------
// shared assembly steps

RealVec lambda_from_doc(const Document& doc) {
    if (doc.lambda) return RealVec(*doc.lambda);
    if (doc.vectors) return eigh_ascending(frame_operator(*doc.vectors)).lambda_asc;
    throw validation_error("provide eigenvalues via --lambda / 'lambda' or vectors via 'vectors'");
}

RealVec norms_from_doc(const Document& doc) {
    if (!doc.norms) {
        throw validation_error("prescribed norms are required (--norms or 'norms')");
    }
    return RealVec(*doc.norms);
}

// F0 realized from the document: explicit vectors, or sqrt(lambda_i) b_i for
// the nonzero eigenvalues over the given (or standard) basis.  lambda is
// taken in the caller's order so it stays paired with a supplied basis.
VectorSequence initial_sequence(const Document& doc, const RealVec& lambda_given) {
    if (doc.vectors) return *doc.vectors;
    const std::size_t d = lambda_given.size();
    std::vector<std::vector<cplx>> basis;
    if (doc.basis) {
        basis = *doc.basis;
        if (basis.size() != d) {
            throw validation_error("'basis' must hold d vectors of dimension d");
        }
        for (const auto& b : basis) {
            if (b.size() != d) throw validation_error("'basis' vectors must have dimension d");
        }
    } else {
        basis.assign(d, std::vector<cplx>(d, cplx(0.0, 0.0)));
        for (std::size_t i = 0; i < d; ++i) basis[i][i] = 1.0;
    }
    VectorSequence F0(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (lambda_given[i] <= 0.0) continue;
        std::vector<cplx> v = basis[i];
        const double w = std::sqrt(lambda_given[i]);
        for (cplx& z : v) z *= w;
        F0.push_back(std::move(v));
    }
    return F0;
}

std::vector<PotentialSpec> potentials_from(const Document& doc) {
    std::vector<PotentialSpec> out;
    if (doc.potentials.empty()) {
        out.push_back(PotentialSpec::frame_potential());
        out.push_back(PotentialSpec::power(4.0));
        out.push_back(PotentialSpec::exponential());
    } else {
        for (const std::string& name : doc.potentials) out.push_back(PotentialSpec::parse(name));
    }
    return out;
}

json solve_report(const ProblemData& pd, const BlockSpectrum& nu, std::uint64_t seed, double tol) {
    json j;
    j["command"] = "solve";
    j["seed"] = seed;
    j["tol"] = tol;
    j["dim"] = pd.dim();
    j["norm_count"] = pd.norm_count();
    j["lambda"] = num_array(pd.lambda_asc());
    j["norms"] = num_array(pd.norms_desc());
    j["total"] = num(pd.total());
    j["feasible"] = is_feasible(pd, tol);
    const ProblemData* solved = &pd;
    std::optional<ProblemData> truncated;
    if (pd.norm_count() < pd.dim()) {
        std::vector<double> head(pd.lambda_asc().entries().begin(),
                                 pd.lambda_asc().entries().begin() +
                                     static_cast<std::ptrdiff_t>(pd.norm_count()));
        truncated.emplace(RealVec(std::move(head)), pd.norms_desc());
        solved = &*truncated;
    }
    j["min_feasible_index"] = min_feasible_index(*solved, tol);
    j["block_count"] = nu.block_count();
    j["block_ends"] = nu.block_ends();
    j["block_constants"] = num_array(nu.constants());
    j["nu_blocks"] = num_array(nu.flatten());
    j["nu_ascending"] = num_array(sort_asc(nu.flatten()));
    j["nu_descending"] = num_array(sort_desc(nu.flatten()));
    j["mu"] = num_array(nu.mu());
    j["tail"] = num_array(nu.tail());
    j["diagnostics"] = nu.diagnostics();
    return j;
}

json audit_json(const StructureReport& rep) {
    json j;
    j["passed"] = rep.passed();
    j["constants"] = num_array(rep.constants);
    j["completion_blocks"] = rep.completion_blocks;
    j["eigen_blocks"] = rep.eigen_blocks;
    j["block_ranks"] = rep.block_ranks;
    j["eigen_residuals"] = num_array(rep.eigen_residuals);
    json checks = json::array();
    for (const AuditCheck& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        if (std::isfinite(c.margin)) cj["margin"] = num(c.margin);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

bool flat_majorization_min(const RealVec& nu_flat, const ProblemData& pd, std::size_t samples,
                           std::uint64_t seed, double tol) {
    const RealVec flat_desc = sort_desc(nu_flat);
    GammaSampler gs{pd.norms_desc(), pd.dim(), seed, samples};
    for (const RealVec& g : sample_gamma(gs)) {
        std::vector<double> point(pd.dim());
        for (std::size_t i = 0; i < pd.dim(); ++i) point[i] = pd.lambda_asc()[i] + g[i];
        if (!majorizes(flat_desc, RealVec(std::move(point)), tol)) return false;
    }
    return true;
}

} // namespace

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw validation_error("empty entry in number list '" + text + "'");
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw validation_error("cannot parse number '" + item + "'");
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw validation_error("cannot parse number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw validation_error("number list '" + text + "' is empty");
    return out;
}

double round_sig(double x, int digits) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
}

int cmd_solve(const Options& opts, std::ostream& out, std::ostream& err) {
    (void)err;
    const Document doc = load_document(opts);
    const double tol = doc.tol.value_or(opts.tol);
    const std::uint64_t seed = doc.seed.value_or(opts.seed);
    const ProblemData pd(lambda_from_doc(doc), norms_from_doc(doc));
    const BlockSpectrum nu = optimal_spectrum(pd, tol);

    if (opts.format == "json") {
        emit(opts, solve_report(pd, nu, seed, tol).dump(2), out);
    } else {
        std::ostringstream os;
        os << "solve  d=" << pd.dim() << "  k=" << pd.norm_count() << "  seed=" << seed
           << "  tol=" << tol << "\n";
        os << "feasible: " << (is_feasible(pd, tol) ? "yes" : "no") << "\n";
        os << "blocks (end, constant):";
        for (std::size_t j = 0; j < nu.block_count(); ++j) {
            os << " (" << nu.block_ends()[j] << ", " << round_sig(nu.constants()[j], 6) << ")";
        }
        os << "\n";
        print_vec_text(os, "nu (block order):", nu.flatten().entries());
        print_vec_text(os, "nu descending:   ", sort_desc(nu.flatten()).entries());
        print_vec_text(os, "mu:              ", nu.mu().entries());
        print_vec_text(os, "tail:            ", nu.tail());
        os << "trace: " << round_sig(trace(nu.flatten()), 6) << "\n";
        for (const std::string& dnote : nu.diagnostics()) os << "note: " << dnote << "\n";
        emit(opts, os.str(), out);
    }
    return 0;
}

int cmd_complete(const Options& opts, std::ostream& out, std::ostream& err) {
    const Document doc = load_document(opts);
    const double tol = doc.tol.value_or(opts.tol);
    const std::uint64_t seed = doc.seed.value_or(opts.seed);
    const RealVec norms = norms_from_doc(doc);
    const RealVec lambda = lambda_from_doc(doc);
    const VectorSequence F0 = initial_sequence(doc, lambda);

    const CompletionResult res = complete(F0, norms, tol);
    const VectorSequence F = VectorSequence::concat(F0, res.completion);

    // Re-audit before anything is written.
    const StructureReport rep = audit_structure(F0, res.completion, kAuditTol);
    const EigenSystem ef = eigh_ascending(frame_operator(F));
    const RealVec achieved = sort_desc(ef.lambda_asc);
    const RealVec target = sort_desc(res.spectrum.flatten());
    double spectrum_err = 0.0;
    for (std::size_t i = 0; i < achieved.size(); ++i) {
        spectrum_err = std::max(spectrum_err, std::fabs(achieved[i] - target[i]));
    }
    if (!rep.passed() || spectrum_err > kAuditTol * (1.0 + target[0])) {
        err << "completion failed its own audit (spectrum error " << spectrum_err << ")\n";
        err << audit_json(rep).dump(2) << "\n";
        return 3;
    }

    if (opts.format == "csv") {
        emit(opts, vectors_csv(F), out);
        return 0;
    }
    if (opts.format == "json") {
        const ProblemData pd(eigh_ascending(frame_operator(F0)).lambda_asc, norms);
        json j = solve_report(pd, res.spectrum, seed, tol);
        j["command"] = "complete";
        j["initial_vectors"] = vectors_json(F0);
        j["completion_vectors"] = vectors_json(res.completion);
        j["completed_vectors"] = vectors_json(F);
        j["completion_norms"] = [&] {
            std::vector<double> ns;
            for (std::size_t i = 0; i < res.completion.count(); ++i) {
                ns.push_back(res.completion.squared_norm(i));
            }
            return num_array(ns);
        }();
        j["achieved_spectrum_descending"] = num_array(achieved);
        j["spectrum_error"] = num(spectrum_err);
        j["audit"] = audit_json(rep);
        emit(opts, j.dump(2), out);
        return 0;
    }
    std::ostringstream os;
    os << "complete  d=" << F0.dim() << "  k=" << norms.size() << "  seed=" << seed << "\n";
    print_vec_text(os, "nu descending:", sort_desc(res.spectrum.flatten()).entries());
    print_vec_text(os, "achieved spectrum:", achieved.entries());
    os << "spectrum error: " << spectrum_err << "\n";
    os << "audit: " << (rep.passed() ? "pass" : "FAIL") << "\n";
    os << "completion vectors:\n" << vectors_csv(res.completion);
    emit(opts, os.str(), out);
    return 0;
}

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
    const Document doc = load_document(opts);
    const double tol = doc.tol.value_or(opts.tol);
    const std::uint64_t seed = doc.seed.value_or(opts.seed);
    const std::size_t budget = doc.budget.value_or(opts.budget);
    const ProblemData pd(lambda_from_doc(doc), norms_from_doc(doc));

    if (pd.dim() > 8 && !opts.allow_large) {
        err << "verify: d = " << pd.dim()
            << " exceeds the supported brute-force scale (d <= 8); the sampler and the\n"
            << "pair-transfer refinement are only trustworthy at desk scale. "
            << "Pass --allow-large to override.\n";
        return 1;
    }

    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;

    const BlockSpectrum solved = optimal_spectrum(pd, tol);
    const RealVec nu_flat = doc.nu_blocks ? RealVec(*doc.nu_blocks) : solved.flatten();
    if (nu_flat.size() != pd.dim()) {
        throw validation_error("'nu_blocks' must have length d");
    }

    // trace conservation
    {
        const double t = pd.total();
        const double diff = std::fabs(trace(nu_flat) - t);
        std::ostringstream os;
        os << "trace error " << diff;
        checks.push_back({"trace", diff <= std::max(tol, 1e-9) * (1.0 + std::fabs(t)), os.str()});
    }
    // membership: mu = nu - lambda must be an admissible completion spectrum
    {
        std::vector<double> mu(pd.dim());
        bool nonneg = true;
        bool desc = true;
        for (std::size_t i = 0; i < pd.dim(); ++i) {
            mu[i] = nu_flat[i] - pd.lambda_asc()[i];
            if (mu[i] < -tol) nonneg = false;
            if (i > 0 && mu[i] > mu[i - 1] + tol) desc = false;
        }
        const bool major = majorizes(pd.norms_desc(), RealVec(mu), std::max(tol, 1e-9));
        std::ostringstream os;
        os << (nonneg ? "" : "mu has negative entries; ") << (desc ? "" : "mu not nonincreasing; ")
           << (major ? "norms majorized by mu" : "norms NOT majorized by mu");
        checks.push_back({"gamma_membership", nonneg && desc && major, os.str()});
    }
    // sampled majorization minimality
    {
        const std::size_t samples = std::max<std::size_t>(budget, 100);
        const bool ok = flat_majorization_min(nu_flat, pd, samples, seed, std::max(tol, 1e-9));
        std::ostringstream os;
        os << samples << " sampled admissible spectra";
        checks.push_back({"majorization_minimal", ok, os.str()});
    }
    // oracle upper bounds and potential independence
    const std::vector<PotentialSpec> pots = potentials_from(doc);
    std::vector<RealVec> argmins;
    for (const PotentialSpec& f : pots) {
        const BruteForceResult bf = brute_force_min(pd, f, budget, seed);
        double fnu = 0.0;
        {
            std::vector<double> pt(pd.dim());
            for (std::size_t i = 0; i < pd.dim(); ++i) {
                pt[i] = std::max(0.0, nu_flat[i]);
            }
            fnu = eval_vector(f, RealVec(pt));
        }
        std::ostringstream os;
        os << "F(nu) = " << fnu << ", oracle best = " << bf.value << ", runner-up gap "
           << bf.runner_up_gap;
        checks.push_back({"oracle_" + f.name(), fnu <= bf.value + kOracleSlack, os.str()});
        std::vector<double> pt(pd.dim());
        for (std::size_t i = 0; i < pd.dim(); ++i) pt[i] = pd.lambda_asc()[i] + bf.gamma[i];
        argmins.push_back(sort_desc(RealVec(pt)));
    }
    {
        double worst = 0.0;
        const RealVec nu_desc = sort_desc(nu_flat);
        for (const RealVec& am : argmins) {
            for (std::size_t i = 0; i < am.size(); ++i) {
                worst = std::max(worst, std::fabs(am[i] - nu_desc[i]));
            }
        }
        std::ostringstream os;
        os << "max deviation of oracle argmins from nu: " << worst;
        checks.push_back({"potential_independence", worst <= kIndependenceTol, os.str()});
    }
    // structural audit of a synthesized completion
    {
        const RealVec lambda_raw = doc.lambda ? RealVec(*doc.lambda) : pd.lambda_asc();
        const VectorSequence F0 = initial_sequence(doc, lambda_raw);
        const CompletionResult res = complete(F0, pd.norms_desc(), tol);
        const StructureReport rep = audit_structure(F0, res.completion, kAuditTol);
        std::ostringstream os;
        os << rep.constants.size() << " blocks";
        for (const AuditCheck& c : rep.checks) {
            if (!c.passed) os << "; failed " << c.name;
        }
        checks.push_back({"structure_audit", rep.passed(), os.str()});
    }

    bool all = true;
    for (const Check& c : checks) all = all && c.passed;

    if (opts.format == "json") {
        json j;
        j["command"] = "verify";
        j["seed"] = seed;
        j["budget"] = budget;
        j["tol"] = tol;
        j["lambda"] = num_array(pd.lambda_asc());
        j["norms"] = num_array(pd.norms_desc());
        j["nu_blocks"] = num_array(nu_flat);
        j["passed"] = all;
        json cj = json::array();
        for (const Check& c : checks) {
            cj.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        j["checks"] = std::move(cj);
        emit(opts, j.dump(2), out);
    } else {
        std::ostringstream os;
        os << "verify  d=" << pd.dim() << "  k=" << pd.norm_count() << "  seed=" << seed
           << "  budget=" << budget << "\n";
        for (const Check& c : checks) {
            os << (c.passed ? "PASS " : "FAIL ") << c.name << "  (" << c.detail << ")\n";
        }
        os << (all ? "all checks passed" : "verification FAILED") << "\n";
        emit(opts, os.str(), out);
    }
    return all ? 0 : 2;
}

int cmd_potential(const Options& opts, std::ostream& out, std::ostream& err) {
    (void)err;
    const Document doc = load_document(opts);
    if (!doc.vectors) {
        throw validation_error("potential needs a frame: provide 'vectors' in the input file");
    }
    if (doc.potentials.empty()) {
        throw validation_error("potential name required (--potential fp|mse|exp|pow:<p>)");
    }
    const PotentialSpec f = PotentialSpec::parse(doc.potentials.front());
    const double value = eval_frame(f, *doc.vectors);

    if (opts.format == "json") {
        json j;
        j["command"] = "potential";
        j["potential"] = f.name();
        if (std::isinf(value)) {
            j["value"] = "inf";
        } else {
            j["value"] = num(value);
        }
        emit(opts, j.dump(2), out);
    } else {
        std::ostringstream os;
        if (std::isinf(value)) {
            os << "inf\n";
        } else {
            os << round_sig(value, 6) << "\n";
        }
        emit(opts, os.str(), out);
    }
    return 0;
}

} // namespace cli

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"majorization-optimal frame completions with prescribed norms"};
    app.require_subcommand(1);

    cli::Options opts;
    std::string lambda_text;
    std::string norms_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--lambda", lambda_text, "eigenvalues, comma separated");
        sub->add_option("--norms", norms_text, "prescribed squared norms, comma separated");
        sub->add_option("--input", opts.input_path, "input JSON document");
        sub->add_option("--output", opts.output_path, "output file (default stdout)");
        sub->add_option("--format", opts.format, "json | text | csv")
            ->check(CLI::IsMember({"json", "text", "csv"}));
        sub->add_option("--potential", opts.potentials,
                        "potential name(s): fp, mse, exp, pow:<p>");
        sub->add_option("--seed", opts.seed, "random seed (default 42)");
        sub->add_option("--budget", opts.budget, "oracle sampling budget (default 2000)");
        sub->add_option("--tol", opts.tol, "comparison tolerance (default 1e-9)");
        sub->add_flag("--allow-large", opts.allow_large, "lift the d <= 8 verification cap");
    };

    CLI::App* solve = app.add_subcommand("solve", "compute the optimal completion spectrum");
    CLI::App* completec = app.add_subcommand("complete", "synthesize an optimal completion");
    CLI::App* verify = app.add_subcommand("verify", "check a solution against the oracle");
    CLI::App* potential = app.add_subcommand("potential", "evaluate a convex potential on a frame");
    for (CLI::App* sub : {solve, completec, verify, potential}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (!lambda_text.empty()) opts.lambda = cli::parse_number_list(lambda_text);
        if (!norms_text.empty()) opts.norms = cli::parse_number_list(norms_text);
        if (solve->parsed()) return cli::cmd_solve(opts, std::cout, std::cerr);
        if (completec->parsed()) return cli::cmd_complete(opts, std::cout, std::cerr);
        if (verify->parsed()) return cli::cmd_verify(opts, std::cout, std::cerr);
        if (potential->parsed()) return cli::cmd_potential(opts, std::cout, std::cerr);
        return 1;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace framecomp
