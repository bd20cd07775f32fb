#include "framecomp/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace framecomp {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) {
        throw validation_error("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw validation_error("ComplexMatrix: shape mismatch in +");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw validation_error("ComplexMatrix: shape mismatch in -");
    }
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) {
        throw validation_error("ComplexMatrix: shape mismatch in *");
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermitian_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return m;
}

VectorSequence::VectorSequence(std::size_t dim, std::vector<std::vector<cplx>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw validation_error("VectorSequence: dimension must be positive");
    for (const auto& v : vectors_) {
        if (v.size() != dim_) {
            throw validation_error("VectorSequence: vector dimension mismatch");
        }
    }
}

VectorSequence::VectorSequence(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw validation_error("VectorSequence: dimension must be positive");
}

VectorSequence VectorSequence::from_real_rows(std::size_t dim,
                                              const std::vector<std::vector<double>>& rows) {
    std::vector<std::vector<cplx>> vs;
    vs.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<cplx> v(r.begin(), r.end());
        vs.push_back(std::move(v));
    }
    return VectorSequence(dim, std::move(vs));
}

void VectorSequence::push_back(std::vector<cplx> v) {
    if (v.size() != dim_) throw validation_error("VectorSequence: vector dimension mismatch");
    vectors_.push_back(std::move(v));
}

VectorSequence VectorSequence::concat(const VectorSequence& a, const VectorSequence& b) {
    if (a.dim() != b.dim()) throw validation_error("VectorSequence: concat dimension mismatch");
    std::vector<std::vector<cplx>> vs = a.vectors_;
    vs.insert(vs.end(), b.vectors_.begin(), b.vectors_.end());
    return VectorSequence(a.dim(), std::move(vs));
}

double VectorSequence::squared_norm(std::size_t i) const {
    double s = 0.0;
    for (const cplx& z : vectors_[i]) s += std::norm(z);
    return s;
}

ComplexMatrix frame_operator(const VectorSequence& F) {
    const std::size_t d = F.dim();
    ComplexMatrix S(d, d);
    for (std::size_t n = 0; n < F.count(); ++n) {
        const auto& f = F[n];
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                S(i, j) += f[i] * std::conj(f[j]);
            }
        }
    }
    // Outer products give exact Hermitian symmetry up to conjugation noise;
    // enforce it so downstream checks see a clean operator.
    for (std::size_t i = 0; i < d; ++i) {
        S(i, i) = cplx(S(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < d; ++j) {
            const cplx avg = 0.5 * (S(i, j) + std::conj(S(j, i)));
            S(i, j) = avg;
            S(j, i) = std::conj(avg);
        }
    }
    return S;
}

ComplexMatrix gram(const VectorSequence& F) {
    if (F.empty()) throw validation_error("gram: sequence must be nonempty");
    const std::size_t n = F.count();
    ComplexMatrix G(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx s(0.0, 0.0);
            for (std::size_t l = 0; l < F.dim(); ++l) {
                s += F[j][l] * std::conj(F[i][l]);
            }
            G(i, j) = s;
        }
    }
    return G;
}

namespace {

double offdiag_frobenius(const ComplexMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (i != j) s += std::norm(A(i, j));
        }
    }
    return std::sqrt(s);
}

double frobenius(const ComplexMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += std::norm(A(i, j));
    return std::sqrt(s);
}

} // namespace

EigenSystem eigh_ascending(const ComplexMatrix& S) {
    if (S.rows() != S.cols()) {
        throw validation_error("eigh_ascending: matrix must be square");
    }
    const std::size_t d = S.rows();
    const double scale = std::max(1.0, S.max_abs());
    if (S.hermitian_defect() > 1e-10 * scale) {
        throw validation_error("eigh_ascending: matrix is not Hermitian");
    }

    // Work on the symmetrized copy; accumulate rotations in V.
    ComplexMatrix A(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            A(i, j) = 0.5 * (S(i, j) + std::conj(S(j, i)));
    ComplexMatrix V = ComplexMatrix::identity(d);

    const double stop = 1e-12 * std::max(1.0, frobenius(A));
    const int max_sweeps = 100;
    bool converged = (d == 1) || offdiag_frobenius(A) <= stop;

    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < d; ++p) {
            for (std::size_t q = p + 1; q < d; ++q) {
                const cplx apq = A(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                // Phase that makes the pivot real, then a classical real
                // Jacobi rotation on [[app, g], [g, aqq]].
                const cplx phase = apq / g;
                const double tau = (aqq - app) / (2.0 * g);
                double t;
                if (std::isinf(tau)) {
                    t = 0.0;
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx jpp = phase * c;
                const cplx jpq = phase * s;
                const cplx jqp = -s;
                const cplx jqq = c;

                // A <- J* A J, applied as column then row combinations.
                for (std::size_t i = 0; i < d; ++i) {
                    const cplx aip = A(i, p);
                    const cplx aiq = A(i, q);
                    A(i, p) = aip * jpp + aiq * jqp;
                    A(i, q) = aip * jpq + aiq * jqq;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    const cplx apj = A(p, j);
                    const cplx aqj = A(q, j);
                    A(p, j) = std::conj(jpp) * apj + std::conj(jqp) * aqj;
                    A(q, j) = std::conj(jpq) * apj + std::conj(jqq) * aqj;
                }
                A(p, q) = A(q, p) = 0.0;
                A(p, p) = cplx(A(p, p).real(), 0.0);
                A(q, q) = cplx(A(q, q).real(), 0.0);

                for (std::size_t i = 0; i < d; ++i) {
                    const cplx vip = V(i, p);
                    const cplx viq = V(i, q);
                    V(i, p) = vip * jpp + viq * jqp;
                    V(i, q) = vip * jpq + viq * jqq;
                }
            }
        }
        converged = offdiag_frobenius(A) <= stop;
    }
    if (!converged) {
        throw internal_error("eigh_ascending: Jacobi sweeps did not converge");
    }

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return A(a, a).real() < A(b, b).real();
    });

    std::vector<double> vals(d);
    std::vector<std::vector<cplx>> basis(d, std::vector<cplx>(d));
    for (std::size_t idx = 0; idx < d; ++idx) {
        const std::size_t col = order[idx];
        double lam = A(col, col).real();
        if (lam < 0.0 && lam >= -1e-12) lam = 0.0;
        vals[idx] = lam;
        for (std::size_t i = 0; i < d; ++i) basis[idx][i] = V(i, col);
    }
    return EigenSystem{RealVec(std::move(vals)), std::move(basis)};
}

bool is_frame(const VectorSequence& F, double tol) {
    const EigenSystem es = eigh_ascending(frame_operator(F));
    return es.lambda_asc[0] > tol;
}

} // namespace framecomp
