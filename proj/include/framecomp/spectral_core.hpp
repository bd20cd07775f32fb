#ifndef FRAMECOMP_SPECTRAL_CORE_HPP
#define FRAMECOMP_SPECTRAL_CORE_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "framecomp/errors.hpp"
#include "framecomp/majorization.hpp"

namespace framecomp {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;

    ComplexMatrix adjoint() const;

    /// max_{ij} |a_ij|
    double max_abs() const;

    /// max_{ij} |a_ij - conj(a_ji)|
    double hermitian_defect() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> data_;
};

/// An ordered list of vectors of a common dimension d (a frame candidate or a
/// completion).  The dimension is stored explicitly so the empty sequence in
/// C^d is representable.
class VectorSequence {
public:
    VectorSequence(std::size_t dim, std::vector<std::vector<cplx>> vectors);

    /// Empty sequence in C^dim.
    explicit VectorSequence(std::size_t dim);

    /// Build from real coordinates, one vector per row.
    static VectorSequence from_real_rows(std::size_t dim,
                                         const std::vector<std::vector<double>>& rows);

    std::size_t dim() const { return dim_; }
    std::size_t count() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const std::vector<cplx>& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<std::vector<cplx>>& vectors() const { return vectors_; }

    void push_back(std::vector<cplx> v);

    /// Juxtaposition (F0, G).
    static VectorSequence concat(const VectorSequence& a, const VectorSequence& b);

    double squared_norm(std::size_t i) const;

private:
    std::size_t dim_;
    std::vector<std::vector<cplx>> vectors_;
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending and an
/// orthonormal basis of eigenvectors (basis[i] belongs to lambda_asc[i]).
struct EigenSystem {
    RealVec lambda_asc;
    std::vector<std::vector<cplx>> basis;
};

/// Frame operator S_F = sum_i f_i (x) f_i, a d x d Hermitian PSD matrix.
/// The empty sequence yields the zero operator.
ComplexMatrix frame_operator(const VectorSequence& F);

/// Gram matrix, n x n with entries <f_j, f_i>.  Shares its nonzero spectrum
/// with the frame operator.  Requires a nonempty sequence.
ComplexMatrix gram(const VectorSequence& F);

/// Cyclic Jacobi eigensolver for Hermitian matrices.  Deterministic for a
/// fixed input; eigenvalues negative within 1e-12 of zero are clamped to 0.
/// Throws validation_error on non-Hermitian input and internal_error if the
/// sweep cap is hit before the off-diagonal mass vanishes.
EigenSystem eigh_ascending(const ComplexMatrix& S);

/// True iff F spans C^d, tested as lambda_min(S_F) > tol.
bool is_frame(const VectorSequence& F, double tol);

} // namespace framecomp

#endif
