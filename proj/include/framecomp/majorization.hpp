#ifndef FRAMECOMP_MAJORIZATION_HPP
#define FRAMECOMP_MAJORIZATION_HPP

#include <cstddef>
#include <vector>

#include "framecomp/errors.hpp"

namespace framecomp {

/// Default comparison tolerance for the order predicates below.  Partial sums
/// of doubles are not exact, so every predicate takes a slack.
inline constexpr double kDefaultTol = 1e-9;

/// A finite real vector of length >= 1.  Entries are validated at
/// construction: NaN or infinite values are rejected.
class RealVec {
public:
    explicit RealVec(std::vector<double> entries);
    RealVec(std::initializer_list<double> entries);

    /// n copies of `value`.
    static RealVec constant(std::size_t n, double value);

    std::size_t size() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    bool operator==(const RealVec& other) const { return entries_ == other.entries_; }

private:
    std::vector<double> entries_;
};

/// Rearrangement in decreasing order (x \downarrow).  Idempotent.
RealVec sort_desc(const RealVec& x);

/// Rearrangement in increasing order (x \uparrow).  Idempotent.
RealVec sort_asc(const RealVec& x);

/// Sum of entries.
double trace(const RealVec& x);

/// True iff x is submajorized by y: every prefix sum of x sorted decreasingly
/// is at most the corresponding prefix sum of y, within tol.  Vectors of
/// different lengths are compared after zero-padding the shorter one.
bool submajorizes(const RealVec& x, const RealVec& y, double tol = kDefaultTol);

/// True iff x is majorized by y: submajorized and equal traces within tol.
bool majorizes(const RealVec& x, const RealVec& y, double tol = kDefaultTol);

/// True iff x is majorized by y but y is not majorized by x.
bool strictly_majorizes(const RealVec& x, const RealVec& y, double tol = kDefaultTol);

/// Entrywise comparison x_i <= y_i.  Lengths must match; a mismatch is a
/// caller bug and throws.
bool entrywise_leq(const RealVec& x, const RealVec& y);

} // namespace framecomp

#endif
