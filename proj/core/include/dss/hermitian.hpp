#pragma once

#include <complex>
#include <span>
#include <vector>

namespace dss {

using cdouble = std::complex<double>;
using cvector = std::vector<cdouble>;

/// Dense complex Hermitian matrix. Mutation goes through set(), which writes
/// both (i,j) and its conjugate at (j,i), so the Hermiticity invariant holds
/// by construction. Raw data can be validated via from_entries().
class HermitianMatrix {
public:
    explicit HermitianMatrix(int dim);

    /// Builds from row-major entries, rejecting matrices whose conjugate
    /// asymmetry exceeds 1e-12 (relative to the largest entry).
    static HermitianMatrix from_entries(int dim, cvector entries);

    int dim() const noexcept { return dim_; }

    cdouble operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    /// Sets entry (i,j) to v and (j,i) to conj(v). Diagonal entries must be
    /// real within 1e-12.
    void set(int i, int j, cdouble v);

    double trace() const;

    /// this += weight * |v><v|
    void add_scaled_outer(std::span<const cdouble> v, double weight);

    HermitianMatrix& operator+=(const HermitianMatrix& other);
    HermitianMatrix& operator-=(const HermitianMatrix& other);
    HermitianMatrix& operator*=(double scale);

    cvector apply(std::span<const cdouble> v) const;

    /// Largest |entry| difference, used by tests as a matrix metric.
    double max_abs_diff(const HermitianMatrix& other) const;

    const cvector& entries() const noexcept { return entries_; }

    static constexpr double kHermiticityTol = 1e-12;

private:
    int dim_;
    cvector entries_; // row-major
};

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<cvector> eigenvectors; // eigenvectors[j] pairs with eigenvalues[j]
};

/// Full eigendecomposition h = V diag(w) V^dagger with ascending eigenvalues.
/// Throws std::domain_error if h fails the Hermiticity check.
EighResult eigh(const HermitianMatrix& h);

/// Moore-Penrose pseudoinverse for Hermitian input: eigenvalues with
/// |w| <= rank_tol * max|w| are treated as exact zeros and excluded from the
/// inverted support.
HermitianMatrix pseudoinverse(const HermitianMatrix& h, double rank_tol = 1e-10);

/// Number of eigenvalues above tol in magnitude.
int rank_of(const HermitianMatrix& h, double tol = 1e-10);

double min_eigenvalue(const HermitianMatrix& h);

/// Partial transpose on the first tensor factor of a dim_a x dim_b product
/// structure: out[(a,j),(b,k)] = in[(b,j),(a,k)].
HermitianMatrix partial_transpose_first(const HermitianMatrix& h, int dim_a,
                                        int dim_b);

/// Partial transpose on the second factor: out[(a,j),(b,k)] = in[(a,k),(b,j)].
HermitianMatrix partial_transpose_second(const HermitianMatrix& h, int dim_a,
                                         int dim_b);

} // namespace dss
