#include "dss/hermitian.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dss {

namespace {

using EigenCMat =
    Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

double max_abs_entry(const cvector& entries) {
    double m = 0.0;
    for (const cdouble& e : entries) m = std::max(m, std::abs(e));
    return m;
}

void check_hermitian(int dim, const cvector& entries) {
    const double scale = std::max(1.0, max_abs_entry(entries));
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            const cdouble a = entries[static_cast<std::size_t>(i) * dim + j];
            const cdouble b = entries[static_cast<std::size_t>(j) * dim + i];
            if (std::abs(a - std::conj(b)) > HermitianMatrix::kHermiticityTol * scale) {
                throw std::domain_error("matrix is not Hermitian at (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            }
        }
    }
}

} // namespace

HermitianMatrix::HermitianMatrix(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("HermitianMatrix: dim must be positive");
    entries_.assign(static_cast<std::size_t>(dim) * dim, cdouble{0.0, 0.0});
}

HermitianMatrix HermitianMatrix::from_entries(int dim, cvector entries) {
    if (entries.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("HermitianMatrix: entry count mismatch");
    }
    check_hermitian(dim, entries);
    HermitianMatrix h(dim);
    h.entries_ = std::move(entries);
    // symmetrize away rounding dust so the invariant holds exactly
    for (int i = 0; i < dim; ++i) {
        h.entries_[static_cast<std::size_t>(i) * dim + i] =
            cdouble{h.entries_[static_cast<std::size_t>(i) * dim + i].real(), 0.0};
        for (int j = i + 1; j < dim; ++j) {
            const cdouble avg =
                0.5 * (h.entries_[static_cast<std::size_t>(i) * dim + j] +
                       std::conj(h.entries_[static_cast<std::size_t>(j) * dim + i]));
            h.entries_[static_cast<std::size_t>(i) * dim + j] = avg;
            h.entries_[static_cast<std::size_t>(j) * dim + i] = std::conj(avg);
        }
    }
    return h;
}

void HermitianMatrix::set(int i, int j, cdouble v) {
    if (i == j && std::abs(v.imag()) > kHermiticityTol * std::max(1.0, std::abs(v))) {
        throw std::domain_error("HermitianMatrix: diagonal entry must be real");
    }
    if (i == j) v = cdouble{v.real(), 0.0};
    entries_[static_cast<std::size_t>(i) * dim_ + j] = v;
    entries_[static_cast<std::size_t>(j) * dim_ + i] = std::conj(v);
}

double HermitianMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) {
        t += entries_[static_cast<std::size_t>(i) * dim_ + i].real();
    }
    return t;
}

void HermitianMatrix::add_scaled_outer(std::span<const cdouble> v, double weight) {
    if (v.size() != static_cast<std::size_t>(dim_)) {
        throw std::invalid_argument("add_scaled_outer: vector length mismatch");
    }
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            entries_[static_cast<std::size_t>(i) * dim_ + j] +=
                weight * v[static_cast<std::size_t>(i)] *
                std::conj(v[static_cast<std::size_t>(j)]);
        }
    }
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scale) {
    for (cdouble& e : entries_) e *= scale;
    return *this;
}

cvector HermitianMatrix::apply(std::span<const cdouble> v) const {
    if (v.size() != static_cast<std::size_t>(dim_)) {
        throw std::invalid_argument("apply: vector length mismatch");
    }
    cvector out(static_cast<std::size_t>(dim_), cdouble{0.0, 0.0});
    for (int i = 0; i < dim_; ++i) {
        cdouble acc{0.0, 0.0};
        for (int j = 0; j < dim_; ++j) {
            acc += entries_[static_cast<std::size_t>(i) * dim_ + j] *
                   v[static_cast<std::size_t>(j)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

double HermitianMatrix::max_abs_diff(const HermitianMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

EighResult eigh(const HermitianMatrix& h) {
    check_hermitian(h.dim(), h.entries());
    const int d = h.dim();
    Eigen::Map<const EigenCMat> m(h.entries().data(), d, d);
    Eigen::SelfAdjointEigenSolver<EigenCMat> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigensolver did not converge");
    }
    EighResult out;
    out.eigenvalues.resize(static_cast<std::size_t>(d));
    out.eigenvectors.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = solver.eigenvalues()(j);
        cvector v(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, j);
        out.eigenvectors[static_cast<std::size_t>(j)] = std::move(v);
    }
    return out;
}

HermitianMatrix pseudoinverse(const HermitianMatrix& h, double rank_tol) {
    const EighResult ed = eigh(h);
    double wmax = 0.0;
    for (double w : ed.eigenvalues) wmax = std::max(wmax, std::abs(w));
    HermitianMatrix out(h.dim());
    if (wmax == 0.0) return out;
    const double cutoff = rank_tol * wmax;
    for (std::size_t j = 0; j < ed.eigenvalues.size(); ++j) {
        const double w = ed.eigenvalues[j];
        if (std::abs(w) > cutoff) {
            out.add_scaled_outer(ed.eigenvectors[j], 1.0 / w);
        }
    }
    return out;
}

int rank_of(const HermitianMatrix& h, double tol) {
    const EighResult ed = eigh(h);
    double wmax = 0.0;
    for (double w : ed.eigenvalues) wmax = std::max(wmax, std::abs(w));
    if (wmax == 0.0) return 0;
    int r = 0;
    for (double w : ed.eigenvalues) {
        if (std::abs(w) > tol * std::max(1.0, wmax)) ++r;
    }
    return r;
}

double min_eigenvalue(const HermitianMatrix& h) {
    return eigh(h).eigenvalues.front();
}

HermitianMatrix partial_transpose_first(const HermitianMatrix& h, int dim_a,
                                        int dim_b) {
    if (h.dim() != dim_a * dim_b) {
        throw std::invalid_argument("partial_transpose_first: dimension mismatch");
    }
    const int d = h.dim();
    cvector entries(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < dim_a; ++a)
        for (int j = 0; j < dim_b; ++j)
            for (int b = 0; b < dim_a; ++b)
                for (int k = 0; k < dim_b; ++k) {
                    entries[static_cast<std::size_t>(a * dim_b + j) * d +
                            (b * dim_b + k)] = h(b * dim_b + j, a * dim_b + k);
                }
    return HermitianMatrix::from_entries(d, std::move(entries));
}

HermitianMatrix partial_transpose_second(const HermitianMatrix& h, int dim_a,
                                         int dim_b) {
    if (h.dim() != dim_a * dim_b) {
        throw std::invalid_argument("partial_transpose_second: dimension mismatch");
    }
    const int d = h.dim();
    cvector entries(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < dim_a; ++a)
        for (int j = 0; j < dim_b; ++j)
            for (int b = 0; b < dim_a; ++b)
                for (int k = 0; k < dim_b; ++k) {
                    entries[static_cast<std::size_t>(a * dim_b + j) * d +
                            (b * dim_b + k)] = h(a * dim_b + k, b * dim_b + j);
                }
    return HermitianMatrix::from_entries(d, std::move(entries));
}

} // namespace dss
