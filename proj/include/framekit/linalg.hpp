#ifndef FRAMEKIT_LINALG_HPP
#define FRAMEKIT_LINALG_HPP

// Dense complex linear-algebra primitives. Eigen supplies storage and the
// eigen/SVD kernels; this header adds the rank policy, deterministic phase
// normalization, compensated norms and Haar sampling.

#include <framekit/error.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>

namespace framekit {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical policy shared by every operation.
///
/// `rank_rel_tol` is the relative singular-value cutoff: a singular value
/// counts towards the rank iff it exceeds rank_rel_tol * sigma_max.
/// `eq_abs_tol` is the absolute tolerance for equality-style checks
/// (hermiticity, tightness, kernel equality, violation threshold).
struct Tolerance {
    double rank_rel_tol = 1e-10;
    double eq_abs_tol = 1e-9;

    void validate() const {
        auto ok = [](double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; };
        if (!ok(rank_rel_tol) || !ok(eq_abs_tol)) {
            throw Error(ErrorKind::InvalidArgument,
                        "tolerances must lie in (0, 1), got rank_rel_tol=" +
                            std::to_string(rank_rel_tol) +
                            " eq_abs_tol=" + std::to_string(eq_abs_tol));
        }
    }
};

/// Neumaier-compensated accumulator. Summation order is the caller's loop
/// order, so results are reproducible bit for bit.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct HermitianEig {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // orthonormal columns
};

/// Thin SVD truncated at the numerical rank r. Zero matrices give r = 0 and
/// empty (m x 0, n x 0) factors.
struct Svd {
    ComplexMatrix U;
    RealVector singulars; // descending, all above the rank cutoff
    ComplexMatrix V;

    [[nodiscard]] Index rank() const noexcept { return singulars.size(); }
};

namespace detail {

inline void require_finite(const ComplexMatrix& a, const char* what) {
    if (!a.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
    }
}

/// Rotate a column so its largest-magnitude entry is real and positive.
/// Returns the unit phase that was applied.
inline Complex fix_phase(Eigen::Ref<ComplexVector> column) {
    if (column.size() == 0) {
        return {1.0, 0.0};
    }
    double biggest = 0.0;
    for (Index i = 0; i < column.size(); ++i) {
        biggest = std::max(biggest, std::abs(column(i)));
    }
    if (biggest == 0.0) {
        return {1.0, 0.0};
    }
    // Near-ties resolve to the first index so the choice is stable under
    // rounding noise.
    Index pivot = 0;
    while (std::abs(column(pivot)) < biggest * (1.0 - 1e-10)) {
        ++pivot;
    }
    const Complex phase = std::conj(column(pivot)) / std::abs(column(pivot));
    column *= phase;
    column(pivot) = Complex(column(pivot).real(), 0.0);
    return phase;
}

inline void fix_column_phases(ComplexMatrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        ComplexVector col = m.col(j);
        fix_phase(col);
        m.col(j) = col;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Independent sub-stream seed for (seed, stream); used to give every
/// randomized trial its own generator.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return detail::splitmix64(detail::splitmix64(seed) ^ detail::splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

inline double frobenius_norm_squared(const ComplexMatrix& a) {
    CompensatedSum acc;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            acc.add(std::norm(a(i, j)));
        }
    }
    return acc.value();
}

/// Hilbert-Schmidt (Frobenius) norm, compensated, row-major order.
inline double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(frobenius_norm_squared(a)); }

/// Count of singular values strictly above rank_rel_tol * singulars[0].
inline Index numerical_rank(std::span<const double> singulars, const Tolerance& tol = {}) {
    if (singulars.empty() || !(singulars.front() > 0.0)) {
        return 0;
    }
    const double cutoff = tol.rank_rel_tol * singulars.front();
    return static_cast<Index>(
        std::count_if(singulars.begin(), singulars.end(), [cutoff](double s) { return s > cutoff; }));
}

inline Index numerical_rank(const RealVector& singulars, const Tolerance& tol = {}) {
    return numerical_rank(std::span<const double>(singulars.data(), static_cast<std::size_t>(singulars.size())), tol);
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending, each
/// eigenvector phase-normalized.
inline HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerance& tol = {}) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw Error(ErrorKind::BadShape, "hermitian_eig needs a non-empty square matrix");
    }
    detail::require_finite(a, "hermitian_eig input");
    const double asym = frobenius_norm(a - a.adjoint());
    if (asym > tol.eq_abs_tol * (1.0 + frobenius_norm(a))) {
        throw Error(ErrorKind::NotHermitian, "||A - A*||_F = " + std::to_string(asym));
    }
    const ComplexMatrix sym = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "Hermitian eigensolver did not converge");
    }
    HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
    detail::fix_column_phases(out.eigenvectors);
    return out;
}

namespace detail {

struct FullSvd {
    RealVector singulars;
    ComplexMatrix V; // n x n
    Index rank = 0;
};

inline FullSvd right_svd(const ComplexMatrix& a, const Tolerance& tol) {
    require_finite(a, "svd input");
    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeFullV);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "SVD did not converge");
    }
    FullSvd out{solver.singularValues(), solver.matrixV(), 0};
    out.rank = numerical_rank(out.singulars, tol);
    return out;
}

} // namespace detail

/// Thin SVD keeping singular values above the rank cutoff. Right singular
/// vectors are phase-normalized and the left ones follow, so U diag(s) V*
/// is unchanged.
inline Svd svd(const ComplexMatrix& a, const Tolerance& tol = {}) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw Error(ErrorKind::BadShape, "svd of an empty matrix");
    }
    detail::require_finite(a, "svd input");
    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "SVD did not converge");
    }
    const RealVector& s = solver.singularValues();
    const Index r = numerical_rank(s, tol);
    Svd out{solver.matrixU().leftCols(r), s.head(r), solver.matrixV().leftCols(r)};
    for (Index k = 0; k < r; ++k) {
        ComplexVector v = out.V.col(k);
        const Complex phase = detail::fix_phase(v);
        out.V.col(k) = v;
        out.U.col(k) *= phase;
    }
    return out;
}

/// Orthonormal basis of ker A (n x (n - r)); empty when A is injective.
inline ComplexMatrix null_basis(const ComplexMatrix& a, const Tolerance& tol = {}) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw Error(ErrorKind::BadShape, "null_basis of an empty matrix");
    }
    const auto full = detail::right_svd(a, tol);
    ComplexMatrix basis = full.V.rightCols(a.cols() - full.rank);
    detail::fix_column_phases(basis);
    return basis;
}

/// Orthonormal basis of (ran A)^perp (m x (m - r)); empty when A is onto.
inline ComplexMatrix cokernel_basis(const ComplexMatrix& a, const Tolerance& tol = {}) {
    return null_basis(a.adjoint(), tol);
}

/// Principal square root of a Hermitian PSD matrix. Eigenvalues slightly
/// below zero (rounding) are clamped; clearly negative ones are rejected.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& a, const Tolerance& tol = {}) {
    const auto eig = hermitian_eig(a, tol);
    const double scale = frobenius_norm(a);
    const double floor = -std::sqrt(tol.eq_abs_tol) * scale;
    if (eig.eigenvalues.size() > 0 && eig.eigenvalues(0) < floor) {
        throw Error(ErrorKind::NotPsd, "smallest eigenvalue " + std::to_string(eig.eigenvalues(0)));
    }
    // Eigenvalues at the solver's rounding floor are zeros of A; their
    // square roots would otherwise inflate noise to sqrt(eps).
    const Index n = eig.eigenvalues.size();
    const double noise = 16.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(eig.eigenvalues(0)), std::abs(eig.eigenvalues(n - 1)));
    const RealVector roots =
        eig.eigenvalues.unaryExpr([noise](double v) { return v <= noise ? 0.0 : std::sqrt(v); });
    ComplexMatrix root = eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
    return (root + root.adjoint()) * 0.5;
}

/// Haar-distributed m x r isometry: QR of a complex Gaussian matrix with
/// the phases of diag(R) pushed into Q.
inline ComplexMatrix haar_isometry(Index m, Index r, std::uint64_t seed) {
    if (m < 1 || r < 0 || r > m) {
        throw Error(ErrorKind::BadShape, "haar_isometry needs 0 <= r <= m, m >= 1 (m=" + std::to_string(m) +
                                             ", r=" + std::to_string(r) + ")");
    }
    if (r == 0) {
        return ComplexMatrix(m, 0);
    }
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix z(m, r);
    for (Index j = 0; j < r; ++j) {
        for (Index i = 0; i < m; ++i) {
            const double re = normal(gen);
            const double im = normal(gen);
            z(i, j) = Complex(re, im);
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, r);
    const ComplexMatrix& packed = qr.matrixQR();
    for (Index j = 0; j < r; ++j) {
        const Complex d = packed(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
    return q;
}

} // namespace framekit

#endif
