#ifndef FRAMEKIT_VERIFICATION_HPP
#define FRAMEKIT_VERIFICATION_HPP

// Monte-Carlo checks of the minimality statements: the symmetric
// approximation beats every weakly similar normalized tight frame, the
// symmetric orthogonalization beats every orthonormal system, and the
// Hilbert-Schmidt norm can be summed over any normalized tight frame.

#include <framekit/sym_approx.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace framekit {

struct MinimalityReport {
    double baseline = 0.0;
    std::uint64_t trials = 0;
    double min_observed = std::numeric_limits<double>::infinity();
    std::uint64_t violations = 0;
    std::uint64_t seed = 0;
    double equality_residual = 0.0; // |distance(optimum) - closed-form bound|
};

struct EqualityCaseReport {
    std::uint64_t candidates = 0;
    std::uint64_t near_optimal = 0;    // within 1e-12 of the baseline
    double max_column_deviation = 0.0; // over near-optimal candidates
    bool holds = true;
};

/// Complex Gaussian m x n frame of the requested rank (full when
/// rank >= min(m, n)); lower rank comes from a product of two factors.
inline Frame random_gaussian_frame(Index m, Index n, Index rank, std::uint64_t seed) {
    if (m < 1 || n < 1 || rank < 1) {
        throw Error(ErrorKind::BadShape, "random_gaussian_frame needs positive sizes");
    }
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    auto gaussian = [&](Index rows, Index cols) {
        ComplexMatrix z(rows, cols);
        for (Index j = 0; j < cols; ++j) {
            for (Index i = 0; i < rows; ++i) {
                const double re = normal(gen);
                const double im = normal(gen);
                z(i, j) = Complex(re, im);
            }
        }
        return z;
    };
    if (rank >= std::min(m, n)) {
        return Frame(gaussian(m, n), "gaussian");
    }
    const ComplexMatrix left = gaussian(m, rank);
    const ComplexMatrix right = gaussian(rank, n);
    return Frame(left * right, "gaussian rank " + std::to_string(rank));
}

namespace detail {

inline Frame tight_from_coimage(const ComplexMatrix& coimage, Index m, std::uint64_t seed, const std::string& label) {
    const ComplexMatrix r = haar_isometry(m, coimage.cols(), seed);
    return Frame(r * coimage.adjoint(), label);
}

} // namespace detail

/// Random {G e_i} with G = R B*, B an orthonormal basis of (ker F)^perp and
/// R a Haar isometry: a normalized tight frame weakly similar to `frame`.
inline Frame random_weakly_similar_tight(const Frame& frame, std::uint64_t seed, const Tolerance& tol = {}) {
    const Svd s = svd(frame.columns(), tol);
    if (s.rank() == 0) {
        throw Error(ErrorKind::ZeroFrame, "no weakly similar tight frame for an all-zero frame");
    }
    return detail::tight_from_coimage(s.V, frame.ambient_dim(), seed, "random weakly similar tight");
}

inline Frame random_orthonormal_system(Index m, Index n, std::uint64_t seed) {
    if (n > m) {
        throw Error(ErrorKind::BadShape, "cannot fit " + std::to_string(n) + " orthonormal vectors in C^" +
                                             std::to_string(m));
    }
    return Frame(haar_isometry(m, n, seed), "random orthonormal system");
}

/// Normalized tight frame of C^k that is not an orthonormal basis: a Haar
/// unitary applied to a coisometry that splits each basis vector e_i into
/// d_i copies of e_i / sqrt(d_i), d_i in {1, 2, 3}, at least one d_i > 1.
inline Frame random_redundant_tight_frame(Index k, std::uint64_t seed) {
    if (k < 1) {
        throw Error(ErrorKind::BadShape, "dimension must be positive");
    }
    std::mt19937_64 gen(derive_seed(seed, 1));
    std::uniform_int_distribution<int> copies(1, 3);
    std::vector<int> d(static_cast<std::size_t>(k));
    for (auto& c : d) {
        c = copies(gen);
    }
    if (std::all_of(d.begin(), d.end(), [](int c) { return c == 1; })) {
        d.front() = 2;
    }
    Index total = 0;
    for (int c : d) {
        total += c;
    }
    ComplexMatrix coisometry = ComplexMatrix::Zero(k, total);
    Index col = 0;
    for (Index i = 0; i < k; ++i) {
        const double w = 1.0 / std::sqrt(static_cast<double>(d[static_cast<std::size_t>(i)]));
        for (int c = 0; c < d[static_cast<std::size_t>(i)]; ++c) {
            coisometry(i, col++) = w;
        }
    }
    const ComplexMatrix q = haar_isometry(k, k, derive_seed(seed, 2));
    return Frame(q * coisometry, "random redundant tight");
}

inline MinimalityReport verify_tight_minimality(const Frame& frame, std::uint64_t trials, std::uint64_t seed,
                                                const Tolerance& tol = {}) {
    if (trials < 1) {
        throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
    }
    const ApproximationResult best = symmetric_approximation(frame, tol);
    const Svd s = svd(frame.columns(), tol);

    MinimalityReport report;
    report.baseline = best.distance;
    report.trials = trials;
    report.seed = seed;
    const double bound =
        best.hs_I_minus_absF * best.hs_I_minus_absF - static_cast<double>(best.kernel_dim);
    report.equality_residual = std::abs(quadratic_distance(best.nu, frame) - bound);
    if (report.equality_residual > 1e-10 * (1.0 + best.distance)) {
        throw Error(ErrorKind::IdentityMismatch, "optimum does not attain the closed-form bound");
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Frame candidate =
            detail::tight_from_coimage(s.V, frame.ambient_dim(), derive_seed(seed, t), "candidate");
        const double d = quadratic_distance(candidate, frame);
        report.min_observed = std::min(report.min_observed, d);
        if (d < report.baseline - tol.eq_abs_tol) {
            ++report.violations;
        }
    }
    return report;
}

inline MinimalityReport verify_orthonormal_minimality(const Frame& frame, std::uint64_t trials, std::uint64_t seed,
                                                      const Tolerance& tol = {}) {
    if (frame.size() > frame.ambient_dim()) {
        throw Error(ErrorKind::BadShape, "orthonormal candidates need n <= m, got n=" + std::to_string(frame.size()) +
                                             " m=" + std::to_string(frame.ambient_dim()));
    }
    if (trials < 1) {
        throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
    }
    const OrthogonalizationResult best = loewdin_orthogonalization(frame, tol);
    const Index n = frame.size();

    MinimalityReport report;
    report.baseline = frobenius_norm_squared(ComplexMatrix::Identity(n, n) - best.polar.absF);
    report.trials = trials;
    report.seed = seed;
    // n <= m forces m - r >= n - r, so the optimum always exists here.
    report.equality_residual = std::abs(best.distance - report.baseline);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Frame candidate = random_orthonormal_system(frame.ambient_dim(), n, derive_seed(seed, t));
        const double d = quadratic_distance(candidate, frame);
        report.min_observed = std::min(report.min_observed, d);
        if (d < report.baseline - tol.eq_abs_tol) {
            ++report.violations;
        }
    }
    return report;
}

/// Probes the equality case: candidates at distance <= baseline + 1e-12
/// must coincide with {W e_i} columnwise to 1e-6. Candidates are the
/// optimum itself plus small unitary and out-of-range rotations of it.
inline EqualityCaseReport verify_equality_case(const Frame& frame, std::uint64_t seed, const Tolerance& tol = {}) {
    const ApproximationResult best = symmetric_approximation(frame, tol);
    const Svd s = svd(frame.columns(), tol);
    const Index m = frame.ambient_dim();
    const Index r = s.rank();

    std::mt19937_64 gen(derive_seed(seed, 0));
    std::normal_distribution<double> normal(0.0, 1.0);
    auto gaussian = [&](Index rows, Index cols) {
        ComplexMatrix z(rows, cols);
        for (Index j = 0; j < cols; ++j) {
            for (Index i = 0; i < rows; ++i) {
                const double re = normal(gen);
                const double im = normal(gen);
                z(i, j) = Complex(re, im);
            }
        }
        return z;
    };

    std::vector<ComplexMatrix> ranges{s.U};
    for (int e = 2; e <= 10; ++e) {
        const double eps = std::pow(10.0, -e);
        ComplexMatrix h = gaussian(r, r);
        h = (h + h.adjoint()).eval();
        h /= frobenius_norm(h);
        const auto eig = hermitian_eig(h, tol);
        ComplexVector phases(r);
        for (Index k = 0; k < r; ++k) {
            phases(k) = std::polar(1.0, eps * eig.eigenvalues(k));
        }
        const ComplexMatrix rotation = eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
        ranges.emplace_back(s.U * rotation);

        if (m > r) {
            ComplexMatrix tilt = s.U + eps * gaussian(m, r) / std::sqrt(static_cast<double>(m * r));
            Eigen::HouseholderQR<ComplexMatrix> qr(tilt);
            ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, r);
            for (Index j = 0; j < r; ++j) {
                const Complex d = qr.matrixQR()(j, j);
                q.col(j) *= d / std::abs(d);
            }
            ranges.emplace_back(std::move(q));
        }
    }

    EqualityCaseReport report;
    for (const auto& range : ranges) {
        const Frame candidate(range * s.V.adjoint(), "candidate");
        ++report.candidates;
        if (quadratic_distance(candidate, frame) > best.distance + 1e-12) {
            continue;
        }
        ++report.near_optimal;
        const ComplexMatrix diff = candidate.columns() - best.nu.columns();
        report.max_column_deviation = std::max(report.max_column_deviation, diff.colwise().norm().maxCoeff());
    }
    report.holds = report.max_column_deviation <= 1e-6;
    return report;
}

/// Largest |hs_norm_via_tight_frame(T, h) - ||T||_F| over pair_count pairs
/// of random normalized tight frames (one orthonormal, one redundant).
inline double lemma_frame_independence_gap(const ComplexMatrix& t, std::uint64_t pair_count, std::uint64_t seed,
                                           const Tolerance& tol = {}) {
    if (pair_count < 1) {
        throw Error(ErrorKind::InvalidArgument, "pair_count must be >= 1");
    }
    const Index k = t.cols();
    const double reference = frobenius_norm(t);
    const Frame basis(ComplexMatrix::Identity(k, k), "standard basis");
    double gap = 0.0;
    for (std::uint64_t p = 0; p < pair_count; ++p) {
        const Frame orthonormal = random_weakly_similar_tight(basis, derive_seed(seed, 2 * p), tol);
        const Frame redundant = random_redundant_tight_frame(k, derive_seed(seed, 2 * p + 1));
        gap = std::max(gap, std::abs(hs_norm_via_tight_frame(t, orthonormal, tol) - reference));
        gap = std::max(gap, std::abs(hs_norm_via_tight_frame(t, redundant, tol) - reference));
    }
    return gap;
}

inline bool verify_lemma_frame_independence(const ComplexMatrix& t, std::uint64_t pair_count, std::uint64_t seed,
                                            const Tolerance& tol = {}) {
    return lemma_frame_independence_gap(t, pair_count, seed, tol) <= 1e-8;
}

} // namespace framekit

#endif
