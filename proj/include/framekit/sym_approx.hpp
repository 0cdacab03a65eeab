#ifndef FRAMEKIT_SYM_APPROX_HPP
#define FRAMEKIT_SYM_APPROX_HPP

// Symmetric approximation of a frame by a normalized tight frame and
// symmetric (Loewdin) orthogonalization, both read off the polar
// decomposition F = W|F| of the synthesis operator.

#include <framekit/frame.hpp>

#include <optional>
#include <string>
#include <utility>

namespace framekit {

/// F = W |F| with W a partial isometry of initial space ker(F)^perp.
struct PolarDecomposition {
    ComplexMatrix W;      // m x n
    ComplexMatrix absF;   // n x n, |F| = (F*F)^{1/2}
    ComplexMatrix P;      // n x n, projection onto (ker |F|)^perp
    RealVector singulars; // eigenvalues of |F| above the cutoff, descending
    Index kernel_dim = 0; // N = n - r

    [[nodiscard]] Index rank() const noexcept { return singulars.size(); }
};

struct ApproximationResult {
    Frame nu;                    // nu_i = W e_i
    double distance = 0.0;       // sum_j ||nu_j - f_j||^2, computed directly
    double hs_P_minus_absF = 0.0;
    double hs_I_minus_absF = 0.0;
    Index kernel_dim = 0;
    PolarDecomposition polar;
};

struct OrthogonalizationResult {
    bool exists = false;
    bool unique = false;
    std::optional<Frame> nu;     // (V + W) e_i, present iff exists
    ComplexMatrix V;             // m x n, partial isometry with initial space ker|F|
    double distance = 0.0;       // sum_j ||nu_j - f_j||^2 when exists
    double gram_residual = 0.0;  // ||nu* nu - I||_F when exists
    Index rank = 0;
    Index kernel_dim = 0;
    Index cokernel_dim = 0;      // m - r
    bool inverse_sqrt_checked = false; // W cross-checked against F (F*F)^{-1/2}
    PolarDecomposition polar;
};

namespace detail {

// Relative slack for comparing quantities that are equal in exact
// arithmetic but reached along different rounding paths.
inline bool agree(double a, double b, double abs_tol) {
    return std::abs(a - b) <= abs_tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace detail

/// Polar decomposition from the thin SVD F = U S V*: W = U V*,
/// |F| = V S V*, P = V V*.
inline PolarDecomposition polar_decompose(const ComplexMatrix& f, const Tolerance& tol = {}) {
    const Svd s = svd(f, tol);
    const Index n = f.cols();
    PolarDecomposition pd;
    pd.W = s.U * s.V.adjoint();
    pd.absF = s.V * s.singulars.cast<Complex>().asDiagonal() * s.V.adjoint();
    pd.absF = (pd.absF + pd.absF.adjoint()).eval() * 0.5;
    pd.P = s.V * s.V.adjoint();
    pd.P = (pd.P + pd.P.adjoint()).eval() * 0.5;
    pd.singulars = s.singulars;
    pd.kernel_dim = n - s.rank();
    if (s.rank() == 0) {
        pd.W = ComplexMatrix::Zero(f.rows(), n);
        pd.absF = ComplexMatrix::Zero(n, n);
        pd.P = ComplexMatrix::Zero(n, n);
    }
    return pd;
}

/// Returns (||I - |F|||^2 - N, ||P - |F|||^2). Both equal
/// sum over nonzero lambda of (1 - lambda)^2.
inline std::pair<double, double> approximation_distance_formulas(const PolarDecomposition& pd) {
    const Index n = pd.absF.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const double via_identity = frobenius_norm_squared(id - pd.absF) - static_cast<double>(pd.kernel_dim);
    const double via_projection = frobenius_norm_squared(pd.P - pd.absF);
    return {via_identity, via_projection};
}

/// The normalized tight frame {W e_i} closest to the input among all
/// weakly similar normalized tight frames.
inline ApproximationResult symmetric_approximation(const Frame& frame, const Tolerance& tol = {}) {
    PolarDecomposition pd = polar_decompose(frame.columns(), tol);
    if (pd.rank() == 0) {
        throw Error(ErrorKind::ZeroFrame, "symmetric approximation of an all-zero frame");
    }
    Frame nu(pd.W, frame.label().empty() ? std::string("symmetric approximation")
                                         : "symmetric approximation of " + frame.label());
    const double direct = quadratic_distance(nu, frame);
    const auto [via_identity, via_projection] = approximation_distance_formulas(pd);

    constexpr double identity_tol = 1e-6;
    if (!detail::agree(via_identity, via_projection, identity_tol) ||
        !detail::agree(direct, via_projection, identity_tol)) {
        throw Error(ErrorKind::IdentityMismatch,
                    "direct=" + std::to_string(direct) + " ||I-|F|||^2-N=" + std::to_string(via_identity) +
                        " ||P-|F|||^2=" + std::to_string(via_projection));
    }

    const Index n = frame.size();
    ApproximationResult out{std::move(nu),
                            direct,
                            std::sqrt(std::max(via_projection, 0.0)),
                            frobenius_norm(ComplexMatrix::Identity(n, n) - pd.absF),
                            pd.kernel_dim,
                            std::move(pd)};
    return out;
}

/// sqrt(sum_j ||T h_j||^2) for a normalized tight frame {h_j} of the whole
/// domain of T; equals the Hilbert-Schmidt norm of T for every such frame.
inline double hs_norm_via_tight_frame(const ComplexMatrix& t, const Frame& tight, const Tolerance& tol = {}) {
    if (tight.ambient_dim() != t.cols()) {
        throw Error(ErrorKind::NotNormalizedTight, "tight frame lives in C^" + std::to_string(tight.ambient_dim()) +
                                                       " but T acts on C^" + std::to_string(t.cols()));
    }
    const FrameClass cls = classify(tight, tol);
    if (!cls.is_normalized_tight || cls.rank != tight.ambient_dim()) {
        throw Error(ErrorKind::NotNormalizedTight, "frame is not a normalized tight frame of its whole space");
    }
    const ComplexMatrix images = t * tight.columns();
    return frobenius_norm(images);
}

namespace detail {

inline OrthogonalizationResult orthogonalize_with(const Frame& frame, const std::optional<ComplexMatrix>& cokernel,
                                                  const Tolerance& tol) {
    const ComplexMatrix& f = frame.columns();
    const Index m = f.rows();
    const Index n = f.cols();

    OrthogonalizationResult out;
    out.polar = polar_decompose(f, tol);
    const PolarDecomposition& pd = out.polar;
    out.rank = pd.rank();
    out.kernel_dim = pd.kernel_dim;
    out.cokernel_dim = m - out.rank;
    out.unique = out.kernel_dim == 0;
    out.exists = out.cokernel_dim >= out.kernel_dim;
    out.V = ComplexMatrix::Zero(m, n);
    if (!out.exists) {
        return out;
    }

    const double scale = 1.0 + frobenius_norm(f);
    if (out.kernel_dim > 0) {
        const ComplexMatrix kernel = null_basis(f, tol);
        if (kernel.cols() != out.kernel_dim) {
            throw Error(ErrorKind::IdentityMismatch, "kernel basis size disagrees with the polar decomposition");
        }
        ComplexMatrix targets;
        if (cokernel) {
            targets = *cokernel;
            if (targets.rows() != m || targets.cols() != out.kernel_dim) {
                throw Error(ErrorKind::BadCokernel, "expected " + std::to_string(out.kernel_dim) +
                                                        " cokernel vectors of length " + std::to_string(m) + ", got " +
                                                        std::to_string(targets.cols()) + " of length " +
                                                        std::to_string(targets.rows()));
            }
            require_finite(targets, "cokernel vectors");
            const double ortho = frobenius_norm(targets.adjoint() * targets -
                                                ComplexMatrix::Identity(out.kernel_dim, out.kernel_dim));
            if (ortho > tol.eq_abs_tol) {
                throw Error(ErrorKind::BadCokernel, "cokernel vectors not orthonormal (residual " +
                                                        std::to_string(ortho) + ")");
            }
            const double leak = frobenius_norm(f.adjoint() * targets);
            if (leak > tol.eq_abs_tol * scale) {
                throw Error(ErrorKind::BadCokernel, "cokernel vectors not orthogonal to ran F (residual " +
                                                        std::to_string(leak) + ")");
            }
        } else {
            const ComplexMatrix co = cokernel_basis(f, tol);
            if (co.cols() != out.cokernel_dim) {
                throw Error(ErrorKind::IdentityMismatch, "cokernel basis size disagrees with the polar decomposition");
            }
            targets = co.leftCols(out.kernel_dim);
        }
        out.V = targets * kernel.adjoint();
    }

    const ComplexMatrix system = out.V + pd.W;
    out.gram_residual = frobenius_norm(system.adjoint() * system - ComplexMatrix::Identity(n, n));
    if (out.gram_residual > tol.eq_abs_tol) {
        throw Error(ErrorKind::IdentityMismatch, "orthogonalized system has Gram residual " +
                                                     std::to_string(out.gram_residual));
    }
    out.nu.emplace(system, frame.label().empty() ? std::string("symmetric orthogonalization")
                                                 : "symmetric orthogonalization of " + frame.label());
    out.distance = quadratic_distance(*out.nu, frame);
    const double closed_form = frobenius_norm_squared(ComplexMatrix::Identity(n, n) - pd.absF);
    if (!agree(out.distance, closed_form, 1e-8)) {
        throw Error(ErrorKind::IdentityMismatch, "distance " + std::to_string(out.distance) +
                                                     " vs ||I-|F|||^2 " + std::to_string(closed_form));
    }
    return out;
}

// Condition-number ceiling for the (F*F)^{-1/2} cross-check: beyond it the
// squared conditioning of the Gram route alone exceeds the 1e-8 budget.
inline constexpr double inverse_sqrt_check_max_condition = 1e3;

} // namespace detail

/// Extends W by a partial isometry V : ker F -> (ran F)^perp. With
/// `cokernel` empty the canonical choice (first N columns of the
/// phase-fixed cokernel basis) is used.
inline OrthogonalizationResult extend_orthogonalization(const Frame& frame,
                                                        const std::optional<ComplexMatrix>& cokernel = std::nullopt,
                                                        const Tolerance& tol = {}) {
    OrthogonalizationResult out = detail::orthogonalize_with(frame, cokernel, tol);
    if (!out.exists) {
        throw Error(ErrorKind::NoExtension, "cokernel too small: dim (ran F)^perp = " +
                                                std::to_string(out.cokernel_dim) + " < dim ker F = " +
                                                std::to_string(out.kernel_dim));
    }
    return out;
}

/// Symmetric orthogonalization. Unique iff F is injective; otherwise the
/// canonical extension is returned, or exists = false when
/// dim (ran F)^perp < dim ker F.
inline OrthogonalizationResult loewdin_orthogonalization(const Frame& frame, const Tolerance& tol = {}) {
    OrthogonalizationResult out = detail::orthogonalize_with(frame, std::nullopt, tol);
    if (out.exists && out.unique) {
        const RealVector& s = out.polar.singulars;
        const double condition = s(0) / s(s.size() - 1);
        if (condition <= detail::inverse_sqrt_check_max_condition) {
            const ComplexMatrix& f = frame.columns();
            const auto eig = hermitian_eig(f.adjoint() * f, tol);
            const RealVector inv_roots = eig.eigenvalues.cwiseSqrt().cwiseInverse();
            const ComplexMatrix lowdin =
                f * (eig.eigenvectors * inv_roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint());
            const double gap = frobenius_norm(lowdin - out.polar.W);
            if (gap > 1e-8 * (1.0 + frobenius_norm(f))) {
                throw Error(ErrorKind::IdentityMismatch, "W and F (F*F)^{-1/2} differ by " + std::to_string(gap));
            }
            out.inverse_sqrt_checked = true;
        }
    }
    return out;
}

} // namespace framekit

#endif
