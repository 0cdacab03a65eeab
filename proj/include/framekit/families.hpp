#ifndef FRAMEKIT_FAMILIES_HPP
#define FRAMEKIT_FAMILIES_HPP

// Finite sections of the classical infinite examples. Index set {1..n},
// ambient space C^n, no tail compensation. Family indices are 1-based;
// column j-1 holds f_j.

#include <framekit/sym_approx.hpp>

#include <string>
#include <variant>
#include <vector>

namespace framekit {

/// f_1 = 0, f_i = alpha_{i-1} e_{i-1}. alpha is either a constant or an
/// explicit list with at least n-1 entries.
struct ShiftWeighted {
    std::variant<Complex, std::vector<Complex>> alpha = Complex(1.0, 0.0);
};
/// f_{2i} = e_{2i}, f_{2i+1} = 0 (so f_1 = 0).
struct EvenOdd {};
/// f_1 = e_1, f_i = e_1 + e_i.
struct SumSpike {};
/// f_1 = e_1, f_i = e_i - i/(i-1) e_{i-1}.
struct DifferenceChain {};
/// f_1 = e_1, f_2 = (e_1 + e_2)/sqrt2,
/// f_n = 2^{-(n-1)/2} e_1 - sum_{j=2}^{n-1} 2^{-(n-j+1)/2} e_j + e_n/sqrt2.
struct GeometricKernel {};

using FamilySpec = std::variant<ShiftWeighted, EvenOdd, SumSpike, DifferenceChain, GeometricKernel>;

struct TruncationDiagnostics {
    Index size = 0;
    double hs_I_minus_absF = 0.0;
    double hs_P_minus_absF = 0.0;
    double operator_norm = 0.0; // sigma_max
    Index kernel_dim = 0;
    double lower_bound = 0.0;   // frame bound C of the truncation
    double hs_I_minus_gram = 0.0; // ||I - F*F||_F
};

inline std::string family_name(const FamilySpec& spec) {
    struct Namer {
        std::string operator()(const ShiftWeighted&) const { return "shift-weighted"; }
        std::string operator()(const EvenOdd&) const { return "even-odd"; }
        std::string operator()(const SumSpike&) const { return "sum-spike"; }
        std::string operator()(const DifferenceChain&) const { return "difference-chain"; }
        std::string operator()(const GeometricKernel&) const { return "geometric-kernel"; }
    };
    return std::visit(Namer{}, spec);
}

namespace detail {

inline ComplexMatrix shift_weighted_matrix(const ShiftWeighted& spec, Index n) {
    ComplexMatrix f = ComplexMatrix::Zero(n, n);
    for (Index i = 2; i <= n; ++i) {
        Complex a;
        if (const auto* constant = std::get_if<Complex>(&spec.alpha)) {
            a = *constant;
        } else {
            const auto& list = std::get<std::vector<Complex>>(spec.alpha);
            if (static_cast<Index>(list.size()) < n - 1) {
                throw Error(ErrorKind::BadSize, "alpha list has " + std::to_string(list.size()) +
                                                    " entries, size " + std::to_string(n) + " needs " +
                                                    std::to_string(n - 1));
            }
            a = list[static_cast<std::size_t>(i - 2)];
        }
        if (!(std::abs(a) > 0.0) || !std::isfinite(std::abs(a))) {
            throw Error(ErrorKind::InvalidArgument, "alpha values must satisfy 0 < |alpha| < inf");
        }
        f(i - 2, i - 1) = a;
    }
    return f;
}

} // namespace detail

inline Frame truncate(const FamilySpec& spec, Index n) {
    const bool chain = std::holds_alternative<DifferenceChain>(spec);
    if (n < 2 || (chain && n < 3)) {
        throw Error(ErrorKind::BadSize, family_name(spec) + " needs size >= " + (chain ? "3" : "2") + ", got " +
                                            std::to_string(n));
    }
    ComplexMatrix f = ComplexMatrix::Zero(n, n);
    const double r2 = 1.0 / std::sqrt(2.0);
    if (const auto* sw = std::get_if<ShiftWeighted>(&spec)) {
        f = detail::shift_weighted_matrix(*sw, n);
    } else if (std::holds_alternative<EvenOdd>(spec)) {
        for (Index i = 2; i <= n; i += 2) {
            f(i - 1, i - 1) = 1.0;
        }
    } else if (std::holds_alternative<SumSpike>(spec)) {
        f(0, 0) = 1.0;
        for (Index i = 2; i <= n; ++i) {
            f(0, i - 1) = 1.0;
            f(i - 1, i - 1) = 1.0;
        }
    } else if (chain) {
        f(0, 0) = 1.0;
        for (Index i = 2; i <= n; ++i) {
            f(i - 1, i - 1) = 1.0;
            f(i - 2, i - 1) = -static_cast<double>(i) / static_cast<double>(i - 1);
        }
    } else {
        f(0, 0) = 1.0;
        f(0, 1) = r2;
        f(1, 1) = r2;
        for (Index k = 3; k <= n; ++k) {
            f(0, k - 1) = std::pow(r2, static_cast<double>(k - 1));
            for (Index j = 2; j <= k - 1; ++j) {
                f(j - 1, k - 1) = -std::pow(r2, static_cast<double>(k - j + 1));
            }
            f(k - 1, k - 1) = r2;
        }
    }
    return Frame(std::move(f), family_name(spec) + " n=" + std::to_string(n));
}

inline TruncationDiagnostics diagnose(const FamilySpec& spec, Index n, const Tolerance& tol = {}) {
    const Frame frame = truncate(spec, n);
    const ComplexMatrix& f = frame.columns();
    const PolarDecomposition pd = polar_decompose(f, tol);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);

    TruncationDiagnostics d;
    d.size = n;
    d.hs_I_minus_absF = frobenius_norm(id - pd.absF);
    d.hs_P_minus_absF = frobenius_norm(pd.P - pd.absF);
    d.kernel_dim = pd.kernel_dim;
    if (pd.rank() > 0) {
        d.operator_norm = pd.singulars(0);
        const double low = pd.singulars(pd.rank() - 1);
        d.lower_bound = low * low;
    }
    d.hs_I_minus_gram = frobenius_norm(id - f.adjoint() * f);
    return d;
}

inline std::vector<TruncationDiagnostics> diagnostics(const FamilySpec& spec, const std::vector<Index>& sizes,
                                                      const Tolerance& tol = {}) {
    std::vector<TruncationDiagnostics> out;
    out.reserve(sizes.size());
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (k > 0 && sizes[k] <= sizes[k - 1]) {
            throw Error(ErrorKind::BadSize, "sizes must be strictly ascending");
        }
        out.push_back(diagnose(spec, sizes[k], tol));
    }
    return out;
}

/// DifferenceChain: ||F_n x_n - e_n / n|| for x_n = sum_{j<=n} e_j / j
/// (an exact identity). GeometricKernel: ||F_n x_n|| / ||x_n|| for the
/// truncated kernel witness x = -e_1 + sum_{j>=2} 2^{-(j-1)/2} e_j.
inline double kernel_witness_check(const FamilySpec& spec, Index n) {
    if (!std::holds_alternative<DifferenceChain>(spec) && !std::holds_alternative<GeometricKernel>(spec)) {
        throw Error(ErrorKind::WrongFamily, "kernel witness exists only for difference-chain and geometric-kernel, not " +
                                                family_name(spec));
    }
    const Frame frame = truncate(spec, n);
    ComplexVector x(n);
    if (std::holds_alternative<DifferenceChain>(spec)) {
        for (Index j = 1; j <= n; ++j) {
            x(j - 1) = 1.0 / static_cast<double>(j);
        }
        ComplexVector target = ComplexVector::Zero(n);
        target(n - 1) = 1.0 / static_cast<double>(n);
        return (frame.columns() * x - target).norm();
    }
    x(0) = -1.0;
    for (Index j = 2; j <= n; ++j) {
        x(j - 1) = std::pow(std::sqrt(2.0), -static_cast<double>(j - 1));
    }
    return (frame.columns() * x).norm() / x.norm();
}

/// sigma_max of the SumSpike sections; grows without bound.
inline std::vector<double> unboundedness_probe(const FamilySpec& spec, const std::vector<Index>& sizes,
                                               const Tolerance& tol = {}) {
    if (!std::holds_alternative<SumSpike>(spec)) {
        throw Error(ErrorKind::WrongFamily, "unboundedness probe is defined for sum-spike, not " + family_name(spec));
    }
    std::vector<double> out;
    out.reserve(sizes.size());
    for (Index n : sizes) {
        out.push_back(svd(truncate(spec, n).columns(), tol).singulars(0));
    }
    return out;
}

} // namespace framekit

#endif
