#include <framekit/families.hpp>
#include <framekit/sym_approx.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace framekit;

namespace {

const double kSqrt2 = std::sqrt(2.0);

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no framekit::Error thrown";
    return ErrorKind::InvalidArgument;
}

ComplexVector e(Index n, Index i) {
    ComplexVector v = ComplexVector::Zero(n);
    v(i - 1) = 1.0;
    return v;
}

} // namespace

TEST(Truncate, EvenOdd) {
    const Frame f = truncate(EvenOdd{}, 4);
    EXPECT_EQ(f.vector(0), ComplexVector::Zero(4));
    EXPECT_EQ(f.vector(1), e(4, 2));
    EXPECT_EQ(f.vector(2), ComplexVector::Zero(4));
    EXPECT_EQ(f.vector(3), e(4, 4));
}

TEST(Truncate, SumSpike) {
    const Frame f = truncate(SumSpike{}, 3);
    EXPECT_EQ(f.vector(0), e(3, 1));
    EXPECT_EQ(f.vector(1), e(3, 1) + e(3, 2));
    EXPECT_EQ(f.vector(2), e(3, 1) + e(3, 3));
}

TEST(Truncate, DifferenceChain) {
    const Frame f = truncate(DifferenceChain{}, 3);
    EXPECT_EQ(f.vector(0), e(3, 1));
    EXPECT_EQ(f.vector(1), e(3, 2) - 2.0 * e(3, 1));
    EXPECT_EQ(f.vector(2), e(3, 3) - 1.5 * e(3, 2));
}

TEST(Truncate, ShiftWeightedAndGeometricKernel) {
    const Frame s = truncate(ShiftWeighted{Complex(2.0, 0.0)}, 3);
    EXPECT_EQ(s.vector(0), ComplexVector::Zero(3));
    EXPECT_EQ(s.vector(1), 2.0 * e(3, 1));
    EXPECT_EQ(s.vector(2), 2.0 * e(3, 2));

    const Frame g = truncate(GeometricKernel{}, 3);
    EXPECT_EQ(g.vector(0), e(3, 1));
    EXPECT_NEAR((g.vector(1) - (e(3, 1) + e(3, 2)) / kSqrt2).norm(), 0.0, 1e-15);
    EXPECT_NEAR((g.vector(2) - (0.5 * e(3, 1) - 0.5 * e(3, 2) + e(3, 3) / kSqrt2)).norm(), 0.0, 1e-15);
}

TEST(Truncate, RejectsBadSizesAndParameters) {
    EXPECT_EQ(kind_of([] { truncate(EvenOdd{}, 1); }), ErrorKind::BadSize);
    EXPECT_EQ(kind_of([] { truncate(DifferenceChain{}, 2); }), ErrorKind::BadSize);
    EXPECT_EQ(kind_of([] { truncate(ShiftWeighted{std::vector<Complex>{1.0, 2.0}}, 5); }), ErrorKind::BadSize);
    EXPECT_EQ(kind_of([] { truncate(ShiftWeighted{Complex(0.0)}, 3); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(truncate(DifferenceChain{}, 3).ambient_dim(), 3);
}

TEST(Diagnostics, ShiftWeightedUnitWeightsStayAtOne) {
    const auto d = diagnostics(ShiftWeighted{Complex(1.0)}, {10, 20});
    ASSERT_EQ(d.size(), 2u);
    for (const auto& row : d) {
        EXPECT_NEAR(row.hs_I_minus_absF, 1.0, 1e-12);
        EXPECT_EQ(row.kernel_dim, 1);
    }
}

TEST(Diagnostics, ShiftWeightedSeries) {
    // 1 + sum (1 - |alpha|)^2 over the truncated index range.
    const auto d = diagnostics(ShiftWeighted{Complex(2.0)}, {10, 20, 40});
    for (const auto& row : d) {
        EXPECT_NEAR(row.hs_I_minus_absF * row.hs_I_minus_absF, static_cast<double>(row.size), 1e-9);
    }
    EXPECT_LT(d[0].hs_I_minus_absF, d[1].hs_I_minus_absF);
    EXPECT_LT(d[1].hs_I_minus_absF, d[2].hs_I_minus_absF);

    const std::vector<Complex> alpha{0.5, Complex(0.0, 3.0), 1.0, std::polar(0.25, 1.0), 2.0};
    double series = 1.0;
    for (const Complex& a : alpha) {
        series += (1.0 - std::abs(a)) * (1.0 - std::abs(a));
    }
    const TruncationDiagnostics row = diagnose(ShiftWeighted{alpha}, 6);
    EXPECT_NEAR(row.hs_I_minus_absF * row.hs_I_minus_absF, series, 1e-12);
    EXPECT_NEAR(row.operator_norm, 3.0, 1e-12);
    EXPECT_NEAR(row.lower_bound, 0.0625, 1e-12);
}

TEST(Diagnostics, GeometricKernelReachesSqrt2) {
    const auto d = diagnostics(GeometricKernel{}, {10, 20, 40, 60});
    EXPECT_NEAR(d[0].hs_I_minus_gram, 1.41283, 1e-5);
    EXPECT_NEAR(d[1].hs_I_minus_gram, 1.4142122, 1e-7);
    EXPECT_NEAR(d[2].hs_I_minus_gram, 1.41421356237, 1e-10);
    EXPECT_NEAR(d[3].hs_I_minus_gram, kSqrt2, 1e-6);
    for (std::size_t k = 1; k < d.size(); ++k) {
        EXPECT_GE(d[k].hs_I_minus_gram, d[k - 1].hs_I_minus_gram);
        EXPECT_TRUE(std::isfinite(d[k].hs_I_minus_absF));
    }
}

TEST(Diagnostics, GeometricKernelMonotoneAndBounded) {
    double previous = 0.0;
    for (Index n = 2; n <= 64; ++n) {
        const double v = diagnose(GeometricKernel{}, n).hs_I_minus_gram;
        EXPECT_GE(v, previous - 1e-15) << n;
        EXPECT_LE(v, kSqrt2 + 1e-9) << n;
        previous = v;
    }
}

TEST(Diagnostics, RequiresAscendingSizes) {
    EXPECT_EQ(kind_of([] { diagnostics(EvenOdd{}, {10, 4}); }), ErrorKind::BadSize);
    EXPECT_EQ(kind_of([] { diagnostics(EvenOdd{}, {4, 4}); }), ErrorKind::BadSize);
    EXPECT_EQ(kind_of([] { diagnostics(EvenOdd{}, {1, 4}); }), ErrorKind::BadSize);
}

TEST(KernelWitness, DifferenceChainIsExact) {
    for (Index n : {3, 10, 50, 100}) {
        EXPECT_LE(kernel_witness_check(DifferenceChain{}, n), 1e-12) << n;
    }
    // F (e1 + e2/2 + e3/3) = e3/3 by hand.
    const Frame f = truncate(DifferenceChain{}, 3);
    const ComplexVector x = e(3, 1) + e(3, 2) / 2.0 + e(3, 3) / 3.0;
    EXPECT_NEAR((f.columns() * x - e(3, 3) / 3.0).norm(), 0.0, 1e-15);
}

TEST(KernelWitness, GeometricKernelResidualDecays) {
    const double r20 = kernel_witness_check(GeometricKernel{}, 20);
    const double r40 = kernel_witness_check(GeometricKernel{}, 40);
    EXPECT_LT(r40, r20);
    EXPECT_LT(r40, 1e-5);
}

TEST(KernelWitness, OtherFamiliesAreRejected) {
    EXPECT_EQ(kind_of([] { kernel_witness_check(EvenOdd{}, 4); }), ErrorKind::WrongFamily);
    EXPECT_EQ(kind_of([] { kernel_witness_check(SumSpike{}, 4); }), ErrorKind::WrongFamily);
    EXPECT_EQ(kind_of([] { unboundedness_probe(DifferenceChain{}, {4}); }), ErrorKind::WrongFamily);
}

TEST(UnboundednessProbe, GoldenRatioAtTwo) {
    EXPECT_NEAR(unboundedness_probe(SumSpike{}, {2})[0], std::numbers::phi, 1e-14);
}

TEST(UnboundednessProbe, GrowsPastSqrtOfSize) {
    const std::vector<Index> sizes{4, 16, 64};
    const auto sigma = unboundedness_probe(SumSpike{}, sizes);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        EXPECT_GE(sigma[k], std::sqrt(static_cast<double>(sizes[k] - 1)));
        if (k > 0) {
            EXPECT_GT(sigma[k], sigma[k - 1]);
        }
    }
    EXPECT_GT(sigma[2], std::sqrt(63.0));
}

TEST(Families, EvenOddIsItsOwnApproximation) {
    for (Index n : {2, 4, 10, 50}) {
        const Frame f = truncate(EvenOdd{}, n);
        const ApproximationResult a = symmetric_approximation(f);
        EXPECT_LE(a.distance, 1e-10) << n;
        EXPECT_EQ(a.kernel_dim, n / 2);
    }
}

TEST(Families, ShiftWeightedPartialIsometryRecoversPhases) {
    const std::vector<Complex> alpha{std::polar(1.0, 0.3), std::polar(1.0, -2.0), Complex(-1.0),
                                     std::polar(1.0, 1.7), Complex(0.0, 1.0), std::polar(3.0, 0.9)};
    const Index n = 7;
    const PolarDecomposition pd = polar_decompose(truncate(ShiftWeighted{alpha}, n).columns());
    EXPECT_LE(pd.W.col(0).norm(), 1e-10);
    for (Index i = 2; i <= n; ++i) {
        const Complex a = alpha[static_cast<std::size_t>(i - 2)];
        EXPECT_LE((pd.W.col(i - 1) - (a / std::abs(a)) * e(n, i - 1)).norm(), 1e-10) << i;
    }
}

TEST(Families, DifferenceChainNormBoundedByThree) {
    for (Index n = 3; n <= 120; n += 9) {
        EXPECT_LE(diagnose(DifferenceChain{}, n).operator_norm, 3.0) << n;
    }
}

TEST(Families, Names) {
    EXPECT_EQ(family_name(ShiftWeighted{}), "shift-weighted");
    EXPECT_EQ(family_name(EvenOdd{}), "even-odd");
    EXPECT_EQ(family_name(SumSpike{}), "sum-spike");
    EXPECT_EQ(family_name(DifferenceChain{}), "difference-chain");
    EXPECT_EQ(family_name(GeometricKernel{}), "geometric-kernel");
}
