#ifndef FRAMEKIT_TESTS_SUPPORT_HPP
#define FRAMEKIT_TESTS_SUPPORT_HPP

#include <framekit/linalg.hpp>

#include <cstdint>
#include <random>

namespace framekit::testing {

inline ComplexMatrix random_matrix(Index rows, Index cols, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    ComplexMatrix z(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            const double re = normal(gen);
            const double im = normal(gen);
            z(i, j) = Complex(re, im);
        }
    }
    return z;
}

inline ComplexMatrix random_hermitian(Index n, std::uint64_t seed) {
    const ComplexMatrix z = random_matrix(n, n, seed);
    return (z + z.adjoint()) * 0.5;
}

inline ComplexMatrix random_psd(Index n, Index rank, std::uint64_t seed) {
    const ComplexMatrix z = random_matrix(n, rank, seed);
    return z * z.adjoint();
}

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace framekit::testing

#endif
