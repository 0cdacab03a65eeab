#ifndef FRAMEKIT_FRAME_HPP
#define FRAMEKIT_FRAME_HPP

#include <framekit/linalg.hpp>

#include <string>
#include <utility>
#include <vector>

namespace framekit {

/// Ordered finite system of vectors f_1..f_n in C^m.
///
/// Stored column-wise: column i is f_i, so the storage *is* the synthesis
/// matrix F with F e_i = f_i. Zero vectors are allowed.
class Frame {
public:
    explicit Frame(ComplexMatrix columns, std::string label = {})
        : columns_(std::move(columns)), label_(std::move(label)) {
        if (columns_.rows() < 1 || columns_.cols() < 1) {
            throw Error(ErrorKind::BadShape, "a frame needs ambient_dim >= 1 and at least one vector");
        }
        detail::require_finite(columns_, "frame");
    }

    static Frame from_vectors(const std::vector<ComplexVector>& vectors, std::string label = {}) {
        if (vectors.empty()) {
            throw Error(ErrorKind::BadShape, "a frame needs at least one vector");
        }
        const Index m = vectors.front().size();
        ComplexMatrix cols(m, static_cast<Index>(vectors.size()));
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (vectors[i].size() != m) {
                throw Error(ErrorKind::BadShape, "vector " + std::to_string(i) + " has length " +
                                                     std::to_string(vectors[i].size()) + ", expected " +
                                                     std::to_string(m));
            }
            cols.col(static_cast<Index>(i)) = vectors[i];
        }
        return Frame(std::move(cols), std::move(label));
    }

    [[nodiscard]] Index ambient_dim() const noexcept { return columns_.rows(); }
    [[nodiscard]] Index size() const noexcept { return columns_.cols(); }
    [[nodiscard]] ComplexVector vector(Index i) const { return columns_.col(i); }
    [[nodiscard]] const ComplexMatrix& columns() const noexcept { return columns_; }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }

private:
    ComplexMatrix columns_;
    std::string label_;
};

/// Frame bounds on the span K of the vectors.
struct FrameBounds {
    double lower = 0.0; // C
    double upper = 0.0; // D
};

struct FrameClass {
    bool is_frame_of_span = false;
    bool is_tight = false;
    bool is_normalized_tight = false;
    Index kernel_dim = 0; // N = dim ker F, equal to the excess
    Index rank = 0;       // r
    FrameBounds bounds;   // zero for the zero frame
};

/// F : C^n -> C^m with F e_i = f_i.
inline ComplexMatrix synthesis_matrix(const Frame& frame) { return frame.columns(); }

/// C and D are the extreme nonzero eigenvalues of FF*, i.e. the squared
/// extreme singular values of F above the rank cutoff.
inline FrameBounds frame_bounds(const Frame& frame, const Tolerance& tol = {}) {
    const Svd s = svd(frame.columns(), tol);
    if (s.rank() == 0) {
        throw Error(ErrorKind::ZeroFrame, "all frame vectors are zero");
    }
    const double top = s.singulars(0);
    const double bottom = s.singulars(s.rank() - 1);
    return {bottom * bottom, top * top};
}

inline FrameClass classify(const Frame& frame, const Tolerance& tol = {}) {
    const Svd s = svd(frame.columns(), tol);
    FrameClass out;
    out.rank = s.rank();
    out.kernel_dim = frame.size() - out.rank;
    if (out.rank == 0) {
        return out;
    }
    const double d = s.singulars(0) * s.singulars(0);
    const double c = s.singulars(out.rank - 1) * s.singulars(out.rank - 1);
    out.bounds = {c, d};
    out.is_frame_of_span = true;
    out.is_tight = (d - c) <= tol.eq_abs_tol * d;
    out.is_normalized_tight = out.is_tight && std::abs(c - 1.0) <= tol.eq_abs_tol;
    return out;
}

/// Weak similarity, decided as equality of the kernels of the two synthesis
/// operators (mutual projection residuals of orthonormal kernel bases).
inline bool weakly_similar(const Frame& a, const Frame& b, const Tolerance& tol = {}) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::IndexMismatch, "frames have " + std::to_string(a.size()) + " and " +
                                                  std::to_string(b.size()) + " vectors");
    }
    const ComplexMatrix ka = null_basis(a.columns(), tol);
    const ComplexMatrix kb = null_basis(b.columns(), tol);
    if (ka.cols() != kb.cols()) {
        return false;
    }
    if (ka.cols() == 0) {
        return true;
    }
    const double ab = frobenius_norm(ka - kb * (kb.adjoint() * ka));
    const double ba = frobenius_norm(kb - ka * (ka.adjoint() * kb));
    return ab <= tol.eq_abs_tol && ba <= tol.eq_abs_tol;
}

/// sum_j ||f_j - g_j||^2, compensated, in index order.
inline double quadratic_distance(const Frame& a, const Frame& b) {
    if (a.size() != b.size() || a.ambient_dim() != b.ambient_dim()) {
        throw Error(ErrorKind::IndexMismatch,
                    "frames differ in shape: " + std::to_string(a.ambient_dim()) + "x" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.ambient_dim()) + "x" + std::to_string(b.size()));
    }
    CompensatedSum acc;
    for (Index j = 0; j < a.size(); ++j) {
        for (Index i = 0; i < a.ambient_dim(); ++i) {
            acc.add(std::norm(a.columns()(i, j) - b.columns()(i, j)));
        }
    }
    return acc.value();
}

} // namespace framekit

#endif
