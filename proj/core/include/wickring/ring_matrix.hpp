#ifndef WICKRING_RING_MATRIX_HPP
#define WICKRING_RING_MATRIX_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "wickring/ring.hpp"

namespace wickring {

using ComplexMatrix = Eigen::MatrixXcd;

/// Rectangular matrix with RingElement entries sharing one TruncationSpec.
/// Dense row-major storage; system sizes are desk scale.
class RingMatrix {
public:
    RingMatrix(TruncationSpec spec, std::uint32_t rows, std::uint32_t cols);

    static RingMatrix identity(TruncationSpec spec, std::uint32_t n);
    static RingMatrix zeros(TruncationSpec spec, std::uint32_t rows, std::uint32_t cols);
    /// Lift a complex matrix to constant ring entries.
    static RingMatrix from_complex(TruncationSpec spec, const ComplexMatrix& m);

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const TruncationSpec& spec() const { return spec_; }

    const RingElement& at(std::uint32_t i, std::uint32_t j) const;
    RingElement& at(std::uint32_t i, std::uint32_t j);

    RingMatrix operator+(const RingMatrix& other) const;
    RingMatrix operator-(const RingMatrix& other) const;
    RingMatrix operator*(const RingMatrix& other) const;
    RingMatrix scale(Complex c) const;
    RingMatrix scale(const RingElement& c) const;
    RingMatrix transpose() const;

    /// Entrywise constant terms, as a complex matrix.
    ComplexMatrix eval0() const;
    /// Entrywise evaluation at z.
    ComplexMatrix evaluate(const EvalPoint& z) const;

    /// Submatrix picked by row/column index lists (0-based).
    RingMatrix submatrix(std::span<const std::uint32_t> row_idx,
                         std::span<const std::uint32_t> col_idx) const;

    /// Horizontal / vertical / diagonal block composition.
    static RingMatrix hcat(const RingMatrix& a, const RingMatrix& b);
    static RingMatrix vcat(const RingMatrix& a, const RingMatrix& b);
    static RingMatrix block_diag(const RingMatrix& a, const RingMatrix& b);

    double max_coeff_magnitude() const;
    bool is_square() const { return rows_ == cols_; }

    /// Neumann-series inverse: with M = M0 + G, M0 = eval0(M),
    /// M^{-1} = (sum_{n<=d} (-M0^{-1} G)^n) M0^{-1}, exact up to the cutoff.
    /// `rel_tol` bounds the smallest admissible singular value of M0
    /// relative to the largest.
    RingMatrix inverse(double rel_tol = 1e-10) const;

private:
    TruncationSpec spec_;
    std::uint32_t rows_, cols_;
    std::vector<RingElement> entries_;
};

/// Characteristic polynomial coefficients p_0..p_N (monic, p_N = 1) by the
/// Faddeev-LeVerrier recursion; division only by integers, valid since the
/// ring contains the rationals.
std::vector<RingElement> char_poly(const RingMatrix& a);

/// sum_i p_i A^i, Horner evaluation.
RingMatrix apply_poly(std::span<const RingElement> p, const RingMatrix& a);

/// Determinant: cofactor expansion for sizes <= 4, char_poly based above.
RingElement determinant(const RingMatrix& a);

} // namespace wickring

#endif
