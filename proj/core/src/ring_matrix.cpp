#include "wickring/ring_matrix.hpp"

#include <Eigen/SVD>

#include "wickring/errors.hpp"

namespace wickring {

RingMatrix::RingMatrix(TruncationSpec spec, std::uint32_t rows, std::uint32_t cols)
    : spec_(spec), rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0)
        throw DimensionError("matrix dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, RingElement::zero(spec));
}

RingMatrix RingMatrix::identity(TruncationSpec spec, std::uint32_t n) {
    RingMatrix m(spec, n, n);
    for (std::uint32_t i = 0; i < n; ++i)
        m.at(i, i) = RingElement::one(spec);
    return m;
}

RingMatrix RingMatrix::zeros(TruncationSpec spec, std::uint32_t rows, std::uint32_t cols) {
    return RingMatrix(spec, rows, cols);
}

RingMatrix RingMatrix::from_complex(TruncationSpec spec, const ComplexMatrix& m) {
    RingMatrix out(spec, static_cast<std::uint32_t>(m.rows()),
                   static_cast<std::uint32_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out.at(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) =
                RingElement::constant(spec, m(i, j));
    return out;
}

const RingElement& RingMatrix::at(std::uint32_t i, std::uint32_t j) const {
    if (i >= rows_ || j >= cols_)
        throw DimensionError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

RingElement& RingMatrix::at(std::uint32_t i, std::uint32_t j) {
    if (i >= rows_ || j >= cols_)
        throw DimensionError("matrix index out of range");
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix addition shape mismatch");
    RingMatrix out(spec_, rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j) + other.at(i, j);
    return out;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
    return *this + other.scale(Complex(-1.0));
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
    if (cols_ != other.rows_)
        throw DimensionError("matrix product shape mismatch");
    if (spec_ != other.spec_)
        throw SpecMismatchError("matrix product spec mismatch");
    RingMatrix out(spec_, rows_, other.cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < other.cols_; ++j) {
            RingElement acc = RingElement::zero(spec_);
            for (std::uint32_t k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * other.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

RingMatrix RingMatrix::scale(Complex c) const {
    RingMatrix out(spec_, rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j).scale(c);
    return out;
}

RingMatrix RingMatrix::scale(const RingElement& c) const {
    RingMatrix out(spec_, rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j) * c;
    return out;
}

RingMatrix RingMatrix::transpose() const {
    RingMatrix out(spec_, cols_, rows_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

ComplexMatrix RingMatrix::eval0() const {
    ComplexMatrix m(rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            m(i, j) = at(i, j).constant_term();
    return m;
}

ComplexMatrix RingMatrix::evaluate(const EvalPoint& z) const {
    ComplexMatrix m(rows_, cols_);
    for (std::uint32_t i = 0; i < rows_; ++i)
        for (std::uint32_t j = 0; j < cols_; ++j)
            m(i, j) = at(i, j).evaluate(z);
    return m;
}

RingMatrix RingMatrix::submatrix(std::span<const std::uint32_t> row_idx,
                                 std::span<const std::uint32_t> col_idx) const {
    RingMatrix out(spec_, static_cast<std::uint32_t>(row_idx.size()),
                   static_cast<std::uint32_t>(col_idx.size()));
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.at(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)) =
                at(row_idx[i], col_idx[j]);
    return out;
}

RingMatrix RingMatrix::hcat(const RingMatrix& a, const RingMatrix& b) {
    if (a.rows_ != b.rows_)
        throw DimensionError("hcat row mismatch");
    RingMatrix out(a.spec_, a.rows_, a.cols_ + b.cols_);
    for (std::uint32_t i = 0; i < a.rows_; ++i) {
        for (std::uint32_t j = 0; j < a.cols_; ++j)
            out.at(i, j) = a.at(i, j);
        for (std::uint32_t j = 0; j < b.cols_; ++j)
            out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

RingMatrix RingMatrix::vcat(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.cols_)
        throw DimensionError("vcat column mismatch");
    RingMatrix out(a.spec_, a.rows_ + b.rows_, a.cols_);
    for (std::uint32_t j = 0; j < a.cols_; ++j) {
        for (std::uint32_t i = 0; i < a.rows_; ++i)
            out.at(i, j) = a.at(i, j);
        for (std::uint32_t i = 0; i < b.rows_; ++i)
            out.at(a.rows_ + i, j) = b.at(i, j);
    }
    return out;
}

RingMatrix RingMatrix::block_diag(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix out(a.spec_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::uint32_t i = 0; i < a.rows_; ++i)
        for (std::uint32_t j = 0; j < a.cols_; ++j)
            out.at(i, j) = a.at(i, j);
    for (std::uint32_t i = 0; i < b.rows_; ++i)
        for (std::uint32_t j = 0; j < b.cols_; ++j)
            out.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return out;
}

double RingMatrix::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& e : entries_)
        m = std::max(m, e.max_coeff_magnitude());
    return m;
}

RingMatrix RingMatrix::inverse(double rel_tol) const {
    if (!is_square())
        throw DimensionError("inverse of a non-square matrix");
    const ComplexMatrix m0 = eval0();
    Eigen::JacobiSVD<ComplexMatrix> svd(m0, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(sv.size() - 1) < rel_tol * sv(0))
        throw NotInvertibleError("constant-term matrix is numerically singular");

    const ComplexMatrix m0inv = m0.inverse();
    const RingMatrix m0inv_r = from_complex(spec_, m0inv);
    const RingMatrix g = *this - from_complex(spec_, m0);   // G(0) = 0
    const RingMatrix t = m0inv_r * g.scale(Complex(-1.0));  // -M0^{-1} G, vanishes at 0

    RingMatrix acc = identity(spec_, rows_);
    RingMatrix power = identity(spec_, rows_);
    for (std::uint32_t n = 1; n <= spec_.max_degree; ++n) {
        power = power * t;
        if (power.max_coeff_magnitude() == 0.0)
            break;
        acc = acc + power;
    }
    return acc * m0inv_r;
}

std::vector<RingElement> char_poly(const RingMatrix& a) {
    if (!a.is_square())
        throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::uint32_t n = a.rows();
    const TruncationSpec spec = a.spec();

    auto trace = [&](const RingMatrix& m) {
        RingElement t = RingElement::zero(spec);
        for (std::uint32_t i = 0; i < m.rows(); ++i)
            t = t + m.at(i, i);
        return t;
    };

    // Faddeev-LeVerrier: M_1 = A, c_{N-k} = -tr(A M_k)/k, M_{k+1} = A(M_k + c_{N-k} I).
    std::vector<RingElement> p(n + 1, RingElement::zero(spec));
    p[n] = RingElement::one(spec);
    RingMatrix m = RingMatrix::identity(spec, n);
    for (std::uint32_t k = 1; k <= n; ++k) {
        m = a * m;
        const RingElement c = trace(m).scale(-1.0 / static_cast<double>(k));
        p[n - k] = c;
        if (k < n) {
            for (std::uint32_t i = 0; i < n; ++i)
                m.at(i, i) = m.at(i, i) + c;
        }
    }
    return p;
}

RingMatrix apply_poly(std::span<const RingElement> p, const RingMatrix& a) {
    if (!a.is_square())
        throw DimensionError("polynomial of a non-square matrix");
    const TruncationSpec spec = a.spec();
    RingMatrix acc = RingMatrix::zeros(spec, a.rows(), a.cols());
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * a;
        for (std::uint32_t d = 0; d < a.rows(); ++d)
            acc.at(d, d) = acc.at(d, d) + p[i];
    }
    return acc;
}

RingElement determinant(const RingMatrix& a) {
    if (!a.is_square())
        throw DimensionError("determinant of a non-square matrix");
    const std::uint32_t n = a.rows();
    const TruncationSpec spec = a.spec();
    if (n <= 4) {
        // Cofactor expansion along the first row.
        if (n == 1)
            return a.at(0, 0);
        RingElement det = RingElement::zero(spec);
        std::vector<std::uint32_t> rows(n - 1);
        for (std::uint32_t i = 1; i < n; ++i)
            rows[i - 1] = i;
        for (std::uint32_t j = 0; j < n; ++j) {
            std::vector<std::uint32_t> cols;
            cols.reserve(n - 1);
            for (std::uint32_t c = 0; c < n; ++c)
                if (c != j)
                    cols.push_back(c);
            RingElement minor = determinant(a.submatrix(rows, cols));
            RingElement term = a.at(0, j) * minor;
            det = (j % 2 == 0) ? det + term : det - term;
        }
        return det;
    }
    // det(A) = (-1)^N p_0.
    std::vector<RingElement> p = char_poly(a);
    return (n % 2 == 0) ? p[0] : -p[0];
}

} // namespace wickring
