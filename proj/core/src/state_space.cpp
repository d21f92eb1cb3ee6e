#include "wickring/state_space.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "wickring/errors.hpp"

namespace wickring {

StateSpaceSystem::StateSpaceSystem(RingMatrix a, RingMatrix b, RingMatrix c, RingMatrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    if (!A.is_square())
        throw DimensionError("A must be square");
    const std::uint32_t n = A.rows(), q = B.cols(), p = C.rows();
    if (B.rows() != n || C.cols() != n || D.rows() != p || D.cols() != q)
        throw DimensionError("state-space shapes are incompatible");
    if (!(A.spec() == B.spec() && A.spec() == C.spec() && A.spec() == D.spec()))
        throw SpecMismatchError("state-space matrices must share one truncation spec");
}

SimulationResult simulate(const StateSpaceSystem& sys, const SignalSequence& u,
                          const RingMatrix& x0, std::uint32_t steps) {
    const std::uint32_t n = sys.state_dim(), q = sys.input_dim();
    if (x0.rows() != n || x0.cols() != 1)
        throw DimensionError("x0 must be an N x 1 vector");
    for (const auto& un : u)
        if (un.rows() != q || un.cols() != 1)
            throw DimensionError("inputs must be q x 1 vectors");

    const RingMatrix zero_u = RingMatrix::zeros(sys.spec(), q, 1);
    SimulationResult res;
    res.states.push_back(x0);
    for (std::uint32_t k = 0; k < steps; ++k) {
        const RingMatrix& uk = k < u.size() ? u[k] : zero_u;
        const RingMatrix& xk = res.states.back();
        res.outputs.push_back(sys.C * xk + sys.D * uk);
        res.states.push_back(sys.A * xk + sys.B * uk);
    }
    return res;
}

TransferSeries markov(const StateSpaceSystem& sys, std::uint32_t horizon) {
    TransferSeries h;
    h.push_back(sys.D);
    if (horizon == 0)
        return h;
    RingMatrix an_b = sys.B; // A^{n-1} B
    for (std::uint32_t n = 1; n <= horizon; ++n) {
        h.push_back(sys.C * an_b);
        if (n < horizon)
            an_b = sys.A * an_b;
    }
    return h;
}

ComplexMatrix tf_eval(const StateSpaceSystem& sys, Complex zeta, const EvalPoint& z,
                      double det_rel_tol) {
    const ComplexMatrix az = sys.A.evaluate(z);
    const ComplexMatrix bz = sys.B.evaluate(z);
    const ComplexMatrix cz = sys.C.evaluate(z);
    const ComplexMatrix dz = sys.D.evaluate(z);
    const std::uint32_t n = sys.state_dim();
    const ComplexMatrix pencil = ComplexMatrix::Identity(n, n) - zeta * az;
    // Hadamard bound as the natural scale for the determinant test.
    double scale = 1.0;
    for (std::uint32_t i = 0; i < n; ++i)
        scale *= pencil.row(i).norm();
    const Complex det = pencil.determinant();
    if (std::abs(det) <= det_rel_tol * std::max(1.0, scale))
        throw SingularAtPointError("det(I - zeta A(z)) vanishes at this point",
                                   std::abs(det));
    return dz + zeta * cz * pencil.inverse() * bz;
}

SeriesEvalResult tf_series_eval(const TransferSeries& series, Complex zeta,
                                const EvalPoint& z, const StateSpaceSystem* sys) {
    if (series.empty())
        throw DimensionError("empty transfer series");
    SeriesEvalResult res;
    ComplexMatrix acc = ComplexMatrix::Zero(series[0].rows(), series[0].cols());
    Complex zp(1.0);
    for (const auto& hn : series) {
        acc += zp * hn.evaluate(z);
        zp *= zeta;
    }
    res.value = acc;
    if (sys != nullptr) {
        const ComplexMatrix az = sys->A.evaluate(z);
        const double rho = az.eigenvalues().cwiseAbs().maxCoeff();
        res.convergent = std::abs(zeta) * rho < 1.0;
        const double anorm = az.operatorNorm();
        const double ratio = std::abs(zeta) * anorm;
        if (ratio < 1.0) {
            const double cb = sys->C.evaluate(z).operatorNorm() *
                              sys->B.evaluate(z).operatorNorm();
            const std::size_t t = series.size() - 1;
            res.tail_bound = cb * std::abs(zeta) * std::pow(ratio, static_cast<double>(t)) /
                             (1.0 - ratio);
        } else {
            res.tail_bound = std::numeric_limits<double>::infinity();
        }
    }
    return res;
}

StateSpaceSystem realize_inverse(const StateSpaceSystem& sys, double rel_tol) {
    if (sys.input_dim() != sys.output_dim())
        throw DimensionError("inverse realization requires p = q");
    const RingMatrix dinv = sys.D.inverse(rel_tol); // throws NotInvertible when D(0) singular
    const RingMatrix a_cross = sys.A - sys.B * dinv * sys.C;
    return StateSpaceSystem(a_cross, sys.B * dinv, (dinv * sys.C).scale(Complex(-1.0)), dinv);
}

StateSpaceSystem realize_cascade(const StateSpaceSystem& s1, const StateSpaceSystem& s2) {
    if (s1.input_dim() != s2.output_dim())
        throw DimensionError("cascade requires inner dimensions to match");
    const TruncationSpec spec = s1.spec();
    const RingMatrix a = RingMatrix::vcat(
        RingMatrix::hcat(s1.A, s1.B * s2.C),
        RingMatrix::hcat(RingMatrix::zeros(spec, s2.state_dim(), s1.state_dim()), s2.A));
    const RingMatrix b = RingMatrix::vcat(s1.B * s2.D, s2.B);
    const RingMatrix c = RingMatrix::hcat(s1.C, s1.D * s2.C);
    return StateSpaceSystem(a, b, c, s1.D * s2.D);
}

StateSpaceSystem realize_sum(const StateSpaceSystem& s1, const StateSpaceSystem& s2) {
    if (s1.input_dim() != s2.input_dim() || s1.output_dim() != s2.output_dim())
        throw DimensionError("sum requires equal (p, q)");
    const RingMatrix a = RingMatrix::block_diag(s1.A, s2.A);
    const RingMatrix b = RingMatrix::vcat(s1.B, s2.B);
    const RingMatrix c = RingMatrix::hcat(s1.C, s2.C);
    return StateSpaceSystem(a, b, c, s1.D + s2.D);
}

StateSpaceSystem realize_concat_rows(const StateSpaceSystem& s1, const StateSpaceSystem& s2) {
    if (s1.output_dim() != s2.output_dim())
        throw DimensionError("row concatenation requires equal p");
    const RingMatrix a = RingMatrix::block_diag(s1.A, s2.A);
    const RingMatrix b = RingMatrix::block_diag(s1.B, s2.B);
    const RingMatrix c = RingMatrix::hcat(s1.C, s2.C);
    const RingMatrix d = RingMatrix::hcat(s1.D, s2.D);
    return StateSpaceSystem(a, b, c, d);
}

StateSpaceSystem realize_concat_cols(const StateSpaceSystem& s1, const StateSpaceSystem& s2) {
    if (s1.input_dim() != s2.input_dim())
        throw DimensionError("column concatenation requires equal q");
    const RingMatrix a = RingMatrix::block_diag(s1.A, s2.A);
    const RingMatrix b = RingMatrix::vcat(s1.B, s2.B);
    const RingMatrix c = RingMatrix::block_diag(s1.C, s2.C);
    const RingMatrix d = RingMatrix::vcat(s1.D, s2.D);
    return StateSpaceSystem(a, b, c, d);
}

TransferSeries r0_shift(const TransferSeries& series) {
    if (series.size() <= 1)
        return {};
    return TransferSeries(series.begin() + 1, series.end());
}

StateSpaceSystem realize_from_recursion(const TransferSeries& h, const RingMatrix& a_rec,
                                        double rel_tol) {
    if (!a_rec.is_square() || a_rec.rows() < 2)
        throw DimensionError("recursion certificate must be M x M with M >= 2");
    const std::uint32_t m = a_rec.rows();
    for (const auto& hn : h)
        if (hn.rows() != 1 || hn.cols() != 1)
            throw DimensionError("recursion realization handles scalar series only");
    if (h.size() < m + 1)
        throw DimensionError("series horizon too short for the certificate order");

    const TruncationSpec spec = a_rec.spec();
    // Row vector v = (1, R0 H, ..., R0^{M-1} H); zeta-coefficient n of
    // component j (1-based) is H_{n+j-1} for j >= 2 and [n == 0] for j = 1.
    auto v_coeff = [&](std::uint32_t j, std::uint32_t n) -> RingElement {
        if (j == 1)
            return n == 0 ? RingElement::one(spec) : RingElement::zero(spec);
        return h[n + j - 1].at(0, 0);
    };

    double scale = a_rec.max_coeff_magnitude();
    for (const auto& hn : h)
        scale = std::max(scale, hn.max_coeff_magnitude());
    const double tol = rel_tol * (1.0 + scale);

    // Verify R0 v = v Arec up to the available horizon: coefficient n of
    // column k needs H up to index n + M, so n runs to h.size() - 1 - M.
    for (std::uint32_t n = 0; n + m < h.size(); ++n) {
        for (std::uint32_t k = 1; k <= m; ++k) {
            RingElement rhs = RingElement::zero(spec);
            for (std::uint32_t j = 1; j <= m; ++j)
                rhs = rhs + v_coeff(j, n) * a_rec.at(j - 1, k - 1);
            const RingElement diff = v_coeff(k, n + 1) - rhs;
            if (diff.max_coeff_magnitude() > tol)
                throw InvalidRecursionError(
                    "recursion certificate fails at zeta power " + std::to_string(n) +
                    ", column " + std::to_string(k) + " (residual " +
                    std::to_string(diff.max_coeff_magnitude()) + ")");
        }
    }

    RingMatrix b = RingMatrix::zeros(spec, m, 1);
    b.at(1, 0) = RingElement::one(spec);
    RingMatrix c = RingMatrix::zeros(spec, 1, m);
    c.at(0, 0) = RingElement::one(spec);
    for (std::uint32_t j = 2; j <= m; ++j)
        c.at(0, j - 1) = h[j - 1].at(0, 0);
    return StateSpaceSystem(a_rec, b, c, h[0]);
}

} // namespace wickring
