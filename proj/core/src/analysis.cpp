#include "wickring/analysis.hpp"

#include <Eigen/SVD>

#include "wickring/errors.hpp"

namespace wickring {

std::string to_string(Property p) {
    switch (p) {
    case Property::Observable: return "Observable";
    case Property::Controllable: return "Controllable";
    case Property::RControllable: return "RControllable";
    case Property::RMinimal: return "RMinimal";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::SufficientAtZero: return "SufficientAtZero";
    case Verdict::SufficientNonzeroMinor: return "SufficientNonzeroMinor";
    case Verdict::RefutedAtZero: return "RefutedAtZero";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

std::uint32_t numerical_rank(const ComplexMatrix& m, double rel_tol) {
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0)
        return 0;
    std::uint32_t r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0))
            ++r;
    return r;
}

/// Observability stack [C; CA; ...; CA^{N-1}] over the ring.  Higher powers
/// are redundant by Cayley-Hamilton.
RingMatrix observability_stack(const RingMatrix& c, const RingMatrix& a) {
    RingMatrix stack = c;
    RingMatrix can = c;
    for (std::uint32_t k = 1; k < a.rows(); ++k) {
        can = can * a;
        stack = RingMatrix::vcat(stack, can);
    }
    return stack;
}

/// Kalman matrix [B, AB, ..., A^{N-1}B].
RingMatrix kalman_matrix(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix k = b;
    RingMatrix anb = b;
    for (std::uint32_t n = 1; n < a.rows(); ++n) {
        anb = a * anb;
        k = RingMatrix::hcat(k, anb);
    }
    return k;
}

/// Iterates size-n index subsets of {0..total-1} in lexicographic order,
/// calling pred on each; returns the first accepted subset.
std::optional<std::vector<std::uint32_t>>
first_subset(std::uint32_t total, std::uint32_t n, const auto& pred) {
    std::vector<std::uint32_t> idx(n);
    for (std::uint32_t i = 0; i < n; ++i)
        idx[i] = i;
    while (true) {
        if (pred(idx))
            return idx;
        // next combination
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && idx[i] == total - n + i)
            --i;
        if (i < 0)
            return std::nullopt;
        ++idx[i];
        for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < n; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool effectively_nonzero(const RingElement& e, double scale) {
    return e.max_coeff_magnitude() > 1e-10 * (1.0 + scale);
}

} // namespace

std::uint32_t kalman_rank_at_zero(const ComplexMatrix& c0, const ComplexMatrix& a0,
                                  double rel_tol) {
    const Eigen::Index n = a0.rows();
    ComplexMatrix stack(c0.rows() * n, n);
    ComplexMatrix can = c0;
    for (Eigen::Index k = 0; k < n; ++k) {
        stack.middleRows(k * c0.rows(), c0.rows()) = can;
        can = can * a0;
    }
    return numerical_rank(stack, rel_tol);
}

Certificate observability_certificate(const RingMatrix& c, const RingMatrix& a) {
    if (!a.is_square() || c.cols() != a.rows())
        throw DimensionError("observability pair shapes must be p x N, N x N");
    const std::uint32_t n = a.rows();
    Certificate cert{Property::Observable, Verdict::Inconclusive, std::nullopt, std::nullopt};
    const std::uint32_t rank0 = kalman_rank_at_zero(c.eval0(), a.eval0());
    cert.rank_at_zero = rank0;
    if (rank0 == n) {
        cert.verdict = Verdict::SufficientAtZero;
        return cert;
    }
    const RingMatrix stack = observability_stack(c, a);
    const double scale = stack.max_coeff_magnitude();
    std::vector<std::uint32_t> all_cols(n);
    for (std::uint32_t j = 0; j < n; ++j)
        all_cols[j] = j;
    auto found = first_subset(stack.rows(), n, [&](const std::vector<std::uint32_t>& rows) {
        return effectively_nonzero(determinant(stack.submatrix(rows, all_cols)), scale);
    });
    if (found) {
        cert.verdict = Verdict::SufficientNonzeroMinor;
        cert.minor_indices = *found;
    }
    return cert;
}

Certificate controllability_certificate(const RingMatrix& a, const RingMatrix& b) {
    if (!a.is_square() || b.rows() != a.rows())
        throw DimensionError("controllability pair shapes must be N x N, N x q");
    const std::uint32_t n = a.rows();
    Certificate cert{Property::Controllable, Verdict::Inconclusive, std::nullopt, std::nullopt};
    const RingMatrix k = kalman_matrix(a, b);
    const ComplexMatrix k0 = k.eval0();
    const std::uint32_t rank0 = numerical_rank(k0, 1e-10);
    cert.rank_at_zero = rank0;
    if (rank0 == n) {
        // A unit minor exists: its constant term is the corresponding
        // nonzero complex minor of K(0).
        std::vector<std::uint32_t> all_rows(n);
        for (std::uint32_t i = 0; i < n; ++i)
            all_rows[i] = i;
        auto found = first_subset(k.cols(), n, [&](const std::vector<std::uint32_t>& cols) {
            const RingElement minor = determinant(k.submatrix(all_rows, cols));
            return std::abs(minor.constant_term()) > 1e-10 * (1.0 + k.max_coeff_magnitude());
        });
        cert.verdict = Verdict::SufficientAtZero;
        cert.minor_indices = found;
        return cert;
    }
    cert.verdict = Verdict::RefutedAtZero;
    return cert;
}

Certificate r_controllability_certificate(const RingMatrix& a, const RingMatrix& b) {
    if (!a.is_square() || b.rows() != a.rows())
        throw DimensionError("controllability pair shapes must be N x N, N x q");
    const std::uint32_t n = a.rows();
    Certificate cert{Property::RControllable, Verdict::Inconclusive, std::nullopt, std::nullopt};
    const RingMatrix k = kalman_matrix(a, b);
    const std::uint32_t rank0 = numerical_rank(k.eval0(), 1e-10);
    cert.rank_at_zero = rank0;
    if (rank0 == n) {
        cert.verdict = Verdict::SufficientAtZero;
        return cert;
    }
    const double scale = k.max_coeff_magnitude();
    std::vector<std::uint32_t> all_rows(n);
    for (std::uint32_t i = 0; i < n; ++i)
        all_rows[i] = i;
    auto found = first_subset(k.cols(), n, [&](const std::vector<std::uint32_t>& cols) {
        return effectively_nonzero(determinant(k.submatrix(all_rows, cols)), scale);
    });
    if (found) {
        cert.verdict = Verdict::SufficientNonzeroMinor;
        cert.minor_indices = *found;
    }
    return cert;
}

Certificate minimality_certificate(const StateSpaceSystem& sys) {
    const Certificate obs = observability_certificate(sys.C, sys.A);
    const Certificate rc = r_controllability_certificate(sys.A, sys.B);
    auto strength = [](Verdict v) {
        switch (v) {
        case Verdict::SufficientAtZero: return 2;
        case Verdict::SufficientNonzeroMinor: return 1;
        default: return 0;
        }
    };
    const Certificate& weaker = strength(obs.verdict) <= strength(rc.verdict) ? obs : rc;
    Certificate cert{Property::RMinimal, Verdict::Inconclusive, weaker.minor_indices,
                     weaker.rank_at_zero};
    if (strength(weaker.verdict) > 0)
        cert.verdict = weaker.verdict;
    return cert;
}

} // namespace wickring
