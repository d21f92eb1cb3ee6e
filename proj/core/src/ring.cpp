#include "wickring/ring.hpp"

#include <cmath>
#include <limits>

#include "wickring/errors.hpp"

namespace wickring {

Complex EvalPoint::power(const MultiIndex& alpha) const {
    Complex acc(1.0);
    for (auto [p, e] : alpha.terms()) {
        const Complex base = at(p);
        for (std::uint32_t i = 0; i < e; ++i)
            acc *= base;
    }
    return acc;
}

RingElement RingElement::constant(TruncationSpec spec, Complex c) {
    RingElement f(spec);
    f.set_coeff(MultiIndex{}, c);
    return f;
}

RingElement RingElement::monomial(TruncationSpec spec, const MultiIndex& alpha, Complex c) {
    RingElement f(spec);
    f.set_coeff(alpha, c);
    return f;
}

RingElement RingElement::variable(TruncationSpec spec, std::uint32_t position) {
    return monomial(spec, MultiIndex::unit(position), 1.0);
}

Complex RingElement::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0) : it->second;
}

std::uint32_t RingElement::degree() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first.total_degree();
}

double RingElement::max_coeff_magnitude() const {
    double m = 0.0;
    for (const auto& [a, c] : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

void RingElement::set_coeff(const MultiIndex& alpha, Complex c) {
    if (!spec_.admits(alpha))
        throw SpecMismatchError("multi-index outside the truncation spec");
    if (c == Complex(0.0))
        coeffs_.erase(alpha);
    else
        coeffs_[alpha] = c;
}

RingElement RingElement::operator+(const RingElement& other) const {
    if (spec_ != other.spec_)
        throw SpecMismatchError("adding elements with different truncation specs");
    RingElement out(*this);
    for (const auto& [a, c] : other.coeffs_) {
        const Complex s = out.coeff(a) + c;
        if (s == Complex(0.0))
            out.coeffs_.erase(a);
        else
            out.coeffs_[a] = s;
    }
    return out;
}

RingElement RingElement::operator-(const RingElement& other) const {
    return *this + (-other);
}

RingElement RingElement::operator-() const {
    RingElement out(spec_);
    for (const auto& [a, c] : coeffs_)
        out.coeffs_[a] = -c;
    return out;
}

RingElement RingElement::scale(Complex c) const {
    RingElement out(spec_);
    if (c == Complex(0.0))
        return out;
    for (const auto& [a, v] : coeffs_) {
        const Complex s = v * c;
        if (s != Complex(0.0))
            out.coeffs_[a] = s;
    }
    return out;
}

RingElement RingElement::wick_mul(const RingElement& other) const {
    if (spec_ != other.spec_)
        throw SpecMismatchError("multiplying elements with different truncation specs");
    RingElement out(spec_);
    for (const auto& [a, fa] : coeffs_) {
        const std::uint32_t da = a.total_degree();
        for (const auto& [b, gb] : other.coeffs_) {
            if (da + b.total_degree() > spec_.max_degree)
                continue;
            const MultiIndex g = a + b;
            auto [it, inserted] = out.coeffs_.try_emplace(g, Complex(0.0));
            it->second += fa * gb;
        }
    }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
        it = (it->second == Complex(0.0)) ? out.coeffs_.erase(it) : std::next(it);
    return out;
}

RingElement RingElement::truncate_to(TruncationSpec target) const {
    RingElement out(target);
    for (const auto& [a, c] : coeffs_)
        if (target.admits(a))
            out.coeffs_[a] = c;
    return out;
}

Complex RingElement::evaluate(const EvalPoint& z) const {
    if (z.size() != spec_.num_vars)
        throw DimensionError("evaluation point length must equal num_vars");
    Complex acc(0.0);
    for (const auto& [a, c] : coeffs_)
        acc += c * z.power(a);
    return acc;
}

RingElement RingElement::inverse() const {
    const Complex c = constant_term();
    if (c == Complex(0.0))
        throw NotInvertibleError("zero constant term: element is not a unit");
    // f = c (1 - r) with r(0) = 0; inverse is c^{-1} sum_{n<=d} r^n,
    // finite because r^n has minimal total degree >= n.
    RingElement r = RingElement::one(spec_) - scale(1.0 / c);
    RingElement acc = RingElement::one(spec_);
    RingElement power = RingElement::one(spec_);
    for (std::uint32_t n = 1; n <= spec_.max_degree; ++n) {
        power = power * r;
        if (power.is_zero())
            break;
        acc = acc + power;
    }
    return acc.scale(1.0 / c);
}

double RingElement::norm_k(int k) const {
    double acc = 0.0;
    for (const auto& [a, c] : coeffs_)
        acc += std::norm(c) * a.weight2n(-static_cast<double>(k));
    return std::sqrt(acc);
}

RingElement compose(std::span<const Complex> x, const RingElement& r) {
    if (r.constant_term() != Complex(0.0))
        throw CompositionDomainError("composition requires r(0) = 0");
    const TruncationSpec spec = r.spec();
    RingElement acc = RingElement::zero(spec);
    RingElement power = RingElement::one(spec);
    const std::size_t top = std::min<std::size_t>(x.size(), spec.max_degree + 1);
    for (std::size_t n = 0; n < top; ++n) {
        if (n > 0) {
            power = power * r;
            if (power.is_zero())
                break;
        }
        acc = acc + power.scale(x[n]);
    }
    return acc;
}

double vage_constant(int k, int l) {
    const int s = k - l;
    if (s <= 1)
        throw DivergentConstantError("A(k-l) diverges unless k > l + 1");
    // log A = sum_j -log(1 - (2j)^{-s}) = sum_{m>=1} 2^{-sm} zeta(sm) / m.
    double log_a = 0.0;
    for (int m = 1; m < 200; ++m) {
        const double term =
            std::pow(2.0, -static_cast<double>(s) * m) * std::riemann_zeta(static_cast<double>(s) * m) / m;
        log_a += term;
        if (term < 1e-18 * log_a)
            break;
    }
    return std::exp(log_a);
}

KqResult kq_membership(const EvalPoint& z, int q, double delta) {
    KqResult res;
    double product = 1.0;
    for (std::uint32_t j = 1; j <= z.size(); ++j) {
        const double zj2 = std::norm(z.at(j));
        if (zj2 == 0.0)
            continue;
        const double ratio = zj2 * std::pow(2.0 * j, static_cast<double>(q));
        if (ratio >= 1.0) {
            res.sum = std::numeric_limits<double>::infinity();
            res.divergent = true;
            res.member = false;
            return res;
        }
        product /= 1.0 - ratio;
    }
    res.sum = product - 1.0;
    res.member = res.sum < delta * delta;
    return res;
}

bool growth_bound_check(const RingElement& f, const EvalPoint& z, int q) {
    const KqResult kq = kq_membership(z, q, 1.0);
    if (kq.divergent)
        throw PreconditionError("weight sum diverges at this evaluation point");
    const double lhs = std::abs(f.evaluate(z));
    double mid = 0.0;
    for (const auto& [a, c] : f.coeffs())
        mid += std::abs(c) * std::abs(z.power(a));
    const double mq = f.norm_k(q);
    const double rhs = mq * std::sqrt(kq.sum + 1.0);
    const double tol = 1e-12;
    return lhs <= mid * (1.0 + tol) + tol && mid <= rhs * (1.0 + tol) + tol;
}

} // namespace wickring
