#ifndef WICKRING_RING_HPP
#define WICKRING_RING_HPP

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "wickring/multiindex.hpp"

namespace wickring {

using Complex = std::complex<double>;

/// A finite evaluation point (z_1, ..., z_m).
struct EvalPoint {
    std::vector<Complex> values;

    std::size_t size() const { return values.size(); }
    Complex at(std::uint32_t position) const {
        return position <= values.size() ? values[position - 1] : Complex(0.0);
    }
    /// z^alpha.
    Complex power(const MultiIndex& alpha) const;
};

/// Element of the truncated power-series ring: a sparse coefficient map
/// MultiIndex -> complex under a TruncationSpec.  Exact zeros are pruned;
/// values are immutable once built (all operations return new elements).
class RingElement {
public:
    using CoeffMap = std::map<MultiIndex, Complex, GradedLexLess>;

    explicit RingElement(TruncationSpec spec) : spec_(spec) {}

    static RingElement zero(TruncationSpec spec) { return RingElement(spec); }
    static RingElement one(TruncationSpec spec) { return constant(spec, 1.0); }
    static RingElement constant(TruncationSpec spec, Complex c);
    static RingElement monomial(TruncationSpec spec, const MultiIndex& alpha, Complex c);
    /// z_position as an element.
    static RingElement variable(TruncationSpec spec, std::uint32_t position);

    const TruncationSpec& spec() const { return spec_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    Complex coeff(const MultiIndex& alpha) const;
    Complex constant_term() const { return coeff(MultiIndex{}); }
    bool is_zero() const { return coeffs_.empty(); }
    /// Total degree of the highest stored term; 0 for the zero element.
    std::uint32_t degree() const;
    double max_coeff_magnitude() const;

    void set_coeff(const MultiIndex& alpha, Complex c);

    RingElement operator+(const RingElement& other) const;
    RingElement operator-(const RingElement& other) const;
    RingElement operator-() const;
    RingElement scale(Complex c) const;

    /// Cauchy product; terms above the degree cutoff are discarded.  Exact
    /// whenever deg(this) + deg(other) <= max_degree.
    RingElement wick_mul(const RingElement& other) const;
    RingElement operator*(const RingElement& other) const { return wick_mul(other); }

    /// Restrict to a smaller spec (fewer variables and/or lower degree).
    RingElement truncate_to(TruncationSpec target) const;

    /// Finite sum over stored terms; exact for the truncated element.
    Complex evaluate(const EvalPoint& z) const;

    /// Multiplicative inverse up to the degree cutoff.  The ring's exact
    /// unit criterion: defined iff the constant term is nonzero.
    RingElement inverse() const;

    /// ( sum_alpha |f_alpha|^2 (2N)^{-k alpha} )^{1/2}.
    double norm_k(int k) const;

private:
    TruncationSpec spec_;
    CoeffMap coeffs_;
};

/// sum_{n=0..d} x_n r^n for a scalar power series x; requires r(0) = 0.
RingElement compose(std::span<const Complex> x, const RingElement& r);

/// The Wick-product operator norm constant A(k-l) = sum_alpha (2N)^{(l-k) alpha},
/// finite iff k > l + 1.  Computed through the Euler-product factorization
/// prod_j (1 - (2j)^{l-k})^{-1} with the tail resummed through zeta values,
/// accurate to better than 1e-12 relative.
double vage_constant(int k, int l);

struct KqResult {
    double sum = 0.0;    // +inf when divergent
    bool member = false; // sum < delta^2
    bool divergent = false;
};

/// S(z,q) = sum_{alpha != 0} |z^alpha|^2 (2N)^{q alpha}, via the per-variable
/// geometric factorization; membership in K_q(delta) means S < delta^2.
KqResult kq_membership(const EvalPoint& z, int q, double delta);

/// Checks |f(z)| <= sum |f_alpha||z^alpha| <= M_q (sum_alpha (2N)^{q alpha}|z^alpha|^2)^{1/2}
/// with M_q the q-weighted coefficient norm.  Precondition: the weight sum converges.
bool growth_bound_check(const RingElement& f, const EvalPoint& z, int q);

} // namespace wickring

#endif
