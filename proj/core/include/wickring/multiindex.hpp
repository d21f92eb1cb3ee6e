#ifndef WICKRING_MULTIINDEX_HPP
#define WICKRING_MULTIINDEX_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wickring {

/// Finitely supported exponent sequence alpha = (alpha_1, alpha_2, ...).
/// Stored sparsely as (position, exponent) pairs with position >= 1,
/// exponent >= 1, positions strictly increasing. The canonical form is
/// unique, so equality and ordering are cheap.
class MultiIndex {
public:
    using Term = std::pair<std::uint32_t, std::uint32_t>; // (position, exponent)

    MultiIndex() = default;

    /// alpha with a single nonzero entry: exponent `exp` at `position`.
    static MultiIndex unit(std::uint32_t position, std::uint32_t exp = 1);

    /// Build from a dense exponent vector (index 0 is position 1).
    static MultiIndex from_dense(std::span<const std::uint32_t> exps);

    std::vector<std::uint32_t> to_dense(std::uint32_t len) const;

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t max_position() const;
    std::uint32_t exponent_at(std::uint32_t position) const;

    /// alpha! = alpha_1! alpha_2! ...  Throws OverflowError instead of wrapping.
    std::uint64_t factorial() const;

    /// prod_j (2j)^{s * alpha_j}.  May underflow to 0 or overflow to +inf.
    double weight2n(double s) const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    bool operator==(const MultiIndex& other) const { return terms_ == other.terms_; }

private:
    std::vector<Term> terms_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// larger exponent at the smallest differing position first.  This is the
/// enumeration order of `enumerate_indices` and the coefficient-map order
/// of RingElement.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Finite model of the index set: variables z_1..z_m, total degree <= d.
struct TruncationSpec {
    std::uint32_t num_vars = 1;
    std::uint32_t max_degree = 0;

    bool admits(const MultiIndex& a) const {
        return a.max_position() <= num_vars && a.total_degree() <= max_degree;
    }
    bool operator==(const TruncationSpec&) const = default;
};

/// All multi-indices admitted by `spec`, in graded-lex order.
/// Count is C(m + d, d); exceeding `cap` raises ResourceError.
std::vector<MultiIndex> enumerate_indices(const TruncationSpec& spec,
                                          std::size_t cap = 2'000'000);

} // namespace wickring

#endif
