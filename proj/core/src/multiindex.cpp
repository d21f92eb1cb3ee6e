#include "wickring/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wickring/errors.hpp"

namespace wickring {

MultiIndex MultiIndex::unit(std::uint32_t position, std::uint32_t exp) {
    MultiIndex a;
    if (position == 0)
        throw DimensionError("multi-index positions are 1-based");
    if (exp > 0)
        a.terms_.push_back({position, exp});
    return a;
}

MultiIndex MultiIndex::from_dense(std::span<const std::uint32_t> exps) {
    MultiIndex a;
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > 0)
            a.terms_.push_back({static_cast<std::uint32_t>(i + 1), exps[i]});
    return a;
}

std::vector<std::uint32_t> MultiIndex::to_dense(std::uint32_t len) const {
    std::vector<std::uint32_t> out(len, 0);
    for (auto [p, e] : terms_) {
        if (p > len)
            throw DimensionError("multi-index support exceeds requested dense length");
        out[p - 1] = e;
    }
    return out;
}

std::uint32_t MultiIndex::total_degree() const {
    std::uint32_t d = 0;
    for (auto [p, e] : terms_)
        d += e;
    return d;
}

std::uint32_t MultiIndex::max_position() const {
    return terms_.empty() ? 0 : terms_.back().first;
}

std::uint32_t MultiIndex::exponent_at(std::uint32_t position) const {
    for (auto [p, e] : terms_)
        if (p == position)
            return e;
    return 0;
}

std::uint64_t MultiIndex::factorial() const {
    std::uint64_t acc = 1;
    for (auto [p, e] : terms_) {
        for (std::uint64_t n = 2; n <= e; ++n) {
            if (acc > std::numeric_limits<std::uint64_t>::max() / n)
                throw OverflowError("multi-index factorial exceeds 64 bits");
            acc *= n;
        }
    }
    return acc;
}

double MultiIndex::weight2n(double s) const {
    double acc = 1.0;
    for (auto [p, e] : terms_)
        acc *= std::pow(2.0 * static_cast<double>(p),
                        s * static_cast<double>(e));
    return acc;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->first < ia->first) {
            out.terms_.push_back(*ib++);
        } else {
            out.terms_.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    return out;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db;
    // Same degree: walk positions in increasing order; the index holding the
    // larger exponent at the first differing position comes first.
    auto ia = a.terms().begin(), ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first; // that one has a nonzero where the other has 0
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false; // equal
}

std::vector<MultiIndex> enumerate_indices(const TruncationSpec& spec, std::size_t cap) {
    // count = C(m + d, d)
    const std::uint64_t m = spec.num_vars, d = spec.max_degree;
    std::uint64_t count = 1;
    for (std::uint64_t i = 1; i <= d; ++i) {
        if (count > cap * 2 + 1)
            break;
        count = count * (m + i) / i;
    }
    if (count > cap)
        throw ResourceError("enumeration would produce " + std::to_string(count) +
                            " indices, above the cap of " + std::to_string(cap));

    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint32_t> dense(m, 0);
    // Recursive composition of `deg` over m slots, leftmost-heavy first.
    auto rec = [&](auto&& self, std::uint32_t slot, std::uint32_t remaining) -> void {
        if (slot == m) {
            if (remaining == 0)
                out.push_back(MultiIndex::from_dense(dense));
            return;
        }
        for (std::uint32_t e = remaining + 1; e-- > 0;) {
            dense[slot] = e;
            self(self, slot + 1, remaining - e);
        }
        dense[slot] = 0;
    };
    for (std::uint32_t deg = 0; deg <= d; ++deg)
        rec(rec, 0, deg);
    return out;
}

} // namespace wickring
