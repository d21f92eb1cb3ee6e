#ifndef WICKRING_ANALYSIS_HPP
#define WICKRING_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wickring/state_space.hpp"

namespace wickring {

enum class Property { Observable, Controllable, RControllable, RMinimal };
enum class Verdict { SufficientAtZero, SufficientNonzeroMinor, RefutedAtZero, Inconclusive };

std::string to_string(Property p);
std::string to_string(Verdict v);

/// Three-valued result with a witness.  Truncation can only produce false
/// negatives, so a failed minor search is Inconclusive, never a refutation.
struct Certificate {
    Property property;
    Verdict verdict;
    /// Row (or column) index set of the certifying minor, when one was found.
    std::optional<std::vector<std::uint32_t>> minor_indices;
    /// Kalman rank of the z = 0 pair, when it was computed.
    std::optional<std::uint32_t> rank_at_zero;
};

/// Numerical rank (SVD, relative tolerance) of [C0; C0 A0; ...; C0 A0^{N-1}].
std::uint32_t kalman_rank_at_zero(const ComplexMatrix& c0, const ComplexMatrix& a0,
                                  double rel_tol = 1e-10);

/// Observability of the pair (C, A): the z = 0 Kalman test is sufficient;
/// otherwise any nonzero N x N minor of the N-block observability stack
/// certifies injectivity (the ring is a domain).
Certificate observability_certificate(const RingMatrix& c, const RingMatrix& a);

/// Module-generation controllability of (A, B): a unit N x N minor of the
/// Kalman matrix certifies it (equivalently, z = 0 Kalman rank N); rank
/// defect at z = 0 refutes it.
Certificate controllability_certificate(const RingMatrix& a, const RingMatrix& b);

/// Kernel-sense controllability over the ring: z = 0 rank N is sufficient;
/// otherwise any nonzero N x N minor of the Kalman matrix certifies it.
Certificate r_controllability_certificate(const RingMatrix& a, const RingMatrix& b);

/// Observable and ring-controllable combined; the weaker component verdict
/// wins.
Certificate minimality_certificate(const StateSpaceSystem& sys);

} // namespace wickring

#endif
