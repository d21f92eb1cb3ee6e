#ifndef WICKRING_STATE_SPACE_HPP
#define WICKRING_STATE_SPACE_HPP

#include <vector>

#include "wickring/ring_matrix.hpp"

namespace wickring {

/// Discrete-time system x_{n+1} = A x_n + B u_n, y_n = C x_n + D u_n with
/// all products taken in the ring.
struct StateSpaceSystem {
    RingMatrix A, B, C, D;

    StateSpaceSystem(RingMatrix a, RingMatrix b, RingMatrix c, RingMatrix d);

    std::uint32_t state_dim() const { return A.rows(); }
    std::uint32_t input_dim() const { return B.cols(); }
    std::uint32_t output_dim() const { return C.rows(); }
    const TruncationSpec& spec() const { return A.spec(); }
};

/// Ordered list of ring column vectors, index n = 0, 1, ...
using SignalSequence = std::vector<RingMatrix>;

/// Markov parameters H_0 = D, H_n = C A^{n-1} B.
using TransferSeries = std::vector<RingMatrix>;

struct SimulationResult {
    SignalSequence states;  // x_0 .. x_T
    SignalSequence outputs; // y_0 .. y_{T-1}
};

/// Runs the recursion for `steps` steps; u is zero-padded past its end.
/// Pass an empty optional-style x0 by using zeros(spec, N, 1).
SimulationResult simulate(const StateSpaceSystem& sys, const SignalSequence& u,
                          const RingMatrix& x0, std::uint32_t steps);

TransferSeries markov(const StateSpaceSystem& sys, std::uint32_t horizon);

/// D(z) + zeta C(z)(I - zeta A(z))^{-1} B(z) by complex linear algebra.
/// Throws SingularAtPoint when det(I - zeta A(z)) vanishes relative to scale.
ComplexMatrix tf_eval(const StateSpaceSystem& sys, Complex zeta, const EvalPoint& z,
                      double det_rel_tol = 1e-12);

struct SeriesEvalResult {
    ComplexMatrix value;
    double tail_bound = 0.0; // geometric bound on the truncation remainder
    bool convergent = false; // |zeta| * spectral radius of A(z) < 1
};

/// sum_{n<=T} zeta^n H_n(z), with a reported geometric tail bound.
SeriesEvalResult tf_series_eval(const TransferSeries& series, Complex zeta,
                                const EvalPoint& z, const StateSpaceSystem* sys = nullptr);

/// Realization of H^{-1}: (A - B D^{-1} C, B D^{-1}, -D^{-1} C, D^{-1}).
/// Requires p = q and D(0) invertible.
StateSpaceSystem realize_inverse(const StateSpaceSystem& sys, double rel_tol = 1e-10);

/// Realization of the product H1 H2 (cascade), state dim N1 + N2.
StateSpaceSystem realize_cascade(const StateSpaceSystem& s1, const StateSpaceSystem& s2);

/// Realization of H1 + H2; requires equal (p, q).
StateSpaceSystem realize_sum(const StateSpaceSystem& s1, const StateSpaceSystem& s2);

/// Realization of (H1  H2); requires equal p.
StateSpaceSystem realize_concat_rows(const StateSpaceSystem& s1, const StateSpaceSystem& s2);

/// Realization of (H1; H2); requires equal q.
StateSpaceSystem realize_concat_cols(const StateSpaceSystem& s1, const StateSpaceSystem& s2);

/// Backward shift: drops H_0 and shifts, result_n = H_{n+1}.
TransferSeries r0_shift(const TransferSeries& series);

/// Shift realization of a scalar series H from a verified recursion
/// certificate: Arec must satisfy R0 (1, R0 H, ..., R0^{M-1} H)
/// = (1, R0 H, ..., R0^{M-1} H) Arec coefficientwise up to the available
/// horizon.  Returns (Arec, e_2, (1, R0 H, ..., R0^{M-1} H)(0), H_0).
/// Throws InvalidRecursion naming the first violated coefficient.
StateSpaceSystem realize_from_recursion(const TransferSeries& h, const RingMatrix& a_rec,
                                        double rel_tol = 1e-9);

} // namespace wickring

#endif
