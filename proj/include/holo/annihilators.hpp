#pragma once

#include <vector>

#include "holo/poly.hpp"
#include "holo/recurrence.hpp"
#include "holo/sequence.hpp"
#include "holo/series.hpp"

namespace holo {

/// Terms f_0..f_N of a solution of rec. Indices below len(init) take the
/// supplied values, which must agree with rec wherever it applies; later
/// terms come from the recurrence. The returned stream stays extendable.
/// Throws LeadingCoefficientZero(n) when p_0(n) = 0 blocks a needed term
/// and InconsistentInitialTerms on disagreement.
SequenceStream unroll(const Recurrence& rec, const std::vector<Rational>& init, long N);
/// Uses rec.initial_terms().
SequenceStream unroll(const Recurrence& rec, long N);

/// Residuals p_0(n) u_{n+d} + ... + p_d(n) u_n for n in [begin, end).
std::vector<Rational> apply(const Recurrence& rec, const SequenceStream& seq, long begin, long end);
/// Same in real mode at the given precision.
std::vector<hp::BigReal> apply_real(const Recurrence& rec, const SequenceStream& seq, long begin, long end,
                                    hp::Bits bits);

/// Annihilator of sum f_n z^n. With at least d initial terms the
/// inhomogeneous part they induce is cancelled by one first-order left
/// factor; without them a d-fold derivative kills it for every solution.
DiffOp rec_to_ode(const Recurrence& rec);

/// Recurrence for the coefficients of every power-series solution.
Recurrence ode_to_rec(const DiffOp& ode);

/// Rational roots of q_0 with multiplicities plus nonrational factors.
RootReport singular_points(const DiffOp& ode);

/// sum_k q_k(z) y^{(e-k)} truncated to length(y) - e terms.
Series apply_to_series(const DiffOp& ode, const Series& y);

/// The operator at z = 0 written as sum_k z^k P_k(theta).
ThetaOp theta_form(const DiffOp& ode);

}  // namespace holo
