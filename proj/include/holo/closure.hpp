#pragma once

#include "holo/annihilators.hpp"
#include "holo/hpeval/hpeval.hpp"
#include "holo/ratfun.hpp"

namespace holo {

/// Annihilator of u + v. Order <= order(a) + order(b).
///
/// Closure results are found by elimination over Q(n) and then multiplied
/// by (n - m) for every m >= 0 at which the elimination divided by zero,
/// so they hold at every n >= 0. Initial terms are carried when both
/// inputs have them, long enough to pass every nonnegative root of the
/// new leading coefficient.
Recurrence closure_sum(const Recurrence& a, const Recurrence& b);
/// Annihilator of the termwise product u_n v_n. Order <= order(a) order(b).
Recurrence closure_hadamard(const Recurrence& a, const Recurrence& b);
/// Annihilator of n -> u_{n+s}, s >= 0.
Recurrence closure_shift(const Recurrence& a, long s);
/// Annihilator of u_{n+1} - u_n.
Recurrence closure_difference(const Recurrence& a);

/// Annihilator of y + w for solutions y of a and w of b.
DiffOp closure_ode_sum(const DiffOp& a, const DiffOp& b);
/// Annihilator of the product y w (Cauchy product of coefficients).
DiffOp closure_ode_product(const DiffOp& a, const DiffOp& b);
/// Annihilator of A y for solutions y of a.
DiffOp closure_ode_apply(const DiffOp& a, const OreDiff<Poly>& A);
/// Annihilator of the Cauchy product of two sequences.
Recurrence closure_cauchy(const Recurrence& a, const Recurrence& b);

/// f^_n = sum_{k=k0}^n binom(n,k) (-1)^k f_k with k0 = 0 when include_k0.
/// Exact streams are transformed exactly; real streams are evaluated by
/// hp::binomial_diff_eval at target accuracy 2^-target_bits.
SequenceStream binomial_diff_seq(const SequenceStream& seq, long N, bool include_k0 = true,
                                 long target_bits = 64);

/// Annihilator of y(rho(w)) for every solution y of ode. Throws
/// DegenerateSubstitution when rho is constant.
DiffOp substitute_rational(const DiffOp& ode, const RatFun& rho);

/// Annihilator of the binomial transform (k = 0 term included): the
/// generating function (1/(1-z)) f(-z/(1-z)) is annihilated by
/// substituting into rec_to_ode(rec) and composing with (1 - z).
Recurrence binomial_transform_op(const Recurrence& rec);

}  // namespace holo
