#pragma once

#include "semicyclic/cyclo.hpp"

namespace semicyclic {

/// Selects the base of a braiding coefficient: q itself or q^{-1}.
enum class QSign { plus, minus };

inline long qsign_factor(QSign s) { return s == QSign::plus ? 1 : -1; }

/// Quantum integer [l] = (q^l - q^{-l}) / (q - q^{-1}); [-l] = -[l].
CycScalar qint(const FieldSpecPtr& spec, long l);

/// Quantum factorial [n]! = [n][n-1]!, [0]! = 1. Memoized per N. Negative n is
/// an error; n >= N is permitted and gives 0 (the factor [N] vanishes).
CycScalar qfact(const FieldSpecPtr& spec, long n);

/// Quantum binomial [n]! / ([k]! [n-k]!) for 0 <= k <= n <= N-1.
CycScalar qbinom(const FieldSpecPtr& spec, long n, long k);

/**
 * Braiding coefficient f_q(l) = (q - q^{-1})^l / [l]! * q^{l(l-1)/2}, the c_l
 * of the R-matrix expansion; QSign::minus substitutes q^{-1} for q throughout.
 * Requires 0 <= l <= N-1.
 */
CycScalar f_coeff(const FieldSpecPtr& spec, long l, QSign sign);

} // namespace semicyclic
