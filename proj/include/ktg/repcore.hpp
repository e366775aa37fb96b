#pragma once

#include "ktg/half_int.hpp"
#include "ktg/qcombinatorics.hpp"
#include "ktg/qratio.hpp"

namespace ktg {

/**
 * Coefficients of the elementary intertwiners in the weight bases g^a_u.
 * Colors and states are half-integers; every function returns zero on
 * inadmissible colors or invalid states so state sums can run over
 * rectangular index ranges.
 *
 * The *_num variants return exact numerators over the fixed factorial
 * denominators listed with each operator; the engines accumulate those
 * directly and divide once at the end.
 */

// Clebsch-Gordan coefficient of V^c -> V^a (x) V^b; denominator [2c]!.
QLaurent cg_C_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);
QRatio cg_C(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);

// Projection V^a (x) V^b -> V^c; denominator [2a]! [2b]!.
QLaurent proj_P_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);
QRatio proj_P(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);

// Non-smooth minimum V^0 -> V^a (x) V^b (x) V^c; always a Laurent polynomial.
QLaurent w_W(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);

// Non-smooth maximum V^a (x) V^b (x) V^c -> V^0; denominator [2a]! [2b]! [2c]!.
QLaurent m_M_num(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);
QRatio m_M(HalfInt a, HalfInt b, HalfInt c, HalfInt u, HalfInt v, HalfInt t);

// cup coefficient on g^a_u (x) g^a_v (nonzero iff v = -u)
QLaurent cup(HalfInt a, HalfInt u, HalfInt v);
// cap coefficient; denominator [2a]!
QLaurent cap_num(HalfInt a, HalfInt u, HalfInt v);
QRatio cap(HalfInt a, HalfInt u, HalfInt v);

// Positive crossing V^a (x) V^b -> V^b (x) V^a: coefficient from (u,v) to (h,k),
// h a state of b and k a state of a; nonzero only for k-u = v-h = n >= 0.
QLaurent rmat(HalfInt a, HalfInt b, HalfInt u, HalfInt v, HalfInt h, HalfInt k);
// Negative crossing with the same index layout; nonzero for u-k = h-v = n >= 0.
QLaurent rmat_inv(HalfInt a, HalfInt b, HalfInt u, HalfInt v, HalfInt h, HalfInt k);

// Scalar of the half twist on V^a: i^{2a} q^{a^2+a} (sign -1 for the inverse).
QLaurent half_twist(HalfInt a, int sign);

}  // namespace ktg
