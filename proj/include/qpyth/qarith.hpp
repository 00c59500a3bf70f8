#pragma once

#include <string>

#include "qpyth/fraction.hpp"
#include "qpyth/poly.hpp"

namespace qpyth {

// 2x2 matrix with polynomial entries. Entries are exact; no identification up
// to powers of q is performed, products of the generators below never require
// one.
struct Mat2Poly {
    Poly e11, e12, e21, e22;

    bool operator==(const Mat2Poly& o) const {
        return e11 == o.e11 && e12 == o.e12 && e21 == o.e21 && e22 == o.e22;
    }

    Poly trace() const { return e11 + e22; }
    static Mat2Poly identity() { return {Poly::one(), Poly{}, Poly{}, Poly::one()}; }
};

Mat2Poly operator*(const Mat2Poly& a, const Mat2Poly& b);

// q-integer [n]_q = 1 + q + ... + q^(n-1).
Poly q_int(const Int& n);

// Deformed generators R_q = [[q,1],[0,1]] and L_q = [[q,0],[q,1]], and the
// base-point matrix X0 = [[0,0],[0,1]].
Mat2Poly gen_R();
Mat2Poly gen_L();
Mat2Poly x0_matrix();

// R_q^a and L_q^a in closed form.
Mat2Poly gen_R_power(const Int& a);
Mat2Poly gen_L_power(const Int& a);

// The alternating word R_q^a1 L_q^a2 R_q^a3 ... R_q^ak of an odd-length
// continued fraction. Its second column carries the numerator and denominator
// of the q-deformed fraction.
Mat2Poly word_matrix(const ContinuedFraction& cf);

// The reversed word with R and L exchanged: L_q^ak R_q^a(k-1) ... L_q^a1.
Mat2Poly transpose_word_matrix(const ContinuedFraction& cf);

// Twisted transposition [[a, b],[c, d]] -> [[a, c/q],[q b, d]]; requires the
// bottom-left entry to vanish at q = 0. Anti-homomorphism exchanging R_q and
// L_q, so applying it to word_matrix(cf) yields transpose_word_matrix(cf).
Mat2Poly q_transpose(const Mat2Poly& m);

/**
 * q-deformation of a positive rational: the pair of polynomials N, D with
 * [m/n]_q = N(q)/D(q). For a base >= 1 the pair is read off the word matrix
 * of the continued-fraction expansion; bases < 1 arise through inversion.
 */
struct QRational {
    Poly num;
    Poly den;
    Fraction base;

    bool operator==(const QRational& o) const {
        return num == o.num && den == o.den && base == o.base;
    }
};

// Builds [f]_q for f >= 1 from the word matrix. Checks the structural
// invariants (specialization at q = 1, nonnegative coefficients, monic ends).
QRational q_rational(const Fraction& f);

// [n/m]_q from [m/n]_q by reversing both polynomials at the common formal
// degree d = max(deg num, deg den). Involution.
QRational q_rational_inverse(const QRational& r);

// [x + 1]_q = q [x]_q + 1.
QRational q_rational_plus_one(const QRational& r);

// Inversion computed without ever substituting q -> 1/q, by composing the
// translation and negation recurrences: [n/m]_q = 1 - 1/[m/(m-n)]_q for
// m > n. Agrees with q_rational_inverse.
QRational perrine_inverse(const QRational& r);

// For base(r1) > base(r2): the cross-difference num1*den2 - den1*num2.
// Nonnegativity of its coefficients is the order-preservation property of
// the deformation; it is tested, not assumed.
Poly total_positivity_poly(const QRational& r1, const QRational& r2);

std::string render(const QRational& r);

} // namespace qpyth
