#pragma once

#include <optional>
#include <vector>

#include "qpyth/qarith.hpp"
#include "qpyth/triples.hpp"

namespace qpyth {

/**
 * Polynomial triple (A, B, C) attached to a fraction m/n > 1, satisfying
 * A^2 + q B^2 = C C* and specializing at q = 1 to the Euclid triple of m/n.
 * C is stored as the trace representative q N^2 + D^2; its reciprocal C* is
 * derived on demand, the two being interchangeable in the defining equation.
 */
struct QPythTriple {
    Poly A;
    Poly B;
    Poly C;
    Fraction base;

    Poly c_star() const { return reciprocal(C); }
    ClassicalTriple classical() const {
        return ClassicalTriple(A.eval_at_one(), B.eval_at_one(), C.eval_at_one());
    }

    bool operator==(const QPythTriple& o) const {
        return A == o.A && B == o.B && C == o.C && base == o.base;
    }
};

// The deformed triple matrix A_q X0 A_q^T of a fraction > 1. Its diagonal is
// (q N^2, D^2), so its trace is the C polynomial.
Mat2Poly q_matrix(const Fraction& f);

// q N^2 + D^2 for the deformation N/D of f > 1.
Poly q_trace_c(const Fraction& f);

// The deformed Euclid formula:
//   A = q N N' + D D',  B = N D' - D N',  C = q N^2 + D^2,
// where (N, D) deforms m/n and (N', D') deforms n/m.
QPythTriple q_triple(const Fraction& f);

// Exact check of A^2 + q B^2 = C C*.
bool verify_pythagoras(const Poly& a, const Poly& b, const Poly& c);

struct ConditionsReport {
    // Condition 1: positive coefficients throughout.
    bool positive_a = false, positive_b = false, positive_c = false;
    // Condition 2: A and B palindromic.
    bool palindromic_a = false, palindromic_b = false;
    // Condition 3: constant and leading coefficients equal to 1.
    bool monic_a = false, monic_b = false, monic_c = false, monic_cstar = false;
    // Property 4*: unimodal coefficient sequences (conjectural, reported
    // separately from the proven conditions).
    bool unimodal_a = false, unimodal_b = false, unimodal_c = false;

    bool conditions_1_to_3() const {
        return positive_a && positive_b && positive_c && palindromic_a && palindromic_b &&
               monic_a && monic_b && monic_c && monic_cstar;
    }
    bool unimodal_all() const { return unimodal_a && unimodal_b && unimodal_c; }

    bool operator==(const ConditionsReport&) const = default;
};

ConditionsReport check_conditions(const QPythTriple& t);

// The closed-form family over integer bases n >= 2:
//   A = (1 + q^n) [n]_q,  B = [n+1]_q [n-1]_q,  C = 1 + q [n]_q^2.
QPythTriple series_solution(const Int& n);

// (q n1^2 + d1^2)(q n2^2 + d2^2) = (q n1 n2 + d1 d2)^2 + q (n1 d2 - d1 n2)^2,
// checked by exact expansion.
bool brahmagupta_check(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2);

// Pythagorean tree with every node of fraction > 1 annotated by its
// deformed triple; the two stem nodes carry no annotation.
struct QTreeNode {
    TreeNode node; // children of the embedded node are left empty
    std::optional<QPythTriple> deformation;
    std::vector<QTreeNode> children;
};

QTreeNode q_pythagorean_tree(int depth);

} // namespace qpyth
