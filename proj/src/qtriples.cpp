#include "qpyth/qtriples.hpp"

#include <stdexcept>

namespace qpyth {

Mat2Poly q_matrix(const Fraction& f) {
    if (!f.above_one()) throw std::domain_error("degenerate base: fraction must exceed 1");
    const ContinuedFraction cf = cf_expand(f);
    return word_matrix(cf) * x0_matrix() * transpose_word_matrix(cf);
}

Poly q_trace_c(const Fraction& f) {
    if (!f.above_one()) throw std::domain_error("degenerate base: fraction must exceed 1");
    const QRational r = q_rational(f);
    return (r.num * r.num).shifted(1) + r.den * r.den;
}

QPythTriple q_triple(const Fraction& f) {
    if (!f.above_one()) {
        throw std::domain_error("degenerate base: the B polynomial vanishes at 1");
    }
    const QRational r = q_rational(f);
    const QRational s = q_rational_inverse(r);
    Poly a = (r.num * s.num).shifted(1) + r.den * s.den;
    Poly b = r.num * s.den - r.den * s.num;
    Poly c = (r.num * r.num).shifted(1) + r.den * r.den;
    return {std::move(a), std::move(b), std::move(c), f};
}

bool verify_pythagoras(const Poly& a, const Poly& b, const Poly& c) {
    if (c.is_zero()) throw std::domain_error("C must be nonzero");
    return a * a + (b * b).shifted(1) == c * reciprocal(c);
}

ConditionsReport check_conditions(const QPythTriple& t) {
    ConditionsReport r;
    r.positive_a = has_positive_coeffs(t.A);
    r.positive_b = has_positive_coeffs(t.B);
    r.positive_c = has_positive_coeffs(t.C);
    r.palindromic_a = !t.A.is_zero() && is_palindromic(t.A);
    r.palindromic_b = !t.B.is_zero() && is_palindromic(t.B);
    r.monic_a = is_monic_both_ends(t.A);
    r.monic_b = is_monic_both_ends(t.B);
    r.monic_c = is_monic_both_ends(t.C);
    r.monic_cstar = !t.C.is_zero() && is_monic_both_ends(t.c_star());
    r.unimodal_a = is_unimodal(t.A);
    r.unimodal_b = is_unimodal(t.B);
    r.unimodal_c = is_unimodal(t.C);
    return r;
}

QPythTriple series_solution(const Int& n) {
    if (n < 2) throw std::domain_error("series solutions start at 2: smaller bases degenerate");
    const int k = static_cast<int>(to_small(n, "series index"));
    const Poly qn = q_int(n);
    Poly a = (Poly::one() + Poly::monomial(1, k)) * qn;
    Poly b = q_int(n + 1) * q_int(n - 1);
    Poly c = Poly::one() + (qn * qn).shifted(1);
    return {std::move(a), std::move(b), std::move(c), Fraction(n, 1)};
}

bool brahmagupta_check(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2) {
    const Poly lhs = ((n1 * n1).shifted(1) + d1 * d1) * ((n2 * n2).shifted(1) + d2 * d2);
    const Poly s = (n1 * n2).shifted(1) + d1 * d2;
    const Poly t = n1 * d2 - d1 * n2;
    return lhs == s * s + (t * t).shifted(1);
}

namespace {

QTreeNode annotate(const TreeNode& node) {
    QTreeNode out{TreeNode{node.word, node.matrix, node.triple, node.fraction, {}},
                  std::nullopt,
                  {}};
    if (node.fraction && node.fraction->above_one()) {
        out.deformation = q_triple(*node.fraction);
    }
    out.children.reserve(node.children.size());
    for (const TreeNode& child : node.children) out.children.push_back(annotate(child));
    return out;
}

} // namespace

QTreeNode q_pythagorean_tree(int depth) { return annotate(pythagorean_tree(depth)); }

} // namespace qpyth
