#include "qpyth/qarith.hpp"

#include <stdexcept>

namespace qpyth {

namespace {

// Cap on materialized q-integer length; beyond this the dense coefficient
// vector would not be a usable object anyway.
constexpr long long kMaxQIntLength = 1'000'000;

void check_qrational_invariants(const QRational& r) {
    if (r.num.eval_at_one() != r.base.num() || r.den.eval_at_one() != r.base.den()) {
        throw std::logic_error("q-rational does not specialize to its base at q = 1");
    }
    for (const Int& c : r.num.coeffs()) {
        if (c < 0) throw std::logic_error("q-rational numerator has a negative coefficient");
    }
    for (const Int& c : r.den.coeffs()) {
        if (c < 0) throw std::logic_error("q-rational denominator has a negative coefficient");
    }
    if (r.base.above_one()) {
        if (!(r.num.degree() > r.den.degree()) || r.num.leading() != 1 || r.den.leading() != 1 ||
            r.num.constant_term() != 1 || r.den.constant_term() != 1) {
            throw std::logic_error("q-rational above 1 violates shape invariants");
        }
    }
}

} // namespace

Mat2Poly operator*(const Mat2Poly& a, const Mat2Poly& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Poly q_int(const Int& n) {
    if (n < 1) throw std::domain_error("q-integer defined for positive integers");
    const long long len = to_small(n, "q-integer");
    if (len > kMaxQIntLength) {
        throw std::length_error("q-integer too large to materialize: " + n.str());
    }
    return Poly(std::vector<Int>(static_cast<std::size_t>(len), 1));
}

Mat2Poly gen_R() { return {Poly{0, 1}, Poly::one(), Poly{}, Poly::one()}; }
Mat2Poly gen_L() { return {Poly{0, 1}, Poly{}, Poly{0, 1}, Poly::one()}; }
Mat2Poly x0_matrix() { return {Poly{}, Poly{}, Poly{}, Poly::one()}; }

Mat2Poly gen_R_power(const Int& a) {
    if (a < 1) throw std::domain_error("generator power must be >= 1");
    const int k = static_cast<int>(to_small(a, "generator power"));
    if (k > kMaxQIntLength) throw std::length_error("generator power too large: " + a.str());
    // R_q^a = [[q^a, [a]_q],[0, 1]]
    return {Poly::monomial(1, k), q_int(a), Poly{}, Poly::one()};
}

Mat2Poly gen_L_power(const Int& a) {
    if (a < 1) throw std::domain_error("generator power must be >= 1");
    const int k = static_cast<int>(to_small(a, "generator power"));
    if (k > kMaxQIntLength) throw std::length_error("generator power too large: " + a.str());
    // L_q^a = [[q^a, 0],[q [a]_q, 1]]
    return {Poly::monomial(1, k), Poly{}, q_int(a).shifted(1), Poly::one()};
}

Mat2Poly word_matrix(const ContinuedFraction& cf) {
    if (!cf.odd_length()) {
        throw std::domain_error("word matrix requires an odd-length continued fraction");
    }
    Mat2Poly acc = Mat2Poly::identity();
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        acc = acc * (i % 2 == 0 ? gen_R_power(cf.terms[i]) : gen_L_power(cf.terms[i]));
    }
    return acc;
}

Mat2Poly transpose_word_matrix(const ContinuedFraction& cf) {
    if (!cf.odd_length()) {
        throw std::domain_error("word matrix requires an odd-length continued fraction");
    }
    Mat2Poly acc = Mat2Poly::identity();
    for (std::size_t i = cf.terms.size(); i-- > 0;) {
        acc = acc * (i % 2 == 0 ? gen_L_power(cf.terms[i]) : gen_R_power(cf.terms[i]));
    }
    return acc;
}

Mat2Poly q_transpose(const Mat2Poly& m) {
    if (m.e21.constant_term() != 0) {
        throw std::domain_error("q-transpose requires the bottom-left entry to be divisible by q");
    }
    Poly lowered = m.e21.is_zero()
                       ? Poly{}
                       : Poly(std::vector<Int>(m.e21.coeffs().begin() + 1, m.e21.coeffs().end()));
    return {m.e11, std::move(lowered), m.e12.shifted(1), m.e22};
}

QRational q_rational(const Fraction& f) {
    if (!f.at_least_one()) {
        throw std::domain_error("q-rational construction requires a fraction >= 1");
    }
    Mat2Poly a = word_matrix(cf_expand(f));
    QRational r{std::move(a.e12), std::move(a.e22), f};
    check_qrational_invariants(r);
    return r;
}

QRational q_rational_inverse(const QRational& r) {
    const int d = std::max(r.num.degree(), r.den.degree());
    return {invert_variable_scaled(r.den, d), invert_variable_scaled(r.num, d),
            r.base.inverse()};
}

QRational q_rational_plus_one(const QRational& r) {
    return {r.num.shifted(1) + r.den, r.den,
            Fraction(r.base.num() + r.base.den(), r.base.den())};
}

QRational perrine_inverse(const QRational& r) {
    const Int& m = r.base.num();
    const Int& n = r.base.den();
    if (m == n) return {Poly::one(), Poly::one(), Fraction(1, 1)};
    if (m < n) {
        // The inverse is above 1; the word matrix gives it outright.
        return q_rational(r.base.inverse());
    }
    // [n/m]_q = 1 - 1/[m/(m-n)]_q, so the pair is (N' - D', N') for the
    // deformation of m/(m-n).
    QRational s = q_rational(Fraction(m, m - n));
    Poly num = s.num - s.den;
    Poly den = s.num;
    // Strip any common monomial factor and integer content before returning a
    // canonical representative (a no-op for the values produced above).
    int shift = 0;
    while (shift <= num.degree() && shift <= den.degree() && num.coeff(shift) == 0 &&
           den.coeff(shift) == 0) {
        ++shift;
    }
    if (shift > 0) {
        auto drop = [shift](const Poly& p) {
            return Poly(std::vector<Int>(p.coeffs().begin() + shift, p.coeffs().end()));
        };
        num = drop(num);
        den = drop(den);
    }
    Int content = 0;
    for (const Int& c : num.coeffs()) content = gcd(content, c);
    for (const Int& c : den.coeffs()) content = gcd(content, c);
    if (content > 1) {
        num = exact_div(num, Poly::constant(content));
        den = exact_div(den, Poly::constant(content));
    }
    return {std::move(num), std::move(den), r.base.inverse()};
}

Poly total_positivity_poly(const QRational& r1, const QRational& r2) {
    if (!(r1.base > r2.base)) {
        throw std::domain_error("total positivity polynomial requires base(r1) > base(r2)");
    }
    return r1.num * r2.den - r1.den * r2.num;
}

std::string render(const QRational& r) {
    return "[" + r.base.str() + "]_q = (" + r.num.str() + ") / (" + r.den.str() + ")";
}

} // namespace qpyth
