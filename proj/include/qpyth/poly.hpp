#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpyth/integer.hpp"

namespace qpyth {

/**
 * Univariate polynomials over the integers in the variable q.
 *
 * Coefficients are stored ascending: coeffs()[i] is the coefficient of q^i.
 * The representation is always normalized (no trailing zero entries); the
 * zero polynomial is the empty sequence and reports degree() == kNoDegree.
 *
 * Values are immutable after construction and all operations are pure, so
 * polynomials can be shared freely between threads.
 */
class Poly {
public:
    static constexpr int kNoDegree = -1;

    Poly() = default;
    explicit Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<long long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        normalize();
    }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{1}; }
    static Poly constant(Int c);
    // c * q^k
    static Poly monomial(Int c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    // Coefficient of q^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const Int& constant_term() const { return coeff(0); }
    const Int& leading() const;

    Int eval(const Int& x) const;
    Int eval_at_one() const;

    Poly shifted(int k) const;

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

    std::string str() const;

private:
    void normalize();

    std::vector<Int> coeffs_;
};

Poly operator+(const Poly& p, const Poly& r);
Poly operator-(const Poly& p, const Poly& r);
Poly operator*(const Poly& p, const Poly& r);
Poly operator-(const Poly& p);
Poly operator*(const Int& c, const Poly& p);

inline Poly add(const Poly& p, const Poly& r) { return p + r; }
inline Poly sub(const Poly& p, const Poly& r) { return p - r; }
inline Poly mul(const Poly& p, const Poly& r) { return p * r; }
inline Poly neg(const Poly& p) { return -p; }
inline Poly shift(const Poly& p, int k) { return p.shifted(k); }
inline Int eval_int(const Poly& p, const Int& x) { return p.eval(x); }

// q^deg(p) * p(1/q): the coefficient sequence reversed. Undefined for zero.
Poly reciprocal(const Poly& p);

// q^d * p(1/q) for a prescribed formal degree d >= deg(p): the reversal
// padded so that the result has degree d - (order of p at 0).
Poly invert_variable_scaled(const Poly& p, int d);

// p equals its own reciprocal. Undefined for zero.
bool is_palindromic(const Poly& p);

// Constant and leading coefficients both equal 1. False for zero.
bool is_monic_both_ends(const Poly& p);

// Every coefficient from q^0 through the leading term is >= 1 (internal
// zeros disqualify). False for zero.
bool has_positive_coeffs(const Poly& p);

// Coefficients non-decreasing up to some peak, non-increasing after it.
bool is_unimodal(const Poly& p);

// Thrown by exact_div when the division leaves a remainder.
class ExactDivisionError : public std::domain_error {
public:
    ExactDivisionError(std::string message, Poly remainder)
        : std::domain_error(std::move(message)), remainder_(std::move(remainder)) {}
    const Poly& remainder() const { return remainder_; }

private:
    Poly remainder_;
};

// Exact quotient p / d over the integers; throws ExactDivisionError (carrying
// the offending remainder) when d does not divide p.
Poly exact_div(const Poly& p, const Poly& d);

// Total order used for canonical picks and sorted output: by degree, then by
// the ascending coefficient sequence.
bool poly_less(const Poly& a, const Poly& b);

// Parse a comma-separated ascending coefficient list such as "1,2,1,1".
Poly parse_coeff_list(const std::string& text);

} // namespace qpyth
