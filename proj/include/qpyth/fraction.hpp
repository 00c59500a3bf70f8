#pragma once

#include <string>
#include <vector>

#include "qpyth/integer.hpp"

namespace qpyth {

// Positive rational m/n kept in lowest terms.
class Fraction {
public:
    Fraction(Int m, Int n);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    Fraction inverse() const { return Fraction(den_, num_); }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator<(const Fraction& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator<=(const Fraction& o) const { return !(o < *this); }
    bool operator>=(const Fraction& o) const { return !(*this < o); }

    bool at_least_one() const { return num_ >= den_; }
    bool above_one() const { return num_ > den_; }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    // Accepts "m/n" or a bare "m" (meaning m/1).
    static Fraction parse(const std::string& text);

private:
    Int num_, den_;
};

// Finite continued fraction [a1, a2, ..., ak] with all terms >= 1.
struct ContinuedFraction {
    std::vector<Int> terms;

    bool odd_length() const { return terms.size() % 2 == 1; }
    bool operator==(const ContinuedFraction& o) const { return terms == o.terms; }
    std::string str() const;
};

// Euclidean expansion of a fraction >= 1, canonicalized to odd length:
// an even expansion [.., ak] is rewritten as [.., ak-1, 1] when ak >= 2 and
// as [.., a(k-1)+1] when ak == 1.
ContinuedFraction cf_expand(const Fraction& f);

// Exact evaluation; accepts any sequence of positive terms.
Fraction cf_to_fraction(const ContinuedFraction& cf);

// Point of the rational projective line: p/r with gcd(|p|, r) = 1 and r >= 0;
// infinity is represented by 1/0.
class ProjRat {
public:
    ProjRat(Int p, Int r);
    static ProjRat infinity() { return ProjRat(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }

    bool operator==(const ProjRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::string str() const { return num_.str() + "/" + den_.str(); }

    static ProjRat from_fraction(const Fraction& f) { return ProjRat(f.num(), f.den()); }
    Fraction to_fraction() const;

private:
    Int num_, den_;
};

} // namespace qpyth
