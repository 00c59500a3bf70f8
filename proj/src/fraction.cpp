#include "qpyth/fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace qpyth {

Fraction::Fraction(Int m, Int n) : num_(std::move(m)), den_(std::move(n)) {
    if (num_ <= 0 || den_ <= 0) {
        throw std::domain_error("fraction must have positive numerator and denominator");
    }
    Int g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Fraction Fraction::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Fraction(Int(text), 1);
        return Fraction(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse fraction: " + text);
    }
}

std::string ContinuedFraction::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out << ",";
        out << terms[i].str();
    }
    out << "]";
    return out.str();
}

ContinuedFraction cf_expand(const Fraction& f) {
    if (!f.at_least_one()) {
        throw std::domain_error("expansion defined for fractions >= 1");
    }
    ContinuedFraction cf;
    Int m = f.num(), n = f.den();
    while (n != 0) {
        cf.terms.push_back(m / n);
        Int r = m % n;
        m = n;
        n = r;
    }
    if (!cf.odd_length()) {
        Int& last = cf.terms.back();
        if (last >= 2) {
            last -= 1;
            cf.terms.push_back(1);
        } else {
            cf.terms.pop_back();
            cf.terms.back() += 1;
        }
    }
    return cf;
}

Fraction cf_to_fraction(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("empty continued fraction");
    for (const Int& a : cf.terms) {
        if (a < 1) throw std::domain_error("continued-fraction terms must be >= 1");
    }
    // Convergent recurrence, evaluated front to back.
    Int p_prev = 1, p = cf.terms.front();
    Int q_prev = 0, q = 1;
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        Int p_next = cf.terms[i] * p + p_prev;
        Int q_next = cf.terms[i] * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return Fraction(p, q);
}

ProjRat::ProjRat(Int p, Int r) : num_(std::move(p)), den_(std::move(r)) {
    if (num_ == 0 && den_ == 0) throw std::domain_error("0/0 is not a projective point");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 0) {
        num_ = 1;
    } else {
        Int g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
}

Fraction ProjRat::to_fraction() const {
    if (is_infinity()) throw std::domain_error("infinity is not a fraction");
    return Fraction(num_, den_);
}

} // namespace qpyth
