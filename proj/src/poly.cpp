#include "qpyth/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qpyth {

long long to_small(const Int& x, const char* what) {
    static const Int kLimit = 1'000'000'000;
    if (x < -kLimit || x > kLimit) {
        throw std::invalid_argument(std::string(what) + " out of supported range: " + x.str());
    }
    return x.convert_to<long long>();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Int c) {
    std::vector<Int> v;
    if (c != 0) v.push_back(std::move(c));
    return Poly(std::move(v));
}

Poly Poly::monomial(Int c, int k) {
    if (k < 0) throw std::invalid_argument("monomial power must be nonnegative");
    if (c == 0) return Poly{};
    std::vector<Int> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Poly(std::move(v));
}

const Int& Poly::coeff(int i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

const Int& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Int Poly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int Poly::eval_at_one() const {
    Int acc = 0;
    for (const Int& c : coeffs_) acc += c;
    return acc;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shift must be nonnegative");
    if (is_zero() || k == 0) return *this;
    std::vector<Int> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Poly(std::move(v));
}

Poly operator+(const Poly& p, const Poly& r) {
    const auto& a = p.coeffs();
    const auto& b = r.coeffs();
    std::vector<Int> v(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& p, const Poly& r) {
    const auto& a = p.coeffs();
    const auto& b = r.coeffs();
    std::vector<Int> v(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& p, const Poly& r) {
    if (p.is_zero() || r.is_zero()) return Poly{};
    const auto& a = p.coeffs();
    const auto& b = r.coeffs();
    std::vector<Int> v(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
    }
    return Poly(std::move(v));
}

Poly operator-(const Poly& p) {
    std::vector<Int> v = p.coeffs();
    for (Int& c : v) c = -c;
    return Poly(std::move(v));
}

Poly operator*(const Int& c, const Poly& p) {
    if (c == 0) return Poly{};
    std::vector<Int> v = p.coeffs();
    for (Int& e : v) e *= c;
    return Poly(std::move(v));
}

Poly reciprocal(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("reciprocal of zero undefined");
    std::vector<Int> v(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly(std::move(v));
}

Poly invert_variable_scaled(const Poly& p, int d) {
    if (d < 0) throw std::invalid_argument("formal degree must be nonnegative");
    if (p.is_zero()) return p;
    if (d < p.degree()) {
        throw std::domain_error("q^d p(1/q) is not a polynomial: d < deg(p)");
    }
    std::vector<Int> v(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<std::size_t>(d - i)] = p.coeff(i);
    return Poly(std::move(v));
}

bool is_palindromic(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("palindromicity of zero undefined");
    const auto& c = p.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
        if (c[i] != c[j]) return false;
    }
    return true;
}

bool is_monic_both_ends(const Poly& p) {
    if (p.is_zero()) return false;
    return p.constant_term() == 1 && p.leading() == 1;
}

bool has_positive_coeffs(const Poly& p) {
    if (p.is_zero()) return false;
    for (const Int& c : p.coeffs()) {
        if (c < 1) return false;
    }
    return true;
}

bool is_unimodal(const Poly& p) {
    const auto& c = p.coeffs();
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    return c.empty() || i == c.size() - 1;
}

Poly exact_div(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return Poly{};
    if (p.degree() < d.degree()) {
        throw ExactDivisionError("non-exact polynomial division", p);
    }
    std::vector<Int> rem = p.coeffs();
    const int dq = p.degree() - d.degree();
    std::vector<Int> quot(static_cast<std::size_t>(dq) + 1, 0);
    for (int i = dq; i >= 0; --i) {
        const Int& top = rem[static_cast<std::size_t>(i + d.degree())];
        if (top % d.leading() != 0) {
            throw ExactDivisionError("non-exact polynomial division", Poly(std::move(rem)));
        }
        Int t = top / d.leading();
        if (t != 0) {
            for (int j = 0; j <= d.degree(); ++j) {
                rem[static_cast<std::size_t>(i + j)] -= t * d.coeff(j);
            }
        }
        quot[static_cast<std::size_t>(i)] = std::move(t);
    }
    Poly remainder(std::move(rem));
    if (!remainder.is_zero()) {
        throw ExactDivisionError("non-exact polynomial division", remainder);
    }
    return Poly(std::move(quot));
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                        b.coeffs().begin(), b.coeffs().end());
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        const Int mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "q";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Poly parse_coeff_list(const std::string& text) {
    std::vector<Int> v;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) throw std::invalid_argument("empty coefficient in list");
        const auto end = token.find_last_not_of(" \t");
        try {
            v.emplace_back(token.substr(begin, end - begin + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient: " + token);
        }
    }
    if (v.empty()) throw std::invalid_argument("empty coefficient list");
    return Poly(std::move(v));
}

} // namespace qpyth
