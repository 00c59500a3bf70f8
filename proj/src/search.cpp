#include "qpyth/search.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace qpyth {

int solution_terms(const Solution& s) {
    auto nonzero = [](const Poly& p) {
        int n = 0;
        for (const Int& c : p.coeffs()) {
            if (c != 0) ++n;
        }
        return n;
    };
    return nonzero(s.A) + nonzero(s.B) + nonzero(s.C);
}

namespace {

// Fills the free half of a palindromic coefficient vector slot by slot.
void fill_pairs(std::vector<Int>& coeffs, std::size_t slot, std::size_t pair_slots,
                bool has_middle, Int remaining, const Int& cap, std::vector<Poly>& out) {
    const std::size_t deg = coeffs.size() - 1;
    if (slot == pair_slots + 1) {
        if (has_middle) {
            // remaining is what the middle coefficient must absorb
            if (remaining < 1 || remaining > cap) return;
            coeffs[deg / 2] = remaining;
        } else if (remaining != 0) {
            return;
        }
        out.emplace_back(coeffs);
        return;
    }
    const std::size_t slots_left = pair_slots + 1 - slot;
    for (Int v = 1; v <= cap; ++v) {
        // Each remaining pair slot consumes 2v' with v' in [1, cap]; a middle
        // slot consumes m in [1, cap].
        Int rest = remaining - 2 * v;
        Int lo = 2 * Int(slots_left - 1) + (has_middle ? 1 : 0);
        Int hi = (2 * Int(slots_left - 1) + (has_middle ? 1 : 0)) * cap;
        if (rest < lo) break;
        if (rest > hi) continue;
        coeffs[slot] = v;
        coeffs[deg - slot] = v;
        fill_pairs(coeffs, slot + 1, pair_slots, has_middle, rest, cap, out);
    }
}

} // namespace

std::vector<Poly> enumerate_palindromic(const Int& sum, int deg,
                                        const std::optional<Int>& max_coeff) {
    if (deg < 0) throw std::domain_error("degree must be nonnegative");
    if (deg == 0) {
        // Constant palindromes with unit ends: only the polynomial 1.
        if (sum == 1) return {Poly::one()};
        return {};
    }
    if (sum < deg + 1) return {};
    const Int cap = max_coeff.value_or(sum);
    if (cap < 1) return {};

    std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1, 0);
    coeffs.front() = 1;
    coeffs.back() = 1;
    const bool has_middle = deg % 2 == 0;
    const std::size_t pair_slots = has_middle ? static_cast<std::size_t>(deg) / 2 - 1
                                              : (static_cast<std::size_t>(deg) - 1) / 2;
    Int remaining = sum - 2;
    if (!has_middle && remaining % 2 != 0) return {};

    std::vector<Poly> out;
    if (pair_slots == 0) {
        if (has_middle) {
            if (remaining >= 1 && remaining <= cap) {
                coeffs[static_cast<std::size_t>(deg) / 2] = remaining;
                out.emplace_back(coeffs);
            }
        } else if (remaining == 0) {
            out.emplace_back(coeffs);
        }
        return out;
    }
    fill_pairs(coeffs, 1, pair_slots, has_middle, std::move(remaining), cap, out);
    return out;
}

namespace {

// Depth-first factorization of S = C C*. Level t places the pair
// (c_t, c_(d-t)), whose sum is pinned by the product's coefficient at q^t;
// the product's middle coefficient (the sum of squares of all c_i) is
// tracked incrementally and prunes the split of each pair sum.
//
// Templated over the integer type: the scalar reference runs on unbounded
// integers, and when the inputs are provably small enough for 64-bit
// intermediates a machine-word variant runs instead. Both produce the same
// factor list; the dispatch below checks the bounds.
template <typename I>
struct CFactorizer {
    std::vector<I> s; // coefficients 0..2d of the product
    I cap;
    std::vector<I> c;
    I squares_left; // middle coefficient minus squares already placed
    std::vector<Poly> found;

    void emit_if_valid() {
        if (squares_left != 0) return;
        // Equations below the middle were enforced level by level and the
        // ones above it follow by palindromy; only the band between the last
        // placed pair and the middle remains.
        const std::size_t d = c.size() - 1;
        for (std::size_t j = d / 2 + 1; j < d; ++j) {
            I acc = 0;
            for (std::size_t i = 0; i <= j; ++i) acc += c[i] * c[d - j + i];
            if (acc != s[j]) return;
        }
        found.emplace_back(std::vector<Int>(c.begin(), c.end()));
    }

    void descend(std::size_t t) {
        const std::size_t d = c.size() - 1;
        if (2 * t > d) {
            emit_if_valid();
            return;
        }
        I pair_sum = s[t];
        for (std::size_t i = 1; i < t; ++i) pair_sum -= c[i] * c[d - t + i];
        if (2 * t == d) {
            // middle coefficient: placed once, counted once in the squares
            if (pair_sum < 2 || pair_sum % 2 != 0 || pair_sum > 2 * cap) return;
            I v = pair_sum / 2;
            if (v * v > squares_left) return;
            c[t] = v;
            squares_left -= v * v;
            descend(t + 1);
            squares_left += v * v;
            return;
        }
        if (pair_sum < 2 || pair_sum > 2 * cap) return;
        const std::size_t pairs_left = (d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2) - t;
        const bool has_middle = d % 2 == 0;
        const I slots = 2 * I(pairs_left) + (has_middle ? 1 : 0);
        const I min_rest = slots;
        const I max_rest = slots * cap * cap;
        const I lo = pair_sum - cap < 1 ? I(1) : I(pair_sum - cap);
        const I hi = cap < pair_sum - 1 ? cap : I(pair_sum - 1);
        for (I v = lo; v <= hi; ++v) {
            I w = pair_sum - v;
            I rest = squares_left - v * v - w * w;
            if (rest < min_rest || rest > max_rest) continue;
            c[t] = v;
            c[d - t] = w;
            squares_left = rest;
            descend(t + 1);
            squares_left += v * v + w * w;
        }
    }
};

template <typename I>
std::vector<Poly> factor_product(const Poly& s, int d, const I& cap) {
    std::vector<I> s_coeffs;
    s_coeffs.reserve(static_cast<std::size_t>(s.degree()) + 1);
    for (const Int& v : s.coeffs()) {
        if constexpr (std::is_same_v<I, Int>) {
            s_coeffs.push_back(v);
        } else {
            s_coeffs.push_back(v.convert_to<I>());
        }
    }
    std::vector<I> coeffs(static_cast<std::size_t>(d) + 1, I(0));
    coeffs.front() = 1;
    coeffs.back() = 1;
    I squares = s_coeffs[static_cast<std::size_t>(d)] - 2;
    CFactorizer<I> factorizer{std::move(s_coeffs), cap, std::move(coeffs), squares, {}};
    factorizer.descend(1);
    return std::move(factorizer.found);
}

// Largest magnitudes the machine-word variant may see: pair sums mix one
// product coefficient with at most d+1 terms bounded by cap^2, and the rest
// bounds multiply cap^2 by the slot count.
bool fits_machine_words(const Poly& s, int d, const Int& cap) {
    static const Int kCoeffLimit = Int(1) << 50;
    if (cap > 1'000'000 || d > 4096) return false;
    for (const Int& v : s.coeffs()) {
        if (abs(v) > kCoeffLimit) return false;
    }
    return true;
}

} // namespace

std::vector<Poly> solve_for_C(const Poly& s, const Int& c,
                              const std::optional<Int>& max_coeff) {
    if (c < 1) throw std::domain_error("target hypotenuse must be positive");
    if (s.is_zero() || s.degree() % 2 != 0 || s.constant_term() != 1 || !is_palindromic(s) ||
        s.eval_at_one() != c * c) {
        return {};
    }
    const Int cap = max_coeff.value_or(c);
    if (cap < 1) return {};
    const int d = s.degree() / 2;
    if (d == 0) return c == 1 ? std::vector<Poly>{Poly::one()} : std::vector<Poly>{};

    std::vector<Poly> found =
        fits_machine_words(s, d, cap)
            ? factor_product<long long>(s, d, cap.convert_to<long long>())
            : factor_product<Int>(s, d, cap);

    // One representative per {C, C*} pair: the lexicographically smaller.
    std::vector<Poly> canon;
    for (const Poly& p : found) {
        Poly rev = reciprocal(p);
        canon.push_back(poly_less(rev, p) ? std::move(rev) : p);
    }
    std::sort(canon.begin(), canon.end(), poly_less);
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    return canon;
}

SolutionSet search_solutions(const ClassicalTriple& target, const SearchBounds& bounds,
                             const SearchProgress& progress) {
    if (!is_standard(target)) {
        throw std::domain_error("search target must be a standard triple (even leg first)");
    }
    if (bounds.max_deg_c < 1 || bounds.max_coeff < 1) {
        throw std::domain_error("search bounds must be positive");
    }
    SolutionSet result{target, bounds, {}, 0};
    std::uint64_t found = 0;

    auto within_cap = [&](const Poly& p) {
        for (const Int& v : p.coeffs()) {
            if (v > bounds.max_coeff) return false;
        }
        return true;
    };

    for (int deg_a = 1; deg_a <= bounds.max_deg_c; ++deg_a) {
        const auto as = enumerate_palindromic(target.a(), deg_a, bounds.max_coeff);
        if (as.empty()) continue;
        const auto bs = enumerate_palindromic(target.b(), deg_a - 1, bounds.max_coeff);
        if (bs.empty()) continue;
        std::vector<Poly> a_squares;
        a_squares.reserve(as.size());
        for (const Poly& a : as) a_squares.push_back(a * a);
        for (const Poly& b : bs) {
            const bool b_unimodal = is_unimodal(b);
            const Poly b_square = (b * b).shifted(1);
            for (std::size_t i = 0; i < as.size(); ++i) {
                const Poly& a = as[i];
                ++result.candidates_examined;
                if (bounds.require_unimodal && (!b_unimodal || !is_unimodal(a))) continue;
                const Poly s = a_squares[i] + b_square;
                for (Poly& c : solve_for_C(s, target.c(), bounds.max_coeff)) {
                    if (!within_cap(c)) continue;
                    if (bounds.require_unimodal && !is_unimodal(c)) continue;
                    result.solutions.push_back(Solution{a, b, std::move(c)});
                    ++found;
                }
                if (progress && result.candidates_examined % 1024 == 0) {
                    progress(result.candidates_examined, found);
                }
            }
        }
    }

    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const Solution& x, const Solution& y) {
                  if (!(x.C == y.C)) return poly_less(x.C, y.C);
                  if (!(x.A == y.A)) return poly_less(x.A, y.A);
                  return poly_less(x.B, y.B);
              });
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()),
                           result.solutions.end());
    return result;
}

} // namespace qpyth
