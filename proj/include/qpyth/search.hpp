#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qpyth/poly.hpp"
#include "qpyth/triples.hpp"

namespace qpyth {

struct SearchBounds {
    int max_deg_c = 1;    // bound on deg C (= deg A)
    Int max_coeff = 1;    // uniform cap on A, B and C coefficients
    bool require_unimodal = false;

    bool operator==(const SearchBounds&) const = default;
};

struct Solution {
    Poly A;
    Poly B;
    Poly C; // canonical member of the {C, C*} pair

    bool operator==(const Solution&) const = default;
};

// Nonzero coefficient count across A, B and C.
int solution_terms(const Solution& s);

struct SolutionSet {
    ClassicalTriple target;
    SearchBounds bounds;
    std::vector<Solution> solutions; // sorted by (deg C, C, A, B), duplicate-free
    std::uint64_t candidates_examined = 0;
};

/**
 * All polynomials of exact degree deg with coefficient sum `sum` that are
 * palindromic, have every coefficient >= 1 and both end coefficients equal
 * to 1. Emitted in lexicographic order of the ascending coefficient vector.
 * Infeasible parameters (sum too small, parity mismatch) yield an empty
 * sequence. An optional cap restricts every coefficient.
 */
std::vector<Poly> enumerate_palindromic(const Int& sum, int deg,
                                        const std::optional<Int>& max_coeff = std::nullopt);

/**
 * All C with C(1) = c, positive coefficients, ends equal to 1 and
 * C * reciprocal(C) = S, one canonical representative per {C, C*} pair.
 * The search fixes the pair sums c_t + c_(D-t) from the low-order coefficient
 * equations of the product, so only genuinely free choices branch.
 * Returns an empty list when S admits no such factorization. An optional cap
 * restricts every coefficient of C (equivalent to filtering afterwards).
 */
std::vector<Poly> solve_for_C(const Poly& s, const Int& c,
                              const std::optional<Int>& max_coeff = std::nullopt);

using SearchProgress = std::function<void(std::uint64_t examined, std::uint64_t found)>;

/**
 * Bounded exhaustive classification of solutions for a standard target
 * triple: enumerates palindromic A with A(1) = a and B with B(1) = b over all
 * degree pairs deg A = deg B + 1 <= max_deg_c (the only degree pattern whose
 * A^2 + q B^2 can be a C C* product), factors each A^2 + q B^2 through
 * solve_for_C and keeps everything within the coefficient cap. Every solution
 * within the bounds appears in the result.
 */
SolutionSet search_solutions(const ClassicalTriple& target, const SearchBounds& bounds,
                             const SearchProgress& progress = {});

} // namespace qpyth
