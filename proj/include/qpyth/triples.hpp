#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpyth/fraction.hpp"
#include "qpyth/integer.hpp"

namespace qpyth {

/**
 * Integer triple with a^2 + b^2 = c^2 and c > 0. b carries its sign: the
 * tree root is (0,-1,1) and the left branch action flips b. Display and
 * figure comparisons use |b|.
 */
class ClassicalTriple {
public:
    ClassicalTriple(Int a, Int b, Int c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    // (a, |b|, c), the form shown in tree listings.
    ClassicalTriple displayed() const { return ClassicalTriple(a_, abs(b_), c_); }

    bool operator==(const ClassicalTriple& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    std::string str() const { return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")"; }

private:
    Int a_, b_, c_;
};

// Symmetric 2x2 integer matrix of rank <= 1 with nonnegative diagonal;
// the matrix form of a triple.
class SymMat2 {
public:
    SymMat2(Int x11, Int x12, Int x22);

    const Int& x11() const { return x11_; }
    const Int& x12() const { return x12_; }
    const Int& x22() const { return x22_; }

    Int trace() const { return x11_ + x22_; }

    bool operator==(const SymMat2& o) const {
        return x11_ == o.x11_ && x12_ == o.x12_ && x22_ == o.x22_;
    }

private:
    Int x11_, x12_, x22_;
};

// Plain 2x2 integer matrix, used for the group action and Moebius maps.
struct Mat2Int {
    Int e11, e12, e21, e22;

    Int det() const { return e11 * e22 - e12 * e21; }
    static Mat2Int identity() { return {1, 0, 0, 1}; }
    bool operator==(const Mat2Int& o) const {
        return e11 == o.e11 && e12 == o.e12 && e21 == o.e21 && e22 == o.e22;
    }
};

Mat2Int operator*(const Mat2Int& a, const Mat2Int& b);

// Classical generators R = [[1,1],[0,1]] and L = [[1,0],[1,1]].
Mat2Int gen_R_classical();
Mat2Int gen_L_classical();

// The alternating classical word R^a1 L^a2 ... R^ak.
Mat2Int word_matrix_classical(const ContinuedFraction& cf);

// (2mn, m^2 - n^2, m^2 + n^2) for coprime m >= n >= 1.
ClassicalTriple euclid_triple(const Int& m, const Int& n);

bool is_pythagorean(const ClassicalTriple& t);
// Positive entries, gcd in {1, 2}, a even when primitive, a/2 odd when gcd 2.
bool is_standard(const ClassicalTriple& t);
bool is_primitive(const ClassicalTriple& t);

// [[ (c+b)/2, a/2 ],[ a/2, (c-b)/2 ]]; requires c+b and c-b even.
SymMat2 triple_to_matrix(const ClassicalTriple& t);
// c = trace, b = x11 - x22, a = 2 x12.
ClassicalTriple matrix_to_triple(const SymMat2& x);

// A X A^T for det(A) = 1.
SymMat2 sl2_act(const Mat2Int& a, const SymMat2& x);

// Fractional-linear action on the projective line; infinity is 1/0.
ProjRat moebius(const Mat2Int& a, const ProjRat& x);

// [[m^2, mn],[mn, n^2]], the outer-product form of Euclid's parametrization.
SymMat2 matrix_from_fraction(const Fraction& f);

/**
 * Node of the Pythagorean tree. The word records the generators applied in
 * order starting from the root matrix X0 = [[0,0],[0,1]]; the fraction is the
 * entry >= 1 of the rank-1 factorization (absent for the degenerate root).
 */
struct TreeNode {
    std::string word;
    SymMat2 matrix;
    ClassicalTriple triple;
    std::optional<Fraction> fraction;
    std::vector<TreeNode> children;
};

constexpr int kMaxTreeDepth = 64;

// The stem (0,-1,1) -> (2,0,2) -> (4,3,5) by R twice, then `depth` binary
// levels below (4,3,5): left child by L, right child by R.
TreeNode pythagorean_tree(int depth);

// Nodes at the given branching level below (4,3,5), left to right.
// Level 0 is (4,3,5) itself.
std::vector<const TreeNode*> tree_row(const TreeNode& root, int level);

} // namespace qpyth
