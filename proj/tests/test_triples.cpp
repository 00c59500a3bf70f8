#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "qpyth/qarith.hpp"
#include "qpyth/triples.hpp"

using namespace qpyth;

namespace {

std::vector<ClassicalTriple> displayed_row(const TreeNode& root, int level) {
    std::vector<ClassicalTriple> out;
    for (const TreeNode* n : tree_row(root, level)) out.push_back(n->triple.displayed());
    return out;
}

ContinuedFraction cf(std::initializer_list<long long> terms) {
    ContinuedFraction out;
    out.terms.assign(terms.begin(), terms.end());
    return out;
}

} // namespace

TEST_CASE("Euclid's formula") {
    CHECK(euclid_triple(2, 1) == ClassicalTriple(4, 3, 5));
    CHECK(euclid_triple(3, 1) == ClassicalTriple(6, 8, 10));
    CHECK(euclid_triple(3, 2) == ClassicalTriple(12, 5, 13));
    CHECK(euclid_triple(1, 1) == ClassicalTriple(2, 0, 2));
    CHECK_THROWS_AS(euclid_triple(4, 2), std::domain_error);
    CHECK_THROWS_AS(euclid_triple(2, 3), std::domain_error);
}

TEST_CASE("triple predicates") {
    CHECK(is_pythagorean(ClassicalTriple(4, 3, 5)));
    CHECK(is_standard(ClassicalTriple(4, 3, 5)));
    CHECK(is_primitive(ClassicalTriple(4, 3, 5)));

    CHECK(is_standard(ClassicalTriple(6, 8, 10)));
    CHECK_FALSE(is_primitive(ClassicalTriple(6, 8, 10)));

    CHECK_FALSE(is_standard(ClassicalTriple(9, 12, 15)));
    CHECK_FALSE(is_standard(ClassicalTriple(3, 4, 5))); // odd first leg
    CHECK_FALSE(is_standard(ClassicalTriple(0, -1, 1)));
    CHECK(is_primitive(ClassicalTriple(0, -1, 1)));

    CHECK_THROWS_AS(ClassicalTriple(1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(ClassicalTriple(3, 4, -5), std::domain_error);
}

TEST_CASE("matrix form of a triple") {
    CHECK(triple_to_matrix(ClassicalTriple(4, 3, 5)) == SymMat2(4, 2, 1));
    CHECK(matrix_to_triple(SymMat2(1, 1, 1)) == ClassicalTriple(2, 0, 2));
    CHECK(triple_to_matrix(ClassicalTriple(0, -1, 1)) == SymMat2(0, 0, 1));
    // (3,4,5) has an odd first leg, so its matrix is not integral
    CHECK_THROWS_AS(triple_to_matrix(ClassicalTriple(3, 4, 5)), std::domain_error);
    CHECK_THROWS_AS(SymMat2(2, 1, 2), std::domain_error); // rank 2
    CHECK_THROWS_AS(SymMat2(-1, 0, 0), std::domain_error);

    for (long long m = 1; m <= 12; ++m) {
        for (long long n = 1; n <= m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            const ClassicalTriple t = euclid_triple(m, n);
            CHECK(matrix_to_triple(triple_to_matrix(t)) == t);
        }
    }
}

TEST_CASE("group action on triple matrices") {
    const SymMat2 x435 = triple_to_matrix(ClassicalTriple(4, 3, 5));
    CHECK(sl2_act(gen_R_classical(), x435) == SymMat2(9, 3, 1));
    CHECK(matrix_to_triple(sl2_act(gen_R_classical(), x435)) == ClassicalTriple(6, 8, 10));
    CHECK(sl2_act(gen_L_classical(), x435) == SymMat2(4, 6, 9));
    CHECK(matrix_to_triple(sl2_act(gen_L_classical(), x435)) == ClassicalTriple(12, -5, 13));
    CHECK(sl2_act(Mat2Int::identity(), x435) == x435);
    CHECK_THROWS_AS(sl2_act(Mat2Int{2, 0, 0, 1}, x435), std::domain_error);
}

TEST_CASE("Moebius action") {
    CHECK(moebius(gen_R_classical(), ProjRat(0, 1)) == ProjRat(1, 1));
    CHECK(moebius(gen_L_classical(), ProjRat(2, 1)) == ProjRat(2, 3));
    CHECK(moebius(gen_L_classical(), ProjRat::infinity()) == ProjRat(1, 1));
    CHECK(moebius(Mat2Int{1, 0, 0, 0}, ProjRat(1, 2)).is_infinity());

    // The word of 3/2 = [1,1,1] sends 0/1 to 3/2.
    ProjRat x(0, 1);
    for (const Mat2Int& g :
         {gen_R_classical(), gen_L_classical(), gen_R_classical()}) {
        x = moebius(g, x); // applied innermost first: R, then L, then R
    }
    CHECK(x == ProjRat(3, 2));
}

TEST_CASE("word action reproduces every fraction") {
    for (long long m = 1; m <= 30; ++m) {
        for (long long n = 1; n <= m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            const Fraction f(m, n);
            const ContinuedFraction e = cf_expand(f);
            const Mat2Int word = word_matrix_classical(e);
            CHECK(moebius(word, ProjRat(0, 1)) == ProjRat::from_fraction(f));
            CHECK(cf_to_fraction(e) == f);

            // the deformed word specializes to the classical one at q = 1
            const Mat2Poly wq = word_matrix(e);
            CHECK(wq.e11.eval(1) == word.e11);
            CHECK(wq.e12.eval(1) == word.e12);
            CHECK(wq.e21.eval(1) == word.e21);
            CHECK(wq.e22.eval(1) == word.e22);
        }
    }
}

TEST_CASE("Euclid matrix of a fraction") {
    CHECK(matrix_from_fraction(Fraction(2, 1)) == SymMat2(4, 2, 1));
    CHECK(matrix_from_fraction(Fraction(3, 2)) == SymMat2(9, 6, 4));
    CHECK(matrix_from_fraction(Fraction(1, 1)) == SymMat2(1, 1, 1));
    CHECK_THROWS_AS(matrix_from_fraction(Fraction(2, 3)), std::domain_error);

    for (long long m = 1; m <= 20; ++m) {
        for (long long n = 1; n <= m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            CHECK(matrix_to_triple(matrix_from_fraction(Fraction(m, n))) == euclid_triple(m, n));
            if (m > n) CHECK(is_standard(euclid_triple(m, n)));
        }
    }
}

TEST_CASE("tree stem and rows") {
    const TreeNode root = pythagorean_tree(3);
    CHECK(root.triple == ClassicalTriple(0, -1, 1));
    CHECK(root.matrix == SymMat2(0, 0, 1));
    CHECK_FALSE(root.fraction.has_value());
    REQUIRE(root.children.size() == 1);
    const TreeNode& stem = root.children.front();
    CHECK(stem.triple == ClassicalTriple(2, 0, 2));
    CHECK(*stem.fraction == Fraction(1, 1));
    REQUIRE(stem.children.size() == 1);
    const TreeNode& base = stem.children.front();
    CHECK(base.triple == ClassicalTriple(4, 3, 5));
    CHECK(base.word == "RR");
    CHECK(*base.fraction == Fraction(2, 1));

    const auto row1 = displayed_row(root, 1);
    REQUIRE(row1.size() == 2);
    CHECK(row1[0] == ClassicalTriple(12, 5, 13));
    CHECK(row1[1] == ClassicalTriple(6, 8, 10));

    const auto row2 = displayed_row(root, 2);
    const std::vector<ClassicalTriple> expected2 = {
        ClassicalTriple(20, 21, 29), ClassicalTriple(30, 16, 34),
        ClassicalTriple(24, 7, 25), ClassicalTriple(8, 15, 17)};
    CHECK(row2 == expected2);

    const auto row3 = displayed_row(root, 3);
    const std::vector<ClassicalTriple> expected3 = {
        ClassicalTriple(28, 45, 53), ClassicalTriple(70, 24, 74),
        ClassicalTriple(80, 39, 89), ClassicalTriple(48, 55, 73),
        ClassicalTriple(42, 40, 58), ClassicalTriple(56, 33, 65),
        ClassicalTriple(40, 9, 41),  ClassicalTriple(10, 24, 26)};
    CHECK(row3 == expected3);
}

TEST_CASE("tree node invariants") {
    const TreeNode root = pythagorean_tree(6);
    int count = 0;
    std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
        ++count;
        CHECK(node.matrix.x11() * node.matrix.x22() == node.matrix.x12() * node.matrix.x12());
        CHECK(node.matrix.trace() == node.triple.c());
        CHECK(is_pythagorean(node.triple));

        // the recorded word reproduces the matrix when applied to X0
        Mat2Int w = Mat2Int::identity();
        for (const char g : node.word) {
            w = (g == 'R' ? gen_R_classical() : gen_L_classical()) * w;
        }
        CHECK(sl2_act(w, SymMat2(0, 0, 1)) == node.matrix);

        if (node.fraction) {
            CHECK(node.fraction->at_least_one());
            // the fraction regenerates the displayed triple through Euclid
            CHECK(euclid_triple(node.fraction->num(), node.fraction->den()) ==
                  node.triple.displayed());
        }
        for (const TreeNode& child : node.children) walk(child);
    };
    walk(root);
    CHECK(count == 2 + (1 << 7) - 1);

    // every non-stem node is a standard triple
    for (int level = 0; level <= 6; ++level) {
        for (const TreeNode* n : tree_row(root, level)) {
            CHECK(is_standard(n->triple.displayed()));
        }
    }
}

TEST_CASE("node fractions match the figure") {
    const TreeNode root = pythagorean_tree(3);
    const auto row1 = tree_row(root, 1);
    CHECK(*row1[0]->fraction == Fraction(3, 2)); // (12,5,13)
    CHECK(*row1[1]->fraction == Fraction(3, 1)); // (6,8,10)
    const auto row3 = tree_row(root, 3);
    CHECK(*row3[5]->fraction == Fraction(7, 4)); // (56,33,65)
}

TEST_CASE("tree covers all small standard triples") {
    const TreeNode root = pythagorean_tree(12);
    std::set<std::string> seen;
    std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
        seen.insert(node.triple.displayed().str());
        for (const TreeNode& child : node.children) walk(child);
    };
    walk(root);

    int total = 0;
    for (long long c = 1; c <= 100; ++c) {
        for (long long a = 1; a < c; ++a) {
            for (long long b = 1; b < c; ++b) {
                if (a * a + b * b != c * c) continue;
                const ClassicalTriple t(a, b, c);
                if (!is_standard(t)) continue;
                ++total;
                CHECK(seen.count(t.str()) == 1);
            }
        }
    }
    CHECK(total == 23);

    CHECK_THROWS_AS(pythagorean_tree(-1), std::domain_error);
    CHECK_THROWS_AS(pythagorean_tree(65), std::domain_error);
}

TEST_CASE("word matrix from continued fraction") {
    CHECK(word_matrix_classical(cf({2})) == Mat2Int{1, 2, 0, 1});
    CHECK(word_matrix_classical(cf({1, 1, 1})) == Mat2Int{2, 3, 1, 2});
    CHECK_THROWS_AS(word_matrix_classical(cf({1, 2})), std::domain_error);
}
