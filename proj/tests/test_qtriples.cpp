#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qpyth/qtriples.hpp"
#include "test_util.hpp"

using namespace qpyth;
using test::Rng;

namespace {

// Display equality up to exchanging C with its reciprocal.
bool matches_either(const Poly& c, const Poly& shown) {
    return c == shown || c == reciprocal(shown);
}

} // namespace

TEST_CASE("deformed triple matrix") {
    const Mat2Poly x21 = q_matrix(Fraction(2, 1));
    CHECK(x21.e11 == Poly{0, 1, 2, 1}); // q (1+q)^2
    CHECK(x21.e22 == Poly{1});

    CHECK(q_matrix(Fraction(3, 2)).trace() == Poly{1, 3, 3, 3, 2, 1});

    CHECK_THROWS_AS(q_matrix(Fraction(1, 1)), std::domain_error);

    // structure [[q N^2, N D],[q N D, D^2]] and the q = 1 specialization
    for (long long m = 2; m <= 12; ++m) {
        for (long long n = 1; n < m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            const Fraction f(m, n);
            const Mat2Poly x = q_matrix(f);
            const QRational r = q_rational(f);
            CHECK(x.e11 == (r.num * r.num).shifted(1));
            CHECK(x.e12 == r.num * r.den);
            CHECK(x.e21 == (r.num * r.den).shifted(1));
            CHECK(x.e22 == r.den * r.den);

            const SymMat2 classical = matrix_from_fraction(f);
            CHECK(x.e11.eval(1) == classical.x11());
            CHECK(x.e12.eval(1) == classical.x12());
            CHECK(x.e22.eval(1) == classical.x22());
        }
    }
}

TEST_CASE("trace polynomial") {
    CHECK(q_trace_c(Fraction(2, 1)) == Poly{1, 1, 2, 1});
    CHECK(q_trace_c(Fraction(3, 1)) == Poly{1, 1, 2, 3, 2, 1});
    CHECK(q_trace_c(Fraction(7, 4)) == Poly{1, 3, 5, 9, 11, 12, 11, 8, 4, 1});
    CHECK_THROWS_AS(q_trace_c(Fraction(1, 2)), std::domain_error);

    for (long long m = 2; m <= 15; ++m) {
        for (long long n = 1; n < m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            CHECK(q_matrix(Fraction(m, n)).trace() == q_trace_c(Fraction(m, n)));
        }
    }
}

TEST_CASE("deformed Euclid formula on the displayed examples") {
    const QPythTriple t21 = q_triple(Fraction(2, 1));
    CHECK(t21.A == Poly{1, 1, 1, 1});
    CHECK(t21.B == Poly{1, 1, 1});
    CHECK(matches_either(t21.C, Poly{1, 2, 1, 1}));

    const QPythTriple t31 = q_triple(Fraction(3, 1));
    CHECK(t31.A == Poly{1, 1, 1, 1, 1, 1});
    CHECK(t31.B == Poly{1, 2, 2, 2, 1});
    CHECK(matches_either(t31.C, Poly{1, 1, 2, 3, 2, 1}));

    const QPythTriple t32 = q_triple(Fraction(3, 2));
    CHECK(t32.A == Poly{1, 1} * Poly{1, 0, 1} * Poly{1, 1, 1});
    CHECK(t32.B == Poly{1, 1, 1, 1, 1});
    CHECK(matches_either(t32.C, Poly{1, 3, 3, 3, 2, 1}));

    const QPythTriple t74 = q_triple(Fraction(7, 4));
    CHECK(t74.A == Poly{1, 1} * Poly{1, 0, 1} * Poly{1, 2, 3, 2, 3, 2, 1});
    CHECK(t74.B == Poly{1, 1, 1} * Poly{1, 1, 2, 3, 2, 1, 1});
    CHECK(matches_either(t74.C, Poly{1, 3, 5, 9, 11, 12, 11, 8, 4, 1}));

    const QPythTriple t43 = q_triple(Fraction(4, 3));
    CHECK(t43.A == Poly{1, 1} * Poly{1, 0, 1} * Poly{1, 0, 1} * Poly{1, 1, 1});
    CHECK(t43.B == Poly{1, 1, 1, 1, 1, 1, 1});
    CHECK(matches_either(t43.C, Poly{1, 3, 5, 5, 5, 3, 2, 1}));

    CHECK_THROWS_AS(q_triple(Fraction(1, 1)), std::domain_error);
    CHECK_THROWS_AS(q_triple(Fraction(2, 3)), std::domain_error);
}

TEST_CASE("equation verification") {
    CHECK(verify_pythagoras(Poly{1, 1, 1, 1}, Poly{1, 1, 1}, Poly{1, 2, 1, 1}));
    CHECK(verify_pythagoras(Poly{1, 11, 11, 1}, Poly{1, 5, 1}, Poly{1, 10, 13, 1}));
    CHECK_FALSE(verify_pythagoras(Poly{1, 1, 1, 1}, Poly{1, 1, 1}, Poly{1, 1, 1, 1}));
    CHECK_THROWS_AS(verify_pythagoras(Poly{1}, Poly{1}, Poly{}), std::domain_error);
}

TEST_CASE("condition reports") {
    const ConditionsReport good = check_conditions(q_triple(Fraction(7, 4)));
    CHECK(good.conditions_1_to_3());
    CHECK(good.unimodal_all());

    CHECK(check_conditions(q_triple(Fraction(2, 1))).conditions_1_to_3());

    const QPythTriple bad{Poly{1, 1, 1, 1}, Poly{1, 1, 1}, Poly{2, 1, 1, 2}, Fraction(2, 1)};
    const ConditionsReport report = check_conditions(bad);
    CHECK_FALSE(report.monic_c);
    CHECK_FALSE(report.conditions_1_to_3());
}

TEST_CASE("solution series over integer bases") {
    const QPythTriple s2 = series_solution(2);
    CHECK(s2.A == Poly{1, 1, 1, 1});
    CHECK(s2.B == Poly{1, 1, 1});
    CHECK(s2.C == Poly{1, 1, 2, 1});
    CHECK(s2 == q_triple(Fraction(2, 1)));

    const QPythTriple s3 = series_solution(3);
    CHECK(s3.A == Poly{1, 1, 1, 1, 1, 1});
    CHECK(s3.B == Poly{1, 2, 2, 2, 1});
    CHECK(s3.C == Poly{1, 1, 2, 3, 2, 1});

    CHECK_THROWS_AS(series_solution(1), std::domain_error);

    for (long long n = 2; n <= 50; ++n) {
        const QPythTriple s = series_solution(n);
        CHECK(s == q_triple(Fraction(n, 1)));
        CHECK(s.classical() == ClassicalTriple(2 * n, n * n - 1, n * n + 1));
    }
}

TEST_CASE("square identity") {
    const QRational r = q_rational(Fraction(3, 2));
    const QRational s = q_rational_inverse(r);
    CHECK(brahmagupta_check(r.num, r.den, s.num, s.den));
    CHECK(brahmagupta_check(Poly{1}, Poly{}, Poly{}, Poly{1}));

    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(brahmagupta_check(test::random_poly(rng, 6, -4, 4),
                                test::random_poly(rng, 6, -4, 4),
                                test::random_poly(rng, 6, -4, 4),
                                test::random_poly(rng, 6, -4, 4)));
    }
}

TEST_CASE("identities across the scan range") {
    for (long long m = 2; m <= 15; ++m) {
        for (long long n = 1; n < m; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            const Fraction f(m, n);
            const QPythTriple t = q_triple(f);

            CHECK(verify_pythagoras(t.A, t.B, t.C));
            CHECK(t.classical() ==
                  ClassicalTriple(2 * m * n, m * m - n * n, m * m + n * n));
            CHECK(t.A.degree() == t.B.degree() + 1);
            CHECK(t.A.degree() == t.C.degree());

            const ConditionsReport rep = check_conditions(t);
            CHECK(rep.conditions_1_to_3());

            // C* equals D'^2 + q N'^2 for the inverse pair
            const QRational inv = q_rational_inverse(q_rational(f));
            CHECK(t.c_star() == inv.den * inv.den + (inv.num * inv.num).shifted(1));
        }
    }
}

TEST_CASE("annotated tree") {
    const QTreeNode root = q_pythagorean_tree(3);
    CHECK_FALSE(root.deformation.has_value());
    REQUIRE(root.children.size() == 1);
    const QTreeNode& stem = root.children.front();
    CHECK(stem.node.triple == ClassicalTriple(2, 0, 2));
    CHECK_FALSE(stem.deformation.has_value()); // fraction 1/1 stays undeformed
    REQUIRE(stem.children.size() == 1);
    const QTreeNode& base = stem.children.front();
    CHECK(base.node.triple == ClassicalTriple(4, 3, 5));
    REQUIRE(base.deformation.has_value());
    CHECK(*base.deformation == q_triple(Fraction(2, 1)));

    // walk to (56,33,65): left child of the right child's left child
    const QTreeNode& n1213 = base.children[0];
    const QTreeNode& n6810 = base.children[1];
    CHECK(*n1213.deformation == q_triple(Fraction(3, 2)));
    const QTreeNode& n24725 = n6810.children[0];
    CHECK(n24725.node.triple.displayed() == ClassicalTriple(24, 7, 25));
    const QTreeNode& n563365 = n24725.children[1];
    CHECK(n563365.node.triple.displayed() == ClassicalTriple(56, 33, 65));
    REQUIRE(n563365.deformation.has_value());
    CHECK(*n563365.deformation == q_triple(Fraction(7, 4)));

    // every annotated node deforms its own displayed triple
    std::function<void(const QTreeNode&)> walk = [&](const QTreeNode& node) {
        if (node.deformation) {
            CHECK(node.deformation->classical() == node.node.triple.displayed());
            CHECK(verify_pythagoras(node.deformation->A, node.deformation->B,
                                    node.deformation->C));
        }
        for (const QTreeNode& child : node.children) walk(child);
    };
    walk(root);
}
