#include "qpyth/triples.hpp"

#include <stdexcept>

namespace qpyth {

ClassicalTriple::ClassicalTriple(Int a, Int b, Int c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (c_ <= 0) throw std::domain_error("triple must have positive hypotenuse");
    if (a_ * a_ + b_ * b_ != c_ * c_) {
        throw std::domain_error("not a Pythagorean triple: " + a_.str() + "," + b_.str() + "," +
                                c_.str());
    }
}

SymMat2::SymMat2(Int x11, Int x12, Int x22)
    : x11_(std::move(x11)), x12_(std::move(x12)), x22_(std::move(x22)) {
    if (x11_ < 0 || x22_ < 0) throw std::domain_error("triple matrix needs nonnegative diagonal");
    if (x11_ * x22_ != x12_ * x12_) throw std::domain_error("triple matrix must have rank <= 1");
}

Mat2Int operator*(const Mat2Int& a, const Mat2Int& b) {
    return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
            a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
}

Mat2Int gen_R_classical() { return {1, 1, 0, 1}; }
Mat2Int gen_L_classical() { return {1, 0, 1, 1}; }

Mat2Int word_matrix_classical(const ContinuedFraction& cf) {
    if (!cf.odd_length()) {
        throw std::domain_error("word matrix requires an odd-length continued fraction");
    }
    Mat2Int acc = Mat2Int::identity();
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        const Int& a = cf.terms[i];
        if (a < 1) throw std::domain_error("continued-fraction terms must be >= 1");
        // R^a = [[1,a],[0,1]], L^a = [[1,0],[a,1]]
        Mat2Int power = (i % 2 == 0) ? Mat2Int{1, a, 0, 1} : Mat2Int{1, 0, a, 1};
        acc = acc * power;
    }
    return acc;
}

ClassicalTriple euclid_triple(const Int& m, const Int& n) {
    if (m < 1 || n < 1) throw std::domain_error("Euclid parameters must be positive");
    if (m < n) throw std::domain_error("Euclid parameters require m >= n");
    if (gcd(m, n) != 1) throw std::domain_error("Euclid parameters must be coprime");
    return ClassicalTriple(2 * m * n, m * m - n * n, m * m + n * n);
}

bool is_pythagorean(const ClassicalTriple& t) {
    return t.a() * t.a() + t.b() * t.b() == t.c() * t.c();
}

bool is_standard(const ClassicalTriple& t) {
    if (t.a() <= 0 || t.b() <= 0 || t.c() <= 0) return false;
    const Int g = gcd(t.a(), gcd(t.b(), t.c()));
    if (g == 1) return t.a() % 2 == 0;
    if (g == 2) return (t.a() / 2) % 2 != 0;
    return false;
}

bool is_primitive(const ClassicalTriple& t) { return gcd(t.a(), gcd(t.b(), t.c())) == 1; }

SymMat2 triple_to_matrix(const ClassicalTriple& t) {
    if ((t.c() + t.b()) % 2 != 0 || (t.a()) % 2 != 0) {
        throw std::domain_error("matrix not integral: triple is not a multiple of a standard one");
    }
    return SymMat2((t.c() + t.b()) / 2, t.a() / 2, (t.c() - t.b()) / 2);
}

ClassicalTriple matrix_to_triple(const SymMat2& x) {
    return ClassicalTriple(2 * x.x12(), x.x11() - x.x22(), x.trace());
}

SymMat2 sl2_act(const Mat2Int& a, const SymMat2& x) {
    if (a.det() != 1) throw std::domain_error("action requires a determinant-one matrix");
    Int y11 = a.e11 * a.e11 * x.x11() + 2 * a.e11 * a.e12 * x.x12() + a.e12 * a.e12 * x.x22();
    Int y12 = a.e11 * a.e21 * x.x11() + (a.e11 * a.e22 + a.e12 * a.e21) * x.x12() +
              a.e12 * a.e22 * x.x22();
    Int y22 = a.e21 * a.e21 * x.x11() + 2 * a.e21 * a.e22 * x.x12() + a.e22 * a.e22 * x.x22();
    return SymMat2(std::move(y11), std::move(y12), std::move(y22));
}

ProjRat moebius(const Mat2Int& a, const ProjRat& x) {
    return ProjRat(a.e11 * x.num() + a.e12 * x.den(), a.e21 * x.num() + a.e22 * x.den());
}

SymMat2 matrix_from_fraction(const Fraction& f) {
    if (!f.at_least_one()) throw std::domain_error("Euclid matrix requires a fraction >= 1");
    return SymMat2(f.num() * f.num(), f.num() * f.den(), f.den() * f.den());
}

namespace {

std::optional<Fraction> fraction_of_matrix(const SymMat2& x) {
    Int p = sqrt(x.x11());
    Int r = sqrt(x.x22());
    if (p * p != x.x11() || r * r != x.x22() || p * r != abs(x.x12())) return std::nullopt;
    if (p == 0 || r == 0) return std::nullopt;
    return p >= r ? Fraction(p, r) : Fraction(r, p);
}

TreeNode make_node(std::string word, SymMat2 matrix) {
    ClassicalTriple triple = matrix_to_triple(matrix);
    std::optional<Fraction> fraction = fraction_of_matrix(matrix);
    return TreeNode{std::move(word), std::move(matrix), std::move(triple), std::move(fraction), {}};
}

void grow(TreeNode& node, int levels_left) {
    if (levels_left == 0) return;
    node.children.reserve(2);
    node.children.push_back(
        make_node(node.word + "L", sl2_act(gen_L_classical(), node.matrix)));
    node.children.push_back(
        make_node(node.word + "R", sl2_act(gen_R_classical(), node.matrix)));
    for (TreeNode& child : node.children) grow(child, levels_left - 1);
}

} // namespace

TreeNode pythagorean_tree(int depth) {
    if (depth < 0) throw std::domain_error("tree depth must be nonnegative");
    if (depth > kMaxTreeDepth) throw std::domain_error("tree depth exceeds supported maximum");
    TreeNode root = make_node("", SymMat2(0, 0, 1));
    TreeNode stem = make_node("R", sl2_act(gen_R_classical(), root.matrix));
    TreeNode trunk = make_node("RR", sl2_act(gen_R_classical(), stem.matrix));
    grow(trunk, depth);
    stem.children.push_back(std::move(trunk));
    root.children.push_back(std::move(stem));
    return root;
}

namespace {

void collect_row(const TreeNode& node, int level, std::vector<const TreeNode*>& out) {
    if (level == 0) {
        out.push_back(&node);
        return;
    }
    for (const TreeNode& child : node.children) collect_row(child, level - 1, out);
}

} // namespace

std::vector<const TreeNode*> tree_row(const TreeNode& root, int level) {
    // Walk down the two stem edges to (4,3,5) first.
    const TreeNode* base = &root;
    for (int i = 0; i < 2; ++i) {
        if (base->children.empty()) return {};
        base = &base->children.front();
    }
    std::vector<const TreeNode*> out;
    collect_row(*base, level, out);
    return out;
}

} // namespace qpyth
