#include "qpyth/serialize.hpp"

#include <limits>

namespace qpyth {

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    throw std::invalid_argument("expected an integer or decimal string");
}

json to_json(const Poly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) coeffs.push_back(int_from_json(c));
    return Poly(std::move(coeffs));
}

json to_json(const Fraction& f) { return f.str(); }

Fraction fraction_from_json(const json& j) {
    return Fraction::parse(j.get<std::string>());
}

json to_json(const ContinuedFraction& cf) {
    json arr = json::array();
    for (const Int& a : cf.terms) arr.push_back(json_int(a));
    return arr;
}

json to_json(const QRational& r) {
    return json{{"base", to_json(r.base)}, {"num", to_json(r.num)}, {"den", to_json(r.den)}};
}

QRational qrational_from_json(const json& j) {
    return {poly_from_json(j.at("num")), poly_from_json(j.at("den")),
            fraction_from_json(j.at("base"))};
}

json to_json(const ConditionsReport& r) {
    return json{
        {"positive", {{"A", r.positive_a}, {"B", r.positive_b}, {"C", r.positive_c}}},
        {"palindromic", {{"A", r.palindromic_a}, {"B", r.palindromic_b}}},
        {"monic", {{"A", r.monic_a}, {"B", r.monic_b}, {"C", r.monic_c}, {"Cstar", r.monic_cstar}}},
        {"unimodal", {{"A", r.unimodal_a}, {"B", r.unimodal_b}, {"C", r.unimodal_c}}},
        {"conditions_1_to_3", r.conditions_1_to_3()},
        {"unimodal_all", r.unimodal_all()},
    };
}

json to_json(const QPythTriple& t) {
    const ClassicalTriple cl = t.classical();
    return json{{"base", to_json(t.base)},
                {"A", to_json(t.A)},
                {"B", to_json(t.B)},
                {"C", to_json(t.C)},
                {"Cstar", to_json(t.c_star())},
                {"classical", {json_int(cl.a()), json_int(cl.b()), json_int(cl.c())}},
                {"conditions", to_json(check_conditions(t))}};
}

QPythTriple qpyth_triple_from_json(const json& j) {
    return {poly_from_json(j.at("A")), poly_from_json(j.at("B")), poly_from_json(j.at("C")),
            fraction_from_json(j.at("base"))};
}

json to_json(const TreeNode& n) {
    const ClassicalTriple shown = n.triple.displayed();
    json node{{"word", n.word},
              {"triple", {json_int(shown.a()), json_int(shown.b()), json_int(shown.c())}},
              {"fraction", n.fraction ? json(n.fraction->str()) : json(nullptr)}};
    json kids = json::array();
    for (const TreeNode& child : n.children) kids.push_back(to_json(child));
    node["children"] = std::move(kids);
    return node;
}

TreeNode tree_from_json(const json& j) {
    const json& t = j.at("triple");
    ClassicalTriple triple(int_from_json(t.at(0)), int_from_json(t.at(1)), int_from_json(t.at(2)));
    TreeNode node{j.at("word").get<std::string>(), triple_to_matrix(triple), triple,
                  std::nullopt, {}};
    if (!j.at("fraction").is_null()) {
        node.fraction = Fraction::parse(j.at("fraction").get<std::string>());
    }
    for (const json& child : j.at("children")) node.children.push_back(tree_from_json(child));
    return node;
}

json to_json(const QTreeNode& n) {
    json node = to_json(n.node);
    node.erase("children");
    node["q"] = n.deformation ? to_json(*n.deformation) : json(nullptr);
    json kids = json::array();
    for (const QTreeNode& child : n.children) kids.push_back(to_json(child));
    node["children"] = std::move(kids);
    return node;
}

QTreeNode qtree_from_json(const json& j) {
    json plain = j;
    plain["children"] = json::array();
    QTreeNode node{tree_from_json(plain), std::nullopt, {}};
    if (!j.at("q").is_null()) node.deformation = qpyth_triple_from_json(j.at("q"));
    for (const json& child : j.at("children")) node.children.push_back(qtree_from_json(child));
    return node;
}

json to_json(const SolutionSet& s) {
    json sols = json::array();
    for (const Solution& sol : s.solutions) {
        sols.push_back(json{{"A", to_json(sol.A)},
                            {"B", to_json(sol.B)},
                            {"C", to_json(sol.C)},
                            {"terms", solution_terms(sol)}});
    }
    return json{{"target",
                 {json_int(s.target.a()), json_int(s.target.b()), json_int(s.target.c())}},
                {"bounds",
                 {{"max_deg", s.bounds.max_deg_c},
                  {"max_coeff", json_int(s.bounds.max_coeff)},
                  {"require_unimodal", s.bounds.require_unimodal}}},
                {"candidates_examined", s.candidates_examined},
                {"solutions", std::move(sols)}};
}

SolutionSet solution_set_from_json(const json& j) {
    const json& t = j.at("target");
    SolutionSet s{ClassicalTriple(int_from_json(t.at(0)), int_from_json(t.at(1)),
                                  int_from_json(t.at(2))),
                  SearchBounds{j.at("bounds").at("max_deg").get<int>(),
                               int_from_json(j.at("bounds").at("max_coeff")),
                               j.at("bounds").at("require_unimodal").get<bool>()},
                  {},
                  j.at("candidates_examined").get<std::uint64_t>()};
    for (const json& sol : j.at("solutions")) {
        s.solutions.push_back(Solution{poly_from_json(sol.at("A")), poly_from_json(sol.at("B")),
                                       poly_from_json(sol.at("C"))});
    }
    return s;
}

} // namespace qpyth
