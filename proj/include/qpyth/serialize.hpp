#pragma once

#include <json.hpp>

#include "qpyth/qtriples.hpp"
#include "qpyth/search.hpp"

namespace qpyth {

using json = nlohmann::json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; parsing accepts both forms.
json json_int(const Int& v);
Int int_from_json(const json& j);

// Polynomials render as the ascending list of decimal-string coefficients,
// e.g. 1 + 2q + q^2 + q^3 -> ["1","2","1","1"].
json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const Fraction& f);
Fraction fraction_from_json(const json& j);

json to_json(const ContinuedFraction& cf);

json to_json(const QRational& r);
QRational qrational_from_json(const json& j);

json to_json(const ConditionsReport& r);

json to_json(const QPythTriple& t);
QPythTriple qpyth_triple_from_json(const json& j);

// Tree nodes serialize with the displayed (b >= 0) triple.
json to_json(const TreeNode& n);
TreeNode tree_from_json(const json& j);

json to_json(const QTreeNode& n);
QTreeNode qtree_from_json(const json& j);

json to_json(const SolutionSet& s);
SolutionSet solution_set_from_json(const json& j);

} // namespace qpyth
