#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "qpoisson/catalog.hpp"
#include "qpoisson/double_algebra.hpp"
#include "qpoisson/homogeneous.hpp"
#include "qpoisson/quasi_bialgebra.hpp"
#include "qpoisson/twisting.hpp"

namespace qpoisson {

using Json = nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Rationals are text "p/q" (or "p"); JSON integers are also accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Sparse component list [[i1, ..., ik, "p/q"], ...], lexicographic order,
/// zero components omitted.
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j, std::size_t dim, std::size_t degree);

/// Row list of "p/q" entries.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t ambient);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// Bivector entries [[i, j, "p/q"], ...] with i < j on output. On input an
/// entry with i < j implies its antisymmetric partner; explicit i > j
/// entries must agree with it, and diagonal entries must vanish.
Json bivector_to_json(const Tensor& r);
Tensor bivector_from_json(const Json& j, std::size_t dim);

/// { "dim", "labels", "bracket": [[i,j,k,"p/q"]] (i<j) }.
Json lie_algebra_to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const Json& j);

/// Lie algebra fields plus "delta" ([[i,j,k,v]], j<k) and "phi" ([[i,j,k,v]], i<j<k).
Json quasi_bialgebra_to_json(const QuasiBialgebra& qb);
QuasiBialgebra quasi_bialgebra_from_json(const Json& j);

/// Lie algebra fields of the 2n-dimensional double plus "q_matrix" and "source".
Json double_to_json(const DoubleAlgebra& d);
DoubleAlgebra double_from_json(const Json& j);

/// { "label"?, "algebra": <name or inline>, "h": rows, "r": [[i,j,v]] }.
Json hom_datum_to_json(const HomDatum& d, const Json& algebra_ref);
HomDatum hom_datum_from_json(const Json& j, const QuasiBialgebra& algebra);

/// { "unknowns": [...], "equations": [ { "component": [i,j,k], "monomials": [ {"vars", "coef"} ] } ] }.
Json polynomial_system_to_json(const PolynomialSystem& sys);
PolynomialSystem polynomial_system_from_json(const Json& j);

/// Catalog fixture: the quasi-bialgebra fields plus "name", "data",
/// "subalgebras" and (for quadratic algebras) "quadratic_form".
Json catalog_entry_to_json(const CatalogEntry& e);

Json verdict_to_json(const Verdict& v);
Json axiom_report_to_json(const AxiomReport& r);
Json double_axiom_report_to_json(const DoubleAxiomReport& r);
Json classification_report_to_json(const ClassificationReport& r);
Json twist_report_to_json(const TwistReport& r);
Json composition_report_to_json(const CompositionReport& r);

/// Parses text, mapping JSON syntax errors (including empty input) to ParseError.
Json parse_json(const std::string& text);
/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace qpoisson
