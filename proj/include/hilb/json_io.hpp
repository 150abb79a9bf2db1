#pragma once

#include <json.hpp>

#include "hilb/degeneration.hpp"

namespace hilb {

using Json = nlohmann::json;

// Wire forms.  Exact numbers (rationals, big integers) serialize as
// strings so nothing is ever rounded; exponent tuples as integer arrays.

Json monomial_set_to_json(const MonomialSet& s);
MonomialSet monomial_set_from_json(const Json& j, std::size_t cap = 1'000'000);

Json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& j);

Json hilbert_polynomial_to_json(const HilbertPolynomial& rho);
HilbertPolynomial hilbert_polynomial_from_json(const Json& j);
/// "3" or "1,2" (coefficients lowest degree first, rationals allowed).
HilbertPolynomial parse_hilbert_polynomial(const std::string& text);

Json weight_vector_to_json(const WeightVector& w);
WeightVector parse_weight_vector(const std::string& comma_list);

Json tangent_vector_to_json(const TangentVector& v);
TangentVector tangent_vector_from_json(const Json& j, std::size_t cap = 1'000'000);

Json eigenvector_type_to_json(const EigenvectorType& type);
Json borel_eigenvector_to_json(const BorelEigenvector& family);

Json degeneration_report_to_json(const DegenerationReport& report);
Json fan_records_to_json(const std::vector<FanRecord>& records);

/// One point per line, homogeneous rational coordinates separated by
/// whitespace or commas; '#' starts a comment.
std::vector<std::vector<Rat>> parse_points_text(const std::string& text);

/// {"n":2,"generators":[...]} with generators either exponent arrays
/// (monomial ideals) or polynomial strings.
std::vector<Form> forms_from_ideal_json(const Json& j, int& n_out);

} // namespace hilb
