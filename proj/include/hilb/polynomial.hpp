#pragma once

#include <map>
#include <string>

#include "hilb/linalg.hpp"
#include "hilb/monomial.hpp"

namespace hilb {

/// A polynomial with rational coefficients, monomial -> coefficient.
/// Zero coefficients are never stored.
using Form = std::map<ExponentVector, Rat>;

bool form_is_zero(const Form& f);
bool form_is_homogeneous(const Form& f, int* degree_out = nullptr);
int form_num_vars(const Form& f);

void form_add_scaled(Form& dst, const Form& src, const Rat& scale);
Form form_multiply(const Form& a, const Form& b);
Form form_monomial(const ExponentVector& a, const Rat& coeff = Rat(1));

/// Linear substitution x_i -> sum_k g[k][i] x_k applied to every monomial.
Form form_apply_matrix(const RatMatrix& g, const Form& f);

/// Parses "x0^2*x1 - 2/3*x2^3 + 1"; terms separated by +/-, factors by '*',
/// each factor a rational literal or x<i>[^<e>].  n >= 0 fixes the ring.
Form parse_form(const std::string& text, int n);
std::string format_form(const Form& f, char letter = 'x');

} // namespace hilb
