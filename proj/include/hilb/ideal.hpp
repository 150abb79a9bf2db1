#pragma once

#include <vector>

#include "hilb/poset.hpp"

namespace hilb {

/// A monomial ideal in K[x_0..x_n] held by its minimal generators
/// (minimality enforced at construction; mixed degrees allowed).
class MonomialIdeal {
public:
    MonomialIdeal(int n, std::vector<ExponentVector> generators);

    int n() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    /// Membership of a monomial: divisibility by some generator.
    bool contains(const ExponentVector& a) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    int n_;
    std::vector<ExponentVector> gens_;
};

/// True iff every single-variable promotion (x_i/x_j)g of every generator
/// stays in the ideal (i < j); this characterizes Borel-fixed ideals.
bool is_borel_fixed(const MonomialIdeal& ideal);

/// Smallest Borel-fixed ideal containing the input.
MonomialIdeal borel_closure(const MonomialIdeal& ideal);

/// Saturation of a Borel-fixed ideal: delete x_n from every minimal
/// generator, then re-minimalize.  Rejects non-Borel input.
MonomialIdeal saturate_borel(const MonomialIdeal& ideal);

/// Castelnuovo-Mumford regularity of a Borel-fixed ideal: the highest
/// degree among its minimal generators.
int regularity_borel(const MonomialIdeal& ideal);

/// All degree-d monomials lying in the ideal.
std::vector<ExponentVector> monomials_of_degree(const MonomialIdeal& ideal, int d);

/// For a filter F of P(m,n) (the ideal's degree-m piece, ideal generated in
/// degrees <= m) and a standard monomial a of degree m: decides whether
/// x_i * a lies in degree m+1 of the ideal using only the degree-m data:
/// x_i*x^A in I  <=>  (x_i / x_max(A)) x^A in F.
bool monomial_in_next_degree(const MonomialSet& filter, const ExponentVector& a, int i);

/// A polynomial in one variable z with rational coefficients, constrained
/// to take integer values at integers (validated on construction).
class HilbertPolynomial {
public:
    static HilbertPolynomial from_coefficients(std::vector<Rat> coeffs_low_first);
    static HilbertPolynomial zero();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    Rat operator()(const Int& z) const;
    Int value_at(const Int& z) const; // evaluates and checks integrality

    bool operator==(const HilbertPolynomial&) const = default;

private:
    explicit HilbertPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}
    std::vector<Rat> coeffs_; // lowest degree first, no trailing zeros
    friend HilbertPolynomial macaulay_expand(const class MacaulayForm&);
    friend HilbertPolynomial hilbert_polynomial(const MonomialIdeal&);
};

Int hilbert_function(const MonomialIdeal& ideal, int d);

/// Hilbert polynomial of a saturated Borel-fixed ideal, by interpolation of
/// the Hilbert function past the regularity (where it has stabilized).
HilbertPolynomial hilbert_polynomial(const MonomialIdeal& saturated_borel);

/// The Macaulay representation rho(z) = sum_i C(z+i,i+1) - C(z+i-m_i,i+1)
/// with m_0 >= m_1 >= ... >= m_s >= 1.
class MacaulayForm {
public:
    explicit MacaulayForm(std::vector<Int> m_list);
    const std::vector<Int>& m_list() const { return m_; }

    bool operator==(const MacaulayForm&) const = default;

private:
    std::vector<Int> m_;
};

/// Peels the Macaulay representation off rho, top degree first.  Throws
/// DomainError ("not a Hilbert polynomial ...") when a peel step is not a
/// positive integer, the residual does not vanish, or monotonicity fails.
MacaulayForm macaulay_form(const HilbertPolynomial& rho);

/// Expansion of the representation back into the polynomial (exact).
HilbertPolynomial macaulay_expand(const MacaulayForm& form);

/// m_0 of the Macaulay form: the Gotzmann number of rho.
Int gotzmann_number(const HilbertPolynomial& rho);

/// Grassmannian point test at degree m = deg of V: V (of the forced
/// cardinality dim S_m - rho(m)) spans the degree-m piece of a subscheme
/// with Hilbert polynomial rho iff the span of S_1*V has dimension
/// dim S_{m+1} - rho(m+1).  For m at least the Gotzmann number this cuts
/// out the Hilbert scheme; the cardinality is enforced, the degree bound is
/// the caller's contract (the tangent-space ops legitimately use any
/// m >= regularity).
bool hilbert_point_check(const MonomialSet& V, const HilbertPolynomial& rho);

/// All filters of P(m,n), m the Gotzmann number of rho, with the Hilbert
/// point property: exactly the Borel-fixed points of Hilb^{P^n}_rho.
std::vector<MonomialSet> enumerate_borel_points(const HilbertPolynomial& rho, int n,
                                                std::size_t cap = 1'000'000);

/// All filters of P(m,n) of the given size (all sizes when size < 0),
/// via memoized deletion of Borel-minimal elements.
std::vector<MonomialSet> enumerate_filters(std::shared_ptr<const PosetPmn> poset,
                                           int size = -1);

} // namespace hilb
