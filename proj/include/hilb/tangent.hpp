#pragma once

#include <optional>

#include "hilb/ideal.hpp"
#include "hilb/linalg.hpp"

namespace hilb {

/// A vector (c_AB) in Hom(I_m, S_m/I_m): base monomial set F (the degree-m
/// piece of the ideal) and nonzero rational entries indexed by pairs with
/// A in F, B in the complement R.  Equivalently the first-order ideal
/// J = (x^A + eps * sum_B c_AB x^B | A in F), eps^2 = 0.
class TangentVector {
public:
    struct Entry {
        ExponentVector A;
        ExponentVector B;
        Rat c;
    };

    TangentVector(MonomialSet base, const std::vector<Entry>& entries);
    static TangentVector zero(MonomialSet base);
    static TangentVector basis_vector(MonomialSet base, const ExponentVector& A,
                                      const ExponentVector& B); // e_AB

    const MonomialSet& base() const { return base_; }
    const PosetPmn& poset() const { return base_.poset(); }
    /// Entries keyed by canonical poset indices (A index, B index).
    const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }
    std::vector<Entry> entry_list() const;
    bool is_zero() const { return entries_.empty(); }

    Rat coefficient(const ExponentVector& A, const ExponentVector& B) const;
    TangentVector scaled(const Rat& s) const;
    TangentVector plus(const TangentVector& other) const;

    bool operator==(const TangentVector& other) const;

private:
    MonomialSet base_;
    std::map<std::pair<int, int>, Rat> entries_;
};

/// other == t * v for a single nonzero scalar t (exact).
bool proportional(const TangentVector& v, const TangentVector& other);

class FirstOrderIdeal {
public:
    explicit FirstOrderIdeal(TangentVector v) : v_(std::move(v)) {}
    const TangentVector& tangent() const { return v_; }
    const MonomialSet& base() const { return v_.base(); }

private:
    TangentVector v_;
};

/// Flatness of the associated first-order ideal in degree m+1: for every
/// relation x_j x^A = x_i x^A' among the degree-(m+1) generators, the
/// eps-part x_j tail(A) - x_i tail(A') must stay inside the monomial span
/// of the ideal.  The base must satisfy hilbert_point_check for rho.
bool is_tangent(const TangentVector& v, const HilbertPolynomial& rho);

/// Basis of the full tangent space at the base point (kernel of the
/// flatness constraints), deterministic order.
std::vector<TangentVector> tangent_space_basis(const MonomialSet& F,
                                               const HilbertPolynomial& rho);

/// The combinatorial signature (F', F'', K) of a torus eigenvector.
struct EigenvectorType {
    MonomialSet f_prime;
    MonomialSet f_double_prime;
    DifferenceVector K;

    bool operator==(const EigenvectorType&) const = default;
};

/// A nonzero vector is a maximal-torus eigenvector iff all entries share
/// one exponent shift K = B - A; returns its type then, empty otherwise.
std::optional<EigenvectorType> torus_eigenvector_type(const TangentVector& v);

/// Borel (upper-triangular) eigenvector test: torus eigenvector, F' and F''
/// filters, and the coefficient ratio law c_{A+Delta_i} = (b_i/a_i) c_A
/// along Delta-edges inside F \ F' (a_i = deg_i A, b_i = deg_i (A+K)).
bool is_borel_eigenvector(const TangentVector& v);

/// One family of Borel eigenvectors: a type (F', F'', K), the partition of
/// F \ F' into Delta-connected components (each an independent free scalar),
/// and per-element coefficients normalized so each component's Borel-minimal
/// element carries 1.
struct BorelEigenvector {
    EigenvectorType type;
    std::vector<std::vector<ExponentVector>> components;
    std::map<ExponentVector, Rat> coefficients;
};

/// All Borel-eigenvector families at the Hilbert point F, deduplicated by
/// (F', K); every family's representative (and hence every member of the
/// family) lies in the tangent space.
std::vector<BorelEigenvector> enumerate_borel_eigenvectors(const MonomialSet& F,
                                                           const HilbertPolynomial& rho);

/// The family's normalized representative as a TangentVector.
TangentVector eigenvector_representative(const BorelEigenvector& family);

/// Action of an invertible matrix g on a first-order ideal: apply g to each
/// generator over K[eps], reduce the K[eps]-module back to echelon form with
/// constant parts the monomials of F, and read off the new tails.  Errors if
/// the constant-part span moves off F (the base point is not fixed by g).
FirstOrderIdeal act_on_first_order(const RatMatrix& g, const FirstOrderIdeal& J);

} // namespace hilb
