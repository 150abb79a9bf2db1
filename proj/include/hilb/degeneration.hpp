#pragma once

#include <cstdint>
#include <optional>

#include "hilb/polynomial.hpp"
#include "hilb/tangent.hpp"

namespace hilb {

/// A linear basis of the degree-m piece of a homogeneous ideal.
class HomogeneousIdealBasis {
public:
    HomogeneousIdealBasis(int n, int m, std::vector<Form> forms);

    int n() const { return n_; }
    int m() const { return m_; }
    int r() const { return static_cast<int>(forms_.size()); }
    const std::vector<Form>& forms() const { return forms_; }

private:
    int n_, m_;
    std::vector<Form> forms_;
};

/// Basis of the degree-m span of the monomial multiples of the generators
/// (each generator homogeneous of degree <= m).
HomogeneousIdealBasis truncate_at(const std::vector<Form>& generators, int n, int m);

/// Pseudorandom integer matrix with entries in [-bound, bound], resampled
/// until invertible; deterministic in the seed.
RatMatrix random_invertible_matrix(int n, std::uint64_t seed, int bound = 50);

HomogeneousIdealBasis generic_change(const HomogeneousIdealBasis& basis, const RatMatrix& g);
HomogeneousIdealBasis generic_change(const HomogeneousIdealBasis& basis, std::uint64_t seed);

/// Echelon basis with respect to a distinguishing weight vector: each form
/// has lead coefficient 1 on its w-maximal monomial, and that monomial
/// appears in no other form.
class EchelonBasis {
public:
    EchelonBasis(int n, int m, std::vector<Form> forms, std::vector<ExponentVector> leads);

    int n() const { return n_; }
    int m() const { return m_; }
    int r() const { return static_cast<int>(forms_.size()); }
    const std::vector<Form>& forms() const { return forms_; }
    const std::vector<ExponentVector>& leads() const { return leads_; }

private:
    int n_, m_;
    std::vector<Form> forms_;
    std::vector<ExponentVector> leads_;
};

/// Exact Gaussian elimination pivoting on w-maximal monomials; requires
/// distinguishes(w, n, m) and independent forms.
EchelonBasis echelonize(const HomogeneousIdealBasis& basis, const WeightVector& w);

/// The set of leads as a subset of P(m,n): the degree-m piece of init_w.
MonomialSet initial_ideal(const EchelonBasis& basis, std::size_t cap = 1'000'000);

struct FirstOrderDirection {
    DifferenceVector K; // tail shift B - A_i of minimal weight drop
    TangentVector v;    // entries c_{A_i, A_i + K}
};

/// The direction in which lambda_w(t) * I approaches its limit: among all
/// echelon tail entries, the shift K = B - A_i with minimal drop w*(A_i - B)
/// (positive since leads are w-maximal), and the vector of its coefficients.
/// Errors on a monomial input ("no direction") and on a tie between two
/// distinct shifts, which a weight distinguishing degree 2m rules out.
FirstOrderDirection first_order_direction(const EchelonBasis& basis, const WeightVector& w);

struct DegenerationReport {
    MonomialSet limit;                            // leads of the echelon basis
    bool borel_fixed_limit = false;               // is_borel_fixed(ideal of limit)
    bool at_fixed_point = false;                  // input span was already monomial
    std::optional<DifferenceVector> K;
    std::optional<TangentVector> tangent;
    std::optional<bool> borel_eigenvector_tangent;
    std::optional<bool> tangent_is_flat;          // is_tangent verdict
    std::string genericity_note;
};

struct DegenerateOptions {
    std::uint64_t seed = 0;
    bool identity_g = false;  // skip the generic coordinate change
    bool cross_check = true;  // rerun with a derived seed, compare limits
    std::size_t cap = 1'000'000;
};

/// The full pipeline truncate -> generic change -> echelonize -> limit ->
/// first-order direction, with Borel / eigenvector / flatness verdicts.
/// Requires m = Gotzmann number of rho and distinguishes(w, n, r*m).
DegenerationReport degenerate_report(const HomogeneousIdealBasis& degree_m_basis,
                                     const HilbertPolynomial& rho, const WeightVector& w,
                                     const DegenerateOptions& options = {});
DegenerationReport degenerate_report(const std::vector<Form>& generators, int n,
                                     const HilbertPolynomial& rho, const WeightVector& w,
                                     const DegenerateOptions& options = {});

struct FanRecord {
    WeightVector w;
    MonomialSet limit;
    std::optional<EigenvectorType> type; // empty when already at a fixed point
};

/// Samples strictly decreasing weight vectors (rejection-sampled until they
/// distinguish monomials up to degree r*m) and degenerates with the same g
/// for each; grouping the records exhibits first-order fan chambers.
std::vector<FanRecord> first_order_fan_sample(const HomogeneousIdealBasis& degree_m_basis,
                                              const HilbertPolynomial& rho,
                                              std::uint64_t seed, int trials,
                                              const DegenerateOptions& options = {});

/// Degree-m vanishing ideal of a finite set of (distinct) points in P^n,
/// by exact kernel computation of the evaluation map.
HomogeneousIdealBasis ideal_of_points(const std::vector<std::vector<Rat>>& points, int n,
                                      int m);

} // namespace hilb
