#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hilb/rational.hpp"

namespace hilb {

/// Sentinels for max(1) / min(1) on the constant monomial.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();
inline constexpr int kPosInfinity = std::numeric_limits<int>::max();

/// A monomial x_0^{a_0} ... x_n^{a_n} as its exponent tuple.  Immutable;
/// entries are validated nonnegative.  operator<=> is the container order
/// (entrywise lexicographic), used only for deterministic storage -- the
/// monomial orders live in compare().
class ExponentVector {
public:
    explicit ExponentVector(std::vector<int> exponents);
    static ExponentVector unit(int n); // the constant monomial, variables x_0..x_n

    int last_index() const { return static_cast<int>(e_.size()) - 1; } // n
    int num_vars() const { return static_cast<int>(e_.size()); }
    int degree() const;
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    bool divides(const ExponentVector& other) const;

    auto operator<=>(const ExponentVector&) const = default;

private:
    std::vector<int> e_;
};

/// Integer tuple of the same shape; entries may be negative (K, Delta_i).
class DifferenceVector {
public:
    explicit DifferenceVector(std::vector<int> entries);
    static DifferenceVector delta(int n, int i); // E_{i-1} - E_i, 1 <= i <= n

    int last_index() const { return static_cast<int>(d_.size()) - 1; }
    int degree() const;
    int operator[](int i) const { return d_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return d_; }

    auto operator<=>(const DifferenceVector&) const = default;

private:
    std::vector<int> d_;
};

DifferenceVector operator-(const ExponentVector& a, const ExponentVector& b);

/// a + k when all entries stay nonnegative, otherwise empty.
std::optional<ExponentVector> translate(const ExponentVector& a, const DifferenceVector& k);

class WeightVector {
public:
    explicit WeightVector(std::vector<Int> weights);

    int last_index() const { return static_cast<int>(w_.size()) - 1; }
    const Int& operator[](int i) const { return w_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& weights() const { return w_; }
    bool strictly_decreasing() const;

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<Int> w_;
};

enum class OrderKind { Lex, RevLex, Weight };

/// Total order on equal-degree monomials with x_0 > x_1 > ... > x_n.
/// The Weight kind breaks exact weight ties by Lex, so it is total even
/// for non-distinguishing weight vectors.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, {}); }
    static MonomialOrder revlex() { return MonomialOrder(OrderKind::RevLex, {}); }
    static MonomialOrder weight(WeightVector w);

    OrderKind kind() const { return kind_; }
    const WeightVector& weight_vector() const;

private:
    MonomialOrder(OrderKind kind, std::optional<WeightVector> w)
        : kind_(kind), w_(std::move(w)) {}
    OrderKind kind_;
    std::optional<WeightVector> w_;
};

/// Index of the last variable dividing x^A; kNegInfinity for the constant.
int max_var(const ExponentVector& a);
/// Index of the first variable dividing x^A; kPosInfinity for the constant.
int min_var(const ExponentVector& a);
int deg_i(const ExponentVector& a, int i);

/// One Borel promotion a + Delta_i (trade one x_i for one x_{i-1});
/// empty when entry i is zero.  Requires 1 <= i <= n.
std::optional<ExponentVector> borel_move(const ExponentVector& a, int i);

Int weight_of(const ExponentVector& a, const WeightVector& w);

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             const MonomialOrder& ord);

/// w_i = (d+1)^{n-i}: strictly decreasing, induces Lex, and distinguishes
/// all monomials of degree <= d (base-(d+1) digit encoding).
WeightVector make_lex_weight(int n, int d);

/// True iff all degree-d monomials in x_0..x_n get pairwise distinct
/// w-weights (hence in every degree <= d as well).
bool distinguishes(const WeightVector& w, int n, int d,
                   std::size_t cap = 4'000'000);

/// All degree-d monomials in x_0..x_n, Lex-descending.
std::vector<ExponentVector> enumerate_monomials(int n, int d);

/// Accepts "x0^2*x1^3*x3", "1", or the bracketed form "[2,3,0,1]".
/// When n >= 0 the result is padded/validated to n+1 variables.
ExponentVector parse_monomial(const std::string& text, int n = -1);
std::string format_monomial(const ExponentVector& a, char letter = 'x');

} // namespace hilb
