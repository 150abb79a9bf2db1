#pragma once

#include <memory>
#include <map>
#include <string>
#include <vector>

#include "hilb/monomial.hpp"

namespace hilb {

/// The poset P(m,n) on all degree-m monomials in x_0..x_n, ordered by the
/// covering relation a < a + Delta_i.  Elements carry a canonical index
/// (Lex-descending rank) so subsets can live in bitsets.  Immutable after
/// construction; all queries are pure.
class PosetPmn {
public:
    static std::shared_ptr<const PosetPmn> build(int m, int n,
                                                 std::size_t cap = 1'000'000);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<ExponentVector>& elements() const { return elements_; }
    const ExponentVector& element(int idx) const {
        return elements_[static_cast<std::size_t>(idx)];
    }
    int index_of(const ExponentVector& a) const; // throws if not an element
    bool is_element(const ExponentVector& a) const;

    /// Indices of elements covering / covered by element idx.
    const std::vector<int>& up_covers(int idx) const {
        return up_[static_cast<std::size_t>(idx)];
    }
    const std::vector<int>& down_covers(int idx) const {
        return down_[static_cast<std::size_t>(idx)];
    }
    std::size_t cover_count() const;

    /// a <= b in the Borel order (BFS over covering edges).
    bool leq(int a_idx, int b_idx) const;

private:
    PosetPmn() = default;
    int m_ = 0, n_ = 0;
    std::vector<ExponentVector> elements_;
    std::map<ExponentVector, int> index_;
    std::vector<std::vector<int>> up_, down_;
};

/// A subset of the elements of some P(m,n).  Whether it is a filter or an
/// order ideal is a property (is_filter / is_order_ideal), not an invariant
/// of the type: the degeneration engine also handles raw lead sets.
class MonomialSet {
public:
    MonomialSet(std::shared_ptr<const PosetPmn> poset,
                const std::vector<ExponentVector>& members);
    MonomialSet(std::shared_ptr<const PosetPmn> poset, std::vector<bool> bits);

    const PosetPmn& poset() const { return *poset_; }
    std::shared_ptr<const PosetPmn> poset_ptr() const { return poset_; }
    const std::vector<bool>& bits() const { return bits_; }

    int count() const;
    bool empty() const { return count() == 0; }
    bool contains(int idx) const { return bits_[static_cast<std::size_t>(idx)]; }
    bool contains(const ExponentVector& a) const;
    std::vector<ExponentVector> members() const; // canonical order
    std::vector<int> member_indices() const;

    MonomialSet complement() const;
    MonomialSet with(int idx, bool value) const;
    MonomialSet set_union(const MonomialSet& other) const;
    MonomialSet set_difference(const MonomialSet& other) const;

    /// Same (m, n) and same members; the posets may be distinct objects.
    bool operator==(const MonomialSet& other) const;

private:
    std::shared_ptr<const PosetPmn> poset_;
    std::vector<bool> bits_;
};

bool is_filter(const MonomialSet& s);
bool is_order_ideal(const MonomialSet& s);
MonomialSet up_closure(const MonomialSet& s);
MonomialSet down_closure(const MonomialSet& s);

/// The explicit isomorphism P(m,n) -> P(n,m): sort the variables of x^A
/// with multiplicity, take successive gaps as the new exponents (the
/// bars-and-stars swap in closed form).  Degree m in, degree n out.
ExponentVector flip(const ExponentVector& a);

/// Exhaustive check of: a1 <_Lex a2 in P(m,n)  <=>  flip(a1) <_RevLex flip(a2).
bool check_lex_revlex_duality(int m, int n, std::size_t cap = 1'000'000);

/// Exhaustive check of P(m,n) ~ J(m x n) via the explicit prefix-sum map;
/// requires m*n <= 20.
bool j_lattice_isomorphism_check(int m, int n);

/// Graphviz rendering; highlight members (if given) are double-circled.
std::string poset_dot(const PosetPmn& p, const MonomialSet* highlight = nullptr);

} // namespace hilb
