#include "hilb/tangent.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hilb/polynomial.hpp"

namespace hilb {

TangentVector::TangentVector(MonomialSet base, const std::vector<Entry>& entries)
    : base_(std::move(base)) {
    const PosetPmn& p = base_.poset();
    for (const Entry& e : entries) {
        if (e.c == 0)
            continue;
        int ai = p.index_of(e.A);
        int bi = p.index_of(e.B);
        if (!base_.contains(ai))
            throw DomainError("tangent entry source " + format_monomial(e.A) +
                              " is not in the base set");
        if (base_.contains(bi))
            throw DomainError("tangent entry target " + format_monomial(e.B) +
                              " is not a standard monomial");
        auto [it, inserted] = entries_.emplace(std::make_pair(ai, bi), e.c);
        if (!inserted)
            throw DomainError("duplicate tangent entry");
        (void)it;
    }
}

TangentVector TangentVector::zero(MonomialSet base) {
    return TangentVector(std::move(base), {});
}

TangentVector TangentVector::basis_vector(MonomialSet base, const ExponentVector& A,
                                          const ExponentVector& B) {
    return TangentVector(std::move(base), {Entry{A, B, Rat(1)}});
}

std::vector<TangentVector::Entry> TangentVector::entry_list() const {
    std::vector<Entry> out;
    const PosetPmn& p = base_.poset();
    for (const auto& [key, c] : entries_)
        out.push_back(Entry{p.element(key.first), p.element(key.second), c});
    return out;
}

Rat TangentVector::coefficient(const ExponentVector& A, const ExponentVector& B) const {
    const PosetPmn& p = base_.poset();
    auto it = entries_.find({p.index_of(A), p.index_of(B)});
    return it == entries_.end() ? Rat(0) : it->second;
}

TangentVector TangentVector::scaled(const Rat& s) const {
    TangentVector out = TangentVector::zero(base_);
    if (s == 0)
        return out;
    out.entries_ = entries_;
    for (auto& [key, c] : out.entries_)
        c *= s;
    return out;
}

TangentVector TangentVector::plus(const TangentVector& other) const {
    if (!(base_ == other.base_))
        throw DomainError("tangent vector sum over different base points");
    TangentVector out = TangentVector::zero(base_);
    out.entries_ = entries_;
    for (const auto& [key, c] : other.entries_) {
        auto it = out.entries_.find(key);
        if (it == out.entries_.end()) {
            out.entries_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0)
                out.entries_.erase(it);
        }
    }
    return out;
}

bool TangentVector::operator==(const TangentVector& other) const {
    return base_ == other.base_ && entries_ == other.entries_;
}

bool proportional(const TangentVector& v, const TangentVector& other) {
    if (v.is_zero() || other.is_zero())
        return false;
    if (v.entries().size() != other.entries().size())
        return false;
    auto it1 = v.entries().begin();
    auto it2 = other.entries().begin();
    Rat t = it2->second / it1->second;
    for (; it1 != v.entries().end(); ++it1, ++it2) {
        if (it1->first != it2->first)
            return false;
        if (it2->second != t * it1->second)
            return false;
    }
    return true;
}

// --- flatness constraints ----------------------------------------------------

namespace {

ExponentVector times_var(const ExponentVector& a, int j) {
    std::vector<int> e(a.exponents());
    e[static_cast<std::size_t>(j)] += 1;
    return ExponentVector(std::move(e));
}

// Linear constraints cutting T_z Hilb out of Hom(I_m, S_m/I_m).  Unknowns
// are the pairs (A index, B index), A in F, B in R, in map order.  One row
// per (syzygy pair, standard degree-(m+1) monomial).
struct FlatnessSystem {
    std::vector<std::pair<int, int>> unknowns;
    std::map<std::pair<int, int>, int> column_of;
    std::vector<std::vector<Rat>> rows;
};

FlatnessSystem build_flatness_system(const MonomialSet& F) {
    const PosetPmn& p = F.poset();
    const int n = p.n();
    FlatnessSystem sys;
    std::vector<int> f_indices = F.member_indices();
    std::vector<int> r_indices = F.complement().member_indices();
    for (int a : f_indices)
        for (int b : r_indices) {
            sys.column_of.emplace(std::make_pair(a, b),
                                  static_cast<int>(sys.unknowns.size()));
            sys.unknowns.emplace_back(a, b);
        }

    // degree-(m+1) monomials of the ideal generated by F
    std::set<ExponentVector> ideal_next;
    std::map<ExponentVector, std::vector<std::pair<int, int>>> writers; // product -> (j, A idx)
    for (int a : f_indices)
        for (int j = 0; j <= n; ++j) {
            ExponentVector prod = times_var(p.element(a), j);
            writers[prod].emplace_back(j, a);
            ideal_next.insert(prod);
        }

    for (const auto& [prod, list] : writers) {
        (void)prod;
        for (std::size_t t = 1; t < list.size(); ++t) {
            auto [j1, a1] = list[t - 1];
            auto [j2, a2] = list[t];
            // x_{j1} tail(A1) - x_{j2} tail(A2) must lie in the ideal span:
            // its coefficient at every standard degree-(m+1) monomial vanishes.
            std::map<ExponentVector, std::vector<std::pair<int, Rat>>> contribution;
            for (int b : r_indices) {
                contribution[times_var(p.element(b), j1)].emplace_back(
                    sys.column_of.at({a1, b}), Rat(1));
                contribution[times_var(p.element(b), j2)].emplace_back(
                    sys.column_of.at({a2, b}), Rat(-1));
            }
            for (const auto& [mono, cols] : contribution) {
                if (ideal_next.count(mono))
                    continue;
                std::vector<Rat> row(sys.unknowns.size(), Rat(0));
                bool nonzero = false;
                for (const auto& [col, val] : cols) {
                    row[static_cast<std::size_t>(col)] += val;
                    nonzero = true;
                }
                if (nonzero)
                    sys.rows.push_back(std::move(row));
            }
        }
    }
    return sys;
}

} // namespace

bool is_tangent(const TangentVector& v, const HilbertPolynomial& rho) {
    if (!hilbert_point_check(v.base(), rho))
        throw DomainError("is_tangent: base is not a Hilbert point for the polynomial");
    FlatnessSystem sys = build_flatness_system(v.base());
    for (const auto& row : sys.rows) {
        Rat acc(0);
        for (const auto& [key, c] : v.entries())
            acc += row[static_cast<std::size_t>(sys.column_of.at(key))] * c;
        if (acc != 0)
            return false;
    }
    return true;
}

std::vector<TangentVector> tangent_space_basis(const MonomialSet& F,
                                               const HilbertPolynomial& rho) {
    if (!hilbert_point_check(F, rho))
        throw DomainError("tangent_space_basis: base is not a Hilbert point");
    FlatnessSystem sys = build_flatness_system(F);
    const PosetPmn& p = F.poset();
    std::vector<TangentVector> basis;
    if (sys.unknowns.empty())
        return basis;
    RatMatrix m = sys.rows.empty()
                      ? RatMatrix{std::vector<Rat>(sys.unknowns.size(), Rat(0))}
                      : RatMatrix(sys.rows);
    for (const auto& vec : kernel_basis(std::move(m))) {
        std::vector<TangentVector::Entry> entries;
        for (std::size_t col = 0; col < vec.size(); ++col)
            if (vec[col] != 0)
                entries.push_back(TangentVector::Entry{p.element(sys.unknowns[col].first),
                                                       p.element(sys.unknowns[col].second),
                                                       vec[col]});
        basis.push_back(TangentVector(F, entries));
    }
    return basis;
}

std::optional<EigenvectorType> torus_eigenvector_type(const TangentVector& v) {
    if (v.is_zero())
        return std::nullopt;
    const PosetPmn& p = v.poset();
    std::optional<DifferenceVector> K;
    std::vector<bool> moved(static_cast<std::size_t>(p.size()), false);
    std::vector<bool> added(static_cast<std::size_t>(p.size()), false);
    for (const auto& [key, c] : v.entries()) {
        (void)c;
        DifferenceVector diff = p.element(key.second) - p.element(key.first);
        if (!K)
            K = diff;
        else if (!(*K == diff))
            return std::nullopt;
        moved[static_cast<std::size_t>(key.first)] = true;
        added[static_cast<std::size_t>(key.second)] = true;
    }
    std::vector<bool> f_prime(v.base().bits());
    std::vector<bool> f_double(v.base().bits());
    for (int i = 0; i < p.size(); ++i) {
        if (moved[static_cast<std::size_t>(i)])
            f_prime[static_cast<std::size_t>(i)] = false;
        if (added[static_cast<std::size_t>(i)])
            f_double[static_cast<std::size_t>(i)] = true;
    }
    return EigenvectorType{MonomialSet(v.base().poset_ptr(), std::move(f_prime)),
                           MonomialSet(v.base().poset_ptr(), std::move(f_double)), *K};
}

bool is_borel_eigenvector(const TangentVector& v) {
    auto type = torus_eigenvector_type(v);
    if (!type)
        return false;
    if (!is_filter(type->f_prime) || !is_filter(type->f_double_prime))
        return false;
    const PosetPmn& p = v.poset();
    const int n = p.n();
    MonomialSet D = v.base().set_difference(type->f_prime);
    for (int a_idx : D.member_indices()) {
        const ExponentVector& A = p.element(a_idx);
        auto B = translate(A, type->K);
        for (int i = 1; i <= n; ++i) {
            auto Ai = borel_move(A, i);
            if (!Ai || !D.contains(*Ai))
                continue;
            int a_i = deg_i(A, i);
            int b_i = deg_i(*B, i);
            Rat expected = make_fraction(b_i, a_i) * v.coefficient(A, *B);
            auto Bi = translate(*Ai, type->K);
            if (v.coefficient(*Ai, *Bi) != expected)
                return false;
        }
    }
    return true;
}

namespace {

// Delta-connected components of a subset D, canonical order inside and
// across components.
std::vector<std::vector<int>> delta_components(const MonomialSet& D) {
    const PosetPmn& p = D.poset();
    std::vector<int> members = D.member_indices();
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    std::vector<std::vector<int>> comps;
    for (int start : members) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (int next : p.up_covers(cur))
                if (D.contains(next) && !seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = true;
                    queue.push_back(next);
                }
            for (int next : p.down_covers(cur))
                if (D.contains(next) && !seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = true;
                    queue.push_back(next);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Ratio-law coefficients on one component, root (Borel-minimal, canonical
// tiebreak) normalized to 1.  Empty result when the law is inconsistent or
// forces a zero.
std::optional<std::map<int, Rat>> component_coefficients(const PosetPmn& p,
                                                         const MonomialSet& D,
                                                         const std::vector<int>& comp,
                                                         const DifferenceVector& K) {
    auto comp_contains = [&](int idx) {
        return std::binary_search(comp.begin(), comp.end(), idx);
    };
    int root = -1;
    for (int idx : comp) { // first canonical member with no down-cover inside
        bool minimal = true;
        for (int down : p.down_covers(idx))
            if (comp_contains(down)) {
                minimal = false;
                break;
            }
        if (minimal) {
            root = idx;
            break;
        }
    }
    if (root < 0)
        root = comp.front();

    std::map<int, Rat> coeff;
    coeff[root] = 1;
    std::deque<int> queue{root};
    auto ratio_up = [&](int a_idx, int i) -> std::optional<Rat> {
        // c_{A+Delta_i} / c_A = b_i / a_i
        const ExponentVector& A = p.element(a_idx);
        auto B = translate(A, K);
        if (!B)
            return std::nullopt;
        int a_i = deg_i(A, i);
        int b_i = deg_i(*B, i);
        if (b_i == 0)
            return std::nullopt; // would force a zero coefficient
        return make_fraction(b_i, a_i);
    };
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        const ExponentVector& A = p.element(cur);
        for (int i = 1; i <= p.n(); ++i) {
            auto Ai = borel_move(A, i);
            if (Ai && D.contains(*Ai) && comp_contains(p.index_of(*Ai))) {
                auto r = ratio_up(cur, i);
                if (!r)
                    return std::nullopt;
                int up_idx = p.index_of(*Ai);
                Rat value = coeff[cur] * *r;
                auto it = coeff.find(up_idx);
                if (it == coeff.end()) {
                    coeff[up_idx] = value;
                    queue.push_back(up_idx);
                } else if (it->second != value) {
                    return std::nullopt;
                }
            }
        }
        for (int down : p.down_covers(cur)) {
            if (!comp_contains(down))
                continue;
            // find i with element(down) + Delta_i == cur
            const ExponentVector& X = p.element(down);
            for (int i = 1; i <= p.n(); ++i) {
                auto Xi = borel_move(X, i);
                if (!Xi || p.index_of(*Xi) != cur)
                    continue;
                auto r = ratio_up(down, i);
                if (!r)
                    return std::nullopt;
                Rat value = coeff[cur] / *r;
                auto it = coeff.find(down);
                if (it == coeff.end()) {
                    coeff[down] = value;
                    queue.push_back(down);
                } else if (it->second != value) {
                    return std::nullopt;
                }
            }
        }
    }
    // verify every Delta-edge inside the component (cross edges included)
    for (int idx : comp) {
        const ExponentVector& A = p.element(idx);
        for (int i = 1; i <= p.n(); ++i) {
            auto Ai = borel_move(A, i);
            if (!Ai || !comp_contains(p.index_of(*Ai)))
                continue;
            auto r = ratio_up(idx, i);
            if (!r)
                return std::nullopt;
            if (coeff.at(p.index_of(*Ai)) != coeff.at(idx) * *r)
                return std::nullopt;
        }
    }
    for (const auto& [idx, c] : coeff) {
        (void)idx;
        if (c == 0)
            return std::nullopt;
    }
    return coeff;
}

} // namespace

std::vector<BorelEigenvector> enumerate_borel_eigenvectors(const MonomialSet& F,
                                                           const HilbertPolynomial& rho) {
    if (!hilbert_point_check(F, rho))
        throw DomainError("enumerate_borel_eigenvectors: base is not a Hilbert point");
    if (!is_filter(F))
        throw DomainError("enumerate_borel_eigenvectors: base is not a filter");
    const PosetPmn& p = F.poset();
    auto poset = F.poset_ptr();
    MonomialSet R = F.complement();

    // candidate shifts K = B - A
    std::set<DifferenceVector> candidates;
    for (int a : F.member_indices())
        for (int b : R.member_indices())
            candidates.insert(p.element(b) - p.element(a));

    std::vector<BorelEigenvector> out;
    for (const DifferenceVector& K : candidates) {
        // movable set: A in F with A + K a standard monomial
        std::vector<int> movable;
        for (int a : F.member_indices()) {
            auto B = translate(p.element(a), K);
            if (B && p.is_element(*B) && R.contains(p.index_of(*B)))
                movable.push_back(a);
        }
        if (movable.empty())
            continue;
        if (movable.size() > 24)
            throw DomainError("eigenvector candidate set too large to scan");

        const std::size_t subsets = std::size_t(1) << movable.size();
        for (std::size_t mask = 1; mask < subsets; ++mask) {
            std::vector<bool> d_bits(static_cast<std::size_t>(p.size()), false);
            for (std::size_t t = 0; t < movable.size(); ++t)
                if (mask & (std::size_t(1) << t))
                    d_bits[static_cast<std::size_t>(movable[t])] = true;
            MonomialSet D(poset, d_bits);

            MonomialSet f_prime = F.set_difference(D);
            if (!is_filter(f_prime))
                continue;
            std::vector<bool> shifted(static_cast<std::size_t>(p.size()), false);
            for (int a : D.member_indices())
                shifted[static_cast<std::size_t>(
                    p.index_of(*translate(p.element(a), K)))] = true;
            MonomialSet f_double = F.set_union(MonomialSet(poset, std::move(shifted)));
            if (!is_filter(f_double))
                continue;

            auto comps = delta_components(D);
            std::map<ExponentVector, Rat> coeffs;
            bool ok = true;
            for (const auto& comp : comps) {
                auto cc = component_coefficients(p, D, comp, K);
                if (!cc) {
                    ok = false;
                    break;
                }
                // each component vector must itself be a tangent vector;
                // linearity then covers every scalar combination
                std::vector<TangentVector::Entry> entries;
                for (const auto& [idx, c] : *cc)
                    entries.push_back(TangentVector::Entry{
                        p.element(idx), *translate(p.element(idx), K), c});
                if (!is_tangent(TangentVector(F, entries), rho)) {
                    ok = false;
                    break;
                }
                for (const auto& [idx, c] : *cc)
                    coeffs.emplace(p.element(idx), c);
            }
            if (!ok)
                continue;

            std::vector<std::vector<ExponentVector>> comp_elems;
            for (const auto& comp : comps) {
                std::vector<ExponentVector> elems;
                for (int idx : comp)
                    elems.push_back(p.element(idx));
                comp_elems.push_back(std::move(elems));
            }
            out.push_back(BorelEigenvector{EigenvectorType{f_prime, f_double, K},
                                           std::move(comp_elems), std::move(coeffs)});
        }
    }

    std::sort(out.begin(), out.end(), [](const BorelEigenvector& x, const BorelEigenvector& y) {
        if (!(x.type.K == y.type.K))
            return x.type.K < y.type.K;
        return x.type.f_prime.bits() > y.type.f_prime.bits();
    });
    return out;
}

TangentVector eigenvector_representative(const BorelEigenvector& family) {
    std::vector<TangentVector::Entry> entries;
    MonomialSet F = family.type.f_prime; // rebuild F = F' + moved set
    const PosetPmn& p = F.poset();
    std::vector<bool> bits(F.bits());
    for (const auto& [A, c] : family.coefficients)
        bits[static_cast<std::size_t>(p.index_of(A))] = true;
    MonomialSet base(F.poset_ptr(), std::move(bits));
    for (const auto& [A, c] : family.coefficients)
        entries.push_back(TangentVector::Entry{A, *translate(A, family.type.K), c});
    return TangentVector(base, entries);
}

// --- K[eps] echelon reduction -------------------------------------------------

namespace {

struct Eps {
    Rat c; // constant part
    Rat d; // eps part
};

Eps eps_mul(const Eps& x, const Eps& y) {
    return Eps{x.c * y.c, x.c * y.d + x.d * y.c};
}

Eps eps_inv(const Eps& x) {
    // (c + eps d)^{-1} = c^{-1} - eps d c^{-2}; requires unit (c != 0)
    Rat ci = Rat(1) / x.c;
    return Eps{ci, -x.d * ci * ci};
}

} // namespace

FirstOrderIdeal act_on_first_order(const RatMatrix& g, const FirstOrderIdeal& J) {
    const MonomialSet& F = J.base();
    const PosetPmn& p = F.poset();
    const int N = p.size();
    const int vars = p.n() + 1;
    if (static_cast<int>(g.size()) != vars)
        throw DomainError("act_on_first_order: matrix size mismatch");
    for (const auto& row : g)
        if (static_cast<int>(row.size()) != vars)
            throw DomainError("act_on_first_order: matrix is not square");
    if (rank(g) != vars)
        throw DomainError("act_on_first_order: matrix is singular");

    // transformed generators as K[eps] rows over all degree-m monomials
    std::vector<int> f_indices = F.member_indices();
    std::vector<std::vector<Eps>> rows;
    for (int a_idx : f_indices) {
        Form const_part = form_apply_matrix(g, form_monomial(p.element(a_idx)));
        Form eps_part;
        for (const auto& [key, c] : J.tangent().entries())
            if (key.first == a_idx)
                form_add_scaled(eps_part,
                                form_apply_matrix(g, form_monomial(p.element(key.second))),
                                c);
        std::vector<Eps> row(static_cast<std::size_t>(N), Eps{Rat(0), Rat(0)});
        for (const auto& [mono, c] : const_part)
            row[static_cast<std::size_t>(p.index_of(mono))].c = c;
        for (const auto& [mono, c] : eps_part)
            row[static_cast<std::size_t>(p.index_of(mono))].d = c;
        rows.push_back(std::move(row));
    }

    // reduced echelon form over K[eps], pivoting on the F columns in
    // canonical order; pivots must be units (nonzero constant part)
    std::size_t next_row = 0;
    for (int col : f_indices) {
        std::size_t pivot_row = next_row;
        while (pivot_row < rows.size() &&
               rows[pivot_row][static_cast<std::size_t>(col)].c == 0)
            ++pivot_row;
        if (pivot_row == rows.size())
            throw DomainError("act_on_first_order: base point is not fixed by g");
        std::swap(rows[next_row], rows[pivot_row]);
        Eps inv = eps_inv(rows[next_row][static_cast<std::size_t>(col)]);
        for (Eps& x : rows[next_row])
            x = eps_mul(x, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next_row)
                continue;
            Eps factor = rows[r][static_cast<std::size_t>(col)];
            if (factor.c == 0 && factor.d == 0)
                continue;
            for (std::size_t cidx = 0; cidx < rows[r].size(); ++cidx) {
                Eps sub = eps_mul(factor, rows[next_row][cidx]);
                rows[r][cidx].c -= sub.c;
                rows[r][cidx].d -= sub.d;
            }
        }
        ++next_row;
    }

    // constant parts must now be exactly the monomials of F
    std::vector<TangentVector::Entry> entries;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int col = 0; col < N; ++col) {
            const Eps& x = rows[r][static_cast<std::size_t>(col)];
            if (F.contains(col))
                continue;
            if (x.c != 0)
                throw DomainError("act_on_first_order: base point is not fixed by g");
            if (x.d != 0)
                entries.push_back(TangentVector::Entry{p.element(f_indices[r]),
                                                       p.element(col), x.d});
        }
    }
    return FirstOrderIdeal(TangentVector(F, entries));
}

} // namespace hilb
