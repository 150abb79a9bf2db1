#include "hilb/ideal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace hilb {

namespace {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<ExponentVector> out;
    for (const ExponentVector& g : gens) {
        bool redundant = false;
        for (const ExponentVector& f : gens)
            if (f != g && f.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant)
            out.push_back(g);
    }
    std::sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a > b; // Lex-descending within a degree
    });
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<ExponentVector> generators) : n_(n) {
    if (n < 1)
        throw DomainError("MonomialIdeal requires n >= 1");
    for (const ExponentVector& g : generators)
        if (g.last_index() != n)
            throw DomainError("generator " + format_monomial(g) +
                              " has the wrong number of variables");
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
    for (const ExponentVector& g : gens_)
        if (g.divides(a))
            return true;
    return false;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
    for (const ExponentVector& g : ideal.generators())
        for (int j = 1; j <= ideal.n(); ++j) {
            if (g[j] == 0)
                continue;
            for (int i = 0; i < j; ++i) {
                std::vector<int> e(g.exponents());
                e[static_cast<std::size_t>(j)] -= 1;
                e[static_cast<std::size_t>(i)] += 1;
                if (!ideal.contains(ExponentVector(std::move(e))))
                    return false;
            }
        }
    return true;
}

MonomialIdeal borel_closure(const MonomialIdeal& ideal) {
    std::set<ExponentVector> all(ideal.generators().begin(), ideal.generators().end());
    std::deque<ExponentVector> queue(ideal.generators().begin(), ideal.generators().end());
    while (!queue.empty()) {
        ExponentVector cur = queue.front();
        queue.pop_front();
        for (int j = 1; j <= ideal.n(); ++j) {
            auto promoted = borel_move(cur, j);
            if (promoted && all.insert(*promoted).second)
                queue.push_back(*promoted);
        }
    }
    return MonomialIdeal(ideal.n(), {all.begin(), all.end()});
}

MonomialIdeal saturate_borel(const MonomialIdeal& ideal) {
    if (!is_borel_fixed(ideal))
        throw DomainError("saturate_borel: ideal is not Borel-fixed");
    std::vector<ExponentVector> gens;
    for (const ExponentVector& g : ideal.generators()) {
        std::vector<int> e(g.exponents());
        e.back() = 0;
        gens.push_back(ExponentVector(std::move(e)));
    }
    return MonomialIdeal(ideal.n(), std::move(gens));
}

int regularity_borel(const MonomialIdeal& ideal) {
    if (!is_borel_fixed(ideal))
        throw DomainError("regularity_borel: ideal is not Borel-fixed");
    int reg = 0;
    for (const ExponentVector& g : ideal.generators())
        reg = std::max(reg, g.degree());
    return reg;
}

std::vector<ExponentVector> monomials_of_degree(const MonomialIdeal& ideal, int d) {
    if (d < 0)
        throw DomainError("monomials_of_degree: negative degree");
    std::vector<ExponentVector> out;
    for (const ExponentVector& a : enumerate_monomials(ideal.n(), d))
        if (ideal.contains(a))
            out.push_back(a);
    return out;
}

bool monomial_in_next_degree(const MonomialSet& filter, const ExponentVector& a, int i) {
    const PosetPmn& p = filter.poset();
    if (!p.is_element(a))
        throw DomainError("monomial_in_next_degree: not a degree-m monomial");
    if (filter.contains(a))
        throw DomainError("monomial_in_next_degree: monomial already lies in the filter");
    if (i < 0 || i > p.n())
        throw DomainError("monomial_in_next_degree: variable index out of range");
    int k = max_var(a);
    if (k == kNegInfinity)
        return false; // a = 1 only in P(0,n); the ideal of an empty filter is zero
    std::vector<int> e(a.exponents());
    e[static_cast<std::size_t>(k)] -= 1;
    e[static_cast<std::size_t>(i)] += 1;
    return filter.contains(ExponentVector(std::move(e)));
}

// --- polynomials in z -------------------------------------------------------

namespace {

using ZPoly = std::vector<Rat>; // lowest degree first

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Rat& scale_b) {
    ZPoly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += scale_b * b[i];
    ztrim(out);
    return out;
}

// product of (z + c) for c in shifts, divided by div
ZPoly zproduct_linear(const std::vector<Rat>& shifts, const Rat& div) {
    ZPoly p{Rat(1)};
    for (const Rat& c : shifts) {
        ZPoly next(p.size() + 1, Rat(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] += p[i];
            next[i] += c * p[i];
        }
        p = std::move(next);
    }
    for (Rat& c : p)
        c /= div;
    return p;
}

Rat zfactorial(int k) {
    Rat f(1);
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// C(z+i, i+1) - C(z+i-m, i+1) as a polynomial in z; degree i, leading
// coefficient m/i!.
ZPoly macaulay_term(int i, const Int& m) {
    std::vector<Rat> shifts_a, shifts_b;
    for (int t = 0; t <= i; ++t) {
        shifts_a.emplace_back(Rat(i - t));
        shifts_b.emplace_back(Rat(Int(i - t) - m));
    }
    Rat div = zfactorial(i + 1);
    ZPoly a = zproduct_linear(shifts_a, div);
    ZPoly b = zproduct_linear(shifts_b, div);
    return zadd(a, b, Rat(-1));
}

} // namespace

HilbertPolynomial HilbertPolynomial::from_coefficients(std::vector<Rat> coeffs) {
    ztrim(coeffs);
    HilbertPolynomial p(std::move(coeffs));
    // integer-valued iff integer at deg+2 consecutive integers
    int s = std::max(p.degree(), 0);
    for (int k = 0; k <= s + 1; ++k) {
        Rat v = p(Int(1000 + k));
        if (v.get_den() != 1)
            throw DomainError("polynomial is not integer-valued at large integers");
    }
    return p;
}

HilbertPolynomial HilbertPolynomial::zero() {
    return HilbertPolynomial(std::vector<Rat>{});
}

Rat HilbertPolynomial::operator()(const Int& z) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * Rat(z) + coeffs_[i];
    return acc;
}

Int HilbertPolynomial::value_at(const Int& z) const {
    return rat_to_int((*this)(z));
}

Int hilbert_function(const MonomialIdeal& ideal, int d) {
    if (d < 0)
        throw DomainError("hilbert_function: negative degree");
    Int total = binomial(Int(d + ideal.n()), static_cast<unsigned long>(ideal.n()));
    return total - static_cast<long>(monomials_of_degree(ideal, d).size());
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& ideal) {
    if (!is_borel_fixed(ideal))
        throw DomainError("hilbert_polynomial: ideal is not Borel-fixed");
    if (!(saturate_borel(ideal) == ideal))
        throw DomainError("hilbert_polynomial: ideal is not saturated");
    const int n = ideal.n();
    const int r = regularity_borel(ideal);

    // Lagrange interpolation of HF at d = r..r+n+1; HF has stabilized to the
    // polynomial there, so the interpolant of degree <= n+1 is the Hilbert
    // polynomial itself.
    std::vector<int> xs;
    std::vector<Int> ys;
    for (int d = r; d <= r + n + 1; ++d) {
        xs.push_back(d);
        ys.push_back(hilbert_function(ideal, d));
    }
    ZPoly acc; // zero
    for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<Rat> shifts;
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == k)
                continue;
            shifts.emplace_back(Rat(-xs[j]));
            denom *= Rat(xs[k] - xs[j]);
        }
        ZPoly basis = zproduct_linear(shifts, denom);
        acc = zadd(acc, basis, Rat(ys[k]));
    }
    ztrim(acc);
    HilbertPolynomial rho(std::move(acc));
    if (rho.degree() > n)
        throw std::logic_error("hilbert_polynomial: interpolant degree exceeds n");
    if (rho.value_at(Int(r + n + 2)) != hilbert_function(ideal, r + n + 2))
        throw std::logic_error("hilbert_polynomial: validation point mismatch");
    return rho;
}

MacaulayForm::MacaulayForm(std::vector<Int> m_list) : m_(std::move(m_list)) {
    if (m_.empty())
        throw DomainError("Macaulay form must be nonempty");
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (m_[i] < 1)
            throw DomainError("Macaulay form entries must be >= 1");
        if (i + 1 < m_.size() && m_[i] < m_[i + 1])
            throw DomainError("Macaulay form entries must be weakly decreasing");
    }
}

MacaulayForm macaulay_form(const HilbertPolynomial& rho) {
    if (rho.is_zero())
        throw DomainError("not a Hilbert polynomial: zero polynomial");
    const int s = rho.degree();
    ZPoly residual = rho.coefficients();
    std::vector<Int> m(static_cast<std::size_t>(s) + 1);
    for (int i = s; i >= 0; --i) {
        Rat ci = static_cast<std::size_t>(i) < residual.size()
                     ? residual[static_cast<std::size_t>(i)]
                     : Rat(0);
        Rat mi = ci * zfactorial(i);
        if (mi.get_den() != 1 || mi.get_num() < 1)
            throw DomainError("not a Hilbert polynomial: peel step " + std::to_string(i) +
                              " gives m = " + mi.get_str());
        m[static_cast<std::size_t>(i)] = mi.get_num();
        residual = zadd(residual, macaulay_term(i, m[static_cast<std::size_t>(i)]), Rat(-1));
        if (static_cast<int>(residual.size()) > i)
            throw DomainError("not a Hilbert polynomial: residual degree did not drop");
    }
    if (!residual.empty())
        throw DomainError("not a Hilbert polynomial: nonzero residual");
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] < m[i + 1])
            throw DomainError("not a Hilbert polynomial: m-list not monotone");
    return MacaulayForm(std::move(m));
}

HilbertPolynomial macaulay_expand(const MacaulayForm& form) {
    ZPoly acc;
    for (std::size_t i = 0; i < form.m_list().size(); ++i)
        acc = zadd(acc, macaulay_term(static_cast<int>(i), form.m_list()[i]), Rat(1));
    ztrim(acc);
    return HilbertPolynomial(std::move(acc));
}

Int gotzmann_number(const HilbertPolynomial& rho) {
    return macaulay_form(rho).m_list().front();
}

bool hilbert_point_check(const MonomialSet& V, const HilbertPolynomial& rho) {
    const PosetPmn& p = V.poset();
    const int m = p.m();
    const int n = p.n();
    Int expected = binomial(Int(m + n), static_cast<unsigned long>(n)) -
                   rho.value_at(Int(m));
    if (Int(V.count()) != expected)
        throw DomainError("hilbert_point_check: wrong cardinality (" +
                          std::to_string(V.count()) + ", expected " + expected.get_str() +
                          ")");
    std::set<ExponentVector> products;
    for (const ExponentVector& a : V.members())
        for (int j = 0; j <= n; ++j) {
            std::vector<int> e(a.exponents());
            e[static_cast<std::size_t>(j)] += 1;
            products.insert(ExponentVector(std::move(e)));
        }
    Int target = binomial(Int(m + 1 + n), static_cast<unsigned long>(n)) -
                 rho.value_at(Int(m + 1));
    return Int(static_cast<long>(products.size())) == target;
}

std::vector<MonomialSet> enumerate_filters(std::shared_ptr<const PosetPmn> poset, int size) {
    const PosetPmn& p = *poset;
    std::vector<MonomialSet> out;
    std::unordered_set<std::vector<bool>> seen;

    std::vector<bool> full(static_cast<std::size_t>(p.size()), true);
    std::deque<std::vector<bool>> stack{full};
    seen.insert(full);
    while (!stack.empty()) {
        std::vector<bool> cur = stack.back();
        stack.pop_back();
        int count = static_cast<int>(std::count(cur.begin(), cur.end(), true));
        if (size < 0 || count == size)
            out.emplace_back(poset, cur);
        if (count == 0 || (size >= 0 && count <= size))
            continue;
        for (int i = 0; i < p.size(); ++i) {
            if (!cur[static_cast<std::size_t>(i)])
                continue;
            bool deletable = true; // removal keeps up-closedness
            for (int down : p.down_covers(i))
                if (cur[static_cast<std::size_t>(down)]) {
                    deletable = false;
                    break;
                }
            if (!deletable)
                continue;
            std::vector<bool> child(cur);
            child[static_cast<std::size_t>(i)] = false;
            if (seen.insert(child).second)
                stack.push_back(std::move(child));
        }
    }
    std::sort(out.begin(), out.end(), [](const MonomialSet& a, const MonomialSet& b) {
        return a.bits() > b.bits();
    });
    return out;
}

std::vector<MonomialSet> enumerate_borel_points(const HilbertPolynomial& rho, int n,
                                                std::size_t cap) {
    if (n < 1)
        throw DomainError("enumerate_borel_points requires n >= 1");
    if (rho.degree() > n)
        throw DomainError("Hilbert polynomial degree exceeds the ambient dimension");
    const Int m_big = gotzmann_number(rho);
    const int m = static_cast<int>(to_long(m_big));
    auto poset = PosetPmn::build(m, n, cap);
    Int target = binomial(Int(m + n), static_cast<unsigned long>(n)) -
                 rho.value_at(Int(m));
    if (target < 0)
        throw DomainError("Hilbert polynomial not realizable in P^n");

    std::vector<MonomialSet> points;
    for (const MonomialSet& f : enumerate_filters(poset, static_cast<int>(to_long(target))))
        if (hilbert_point_check(f, rho))
            points.push_back(f);
    return points;
}

} // namespace hilb
