#include "hilb/poset.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hilb {

std::shared_ptr<const PosetPmn> PosetPmn::build(int m, int n, std::size_t cap) {
    if (m < 0 || n < 1)
        throw DomainError("build_poset requires m >= 0, n >= 1");
    Int size = binomial(Int(m + n), static_cast<unsigned long>(n));
    if (size > static_cast<long>(cap))
        throw DomainError("poset P(" + std::to_string(m) + "," + std::to_string(n) +
                          ") exceeds the size cap (" + size.get_str() + " elements)");

    auto p = std::shared_ptr<PosetPmn>(new PosetPmn());
    p->m_ = m;
    p->n_ = n;
    p->elements_ = enumerate_monomials(n, m);
    for (int i = 0; i < p->size(); ++i)
        p->index_.emplace(p->elements_[static_cast<std::size_t>(i)], i);
    p->up_.assign(p->elements_.size(), {});
    p->down_.assign(p->elements_.size(), {});
    for (int i = 0; i < p->size(); ++i) {
        const ExponentVector& a = p->element(i);
        for (int v = 1; v <= n; ++v) {
            auto b = borel_move(a, v);
            if (!b)
                continue;
            int j = p->index_.at(*b);
            p->up_[static_cast<std::size_t>(i)].push_back(j);
            p->down_[static_cast<std::size_t>(j)].push_back(i);
        }
    }
    return p;
}

int PosetPmn::index_of(const ExponentVector& a) const {
    auto it = index_.find(a);
    if (it == index_.end())
        throw DomainError("monomial " + format_monomial(a) + " is not an element of P(" +
                          std::to_string(m_) + "," + std::to_string(n_) + ")");
    return it->second;
}

bool PosetPmn::is_element(const ExponentVector& a) const {
    return index_.find(a) != index_.end();
}

std::size_t PosetPmn::cover_count() const {
    std::size_t total = 0;
    for (const auto& v : up_)
        total += v.size();
    return total;
}

bool PosetPmn::leq(int a_idx, int b_idx) const {
    if (a_idx == b_idx)
        return true;
    std::vector<bool> seen(elements_.size(), false);
    std::deque<int> queue{a_idx};
    seen[static_cast<std::size_t>(a_idx)] = true;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int up : up_covers(cur)) {
            if (up == b_idx)
                return true;
            if (!seen[static_cast<std::size_t>(up)]) {
                seen[static_cast<std::size_t>(up)] = true;
                queue.push_back(up);
            }
        }
    }
    return false;
}

MonomialSet::MonomialSet(std::shared_ptr<const PosetPmn> poset,
                         const std::vector<ExponentVector>& members)
    : poset_(std::move(poset)), bits_(static_cast<std::size_t>(poset_->size()), false) {
    for (const ExponentVector& a : members)
        bits_[static_cast<std::size_t>(poset_->index_of(a))] = true;
}

MonomialSet::MonomialSet(std::shared_ptr<const PosetPmn> poset, std::vector<bool> bits)
    : poset_(std::move(poset)), bits_(std::move(bits)) {
    if (bits_.size() != static_cast<std::size_t>(poset_->size()))
        throw DomainError("bitset size mismatch");
}

int MonomialSet::count() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

bool MonomialSet::contains(const ExponentVector& a) const {
    return poset_->is_element(a) && bits_[static_cast<std::size_t>(poset_->index_of(a))];
}

std::vector<ExponentVector> MonomialSet::members() const {
    std::vector<ExponentVector> out;
    for (int i = 0; i < poset_->size(); ++i)
        if (bits_[static_cast<std::size_t>(i)])
            out.push_back(poset_->element(i));
    return out;
}

std::vector<int> MonomialSet::member_indices() const {
    std::vector<int> out;
    for (int i = 0; i < poset_->size(); ++i)
        if (bits_[static_cast<std::size_t>(i)])
            out.push_back(i);
    return out;
}

MonomialSet MonomialSet::complement() const {
    std::vector<bool> b(bits_);
    b.flip();
    return MonomialSet(poset_, std::move(b));
}

MonomialSet MonomialSet::with(int idx, bool value) const {
    std::vector<bool> b(bits_);
    b[static_cast<std::size_t>(idx)] = value;
    return MonomialSet(poset_, std::move(b));
}

MonomialSet MonomialSet::set_union(const MonomialSet& other) const {
    if (!(poset_->m() == other.poset_->m() && poset_->n() == other.poset_->n()))
        throw DomainError("set_union across different posets");
    std::vector<bool> b(bits_);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (other.bits_[i])
            b[i] = true;
    return MonomialSet(poset_, std::move(b));
}

MonomialSet MonomialSet::set_difference(const MonomialSet& other) const {
    if (!(poset_->m() == other.poset_->m() && poset_->n() == other.poset_->n()))
        throw DomainError("set_difference across different posets");
    std::vector<bool> b(bits_);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (other.bits_[i])
            b[i] = false;
    return MonomialSet(poset_, std::move(b));
}

bool MonomialSet::operator==(const MonomialSet& other) const {
    return poset_->m() == other.poset_->m() && poset_->n() == other.poset_->n() &&
           bits_ == other.bits_;
}

bool is_filter(const MonomialSet& s) {
    const PosetPmn& p = s.poset();
    for (int i = 0; i < p.size(); ++i) {
        if (!s.contains(i))
            continue;
        for (int up : p.up_covers(i))
            if (!s.contains(up))
                return false;
    }
    return true;
}

bool is_order_ideal(const MonomialSet& s) {
    const PosetPmn& p = s.poset();
    for (int i = 0; i < p.size(); ++i) {
        if (!s.contains(i))
            continue;
        for (int down : p.down_covers(i))
            if (!s.contains(down))
                return false;
    }
    return true;
}

namespace {

MonomialSet closure(const MonomialSet& s, bool upward) {
    const PosetPmn& p = s.poset();
    std::vector<bool> bits(s.bits());
    std::deque<int> queue;
    for (int i = 0; i < p.size(); ++i)
        if (bits[static_cast<std::size_t>(i)])
            queue.push_back(i);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int next : upward ? p.up_covers(cur) : p.down_covers(cur)) {
            if (!bits[static_cast<std::size_t>(next)]) {
                bits[static_cast<std::size_t>(next)] = true;
                queue.push_back(next);
            }
        }
    }
    return MonomialSet(s.poset_ptr(), std::move(bits));
}

} // namespace

MonomialSet up_closure(const MonomialSet& s) {
    return closure(s, true);
}

MonomialSet down_closure(const MonomialSet& s) {
    return closure(s, false);
}

ExponentVector flip(const ExponentVector& a) {
    const int n = a.last_index();
    const int m = a.degree();
    // variable indices of x^A with multiplicity, ascending
    std::vector<int> alpha;
    alpha.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i <= n; ++i)
        for (int k = 0; k < a[i]; ++k)
            alpha.push_back(i);

    std::vector<int> b(static_cast<std::size_t>(m) + 1, 0);
    if (m == 0) {
        b[0] = n;
        return ExponentVector(std::move(b));
    }
    b[0] = n - alpha[static_cast<std::size_t>(m) - 1];
    for (int i = 1; i <= m - 1; ++i)
        b[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(m - i)] -
                                         alpha[static_cast<std::size_t>(m - i) - 1];
    b[static_cast<std::size_t>(m)] = alpha[0];
    return ExponentVector(std::move(b));
}

bool check_lex_revlex_duality(int m, int n, std::size_t cap) {
    auto p = PosetPmn::build(m, n, cap);
    std::vector<ExponentVector> flipped;
    flipped.reserve(p->elements().size());
    for (const ExponentVector& a : p->elements())
        flipped.push_back(flip(a));
    const MonomialOrder lex = MonomialOrder::lex();
    const MonomialOrder revlex = MonomialOrder::revlex();
    for (std::size_t i = 0; i < flipped.size(); ++i)
        for (std::size_t j = i + 1; j < flipped.size(); ++j) {
            bool lhs = compare(p->elements()[i], p->elements()[j], lex) ==
                       std::strong_ordering::less;
            bool rhs = compare(flipped[i], flipped[j], revlex) ==
                       std::strong_ordering::less;
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool j_lattice_isomorphism_check(int m, int n) {
    if (m < 1 || n < 1)
        throw DomainError("j_lattice_isomorphism_check requires m, n >= 1");
    if (m * n > 20)
        throw DomainError("j_lattice_isomorphism_check limited to m*n <= 20");
    auto p = PosetPmn::build(m, n);

    // Image of x^A: the order ideal <(a_0,n), (a_0+a_1,n-1), ...> of the
    // m x n grid, encoded as column heights k_l = a_0 + ... + a_{n-l}.
    auto heights = [&](const ExponentVector& a) {
        std::vector<int> k(static_cast<std::size_t>(n));
        for (int l = 1; l <= n; ++l) {
            int sum = 0;
            for (int j = 0; j <= n - l; ++j)
                sum += a[j];
            k[static_cast<std::size_t>(l) - 1] = sum;
        }
        return k;
    };

    std::vector<std::vector<int>> images;
    images.reserve(p->elements().size());
    for (const ExponentVector& a : p->elements()) {
        std::vector<int> k = heights(a);
        for (std::size_t l = 0; l < k.size(); ++l) {
            if (k[l] < 0 || k[l] > m)
                return false;
            if (l + 1 < k.size() && k[l] < k[l + 1])
                return false; // not an order ideal of the grid
        }
        images.push_back(std::move(k));
    }

    // Bijectivity onto J(m x n): distinct images, count = C(m+n, n).
    std::vector<std::vector<int>> sorted(images);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    Int ideals = binomial(Int(m + n), static_cast<unsigned long>(n));
    if (Int(static_cast<long>(images.size())) != ideals)
        return false;

    // Order preserved both ways: a <= b  <=>  heights(a) <= heights(b).
    const int N = p->size();
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            bool incl = true;
            for (std::size_t l = 0; l < images[static_cast<std::size_t>(i)].size(); ++l)
                if (images[static_cast<std::size_t>(i)][l] >
                    images[static_cast<std::size_t>(j)][l]) {
                    incl = false;
                    break;
                }
            if (p->leq(i, j) != incl)
                return false;
        }
    return true;
}

std::string poset_dot(const PosetPmn& p, const MonomialSet* highlight) {
    std::ostringstream out;
    out << "digraph P {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) {
        out << "  \"" << format_monomial(p.element(i)) << "\"";
        if (highlight && highlight->contains(i))
            out << " [peripheries=2]";
        out << ";\n";
    }
    for (int i = 0; i < p.size(); ++i)
        for (int up : p.up_covers(i))
            out << "  \"" << format_monomial(p.element(i)) << "\" -> \""
                << format_monomial(p.element(up)) << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace hilb
