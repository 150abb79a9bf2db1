#include "hilb/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hilb {

ExponentVector::ExponentVector(std::vector<int> exponents) : e_(std::move(exponents)) {
    if (e_.empty())
        throw DomainError("exponent vector must have at least one entry");
    for (int v : e_)
        if (v < 0)
            throw DomainError("negative exponent");
}

ExponentVector ExponentVector::unit(int n) {
    if (n < 0)
        throw DomainError("variable count must be positive");
    return ExponentVector(std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
}

int ExponentVector::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (e_.size() != other.e_.size())
        return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i])
            return false;
    return true;
}

DifferenceVector::DifferenceVector(std::vector<int> entries) : d_(std::move(entries)) {
    if (d_.empty())
        throw DomainError("difference vector must have at least one entry");
}

DifferenceVector DifferenceVector::delta(int n, int i) {
    if (i < 1 || i > n)
        throw DomainError("delta index out of range");
    std::vector<int> d(static_cast<std::size_t>(n) + 1, 0);
    d[static_cast<std::size_t>(i) - 1] = 1;
    d[static_cast<std::size_t>(i)] = -1;
    return DifferenceVector(std::move(d));
}

int DifferenceVector::degree() const {
    return std::accumulate(d_.begin(), d_.end(), 0);
}

DifferenceVector operator-(const ExponentVector& a, const ExponentVector& b) {
    if (a.num_vars() != b.num_vars())
        throw DomainError("difference of monomials in different rings");
    std::vector<int> d(a.exponents().size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = a.exponents()[i] - b.exponents()[i];
    return DifferenceVector(std::move(d));
}

std::optional<ExponentVector> translate(const ExponentVector& a, const DifferenceVector& k) {
    if (a.num_vars() != k.last_index() + 1)
        throw DomainError("translate: length mismatch");
    std::vector<int> e(a.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += k.entries()[i];
        if (e[i] < 0)
            return std::nullopt;
    }
    return ExponentVector(std::move(e));
}

WeightVector::WeightVector(std::vector<Int> weights) : w_(std::move(weights)) {
    if (w_.empty())
        throw DomainError("weight vector must have at least one entry");
}

bool WeightVector::strictly_decreasing() const {
    for (std::size_t i = 0; i + 1 < w_.size(); ++i)
        if (w_[i] <= w_[i + 1])
            return false;
    return true;
}

MonomialOrder MonomialOrder::weight(WeightVector w) {
    return MonomialOrder(OrderKind::Weight, std::move(w));
}

const WeightVector& MonomialOrder::weight_vector() const {
    if (!w_)
        throw DomainError("order has no weight vector");
    return *w_;
}

int max_var(const ExponentVector& a) {
    for (int i = a.last_index(); i >= 0; --i)
        if (a[i] > 0)
            return i;
    return kNegInfinity;
}

int min_var(const ExponentVector& a) {
    for (int i = 0; i <= a.last_index(); ++i)
        if (a[i] > 0)
            return i;
    return kPosInfinity;
}

int deg_i(const ExponentVector& a, int i) {
    if (i < 0 || i > a.last_index())
        throw DomainError("variable index out of range");
    return a[i];
}

std::optional<ExponentVector> borel_move(const ExponentVector& a, int i) {
    if (i < 1 || i > a.last_index())
        throw DomainError("borel_move index out of range");
    if (a[i] == 0)
        return std::nullopt;
    return translate(a, DifferenceVector::delta(a.last_index(), i));
}

Int weight_of(const ExponentVector& a, const WeightVector& w) {
    if (a.num_vars() != w.last_index() + 1)
        throw DomainError("weight_of: length mismatch");
    Int sum = 0;
    for (int i = 0; i <= a.last_index(); ++i)
        sum += w[i] * a[i];
    return sum;
}

namespace {

std::strong_ordering lex_compare(const ExponentVector& a, const ExponentVector& b) {
    for (int i = 0; i <= a.last_index(); ++i) {
        int d = a[i] - b[i];
        if (d > 0)
            return std::strong_ordering::greater;
        if (d < 0)
            return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering revlex_compare(const ExponentVector& a, const ExponentVector& b) {
    // Last nonzero entry of a-b positive => a smaller.
    for (int i = a.last_index(); i >= 0; --i) {
        int d = a[i] - b[i];
        if (d > 0)
            return std::strong_ordering::less;
        if (d < 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b,
                             const MonomialOrder& ord) {
    if (a.num_vars() != b.num_vars())
        throw DomainError("compare: monomials in different rings");
    if (a.degree() != b.degree())
        throw DomainError("compare: unequal degrees");
    switch (ord.kind()) {
    case OrderKind::Lex:
        return lex_compare(a, b);
    case OrderKind::RevLex:
        return revlex_compare(a, b);
    case OrderKind::Weight: {
        Int wa = weight_of(a, ord.weight_vector());
        Int wb = weight_of(b, ord.weight_vector());
        if (wa > wb)
            return std::strong_ordering::greater;
        if (wa < wb)
            return std::strong_ordering::less;
        return lex_compare(a, b);
    }
    }
    throw DomainError("unknown order kind");
}

WeightVector make_lex_weight(int n, int d) {
    if (n < 1 || d < 1)
        throw DomainError("make_lex_weight requires n >= 1, d >= 1");
    std::vector<Int> w(static_cast<std::size_t>(n) + 1);
    Int base = d + 1;
    for (int i = n; i >= 0; --i) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - i));
        w[static_cast<std::size_t>(i)] = p;
    }
    return WeightVector(std::move(w));
}

bool distinguishes(const WeightVector& w, int n, int d, std::size_t cap) {
    if (n < 1 || d < 0 || w.last_index() != n)
        throw DomainError("distinguishes: bad arguments");
    Int count = binomial(Int(d + n), static_cast<unsigned long>(n));
    if (count > static_cast<long>(cap))
        throw DomainError("distinguishes: degree-" + std::to_string(d) +
                          " stratum exceeds the size cap");
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(count.get_ui()));
    for (const ExponentVector& a : enumerate_monomials(n, d))
        values.push_back(weight_of(a, w));
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

namespace {

void enumerate_rec(int vars_left, int deg_left, std::vector<int>& acc,
                   std::vector<ExponentVector>& out) {
    if (vars_left == 1) {
        acc.push_back(deg_left);
        out.push_back(ExponentVector(acc));
        acc.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {
        acc.push_back(e);
        enumerate_rec(vars_left - 1, deg_left - e, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<ExponentVector> enumerate_monomials(int n, int d) {
    if (n < 0 || d < 0)
        throw DomainError("enumerate_monomials: bad arguments");
    std::vector<ExponentVector> out;
    std::vector<int> acc;
    enumerate_rec(n + 1, d, acc, out);
    return out;
}

ExponentVector parse_monomial(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw DomainError("empty monomial");

    std::vector<int> exps;
    if (s.front() == '[') {
        if (s.back() != ']')
            throw DomainError("malformed bracketed monomial: '" + text + "'");
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(item, &pos);
                if (pos != item.size())
                    throw std::invalid_argument(item);
                exps.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("malformed exponent '" + item + "' in '" + text + "'");
            }
        }
        if (exps.empty())
            throw DomainError("empty bracketed monomial: '" + text + "'");
    } else if (s == "1") {
        if (n < 0)
            throw DomainError("constant monomial needs an explicit variable count");
        exps.assign(static_cast<std::size_t>(n) + 1, 0);
    } else {
        // product form: x0^2*x1*x3 (letters other than x accepted, e.g. y)
        int max_index = -1;
        std::vector<std::pair<int, int>> factors;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, '*')) {
            if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])))
                throw DomainError("malformed monomial factor '" + tok + "'");
            std::size_t caret = tok.find('^');
            std::string idx_str = tok.substr(1, caret == std::string::npos
                                                    ? std::string::npos
                                                    : caret - 1);
            std::string exp_str = caret == std::string::npos ? "1" : tok.substr(caret + 1);
            try {
                std::size_t p1 = 0, p2 = 0;
                int idx = std::stoi(idx_str, &p1);
                int exp = std::stoi(exp_str, &p2);
                if (p1 != idx_str.size() || p2 != exp_str.size() || idx < 0 || exp < 0)
                    throw std::invalid_argument(tok);
                factors.emplace_back(idx, exp);
                max_index = std::max(max_index, idx);
            } catch (const std::exception&) {
                throw DomainError("malformed monomial factor '" + tok + "'");
            }
        }
        int last = n >= 0 ? n : max_index;
        if (max_index > last)
            throw DomainError("variable index exceeds ring size in '" + text + "'");
        exps.assign(static_cast<std::size_t>(last) + 1, 0);
        for (auto [idx, exp] : factors)
            exps[static_cast<std::size_t>(idx)] += exp;
    }

    if (n >= 0 && static_cast<int>(exps.size()) != n + 1)
        throw DomainError("monomial has wrong number of variables: '" + text + "'");
    return ExponentVector(std::move(exps));
}

std::string format_monomial(const ExponentVector& a, char letter) {
    std::string out;
    for (int i = 0; i <= a.last_index(); ++i) {
        if (a[i] == 0)
            continue;
        if (!out.empty())
            out.push_back('*');
        out.push_back(letter);
        out += std::to_string(i);
        if (a[i] > 1) {
            out.push_back('^');
            out += std::to_string(a[i]);
        }
    }
    return out.empty() ? "1" : out;
}

} // namespace hilb
