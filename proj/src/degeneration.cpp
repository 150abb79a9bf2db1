#include "hilb/degeneration.hpp"

#include <algorithm>
#include <random>

namespace hilb {

HomogeneousIdealBasis::HomogeneousIdealBasis(int n, int m, std::vector<Form> forms)
    : n_(n), m_(m), forms_(std::move(forms)) {
    if (n < 1 || m < 0)
        throw DomainError("HomogeneousIdealBasis: bad ring parameters");
    for (const Form& f : forms_) {
        int deg = -1;
        if (form_is_zero(f) || !form_is_homogeneous(f, &deg) || deg != m)
            throw DomainError("basis form is not homogeneous of degree " + std::to_string(m));
        if (form_num_vars(f) != n + 1)
            throw DomainError("basis form lives in the wrong ring");
    }
    // linear independence, by exact rank
    if (!forms_.empty()) {
        std::vector<ExponentVector> monos = enumerate_monomials(n, m);
        std::map<ExponentVector, int> col;
        for (std::size_t i = 0; i < monos.size(); ++i)
            col.emplace(monos[i], static_cast<int>(i));
        RatMatrix mat(forms_.size(), std::vector<Rat>(monos.size(), Rat(0)));
        for (std::size_t r = 0; r < forms_.size(); ++r)
            for (const auto& [mono, c] : forms_[r])
                mat[r][static_cast<std::size_t>(col.at(mono))] = c;
        if (rank(std::move(mat)) != static_cast<int>(forms_.size()))
            throw DomainError("basis forms are linearly dependent");
    }
}

HomogeneousIdealBasis truncate_at(const std::vector<Form>& generators, int n, int m) {
    if (generators.empty())
        throw DomainError("truncate_at: no generators");
    std::vector<Form> multiples;
    for (const Form& g : generators) {
        int deg = -1;
        if (form_is_zero(g) || !form_is_homogeneous(g, &deg))
            throw DomainError("truncate_at: generators must be nonzero homogeneous forms");
        if (form_num_vars(g) != n + 1)
            throw DomainError("truncate_at: generator lives in the wrong ring");
        if (deg > m)
            throw DomainError("truncate_at: m is smaller than a generator degree");
        for (const ExponentVector& u : enumerate_monomials(n, m - deg))
            multiples.push_back(form_multiply(form_monomial(u), g));
    }

    // canonical reduced basis of the span
    std::vector<ExponentVector> monos = enumerate_monomials(n, m);
    std::map<ExponentVector, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i)
        col.emplace(monos[i], static_cast<int>(i));
    RatMatrix mat(multiples.size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (std::size_t r = 0; r < multiples.size(); ++r)
        for (const auto& [mono, c] : multiples[r])
            mat[r][static_cast<std::size_t>(col.at(mono))] = c;
    auto pivots = rref(mat);
    std::vector<Form> basis;
    for (auto [row, pivot_col] : pivots) {
        (void)pivot_col;
        Form f;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (mat[static_cast<std::size_t>(row)][c] != 0)
                f.emplace(monos[c], mat[static_cast<std::size_t>(row)][c]);
        basis.push_back(std::move(f));
    }
    return HomogeneousIdealBasis(n, m, std::move(basis));
}

RatMatrix random_invertible_matrix(int n, std::uint64_t seed, int bound) {
    if (n < 1 || bound < 1)
        throw DomainError("random_invertible_matrix: bad arguments");
    std::mt19937_64 rng(seed);
    const int vars = n + 1;
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
    while (true) {
        RatMatrix g(static_cast<std::size_t>(vars),
                    std::vector<Rat>(static_cast<std::size_t>(vars), Rat(0)));
        for (int i = 0; i < vars; ++i)
            for (int j = 0; j < vars; ++j)
                g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    Rat(static_cast<long>(rng() % span) - bound);
        if (rank(g) == vars)
            return g;
    }
}

HomogeneousIdealBasis generic_change(const HomogeneousIdealBasis& basis, const RatMatrix& g) {
    if (static_cast<int>(g.size()) != basis.n() + 1 || rank(g) != basis.n() + 1)
        throw DomainError("generic_change: matrix must be invertible of size n+1");
    std::vector<Form> forms;
    for (const Form& f : basis.forms())
        forms.push_back(form_apply_matrix(g, f));
    return HomogeneousIdealBasis(basis.n(), basis.m(), std::move(forms));
}

HomogeneousIdealBasis generic_change(const HomogeneousIdealBasis& basis, std::uint64_t seed) {
    return generic_change(basis, random_invertible_matrix(basis.n(), seed));
}

EchelonBasis::EchelonBasis(int n, int m, std::vector<Form> forms,
                           std::vector<ExponentVector> leads)
    : n_(n), m_(m), forms_(std::move(forms)), leads_(std::move(leads)) {
    if (forms_.size() != leads_.size())
        throw DomainError("EchelonBasis: one lead per form required");
}

EchelonBasis echelonize(const HomogeneousIdealBasis& basis, const WeightVector& w) {
    const int n = basis.n();
    const int m = basis.m();
    if (w.last_index() != n)
        throw DomainError("echelonize: weight vector has the wrong length");
    if (!distinguishes(w, n, m))
        throw DomainError("weight does not distinguish monomials in degree " +
                          std::to_string(m));

    std::vector<ExponentVector> monos = enumerate_monomials(n, m);
    std::vector<int> order(monos.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    std::vector<Int> weights;
    weights.reserve(monos.size());
    for (const ExponentVector& a : monos)
        weights.push_back(weight_of(a, w));
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return weights[static_cast<std::size_t>(a)] >
                                         weights[static_cast<std::size_t>(b)]; });

    std::map<ExponentVector, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i)
        col.emplace(monos[i], static_cast<int>(i));
    RatMatrix mat(basis.forms().size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (std::size_t r = 0; r < basis.forms().size(); ++r)
        for (const auto& [mono, c] : basis.forms()[r])
            mat[r][static_cast<std::size_t>(col.at(mono))] = c;

    auto pivots = rref(mat, order);
    if (pivots.size() != basis.forms().size())
        throw DomainError("echelonize: input forms are linearly dependent");

    std::vector<Form> forms;
    std::vector<ExponentVector> leads;
    for (auto [row, pivot_col] : pivots) {
        Form f;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (mat[static_cast<std::size_t>(row)][c] != 0)
                f.emplace(monos[c], mat[static_cast<std::size_t>(row)][c]);
        forms.push_back(std::move(f));
        leads.push_back(monos[static_cast<std::size_t>(pivot_col)]);
    }
    return EchelonBasis(n, m, std::move(forms), std::move(leads));
}

MonomialSet initial_ideal(const EchelonBasis& basis, std::size_t cap) {
    auto poset = PosetPmn::build(basis.m(), basis.n(), cap);
    return MonomialSet(poset, basis.leads());
}

FirstOrderDirection first_order_direction(const EchelonBasis& basis, const WeightVector& w) {
    std::optional<Int> min_drop;
    std::optional<DifferenceVector> K;
    bool tie_between_distinct = false;

    for (std::size_t i = 0; i < basis.forms().size(); ++i) {
        const ExponentVector& lead = basis.leads()[i];
        Int lead_weight = weight_of(lead, w);
        for (const auto& [mono, c] : basis.forms()[i]) {
            (void)c;
            if (mono == lead)
                continue;
            Int drop = lead_weight - weight_of(mono, w);
            if (drop <= 0)
                throw std::logic_error("echelon tail above its lead weight");
            DifferenceVector shift = mono - lead;
            if (!min_drop || drop < *min_drop) {
                min_drop = drop;
                K = shift;
                tie_between_distinct = false;
            } else if (drop == *min_drop && !(shift == *K)) {
                tie_between_distinct = true;
            }
        }
    }
    if (!min_drop)
        throw DomainError("already a monomial span: limit point reached, no direction");
    if (tie_between_distinct)
        throw DomainError("minimal weight drop attained by two distinct shifts; "
                          "use a weight distinguishing monomials in degree 2m");

    MonomialSet F = initial_ideal(basis);
    const PosetPmn& p = F.poset();
    std::vector<TangentVector::Entry> entries;
    for (std::size_t i = 0; i < basis.forms().size(); ++i) {
        const ExponentVector& lead = basis.leads()[i];
        auto target = translate(lead, *K);
        if (!target || !p.is_element(*target))
            continue;
        auto it = basis.forms()[i].find(*target);
        if (it != basis.forms()[i].end())
            entries.push_back(TangentVector::Entry{lead, *target, it->second});
    }
    TangentVector v(F, entries);
    if (v.is_zero())
        throw std::logic_error("first-order direction came out zero");
    return FirstOrderDirection{*K, std::move(v)};
}

namespace {

MonomialIdeal ideal_of_set(const MonomialSet& s) {
    return MonomialIdeal(s.poset().n(), s.members());
}

DegenerationReport run_pipeline(const HomogeneousIdealBasis& basis,
                                const HilbertPolynomial& rho, const WeightVector& w,
                                const RatMatrix& g, std::size_t cap) {
    EchelonBasis echelon = echelonize(generic_change(basis, g), w);
    MonomialSet limit = initial_ideal(echelon, cap);

    DegenerationReport report{limit, false, false, {}, {}, {}, {}, {}};
    report.borel_fixed_limit = is_borel_fixed(ideal_of_set(limit));

    bool monomial_span = true;
    for (const Form& f : echelon.forms())
        if (f.size() > 1) {
            monomial_span = false;
            break;
        }
    if (monomial_span) {
        report.at_fixed_point = true;
        return report;
    }

    FirstOrderDirection dir = first_order_direction(echelon, w);
    report.K = dir.K;
    report.tangent = dir.v;
    report.borel_eigenvector_tangent = is_borel_eigenvector(dir.v);
    try {
        report.tangent_is_flat = is_tangent(dir.v, rho);
    } catch (const DomainError&) {
        // limit failed the Hilbert point condition (non-generic input)
        report.tangent_is_flat = false;
    }
    return report;
}

} // namespace

DegenerationReport degenerate_report(const HomogeneousIdealBasis& basis,
                                     const HilbertPolynomial& rho, const WeightVector& w,
                                     const DegenerateOptions& options) {
    const int n = basis.n();
    const int m = basis.m();
    if (w.last_index() != n)
        throw DomainError("weight vector has the wrong length");
    Int expected_r = binomial(Int(m + n), static_cast<unsigned long>(n)) -
                     rho.value_at(Int(m));
    if (Int(basis.r()) != expected_r)
        throw DomainError("basis dimension disagrees with the Hilbert polynomial at degree m");
    if (!distinguishes(w, n, basis.r() * m))
        throw DomainError("weight does not distinguish monomials up to degree " +
                          std::to_string(basis.r() * m));
    if (!w.strictly_decreasing())
        throw DomainError("weight vector must be strictly decreasing");

    RatMatrix g = options.identity_g ? identity_matrix(n + 1)
                                     : random_invertible_matrix(n, options.seed);
    DegenerationReport report = run_pipeline(basis, rho, w, g, options.cap);

    if (options.identity_g) {
        report.genericity_note = "identity g: genericity cross-check skipped";
    } else if (!options.cross_check) {
        report.genericity_note = "genericity cross-check disabled";
    } else {
        std::uint64_t alt_seed = options.seed ^ 0x9e3779b97f4a7c15ull;
        DegenerationReport alt = run_pipeline(
            basis, rho, w, random_invertible_matrix(n, alt_seed), options.cap);
        report.genericity_note =
            alt.limit == report.limit
                ? "cross-seed check: limit filter agrees with alternate seed"
                : "GENERICITY WARNING: alternate seed produced a different limit filter";
    }
    return report;
}

DegenerationReport degenerate_report(const std::vector<Form>& generators, int n,
                                     const HilbertPolynomial& rho, const WeightVector& w,
                                     const DegenerateOptions& options) {
    const int m = static_cast<int>(to_long(gotzmann_number(rho)));
    return degenerate_report(truncate_at(generators, n, m), rho, w, options);
}

std::vector<FanRecord> first_order_fan_sample(const HomogeneousIdealBasis& basis,
                                              const HilbertPolynomial& rho,
                                              std::uint64_t seed, int trials,
                                              const DegenerateOptions& options) {
    if (trials < 1)
        throw DomainError("fan sampling needs at least one trial");
    const int n = basis.n();
    const int target_degree = basis.r() * basis.m();
    std::mt19937_64 rng(seed ^ 0xfa115eedull);

    auto sample_weight = [&]() -> WeightVector {
        // small random gaps first; fall back to a mixed-radix construction
        // that distinguishes by digit-encoding when degrees are high
        for (int attempt = 0; attempt < 40; ++attempt) {
            std::vector<Int> w(static_cast<std::size_t>(n) + 1);
            w[static_cast<std::size_t>(n)] = 0;
            for (int i = n - 1; i >= 0; --i)
                w[static_cast<std::size_t>(i)] =
                    w[static_cast<std::size_t>(i) + 1] +
                    Int(1 + static_cast<long>(rng() % (3ull * target_degree + 3)));
            WeightVector cand(std::move(w));
            if (distinguishes(cand, n, target_degree))
                return cand;
        }
        std::vector<Int> w(static_cast<std::size_t>(n) + 1);
        w[static_cast<std::size_t>(n)] = 1;
        for (int i = n - 1; i >= 0; --i) {
            Int base = target_degree + 1 +
                       static_cast<long>(rng() % (2ull * target_degree + 2));
            w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i) + 1] * base;
        }
        WeightVector cand(std::move(w));
        if (!distinguishes(cand, n, target_degree))
            throw std::logic_error("mixed-radix weight failed to distinguish");
        return cand;
    };

    DegenerateOptions per_run = options;
    per_run.cross_check = false; // same g across all sampled weights

    std::vector<FanRecord> out;
    for (int t = 0; t < trials; ++t) {
        WeightVector w = sample_weight();
        DegenerationReport rep = degenerate_report(basis, rho, w, per_run);
        std::optional<EigenvectorType> type;
        if (rep.tangent)
            type = torus_eigenvector_type(*rep.tangent);
        out.push_back(FanRecord{std::move(w), rep.limit, std::move(type)});
    }
    return out;
}

HomogeneousIdealBasis ideal_of_points(const std::vector<std::vector<Rat>>& points, int n,
                                      int m) {
    if (points.empty())
        throw DomainError("ideal_of_points: no points");
    for (const auto& pt : points) {
        if (static_cast<int>(pt.size()) != n + 1)
            throw DomainError("point has the wrong number of coordinates");
        bool nonzero = false;
        for (const Rat& c : pt)
            if (c != 0)
                nonzero = true;
        if (!nonzero)
            throw DomainError("zero vector is not a projective point");
    }
    // distinctness: no two rows proportional
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            RatMatrix pair{points[i], points[j]};
            if (rank(pair) < 2)
                throw DomainError("duplicate projective points");
        }

    std::vector<ExponentVector> monos = enumerate_monomials(n, m);
    RatMatrix eval(points.size(), std::vector<Rat>(monos.size(), Rat(0)));
    for (std::size_t r = 0; r < points.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Rat value(1);
            for (int i = 0; i <= n; ++i)
                value *= rat_pow(points[r][static_cast<std::size_t>(i)], monos[c][i]);
            eval[r][c] = value;
        }

    std::vector<Form> forms;
    for (const auto& vec : kernel_basis(std::move(eval))) {
        Form f;
        for (std::size_t c = 0; c < monos.size(); ++c)
            if (vec[c] != 0)
                f.emplace(monos[c], vec[c]);
        forms.push_back(std::move(f));
    }
    if (forms.size() != monos.size() - points.size())
        throw DomainError("points do not impose independent conditions in degree " +
                          std::to_string(m));
    return HomogeneousIdealBasis(n, m, std::move(forms));
}

} // namespace hilb
