#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilb/degeneration.hpp"
#include "oracles.hpp"

using namespace hilb;

namespace {

ExponentVector ev(std::vector<int> e) {
    return ExponentVector(std::move(e));
}

HilbertPolynomial poly(std::vector<Rat> coeffs) {
    return HilbertPolynomial::from_coefficients(std::move(coeffs));
}

std::vector<Form> three_points_gens() { // (x^2, xy, y^2)
    return {form_monomial(ev({2, 0, 0})), form_monomial(ev({1, 1, 0})),
            form_monomial(ev({0, 2, 0}))};
}

Form fixed_conic() {
    return parse_form("x0^2 + 2*x0*x1 - x1^2 + 3*x1*x2 - x2^2 + x0*x2", 2);
}

MonomialSet lex_limit_of_three_points() { // degree-3 truncation of (x, y^3)
    auto p = PosetPmn::build(3, 2);
    return MonomialSet(p, {ev({3, 0, 0}), ev({2, 1, 0}), ev({2, 0, 1}), ev({1, 2, 0}),
                           ev({1, 1, 1}), ev({1, 0, 2}), ev({0, 3, 0})});
}

} // namespace

TEST_CASE("truncate_at") {
    auto b = truncate_at(three_points_gens(), 2, 3);
    CHECK(b.r() == 7);
    CHECK(b.m() == 3);

    auto single = truncate_at({form_monomial(ev({1, 0, 0}))}, 2, 1);
    CHECK(single.r() == 1);
    CHECK(single.forms()[0] == form_monomial(ev({1, 0, 0})));

    auto conic = truncate_at({parse_form("x0^2 + x1*x2", 2)}, 2, 2);
    CHECK(conic.r() == 1);

    CHECK_THROWS_AS(truncate_at(three_points_gens(), 2, 1), DomainError); // m too small
}

TEST_CASE("generic_change") {
    auto b = truncate_at(three_points_gens(), 2, 3);
    auto unchanged = generic_change(b, identity_matrix(3));
    CHECK(unchanged.forms() == b.forms());

    // deterministic in the seed
    auto g1 = random_invertible_matrix(2, 12345);
    auto g2 = random_invertible_matrix(2, 12345);
    CHECK(g1 == g2);
    CHECK(rank(g1) == 3);

    // a generic change of (x) hits all variables
    auto line = truncate_at({form_monomial(ev({1, 0, 0}))}, 2, 1);
    auto moved = generic_change(line, std::uint64_t{7});
    CHECK(moved.forms()[0].size() == 3);
}

TEST_CASE("echelonize") {
    WeightVector w = make_lex_weight(2, 2);
    Form f1 = parse_form("x0^2 + x0*x1", 2);
    Form f2 = parse_form("x0*x1", 2);
    auto e = echelonize(HomogeneousIdealBasis(2, 2, {f1, f2}), w);
    REQUIRE(e.r() == 2);
    CHECK(e.leads() == std::vector<ExponentVector>{ev({2, 0, 0}), ev({1, 1, 0})});
    CHECK(e.forms()[0] == form_monomial(ev({2, 0, 0})));
    CHECK(e.forms()[1] == form_monomial(ev({1, 1, 0})));

    auto single = echelonize(
        HomogeneousIdealBasis(2, 2, {parse_form("2*x0*x1 + x1^2", 2)}), w);
    CHECK(single.leads() == std::vector<ExponentVector>{ev({1, 1, 0})});
    CHECK(single.forms()[0].at(ev({1, 1, 0})) == 1);

    CHECK_THROWS_AS(echelonize(HomogeneousIdealBasis(2, 2, {f1}),
                               WeightVector({Int(1), Int(1), Int(0)})),
                    DomainError); // non-distinguishing weight
}

TEST_CASE("Galligo smoke: generic points echelonize to a filter of leads") {
    oracles::Rng rng(31);
    WeightVector w = make_lex_weight(2, 21);
    for (int trial = 0; trial < 5; ++trial) {
        auto pts = oracles::random_points(rng, 3, 2);
        auto basis = ideal_of_points(pts, 2, 3);
        REQUIRE(basis.r() == 7);
        auto echelon = echelonize(generic_change(basis, std::uint64_t(trial + 100)), w);
        CHECK(is_filter(initial_ideal(echelon)));
    }
}

TEST_CASE("initial_ideal") {
    WeightVector w = make_lex_weight(2, 2);
    auto conic = truncate_at({fixed_conic()}, 2, 2);
    auto e = echelonize(generic_change(conic, std::uint64_t{5}), w);
    CHECK(initial_ideal(e).members() == std::vector<ExponentVector>{ev({2, 0, 0})});

    // monomial input: its own filter
    auto b = truncate_at(three_points_gens(), 2, 3);
    auto em = echelonize(b, make_lex_weight(2, 3));
    auto p = PosetPmn::build(3, 2);
    CHECK(initial_ideal(em) ==
          MonomialSet(p, monomials_of_degree(MonomialIdeal(2, {ev({2, 0, 0}),
                                                               ev({1, 1, 0}),
                                                               ev({0, 2, 0})}),
                                             3)));
}

TEST_CASE("first_order_direction on a generic conic") {
    WeightVector w = make_lex_weight(2, 4);
    auto conic = truncate_at({fixed_conic()}, 2, 2);
    auto e = echelonize(generic_change(conic, std::uint64_t{5}), w);
    auto dir = first_order_direction(e, w);
    CHECK(dir.K == DifferenceVector({-1, 1, 0}));
    REQUIRE(dir.v.entries().size() == 1);
    CHECK(dir.v.coefficient(ev({2, 0, 0}), ev({1, 1, 0})) != 0);
    CHECK(is_borel_eigenvector(dir.v));

    // monomial span: no direction
    auto b = truncate_at(three_points_gens(), 2, 3);
    auto em = echelonize(b, make_lex_weight(2, 3));
    CHECK_THROWS_AS(first_order_direction(em, make_lex_weight(2, 3)), DomainError);
}

TEST_CASE("first_order_direction on three generic points") {
    oracles::Rng rng(77);
    auto pts = oracles::random_points(rng, 3, 2);
    WeightVector w = make_lex_weight(2, 6);
    auto e = echelonize(generic_change(ideal_of_points(pts, 2, 3), std::uint64_t{11}), w);
    CHECK(initial_ideal(e) == lex_limit_of_three_points());
    auto dir = first_order_direction(e, w);
    // the nearest standard monomial below y^3 under any decreasing weight
    CHECK(dir.K == DifferenceVector({0, -1, 1}));
    REQUIRE(dir.v.entries().size() == 1);
    CHECK(dir.v.coefficient(ev({0, 3, 0}), ev({0, 2, 1})) != 0);
    CHECK(is_borel_eigenvector(dir.v));
    CHECK(is_tangent(dir.v, poly({Rat(3)})));
}

TEST_CASE("degenerate_report: three random points") {
    oracles::Rng rng(123);
    auto pts = oracles::random_points(rng, 3, 2);
    auto basis = ideal_of_points(pts, 2, 3);
    WeightVector w = make_lex_weight(2, 21);
    DegenerateOptions opts;
    opts.seed = 42;
    auto rep = degenerate_report(basis, poly({Rat(3)}), w, opts);
    CHECK(rep.borel_fixed_limit);
    CHECK(rep.limit == lex_limit_of_three_points());
    REQUIRE(rep.tangent.has_value());
    CHECK(*rep.borel_eigenvector_tangent);
    CHECK(*rep.tangent_is_flat);
    CHECK(rep.genericity_note.find("agrees") != std::string::npos);
}

TEST_CASE("degenerate_report: conic via generators") {
    WeightVector w = make_lex_weight(2, 2);
    DegenerateOptions opts;
    opts.seed = 3;
    auto rep = degenerate_report({fixed_conic()}, 2, poly({Rat(1), Rat(2)}), w, opts);
    CHECK(rep.borel_fixed_limit);
    CHECK(rep.limit.members() == std::vector<ExponentVector>{ev({2, 0, 0})});
    REQUIRE(rep.K.has_value());
    CHECK(*rep.K == DifferenceVector({-1, 1, 0}));
    REQUIRE(rep.tangent.has_value());
    CHECK(rep.tangent->entries().size() == 1);
    CHECK(*rep.borel_eigenvector_tangent);
    CHECK(*rep.tangent_is_flat);
}

TEST_CASE("degenerate_report: monomial ideal with identity g is at a fixed point") {
    WeightVector w = make_lex_weight(2, 21);
    DegenerateOptions opts;
    opts.identity_g = true;
    auto rep = degenerate_report(three_points_gens(), 2, poly({Rat(3)}), w, opts);
    CHECK(rep.at_fixed_point);
    CHECK(rep.borel_fixed_limit);
    CHECK(!rep.K.has_value());
    CHECK(!rep.tangent.has_value());
    CHECK(rep.genericity_note.find("identity") != std::string::npos);
}

TEST_CASE("degenerate_report: non-Borel monomial limit is reported, not hidden") {
    // with the identity change of coordinates, (y^2, xz) stays monomial and
    // its degree-4 piece is not up-closed
    std::vector<Form> gens{form_monomial(ev({0, 2, 0})), form_monomial(ev({1, 0, 1}))};
    WeightVector w = make_lex_weight(2, 44);
    DegenerateOptions opts;
    opts.identity_g = true;
    auto rep = degenerate_report(gens, 2, poly({Rat(4)}), w, opts);
    CHECK(rep.at_fixed_point);
    CHECK(!rep.borel_fixed_limit);
}

TEST_CASE("degenerate_report rejects bad weights") {
    DegenerateOptions opts;
    // non-distinguishing
    CHECK_THROWS_WITH_AS(
        degenerate_report({fixed_conic()}, 2, poly({Rat(1), Rat(2)}),
                          WeightVector({Int(1), Int(1), Int(0)}), opts),
        doctest::Contains("weight does not distinguish"), DomainError);
    // distinguishing but not decreasing
    CHECK_THROWS_WITH_AS(
        degenerate_report({fixed_conic()}, 2, poly({Rat(1), Rat(2)}),
                          WeightVector({Int(0), Int(5), Int(1)}), opts),
        doctest::Contains("strictly decreasing"), DomainError);
}

TEST_CASE("degenerate_report: dimension mismatch is a domain error") {
    // a conic declared to have the Hilbert polynomial of three points
    WeightVector w = make_lex_weight(2, 21);
    CHECK_THROWS_AS(degenerate_report({fixed_conic()}, 2, poly({Rat(3)}), w, {}),
                    DomainError);
}

TEST_CASE("path consistency at t = 1/1000") {
    oracles::Rng rng(5150);
    auto pts = oracles::random_points(rng, 3, 2);
    WeightVector w = make_lex_weight(2, 6);
    auto e = echelonize(generic_change(ideal_of_points(pts, 2, 3), std::uint64_t{17}), w);
    auto dir = first_order_direction(e, w);

    // evaluate the path: scale each tail coefficient by t^{w*(A_i - B)}
    Rat t = make_fraction(1, 1000);
    std::vector<Form> substituted;
    for (std::size_t i = 0; i < e.forms().size(); ++i) {
        const ExponentVector& lead = e.leads()[i];
        Int lead_weight = weight_of(lead, w);
        Form f;
        for (const auto& [mono, c] : e.forms()[i]) {
            if (mono == lead) {
                f.emplace(mono, c);
                continue;
            }
            long drop = to_long(lead_weight - weight_of(mono, w));
            f.emplace(mono, c * rat_pow(t, drop));
        }
        substituted.push_back(std::move(f));
    }
    auto e2 = echelonize(HomogeneousIdealBasis(2, 3, std::move(substituted)), w);
    CHECK(e2.leads() == e.leads());
    auto dir2 = first_order_direction(e2, w);
    CHECK(dir2.K == dir.K);
    CHECK(proportional(dir.v, dir2.v));
}

TEST_CASE("seed determinism and scale invariance") {
    oracles::Rng rng(321);
    auto pts = oracles::random_points(rng, 3, 2);
    auto basis = ideal_of_points(pts, 2, 3);
    WeightVector w = make_lex_weight(2, 21);
    DegenerateOptions opts;
    opts.seed = 2024;
    auto rho = poly({Rat(3)});

    auto rep1 = degenerate_report(basis, rho, w, opts);
    auto rep2 = degenerate_report(basis, rho, w, opts);
    CHECK(rep1.limit == rep2.limit);
    CHECK(*rep1.tangent == *rep2.tangent);
    CHECK(rep1.genericity_note == rep2.genericity_note);

    std::vector<Int> doubled;
    for (const Int& x : w.weights())
        doubled.push_back(2 * x);
    auto rep3 = degenerate_report(basis, rho, WeightVector(std::move(doubled)), opts);
    CHECK(rep3.limit == rep1.limit);
    CHECK(*rep3.K == *rep1.K);
    CHECK(*rep3.tangent == *rep1.tangent);
    CHECK(rep3.borel_eigenvector_tangent == rep1.borel_eigenvector_tangent);
}

TEST_CASE("fan sampling") {
    auto conic_basis = truncate_at({fixed_conic()}, 2, 2);
    auto rho = poly({Rat(1), Rat(2)});
    auto records = first_order_fan_sample(conic_basis, rho, 9, 100);
    REQUIRE(records.size() == 100);
    for (const FanRecord& rec : records) {
        CHECK(rec.limit.members() == std::vector<ExponentVector>{ev({2, 0, 0})});
        REQUIRE(rec.type.has_value());
        // x^2 -> xy is the direction for every strictly decreasing weight
        CHECK(rec.type->K == DifferenceVector({-1, 1, 0}));
    }

    // three points: every chamber's limit is one of the two Borel-fixed
    // points of Hilb (sampled weights need not induce Lex, so the limit may
    // vary across chambers; each one is still Borel-fixed)
    oracles::Rng rng(8);
    auto pts = oracles::random_points(rng, 3, 2);
    auto basis = ideal_of_points(pts, 2, 3);
    auto records3 = first_order_fan_sample(basis, poly({Rat(3)}), 5, 12);
    REQUIRE(records3.size() == 12);
    auto borel_points = enumerate_borel_points(poly({Rat(3)}), 2);
    for (const FanRecord& rec : records3) {
        CHECK(is_filter(rec.limit));
        bool known = false;
        for (const MonomialSet& bp : borel_points)
            if (rec.limit == bp)
                known = true;
        CHECK(known);
    }

    // a single sampled weight reproduces degenerate_report
    DegenerateOptions opts;
    opts.seed = 5;
    opts.cross_check = false;
    auto one = first_order_fan_sample(basis, poly({Rat(3)}), 5, 1, opts);
    auto rep = degenerate_report(basis, poly({Rat(3)}), one[0].w, opts);
    CHECK(one[0].limit == rep.limit);
    REQUIRE(rep.tangent.has_value());
    CHECK(one[0].type == torus_eigenvector_type(*rep.tangent));
}

TEST_CASE("degenerate_report: union of a conic and two points") {
    // forms of degree 4 vanishing on the union: f * {h of degree 2 vanishing
    // at both points}; rho = (2z+1) + 2 = 2z+3, Gotzmann number 4
    Form f = fixed_conic();
    std::vector<std::vector<Rat>> pts{{Rat(1), Rat(1), Rat(1)}, {Rat(5), Rat(-2), Rat(1)}};
    std::vector<ExponentVector> quad = enumerate_monomials(2, 2);
    RatMatrix eval(pts.size(), std::vector<Rat>(quad.size(), Rat(0)));
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < quad.size(); ++c) {
            Rat value(1);
            for (int i = 0; i <= 2; ++i)
                value *= rat_pow(pts[r][static_cast<std::size_t>(i)], quad[c][i]);
            eval[r][c] = value;
        }
    std::vector<Form> forms;
    for (const auto& vec : kernel_basis(std::move(eval))) {
        Form h;
        for (std::size_t c = 0; c < quad.size(); ++c)
            if (vec[c] != 0)
                h.emplace(quad[c], vec[c]);
        forms.push_back(form_multiply(f, h));
    }
    HomogeneousIdealBasis basis(2, 4, std::move(forms));
    REQUIRE(basis.r() == 4);

    auto rho = poly({Rat(3), Rat(2)}); // 2z + 3
    WeightVector w = make_lex_weight(2, basis.r() * basis.m());
    DegenerateOptions opts;
    opts.seed = 91;
    auto rep = degenerate_report(basis, rho, w, opts);
    CHECK(rep.borel_fixed_limit);
    REQUIRE(rep.tangent.has_value());
    CHECK(*rep.borel_eigenvector_tangent);
    CHECK(*rep.tangent_is_flat);
}

TEST_CASE("degenerate_report: twisted cubic in P^3") {
    // rho = 3z + 1, Macaulay list (4, 3), Gotzmann number 4
    std::vector<Form> minors{parse_form("x0*x2 - x1^2", 3), parse_form("x0*x3 - x1*x2", 3),
                             parse_form("x1*x3 - x2^2", 3)};
    auto rho = poly({Rat(1), Rat(3)});
    CHECK(gotzmann_number(rho) == 4);
    auto basis = truncate_at(minors, 3, 4);
    CHECK(basis.r() == 22); // dim S_4 - rho(4) = 35 - 13
    WeightVector w = make_lex_weight(3, basis.r() * basis.m());
    for (std::uint64_t seed : {3ull, 14ull}) {
        DegenerateOptions opts;
        opts.seed = seed;
        auto rep = degenerate_report(basis, rho, w, opts);
        CHECK(rep.borel_fixed_limit);
        REQUIRE(rep.tangent.has_value());
        CHECK(*rep.borel_eigenvector_tangent);
        CHECK(*rep.tangent_is_flat);
        CHECK(rep.genericity_note.find("agrees") != std::string::npos);
    }
}

TEST_CASE("ideal_of_points") {
    std::vector<std::vector<Rat>> pts{{Rat(1), Rat(0), Rat(1)},
                                      {Rat(0), Rat(1), Rat(1)},
                                      {Rat(2), Rat(3), Rat(1)}};
    auto basis = ideal_of_points(pts, 2, 3);
    CHECK(basis.r() == 7);
    // every basis form vanishes at every point
    for (const Form& f : basis.forms())
        for (const auto& pt : pts) {
            Rat value(0);
            for (const auto& [mono, c] : f) {
                Rat term = c;
                for (int i = 0; i <= 2; ++i)
                    term *= rat_pow(pt[static_cast<std::size_t>(i)], mono[i]);
                value += term;
            }
            CHECK(value == 0);
        }

    std::vector<std::vector<Rat>> dup{{Rat(1), Rat(0), Rat(1)}, {Rat(2), Rat(0), Rat(2)}};
    CHECK_THROWS_AS(ideal_of_points(dup, 2, 2), DomainError);
}
