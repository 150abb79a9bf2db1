#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hilb/ideal.hpp"
#include "hilb/poset.hpp"
#include "oracles.hpp"

using namespace hilb;

namespace {
ExponentVector ev(std::vector<int> e) {
    return ExponentVector(std::move(e));
}
} // namespace

TEST_CASE("build_poset sizes and edges") {
    auto p22 = PosetPmn::build(2, 2);
    CHECK(p22->size() == 6);
    // cover edges of P(2,2): exactly the six from the degree-2 diagram
    std::set<std::pair<ExponentVector, ExponentVector>> edges;
    for (int i = 0; i < p22->size(); ++i)
        for (int up : p22->up_covers(i))
            edges.emplace(p22->element(i), p22->element(up));
    std::set<std::pair<ExponentVector, ExponentVector>> expected{
        {ev({0, 2, 0}), ev({1, 1, 0})}, // y^2 < xy
        {ev({0, 1, 1}), ev({1, 0, 1})}, // yz < xz
        {ev({0, 1, 1}), ev({0, 2, 0})}, // yz < y^2
        {ev({0, 0, 2}), ev({0, 1, 1})}, // z^2 < yz
        {ev({1, 1, 0}), ev({2, 0, 0})}, // xy < x^2
        {ev({1, 0, 1}), ev({1, 1, 0})}, // xz < xy
    };
    CHECK(edges == expected);

    CHECK(PosetPmn::build(3, 2)->size() == 10);

    auto p11 = PosetPmn::build(1, 1);
    CHECK(p11->size() == 2);
    CHECK(p11->element(0) == ev({1, 0}));
    CHECK(p11->up_covers(p11->index_of(ev({0, 1}))) ==
          std::vector<int>{p11->index_of(ev({1, 0}))});
}

TEST_CASE("poset size cap") {
    CHECK_THROWS_AS(PosetPmn::build(6, 2, 10), DomainError);
}

TEST_CASE("is_filter") {
    auto p = PosetPmn::build(2, 2);
    CHECK(is_filter(MonomialSet(p, {ev({2, 0, 0}), ev({1, 1, 0}), ev({0, 2, 0})})));
    CHECK(!is_filter(MonomialSet(p, {ev({2, 0, 0}), ev({0, 2, 0})})));
    CHECK(is_filter(MonomialSet(p, p->elements())));
    CHECK_THROWS_AS(MonomialSet(p, {ev({1, 0, 0})}), DomainError); // wrong degree
}

TEST_CASE("up_closure and down_closure") {
    auto p = PosetPmn::build(3, 2);
    MonomialSet y3(p, {ev({0, 3, 0})});
    CHECK(up_closure(y3).members() ==
          std::vector<ExponentVector>{ev({3, 0, 0}), ev({2, 1, 0}), ev({1, 2, 0}),
                                      ev({0, 3, 0})});
    CHECK(up_closure(MonomialSet(p, std::vector<ExponentVector>{})).empty());

    MonomialSet xyz(p, {ev({1, 1, 1})});
    std::set<ExponentVector> got;
    for (const auto& a : up_closure(xyz).members())
        got.insert(a);
    std::set<ExponentVector> expected{ev({1, 1, 1}), ev({2, 0, 1}), ev({1, 2, 0}),
                                      ev({2, 1, 0}), ev({3, 0, 0})};
    CHECK(got == expected);
}

TEST_CASE("up_closure agrees with the fixpoint oracle, is idempotent and monotone") {
    auto p = PosetPmn::build(3, 2);
    for (std::size_t mask = 0; mask < (std::size_t(1) << 10); mask += 7) {
        std::vector<bool> bits(10, false);
        for (int i = 0; i < 10; ++i)
            if (mask & (std::size_t(1) << i))
                bits[static_cast<std::size_t>(i)] = true;
        MonomialSet s(p, bits);
        MonomialSet closed = up_closure(s);
        CHECK(closed == oracles::up_closure_fixpoint(s));
        CHECK(is_filter(closed));
        CHECK(up_closure(closed) == closed);
        // monotone: closure contains the closure of any subset
        MonomialSet smaller = s;
        for (int i = 0; i < 10; ++i)
            if (smaller.contains(i)) {
                smaller = smaller.with(i, false);
                break;
            }
        for (int i = 0; i < 10; ++i)
            if (up_closure(smaller).contains(i))
                CHECK(closed.contains(i));
    }
}

TEST_CASE("filter / order ideal duality") {
    auto p = PosetPmn::build(3, 2);
    for (std::size_t mask = 0; mask < (std::size_t(1) << 10); mask += 3) {
        std::vector<bool> bits(10, false);
        for (int i = 0; i < 10; ++i)
            if (mask & (std::size_t(1) << i))
                bits[static_cast<std::size_t>(i)] = true;
        MonomialSet s(p, bits);
        CHECK(is_filter(s) == is_order_ideal(s.complement()));
    }
}

TEST_CASE("flip on the worked example") {
    CHECK(flip(ev({2, 3, 0, 1})) == ev({0, 2, 0, 0, 1, 0, 0})); // x0^2 x1^3 x3 -> y1^2 y4
}

TEST_CASE("flip of the pure power") {
    // x_0^m in n+1 variables goes to y_0^n in m+1 variables (bars-and-stars)
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
            e[0] = m;
            ExponentVector a(std::move(e));
            CHECK(flip(a) == oracles::flip_bars_and_stars(a));
            std::vector<int> expect(static_cast<std::size_t>(m) + 1, 0);
            expect[0] = n;
            CHECK(flip(a) == ExponentVector(std::move(expect)));
        }
}

TEST_CASE("flip agrees with both oracles everywhere") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const ExponentVector& a : enumerate_monomials(n, m)) {
                CHECK(flip(a) == oracles::flip_bars_and_stars(a));
                CHECK(flip(a) == oracles::flip_grid(a));
            }
}

TEST_CASE("flip is an involution and an order isomorphism") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto p = PosetPmn::build(m, n);
            auto q = PosetPmn::build(n, m);
            // involution
            for (const ExponentVector& a : p->elements())
                CHECK(flip(flip(a)) == a);
            // bijection onto P(n,m)
            std::set<ExponentVector> images;
            for (const ExponentVector& a : p->elements()) {
                CHECK(q->is_element(flip(a)));
                images.insert(flip(a));
            }
            CHECK(images.size() == static_cast<std::size_t>(p->size()));
            CHECK(p->size() == q->size());
            // cover edges correspond
            std::set<std::pair<ExponentVector, ExponentVector>> mapped, target;
            for (int i = 0; i < p->size(); ++i)
                for (int up : p->up_covers(i))
                    mapped.emplace(flip(p->element(i)), flip(p->element(up)));
            for (int i = 0; i < q->size(); ++i)
                for (int up : q->up_covers(i))
                    target.emplace(q->element(i), q->element(up));
            CHECK(mapped == target);
        }
}

TEST_CASE("Lex-RevLex duality") {
    CHECK(check_lex_revlex_duality(3, 2));
    CHECK(check_lex_revlex_duality(2, 3));
    CHECK(check_lex_revlex_duality(1, 1));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(check_lex_revlex_duality(m, n));
}

TEST_CASE("P(m,n) is J(m x n)") {
    CHECK(j_lattice_isomorphism_check(2, 2));
    CHECK(j_lattice_isomorphism_check(3, 1));
    CHECK(j_lattice_isomorphism_check(1, 1));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            if (m * n <= 12)
                CHECK(j_lattice_isomorphism_check(m, n));
}

TEST_CASE("meets and joins exist (distributive lattice consequence)") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto p = PosetPmn::build(m, n);
            const int N = p->size();
            std::vector<std::vector<bool>> le(static_cast<std::size_t>(N),
                                              std::vector<bool>(static_cast<std::size_t>(N)));
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        p->leq(i, j);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    // join: unique minimal common upper bound
                    std::vector<int> ub;
                    for (int k = 0; k < N; ++k)
                        if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                            le[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)])
                            ub.push_back(k);
                    int minimal = 0;
                    for (int k : ub) {
                        bool is_min = true;
                        for (int l : ub)
                            if (l != k &&
                                le[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)])
                                is_min = false;
                        if (is_min)
                            ++minimal;
                    }
                    CHECK(minimal == 1);
                }
        }
}

TEST_CASE("poset_dot shape") {
    auto p = PosetPmn::build(2, 2);
    std::string dot = poset_dot(*p);
    CHECK(dot.find("digraph") != std::string::npos);
    // 6 nodes and 6 edges
    std::size_t arrows = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(arrows == 6);
}
