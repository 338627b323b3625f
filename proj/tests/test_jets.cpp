#include "picalb/errors.hpp"
#include "picalb/jets.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace picalb;

namespace {

Jet poly(std::initializer_list<long> coeffs, std::size_t order) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return Jet::from_polynomial(c, order);
}

BranchJetTuple tuple(std::vector<Jet> js) { return BranchJetTuple(std::move(js)); }

}  // namespace

TEST_CASE("jet multiplication") {
    CHECK(poly({1, 1}, 4) * poly({1, -1}, 4) == poly({1, 0, -1}, 4));
    CHECK(Jet::monomial(2, 6) * Jet::monomial(3, 6) == Jet::monomial(5, 6));
    CHECK((Jet::monomial(2, 4) * Jet::monomial(3, 4)).is_zero());
    CHECK((Jet::monomial(2, 4) * Jet::monomial(3, 4)).order() == 4);
}

TEST_CASE("mixed truncation orders truncate to the minimum") {
    const auto p = poly({0, 1, 1, 1, 1}, 6) * poly({1, 1}, 3);
    CHECK(p.order() == 3);
    CHECK(p == poly({0, 1, 2}, 3));
}

TEST_CASE("jet valuation") {
    CHECK(jet_valuation(poly({0, 0, 0, 1, 2}, 6)) == 3);
    CHECK_FALSE(jet_valuation(Jet::zero(6)).has_value());
    CHECK(jet_valuation(poly({7}, 3)) == 0);
}

TEST_CASE("span dimension examples") {
    CHECK(span_dimension({}) == 0);

    const auto t = Jet::monomial(1, 3), z = Jet::zero(3);
    const std::vector<BranchJetTuple> two{tuple({t, z}), tuple({z, t}), tuple({t, t})};
    CHECK(span_dimension(two) == 2);

    const std::vector<BranchJetTuple> mono{tuple({Jet::monomial(2, 6)}), tuple({Jet::monomial(3, 6)}),
                                           tuple({Jet::monomial(5, 6)})};
    CHECK(span_dimension(mono) == 3);
}

TEST_CASE("span dimension rejects mixed shapes") {
    const std::vector<BranchJetTuple> orders{tuple({Jet::monomial(1, 3)}), tuple({Jet::monomial(1, 4)})};
    CHECK_THROWS_AS(span_dimension(orders), Error);
    const std::vector<BranchJetTuple> branches{tuple({Jet::monomial(1, 3)}),
                                               tuple({Jet::monomial(1, 3), Jet::monomial(1, 3)})};
    CHECK_THROWS_AS(span_dimension(branches), Error);
    CHECK_THROWS_AS(BranchJetTuple({Jet::monomial(1, 3), Jet::monomial(1, 4)}), Error);
    CHECK_THROWS_AS(BranchJetTuple(std::vector<Jet>{}), Error);
}

TEST_CASE("ring axioms on random jets") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 7;
        const auto a = test::random_jet(rng, m), b = test::random_jet(rng, m), c = test::random_jet(rng, m);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("valuation is additive below the truncation order") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + rng() % 8;
        const auto a = test::random_jet(rng, m), b = test::random_jet(rng, m);
        const auto va = a.valuation(), vb = b.valuation();
        if (!va || !vb || *va + *vb >= m) continue;
        CHECK((a * b).valuation() == *va + *vb);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("span dimension invariances and bounds") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t nb = 1 + rng() % 3, m = 1 + rng() % 5, count = rng() % 8;
        std::vector<BranchJetTuple> vs;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Jet> js;
            for (std::size_t b = 0; b < nb; ++b) js.push_back(test::random_jet(rng, m));
            vs.emplace_back(std::move(js));
        }
        const auto d = span_dimension(vs);
        CHECK(d <= nb * m);
        CHECK(d <= vs.size());

        auto shuffled = vs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(span_dimension(shuffled) == d);

        if (!vs.empty()) {
            auto scaled = vs;
            const std::size_t i = rng() % scaled.size();
            Rational s(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 5));
            if (rng() % 2) s = -s;
            std::vector<Jet> js;
            for (const auto& j : scaled[i].branches()) js.push_back(s * j);
            scaled[i] = BranchJetTuple(std::move(js));
            CHECK(span_dimension(scaled) == d);
        }
    }
}

TEST_CASE("row reduction pivots do not depend on row order") {
    std::vector<RationalRow> rows{{0, 2, 4}, {0, 1, 2}, {Rational(1, 3), 0, 1}};
    const auto a = reduce_rows(rows);
    std::reverse(rows.begin(), rows.end());
    const auto b = reduce_rows(rows);
    CHECK(a.rank == 2);
    CHECK(a.pivot_columns == std::vector<std::size_t>{0, 1});
    CHECK(b.pivot_columns == a.pivot_columns);
}
