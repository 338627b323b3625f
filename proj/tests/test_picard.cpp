#include "picalb/errors.hpp"
#include "picalb/picard.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace picalb;

namespace {

SingularPointData node_data(std::string label) {
    return SingularPointData(std::move(label), {{{0, 1}, {}}, {{}, {0, 1}}});
}

CurveModel nodal_cubic() {
    CurveModel m;
    m.components.push_back({"A", 0});
    m.points.push_back({"n", node_data("n"), {"A", "A"}, std::nullopt});
    return m;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::InvalidArgument;
}

std::uint64_t gdim(std::uint64_t a) { return a * (2 * a - 1); }

}  // namespace

TEST_CASE("torus rank") {
    CHECK(torus_rank(build_dkl(1, 1, 2, 3)) == 2);
    CurveModel cusp;
    cusp.components.push_back({"A", 0});
    cusp.points.push_back({"c", SingularPointData::monomial("c", {2, 3}), {"A"}, std::nullopt});
    CHECK(torus_rank(cusp) == 0);
    CHECK(torus_rank(nodal_cubic()) == 1);
}

TEST_CASE("disconnected models are rejected") {
    auto m = nodal_cubic();
    m.connected = false;
    CHECK(code_of([&] { torus_rank(m); }) == ErrorCode::Disconnected);
    CurveModel two;
    two.components = {{"A", 0}, {"B", 1}};
    CHECK(code_of([&] { picard_decompose(two); }) == ErrorCode::Disconnected);
}

TEST_CASE("model validation") {
    auto m = nodal_cubic();
    m.points.front().incidence = {"A"};
    CHECK(code_of([&] { m.validate(); }) == ErrorCode::Schema);
    m.points.front().incidence = {"A", "Z"};
    CHECK(code_of([&] { m.validate(); }) == ErrorCode::Schema);
    auto dup = nodal_cubic();
    dup.components.push_back({"A", 1});
    CHECK(code_of([&] { dup.validate(); }) == ErrorCode::Schema);
    CHECK(code_of([] { CurveModel{}.validate(); }) == ErrorCode::Schema);
}

TEST_CASE("unipotent totals") {
    CHECK(unipotent_dim_total(build_gamma_alpha(2)) == 6);
    CHECK(unipotent_dim_total(nodal_cubic()) == 0);
    CHECK(unipotent_dim_total(build_dkl(1, 1, 2, 2)) == 4);
}

TEST_CASE("local failures carry the point label") {
    CurveModel m;
    m.components.push_back({"A", 0});
    m.points.push_back({"cusp35", SingularPointData::monomial("cusp35", {3, 5}), {"A"}, std::size_t{4}});
    try {
        unipotent_dim_total(m);
        FAIL("expected UNSTABLE_TRUNCATION");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnstableTruncation);
        CHECK(std::string(e.what()).find("cusp35") != std::string::npos);
    }
}

TEST_CASE("decompositions") {
    CHECK(picard_decompose(build_gamma_alpha(3)) == PicardDecomposition{0, 0, 15});
    CurveModel smooth;
    smooth.components.push_back({"E", 4});
    CHECK(picard_decompose(smooth) == PicardDecomposition{4, 0, 0});
    const auto d33 = picard_decompose(build_dkl(1, 1, 3, 3));
    CHECK(d33 == PicardDecomposition{0, 4, 6});
    CHECK(d33.total() == 10);
    CHECK(picard_decompose(nodal_cubic()) == PicardDecomposition{0, 1, 0});
}

TEST_CASE("declared shortcuts") {
    CurveModel m;
    m.components = {{"A", 1}, {"B", 2}};
    m.points.push_back({"t", OrdinaryShortcut{3}, {"A", "B", "B"}, std::nullopt});
    m.points.push_back({"g", GeneralShortcut{1, 5}, {"A"}, std::nullopt});
    // torus: (3 - 1) - 2 + 1 = 1
    CHECK(picard_decompose(m) == PicardDecomposition{3, 1, 5});
}

TEST_CASE("builders") {
    CHECK(picard_decompose(build_gamma_alpha(1)).total() == 1);
    CHECK(picard_decompose(build_gamma_alpha(2)).total() == 6);
    CHECK(picard_decompose(build_gamma_alpha(5)).total() == 45);
    CHECK(picard_decompose(build_dkl(1, 1, 2, 2)) == PicardDecomposition{0, 1, 4});
    CHECK(picard_decompose(build_dkl(1, 1, 1, 1)) == PicardDecomposition{0, 0, 2});
    CHECK(picard_decompose(build_dkl(2, 1, 3, 3)) == PicardDecomposition{0, 4, 21});
    const auto g = build_gamma_alpha(2);
    CHECK(g.components.size() == 1);
    CHECK(g.points.size() == 2);
    const auto d = build_dkl(1, 2, 2, 3);
    CHECK(d.components.size() == 5);
    CHECK(std::count_if(d.points.begin(), d.points.end(), [](const CurvePoint& p) {
              return std::holds_alternative<OrdinaryShortcut>(p.spec);
          }) == 6);
    CHECK_THROWS_AS(build_gamma_alpha(0), Error);
    CHECK_THROWS_AS(build_dkl(1, 1, 0, 2), Error);
}

TEST_CASE("D^{k,l} closed forms") {
    for (unsigned alpha = 1; alpha <= 3; ++alpha) {
        for (unsigned beta = 1; beta <= 3; ++beta) {
            for (unsigned k = 1; k <= 5; ++k) {
                for (unsigned l = 1; l <= 5; ++l) {
                    const auto model = build_dkl(alpha, beta, k, l);
                    CHECK(torus_rank(model) == (k - 1) * (l - 1));
                    CHECK(unipotent_dim_total(model) == k * gdim(beta) + l * gdim(alpha));
                }
            }
        }
    }
}

TEST_CASE("Gamma_alpha totals through both local paths") {
    for (unsigned alpha = 1; alpha <= 6; ++alpha) {
        CAPTURE(alpha);
        CHECK(picard_decompose(build_gamma_alpha(alpha)).total() == gdim(alpha));
        CHECK(picard_decompose(build_gamma_alpha(alpha), DimensionMethod::Jets).total() == gdim(alpha));
    }
}

TEST_CASE("torus rank ignores labels and point order") {
    std::mt19937_64 rng(1);
    for (unsigned k = 1; k <= 4; ++k) {
        auto model = build_dkl(1, 2, k, 3);
        const auto expected = torus_rank(model);
        std::shuffle(model.points.begin(), model.points.end(), rng);
        std::shuffle(model.components.begin(), model.components.end(), rng);
        for (auto& c : model.components) c.id = "x" + c.id;
        for (auto& p : model.points) {
            for (auto& id : p.incidence) id = "x" + id;
        }
        CHECK(torus_rank(model) == expected);
    }
}

TEST_CASE("total is the sum of the parts") {
    for (unsigned k = 1; k <= 3; ++k) {
        const auto d = picard_decompose(build_dkl(2, 1, k, 2));
        CHECK(d.total() == d.abelian_dim + d.torus_rank + d.unipotent_dim);
    }
}
