#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gta/group.hpp"

using namespace gta;

TEST_CASE("make_group basic shapes") {
    CHECK(make_group({4}).order() == 4);
    CHECK(make_group({2, 2}).order() == 4);
    CHECK(make_group({}).order() == 1);
    CHECK_THROWS_AS(make_group({1}), error);
    CHECK_THROWS_AS(make_group({4, 0}), error);
    CHECK_THROWS_AS(make_group({-3}), error);
}

TEST_CASE("canonical enumeration is lexicographic") {
    FiniteAbelianGroup g = make_group({2, 2});
    CHECK(g.element_at(0) == GroupElement{{0, 0}});
    CHECK(g.element_at(1) == GroupElement{{0, 1}});
    CHECK(g.element_at(2) == GroupElement{{1, 0}});
    CHECK(g.element_at(3) == GroupElement{{1, 1}});
    for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
    CHECK_THROWS_AS(g.element_at(4), error);
    CHECK_THROWS_AS(g.element_at(-1), error);
}

TEST_CASE("compose examples") {
    FiniteAbelianGroup z4 = make_group({4});
    CHECK(z4.compose(GroupElement{{1}}, GroupElement{{3}}) == GroupElement{{0}});

    FiniteAbelianGroup klein = make_group({2, 2});
    CHECK(klein.compose(GroupElement{{1, 0}}, GroupElement{{0, 1}}) == GroupElement{{1, 1}});

    for (std::int64_t i = 0; i < klein.order(); ++i)
        CHECK(klein.compose(klein.identity(), klein.element_at(i)) == klein.element_at(i));

    CHECK_THROWS_AS(z4.compose(GroupElement{{1, 0}}, GroupElement{{1}}), error);
}

TEST_CASE("compose is associative and commutative for |G| <= 12") {
    for (auto factors : std::vector<std::vector<std::int64_t>>{
             {}, {2}, {5}, {12}, {2, 2}, {2, 3}, {3, 4}, {2, 2, 3}}) {
        FiniteAbelianGroup g = make_group(factors);
        REQUIRE(g.order() <= 12);
        for (std::int64_t a = 0; a < g.order(); ++a)
            for (std::int64_t b = 0; b < g.order(); ++b) {
                CHECK(g.compose_index(a, b) == g.compose_index(b, a));
                for (std::int64_t c = 0; c < g.order(); ++c)
                    CHECK(g.compose_index(g.compose_index(a, b), c) ==
                          g.compose_index(a, g.compose_index(b, c)));
            }
    }
}

TEST_CASE("invert examples and involution") {
    FiniteAbelianGroup z4 = make_group({4});
    CHECK(z4.invert(GroupElement{{1}}) == GroupElement{{3}});
    CHECK(z4.invert(GroupElement{{0}}) == GroupElement{{0}});
    FiniteAbelianGroup klein = make_group({2, 2});
    CHECK(klein.invert(GroupElement{{1, 1}}) == GroupElement{{1, 1}});

    for (auto factors : std::vector<std::vector<std::int64_t>>{{8}, {2, 4}, {3, 5}}) {
        FiniteAbelianGroup g = make_group(factors);
        for (std::int64_t i = 0; i < g.order(); ++i) {
            GroupElement e = g.element_at(i);
            CHECK(g.invert(g.invert(e)) == e);
            CHECK(g.compose(e, g.invert(e)) == g.identity());
        }
    }
}

TEST_CASE("cyclic_generator") {
    CHECK(*make_group({4}).cyclic_generator() == GroupElement{{1}});
    CHECK_FALSE(make_group({2, 2}).cyclic_generator().has_value());
    CHECK_FALSE(make_group({2, 4}).cyclic_generator().has_value());

    // Z2 x Z3 is cyclic of order 6: the canonical generator must have
    // order 6 under iterated composition.
    FiniteAbelianGroup g = make_group({2, 3});
    auto gen = g.cyclic_generator();
    REQUIRE(gen.has_value());
    GroupElement walk = *gen;
    std::int64_t steps = 1;
    while (!(walk == g.identity())) {
        walk = g.compose(walk, *gen);
        ++steps;
        REQUIRE(steps <= g.order());
    }
    CHECK(steps == 6);
}

TEST_CASE("cyclic_generator generates every element") {
    for (auto factors : std::vector<std::vector<std::int64_t>>{{2}, {7}, {2, 3}, {3, 4}, {12}}) {
        FiniteAbelianGroup g = make_group(factors);
        auto gen = g.cyclic_generator();
        REQUIRE(gen.has_value());
        std::vector<char> hit(g.order(), 0);
        GroupElement walk = g.identity();
        for (std::int64_t k = 0; k < g.order(); ++k) {
            hit[g.index_of(walk)] = 1;
            walk = g.compose(walk, *gen);
        }
        for (char h : hit) CHECK(h == 1);
    }
}

TEST_CASE("element_order matches iteration") {
    FiniteAbelianGroup g = make_group({4, 6});
    for (std::int64_t i = 0; i < g.order(); ++i) {
        GroupElement e = g.element_at(i);
        GroupElement walk = e;
        std::int64_t steps = 1;
        while (!(walk == g.identity())) {
            walk = g.compose(walk, e);
            ++steps;
        }
        CHECK(g.element_order(e) == steps);
    }
}

TEST_CASE("trivial group has a generator of order one") {
    FiniteAbelianGroup g = make_group({});
    auto gen = g.cyclic_generator();
    REQUIRE(gen.has_value());
    CHECK(*gen == g.identity());
}
