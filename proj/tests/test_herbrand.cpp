#include "support.hpp"

#include "ramcalc/errors.hpp"
#include "ramcalc/herbrand.hpp"

#include <doctest.h>

using namespace ram;
using support::R;

namespace {

RamTower T(long p, std::vector<Layer> layers, int insep = 0) { return RamTower(p, std::move(layers), insep); }

}  // namespace

TEST_CASE("tower validation") {
    CHECK_THROWS_AS(T(4, {{Rat(1), 1}}), ValidationError);
    CHECK_THROWS_AS(T(2, {{Rat(3), 1}, {Rat(1), 1}}), ValidationError);
    CHECK_THROWS_AS(T(2, {{Rat(0), 1}}), ValidationError);
    CHECK_THROWS_AS(T(2, {{Rat(1), 0}}), ValidationError);
    CHECK(T(3, {{Rat(1), 1}, {Rat(2), 2}}, 1).degree() == 81);
}

TEST_CASE("build_psi") {
    CHECK(build_psi(T(2, {{Rat(1), 1}})) == PLFun(0, 1, {{Rat(1), 2}}));
    PLFun psi = build_psi(T(2, {{Rat(1), 1}, {Rat(3), 1}}));
    CHECK(psi == PLFun(0, 1, {{Rat(1), 2}, {Rat(3), 4}}));
    CHECK(psi(4) == 9);
    CHECK(build_psi(T(2, {}, 1)) == PLFun::identity());
}

TEST_CASE("wild exponent and largest jump") {
    CHECK(*wild_exponent(T(2, {{Rat(1), 1}})).value == 1);
    CHECK(*wild_exponent(T(2, {{Rat(1), 1}, {Rat(3), 1}})).value == 7);
    CHECK(*wild_exponent(T(2, {{Rat(5), 2}})).value == 15);
    CHECK(wild_exponent(T(2, {}, 1)).infinite());
    CHECK(*wild_exponent(T(2, {})).value == 0);
    CHECK(*j_infinity(T(2, {{Rat(1), 1}, {Rat(3), 1}})).value == 3);
    CHECK(*j_infinity(T(2, {{Rat(5), 2}})).value == 5);
    CHECK(j_infinity(T(2, {}, 1)).infinite());
    CHECK_THROWS_AS(j_infinity(T(2, {})), EmptyTower);
}

TEST_CASE("elementary resolution") {
    CHECK(elementary_resolution(PLFun(0, 1, {{Rat(1), 2}, {Rat(3), 4}}), 2) == T(2, {{Rat(1), 1}, {Rat(3), 1}}));
    CHECK(elementary_resolution(PLFun::identity(), 2) == T(2, {}));
    CHECK(elementary_resolution(PLFun(0, 1, {{R("13/3"), 4}}), 2) == T(2, {{R("13/3"), 2}}));
    CHECK_THROWS_AS(elementary_resolution(PLFun(0, 1, {{Rat(1), 3}}), 2), NotHerbrandShaped);
    CHECK_THROWS_AS(elementary_resolution(PLFun(1, 1, {{Rat(1), 2}}), 2), NotHerbrandShaped);
    CHECK_THROWS_AS(elementary_resolution(PLFun(0, 1, {{Rat(1), 4}, {Rat(2), 2}}), 2), NotHerbrandShaped);
}

TEST_CASE("tame lift") {
    RamTower lifted = tame_lift_tower(T(2, {{Rat(1), 1}}), 3);
    CHECK(lifted == T(2, {{Rat(3), 1}}));
    CHECK(build_psi(lifted)(6) == 9);
    RamTower t = T(2, {{Rat(1), 1}, {Rat(3), 1}});
    CHECK(tame_lift_tower(t, 1) == t);
    CHECK(tame_lift_tower(T(2, {{R("13/3"), 2}}), 3) == T(2, {{Rat(13), 2}}));
    CHECK_THROWS_AS(tame_lift_tower(t, 4), TameConflict);
}

TEST_CASE("norm and induced Swan exponents") {
    RamTower t = T(2, {{Rat(1), 1}, {Rat(3), 1}});
    CHECK(norm_swan(t, 2).value == 3);
    CHECK(norm_swan(t, 2).exact);
    CHECK(norm_swan(t, 3).value == 5);
    CHECK_FALSE(norm_swan(t, 3).exact);
    NormSwan id = norm_swan(T(2, {}), 7);
    CHECK(id.value == 7);
    CHECK(id.exact);
    CHECK(swan_induced(T(2, {{R("13/3"), 2}}), 12, 1, 1) == 25);
    CHECK(swan_induced(T(2, {}), 9, 1, 1) == 9);
    CHECK(swan_induced(T(2, {{Rat(1), 1}}), 0, 1, 1) == 1);
    CHECK_THROWS_AS(swan_induced(T(2, {}, 1), 0, 1, 1), InfiniteWildExponent);
}

TEST_CASE("absolute wildness and the characteristic-p congruence") {
    CHECK(is_absolutely_wild(T(2, {{Rat(1), 1}})));
    CHECK_FALSE(is_absolutely_wild(T(2, {{R("13/3"), 2}})));
    CHECK_NOTHROW(check_char_p_congruence(T(2, {{Rat(1), 1}})));
    CHECK_NOTHROW(check_char_p_congruence(T(2, {{Rat(5), 2}})));
    CHECK_THROWS_AS(check_char_p_congruence(T(2, {{Rat(2), 1}})), ValidationError);
    CHECK_NOTHROW(check_char_p_congruence(T(3, {{Rat(2), 1}})));
    CHECK_THROWS_AS(check_char_p_congruence(T(3, {{Rat(3), 1}})), ValidationError);
}

TEST_CASE("split towers compose back") {
    RamTower t = T(2, {{Rat(1), 1}, {Rat(3), 1}});
    auto [low, high] = split_tower(t, 1);
    CHECK(low == T(2, {{Rat(1), 1}}));
    CHECK(high == T(2, {{Rat(5), 1}}));
    CHECK(compose(build_psi(high), build_psi(low)) == build_psi(t));
    CHECK(tower_laws(t).passed());
}

TEST_CASE("property: transitivity, bounds, round trip, lift") {
    support::Gen g(21);
    const std::vector<long> primes{2, 3, 5};
    for (int it = 0; it < 200; ++it) {
        long p = g.pick(primes);
        int r = static_cast<int>(g.uniform(1, 4));
        RamTower t = g.tower(p, r);
        PLFun psi = build_psi(t);
        for (const auto& x : support::sample_points(Rat(40), 13)) CHECK(psi(x) == support::oracle_psi(t, x));
        Rat w = *wild_exponent(t).value;
        CHECK(w == support::oracle_wild(t));
        CHECK(elementary_resolution(psi, p) == t);
        Report rep = tower_laws(t);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name);

        long e = g.uniform(1, 12);
        if (e % p == 0) continue;
        RamTower lifted = tame_lift_tower(t, e);
        JumpTable a = jump_table(build_psi(t)), b = jump_table(build_psi(lifted));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(b.entries[i].x == a.entries[i].x * Rat(e));
            CHECK(b.entries[i].height == a.entries[i].height);
        }
    }
}
