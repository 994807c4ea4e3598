#include "support.hpp"

#include "ramcalc/biherbrand.hpp"
#include "ramcalc/carayol.hpp"
#include "ramcalc/errors.hpp"

#include <doctest.h>

using namespace ram;
using support::R;

namespace {

BiSpec spec(long p, std::vector<Layer> layers, long m) { return BiSpec(RamTower(p, std::move(layers)), m); }

std::vector<Rat> jump_xs(const PLFun& f, const Rat& sigma) {
    std::vector<Rat> xs;
    for (const auto& e : jump_table(f, sigma).entries) xs.push_back(e.x);
    return xs;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec(2, {{Rat(1), 1}}, 8), ValidationError);
    CHECK_THROWS_AS(spec(2, {}, 7), ValidationError);
    CHECK_THROWS_AS(BiSpec(RamTower(2, {{Rat(1), 1}}, 1), 7), ValidationError);
    CHECK(spec(2, {{Rat(1), 1}}, 7).sigma() == R("7/2"));
}

TEST_CASE("bi components") {
    BiBundle one = bi_components(spec(2, {{Rat(3), 1}}, 7));
    CHECK(one.bi == PLFun(0, Rat(1, 2), {{R("7/3"), 2}}, R("7/2")));
    CHECK(one.c == R("7/3"));
    CHECK(one.jbar_infinity == std::optional<Rat>(R("2")));

    BiSpec s2 = spec(2, {{Rat(1), 1}}, 7);
    BiBundle two = bi_components(s2);
    CHECK(jump_xs(two.bi, s2.sigma()) == std::vector<Rat>{1, 3});
    for (const auto& x : support::sample_points(Rat(2), 8)) CHECK(two.bi(1 + x) == 1 + x - Rat(1, 2));

    BiSpec s3 = spec(2, {{Rat(1), 1}, {Rat(5), 1}}, 17);
    BiBundle three = bi_components(s3);
    JumpTable jt = jump_table(three.bi, s3.sigma());
    REQUIRE(jt.size() == 3);
    CHECK(jt.entries[0].x == 1);
    CHECK(jt.entries[1].x == 3);
    CHECK(jt.entries[2].x == 4);
    CHECK(jt.entries[0].height == 2);
    CHECK(jt.entries[1].height == 4);
    CHECK(jt.entries[2].height == 2);
    CHECK(three.c == 3);
    CHECK(three.bi == pointwise_max(three.psi_times, three.psi_plus));
}

TEST_CASE("plus component is the reflection of the times component") {
    BiSpec s = spec(2, {{Rat(1), 1}, {Rat(3), 1}}, 21);
    BiBundle b = bi_components(s);
    PLFun full = scale(1 / s.pr(), build_psi(s.tower()));
    CHECK(reflect(full, s.sigma()) == b.psi_plus);
    // closed form sigma - phi(p^r (sigma - x))
    for (const auto& x : support::sample_points(s.sigma(), 21))
        CHECK(b.psi_plus(x) == s.sigma() - support::oracle_phi(s.tower(), s.pr() * (s.sigma() - x)));
}

TEST_CASE("crossing point") {
    BiSpec single = spec(2, {{Rat(3), 1}}, 7);
    CHECK(crossing_point(single) == single.pr() * single.sigma() / (1 + single.pr()));
    BiSpec s = spec(2, {{Rat(1), 1}}, 7);
    CHECK(crossing_point(s) == 2);
    CHECK(crossing_point(s) == Rat(7 + 1) / (2 * s.pr()));
    CHECK(crossing_point(spec(2, {{Rat(5), 2}}, 25)) == 5);
}

TEST_CASE("structure function") {
    CHECK(structure_function(2, 1, 1).value_at_zero() == Rat(1, 4));
    PLFun phi = structure_function(2, 1, 7);
    CHECK(phi.value_at_zero() == R("7/4"));
    CHECK(phi(R("7/2")) == R("7/2"));
    CHECK(phi(10) == 10);
    CHECK(structure_function(3, 1, 7).value_at_zero() == R("14/9"));
    CHECK_THROWS_AS(structure_function(2, 1, 4), DomainError);
    CHECK_THROWS_AS(structure_function(2, 0, 1), DomainError);
}

TEST_CASE("decomposition function") {
    PLFun psi(0, Rat(1, 2), {{R("7/3"), 2}}, R("7/2"));
    PLFun sig = decomposition_function(psi, 2, 1, 7);
    CHECK(sig.value_at_zero() == R("7/4"));
    CHECK(sig == PLFun(R("7/4"), Rat(1, 4), {{R("7/3"), 1}}, R("7/2")));
    CHECK_THROWS_AS(decomposition_function(PLFun::identity(R("7")), 2, 0, 7), DomainError);
    PLFun psi3 = bi_components(spec(2, {{Rat(1), 1}, {Rat(5), 1}}, 17)).bi;
    PLFun sig3 = decomposition_function(psi3, 2, 2, 17);
    CHECK(sig3.initial_slope() == Rat(1, 16));
    REQUIRE(sig3.breaks().size() == 3);
    CHECK(sig3.breaks()[0].slope_after == Rat(1, 8));
    CHECK(sig3.breaks()[1].slope_after == Rat(1, 2));
    CHECK(sig3.breaks()[2].slope_after == 1);
    CHECK_THROWS_AS(decomposition_function(PLFun(0, Rat(1, 2), {}, R("7/2")), 2, 1, 7), DomainError);
}

TEST_CASE("symmetry verifier") {
    CHECK(verify_symmetry(bi_components(spec(2, {{Rat(1), 1}}, 7)).bi, R("7/2")).passed);
    CHECK(verify_symmetry(PLFun::identity(Rat(3)), 3).passed);
    SymmetryReport bad = verify_symmetry(PLFun(0, Rat(1, 2), {{Rat(2), 1}}, Rat(3)), 3);
    CHECK_FALSE(bad.passed);
    CHECK(bad.witness.has_value());
    // symmetric endpoints, asymmetric middle
    PLFun lopsided(0, Rat(1, 3), {{Rat(1), Rat(4, 3)}}, Rat(3));
    REQUIRE(lopsided(3) == 3);
    SymmetryReport off = verify_symmetry(lopsided, 3);
    CHECK_FALSE(off.passed);
    REQUIRE(off.witness.has_value());
    Rat x = *off.witness;
    CHECK(3 - x != lopsided(3 - lopsided(x)));
}

TEST_CASE("Carayol jump checks") {
    PLFun a(0, Rat(1, 4), {{R("13/3"), 1}, {R("31/6"), 4}}, R("25/4"));
    Report ok = carayol_jump_checks(a, 2, 2, 25);
    CHECK(ok.passed());
    CHECK((R("25") - R("13/3")) / 4 == R("31/6"));
    CHECK(carayol_jump_checks(PLFun(0, Rat(1, 2), {{R("7/3"), 2}}, R("7/2")), 2, 1, 7).passed());
    PLFun moved(0, Rat(1, 4), {{R("13/3"), 1}, {R("31/6") + Rat(1, 1000000), 4}}, R("25/4"));
    CHECK_FALSE(carayol_jump_checks(moved, 2, 2, 25).passed());
}

TEST_CASE("scenario with both readings") {
    Scenario97Report rep = scenario_97(1, 6);
    REQUIRE(rep.printed_formula);
    CHECK(rep.printed_formula->m == 15);
    CHECK(rep.printed_formula->c == R("13/6"));
    CHECK(rep.printed_formula->z == R("7/2"));
    CHECK(rep.printed_formula->z_half_integral);
    CHECK(rep.printed_formula->three_c_half_integral);
    CHECK(rep.printed_formula->diagnostics_pass());
    REQUIRE(rep.defining_equation);
    CHECK(rep.defining_equation->m == 7);
    CHECK(rep.defining_equation->c == R("4/3"));
    CHECK_FALSE(rep.defining_equation->diagnostics_pass());
    CHECK(rep.defining_equation->matches_crossing);
    REQUIRE(rep.defining_equation_at_printed_m);
    CHECK(rep.defining_equation_at_printed_m->c == R("8/3"));
    CHECK((rep.defining_equation_at_printed_m->c * 3).is_integer());
    // any admissible m gives a half-integral z
    for (long m = 3; m < 200; m += 4) CHECK(!(Rat(m - 1, 4)).is_integer());

    Scenario97Report narrow = scenario_97(1, 2);
    CHECK_FALSE(narrow.printed_formula);
    CHECK_THROWS_AS(scenario_97(1, R("5/4")), NoAdmissibleM);
    CHECK_THROWS_AS(scenario_97(2, 6), DomainError);
}

TEST_CASE("property: bi-Herbrand laws on random specs") {
    support::Gen g(31);
    const std::vector<long> primes{2, 3, 5};
    for (int it = 0; it < 150; ++it) {
        long p = g.pick(primes);
        int r = static_cast<int>(g.uniform(1, 3));
        RamTower t = g.tower(p, r);
        long m = g.m_prime_to(p, 1, static_cast<long>(support::pr_of(t).num().get_si()) * 30);
        BiSpec s(t, m);
        INFO("p=", p, " m=", m, " tower=", describe(build_psi(t)));
        BiBundle b = bi_components(s);
        Report rep = bi_laws(s);
        for (const auto& c : rep.checks) CHECK_MESSAGE(c.passed, c.name, " ", c.detail);
        CHECK(b.c == support::oracle_crossing(t, s.sigma()));
        for (const auto& x : support::sample_points(s.sigma(), 19)) CHECK(b.bi(x) == support::oracle_bi(t, s.sigma(), x));
        for (const auto& v : b.bi.vertices()) CHECK(v.y == support::oracle_bi(t, s.sigma(), v.x));
    }
}

TEST_CASE("property: small largest jump agrees with the conformal datum") {
    support::Gen g(32);
    int seen = 0;
    for (int it = 0; it < 300 && seen < 60; ++it) {
        long p = g.coin() ? 2 : 3;
        int r = static_cast<int>(g.uniform(1, 3));
        RamTower t = g.integral_tower(p, r, 3);
        Rat pr = support::pr_of(t);
        Rat j = *j_infinity(t).value;
        long m = g.m_prime_to(p, 1, pr.num().get_si() * 40);
        Rat sigma = Rat(m) / pr;
        if (!(j < sigma / 2)) continue;
        ++seen;
        BiSpec s(t, m);
        BiBundle b = bi_components(s);
        for (const auto& x : support::sample_points(sigma / 2, 10)) CHECK(b.bi(x) == support::oracle_psi(t, x) / pr);
        long w = wild_exponent(t).value->num().get_si();
        CarayolDatum d(t, m, std::max(0L, m - w));
        CHECK(herbrand_of_datum(d) == b.bi);
    }
    CHECK(seen > 20);
}
