#include "ramcalc/biherbrand.hpp"

#include "ramcalc/errors.hpp"

#include <algorithm>

namespace ram {

BiSpec::BiSpec(RamTower tower, long m) : tower_(std::move(tower)), m_(m) {
    if (m_ < 1) throw ValidationError("m must be a positive integer");
    if (m_ % tower_.p() == 0) throw ValidationError("p divides m");
    if (!tower_.separable()) throw ValidationError("tower must be separable");
    if (tower_.r() < 1) throw ValidationError("tower must have degree > 1");
}

BiBundle bi_components(const BiSpec& s) {
    const Rat sigma = s.sigma();
    PLFun full = scale(1 / s.pr(), build_psi(s.tower()));
    PLFun times = restrict_to(full, sigma);
    PLFun plus = reflect(full, sigma);
    PLFun bi = pointwise_max(times, plus);
    Rat c = solve_antidiagonal(times, sigma);
    std::optional<Rat> jbar;
    const Rat j = *j_infinity(s.tower()).value;
    if (j < sigma) jbar = sigma - times(j);
    return {times, plus, bi, c, jbar};
}

Rat crossing_point(const BiSpec& s) {
    return solve_antidiagonal(scale(1 / s.pr(), build_psi(s.tower())), s.sigma());
}

PLFun structure_function(long p, int r, long m) {
    if (r < 1) throw DomainError("r must be at least 1");
    if (m < 1 || m % p == 0) throw DomainError("m must be positive and prime to p");
    Rat pr = Rat(ipow(p, r));
    Rat sigma = Rat(m) / pr;
    Rat phi0 = Rat(m) * (pr - 1) / (pr * pr);
    return PLFun(phi0, 1 / pr, {{sigma, 1}});
}

PLFun decomposition_function(const PLFun& psi, long p, int r, long m) {
    PLFun phi = structure_function(p, r, m);
    Rat sigma = Rat(m) / Rat(ipow(p, r));
    if (psi.domain_end() != std::optional<Rat>(sigma) || psi(sigma) != sigma)
        throw DomainError("Herbrand function must map [0, " + sigma.str() + "] onto itself");
    return compose(phi, psi);
}

SymmetryReport verify_symmetry(const PLFun& f, const Rat& sigma) {
    if (f.domain_end() != std::optional<Rat>(sigma) || f.value_at_zero().sign() != 0)
        return {false, Rat(0)};
    if (f(sigma) != sigma) return {false, sigma};
    PLFun g = reflect(f, sigma);
    if (g == f) return {true, std::nullopt};
    std::vector<Rat> xs{0, sigma};
    for (const auto& b : f.breaks()) xs.push_back(b.x);
    for (const auto& b : g.breaks()) xs.push_back(b.x);
    std::sort(xs.begin(), xs.end());
    for (const auto& x : xs)
        if (f(x) != g(x)) return {false, x};
    return {false, std::nullopt};
}

Report carayol_jump_checks(const PLFun& f, long p, int r, long m) {
    Report rep;
    Rat pr = Rat(ipow(p, r));
    Rat sigma = Rat(m) / pr;
    bool domain_ok = f.domain_end() == std::optional<Rat>(sigma) && f.value_at_zero().sign() == 0 &&
                     f(*f.domain_end()) == sigma;
    rep.add("domain", domain_ok, "f(0) = 0 and f(" + sigma.str() + ") = " + sigma.str());
    if (!domain_ok) return rep;

    rep.add("initial slope", f.initial_slope() == 1 / pr, f.initial_slope().str());
    rep.add("final slope", f.final_slope() == pr, f.final_slope().str());
    bool p_powers = true;
    long k;
    p_powers = p_power_exponent(f.initial_slope(), p, k);
    for (const auto& b : f.breaks()) p_powers = p_powers && p_power_exponent(b.slope_after, p, k);
    rep.add("slope law", p_powers, "every slope a power of p");
    rep.add("convexity", is_convex(f));

    JumpTable jt = jump_table(f, sigma);
    if (jt.size() == 0) {
        rep.add("jump relation", false, "no jumps");
        return rep;
    }
    const Rat& a = jt.entries.front().x;
    const Rat& z = jt.entries.back().x;
    Rat expected = sigma - a / pr;
    rep.add("jump relation", z == expected && f(a) == a / pr,
            "z = " + z.str() + ", sigma - a/p^r = " + expected.str());

    Rat c = solve_antidiagonal(f, sigma);
    bool c_is_jump = std::any_of(jt.entries.begin(), jt.entries.end(),
                                 [&](const JumpEntry& e) { return e.x == c; });
    bool odd = jt.size() % 2 == 1;
    bool parity = c_is_jump == odd && (!odd || jt.entries[jt.size() / 2].x == c);
    rep.add("middle jump", parity,
            "c = " + c.str() + (c_is_jump ? " is" : " is not") + " a jump, " + std::to_string(jt.size()) +
                " jumps");

    Rat prod = 1;
    for (const auto& e : jt.entries) prod *= e.height;
    rep.add("height product", prod == pr * pr, prod.str());
    return rep;
}

namespace {

bool half_integral(const Rat& x) { return !x.is_integer() && (x * 2).is_integer(); }

ScenarioBranch make_branch(long a, const Rat& b, long m, const Rat& c) {
    Rat z = Rat(m - a, 4);
    BiSpec spec(RamTower(2, {{Rat(a), 1}, {b, 1}}), m);
    return {m, c, z, {Rat(a), c, z}, half_integral(z), half_integral(c * 3),
            crossing_point(spec) == c};
}

template <class CFormula>
std::optional<ScenarioBranch> least_m(long a, const Rat& b, CFormula formula) {
    for (long m = 1; Rat(m) < b * 6 + Rat(2 * a); m += 2) {
        if (((m - 2 * a) % 3 + 3) % 3 == 0) continue;
        if (((m - a - 2) % 4 + 4) % 4 != 0) continue;
        Rat c = formula(m);
        if (c > Rat(a) && c < b) return make_branch(a, b, m, c);
    }
    return std::nullopt;
}

}  // namespace

Scenario97Report scenario_97(long a, const Rat& b) {
    if (a < 1 || a % 2 == 0) throw DomainError("a must be an odd positive integer");
    if (b <= Rat(a)) throw DomainError("b must exceed a");
    auto defining = [a](long m) { return Rat(m + a, 6); };
    auto printed = [a](long m) { return Rat(m - 2 * a, 6); };
    Scenario97Report rep{a, b, least_m(a, b, defining), least_m(a, b, printed), std::nullopt};
    if (!rep.defining_equation && !rep.printed_formula)
        throw NoAdmissibleM("no m with " + std::to_string(a) + " < c < " + b.str() + " under either reading");
    if (rep.printed_formula) {
        long m = rep.printed_formula->m;
        rep.defining_equation_at_printed_m = make_branch(a, b, m, defining(m));
    }
    return rep;
}

Report bi_laws(const BiSpec& s) {
    Report rep;
    BiBundle b = bi_components(s);
    const Rat sigma = s.sigma(), pr = s.pr();
    SymmetryReport sym = verify_symmetry(b.bi, sigma);
    rep.add("functional equation", sym.passed, sym.witness ? "differs at x = " + sym.witness->str() : "");
    rep.append(carayol_jump_checks(b.bi, s.p(), s.r(), s.m()));
    rep.add("crossing point", b.c + b.psi_times(b.c) == sigma && b.c + b.psi_plus(b.c) == sigma,
            "c = " + b.c.str());

    const Rat j = *j_infinity(s.tower()).value;
    const Rat w = *wild_exponent(s.tower()).value;
    JumpTable jt = jump_table(b.bi, sigma);
    bool even = jt.size() % 2 == 0;
    rep.add("parity law", even == (j < b.c), std::to_string(jt.size()) + " jumps, j_inf = " + j.str());
    if (even && b.jbar_infinity) {
        bool middle = b.bi.slope_right(j) == 1 && b.bi(j) == j - w / pr &&
                      b.bi(*b.jbar_infinity) == *b.jbar_infinity - w / pr;
        rep.add("middle piece x - w/p^r", middle);
    } else if (!even) {
        bool no_unit = b.bi.initial_slope() != 1;
        for (const auto& br : b.bi.breaks()) no_unit = no_unit && br.slope_after != 1;
        rep.add("no unit slope in the odd case", no_unit);
    }
    bool below = true;
    for (const auto& v : b.bi.vertices())
        if (v.x.sign() > 0 && v.x < sigma) below = below && v.y.sign() > 0 && v.y < v.x;
    rep.add("0 < bi(x) < x inside", below);
    if (w * (pr + 1) >= Rat(s.m()) * (pr - 1)) rep.add("large wild exponent forces the odd case", !even);

    PLFun sig = decomposition_function(b.bi, s.p(), s.r(), s.m());
    rep.add("structure inversion", compose(invert(structure_function(s.p(), s.r(), s.m())), sig) == b.bi);
    return rep;
}

}  // namespace ram
