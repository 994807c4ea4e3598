#include "ramcalc/galois.hpp"

#include "ramcalc/errors.hpp"

#include <algorithm>

namespace ram {

namespace {

std::optional<int> exponent_from_slope(const PLFun& psi, long p) {
    long k;
    if (!p_power_exponent(psi.initial_slope(), p, k) || k >= 0) return std::nullopt;
    return static_cast<int>(-k);
}

int layer_exponent(long h, long p) {
    long k;
    if (h <= 1 || !p_power_exponent(Rat(h), p, k)) throw DomainError("layer height is not a power of p");
    return static_cast<int>(k);
}

}  // namespace

Report profile_checks(long p, long sw, const PLFun& psi, std::optional<int> r) {
    Report rep;
    rep.add("p prime", is_prime(p), std::to_string(p));
    if (!rep.passed()) return rep;
    bool sw_ok = sw > 0 && sw % p != 0;
    rep.add("sw prime to p", sw_ok, sw_ok ? std::to_string(sw) : sw > 0 ? "p divides sw" : "sw is not positive");
    std::optional<int> from_slope = exponent_from_slope(psi, p);
    bool slope_ok = from_slope && (!r || *r == *from_slope);
    rep.add("initial slope", slope_ok,
            psi.initial_slope().str() + (slope_ok ? "" : " is not p^-r for the given r"));
    if (!rep.passed()) return rep;
    int rr = *from_slope;
    Rat sigma = Rat(sw) / Rat(ipow(p, rr));
    bool domain_ok = psi.domain_end() == std::optional<Rat>(sigma) && psi.value_at_zero().sign() == 0 &&
                     psi(*psi.domain_end()) == sigma;
    rep.add("domain", domain_ok, (domain_ok ? "psi maps [0, " : "psi must map [0, ") + sigma.str() + "] onto itself");
    if (!domain_ok) return rep;
    SymmetryReport sym = verify_symmetry(psi, sigma);
    rep.add("functional equation", sym.passed,
            sym.witness ? "reflection differs at x = " + sym.witness->str() : "");
    for (const auto& c : carayol_jump_checks(psi, p, rr, sw).checks)
        if (!rep.find(c.name)) rep.checks.push_back(c);
    return rep;
}

GaloisProfile::GaloisProfile(long p, long sw, PLFun psi, std::optional<int> r)
    : p_(p), r_(0), sw_(sw), psi_(std::move(psi)) {
    Report rep = profile_checks(p_, sw_, psi_, r);
    for (const auto& c : rep.checks)
        if (!c.passed) throw MalformedProfile(c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    r_ = *exponent_from_slope(psi_, p_);
}

DecompositionReport analyze_profile(const GaloisProfile& g) {
    const Rat pr = g.pr();
    JumpTable jt = g.jumps();
    Rat c = solve_antidiagonal(g.psi(), g.sigma());
    Rat w_c = 1;
    bool c_is_jump = false;
    for (const auto& e : jt.entries)
        if (e.x == c) {
            c_is_jump = true;
            w_c = e.height;
        }
    BigInt dim = 1;
    if (c_is_jump) {
        long k;
        if (!p_power_exponent(w_c, g.p(), k) || k <= 0 || k % 2)
            throw MalformedProfile("height " + w_c.str() + " at c is not an even power of p");
        dim = ipow(g.p(), k / 2);
    }
    std::optional<RamTower> L;
    try {
        L = elementary_resolution(restrict_to(scale(pr, g.psi()), c), g.p());
    } catch (const NotHerbrandShaped& e) {
        throw MalformedProfile(std::string("p^r psi below c is not a Herbrand function: ") + e.what());
    }
    if (Rat(L->degree()) * Rat(dim) != pr) throw MalformedProfile("degree of L times dim_core is not p^r");
    Rat w_L = *wild_exponent(*L).value;
    Rat sw_core = Rat(g.sw()) - w_L * Rat(dim);
    if (sw_core.sign() <= 0) throw MalformedProfile("core Swan exponent " + sw_core.str() + " is not positive");
    std::optional<Rat> core_jump;
    if (dim > 1) {
        core_jump = build_psi(*L)(c);
        if (sw_core / (Rat(dim) + 1) != *core_jump)
            throw MalformedProfile("core jump " + core_jump->str() + " differs from sw_core/(1+dim_core)");
    }
    return {jt, c, c_is_jump, w_c, dim, *L, w_L, sw_core, core_jump, dim * dim};
}

const char* name(RowKind k) {
    switch (k) {
    case RowKind::FirstHalf: return "jump (below c)";
    case RowKind::Centre: return "jump (at c)";
    case RowKind::SecondHalf: return "jump (above c)";
    default: return "between jumps";
    }
}

const char* restriction_shape(RowKind k) {
    switch (k) {
    case RowKind::FirstHalf: return "multiplicity-free sum of irreducibles";
    case RowKind::SecondHalf: return "sum of characters";
    default: return "-";
    }
}

RestrictionTable restriction_table(const GaloisProfile& g) {
    PLFun sigma_fn = decomposition_function(g.psi(), g.p(), g.r(), g.sw());
    const Rat scale2 = g.pr() * g.pr();
    Rat c = solve_antidiagonal(g.psi(), g.sigma());
    JumpTable jt = jump_table(sigma_fn, g.sigma());
    std::vector<Rat> pts{0};
    for (const auto& e : jt.entries) pts.push_back(e.x);
    pts.push_back(g.sigma());
    RestrictionTable t{{}, 1};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (i > 0) {
            const Rat& x = pts[i];
            Rat d = scale2 * sigma_fn.slope_left(x), dp = scale2 * sigma_fn.slope_right(x);
            RowKind k = x < c ? RowKind::FirstHalf : x == c ? RowKind::Centre : RowKind::SecondHalf;
            t.rows.push_back({x, k, d, dp, dp / d});
            t.height_product *= dp / d;
        }
        Rat mid = (pts[i] + pts[i + 1]) / 2;
        Rat d = scale2 * sigma_fn.slope_right(mid);
        t.rows.push_back({mid, RowKind::Between, d, d, 1});
    }
    return t;
}

Descent descend_once(const GaloisProfile& g) {
    JumpTable jt = g.jumps();
    if (jt.size() < 2) throw TooFewJumps("descent needs at least two jumps, found " + std::to_string(jt.size()));
    const Rat a = jt.entries.front().x;
    if (!a.is_integer())
        throw NotIntegralFirstJump("first jump " + a.str() + " is not an integer; tame-lift by " +
                                   a.den().get_str() + " first");
    const Rat& hr = jt.entries.front().height;
    long s;
    if (!p_power_exponent(hr, g.p(), s) || s < 1 || s > g.r())
        throw MalformedProfile("first jump height " + hr.str() + " is not p^s with 1 <= s <= r");
    const long h = hr.to_long();
    RamTower E1(g.p(), {{a, static_cast<int>(s)}});
    PLFun psiE = build_psi(E1);
    const Rat pr = g.pr();
    const Rat sw_inner = Rat(g.sw()) - Rat(h - 1) * a * pr / Rat(h);
    const int r1 = g.r() - static_cast<int>(s);
    DescentLayer layer{a, h};

    std::vector<Break> br;
    const Rat pr1 = Rat(ipow(g.p(), r1));
    Rat slope = 1 / pr1;
    for (std::size_t i = 1; i + 1 < jt.size(); ++i) {
        slope *= jt.entries[i].height;
        br.push_back({psiE(jt.entries[i].x), slope});
    }
    if (r1 == 0) {
        if (!br.empty()) throw MalformedProfile("jumps remain after descending to a character");
        return {layer, Character{sw_inner}};
    }
    if (!sw_inner.is_integer() || sw_inner.sign() <= 0)
        throw MalformedProfile("inner Swan exponent " + sw_inner.str() + " is not a positive integer");
    const Rat sigma1 = sw_inner / pr1;
    if (!br.empty() && br.back().x >= sigma1)
        throw MalformedProfile("inner jump beyond the inner slope " + sigma1.str());
    PLFun psi1(0, 1 / pr1, br, sigma1);
    if (psi1(sigma1) != sigma1)
        throw MalformedProfile("inner endpoint does not close: psi(" + sigma1.str() + ") = " + psi1(sigma1).str());
    return {layer, GaloisProfile(g.p(), sw_inner.to_long(), psi1, r1)};
}

GaloisProfile ascend_once(const DescentLayer& layer, const InnerRep& inner, int r) {
    const GaloisProfile* ip = std::get_if<GaloisProfile>(&inner);
    const long p = ip ? ip->p() : 0;
    long base_p = p;
    if (!ip) {
        for (long q = 2; q <= layer.h; ++q)
            if (layer.h % q == 0) {
                base_p = q;
                break;
            }
    }
    int s;
    try {
        s = layer_exponent(layer.h, base_p);
    } catch (const DomainError& e) {
        throw InconsistentLayer(bare_message(e));
    }
    const int r1 = r - s;
    if (r1 < 0) throw InconsistentLayer("layer height exceeds p^r");
    if (ip && ip->r() != r1) throw InconsistentLayer("inner dimension times layer height is not p^r");
    if (!ip && r1 != 0) throw InconsistentLayer("a character inner part needs layer height p^r");
    if (!layer.a.is_integer() || layer.a.sign() <= 0) throw InconsistentLayer("layer jump must be a positive integer");

    Rat sw_inner = ip ? Rat(ip->sw()) : std::get<Character>(inner).sw;
    PLFun psi_inner = ip ? ip->psi() : PLFun::identity(sw_inner);
    if (sw_inner.sign() <= 0) throw InconsistentLayer("inner Swan exponent must be positive");
    if (ip && ip->jumps().entries.front().x <= layer.a)
        throw InconsistentLayer("inner jumps must lie above the layer jump");

    PLFun psiE = build_psi(RamTower(base_p, {{layer.a, s}}));
    const Rat pr = Rat(ipow(base_p, r));
    const Rat h = Rat(layer.h);
    const Rat sigma = (sw_inner + (h - 1) * layer.a * pr / h) / pr;
    const Rat sw = sigma * pr;
    if (!sw.is_integer()) throw InconsistentLayer("reconstructed Swan exponent " + sw.str() + " is not an integer");

    GaloisProfile out = [&] {
        try {
            PLFun lower = restrict_to(psiE, preimage(psiE, *psi_inner.domain_end()));
            PLFun f = scale(1 / h, compose(psi_inner, lower));
            return GaloisProfile(base_p, sw.to_long(), symmetric_completion(f, sigma), r);
        } catch (const MalformedProfile& e) {
            throw InconsistentLayer(std::string("reconstruction is not a profile: ") + e.what());
        } catch (const DomainError& e) {
            throw InconsistentLayer(std::string("reconstruction failed: ") + e.what());
        }
    }();
    Descent back = descend_once(out);
    if (!(back.layer == layer) || !(back.inner == inner))
        throw InconsistentLayer("reconstruction does not descend back to the given data");
    return out;
}

HSingularReport h_singular_check(const GaloisProfile& g) {
    JumpTable jt = g.jumps();
    if (jt.size() != 1) throw NotSingleJump("profile has " + std::to_string(jt.size()) + " jumps");
    const Rat pr = g.pr();
    const Rat a = jt.entries.front().x;
    HSingularReport rep{a, (pr * pr - 1) * a, (pr * pr).num(), {}};
    Rat expected = Rat(g.sw()) / (1 + pr);
    rep.checks.add("jump position", a == expected, "a = " + a.str() + ", sw/(1+p^r) = " + expected.str());
    rep.checks.add("endomorphism Swan exponent", rep.sw_endo == (pr - 1) * Rat(g.sw()),
                   "(p^2r - 1) a = " + rep.sw_endo.str());
    rep.checks.add("height", jt.entries.front().height == pr * pr, jt.entries.front().height.str());
    return rep;
}

std::vector<TameIntegrality> tame_integrality(const JumpTable& jumps) {
    std::vector<TameIntegrality> out;
    for (const auto& e : jumps.entries) out.push_back({e.x, e.x.den()});
    return out;
}

GaloisProfile tame_lift_profile(const GaloisProfile& g, long e) {
    if (e < 1) throw DomainError("lift degree must be positive");
    if (e % g.p() == 0) throw TameConflict("p divides e = " + std::to_string(e));
    return GaloisProfile(g.p(), g.sw() * e, rescale(g.psi(), Rat(1, e)), g.r());
}

}  // namespace ram
