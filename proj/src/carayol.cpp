#include "ramcalc/carayol.hpp"

#include "ramcalc/errors.hpp"

#include <algorithm>

namespace ram {

namespace {

long floor_half(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

long mod(long a, long p) { return ((a % p) + p) % p; }

long checked_w(const BiSpec& s) {
    Rat w = *wild_exponent(s.tower()).value;
    if (!w.is_integer()) throw ValidationError("wild exponent is not an integer: " + w.str());
    return w.to_long();
}

}  // namespace

CarayolDatum::CarayolDatum(RamTower tower, long m, long level)
    : spec_(std::move(tower), m), m_(m), level_(level), w_(checked_w(spec_)) {
    if (level_ < 0) throw ValidationError("level is negative");
    if (m_ > 2 * w_) {
        if (level_ != m_ - w_)
            throw ValidationError("level must equal m - w = " + std::to_string(m_ - w_) + " when m > 2w");
    } else if (2 * level_ > m_) {
        throw ValidationError("level exceeds m/2");
    }
}

const char* name(StandardCase c) {
    switch (c) {
    case StandardCase::A: return "A";
    case StandardCase::B: return "B";
    case StandardCase::C: return "C";
    default: return "NotStandard";
    }
}

const char* name(StarClass c) { return c == StarClass::Exceptional ? "Exceptional" : "Ordinary"; }

const char* name(Regime r) {
    switch (r) {
    case Regime::Conformal: return "conformal";
    case Regime::LevelRaised: return "level-raised";
    default: return "level-raised (non-standard datum)";
    }
}

const char* name(LevelOutcomeKind k) {
    switch (k) {
    case LevelOutcomeKind::Exactly: return "Exactly";
    case LevelOutcomeKind::StrictlyBelow: return "StrictlyBelow";
    default: return "AtMost";
    }
}

StandardCase standard_case(long p, long m, long w) {
    if (m > 2 * w) return StandardCase::A;
    if (m <= w) return StandardCase::B;
    if (mod(w, p) == 0) return StandardCase::C;
    return StandardCase::NotStandard;
}

DatumInvariants datum_invariants(const CarayolDatum& d) {
    BiBundle b = bi_components(d.spec());
    long l = std::max(0L, d.m() - d.w());
    long lambda = floor_half(l);
    long lambda_prime = std::max(floor_half(1 + l) - 1, 0L);
    Rat eps = preimage(b.bi, Rat(lambda) / d.pr());
    Rat j = *j_infinity(d.tower()).value;
    bool exceptional = j == b.c && l > 0 && l % 2 == 0;
    return {Rat(d.w()), Rat(l), lambda, lambda_prime, b.c, eps, j,
            standard_case(d.p(), d.m(), d.w()),
            exceptional ? StarClass::Exceptional : StarClass::Ordinary};
}

LevelRange level_range(long p, long m, long w) {
    if (m % p == 0) throw DomainError("p divides m");
    if (m > 2 * w) return {true, m - w, m - w};
    return {false, 0, floor_half(m)};
}

DatumPsi herbrand_of_datum_detailed(const CarayolDatum& d, bool strict) {
    PLFun bi = bi_components(d.spec()).bi;
    long l_alpha = std::max(0L, d.m() - d.w());
    if (d.level() <= l_alpha) return {bi, Regime::Conformal};
    if (mod(d.level() - d.m(), d.p()) == 0)
        throw UncoveredCase("level " + std::to_string(d.level()) + " is congruent to m mod p");
    Regime regime = Regime::LevelRaised;
    if (standard_case(d.p(), d.m(), d.w()) == StandardCase::NotStandard) {
        if (strict) throw UncoveredCase("datum is not standard and the level exceeds max(0, m - w)");
        regime = Regime::LevelRaisedNonStandard;
    }
    PLFun line = PLFun::linear(1, -Rat(d.m() - d.level()) / d.pr(), d.sigma());
    return {pointwise_max(bi, line), regime};
}

PLFun herbrand_of_datum(const CarayolDatum& d, bool strict) {
    return herbrand_of_datum_detailed(d, strict).psi;
}

VaryResult vary_parameter(long p, long m, long w, long l, long d) {
    if (!(m < 2 * w)) throw ConstraintViolation("m < 2w fails");
    if (l < 0 || 2 * l > m) throw ConstraintViolation("0 <= l <= m/2 fails");
    if (d < 1 || 2 * d > m) throw ConstraintViolation("1 <= d <= m/2 fails");
    if (d <= std::max(0L, m - w)) throw ConstraintViolation("d > max(0, m - w) fails");
    if (mod(d - m, p) == 0) throw ConstraintViolation("d not congruent to m mod p fails");
    long w_new = m - d;
    bool p_divides_d = d % p == 0;
    if (l < d)
        return {w_new, p_divides_d ? LevelOutcomeKind::StrictlyBelow : LevelOutcomeKind::Exactly, d};
    if (l > d) return {w_new, LevelOutcomeKind::Exactly, l};
    return {w_new, p_divides_d ? LevelOutcomeKind::Exactly : LevelOutcomeKind::AtMost, d};
}

StandardizeVerdict standardize_target(long p, long m, long w) {
    if (m % p == 0) throw DomainError("p divides m");
    StandardCase c = standard_case(p, m, w);
    return {c != StandardCase::NotStandard, c};
}

UltrametricResult ultrametric_convert(const CarayolDatum& d, const Rat& value, Direction dir) {
    if (value.sign() < 0 || value > d.sigma())
        throw DomainError("value " + value.str() + " outside [0, " + d.sigma().str() + "]");
    DatumInvariants inv = datum_invariants(d);
    PLFun bi = bi_components(d.spec()).bi;
    Rat out = dir == Direction::AtoDelta ? preimage(bi, value) : bi(value);
    bool l_even = inv.l_alpha.num() % 2 == 0;
    return {out,
            inv.epsilon_alpha,
            Rat(inv.lambda_alpha) / d.pr(),
            inv.epsilon_alpha == inv.c_alpha,
            inv.j_inf < inv.c_alpha && l_even,
            inv.star == StarClass::Exceptional};
}

Report crossing_identities(const CarayolDatum& d) {
    Report rep;
    DatumInvariants inv = datum_invariants(d);
    PLFun bi = bi_components(d.spec()).bi;
    const Rat pr = d.pr();
    const Rat mid = Rat(d.m() + d.w()) / (pr * 2);
    const Rat half_level = inv.l_alpha / (pr * 2);
    const Rat at_c = bi(inv.c_alpha);
    if (inv.j_inf <= inv.c_alpha) {
        rep.add("c = (m+w)/2p^r", inv.c_alpha == mid, inv.c_alpha.str() + " vs " + mid.str());
        rep.add("Psi(c) = l/2p^r", at_c == half_level, at_c.str() + " vs " + half_level.str());
    } else {
        rep.add("c < (m+w)/2p^r", inv.c_alpha < mid, inv.c_alpha.str() + " vs " + mid.str());
        rep.add("Psi(c) > l/2p^r", at_c > half_level, at_c.str() + " vs " + half_level.str());
    }
    if (inv.star == StarClass::Exceptional)
        rep.add("exceptional implies odd jump count", jump_table(bi, d.sigma()).size() % 2 == 1);
    return rep;
}

}  // namespace ram
