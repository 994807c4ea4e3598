#include "ramcalc/herbrand.hpp"

#include "ramcalc/errors.hpp"

namespace ram {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

RamTower::RamTower(long p, std::vector<Layer> layers, int insep_s)
    : p_(p), layers_(std::move(layers)), insep_s_(insep_s) {
    if (!is_prime(p_)) throw ValidationError("p is not prime: " + std::to_string(p_));
    if (insep_s_ < 0) throw ValidationError("insep_s is negative");
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (layers_[i].jump.sign() <= 0) throw ValidationError("layer jump must be positive");
        if (layers_[i].s < 1) throw ValidationError("layer exponent s must be at least 1");
        if (i && layers_[i].jump <= layers_[i - 1].jump)
            throw ValidationError("layer jumps must be strictly increasing");
    }
}

int RamTower::separable_r() const {
    int r = 0;
    for (const auto& l : layers_) r += l.s;
    return r;
}

PLFun build_psi(const RamTower& t) {
    std::vector<Break> br;
    Rat slope = 1;
    for (const auto& l : t.layers()) {
        slope *= Rat(ipow(t.p(), l.s));
        br.push_back({l.jump, slope});
    }
    return PLFun(0, 1, std::move(br));
}

ExtRat j_infinity(const RamTower& t) {
    if (!t.separable()) return {};
    if (t.layers().empty()) throw EmptyTower("degree-one tower has no jumps");
    return {t.layers().back().jump};
}

ExtRat wild_exponent(const RamTower& t) {
    if (!t.separable()) return {};
    if (t.layers().empty()) return {Rat(0)};
    const Rat& j = t.layers().back().jump;
    return {Rat(ipow(t.p(), t.separable_r())) * j - build_psi(t)(j)};
}

RamTower elementary_resolution(const PLFun& f, long p) {
    if (f.value_at_zero().sign() != 0) throw NotHerbrandShaped("f(0) is not 0");
    if (f.initial_slope() != 1) throw NotHerbrandShaped("initial slope is not 1");
    std::vector<Layer> layers;
    long prev = 0;
    for (const auto& b : f.breaks()) {
        long k;
        if (!p_power_exponent(b.slope_after, p, k) || k <= prev)
            throw NotHerbrandShaped("slope " + b.slope_after.str() + " after " + b.x.str() +
                                    " is not a larger power of " + std::to_string(p));
        layers.push_back({b.x, static_cast<int>(k - prev)});
        prev = k;
    }
    return RamTower(p, std::move(layers));
}

RamTower tame_lift_tower(const RamTower& t, long e) {
    if (e < 1) throw DomainError("lift degree must be positive");
    if (e % t.p() == 0) throw TameConflict("p divides e = " + std::to_string(e));
    std::vector<Layer> layers;
    for (const auto& l : t.layers()) layers.push_back({l.jump * Rat(e), l.s});
    return RamTower(t.p(), std::move(layers), t.insep_s());
}

NormSwan norm_swan(const RamTower& t, long k) {
    if (k < 1) throw DomainError("k must be positive");
    bool at_jump = false;
    for (const auto& l : t.layers()) at_jump = at_jump || l.jump == Rat(k);
    return {build_psi(t)(Rat(k)), !at_jump};
}

Rat swan_induced(const RamTower& t, const Rat& sw_tau, long dim_tau, long f_res) {
    auto w = wild_exponent(t);
    if (w.infinite()) throw InfiniteWildExponent("tower has an inseparable part");
    return (sw_tau + *w.value * Rat(dim_tau)) * Rat(f_res);
}

bool is_absolutely_wild(const RamTower& t) {
    return t.layers().empty() || t.layers().front().jump.is_integer();
}

void check_char_p_congruence(const RamTower& t) {
    auto w = wild_exponent(t);
    if (w.infinite() || t.layers().empty()) return;
    if (!w.value->is_integer())
        throw ValidationError("wild exponent " + w.value->str() + " is not an integer");
    if (w.value->num() % t.p() == 0)
        throw ValidationError("wild exponent " + w.value->str() + " is 0 mod p");
}

std::pair<RamTower, RamTower> split_tower(const RamTower& t, std::size_t k) {
    if (k > t.layers().size()) throw DomainError("split point beyond the tower");
    std::vector<Layer> low(t.layers().begin(), t.layers().begin() + static_cast<long>(k));
    RamTower lower(t.p(), low);
    PLFun psi_low = build_psi(lower);
    std::vector<Layer> high;
    for (std::size_t i = k; i < t.layers().size(); ++i)
        high.push_back({psi_low(t.layers()[i].jump), t.layers()[i].s});
    return {lower, RamTower(t.p(), high, t.insep_s())};
}

Report tower_laws(const RamTower& t) {
    Report rep;
    PLFun psi = build_psi(t);
    long k;
    bool powers = p_power_exponent(psi.initial_slope(), t.p(), k);
    for (const auto& b : psi.breaks()) powers = powers && p_power_exponent(b.slope_after, t.p(), k);
    rep.add("slope law", powers && is_convex(psi));
    bool round_trip = elementary_resolution(psi, t.p()) == RamTower(t.p(), t.layers());
    rep.add("resolution round trip", round_trip);
    if (!t.separable() || t.layers().empty()) return rep;

    const Rat w = *wild_exponent(t).value;
    for (std::size_t cut = 1; cut < t.layers().size(); ++cut) {
        auto [low, high] = split_tower(t, cut);
        Rat combined = Rat(high.degree()) * *wild_exponent(low).value + *wild_exponent(high).value;
        std::string at = "split after layer " + std::to_string(cut);
        rep.add("transitivity, " + at, combined == w, combined.str() + " vs " + w.str());
        rep.add("composition, " + at, compose(build_psi(high), build_psi(low)) == psi);
    }
    const Rat pr = Rat(t.degree());
    const Rat& j = t.layers().back().jump;
    Rat upper = (pr - 1) * j, lower = pr / Rat(t.p()) * Rat(t.p() - 1) * j;
    bool single = t.layers().size() == 1;
    rep.add("wild exponent bounds", upper >= w && w >= lower,
            lower.str() + " <= " + w.str() + " <= " + upper.str());
    rep.add("upper bound equality iff single layer", (upper == w) == single);
    return rep;
}

}  // namespace ram
