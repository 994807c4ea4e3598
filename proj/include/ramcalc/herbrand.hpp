#pragma once

#include "ramcalc/pl.hpp"
#include "ramcalc/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ram {

struct Layer {
    Rat jump;  // base-field coordinate
    int s;     // layer degree p^s
    bool operator==(const Layer&) const = default;
};

class RamTower {
public:
    RamTower(long p, std::vector<Layer> layers = {}, int insep_s = 0);

    long p() const { return p_; }
    const std::vector<Layer>& layers() const { return layers_; }
    int insep_s() const { return insep_s_; }
    int separable_r() const;
    int r() const { return separable_r() + insep_s_; }
    BigInt degree() const { return ipow(p_, r()); }
    bool separable() const { return insep_s_ == 0; }

    bool operator==(const RamTower&) const = default;

private:
    long p_;
    std::vector<Layer> layers_;
    int insep_s_;
};

// A rational or +infinity.
struct ExtRat {
    std::optional<Rat> value;
    bool infinite() const { return !value; }
    bool operator==(const ExtRat&) const = default;
};

bool is_prime(long n);

PLFun build_psi(const RamTower& t);
ExtRat wild_exponent(const RamTower& t);
ExtRat j_infinity(const RamTower& t);
RamTower elementary_resolution(const PLFun& f, long p);
RamTower tame_lift_tower(const RamTower& t, long e);

struct NormSwan {
    Rat value;
    bool exact;
};
NormSwan norm_swan(const RamTower& t, long k);
Rat swan_induced(const RamTower& t, const Rat& sw_tau, long dim_tau, long f_res);

// Least jump integral.
bool is_absolutely_wild(const RamTower& t);
// Characteristic-p congruence: throws ValidationError when w = 0 mod p.
void check_char_p_congruence(const RamTower& t);

// Lower part (first k layers) and upper part re-coordinatized through the
// lower Herbrand function.
std::pair<RamTower, RamTower> split_tower(const RamTower& t, std::size_t k);

// Transitivity at every split, wild-exponent bounds, slope law, resolution round trip.
Report tower_laws(const RamTower& t);

}  // namespace ram
