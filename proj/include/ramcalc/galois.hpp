#pragma once

#include "ramcalc/biherbrand.hpp"

#include <variant>

namespace ram {

// Herbrand function of a Carayol-type representation of dimension p^r and
// Swan exponent sw, on [0, sw/p^r].
class GaloisProfile {
public:
    // r defaults to the exponent read off the initial slope p^-r.
    GaloisProfile(long p, long sw, PLFun psi, std::optional<int> r = std::nullopt);

    long p() const { return p_; }
    int r() const { return r_; }
    long sw() const { return sw_; }
    const PLFun& psi() const { return psi_; }
    Rat pr() const { return Rat(ipow(p_, r_)); }
    Rat sigma() const { return Rat(sw_) / pr(); }
    JumpTable jumps() const { return jump_table(psi_, sigma()); }

    bool operator==(const GaloisProfile&) const = default;

private:
    long p_;
    int r_;
    long sw_;
    PLFun psi_;
};

// Every profile invariant as a separate check; the constructor throws
// MalformedProfile naming the first failure.
Report profile_checks(long p, long sw, const PLFun& psi, std::optional<int> r = std::nullopt);

struct Character {
    Rat sw;
    bool operator==(const Character&) const = default;
};

using InnerRep = std::variant<GaloisProfile, Character>;

struct DecompositionReport {
    JumpTable jumps;
    Rat c_sigma;
    bool c_is_jump;
    Rat w_c;
    BigInt dim_core;
    RamTower L_tower;
    Rat w_L;
    Rat sw_core;
    std::optional<Rat> core_jump;
    BigInt centric_degree;
};
DecompositionReport analyze_profile(const GaloisProfile& g);

enum class RowKind { Between, FirstHalf, Centre, SecondHalf };
const char* name(RowKind k);
// Shape of the restriction at a row: first-half jumps and second-half jumps.
const char* restriction_shape(RowKind k);

struct RestrictionRow {
    Rat x;
    RowKind kind;
    Rat d, d_plus, w;
};

struct RestrictionTable {
    std::vector<RestrictionRow> rows;
    Rat height_product;
};
RestrictionTable restriction_table(const GaloisProfile& g);

struct DescentLayer {
    Rat a;
    long h;
    bool operator==(const DescentLayer&) const = default;
};

struct Descent {
    DescentLayer layer;
    InnerRep inner;
};

Descent descend_once(const GaloisProfile& g);
GaloisProfile ascend_once(const DescentLayer& layer, const InnerRep& inner, int r);

struct HSingularReport {
    Rat a;
    Rat sw_endo;  // Swan exponent of the endomorphism representation
    BigInt centric_degree;
    Report checks;
};
HSingularReport h_singular_check(const GaloisProfile& g);

struct TameIntegrality {
    Rat x;
    BigInt minimal_e;
};
std::vector<TameIntegrality> tame_integrality(const JumpTable& jumps);

// Base change along a tame extension of ramification degree e.
GaloisProfile tame_lift_profile(const GaloisProfile& g, long e);

}  // namespace ram
