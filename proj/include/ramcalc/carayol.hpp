#pragma once

#include "ramcalc/biherbrand.hpp"

#include <string>

namespace ram {

class CarayolDatum {
public:
    CarayolDatum(RamTower tower, long m, long level);

    const RamTower& tower() const { return spec_.tower(); }
    const BiSpec& spec() const { return spec_; }
    long p() const { return spec_.p(); }
    int r() const { return spec_.r(); }
    long m() const { return m_; }
    long level() const { return level_; }
    Rat pr() const { return spec_.pr(); }
    Rat sigma() const { return spec_.sigma(); }
    // Integral for every datum; checked at construction.
    long w() const { return w_; }

    bool operator==(const CarayolDatum&) const = default;

private:
    BiSpec spec_;
    long m_, level_, w_;
};

enum class StandardCase { A, B, C, NotStandard };
enum class StarClass { Ordinary, Exceptional };

const char* name(StandardCase c);
const char* name(StarClass c);

struct DatumInvariants {
    Rat w;
    Rat l_alpha;
    long lambda_alpha;
    long lambda_prime_alpha;
    Rat c_alpha;
    Rat epsilon_alpha;
    Rat j_inf;
    StandardCase standard_case;
    StarClass star;
};

StandardCase standard_case(long p, long m, long w);
DatumInvariants datum_invariants(const CarayolDatum& d);

struct LevelRange {
    bool forced;
    long lo, hi;  // lo == hi == m - w when forced
};
LevelRange level_range(long p, long m, long w);

enum class Regime { Conformal, LevelRaised, LevelRaisedNonStandard };
const char* name(Regime r);

struct DatumPsi {
    PLFun psi;
    Regime regime;
};

// Lenient mode also treats non-standard data in the raised-level regime as
// long as l and m differ mod p; strict mode refuses them.
DatumPsi herbrand_of_datum_detailed(const CarayolDatum& d, bool strict = false);
PLFun herbrand_of_datum(const CarayolDatum& d, bool strict = false);

enum class LevelOutcomeKind { Exactly, StrictlyBelow, AtMost };
const char* name(LevelOutcomeKind k);

struct VaryResult {
    long w_new;
    LevelOutcomeKind outcome;
    long bound;
};
VaryResult vary_parameter(long p, long m, long w, long l, long d);

struct StandardizeVerdict {
    bool already_standard;
    StandardCase reached;  // meaningful when already standard
};
StandardizeVerdict standardize_target(long p, long m, long w);

enum class Direction { AtoDelta, DeltaToA };

struct UltrametricResult {
    Rat value;
    Rat epsilon_alpha;
    Rat max_a;  // lambda_alpha / p^r
    bool epsilon_is_c;
    bool condition_a;  // j_inf < c and l_alpha even
    bool condition_b;  // star-exceptional
};
// Closed forms for the crossing point and Psi there, split on j_inf versus c.
Report crossing_identities(const CarayolDatum& d);

UltrametricResult ultrametric_convert(const CarayolDatum& d, const Rat& value, Direction dir);

}  // namespace ram
