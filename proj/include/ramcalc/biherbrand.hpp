#pragma once

#include "ramcalc/herbrand.hpp"
#include "ramcalc/report.hpp"

#include <optional>

namespace ram {

// A separable tower of degree p^r together with the slope m / p^r.
class BiSpec {
public:
    BiSpec(RamTower tower, long m);

    const RamTower& tower() const { return tower_; }
    long p() const { return tower_.p(); }
    int r() const { return tower_.r(); }
    long m() const { return m_; }
    Rat pr() const { return Rat(tower_.degree()); }
    Rat sigma() const { return Rat(m_) / pr(); }

    bool operator==(const BiSpec&) const = default;

private:
    RamTower tower_;
    long m_;
};

struct BiBundle {
    PLFun psi_times;
    PLFun psi_plus;
    PLFun bi;
    Rat c;
    std::optional<Rat> jbar_infinity;
};

BiBundle bi_components(const BiSpec& s);
Rat crossing_point(const BiSpec& s);

PLFun structure_function(long p, int r, long m);
PLFun decomposition_function(const PLFun& psi, long p, int r, long m);

struct SymmetryReport {
    bool passed;
    std::optional<Rat> witness;
};
SymmetryReport verify_symmetry(const PLFun& f, const Rat& sigma);

Report carayol_jump_checks(const PLFun& f, long p, int r, long m);

// Symmetry, jump checks, parity law, 0 < bi(x) < x inside, structure inversion.
Report bi_laws(const BiSpec& s);

struct ScenarioBranch {
    long m;
    Rat c;
    Rat z;
    std::vector<Rat> jumps;     // {a, c, z}
    bool z_half_integral;
    bool three_c_half_integral;
    bool matches_crossing;      // c equals the crossing point of the tower at m
    bool diagnostics_pass() const { return z_half_integral && three_c_half_integral; }
};

struct Scenario97Report {
    long a;
    Rat b;
    // Reading (i): c solves 4c + psi(c) = m, i.e. c = (m + a) / 6.
    std::optional<ScenarioBranch> defining_equation;
    // Reading (ii): c = (m - 2a) / 6.
    std::optional<ScenarioBranch> printed_formula;
    // Reading (i) evaluated at the m found by reading (ii).
    std::optional<ScenarioBranch> defining_equation_at_printed_m;
};

Scenario97Report scenario_97(long a, const Rat& b);

}  // namespace ram
