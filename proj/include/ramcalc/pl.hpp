#pragma once

#include "ramcalc/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ram {

struct Break {
    Rat x;
    Rat slope_after;
    bool operator==(const Break&) const = default;
};

struct Vertex {
    Rat x, y;
    bool operator==(const Vertex&) const = default;
};

// Continuous strictly increasing piecewise-linear function on [0, end] or
// [0, inf).  Stored as f(0), the first slope and the slope changes; the
// constructor merges repeated slopes so equal functions compare equal.
class PLFun {
public:
    PLFun(Rat value_at_zero, Rat initial_slope, std::vector<Break> breaks = {},
          std::optional<Rat> domain_end = std::nullopt);

    static PLFun identity(std::optional<Rat> end = std::nullopt);
    static PLFun linear(Rat slope, Rat value_at_zero = 0, std::optional<Rat> end = std::nullopt);
    // Interpolates the vertices (first one at x = 0).  With final_slope the
    // last piece continues to infinity, otherwise the domain ends at the
    // last vertex.
    static PLFun through(const std::vector<Vertex>& vs, std::optional<Rat> final_slope = std::nullopt);

    const Rat& value_at_zero() const { return v0_; }
    const Rat& initial_slope() const { return s0_; }
    const std::vector<Break>& breaks() const { return breaks_; }
    const std::optional<Rat>& domain_end() const { return end_; }
    bool bounded() const { return end_.has_value(); }
    bool contains(const Rat& x) const { return x.sign() >= 0 && (!end_ || x <= *end_); }

    Rat operator()(const Rat& x) const;
    Rat slope_right(const Rat& x) const;
    Rat slope_left(const Rat& x) const;
    const Rat& final_slope() const { return breaks_.empty() ? s0_ : breaks_.back().slope_after; }
    // (0, f(0)), every break, and the right endpoint when bounded.
    std::vector<Vertex> vertices() const;

    bool operator==(const PLFun&) const = default;

private:
    Rat v0_, s0_;
    std::vector<Break> breaks_;
    std::optional<Rat> end_;
};

struct JumpEntry {
    Rat x, left, right, height;
    bool operator==(const JumpEntry&) const = default;
};

struct JumpTable {
    std::vector<JumpEntry> entries;
    std::size_t size() const { return entries.size(); }
    bool operator==(const JumpTable&) const = default;
};

Rat eval(const PLFun& f, const Rat& x);
PLFun compose(const PLFun& g, const PLFun& f);
// Inverse, reading f as continued to the left of 0 by its first piece so
// that the result again lives on [0, ...).
PLFun invert(const PLFun& f);
PLFun pointwise_max(const PLFun& f, const PLFun& g);
// Graph reflection in the line x + y = s: g(x) = s - f^-1(s - x) on [0, s - f(0)].
PLFun reflect(const PLFun& f, const Rat& s);
JumpTable jump_table(const PLFun& f, std::optional<Rat> open_upper = std::nullopt);

PLFun restrict_to(const PLFun& f, const Rat& end);
PLFun scale(const Rat& c, const PLFun& f);
// x -> f(k x) / k
PLFun rescale(const PLFun& f, const Rat& k);
// Unique x with f(x) = y.
Rat preimage(const PLFun& f, const Rat& y);
// Unique x with x + f(x) = s.
Rat solve_antidiagonal(const PLFun& f, const Rat& s);
// f on [0, c] glued to its own reflection in x + y = s, c the antidiagonal
// crossing.  The result is symmetric by construction.
PLFun symmetric_completion(const PLFun& f, const Rat& s);
bool is_convex(const PLFun& f);

std::string describe(const PLFun& f);

}  // namespace ram
