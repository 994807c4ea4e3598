#pragma once

// Test helpers: seeded generators and oracles that work on raw slope lists
// instead of PLFun, so they share no code with the library algebra.

#include "ramcalc/carayol.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

using ram::Rat;

inline Rat R(const char* s) { return Rat::parse(s); }

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1))]; }

    Rat positive_rat(long max_num, long max_den) { return Rat(uniform(1, max_num), uniform(1, max_den)); }

    // Random ordered partition of r into positive parts.
    std::vector<int> composition(int r) {
        std::vector<int> parts;
        int left = r;
        while (left > 0) {
            int s = static_cast<int>(uniform(1, left));
            parts.push_back(s);
            left -= s;
        }
        return parts;
    }

    // Separable tower of degree p^r with rational jumps.
    ram::RamTower tower(long p, int r, long max_den = 6) {
        std::vector<ram::Layer> layers;
        Rat x = 0;
        for (int s : composition(r)) {
            x += Rat(uniform(1, 5 * max_den), uniform(1, max_den));
            layers.push_back({x, s});
        }
        return ram::RamTower(p, layers);
    }

    // Tower with integer jumps, as needed for data with integral w.
    ram::RamTower integral_tower(long p, int r, long max_step = 6) {
        std::vector<ram::Layer> layers;
        long x = 0;
        for (int s : composition(r)) {
            x += uniform(1, max_step);
            layers.push_back({Rat(x), s});
        }
        return ram::RamTower(p, layers);
    }

    long m_prime_to(long p, long lo, long hi) {
        for (;;) {
            long m = uniform(lo, hi);
            if (m % p) return m;
        }
    }
};

// Slope-sum evaluation of the Herbrand function of a tower.
inline Rat oracle_psi(const ram::RamTower& t, const Rat& x) {
    Rat y = 0, pos = 0, slope = 1;
    for (const auto& l : t.layers()) {
        if (x <= l.jump) break;
        y += slope * (l.jump - pos);
        pos = l.jump;
        for (int i = 0; i < l.s; ++i) slope *= Rat(t.p());
    }
    return y + slope * (x - pos);
}

// Inverse of oracle_psi, walking the same pieces.
inline Rat oracle_phi(const ram::RamTower& t, const Rat& y) {
    Rat x = 0, val = 0, slope = 1;
    for (const auto& l : t.layers()) {
        Rat at_jump = val + slope * (l.jump - x);
        if (y <= at_jump) break;
        val = at_jump;
        x = l.jump;
        for (int i = 0; i < l.s; ++i) slope *= Rat(t.p());
    }
    return x + (y - val) / slope;
}

// Wild exponent folded layer by layer: each layer alone has w = (p^s - 1) j
// in its own coordinates, and exponents add up along the tower.
inline Rat oracle_wild(const ram::RamTower& t) {
    Rat w = 0;
    std::vector<ram::Layer> below;
    for (const auto& l : t.layers()) {
        ram::RamTower lower(t.p(), below);
        Rat h = Rat(ram::ipow(t.p(), l.s));
        w = h * w + (h - 1) * oracle_psi(lower, l.jump);
        below.push_back(l);
    }
    return w;
}

inline Rat pr_of(const ram::RamTower& t) { return Rat(ram::ipow(t.p(), t.r())); }

// The bi-Herbrand value straight from its defining max.
inline Rat oracle_bi(const ram::RamTower& t, const Rat& sigma, const Rat& x) {
    Rat pr = pr_of(t);
    Rat times = oracle_psi(t, x) / pr;
    Rat plus = sigma - oracle_phi(t, pr * (sigma - x));
    return ram::max(times, plus);
}

// c with c + psi(c)/p^r = sigma, by walking the pieces of psi.
inline Rat oracle_crossing(const ram::RamTower& t, const Rat& sigma) {
    Rat pr = pr_of(t);
    Rat x = 0, val = 0, slope = 1;
    for (const auto& l : t.layers()) {
        Rat at_jump = val + slope * (l.jump - x);
        if (l.jump + at_jump / pr >= sigma) break;
        val = at_jump;
        x = l.jump;
        for (int i = 0; i < l.s; ++i) slope *= Rat(t.p());
    }
    // x + (val + slope (c - x)) / pr = sigma
    return (sigma - val / pr + slope * x / pr) / (1 + slope / pr);
}

// n + 1 evenly spaced points of [0, end].
inline std::vector<Rat> sample_points(const Rat& end, int n = 24) {
    std::vector<Rat> xs;
    for (int i = 0; i <= n; ++i) xs.push_back(end * Rat(i, n));
    return xs;
}

inline std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(RAMCALC_DATA_DIR) + "/" + name; }

}  // namespace support
