#include "ramcalc/pl.hpp"

#include "ramcalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ram {

namespace {

struct Piece {
    Rat x0, y0, slope;
    std::optional<Rat> x1;
};

std::vector<Piece> pieces(const PLFun& f) {
    std::vector<Piece> out;
    Rat x = 0, y = f.value_at_zero(), s = f.initial_slope();
    for (const auto& b : f.breaks()) {
        out.push_back({x, y, s, b.x});
        y += s * (b.x - x);
        x = b.x;
        s = b.slope_after;
    }
    out.push_back({x, y, s, f.domain_end()});
    return out;
}

Rat piece_end_value(const Piece& p) { return p.y0 + p.slope * (*p.x1 - p.x0); }

std::vector<Rat> sorted_unique(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Builds a function from piece starts (first at 0) and the slope on each.
PLFun from_starts(const Rat& v0, const std::vector<Rat>& starts, const std::vector<Rat>& slopes,
                  const std::optional<Rat>& end) {
    std::vector<Break> br;
    for (std::size_t i = 1; i < starts.size(); ++i) br.push_back({starts[i], slopes[i]});
    return PLFun(v0, slopes.front(), std::move(br), end);
}

}  // namespace

PLFun::PLFun(Rat value_at_zero, Rat initial_slope, std::vector<Break> breaks,
             std::optional<Rat> domain_end)
    : v0_(std::move(value_at_zero)), s0_(std::move(initial_slope)), end_(std::move(domain_end)) {
    if (s0_.sign() <= 0) throw DomainError("slope must be positive, got " + s0_.str());
    if (end_ && end_->sign() <= 0) throw DomainError("domain end must be positive");
    Rat prev_x = 0;
    Rat prev_s = s0_;
    for (auto& b : breaks) {
        if (b.x <= prev_x) throw DomainError("break abscissae must increase and be positive");
        if (end_ && b.x >= *end_) throw DomainError("break at or beyond domain end");
        if (b.slope_after.sign() <= 0)
            throw DomainError("slope must be positive, got " + b.slope_after.str());
        prev_x = b.x;
        if (b.slope_after == prev_s) continue;
        prev_s = b.slope_after;
        breaks_.push_back(std::move(b));
    }
}

PLFun PLFun::identity(std::optional<Rat> end) { return PLFun(0, 1, {}, std::move(end)); }

PLFun PLFun::linear(Rat slope, Rat value_at_zero, std::optional<Rat> end) {
    return PLFun(std::move(value_at_zero), std::move(slope), {}, std::move(end));
}

PLFun PLFun::through(const std::vector<Vertex>& vs, std::optional<Rat> final_slope) {
    if (vs.empty() || vs.front().x.sign() != 0) throw DomainError("vertex list must start at x = 0");
    if (vs.size() == 1) {
        if (!final_slope) throw DomainError("single vertex needs a final slope");
        return PLFun(vs[0].y, *final_slope);
    }
    std::vector<Rat> starts, slopes;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i + 1].x <= vs[i].x) throw DomainError("vertex abscissae must increase");
        starts.push_back(vs[i].x);
        slopes.push_back((vs[i + 1].y - vs[i].y) / (vs[i + 1].x - vs[i].x));
    }
    if (final_slope) {
        starts.push_back(vs.back().x);
        slopes.push_back(*final_slope);
        return from_starts(vs[0].y, starts, slopes, std::nullopt);
    }
    return from_starts(vs[0].y, starts, slopes, vs.back().x);
}

Rat PLFun::operator()(const Rat& x) const {
    if (!contains(x)) throw DomainError("x = " + x.str() + " outside the domain");
    Rat px = 0, y = v0_;
    const Rat* s = &s0_;
    for (const auto& b : breaks_) {
        if (x <= b.x) break;
        y += *s * (b.x - px);
        px = b.x;
        s = &b.slope_after;
    }
    return y + *s * (x - px);
}

Rat PLFun::slope_right(const Rat& x) const {
    const Rat* s = &s0_;
    for (const auto& b : breaks_) {
        if (b.x > x) break;
        s = &b.slope_after;
    }
    return *s;
}

Rat PLFun::slope_left(const Rat& x) const {
    const Rat* s = &s0_;
    for (const auto& b : breaks_) {
        if (b.x >= x) break;
        s = &b.slope_after;
    }
    return *s;
}

std::vector<Vertex> PLFun::vertices() const {
    std::vector<Vertex> out;
    for (const auto& p : pieces(*this)) out.push_back({p.x0, p.y0});
    if (end_) out.push_back({*end_, (*this)(*end_)});
    return out;
}

Rat eval(const PLFun& f, const Rat& x) { return f(x); }

Rat preimage(const PLFun& f, const Rat& y) {
    for (const auto& p : pieces(f)) {
        if (y < p.y0) break;
        if (!p.x1 || y <= piece_end_value(p)) return p.x0 + (y - p.y0) / p.slope;
    }
    throw DomainError("value " + y.str() + " not attained");
}

Rat solve_antidiagonal(const PLFun& f, const Rat& s) {
    for (const auto& p : pieces(f)) {
        if (s < p.x0 + p.y0) break;
        if (!p.x1 || s <= *p.x1 + piece_end_value(p)) return p.x0 + (s - p.x0 - p.y0) / (p.slope + 1);
    }
    throw DomainError("x + f(x) = " + s.str() + " has no solution in the domain");
}

PLFun compose(const PLFun& g, const PLFun& f) {
    if (f.value_at_zero().sign() < 0) throw DomainError("compose: f(0) outside the domain of g");
    if (g.bounded()) {
        if (!f.bounded() || f(*f.domain_end()) > *g.domain_end())
            throw DomainError("compose: range of f exceeds the domain of g");
    }
    std::vector<Rat> xs{0};
    for (const auto& b : f.breaks()) xs.push_back(b.x);
    const Rat lo = f.value_at_zero();
    std::optional<Rat> hi;
    if (f.bounded()) hi = f(*f.domain_end());
    for (const auto& b : g.breaks())
        if (b.x > lo && (!hi || b.x < *hi)) xs.push_back(preimage(f, b.x));
    xs = sorted_unique(std::move(xs));
    std::vector<Rat> slopes;
    for (const auto& x : xs) slopes.push_back(f.slope_right(x) * g.slope_right(f(x)));
    return from_starts(g(lo), xs, slopes, f.domain_end());
}

PLFun invert(const PLFun& f) {
    std::optional<Rat> end;
    if (f.bounded()) {
        end = f(*f.domain_end());
        if (end->sign() <= 0) throw DomainError("invert: range does not meet (0, inf)");
    }
    auto ps = pieces(f);
    std::size_t k = 0;
    while (ps[k].x1 && piece_end_value(ps[k]).sign() <= 0) ++k;
    Rat g0 = ps[k].x0 - ps[k].y0 / ps[k].slope;
    std::vector<Rat> starts{0}, slopes{1 / ps[k].slope};
    for (std::size_t i = k + 1; i < ps.size(); ++i) {
        starts.push_back(ps[i].y0);
        slopes.push_back(1 / ps[i].slope);
    }
    return from_starts(g0, starts, slopes, end);
}

PLFun pointwise_max(const PLFun& f, const PLFun& g) {
    if (f.domain_end() != g.domain_end()) throw DomainError("pointwise_max: domains differ");
    std::vector<Rat> xs{0};
    for (const auto& b : f.breaks()) xs.push_back(b.x);
    for (const auto& b : g.breaks()) xs.push_back(b.x);
    xs = sorted_unique(std::move(xs));
    std::vector<Rat> cuts = xs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Rat& a = xs[i];
        std::optional<Rat> b = i + 1 < xs.size() ? std::optional<Rat>(xs[i + 1]) : f.domain_end();
        Rat sf = f.slope_right(a), sg = g.slope_right(a);
        if (sf == sg) continue;
        Rat t = a + (g(a) - f(a)) / (sf - sg);
        if (t > a && (!b || t < *b)) cuts.push_back(t);
    }
    cuts = sorted_unique(std::move(cuts));
    std::vector<Rat> slopes;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const Rat& u = cuts[i];
        Rat probe = i + 1 < cuts.size() ? (u + cuts[i + 1]) / 2
                  : f.domain_end()      ? (u + *f.domain_end()) / 2
                                        : u + 1;
        slopes.push_back(f(probe) >= g(probe) ? f.slope_right(u) : g.slope_right(u));
    }
    return from_starts(max(f.value_at_zero(), g.value_at_zero()), cuts, slopes, f.domain_end());
}

PLFun reflect(const PLFun& f, const Rat& s) {
    if (f.value_at_zero() >= s) throw DomainError("reflect: f(0) is not below " + s.str());
    if (f.bounded() && f(*f.domain_end()) < s)
        throw DomainError("reflect: f does not reach " + s.str());
    Rat top = preimage(f, s);
    std::vector<Vertex> below;
    for (const auto& v : f.vertices())
        if (v.x < top) below.push_back(v);
    below.push_back({top, s});
    std::vector<Vertex> out;
    for (auto it = below.rbegin(); it != below.rend(); ++it) out.push_back({s - it->y, s - it->x});
    return PLFun::through(out);
}

PLFun symmetric_completion(const PLFun& f, const Rat& s) {
    Rat c = solve_antidiagonal(f, s);
    std::vector<Vertex> vs;
    for (const auto& v : f.vertices())
        if (v.x < c) vs.push_back(v);
    vs.push_back({c, f(c)});
    std::size_t n = vs.size();
    for (std::size_t i = n - 1; i-- > 0;) vs.push_back({s - vs[i].y, s - vs[i].x});
    return PLFun::through(vs);
}

JumpTable jump_table(const PLFun& f, std::optional<Rat> open_upper) {
    JumpTable t;
    Rat left = f.initial_slope();
    for (const auto& b : f.breaks()) {
        if (open_upper && b.x >= *open_upper) break;
        t.entries.push_back({b.x, left, b.slope_after, b.slope_after / left});
        left = b.slope_after;
    }
    return t;
}

PLFun restrict_to(const PLFun& f, const Rat& end) {
    if (!f.contains(end)) throw DomainError("restrict: " + end.str() + " outside the domain");
    std::vector<Break> br;
    for (const auto& b : f.breaks())
        if (b.x < end) br.push_back(b);
    return PLFun(f.value_at_zero(), f.initial_slope(), std::move(br), end);
}

PLFun scale(const Rat& c, const PLFun& f) {
    if (c.sign() <= 0) throw DomainError("scale factor must be positive");
    std::vector<Break> br;
    for (const auto& b : f.breaks()) br.push_back({b.x, c * b.slope_after});
    return PLFun(c * f.value_at_zero(), c * f.initial_slope(), std::move(br), f.domain_end());
}

PLFun rescale(const PLFun& f, const Rat& k) {
    if (k.sign() <= 0) throw DomainError("rescale factor must be positive");
    std::vector<Break> br;
    for (const auto& b : f.breaks()) br.push_back({b.x / k, b.slope_after});
    std::optional<Rat> end;
    if (f.bounded()) end = *f.domain_end() / k;
    return PLFun(f.value_at_zero() / k, f.initial_slope(), std::move(br), end);
}

bool is_convex(const PLFun& f) {
    const Rat* s = &f.initial_slope();
    for (const auto& b : f.breaks()) {
        if (b.slope_after < *s) return false;
        s = &b.slope_after;
    }
    return true;
}

std::string describe(const PLFun& f) {
    std::ostringstream os;
    os << "f(0)=" << f.value_at_zero() << " slope " << f.initial_slope();
    for (const auto& b : f.breaks()) os << " | " << b.x << " -> " << b.slope_after;
    if (f.bounded()) os << " on [0," << *f.domain_end() << "]";
    else os << " on [0,inf)";
    return os.str();
}

}  // namespace ram
