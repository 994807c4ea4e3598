#include "ramcalc/cli.hpp"
#include "ramcalc/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace ram::cli {

namespace {

struct Options {
    std::string in, format = "text", out, grid;
    std::optional<long> q, lift, e;
    std::string x, value, direction = "a-to-delta", a, b;
    long p = 0, m = 0, w = 0, l = 0, d = 0, h = 0;
    int r = 0;
    bool strict = false;
};

struct Result {
    Output output;
    bool verified = true;
};

std::string S(const Rat& x) { return x.str(); }
std::string S(const BigInt& x) { return x.get_str(); }
std::string S(long x) { return std::to_string(x); }

std::string read_file(const std::string& path) {
    if (path.empty()) throw ParseError("--in PATH is required");
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Rat rat_option(const std::string& s, const char* flag) {
    if (s.empty()) throw ParseError(std::string(flag) + " is required");
    try {
        return Rat::parse(s);
    } catch (const ParseError&) {
        throw ParseError(std::string(flag) + " is not an exact rational: " + s);
    }
}

[[noreturn]] void wrong_kind(const Document& d, const char* wanted) {
    throw ParseError(std::string("expected a ") + wanted + " document, got " + kind_name(d));
}

RamTower as_tower(const Document& d) {
    if (auto t = std::get_if<RamTower>(&d)) return *t;
    if (auto s = std::get_if<BiSpec>(&d)) return s->tower();
    if (auto c = std::get_if<CarayolDatum>(&d)) return c->tower();
    wrong_kind(d, "tower");
}

BiSpec as_bispec(const Document& d) {
    if (auto s = std::get_if<BiSpec>(&d)) return *s;
    if (auto c = std::get_if<CarayolDatum>(&d)) return c->spec();
    wrong_kind(d, "bispec");
}

CarayolDatum as_datum(const Document& d) {
    if (auto c = std::get_if<CarayolDatum>(&d)) return *c;
    wrong_kind(d, "datum");
}

GaloisProfile as_profile(const Document& d, bool strict) {
    if (auto g = std::get_if<GaloisProfile>(&d)) return *g;
    if (auto c = std::get_if<CarayolDatum>(&d)) return GaloisProfile(c->p(), c->m(), herbrand_of_datum(*c, strict));
    wrong_kind(d, "profile");
}

Table jump_rows(const JumpTable& jt, const std::string& title = "jumps") {
    Table t{title, {"x", "left", "right", "height"}, {}};
    for (const auto& e : jt.entries) t.rows.push_back({S(e.x), S(e.left), S(e.right), S(e.height)});
    return t;
}

Table report_rows(const Report& rep) {
    Table t{"checks", {"check", "status", "detail"}, {}};
    for (const auto& c : rep.checks) t.rows.push_back({c.name, c.passed ? "PASS" : "FAIL", c.detail});
    return t;
}

std::string tower_text(const RamTower& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.layers().size(); ++i)
        s += (i ? ", (" : "(") + S(t.layers()[i].jump) + ", " + std::to_string(t.layers()[i].s) + ")";
    s += "]";
    if (t.insep_s()) s += " + inseparable p^" + std::to_string(t.insep_s());
    return s;
}

std::vector<Rat> jump_xs(const JumpTable& jt) {
    std::vector<Rat> xs;
    for (const auto& e : jt.entries) xs.push_back(e.x);
    return xs;
}

void add_psi_fields(Output& o, const PLFun& f) {
    o.fields.push_back({"value at 0", S(f.value_at_zero())});
    o.fields.push_back({"initial slope", S(f.initial_slope())});
    o.fields.push_back({"domain", f.bounded() ? "[0, " + S(*f.domain_end()) + "]" : "[0, inf)"});
}

void add_grid(Output& o, const PLFun& f, const std::string& step_text) {
    if (step_text.empty()) return;
    Rat step = rat_option(step_text, "--grid");
    if (step.sign() <= 0) throw ParseError("--grid must be positive");
    Rat end = f.bounded() ? *f.domain_end() : (f.breaks().empty() ? Rat(1) : f.breaks().back().x * Rat(3, 2));
    Table t{"values", {"x", "f(x)"}, {}};
    for (Rat x = 0; x <= end; x += step) {
        t.rows.push_back({S(x), S(f(x))});
        if (t.rows.size() > 100000) throw ParseError("--grid step too small");
    }
    o.tables.insert(o.tables.begin(), t);
}

// -- herb -------------------------------------------------------------------

Result herb_eval(const Options& opt) {
    RamTower t = as_tower(parse_input(read_file(opt.in)));
    Rat x = rat_option(opt.x, "--x");
    PLFun psi = build_psi(t);
    Result r;
    r.output.fields = {{"tower", tower_text(t)}, {"x", S(x)}, {"psi(x)", S(psi(x))}, {"phi(x)", S(invert(psi)(x))}};
    add_grid(r.output, psi, opt.grid);
    r.output.plot = Plot{psi, std::nullopt, jump_xs(jump_table(psi)), "psi"};
    return r;
}

Result herb_jumps(const Options& opt) {
    RamTower t = as_tower(parse_input(read_file(opt.in)));
    PLFun psi = build_psi(t);
    JumpTable jt = jump_table(psi);
    Result r;
    r.output.fields = {{"tower", tower_text(t)}};
    r.output.tables.push_back(jump_rows(jt));
    add_grid(r.output, psi, opt.grid);
    r.output.plot = Plot{psi, std::nullopt, jump_xs(jt), "psi"};
    return r;
}

Result herb_wild(const Options& opt) {
    RamTower t = as_tower(parse_input(read_file(opt.in)));
    Result r;
    auto& f = r.output.fields;
    f.push_back({"tower", tower_text(t)});
    f.push_back({"degree", S(t.degree())});
    ExtRat w = wild_exponent(t);
    if (t.layers().empty() && t.separable()) {
        f.push_back({"wild exponent", "0"});
        return r;
    }
    ExtRat j = j_infinity(t);
    f.push_back({"largest jump", j.infinite() ? "infinite" : S(*j.value)});
    f.push_back({"wild exponent", w.infinite() ? "infinite" : S(*w.value)});
    if (!w.infinite()) {
        Rat pr = Rat(t.degree());
        f.push_back({"upper bound (p^r-1) j", S((pr - 1) * *j.value)});
        f.push_back({"lower bound p^(r-1)(p-1) j", S(pr / Rat(t.p()) * Rat(t.p() - 1) * *j.value)});
        f.push_back({"single layer", t.layers().size() == 1 ? "yes" : "no"});
    }
    f.push_back({"absolutely wild", is_absolutely_wild(t) ? "yes" : "no"});
    return r;
}

Result herb_resolve(const Options& opt) {
    Document d = parse_input(read_file(opt.in));
    RamTower t = [&] {
        if (auto fd = std::get_if<FunctionDoc>(&d)) return elementary_resolution(fd->f, fd->p);
        RamTower src = as_tower(d);
        return elementary_resolution(build_psi(src), src.p());
    }();
    Result r;
    r.output.fields = {{"tower", tower_text(t)}, {"degree", S(t.degree())}};
    Table tab{"layers", {"jump", "s", "height"}, {}};
    for (const auto& l : t.layers()) tab.rows.push_back({S(l.jump), std::to_string(l.s), S(ipow(t.p(), l.s))});
    r.output.tables.push_back(tab);
    r.output.json = serialize(t);
    return r;
}

Result herb_lift(const Options& opt) {
    RamTower t = as_tower(parse_input(read_file(opt.in)));
    if (!opt.e) throw ParseError("--e E is required");
    RamTower lifted = tame_lift_tower(t, *opt.e);
    Result r;
    r.output.fields = {{"tower", tower_text(t)}, {"e", S(*opt.e)}, {"lifted tower", tower_text(lifted)}};
    r.output.tables.push_back(jump_rows(jump_table(build_psi(lifted))));
    r.output.json = serialize(lifted);
    return r;
}

// -- bi ---------------------------------------------------------------------

Result bi_build(const Options& opt) {
    BiSpec s = as_bispec(parse_input(read_file(opt.in)));
    BiBundle b = bi_components(s);
    JumpTable jt = jump_table(b.bi, s.sigma());
    Result r;
    auto& f = r.output.fields;
    f.push_back({"tower", tower_text(s.tower())});
    f.push_back({"m", S(s.m())});
    f.push_back({"sigma", S(s.sigma())});
    f.push_back({"c", S(b.c)});
    f.push_back({"jbar_infinity", b.jbar_infinity ? S(*b.jbar_infinity) : "absent"});
    f.push_back({"jump count", std::to_string(jt.size()) + (jt.size() % 2 ? " (odd)" : " (even)")});
    r.output.tables.push_back(jump_rows(jt));
    add_grid(r.output, b.bi, opt.grid);
    r.output.plot = Plot{b.bi, s.sigma(), jump_xs(jt), "bi-Herbrand function"};
    return r;
}

Result bi_c(const Options& opt) {
    BiSpec s = as_bispec(parse_input(read_file(opt.in)));
    Result r;
    r.output.fields = {{"c", S(crossing_point(s))}};
    return r;
}

Result bi_check(const Options& opt) {
    BiSpec s = as_bispec(parse_input(read_file(opt.in)));
    Report rep = bi_laws(s);
    Result r;
    r.output.fields = {{"result", rep.passed() ? "PASS" : "FAIL"}};
    r.output.tables.push_back(report_rows(rep));
    r.verified = rep.passed();
    return r;
}

// -- carayol ----------------------------------------------------------------

Result carayol_invariants(const Options& opt) {
    CarayolDatum d = as_datum(parse_input(read_file(opt.in)));
    DatumInvariants inv = datum_invariants(d);
    Result r;
    auto& f = r.output.fields;
    f = {{"w", S(inv.w)},
         {"l_alpha", S(inv.l_alpha)},
         {"lambda_alpha", S(inv.lambda_alpha)},
         {"lambda_prime_alpha", S(inv.lambda_prime_alpha)},
         {"c_alpha", S(inv.c_alpha)},
         {"epsilon_alpha", S(inv.epsilon_alpha)},
         {"j_inf", S(inv.j_inf)},
         {"standard case", name(inv.standard_case)},
         {"star", name(inv.star)}};
    if (opt.q) {
        if (*opt.q < 2) throw ParseError("--q must be at least 2");
        f.push_back({"conformal family size q^lambda", S(ipow(*opt.q, inv.lambda_alpha))});
    }
    return r;
}

Result carayol_psi(const Options& opt) {
    CarayolDatum d = as_datum(parse_input(read_file(opt.in)));
    DatumPsi dp = herbrand_of_datum_detailed(d, opt.strict);
    JumpTable jt = jump_table(dp.psi, d.sigma());
    Result r;
    r.output.fields = {{"regime", name(dp.regime)}, {"sigma", S(d.sigma())}};
    add_psi_fields(r.output, dp.psi);
    r.output.tables.push_back(jump_rows(jt));
    add_grid(r.output, dp.psi, opt.grid);
    r.output.plot = Plot{dp.psi, d.sigma(), jump_xs(jt), "Herbrand function of the datum"};
    r.output.json = serialize(GaloisProfile(d.p(), d.m(), dp.psi, d.r()));
    return r;
}

Result carayol_classify(const Options& opt) {
    long p = opt.p, m = opt.m, w = opt.w;
    if (!opt.in.empty()) {
        CarayolDatum d = as_datum(parse_input(read_file(opt.in)));
        p = d.p();
        m = d.m();
        w = d.w();
    } else if (!p || !m) {
        throw ParseError("give --in DATUM or --p, --m and --w");
    }
    LevelRange lr = level_range(p, m, w);
    StandardizeVerdict v = standardize_target(p, m, w);
    Result r;
    r.output.fields = {
        {"level range", lr.forced ? "Forced(" + S(lr.lo) + ")" : "Range(" + S(lr.lo) + ".." + S(lr.hi) + ")"},
        {"standardization", v.already_standard ? std::string("AlreadyStandard(") + name(v.reached) + ")"
                                               : "RaisableTo(B or C)"}};
    return r;
}

Result carayol_vary(const Options& opt) {
    VaryResult v = vary_parameter(opt.p, opt.m, opt.w, opt.l, opt.d);
    Result r;
    r.output.fields = {{"w_new", S(v.w_new)}, {"level outcome", std::string(name(v.outcome)) + "(" + S(v.bound) + ")"}};
    return r;
}

Result carayol_distance(const Options& opt) {
    CarayolDatum d = as_datum(parse_input(read_file(opt.in)));
    Direction dir;
    if (opt.direction == "a-to-delta") dir = Direction::AtoDelta;
    else if (opt.direction == "delta-to-a") dir = Direction::DeltaToA;
    else throw ParseError("--direction must be a-to-delta or delta-to-a");
    UltrametricResult u = ultrametric_convert(d, rat_option(opt.value, "--value"), dir);
    Result r;
    r.output.fields = {{"value", S(u.value)},
                       {"max A over the conformal family", S(u.max_a)},
                       {"max Delta (epsilon_alpha)", S(u.epsilon_alpha)},
                       {"epsilon_alpha = c_alpha", u.epsilon_is_c ? "yes" : "no"},
                       {"condition (a): j_inf < c, l even", u.condition_a ? "yes" : "no"},
                       {"condition (b): star-exceptional", u.condition_b ? "yes" : "no"}};
    return r;
}

// -- galois -----------------------------------------------------------------

GaloisProfile load_profile(const Options& opt) {
    GaloisProfile g = as_profile(parse_input(read_file(opt.in)), opt.strict);
    if (opt.lift) g = tame_lift_profile(g, *opt.lift);
    return g;
}

Result galois_analyze(const Options& opt) {
    GaloisProfile g = load_profile(opt);
    DecompositionReport d = analyze_profile(g);
    Result r;
    r.output.fields = {{"sw", S(g.sw())},
                       {"sigma", S(g.sigma())},
                       {"c_sigma", S(d.c_sigma)},
                       {"c is a jump", d.c_is_jump ? "yes" : "no"},
                       {"w_c", S(d.w_c)},
                       {"dim_core", S(d.dim_core)},
                       {"L tower", tower_text(d.L_tower)},
                       {"w_L", S(d.w_L)},
                       {"sw_core", S(d.sw_core)},
                       {"core jump", d.core_jump ? S(*d.core_jump) : "none"},
                       {"centric degree", S(d.centric_degree)},
                       {"jump length/multiplicity split", "not determined by the profile"}};
    r.output.tables.push_back(jump_rows(d.jumps));
    Table ti{"tame integrality", {"x", "minimal_e"}, {}};
    for (const auto& t : tame_integrality(d.jumps)) ti.rows.push_back({S(t.x), S(t.minimal_e)});
    r.output.tables.push_back(ti);
    r.output.plot = Plot{g.psi(), g.sigma(), jump_xs(d.jumps), "Herbrand function"};
    return r;
}

Result galois_table(const Options& opt) {
    GaloisProfile g = load_profile(opt);
    RestrictionTable t = restriction_table(g);
    Result r;
    r.output.fields = {{"height product", S(t.height_product)}, {"p^2r", S(g.pr() * g.pr())}};
    Table tab{"restriction table", {"x", "kind", "d", "d_plus", "w", "restriction"}, {}};
    for (const auto& row : t.rows)
        tab.rows.push_back({S(row.x), name(row.kind), S(row.d), S(row.d_plus), S(row.w), restriction_shape(row.kind)});
    r.output.tables.push_back(tab);
    return r;
}

Result galois_descend(const Options& opt) {
    GaloisProfile g = load_profile(opt);
    Descent ds = descend_once(g);
    Result r;
    auto& f = r.output.fields;
    f.push_back({"layer jump a", S(ds.layer.a)});
    f.push_back({"layer height h", S(ds.layer.h)});
    if (auto c = std::get_if<Character>(&ds.inner)) {
        f.push_back({"inner", "character"});
        f.push_back({"inner sw", S(c->sw)});
        r.output.json = serialize(CharacterDoc{g.p(), c->sw});
    } else {
        const GaloisProfile& in = std::get<GaloisProfile>(ds.inner);
        f.push_back({"inner", "profile"});
        f.push_back({"inner sw", S(in.sw())});
        f.push_back({"inner dimension", S(ipow(in.p(), in.r()))});
        f.push_back({"inner sigma", S(in.sigma())});
        r.output.tables.push_back(jump_rows(in.jumps(), "inner jumps"));
        r.output.plot = Plot{in.psi(), in.sigma(), jump_xs(in.jumps()), "inner Herbrand function"};
        r.output.json = serialize(in);
    }
    return r;
}

Result galois_ascend(const Options& opt) {
    Document d = parse_input(read_file(opt.in));
    InnerRep inner = [&]() -> InnerRep {
        if (auto c = std::get_if<CharacterDoc>(&d)) return Character{c->sw};
        return as_profile(d, opt.strict);
    }();
    if (opt.a.empty() || !opt.h || !opt.r) throw ParseError("--a, --h and --r are required");
    GaloisProfile g = ascend_once({rat_option(opt.a, "--a"), opt.h}, inner, opt.r);
    Result r;
    r.output.fields = {{"sw", S(g.sw())}, {"r", S(static_cast<long>(g.r()))}, {"sigma", S(g.sigma())}};
    add_psi_fields(r.output, g.psi());
    r.output.tables.push_back(jump_rows(g.jumps()));
    r.output.plot = Plot{g.psi(), g.sigma(), jump_xs(g.jumps()), "reconstructed Herbrand function"};
    r.output.json = serialize(g);
    return r;
}

Result galois_hsingular(const Options& opt) {
    GaloisProfile g = load_profile(opt);
    HSingularReport h = h_singular_check(g);
    Result r;
    r.output.fields = {{"a", S(h.a)},
                       {"sw/(1+p^r)", S(Rat(g.sw()) / (g.pr() + 1))},
                       {"sw of endomorphisms", S(h.sw_endo)},
                       {"centric degree", S(h.centric_degree)}};
    r.output.tables.push_back(report_rows(h.checks));
    r.verified = h.checks.passed();
    return r;
}

// -- scenario ---------------------------------------------------------------

void branch_rows(Table& t, const char* label, const std::optional<ScenarioBranch>& b) {
    if (!b) {
        t.rows.push_back({label, "none", "", "", "", "", "", "no admissible m"});
        return;
    }
    std::string js;
    for (std::size_t i = 0; i < b->jumps.size(); ++i) js += (i ? " " : "") + S(b->jumps[i]);
    t.rows.push_back({label, S(b->m), S(b->c), S(b->c * 3), S(b->z), b->z_half_integral ? "yes" : "no",
                      b->three_c_half_integral ? "yes" : "no",
                      std::string(b->diagnostics_pass() ? "PASS" : "FAIL") +
                          (b->matches_crossing ? ", c is the crossing point" : ", c is not the crossing point")});
}

Result scenario97(const Options& opt) {
    long a;
    Rat b;
    if (!opt.in.empty()) {
        Document d = parse_input(read_file(opt.in));
        auto s = std::get_if<ScenarioDoc>(&d);
        if (!s) wrong_kind(d, "scenario");
        a = s->a;
        b = s->b;
    } else {
        a = rat_option(opt.a, "--a").to_long();
        b = rat_option(opt.b, "--b");
    }
    Scenario97Report rep = scenario_97(a, b);
    Result r;
    r.output.fields = {{"a", S(a)}, {"b", S(b)}};
    Table t{"readings", {"reading", "m", "c", "3c", "z", "z half-integral", "3c half-integral", "diagnostics"}, {}};
    branch_rows(t, "(i) 4c+psi(c)=m", rep.defining_equation);
    branch_rows(t, "(ii) c=(m-2a)/6", rep.printed_formula);
    if (rep.defining_equation_at_printed_m) branch_rows(t, "(i) at the m of (ii)", rep.defining_equation_at_printed_m);
    r.output.tables.push_back(t);
    return r;
}

// -- verify-all -------------------------------------------------------------

Report profile_suite(const RawProfile& raw) {
    Report rep = profile_checks(raw.p, raw.sw, raw.psi, raw.r);
    if (!rep.passed()) return rep;
    GaloisProfile g(raw.p, raw.sw, raw.psi, raw.r);
    try {
        DecompositionReport d = analyze_profile(g);
        rep.add("decomposition", true, "c = " + S(d.c_sigma) + ", dim_core = " + S(d.dim_core) +
                                            ", sw_core = " + S(d.sw_core));
    } catch (const MalformedProfile& e) {
        rep.add("decomposition", false, e.what());
    }
    RestrictionTable t = restriction_table(g);
    rep.add("restriction height product", t.height_product == g.pr() * g.pr(), S(t.height_product));
    PLFun sig = decomposition_function(g.psi(), g.p(), g.r(), g.sw());
    rep.add("structure inversion", compose(invert(structure_function(g.p(), g.r(), g.sw())), sig) == g.psi());
    JumpTable jt = g.jumps();
    if (jt.size() == 1) {
        rep.append(h_singular_check(g).checks);
        return rep;
    }
    BigInt e = jt.entries.front().x.den();
    if (e % g.p() == 0) {
        rep.add("descent round trip", true, "skipped: first jump denominator divisible by p");
        return rep;
    }
    GaloisProfile lifted = e == 1 ? g : tame_lift_profile(g, e.get_si());
    try {
        Descent ds = descend_once(lifted);
        bool ok = ascend_once(ds.layer, ds.inner, lifted.r()) == lifted;
        rep.add("descent round trip", ok, e == 1 ? "" : "after tame lift by " + S(e));
    } catch (const Error& ex) {
        rep.add("descent round trip", false, ex.what());
    }
    return rep;
}

Result verify_all(const Options& opt) {
    std::string text = read_file(opt.in);
    Report rep;
    std::string kind;
    std::optional<Document> doc;
    try {
        doc = parse_input(text);
        kind = kind_name(*doc);
    } catch (const ValidationError& invalid) {
        // A profile that breaks its invariants is still checked, one by one.
        try {
            parse_raw_profile(text);
        } catch (const ParseError&) {
            throw invalid;
        }
        kind = "profile";
    }
    if (kind == "profile") {
        rep = profile_suite(parse_raw_profile(text));
    } else if (auto c = std::get_if<CarayolDatum>(&*doc)) {
        DatumPsi dp = herbrand_of_datum_detailed(*c, opt.strict);
        rep.add("regime", true, name(dp.regime));
        rep.append(profile_suite({c->p(), c->r(), c->m(), dp.psi}));
        rep.append(crossing_identities(*c));
        rep.append(bi_laws(c->spec()));
    } else if (auto s = std::get_if<BiSpec>(&*doc)) {
        rep = bi_laws(*s);
    } else if (auto t = std::get_if<RamTower>(&*doc)) {
        rep = tower_laws(*t);
    } else {
        throw ParseError("verify-all does not apply to a " + kind + " document");
    }
    Result r;
    r.output.fields = {{"document", kind}, {"result", rep.passed() ? "PASS" : "FAIL"}};
    r.output.tables.push_back(report_rows(rep));
    r.verified = rep.passed();
    return r;
}

void emit(const Result& res, const Options& opt, std::ostream& out) {
    std::string body;
    if (opt.format == "text") body = render_text(res.output);
    else if (opt.format == "csv") body = render_csv(res.output);
    else if (opt.format == "svg") {
        if (!res.output.plot) throw ParseError("this command has no plot; svg output is unavailable");
        body = render_svg(*res.output.plot);
    } else {
        if (!res.output.json) throw ParseError("this command has no document output; json is unavailable");
        body = *res.output.json;
    }
    if (opt.out.empty()) {
        out << body;
        return;
    }
    std::ofstream os(opt.out, std::ios::binary);
    if (!os || !(os << body)) throw IoError("cannot write " + opt.out);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact ramification calculus: Herbrand functions, bi-Herbrand functions, descent.", "ramcalc"};
    app.require_subcommand(1);
    Options opt;
    std::function<Result(const Options&)> action;

    auto common = [&](CLI::App* sc, std::function<Result(const Options&)> fn, bool needs_in = true) {
        auto* o = sc->add_option("--in", opt.in, "input JSON document");
        if (needs_in) o->required();
        sc->add_option("--format", opt.format, "text, csv, svg or json")
            ->check(CLI::IsMember({"text", "csv", "svg", "json"}));
        sc->add_option("--out", opt.out, "write output to this path");
        sc->callback([&action, fn] { action = fn; });
        return sc;
    };
    auto group = [&](const char* n, const char* desc) {
        auto* g = app.add_subcommand(n, desc);
        g->require_subcommand(1);
        return g;
    };

    auto* herb = group("herb", "Herbrand functions of towers");
    common(herb->add_subcommand("eval", "psi and phi at a point"), herb_eval)->add_option("--x", opt.x, "point, exact rational")->required();
    herb->get_subcommand("eval")->add_option("--grid", opt.grid, "tabulate at multiples of this step");
    common(herb->add_subcommand("jumps", "jump table of psi"), herb_jumps)->add_option("--grid", opt.grid, "tabulate at multiples of this step");
    common(herb->add_subcommand("wild", "wild exponent and bounds"), herb_wild);
    common(herb->add_subcommand("resolve", "elementary resolution"), herb_resolve);
    common(herb->add_subcommand("lift", "tame lift"), herb_lift)->add_option("--e", opt.e, "tame degree, prime to p")->required();

    auto* bi = group("bi", "bi-Herbrand functions");
    common(bi->add_subcommand("build", "components, crossing point and jumps"), bi_build)->add_option("--grid", opt.grid, "tabulate at multiples of this step");
    common(bi->add_subcommand("c", "crossing point"), bi_c);
    common(bi->add_subcommand("check", "symmetry and jump laws"), bi_check);

    auto* car = group("carayol", "data of simple strata");
    common(car->add_subcommand("invariants", "w, l, lambda, c, epsilon, classification"), carayol_invariants)
        ->add_option("--q", opt.q, "residue field size for the counting report");
    auto* psi_cmd = common(car->add_subcommand("psi", "Herbrand function of the datum"), carayol_psi);
    psi_cmd->add_flag("--strict", opt.strict, "refuse non-standard data above the conformal level");
    psi_cmd->add_option("--grid", opt.grid, "tabulate at multiples of this step");
    auto* cls = common(car->add_subcommand("classify", "level range and standardization"), carayol_classify, false);
    cls->add_option("--p", opt.p, "prime, with --m and --w instead of --in");
    cls->add_option("--m", opt.m, "Swan exponent");
    cls->add_option("--w", opt.w, "wild exponent");
    auto* vary = common(car->add_subcommand("vary", "parameter variation"), carayol_vary, false);
    for (auto [flag, ref] : std::initializer_list<std::pair<const char*, long*>>{
             {"--p", &opt.p}, {"--m", &opt.m}, {"--w", &opt.w}, {"--l", &opt.l}, {"--d", &opt.d}})
        vary->add_option(flag, *ref)->required();
    auto* dist = common(car->add_subcommand("distance", "ultrametric conversion"), carayol_distance);
    dist->add_option("--value", opt.value, "exact rational to convert")->required();
    dist->add_option("--direction", opt.direction, "a-to-delta or delta-to-a");

    auto* gal = group("galois", "Galois-side structure of profiles");
    using Entry = std::tuple<const char*, Result (*)(const Options&), const char*>;
    for (auto [n, fn, desc] : std::initializer_list<Entry>{{"analyze", galois_analyze, "decomposition report"},
                               {"table", galois_table, "restriction table"},
                               {"descend", galois_descend, "one descent step"},
                               {"hsingular", galois_hsingular, "single-jump checks"}}) {
        auto* sc = common(gal->add_subcommand(n, desc), fn);
        sc->add_option("--lift", opt.lift, "tame lift of this degree first");
        sc->add_flag("--strict", opt.strict, "refuse non-standard datum input above the conformal level");
    }
    auto* asc = common(gal->add_subcommand("ascend", "reconstruct from layer and inner part"), galois_ascend);
    asc->add_option("--a", opt.a, "layer jump, a positive integer")->required();
    asc->set_help_flag("--help", "Print this help message and exit");
    asc->add_option("--h", opt.h, "layer height, a power of p")->required();
    asc->add_option("--r", opt.r, "target exponent, degree p^r")->required();

    auto* sc97 = common(app.add_subcommand("scenario97", "both readings of the three-jump construction"), scenario97, false);
    sc97->add_option("--a", opt.a, "first jump, odd");
    sc97->add_option("--b", opt.b, "second jump, exact rational");

    common(app.add_subcommand("verify-all", "every applicable identity on one input"), verify_all)
        ->add_flag("--strict", opt.strict, "refuse non-standard datum input above the conformal level");

    std::vector<std::string> storage{"ramcalc"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        Result res = action(opt);
        emit(res, opt, out);
        return res.verified ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ram::cli
