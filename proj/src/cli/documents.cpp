#include "ramcalc/cli.hpp"
#include "ramcalc/errors.hpp"

#include <json.hpp>

#include <set>

namespace ram::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string where(const std::string& path) { return "field '" + path + "': "; }

Rat read_rat(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where(path) + bare_message(e));
        }
    }
    if (j.is_number()) throw ParseError(where(path) + "non-exact number; write it as a string \"a/b\"");
    throw ParseError(where(path) + "expected a rational");
}

long read_long(const Json& j, const std::string& path) {
    Rat r = read_rat(j, path);
    if (!r.is_integer() || !r.num().fits_slong_p()) throw ParseError(where(path) + "expected an integer");
    return r.to_long();
}

const Json& need(const Json& obj, const char* key, const std::string& ctx = {}) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing field '" + ctx + key + "'");
    return *it;
}

void only_keys(const Json& obj, std::set<std::string> allowed, const std::string& ctx = {}) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError("unknown field '" + ctx + it.key() + "'");
}

Json parse_json(const std::string& text) {
    try {
        Json j = Json::parse(text);
        if (!j.is_object()) throw ParseError("top level must be a JSON object");
        return j;
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
}

std::string infer_kind(const Json& j) {
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw ParseError("field 'kind': expected a string");
        return j["kind"].get<std::string>();
    }
    if (j.contains("psi")) return j.contains("sw") ? "profile" : "function";
    if (j.contains("a") || j.contains("b")) return "scenario";
    if (j.contains("sw")) return "character";
    if (j.contains("level")) return "datum";
    if (j.contains("m")) return "bispec";
    return "tower";
}

template <class F>
auto validated(F&& f) {
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(bare_message(e));
    }
}

RamTower read_tower(const Json& j) {
    long p = read_long(need(j, "p"), "p");
    const Json& ls = need(j, "layers");
    if (!ls.is_array()) throw ParseError("field 'layers': expected an array");
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        std::string ctx = "layers[" + std::to_string(i) + "].";
        if (!ls[i].is_object()) throw ParseError("field 'layers[" + std::to_string(i) + "]': expected an object");
        only_keys(ls[i], {"jump", "s"}, ctx);
        long s = read_long(need(ls[i], "s", ctx), ctx + "s");
        layers.push_back({read_rat(need(ls[i], "jump", ctx), ctx + "jump"), static_cast<int>(s)});
    }
    long insep = j.contains("insep_s") ? read_long(j["insep_s"], "insep_s") : 0;
    return validated([&] { return RamTower(p, layers, static_cast<int>(insep)); });
}

struct PsiFields {
    Rat v0, s0;
    std::vector<Break> breaks;
    std::optional<Rat> end;
};

PsiFields read_psi(const Json& j) {
    if (!j.is_object()) throw ParseError("field 'psi': expected an object");
    only_keys(j, {"value_at_zero", "initial_slope", "breaks", "domain_end"}, "psi.");
    PsiFields out;
    out.v0 = j.contains("value_at_zero") ? read_rat(j["value_at_zero"], "psi.value_at_zero") : Rat(0);
    out.s0 = read_rat(need(j, "initial_slope", "psi."), "psi.initial_slope");
    const Json& bs = need(j, "breaks", "psi.");
    if (!bs.is_array()) throw ParseError("field 'psi.breaks': expected an array");
    for (std::size_t i = 0; i < bs.size(); ++i) {
        std::string ctx = "psi.breaks[" + std::to_string(i) + "]";
        if (!bs[i].is_array() || bs[i].size() != 2) throw ParseError(where(ctx) + "expected [x, slope_after]");
        out.breaks.push_back({read_rat(bs[i][0], ctx + "[0]"), read_rat(bs[i][1], ctx + "[1]")});
    }
    if (j.contains("domain_end")) out.end = read_rat(j["domain_end"], "psi.domain_end");
    return out;
}

RawProfile read_raw_profile(const Json& j) {
    only_keys(j, {"kind", "p", "r", "sw", "psi"});
    long p = read_long(need(j, "p"), "p");
    long sw = read_long(need(j, "sw"), "sw");
    std::optional<int> r;
    if (j.contains("r")) r = static_cast<int>(read_long(j["r"], "r"));
    PsiFields f = read_psi(need(j, "psi"));
    if (!f.end && is_prime(p)) {
        int rr = 0;
        long k;
        if (r) rr = *r;
        else if (p_power_exponent(f.s0, p, k) && k < 0) rr = static_cast<int>(-k);
        if (rr > 0) f.end = Rat(sw) / Rat(ipow(p, rr));
    }
    return validated([&] { return RawProfile{p, r, sw, PLFun(f.v0, f.s0, f.breaks, f.end)}; });
}

Json rat_json(const Rat& x) { return x.str(); }

Json psi_json(const PLFun& f, bool full) {
    Json j;
    if (full) j["value_at_zero"] = rat_json(f.value_at_zero());
    j["initial_slope"] = rat_json(f.initial_slope());
    Json bs = Json::array();
    for (const auto& b : f.breaks()) bs.push_back(Json::array({rat_json(b.x), rat_json(b.slope_after)}));
    j["breaks"] = bs;
    if (full && f.bounded()) j["domain_end"] = rat_json(*f.domain_end());
    return j;
}

void put_tower(Json& j, const RamTower& t) {
    j["p"] = t.p();
    Json ls = Json::array();
    for (const auto& l : t.layers()) ls.push_back({{"jump", rat_json(l.jump)}, {"s", l.s}});
    j["layers"] = ls;
    j["insep_s"] = t.insep_s();
}

}  // namespace

const char* kind_name(const Document& d) {
    static const char* names[] = {"tower", "bispec", "datum", "profile", "scenario", "function", "character"};
    return names[d.index()];
}

Document parse_input(const std::string& text) {
    Json j = parse_json(text);
    std::string kind = infer_kind(j);
    if (kind == "tower") {
        only_keys(j, {"kind", "p", "layers", "insep_s"});
        return read_tower(j);
    }
    if (kind == "bispec" || kind == "datum") {
        bool datum = kind == "datum";
        if (datum) only_keys(j, {"kind", "p", "layers", "insep_s", "m", "level"});
        else only_keys(j, {"kind", "p", "layers", "insep_s", "m"});
        RamTower t = read_tower(j);
        long m = read_long(need(j, "m"), "m");
        if (!datum) return validated([&] { return BiSpec(t, m); });
        long level = read_long(need(j, "level"), "level");
        return validated([&] { return CarayolDatum(t, m, level); });
    }
    if (kind == "profile") {
        RawProfile raw = read_raw_profile(j);
        return validated([&] { return GaloisProfile(raw.p, raw.sw, raw.psi, raw.r); });
    }
    if (kind == "scenario") {
        only_keys(j, {"kind", "a", "b"});
        return ScenarioDoc{read_long(need(j, "a"), "a"), read_rat(need(j, "b"), "b")};
    }
    if (kind == "function") {
        only_keys(j, {"kind", "p", "psi"});
        long p = read_long(need(j, "p"), "p");
        PsiFields f = read_psi(need(j, "psi"));
        if (!is_prime(p)) throw ValidationError("p is not prime");
        return validated([&] { return FunctionDoc{p, PLFun(f.v0, f.s0, f.breaks, f.end)}; });
    }
    if (kind == "character") {
        only_keys(j, {"kind", "p", "sw"});
        long p = read_long(need(j, "p"), "p");
        if (!is_prime(p)) throw ValidationError("p is not prime");
        return CharacterDoc{p, read_rat(need(j, "sw"), "sw")};
    }
    throw ParseError("unknown document kind '" + kind + "'");
}

RawProfile parse_raw_profile(const std::string& text) {
    Json j = parse_json(text);
    if (infer_kind(j) != "profile") throw ParseError("expected a profile document");
    return read_raw_profile(j);
}

std::string serialize(const Document& d) {
    Json j;
    j["kind"] = kind_name(d);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RamTower>) {
                put_tower(j, v);
            } else if constexpr (std::is_same_v<T, BiSpec>) {
                put_tower(j, v.tower());
                j["m"] = v.m();
            } else if constexpr (std::is_same_v<T, CarayolDatum>) {
                put_tower(j, v.tower());
                j["m"] = v.m();
                j["level"] = v.level();
            } else if constexpr (std::is_same_v<T, GaloisProfile>) {
                j["p"] = v.p();
                j["r"] = v.r();
                j["sw"] = v.sw();
                j["psi"] = psi_json(v.psi(), false);
            } else if constexpr (std::is_same_v<T, ScenarioDoc>) {
                j["a"] = v.a;
                j["b"] = rat_json(v.b);
            } else if constexpr (std::is_same_v<T, FunctionDoc>) {
                j["p"] = v.p;
                j["psi"] = psi_json(v.f, true);
            } else {
                j["p"] = v.p;
                j["sw"] = rat_json(v.sw);
            }
        },
        d);
    return j.dump(2) + "\n";
}

}  // namespace ram::cli
