#pragma once

#include "ramcalc/carayol.hpp"
#include "ramcalc/galois.hpp"

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace ram::cli {

struct ScenarioDoc {
    long a;
    Rat b;
    bool operator==(const ScenarioDoc&) const = default;
};

struct FunctionDoc {
    long p;
    PLFun f;
    bool operator==(const FunctionDoc&) const = default;
};

struct CharacterDoc {
    long p;
    Rat sw;
    bool operator==(const CharacterDoc&) const = default;
};

using Document =
    std::variant<RamTower, BiSpec, CarayolDatum, GaloisProfile, ScenarioDoc, FunctionDoc, CharacterDoc>;

const char* kind_name(const Document& d);

// Profile fields before any invariant is checked.
struct RawProfile {
    long p;
    std::optional<int> r;
    long sw;
    PLFun psi;
};

// Throws ParseError for malformed text or schema, ValidationError when a
// mathematical invariant fails (the message names it).
Document parse_input(const std::string& text);
// Same schema, no profile invariants; only for profile documents.
RawProfile parse_raw_profile(const std::string& text);
// Canonical JSON; parse_input(serialize(d)) == d.
std::string serialize(const Document& d);

enum class Format { Text, Csv, Svg, Json };

struct Table {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct Plot {
    PLFun f;
    std::optional<Rat> sigma;  // draws the axis x + y = sigma
    std::vector<Rat> jumps;
    std::string title;
};

struct Output {
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<Table> tables;
    std::optional<Plot> plot;
    std::optional<std::string> json;
};

std::string render_text(const Output& o);
std::string render_csv(const Output& o);
std::string render_svg(const Plot& p);

// Exit status: 0 success, 1 verification failure, 2 when the input cannot
// be processed.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ram::cli
