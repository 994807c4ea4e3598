#include "ramcalc/cli.hpp"

#include <algorithm>
#include <sstream>

namespace ram::cli {

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_text(const Output& o) {
    std::ostringstream os;
    std::size_t key_w = 0;
    for (const auto& [k, v] : o.fields) key_w = std::max(key_w, k.size());
    for (const auto& [k, v] : o.fields) os << k << ':' << std::string(key_w - k.size() + 1, ' ') << v << "\n";
    for (const auto& t : o.tables) {
        if (!o.fields.empty() || &t != &o.tables.front()) os << "\n";
        if (!t.title.empty()) os << t.title << "\n";
        std::vector<std::size_t> w(t.header.size(), 0);
        for (std::size_t i = 0; i < t.header.size(); ++i) w[i] = t.header[i].size();
        for (const auto& r : t.rows)
            for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                s += cells[i];
                if (i + 1 < cells.size()) s += std::string(w[i] - cells[i].size() + 2, ' ');
            }
            os << s << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        if (t.rows.empty()) os << "(none)\n";
    }
    return os.str();
}

std::string render_csv(const Output& o) {
    std::ostringstream os;
    if (!o.tables.empty()) {
        csv_row(os, o.tables.front().header);
        for (const auto& r : o.tables.front().rows) csv_row(os, r);
        return os.str();
    }
    csv_row(os, {"field", "value"});
    for (const auto& [k, v] : o.fields) csv_row(os, {k, v});
    return os.str();
}

// Integer user coordinates: every vertex is multiplied by the lcm of all
// denominators, so the drawn polyline is the exact graph up to scale.
std::string render_svg(const Plot& p) {
    std::vector<Vertex> vs = p.f.vertices();
    if (!p.f.bounded()) {
        Rat last = p.f.breaks().empty() ? Rat(1) : p.f.breaks().back().x;
        Rat x_end = last * Rat(3, 2);
        vs.push_back({x_end, p.f(x_end)});
    }
    Rat x_max = vs.back().x, y_max = vs.back().y;
    if (p.sigma) {
        x_max = max(x_max, *p.sigma);
        y_max = max(y_max, *p.sigma);
    }
    Rat y_min = min(Rat(0), vs.front().y);
    BigInt scale = 1;
    for (const auto& v : vs) scale = lcm(lcm(scale, v.x.den()), v.y.den());
    scale = lcm(lcm(scale, x_max.den()), lcm(y_max.den(), y_min.den()));
    auto X = [&](const Rat& x) { return (x * Rat(scale)).num(); };
    auto Y = [&](const Rat& y) { return ((y_max - y) * Rat(scale)).num(); };
    BigInt width = X(x_max), height = Y(y_min);
    BigInt big = std::max(width, height);
    BigInt pad = big / 10 + 1;
    BigInt stroke = big / 250 + 1;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\""
       << " viewBox=\"" << BigInt(-pad) << ' ' << BigInt(-pad) << ' ' << BigInt(width + 2 * pad) << ' '
       << BigInt(height + 2 * pad) << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    if (!p.title.empty()) os << "  <title>" << escape_xml(p.title) << "</title>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" << stroke << "\"/>\n";
    if (p.sigma) {
        os << "  <line class=\"symmetry-axis\" x1=\"" << X(0) << "\" y1=\"" << Y(*p.sigma) << "\" x2=\""
           << X(*p.sigma) << "\" y2=\"" << Y(0) << "\" stroke=\"#888888\" stroke-width=\"" << stroke
           << "\" stroke-dasharray=\"" << BigInt(4 * stroke) << ' ' << BigInt(3 * stroke) << "\"/>\n";
    }
    os << "  <polyline class=\"graph\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" << BigInt(2 * stroke)
       << "\" points=\"";
    for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << X(vs[i].x) << ',' << Y(vs[i].y);
    os << "\"/>\n";
    for (const auto& j : p.jumps) {
        if (!p.f.contains(j)) continue;
        Rat y = p.f(j);
        os << "  <circle class=\"jump\" cx=\"" << X(j) << "\" cy=\"" << Y(y) << "\" r=\"" << BigInt(4 * stroke)
           << "\" fill=\"#c0392b\"/>\n";
        os << "  <text x=\"" << BigInt(X(j) + 6 * stroke) << "\" y=\"" << BigInt(Y(y) + 4 * stroke)
           << "\" font-size=\"" << BigInt(20 * stroke) << "\" font-family=\"monospace\">" << j.str()
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ram::cli
