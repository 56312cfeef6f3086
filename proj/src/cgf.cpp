#include "chroma/cgf.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long to_int(const std::string& tok, int line) {
    if (tok.empty() || tok.size() > 18) throw ParseError(line, "bad integer '" + tok + "'");
    for (char ch : tok)
        if (ch < '0' || ch > '9') throw ParseError(line, "bad integer '" + tok + "'");
    return std::stoll(tok);
}

}  // namespace

ColorfulGraph parse_cgf(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int stage = 0;  // 0: header, 1: expect q, 2: expect n, 3: body
    long long q = 0, n = 0;
    std::vector<Palette> pal;
    std::vector<bool> has_pal;
    std::set<Edge> edges;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (stage == 0) {
            if (raw != "cgf 1") throw ParseError(lineno, "expected header 'cgf 1'");
            stage = 1;
            continue;
        }
        if (!raw.empty() && raw[0] == '#') continue;
        auto tok = split_ws(raw);
        if (tok.empty()) continue;
        if (stage == 1) {
            if (tok.size() != 2 || tok[0] != "q") throw ParseError(lineno, "expected 'q <Q>'");
            q = to_int(tok[1], lineno);
            if (q > kMaxColors) throw ParseError(lineno, "q=" + tok[1] + " exceeds 64");
            stage = 2;
            continue;
        }
        if (stage == 2) {
            if (tok.size() != 2 || tok[0] != "n") throw ParseError(lineno, "expected 'n <N>'");
            n = to_int(tok[1], lineno);
            if (n > 1000000) throw ParseError(lineno, "n too large");
            pal.assign(n, 0);
            has_pal.assign(n, false);
            stage = 3;
            continue;
        }
        if (tok[0] == "c") {
            if (tok.size() < 2) throw ParseError(lineno, "malformed color line");
            long long v = to_int(tok[1], lineno);
            if (v >= n) throw ParseError(lineno, "vertex " + tok[1] + " out of range (n=" + std::to_string(n) + ")");
            if (has_pal[v]) throw ParseError(lineno, "duplicate color line for vertex " + tok[1]);
            has_pal[v] = true;
            long long prev = 0;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                long long c = to_int(tok[i], lineno);
                if (c < 1) throw ParseError(lineno, "color " + tok[i] + " out of range");
                if (c > q) throw ParseError(lineno, "color " + tok[i] + " exceeds q=" + std::to_string(q));
                if (c <= prev) throw ParseError(lineno, "colors not strictly increasing");
                prev = c;
                pal[v] |= color_bit(static_cast<int>(c));
            }
        } else if (tok[0] == "e") {
            if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
            long long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
            if (u >= n || v >= n)
                throw ParseError(lineno, "vertex " + (u >= n ? tok[1] : tok[2]) + " out of range (n=" +
                                             std::to_string(n) + ")");
            if (u >= v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
            if (!edges.insert({static_cast<int>(u), static_cast<int>(v)}).second)
                throw ParseError(lineno, "duplicate edge " + tok[1] + " " + tok[2]);
        } else {
            throw ParseError(lineno, "malformed line '" + raw + "'");
        }
    }
    if (stage < 3) throw ParseError(lineno + 1, "truncated header");
    return ColorfulGraph(static_cast<int>(n), static_cast<int>(q), std::vector<Edge>(edges.begin(), edges.end()),
                         pal);
}

std::string serialize_cgf(const ColorfulGraph& g) {
    std::string out = "cgf 1\nq " + std::to_string(g.q()) + "\nn " + std::to_string(g.n()) + "\n";
    for (int v = 0; v < g.n(); ++v) {
        if (!g.palette(v)) continue;
        out += "c " + std::to_string(v);
        for (int c : palette_colors(g.palette(v))) out += " " + std::to_string(c);
        out += "\n";
    }
    for (auto [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

ColorfulGraph read_cgf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_cgf(ss.str());
}

void write_cgf_file(const std::string& path, const ColorfulGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_cgf(g);
}

}  // namespace chroma
