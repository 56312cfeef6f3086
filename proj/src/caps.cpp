#include "chroma/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace chroma {

namespace {

int* field(Caps& c, const std::string& key) {
    if (key == "canon_vertices") return &c.canon_vertices;
    if (key == "engine_host") return &c.engine_host;
    if (key == "engine_small_pattern") return &c.engine_small_pattern;
    if (key == "engine_host_small_pattern") return &c.engine_host_small_pattern;
    if (key == "tw_vertices") return &c.tw_vertices;
    if (key == "models") return &c.models;
    if (key == "folio_roots") return &c.folio_roots;
    if (key == "folio_detail") return &c.folio_detail;
    if (key == "folio_host") return &c.folio_host;
    if (key == "wcdp_host") return &c.wcdp_host;
    if (key == "wcdp_complexity") return &c.wcdp_complexity;
    if (key == "obstructions_q") return &c.obstructions_q;
    if (key == "antichain_vertices") return &c.antichain_vertices;
    return nullptr;
}

}  // namespace

Caps parse_caps(const std::string& spec, Caps base) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad cap entry '" + item + "'");
        std::string key = item.substr(0, eq);
        int* f = field(base, key);
        if (!f) throw std::invalid_argument("unknown cap '" + key + "'");
        std::size_t used = 0;
        int value = std::stoi(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1 || value < 0)
            throw std::invalid_argument("bad cap value in '" + item + "'");
        *f = value;
    }
    return base;
}

Caps caps_from_env(Caps base) {
    const char* env = std::getenv("CHROMA_CAPS");
    if (!env) return base;
    return parse_caps(env, base);
}

}  // namespace chroma
