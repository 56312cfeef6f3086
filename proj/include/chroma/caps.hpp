#pragma once

#include <string>

namespace chroma {

// Size limits for the exact searches. Exceeding any of them raises CapExceeded.
struct Caps {
    int canon_vertices = 16;
    int engine_host = 20;
    int engine_small_pattern = 4;
    int engine_host_small_pattern = 40;
    int tw_vertices = 16;
    int models = 5000;
    int folio_roots = 4;
    int folio_detail = 3;
    int folio_host = 12;
    int wcdp_host = 14;
    int wcdp_complexity = 4;
    int obstructions_q = 8;
    int antichain_vertices = 10;
};

// Parses "key=value,key=value" over the field names above. Unknown keys throw
// std::invalid_argument.
Caps parse_caps(const std::string& spec, Caps base = {});

// Applies CHROMA_CAPS if set.
Caps caps_from_env(Caps base = {});

}  // namespace chroma
