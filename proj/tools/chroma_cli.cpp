#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chroma/caps.hpp"
#include "chroma/cgf.hpp"
#include "chroma/classifier.hpp"
#include "chroma/duality.hpp"
#include "chroma/errors.hpp"
#include "chroma/families.hpp"
#include "chroma/linkage.hpp"
#include "chroma/minor.hpp"
#include "chroma/obstructions.hpp"
#include "chroma/reduction.hpp"
#include "chroma/rooted.hpp"
#include "chroma/width.hpp"

using json = nlohmann::ordered_json;
using namespace chroma;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("bad integer list: " + s);
        }
    }
    return out;
}

// "0,1;2;3,4" -> {{0,1},{2},{3,4}}
std::vector<std::vector<int>> parse_sets(const std::string& s) {
    std::vector<std::vector<int>> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) out.push_back(parse_list(item));
    return out;
}

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

json model_json(const MinorModel& m) {
    json out = json::object();
    for (std::size_t a = 0; a < m.branch_sets.size(); ++a) out[std::to_string(a)] = m.branch_sets[a];
    return out;
}

json decomposition_json(const TreeDecomposition& d) {
    json out{{"bags", d.bags}, {"edges", json::array()}};
    for (auto [a, b] : d.edges) out["edges"].push_back({a, b});
    if (d.root >= 0) out["root"] = d.root;
    if (!d.leaves.empty()) out["leaves"] = d.leaves;
    return out;
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition d;
    try {
        d.bags = j.at("bags").get<std::vector<std::vector<int>>>();
        for (auto& e : j.at("edges")) d.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        if (j.contains("root")) d.root = j["root"].get<int>();
        if (j.contains("leaves")) d.leaves = j["leaves"].get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("bad decomposition: ") + e.what());
    }
    return d;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for q-colorful graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    int cap_vertices = -1, cap_models = -1, jobs = 1;
    std::string caps_spec;
    app.add_option("--cap-vertices", cap_vertices, "Vertex limit for every exact search");
    app.add_option("--cap-models", cap_models, "Limit on enumerated minimal models");
    app.add_option("--caps", caps_spec, "Individual caps as key=value,...");
    app.add_option("--jobs", jobs, "Worker count (results do not depend on it)")->check(CLI::PositiveNumber);

    std::string host_path, pattern_path, graph_path, decomp_path, out_dir, out_path;
    std::string host_roots, pattern_roots, roots, sets, target, xset, pi;
    int k = 0, q = 0, r = 0, d = 0, n = 0, m = 0, restricted_leaf = -1;
    bool strong = false;

    auto* check_minor = app.add_subcommand("check-minor", "Colorful minor containment");
    check_minor->add_option("--host", host_path)->required();
    check_minor->add_option("--pattern", pattern_path)->required();

    auto* check_rooted = app.add_subcommand("check-rooted", "Rooted colorful minor containment");
    check_rooted->add_option("--host", host_path)->required();
    check_rooted->add_option("--pattern", pattern_path)->required();
    check_rooted->add_option("--host-roots", host_roots, "Comma-separated host roots")->required();
    check_rooted->add_option("--pattern-roots", pattern_roots, "Comma-separated pattern roots")->required();

    auto* folio = app.add_subcommand("folio", "d-folio of a rooted graph");
    folio->add_option("graph", graph_path)->required();
    folio->add_option("--roots", roots)->required();
    folio->add_option("--d", d)->required();

    std::string instance_path;
    auto* wcdp = app.add_subcommand("wcdp", "Walled colorful disjoint paths");
    wcdp->add_option("graph", graph_path)->required();
    wcdp->add_option("--instance", instance_path, "JSON with terminals and signatures")->required();

    auto* linkage = app.add_subcommand("linkage", "Menger and multicolor linkages");
    linkage->add_option("graph", graph_path)->required();
    linkage->add_option("--sets", sets, "Source sets, e.g. 0,1;2")->required();
    linkage->add_option("--target", target, "Target set")->required();
    linkage->add_option("--k", k)->required();

    auto* obstructions = app.add_subcommand("obstructions", "Obstruction catalog for crucial graphs");
    obstructions->add_option("--q", q)->required();
    obstructions->add_option("--out-dir", out_dir);

    auto* classify = app.add_subcommand("classify", "Crucial-graph report");
    classify->add_option("graph", graph_path)->required();

    auto* generate = app.add_subcommand("generate", "Graph families as CGF");
    generate->require_subcommand(1);
    auto* gen_grid = generate->add_subcommand("grid");
    gen_grid->add_option("--n", n)->required();
    gen_grid->add_option("--m", m)->required();
    auto* gen_wall = generate->add_subcommand("wall");
    gen_wall->add_option("--n", n)->required();
    gen_wall->add_option("--m", m)->required();
    auto* gen_rainbow = generate->add_subcommand("rainbow");
    gen_rainbow->add_option("--q", q)->required();
    gen_rainbow->add_option("graph", graph_path)->required();
    auto* gen_seg = generate->add_subcommand("segregated");
    gen_seg->add_option("--q", q)->required();
    gen_seg->add_option("--k", k)->required();
    gen_seg->add_option("--pi", pi, "Block colors, e.g. 2,1");
    auto* gen_cross = generate->add_subcommand("crossing-paths");
    gen_cross->add_option("--k", k)->required();
    auto* gen_universal = generate->add_subcommand("universal");
    gen_universal->add_option("--q", q)->required();
    gen_universal->add_option("--k", k)->required();
    gen_universal->add_option("--out-dir", out_dir);

    auto* tw = app.add_subcommand("tw", "Exact treewidth with a decomposition");
    tw->add_option("graph", graph_path)->required();
    auto* rtw = app.add_subcommand("rtw", "Restrictive treewidth");
    rtw->add_option("graph", graph_path)->required();
    rtw->add_flag("--strong", strong, "Compute on the fusion");
    auto* rh = app.add_subcommand("rh", "Rainbow Hadwiger number");
    rh->add_option("graph", graph_path)->required();
    rh->add_flag("--strong", strong, "Compute on the fusion");
    auto* bidim = app.add_subcommand("bidim", "Bidimensionality of a vertex set");
    bidim->add_option("graph", graph_path)->required();
    bidim->add_option("--X", xset)->required();
    auto* sbsg_cmd = app.add_subcommand("sbsg", "Largest segregated grid of the fusion");
    sbsg_cmd->add_option("graph", graph_path)->required();
    auto* validate = app.add_subcommand("validate-decomp", "Check a tree decomposition sidecar");
    validate->add_option("graph", graph_path)->required();
    validate->add_option("--decomp", decomp_path)->required();
    validate->add_option("--restricted-leaf", restricted_leaf, "Also check the restricted-leaf shape with bound s");

    auto* pack = app.add_subcommand("pack", "Packing number");
    pack->add_option("--host", host_path)->required();
    pack->add_option("--pattern", pattern_path)->required();
    auto* cover = app.add_subcommand("cover", "Covering number");
    cover->add_option("--host", host_path)->required();
    cover->add_option("--pattern", pattern_path)->required();
    auto* half = app.add_subcommand("half-integral", "Packing witness in a segregated grid");
    half->add_option("--q", q)->required();
    half->add_option("--k", k)->required();
    half->add_option("--r", r)->required();
    half->add_option("--pi", pi);

    auto* decorate_cmd = app.add_subcommand("decorate", "Decorated plain graph");
    decorate_cmd->add_option("graph", graph_path)->required();
    decorate_cmd->add_option("--r", r)->required();
    decorate_cmd->add_option("--out", out_path, "Write the decorated CGF here");
    auto* reduce = app.add_subcommand("reduce-check", "Colorful minor test through decorations");
    reduce->add_option("--host", host_path)->required();
    reduce->add_option("--pattern", pattern_path)->required();
    reduce->add_option("--r", r)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Caps caps = caps_from_env();
        if (!caps_spec.empty()) caps = parse_caps(caps_spec, caps);
        if (cap_vertices >= 0) {
            caps.engine_host = caps.engine_host_small_pattern = cap_vertices;
            caps.tw_vertices = caps.folio_host = caps.wcdp_host = cap_vertices;
            caps.canon_vertices = std::min(cap_vertices, 64);
        }
        if (cap_models >= 0) caps.models = cap_models;

        if (check_minor->parsed()) {
            auto host = read_cgf_file(host_path), pattern = read_cgf_file(pattern_path);
            auto model = find_colorful_minor(host, pattern, caps);
            emit({{"contains", model.has_value()}, {"model", model ? model_json(*model) : json(nullptr)}});
        } else if (check_rooted->parsed()) {
            RootedInstance host{read_cgf_file(host_path), parse_list(host_roots)};
            RootedInstance pattern{read_cgf_file(pattern_path), parse_list(pattern_roots)};
            auto model = find_rooted_minor(host, pattern, caps);
            emit({{"contains", model.has_value()}, {"model", model ? model_json(*model) : json(nullptr)}});
        } else if (folio->parsed()) {
            auto entries = compute_d_folio(read_cgf_file(graph_path), parse_list(roots), d, caps);
            json list = json::array();
            for (auto& e : entries) list.push_back({{"graph", serialize_cgf(e.graph)}, {"roots", e.roots}});
            emit({{"d", d}, {"count", entries.size()}, {"entries", list}});
        } else if (wcdp->parsed()) {
            auto g = read_cgf_file(graph_path);
            json inst = read_json(instance_path);
            std::vector<Terminals> terms;
            std::vector<Signature> sigs;
            try {
                for (auto& t : inst.at("terminals")) terms.push_back({t.at(0).get<int>(), t.at(1).get<int>()});
                for (auto& s : inst.at("signatures")) {
                    Signature sig;
                    for (auto& part : s) {
                        Palette p = 0;
                        for (int c : part.get<std::vector<int>>()) p |= color_bit(c);
                        sig.push_back(p);
                    }
                    sigs.push_back(sig);
                }
            } catch (const json::exception& e) {
                throw UsageError(std::string("bad wcdp instance: ") + e.what());
            }
            auto trees = solve_wcdp(g, terms, sigs, caps);
            json out{{"solvable", trees.has_value()}, {"trees", nullptr}};
            if (trees) {
                out["trees"] = json::array();
                for (auto& t : *trees) {
                    json edges = json::array();
                    for (auto [u, v] : t) edges.push_back({u, v});
                    out["trees"].push_back(edges);
                }
            }
            emit(out);
        } else if (linkage->parsed()) {
            auto g = read_cgf_file(graph_path);
            auto sources = parse_sets(sets);
            auto Y = parse_list(target);
            auto result = multicolor_linkage(g, sources, Y, k);
            if (auto* l = std::get_if<Linkage>(&result)) {
                json paths = json::array();
                for (auto& p : l->paths) paths.push_back({{"source", p.source}, {"vertices", p.vertices}});
                emit({{"outcome", "linkage"}, {"paths", paths}});
            } else {
                auto& s = std::get<SeparatorResult>(result);
                emit({{"outcome", "separator"}, {"I", s.I}, {"S", s.S}});
            }
        } else if (obstructions->parsed()) {
            auto cat = generate_obstructions(q, caps);
            json members = json::array();
            for (std::size_t i = 0; i < cat.members.size(); ++i) {
                char name[32];
                std::snprintf(name, sizeof name, "member_%03zu.cgf", i);
                members.push_back({{"file", name}, {"family", family_tag(cat.members[i].family)}});
                if (!out_dir.empty()) {
                    std::filesystem::create_directories(out_dir);
                    write_cgf_file((std::filesystem::path(out_dir) / name).string(), cat.members[i].graph);
                }
            }
            json counts = json::object();
            for (Family f : {Family::O0, Family::O1t, Family::O2t, Family::O3, Family::O4})
                counts[family_tag(f)] = cat.count(f);
            json manifest{{"q", q}, {"total", cat.members.size()}, {"formula", obstruction_count(q)},
                          {"counts", counts}, {"members", members}};
            if (!out_dir.empty()) write_text((std::filesystem::path(out_dir) / "manifest.json").string(),
                                             manifest.dump(2) + "\n");
            emit(manifest);
        } else if (classify->parsed()) {
            auto rep = is_crucial(read_cgf_file(graph_path), caps);
            json out{{"color_facial", rep.color_facial},
                     {"color_segmented", rep.color_segmented},
                     {"component_wise_bicolored", rep.component_wise_bicolored},
                     {"single_component_bicolored", rep.single_component_bicolored},
                     {"crucial", rep.crucial},
                     {"witness", nullptr}};
            if (rep.witness) {
                auto& w = *rep.witness;
                out["witness"] = {{"predicate", w.predicate}, {"detail", w.detail}, {"vertices", w.vertices}};
                if (w.obstruction) out["witness"]["obstruction"] = serialize_cgf(*w.obstruction);
                if (w.model) out["witness"]["model"] = model_json(*w.model);
            }
            emit(out);
        } else if (generate->parsed()) {
            if (gen_universal->parsed()) {
                auto family = universal_family(q, k);
                json list = json::array();
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if (!out_dir.empty()) {
                        std::filesystem::create_directories(out_dir);
                        char name[32];
                        std::snprintf(name, sizeof name, "universal_%03zu.cgf", i);
                        write_cgf_file((std::filesystem::path(out_dir) / name).string(), family[i]);
                        list.push_back(name);
                    } else {
                        list.push_back(serialize_cgf(family[i]));
                    }
                }
                emit({{"q", q}, {"k", k}, {"count", family.size()}, {"members", list}});
            } else {
                ColorfulGraph g;
                if (gen_grid->parsed()) g = make_grid(n, m);
                else if (gen_wall->parsed()) g = make_wall(n, m);
                else if (gen_rainbow->parsed()) g = rainbow(q, read_cgf_file(graph_path));
                else if (gen_seg->parsed()) g = segregated_grid({q, k, parse_list(pi)});
                else g = crossing_paths(k);
                std::cout << serialize_cgf(g);
            }
        } else if (tw->parsed()) {
            auto g = read_cgf_file(graph_path);
            auto dec = treewidth_decomposition(g, caps);
            emit({{"tw", validate_decomposition(g, dec).width}, {"decomposition", decomposition_json(dec)}});
        } else if (rtw->parsed()) {
            auto g = read_cgf_file(graph_path);
            auto res = strong ? srtw_exact(g, caps) : rtw_exact(g, caps);
            emit({{strong ? "srtw" : "rtw", res.value}, {"X", res.X}});
        } else if (rh->parsed()) {
            auto g = read_cgf_file(graph_path);
            emit({{strong ? "srh" : "rh", strong ? strong_rainbow_hadwiger(g, caps) : rainbow_hadwiger(g, caps)}});
        } else if (bidim->parsed()) {
            emit({{"bidim", bidimensionality(read_cgf_file(graph_path), parse_list(xset), caps)}});
        } else if (sbsg_cmd->parsed()) {
            emit({{"sbsg", sbsg(read_cgf_file(graph_path), caps)}});
        } else if (validate->parsed()) {
            auto g = read_cgf_file(graph_path);
            auto dec = decomposition_from_json(read_json(decomp_path));
            auto rep = validate_decomposition(g, dec);
            json out{{"valid", rep.valid}, {"width", rep.width}, {"adhesion", rep.adhesion}, {"problem", rep.problem}};
            if (restricted_leaf >= 0)
                out["restricted_leaf"] = validate_restricted_leaf_decomposition(g, dec, restricted_leaf);
            emit(out);
        } else if (pack->parsed()) {
            auto res = pack_number(read_cgf_file(host_path), read_cgf_file(pattern_path), caps);
            emit({{"pack", res.pack}, {"witnesses", res.witnesses}});
        } else if (cover->parsed()) {
            auto res = cover_number(read_cgf_file(host_path), read_cgf_file(pattern_path), caps);
            emit({{"cover", res.cover}, {"S", res.S}});
        } else if (half->parsed()) {
            auto w = half_integral_witness(q, k, r, parse_list(pi));
            int bound = static_cast<int>(w.multiplicity.size()) - 1;
            auto check = verify_packing_models(w.host, w.pattern, w.models, bound);
            json models = json::array();
            for (auto& mm : w.models) models.push_back(model_json(mm));
            emit({{"size", w.models.size()},
                  {"max_multiplicity", bound},
                  {"verified", check.ok},
                  {"host_vertices", w.host.n()},
                  {"models", models}});
        } else if (decorate_cmd->parsed()) {
            auto dec = decorate(read_cgf_file(graph_path), r, caps);
            json tags = json::array();
            for (auto& t : dec.tags) tags.push_back({{"owner", t.owner}, {"color", t.color}, {"vertices", t.vertices}});
            if (!out_path.empty()) write_text(out_path, serialize_cgf(dec.graph));
            emit({{"graph", serialize_cgf(dec.graph)}, {"core", dec.core}, {"tags", tags}});
        } else if (reduce->parsed()) {
            auto res = reduced_minor_model(read_cgf_file(host_path), read_cgf_file(pattern_path), r, caps);
            emit({{"contains", res.contains},
                  {"decorated_host_vertices", res.host.graph.n()},
                  {"decorated_pattern_vertices", res.pattern.graph.n()},
                  {"model", res.model ? model_json(*res.model) : json(nullptr)}});
        }
        return 0;
    } catch (const CapExceeded& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
