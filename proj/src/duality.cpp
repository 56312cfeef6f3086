#include "chroma/duality.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

std::vector<int> model_vertices(const MinorModel& m) {
    std::vector<int> out;
    for (auto& b : m.branch_sets) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Host without the vertices in `removed`; keep[i] is the host id of vertex i.
ColorfulGraph without(const ColorfulGraph& g, const std::vector<bool>& removed, std::vector<int>& keep) {
    keep.clear();
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    return g.induced(keep);
}

// A minimal model in host minus `removed`, in host ids.
std::optional<std::vector<int>> minimal_model(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                              const std::vector<bool>& removed, const Caps& caps) {
    std::vector<int> keep;
    ColorfulGraph sub = without(host, removed, keep);
    auto m = find_colorful_minor(sub, pattern, caps);
    if (!m) return std::nullopt;
    MinorModel min = minimize_model(sub, pattern, *m);
    std::vector<int> out;
    for (int v : model_vertices(min)) out.push_back(keep[v]);
    // Containment is monotone, so a vertex that cannot go now never can: one pass.
    for (std::size_t i = 0; i < out.size();) {
        std::vector<int> rest = out;
        rest.erase(rest.begin() + static_cast<long>(i));
        if (contains_colorful_minor(host.induced(rest), pattern, caps))
            out = std::move(rest);
        else
            ++i;
    }
    return out;
}

void check_cover(const ColorfulGraph& host, const ColorfulGraph& pattern, const std::vector<int>& S, const Caps& caps) {
    std::vector<bool> rem(host.n(), false);
    for (int v : S) rem[v] = true;
    std::vector<int> keep;
    if (contains_colorful_minor(without(host, rem, keep), pattern, caps))
        throw std::logic_error("cover witness does not hit every model");
}

}  // namespace

VertexSets enumerate_minimal_models(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) return {{}};
    check_engine_caps(host, pattern, caps);
    if (host.n() > 64) throw CapExceeded("model enumeration limited to 64 vertices");
    auto mask_of = [](const std::vector<int>& s) {
        std::uint64_t m = 0;
        for (int v : s) m |= std::uint64_t{1} << v;
        return m;
    };
    std::set<std::vector<int>> found;
    std::vector<std::pair<std::uint64_t, const std::vector<int>*>> found_masks;
    std::unordered_set<std::uint64_t> visited;
    std::vector<bool> removed(host.n(), false);
    std::uint64_t removed_mask = 0;
    // Every other minimal model avoids some vertex of the one branched on, and any
    // minimal model avoiding the removed set will do, found earlier or not.
    std::function<void()> rec = [&]() {
        if (!visited.insert(removed_mask).second) return;
        const std::vector<int>* u = nullptr;
        for (auto& [m, set] : found_masks)
            if (!(m & removed_mask) && (!u || set->size() < u->size())) u = set;
        if (!u) {
            auto fresh = minimal_model(host, pattern, removed, caps);
            if (!fresh) return;
            auto [it, inserted] = found.insert(*fresh);
            if (static_cast<int>(found.size()) > caps.models)
                throw CapExceeded("more than " + std::to_string(caps.models) + " minimal models");
            found_masks.emplace_back(mask_of(*it), &*it);
            u = &*it;
        }
        for (int v : *u) {
            removed[v] = true;
            removed_mask |= std::uint64_t{1} << v;
            rec();
            removed[v] = false;
            removed_mask &= ~(std::uint64_t{1} << v);
        }
    };
    rec();
    return VertexSets(found.begin(), found.end());
}

PackResult pack_by_copies(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) throw PreconditionError("pattern must be nonempty");
    PackResult r;
    for (int m = 1; m * pattern.n() <= host.n(); ++m) {
        auto model = find_colorful_minor(host, multiply(pattern, m), caps);
        if (!model) break;
        r.pack = m;
        r.witnesses.clear();
        for (int c = 0; c < m; ++c) {
            std::vector<int> w;
            for (int a = 0; a < pattern.n(); ++a) {
                auto& b = model->branch_sets[c * pattern.n() + a];
                w.insert(w.end(), b.begin(), b.end());
            }
            std::sort(w.begin(), w.end());
            r.witnesses.push_back(w);
        }
    }
    return r;
}

CoverResult cover_by_branching(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) throw PreconditionError("pattern must be nonempty");
    std::vector<bool> removed(host.n(), false);
    std::vector<int> chosen;
    std::set<std::vector<bool>> failed;
    std::function<bool(int)> hit = [&](int budget) {
        auto u = minimal_model(host, pattern, removed, caps);
        if (!u) return true;
        if (budget == 0 || failed.count(removed)) return false;
        for (int v : *u) {
            removed[v] = true;
            chosen.push_back(v);
            if (hit(budget - 1)) return true;
            chosen.pop_back();
            removed[v] = false;
        }
        failed.insert(removed);
        return false;
    };
    for (int k = 0;; ++k) {
        failed.clear();
        if (hit(k)) {
            CoverResult r{k, chosen};
            std::sort(r.S.begin(), r.S.end());
            check_cover(host, pattern, r.S, caps);
            return r;
        }
    }
}

PackResult pack_number(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) throw PreconditionError("pattern must be nonempty");
    auto family = enumerate_minimal_models(host, pattern, caps);
    PackResult r;
    r.witnesses = max_set_packing(family);
    r.pack = static_cast<int>(r.witnesses.size());
    return r;
}

CoverResult cover_number(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) throw PreconditionError("pattern must be nonempty");
    CoverResult r;
    r.S = min_hitting_set(enumerate_minimal_models(host, pattern, caps));
    r.cover = static_cast<int>(r.S.size());
    check_cover(host, pattern, r.S, caps);
    return r;
}

PackCoverResult pack_cover(const ColorfulGraph& host, const ColorfulGraph& pattern, const Caps& caps) {
    if (pattern.n() == 0) throw PreconditionError("pattern must be nonempty");
    auto family = enumerate_minimal_models(host, pattern, caps);
    PackCoverResult r;
    r.witnesses = max_set_packing(family);
    r.pack = static_cast<int>(r.witnesses.size());
    r.S = min_hitting_set(family);
    r.cover = static_cast<int>(r.S.size());
    check_cover(host, pattern, r.S, caps);
    return r;
}

VertexSets max_set_packing(const VertexSets& family) {
    // Branch on the lowest-indexed remaining set: take it or drop it.
    std::vector<int> best, cur;
    int n = static_cast<int>(family.size());
    std::function<void(int, std::set<int>&)> rec = [&](int i, std::set<int>& used) {
        if (cur.size() + (n - i) <= best.size()) return;
        if (i == n) {
            best = cur;
            return;
        }
        bool free = true;
        for (int v : family[i])
            if (used.count(v)) free = false;
        if (free) {
            for (int v : family[i]) used.insert(v);
            cur.push_back(i);
            rec(i + 1, used);
            cur.pop_back();
            for (int v : family[i]) used.erase(v);
        }
        rec(i + 1, used);
    };
    std::set<int> used;
    rec(0, used);
    VertexSets out;
    for (int i : best) out.push_back(family[i]);
    return out;
}

std::vector<int> min_hitting_set(const VertexSets& family) {
    std::vector<int> best, cur;
    bool have = false;
    std::function<void()> rec = [&]() {
        if (have && cur.size() >= best.size()) return;
        const std::vector<int>* open = nullptr;
        for (auto& s : family) {
            bool hit = false;
            for (int v : s)
                if (std::find(cur.begin(), cur.end(), v) != cur.end()) hit = true;
            if (!hit && (!open || s.size() < open->size())) open = &s;
        }
        if (!open) {
            best = cur;
            have = true;
            return;
        }
        for (int v : *open) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(best.begin(), best.end());
    return best;
}

HalfIntegralWitness half_integral_witness(int q, int k, int r, const std::vector<int>& pi) {
    SegregatedSpec small{q, r, pi};
    SegregatedSpec big{q, k * r, pi};
    HalfIntegralWitness w{segregated_grid(big), segregated_grid(small), {}, {}, {}};
    w.models = segregated_packing(small, k, q >= 3).models;
    std::vector<int> count(w.host.n(), 0);
    for (auto& m : w.models) {
        w.subgraphs.push_back(model_vertices(m));
        for (int v : w.subgraphs.back()) ++count[v];
    }
    w.multiplicity.assign(*std::max_element(count.begin(), count.end()) + 1, 0);
    for (int c : count) ++w.multiplicity[c];
    return w;
}

namespace {

PackingCheck multiplicity_check(int n, const VertexSets& sets, int max_multiplicity) {
    std::vector<int> count(n, 0);
    for (auto& s : sets)
        for (int v : std::set<int>(s.begin(), s.end())) {
            if (v < 0 || v >= n) return {false, -1, "vertex outside the host"};
            if (++count[v] > max_multiplicity)
                return {false, -1, "vertex " + std::to_string(v) + " exceeds multiplicity " +
                                       std::to_string(max_multiplicity)};
        }
    return {};
}

}  // namespace

PackingCheck verify_packing(const ColorfulGraph& host, const ColorfulGraph& pattern, const VertexSets& witnesses,
                            int max_multiplicity, const Caps& caps) {
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        std::vector<int> w = witnesses[i];
        std::sort(w.begin(), w.end());
        w.erase(std::unique(w.begin(), w.end()), w.end());
        for (int v : w)
            if (v < 0 || v >= host.n()) return {false, static_cast<int>(i), "vertex outside the host"};
        if (!contains_colorful_minor(host.induced(w), pattern, caps))
            return {false, static_cast<int>(i), "witness does not contain the pattern"};
    }
    return multiplicity_check(host.n(), witnesses, max_multiplicity);
}

PackingCheck verify_packing_models(const ColorfulGraph& host, const ColorfulGraph& pattern,
                                   const std::vector<MinorModel>& models, int max_multiplicity) {
    VertexSets sets;
    for (std::size_t i = 0; i < models.size(); ++i) {
        std::string bad = model_violation(host, pattern, models[i]);
        if (!bad.empty()) return {false, static_cast<int>(i), bad};
        sets.push_back(model_vertices(models[i]));
    }
    return multiplicity_check(host.n(), sets, max_multiplicity);
}

}  // namespace chroma
