#pragma once

// C_k-freeness certification.
//
// Brute mode runs the exact search on the whole graph.  Structural mode
// uses a 2-vertex cut {x, y}: removing it splits H into blocks, and a cycle
// of H either stays inside one block graph H[B + {x, y}] or consists of two
// internally disjoint x-y paths taken from two different blocks.  Hence
//
//     circumference(H) = max( max_B c(H[B + xy]),  p_1 + p_2 )
//
// where p_1 >= p_2 are the longest x-y path lengths of two distinct blocks.
// Blocks with identical local structure are searched once.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckfree/construction.hpp"
#include "ckfree/graph.hpp"
#include "ckfree/search.hpp"

namespace ckfree {

enum class CertifyMode { brute, structural };

inline const char* to_string(CertifyMode m) {
    return m == CertifyMode::brute ? "brute" : "structural";
}

struct CertifyOptions {
    SearchBudget budget;
    // Substitute the closed forms 7 * 2^(i-2) and 3 * 2^(i-1) for blocks
    // whose search runs out of budget.  Results are flagged lemma_backed.
    bool allow_lemma = false;
    unsigned level = 0;  // block level for the closed forms; 0 = unknown
};

struct BlockSummary {
    std::size_t first_block = 0;  // index of the representative block
    std::size_t multiplicity = 0;
    std::size_t order = 0;  // vertices, hubs included
    std::size_t circumference = 0;
    std::optional<std::size_t> xy_path;  // longest x-y path avoiding edge xy
    bool exhaustive = true;
    bool lemma_backed = false;
    std::optional<CycleCertificate> cycle;  // in H's ids
    std::optional<PathCertificate> path;    // in H's ids
};

struct FreenessReport {
    std::uint64_t k = 0;
    CertifyMode mode = CertifyMode::brute;
    std::size_t circumference = 0;
    std::optional<CycleCertificate> witness;  // a longest cycle, in H's ids
    bool verdict = false;                     // no cycle of length exactly k
    bool conclusive = true;
    bool lemma_backed = false;
    std::size_t blocks = 0;
    std::size_t two_block_length = 0;  // p_1 + p_2, 0 when fewer than two blocks
    std::vector<BlockSummary> groups;
    std::uint64_t nodes = 0;
};

inline FreenessReport certify_brute(const Graph& h, std::uint64_t k, const SearchBudget& budget = {}) {
    FreenessReport r;
    r.k = k;
    r.mode = CertifyMode::brute;
    auto lc = longest_cycle(h, budget);
    r.nodes += lc.nodes;
    if (lc.best) {
        r.circumference = lc.best->length();
        r.witness = lc.best;
    }
    if (lc.exhaustive && r.circumference < k) {
        r.verdict = true;
        return r;
    }
    auto exact = has_cycle_of_length(h, k, budget);
    r.nodes += exact.nodes;
    r.verdict = !exact.best.has_value();
    r.conclusive = lc.exhaustive && exact.exhaustive;
    return r;
}

namespace detail {

struct BlockGraph {
    std::vector<VertexId> vertices;  // global ids; [0] = x, [1] = y
    Graph local;                      // includes x y when present in H
};

inline CycleCertificate to_global(const CycleCertificate& c, const std::vector<VertexId>& ids) {
    CycleCertificate out;
    for (VertexId v : c.vertices) out.vertices.push_back(ids[v]);
    return out;
}

inline PathCertificate to_global(const PathCertificate& p, const std::vector<VertexId>& ids) {
    PathCertificate out;
    for (VertexId v : p.vertices) out.vertices.push_back(ids[v]);
    return out;
}

}  // namespace detail

// Structural certification of `h` for the cut {x, y}.
inline FreenessReport certify_two_cut(const Graph& h, VertexId x, VertexId y, std::uint64_t k,
                                      const CertifyOptions& opt = {}) {
    if (x == y || x >= h.order() || y >= h.order())
        throw ContractError("hubs must be two distinct vertices");
    FreenessReport r;
    r.k = k;
    r.mode = CertifyMode::structural;

    // Components of H - {x, y}, each listed in increasing id order.
    std::vector<VertexId> comp(h.order(), kNoVertex);
    std::vector<std::vector<VertexId>> blocks;
    for (VertexId s = 0; s < h.order(); ++s) {
        if (s == x || s == y || comp[s] != kNoVertex) continue;
        const auto id = static_cast<VertexId>(blocks.size());
        std::vector<VertexId> members{s}, stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : h.neighbors(v))
                if (w != x && w != y && comp[w] == kNoVertex) {
                    comp[w] = id;
                    members.push_back(w);
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
    }
    r.blocks = blocks.size();
    const bool hub_edge = h.adjacent(x, y);

    // Local graphs, grouped by identical labelled edge lists.
    std::vector<VertexId> local(h.order(), kNoVertex);
    std::map<std::vector<Edge>, std::size_t> group_of;
    std::vector<detail::BlockGraph> reps;
    std::vector<std::size_t> second_block;  // a second member of each group, if any
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<VertexId> ids{x, y};
        ids.insert(ids.end(), blocks[b].begin(), blocks[b].end());
        for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<VertexId>(i);
        std::vector<Edge> es;
        if (hub_edge) es.emplace_back(0, 1);
        for (std::size_t i = 2; i < ids.size(); ++i)
            for (VertexId w : h.neighbors(ids[i]))
                if (local[w] != kNoVertex && (local[w] < 2 || local[w] > i))
                    es.emplace_back(std::min<VertexId>(local[w], i), std::max<VertexId>(local[w], i));
        for (VertexId v : ids) local[v] = kNoVertex;
        std::sort(es.begin(), es.end());

        auto [it, fresh] = group_of.try_emplace(es, r.groups.size());
        if (fresh) {
            BlockSummary s;
            s.first_block = b;
            s.order = ids.size();
            r.groups.push_back(s);
            reps.push_back({ids, Graph::from_edges(ids.size(), es)});
            second_block.push_back(SIZE_MAX);
        } else if (second_block[it->second] == SIZE_MAX) {
            second_block[it->second] = b;
        }
        ++r.groups[it->second].multiplicity;
    }

    // Per-group exact values.
    std::vector<std::vector<VertexId>> second_ids(reps.size());
    for (std::size_t q = 0; q < reps.size(); ++q) {
        BlockSummary& s = r.groups[q];
        const detail::BlockGraph& bg = reps[q];
        auto lc = longest_cycle(bg.local, opt.budget);
        r.nodes += lc.nodes;
        if (lc.best) {
            s.circumference = lc.best->length();
            s.cycle = detail::to_global(*lc.best, bg.vertices);
        }
        s.exhaustive = lc.exhaustive;
        const Graph open = hub_edge ? bg.local.without_edge(0, 1) : bg.local;
        auto lp = longest_path_between(open, 0, 1, opt.budget);
        r.nodes += lp.nodes;
        if (lp.best) {
            s.xy_path = lp.best->length();
            s.path = detail::to_global(*lp.best, bg.vertices);
        }
        s.exhaustive = s.exhaustive && lp.exhaustive;
        if (!s.exhaustive && opt.allow_lemma && opt.level >= 1) {
            const unsigned i = opt.level;
            s.circumference = i >= 2 ? 7u << (i - 2) : 4u;
            s.xy_path = std::size_t{3} << (i - 1);
            s.lemma_backed = true;
        }
        if (second_block[q] != SIZE_MAX) {
            second_ids[q] = {x, y};
            second_ids[q].insert(second_ids[q].end(), blocks[second_block[q]].begin(),
                                 blocks[second_block[q]].end());
        }
    }

    // Single-block cycles.
    std::size_t best_group = SIZE_MAX;
    for (std::size_t q = 0; q < r.groups.size(); ++q)
        if (best_group == SIZE_MAX || r.groups[q].circumference > r.groups[best_group].circumference)
            best_group = q;
    if (best_group != SIZE_MAX) {
        r.circumference = r.groups[best_group].circumference;
        r.witness = r.groups[best_group].cycle;
    }

    // Two-block cycles: the two longest x-y paths from distinct blocks.
    struct Pick {
        std::size_t length, group;
        bool second_copy;
    };
    std::vector<Pick> picks;
    for (std::size_t q = 0; q < r.groups.size(); ++q) {
        if (!r.groups[q].xy_path) continue;
        picks.push_back({*r.groups[q].xy_path, q, false});
        if (r.groups[q].multiplicity >= 2) picks.push_back({*r.groups[q].xy_path, q, true});
    }
    std::stable_sort(picks.begin(), picks.end(),
                     [](const Pick& a, const Pick& b) { return a.length > b.length; });
    if (picks.size() >= 2) {
        r.two_block_length = picks[0].length + picks[1].length;
        if (r.two_block_length > r.circumference) {
            r.circumference = r.two_block_length;
            const BlockSummary& a = r.groups[picks[0].group];
            const BlockSummary& b = r.groups[picks[1].group];
            if (a.path && b.path && !a.lemma_backed && !b.lemma_backed) {
                std::vector<VertexId> pa = a.path->vertices;
                std::vector<VertexId> pb = b.path->vertices;
                if (picks[1].second_copy) {
                    // Same local path, mapped into the group's second block.
                    const auto& ids = second_ids[picks[1].group];
                    const auto& rep = reps[picks[1].group].vertices;
                    std::vector<VertexId> back(h.order(), kNoVertex);
                    for (std::size_t i = 0; i < rep.size(); ++i) back[rep[i]] = static_cast<VertexId>(i);
                    for (VertexId& v : pb) v = ids[back[v]];
                }
                CycleCertificate c;
                c.vertices = pa;  // x .. y
                for (std::size_t i = pb.size() - 1; i-- > 1;) c.vertices.push_back(pb[i]);
                r.witness = canonical_cycle(std::move(c));
            } else {
                r.witness.reset();
            }
        }
    }

    for (const auto& s : r.groups) {
        r.conclusive = r.conclusive && (s.exhaustive || s.lemma_backed);
        r.lemma_backed = r.lemma_backed || s.lemma_backed;
    }
    if (r.witness && !validate_cycle(h, *r.witness))
        throw StructuralError("structural witness failed independent validation");

    if (!r.conclusive) return r;
    if (r.circumference < k) {
        r.verdict = true;
        return r;
    }
    if (r.lemma_backed) {
        // Closed forms only give the maximum, not every achievable length.
        r.conclusive = false;
        return r;
    }

    // circumference >= k: decide exactly whether some cycle has length k.
    bool found = false;
    std::vector<std::vector<char>> lengths(reps.size());
    for (std::size_t q = 0; q < reps.size() && !found; ++q) {
        auto hk = has_cycle_of_length(reps[q].local, k, opt.budget);
        r.nodes += hk.nodes;
        if (!hk.exhaustive) r.conclusive = false;
        if (hk.best) found = true;
        const Graph open = hub_edge ? reps[q].local.without_edge(0, 1) : reps[q].local;
        auto pl = path_lengths_between(open, 0, 1, opt.budget);
        r.nodes += pl.nodes;
        if (!pl.exhaustive) r.conclusive = false;
        lengths[q] = *pl.best;
    }
    for (std::size_t a = 0; a < reps.size() && !found; ++a)
        for (std::size_t b = a; b < reps.size() && !found; ++b) {
            if (a == b && r.groups[a].multiplicity < 2) continue;
            for (std::size_t la = 1; la < lengths[a].size() && la < k; ++la)
                if (lengths[a][la] && k - la < lengths[b].size() && lengths[b][k - la]) found = true;
        }
    r.verdict = !found;
    return r;
}

// Structural certification of the extremal graph H(n, k).
inline FreenessReport certify_ck_free_structural(const ExtremalConstruction& h, CertifyOptions opt = {}) {
    if (opt.level == 0) opt.level = h.plan.level;
    return certify_two_cut(h.graph.abstract(), h.x, h.y, h.plan.k, opt);
}

}  // namespace ckfree
