#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ckfree/errors.hpp"
#include "ckfree/planar.hpp"

namespace ckfree {

inline constexpr std::uint64_t kDefaultVertexLimit = 10'000'000;

// 3^e, or nullopt on overflow.
inline std::optional<std::uint64_t> checked_pow3(unsigned e) {
    std::uint64_t p = 1;
    for (unsigned t = 0; t < e; ++t) {
        if (p > std::numeric_limits<std::uint64_t>::max() / 3) return std::nullopt;
        p *= 3;
    }
    return p;
}

// |V(T_i)| = (3^i + 5) / 2.
inline std::uint64_t moon_moser_order(unsigned level) {
    auto p = checked_pow3(level);
    if (!p || *p > std::numeric_limits<std::uint64_t>::max() - 5)
        throw DomainError("level " + std::to_string(level) + " too large");
    return (*p + 5) / 2;
}

// Largest i with 3 * 2^(i-1) < k / 2, i.e. 3 * 2^i < k.
inline unsigned choose_level(std::uint64_t k) {
    if (k < 7) throw DomainError("forbidden cycle length k must be at least 7");
    unsigned i = 1;
    while (i + 2 < 64 && (std::uint64_t{3} << (i + 1)) < k) ++i;
    return i;
}

// ceil(log2(k / 3)) - 1 in floating point; kept only as a cross-check of
// choose_level.
inline int choose_level_float(std::uint64_t k) {
    return static_cast<int>(std::ceil(std::log2(static_cast<double>(k) / 3.0))) - 1;
}

struct Insertion {
    std::array<VertexId, 3> face;  // boundary walk of the subdivided face
    VertexId vertex;
    unsigned level;
};

struct MoonMoserGraph {
    unsigned level = 0;
    EmbeddedGraph graph;
    VertexId x = 0, y = 1, z = 2;
    std::vector<Insertion> insertion_log;
};

namespace detail {

// K_4 on x=0, y=1, z=2 and centre 3.  The outer face traces (x, z, y).
inline EmbeddedGraph k4_embedding() {
    return EmbeddedGraph::from_rotations({{2, 3, 1}, {0, 3, 2}, {1, 3, 0}, {1, 0, 2}}, 0, 2);
}

// Replays `insertions` face subdivisions starting from K_4.  Inner faces
// are processed first-in first-out, so the first 3 + 9 + ... + 3^(i-2)
// insertions produce exactly T_i and every prefix is a triangulation.
inline MoonMoserGraph replay_insertions(unsigned level, std::uint64_t insertions) {
    MoonMoserGraph t;
    t.level = level;
    t.graph = k4_embedding();
    t.insertion_log.reserve(insertions);

    std::vector<DartId> queue;
    queue.reserve(3 + 3 * insertions);
    for (auto [a, b] : {std::pair<VertexId, VertexId>{0, 1}, {1, 2}, {2, 0}})
        queue.push_back(*t.graph.find_dart(a, b));

    // Level l performs 3^(l-1) insertions.
    std::size_t head = 0;
    std::uint64_t level_begin = 0, level_width = 3;
    unsigned current = 2;
    for (std::uint64_t step = 0; step < insertions; ++step) {
        if (step == level_begin + level_width) {
            level_begin += level_width;
            level_width *= 3;
            ++current;
        }
        const DartId ab = queue[head++];
        const DartId bc = t.graph.face_next(ab), ca = t.graph.face_next(bc);
        const std::array<VertexId, 3> face{t.graph.tail(ab), t.graph.tail(bc), t.graph.tail(ca)};
        VertexId u = kNoVertex;
        t.graph = add_vertex_in_face(std::move(t.graph), ab, &u);
        t.insertion_log.push_back({face, u, current});
        queue.push_back(ab);
        queue.push_back(bc);
        queue.push_back(ca);
    }
    return t;
}

}  // namespace detail

// T_i as a labelled triangulation with its insertion history.
inline MoonMoserGraph moon_moser(unsigned level, std::uint64_t vertex_limit = kDefaultVertexLimit) {
    if (level < 1) throw DomainError("Moon-Moser level must be at least 1");
    const std::uint64_t order = moon_moser_order(level);
    if (order > vertex_limit)
        throw ResourceError("T_" + std::to_string(level) + " has " + std::to_string(order) +
                            " vertices, above the limit of " + std::to_string(vertex_limit));
    return detail::replay_insertions(level, order - 4);
}

// The triangulation on `vertices` vertices obtained by replaying the first
// vertices - 4 insertions of moon_moser(level).
inline MoonMoserGraph truncated_moon_moser(unsigned level, std::uint64_t vertices,
                                           std::uint64_t vertex_limit = kDefaultVertexLimit) {
    if (level < 1) throw DomainError("Moon-Moser level must be at least 1");
    const std::uint64_t order = moon_moser_order(level);
    if (vertices < 4 || vertices > order)
        throw DomainError("truncation size " + std::to_string(vertices) + " outside [4, " +
                          std::to_string(order) + "]");
    if (vertices > vertex_limit) throw ResourceError("truncation above the vertex limit");
    return detail::replay_insertions(level, vertices - 4);
}

struct BlockPlan {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    unsigned level = 0;                  // i
    std::uint64_t blocks = 0;            // s
    std::uint64_t last_block_order = 0;  // v_s

    std::uint64_t block_order() const { return moon_moser_order(level); }
    // Vertices a full block contributes besides the hubs: (3^i + 1) / 2.
    std::uint64_t block_interior() const { return block_order() - 2; }
    friend bool operator==(const BlockPlan&, const BlockPlan&) = default;
};

inline BlockPlan block_plan(std::uint64_t n, std::uint64_t k) {
    BlockPlan p;
    p.n = n;
    p.k = k;
    p.level = choose_level(k);
    const std::uint64_t full = moon_moser_order(p.level);
    if (n < full)
        throw DomainError("n = " + std::to_string(n) + " is below (3^i + 5) / 2 = " +
                          std::to_string(full) + " for k = " + std::to_string(k));
    const std::uint64_t per = full - 2;
    p.blocks = (n - 2 + per - 1) / per;
    p.last_block_order = n - (p.blocks - 1) * per;
    return p;
}

inline std::uint64_t exact_edge_count(std::uint64_t n, std::uint64_t k) {
    const BlockPlan p = block_plan(n, k);
    return 3 * n - 6 - (p.blocks - 1);
}

struct BlockLabels {
    VertexId z = kNoVertex;
    std::optional<VertexId> w;  // absent for a triangle block
    VertexId interior_begin = 0, interior_end = 0;
    std::uint64_t order() const { return interior_end - interior_begin + 2; }
};

struct ExtremalConstruction {
    BlockPlan plan;
    EmbeddedGraph graph;
    VertexId x = 0, y = 1;
    std::vector<BlockLabels> blocks;
};

namespace detail {

inline EmbeddedGraph triangle_embedding() {
    return EmbeddedGraph::from_rotations({{2, 1}, {0, 2}, {1, 0}}, 0, 2);
}

struct OpenBlock {
    EmbeddedGraph minus_xy;  // H_j^-
    std::optional<VertexId> w;
};

// Deletes x y = 0 1 from a labelled block triangulation, remembering the
// apex of the inner face on x y.
inline OpenBlock open_block(const EmbeddedGraph& block) {
    OpenBlock out;
    if (block.order() >= 4) {
        const DartId xy = *block.find_dart(0, 1);
        const FaceWalk inner = block.face_walk(xy);
        const FaceWalk outer = block.face_walk(EmbeddedGraph::twin(xy));
        if (inner.length() != 3 || outer.length() != 3 || outer.boundary[2] != 2)
            throw StructuralError("edge x y must lie on the outer triangle and one inner triangle");
        out.w = inner.boundary[2];
    }
    out.minus_xy = delete_edge(block, 0, 1);
    return out;
}

}  // namespace detail

// H(n, k): s blocks glued at hubs x and y, plus the edge x y.  At x the
// block rotations are concatenated in order 1..s and at y in order s..1,
// which makes each gap between consecutive blocks the quadrilateral
// face (x, w_j, y, z_{j+1}).  The outer face is the triangle (x, z_1, y).
inline ExtremalConstruction build_construction(std::uint64_t n, std::uint64_t k,
                                               std::uint64_t vertex_limit = kDefaultVertexLimit) {
    ExtremalConstruction h;
    h.plan = block_plan(n, k);
    if (n > vertex_limit)
        throw ResourceError("n = " + std::to_string(n) + " above the vertex limit");
    const BlockPlan& p = h.plan;
    const std::uint64_t full = p.block_order();

    const detail::OpenBlock full_block = detail::open_block(moon_moser(p.level, vertex_limit).graph);
    std::optional<detail::OpenBlock> last_block;
    if (p.last_block_order == 3)
        last_block = detail::open_block(detail::triangle_embedding());
    else if (p.last_block_order < full)
        last_block = detail::open_block(truncated_moon_moser(p.level, p.last_block_order).graph);

    std::vector<EmbeddedGraph> parts;
    parts.reserve(p.blocks);
    for (std::uint64_t j = 0; j < p.blocks; ++j)
        parts.push_back(j + 1 == p.blocks && last_block ? last_block->minus_xy : full_block.minus_xy);

    const IdentifyGroup hub_x{std::vector<VertexId>(p.blocks, 0), false};
    const IdentifyGroup hub_y{std::vector<VertexId>(p.blocks, 1), true};
    const std::array<IdentifyGroup, 2> groups{hub_x, hub_y};
    EmbeddedGraph glued = identify_vertices(parts, groups);

    // Labels: local ids 2.. of block j occupy a contiguous new-id range.
    VertexId next = 2;
    for (std::uint64_t j = 0; j < p.blocks; ++j) {
        const bool last = j + 1 == p.blocks && last_block;
        const std::uint64_t order = last ? p.last_block_order : full;
        BlockLabels b;
        b.interior_begin = next;
        b.interior_end = static_cast<VertexId>(next + order - 2);
        b.z = next;  // local id 2
        const auto& w = last ? last_block->w : full_block.w;
        if (w) b.w = static_cast<VertexId>(next + *w - 2);
        h.blocks.push_back(b);
        next = b.interior_end;
    }

    const DartId wrap = *glued.find_dart(h.x, h.blocks.front().z);
    glued = add_edge_in_face(std::move(glued), wrap, h.x, h.y);
    h.graph = glued.with_outer(h.x, h.blocks.front().z);
    return h;
}

struct CompletionEdgeSet {
    std::vector<Edge> edges;  // (w_j, z_{j+1})
};

inline CompletionEdgeSet completion_edges(const ExtremalConstruction& h) {
    CompletionEdgeSet out;
    for (std::size_t j = 0; j + 1 < h.blocks.size(); ++j)
        out.edges.emplace_back(h.blocks[j].w.value(), h.blocks[j + 1].z);
    return out;
}

// H with every completion edge inserted into its quadrilateral face.
inline EmbeddedGraph complete(const ExtremalConstruction& h) {
    EmbeddedGraph g = h.graph;
    for (auto [w, z] : completion_edges(h).edges) {
        auto d = g.find_dart(w, h.x);
        if (!d) throw StructuralError("w_j is not adjacent to x");
        g = add_edge_in_face(std::move(g), *d, w, z);
    }
    return g;
}

inline bool verify_completion(const ExtremalConstruction& h) {
    const EmbeddedGraph g = complete(h);
    return g.size() == 3 * h.plan.n - 6 && is_triangulation(g);
}

}  // namespace ckfree
