#pragma once

// Combinatorial embeddings of simple planar graphs.
//
// An embedding is stored as a half-edge structure: every undirected edge
// is a pair of darts d and d ^ 1, and the darts leaving a vertex form a
// doubly linked cyclic list (the rotation).  Faces are traced with
//
//     face_next(u -> v) = (v -> succ_v(u))
//
// so a face lies to the right of each of its darts.  With this rule the
// bounded faces of a drawing with counter-clockwise rotations come out
// clockwise, and the outer face counter-clockwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "ckfree/errors.hpp"
#include "ckfree/graph.hpp"

namespace ckfree {

using DartId = std::uint32_t;
inline constexpr DartId kNoDart = std::numeric_limits<DartId>::max();

struct FaceWalk {
    DartId start = kNoDart;
    std::vector<VertexId> boundary;

    std::size_t length() const noexcept { return boundary.size(); }
};

class EmbeddedGraph;

EmbeddedGraph add_vertex_in_face(EmbeddedGraph g, DartId face, VertexId* created = nullptr);
EmbeddedGraph add_edge_in_face(EmbeddedGraph g, DartId face, VertexId u, VertexId v);
EmbeddedGraph delete_edge(EmbeddedGraph g, VertexId u, VertexId v);

class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    // Builds an embedding from per-vertex cyclic neighbour orders.  The
    // outer face is the face traced from the dart outer_tail -> outer_head.
    // Throws StructuralError on loops, parallel edges, asymmetric lists,
    // disconnected input, or a rotation system that is not planar.
    static EmbeddedGraph from_rotations(const std::vector<std::vector<VertexId>>& rotations,
                                        VertexId outer_tail, VertexId outer_head) {
        EmbeddedGraph g;
        const std::size_t n = rotations.size();
        g.first_.assign(n, kNoDart);

        struct Slot {
            VertexId lo, hi, tail;
            std::uint32_t pos;
        };
        std::vector<Slot> slots;
        for (VertexId u = 0; u < n; ++u)
            for (std::uint32_t p = 0; p < rotations[u].size(); ++p) {
                VertexId v = rotations[u][p];
                if (v >= n)
                    throw StructuralError("neighbour " + std::to_string(v) + " of vertex " +
                                          std::to_string(u) + " out of range");
                if (v == u) throw StructuralError("loop at vertex " + std::to_string(u));
                slots.push_back({std::min(u, v), std::max(u, v), u, p});
            }
        std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
            return std::tie(a.lo, a.hi, a.tail) < std::tie(b.lo, b.hi, b.tail);
        });

        // dart_at[u][p] is the dart leaving u towards rotations[u][p].
        std::vector<std::vector<DartId>> dart_at(n);
        for (VertexId u = 0; u < n; ++u) dart_at[u].resize(rotations[u].size());
        std::size_t i = 0;
        while (i < slots.size()) {
            std::size_t j = i;
            while (j < slots.size() && slots[j].lo == slots[i].lo && slots[j].hi == slots[i].hi) ++j;
            const std::string name =
                std::to_string(slots[i].lo) + "-" + std::to_string(slots[i].hi);
            if (j - i == 1) throw StructuralError("asymmetric rotation system at edge " + name);
            if (j - i > 2 || slots[i].tail == slots[i + 1].tail)
                throw StructuralError("parallel edge " + name);
            const auto d = static_cast<DartId>(g.head_.size());
            g.head_.push_back(slots[i].hi);  // d: lo -> hi
            g.head_.push_back(slots[i].lo);  // d ^ 1: hi -> lo
            dart_at[slots[i].lo][slots[i].pos] = d;
            dart_at[slots[i + 1].tail][slots[i + 1].pos] = d ^ 1;
            i = j;
        }
        g.next_.resize(g.head_.size());
        g.prev_.resize(g.head_.size());
        for (VertexId u = 0; u < n; ++u) {
            const auto& ds = dart_at[u];
            for (std::size_t p = 0; p < ds.size(); ++p) {
                g.next_[ds[p]] = ds[(p + 1) % ds.size()];
                g.prev_[ds[p]] = ds[(p + ds.size() - 1) % ds.size()];
            }
            if (!ds.empty()) g.first_[u] = ds[0];
        }
        g.edges_ = g.head_.size() / 2;

        if (g.edges_ > 0) {
            auto outer = (outer_tail < n) ? g.find_dart(outer_tail, outer_head) : std::nullopt;
            if (!outer) throw StructuralError("outer dart is not an edge of the graph");
            g.outer_ = *outer;
        }
        g.check_invariants();
        return g;
    }

    std::size_t order() const noexcept { return first_.size(); }
    std::size_t size() const noexcept { return edges_; }
    std::size_t dart_capacity() const noexcept { return head_.size(); }

    bool live(DartId d) const { return head_[d] != kNoVertex; }
    VertexId head(DartId d) const { return head_[d]; }
    VertexId tail(DartId d) const { return head_[d ^ 1]; }
    static DartId twin(DartId d) noexcept { return d ^ 1; }
    // Next / previous dart around tail(d) in rotation order.
    DartId succ(DartId d) const { return next_[d]; }
    DartId pred(DartId d) const { return prev_[d]; }
    DartId face_next(DartId d) const { return next_[twin(d)]; }
    DartId first_dart(VertexId v) const { return first_[v]; }

    DartId outer() const noexcept { return outer_; }

    std::size_t degree(VertexId v) const {
        std::size_t deg = 0;
        for_each_dart(v, [&](DartId) { ++deg; });
        return deg;
    }

    // Cyclic neighbour order of v, starting at its first dart.
    std::vector<VertexId> rotation(VertexId v) const {
        std::vector<VertexId> out;
        for_each_dart(v, [&](DartId d) { out.push_back(head_[d]); });
        return out;
    }

    std::vector<std::vector<VertexId>> rotations() const {
        std::vector<std::vector<VertexId>> out(order());
        for (VertexId v = 0; v < order(); ++v) out[v] = rotation(v);
        return out;
    }

    template <class F>
    void for_each_dart(VertexId v, F&& f) const {
        const DartId start = first_[v];
        if (start == kNoDart) return;
        DartId d = start;
        do {
            f(d);
            d = next_[d];
        } while (d != start);
    }

    std::optional<DartId> find_dart(VertexId u, VertexId v) const {
        std::optional<DartId> found;
        for_each_dart(u, [&](DartId d) {
            if (!found && head_[d] == v) found = d;
        });
        return found;
    }

    bool adjacent(VertexId u, VertexId v) const { return find_dart(u, v).has_value(); }

    FaceWalk face_walk(DartId start) const {
        FaceWalk w{start, {}};
        DartId d = start;
        do {
            w.boundary.push_back(tail(d));
            d = face_next(d);
        } while (d != start);
        return w;
    }

    FaceWalk outer_face() const {
        if (outer_ == kNoDart) return {};
        return face_walk(outer_);
    }

    // Returns a copy whose outer face is the face traced from u -> v.
    EmbeddedGraph with_outer(VertexId u, VertexId v) const {
        auto d = find_dart(u, v);
        if (!d) throw ContractError("outer dart is not an edge of the graph");
        EmbeddedGraph g = *this;
        g.outer_ = *d;
        return g;
    }

    Graph abstract() const {
        std::vector<Edge> es;
        es.reserve(edges_);
        for (DartId d = 0; d < head_.size(); d += 2)
            if (live(d)) es.emplace_back(tail(d), head(d));
        return Graph::from_edges(order(), es);
    }

    std::size_t face_count() const {
        std::vector<char> seen(head_.size(), 0);
        std::size_t faces = 0;
        for (DartId d = 0; d < head_.size(); ++d) {
            if (!live(d) || seen[d]) continue;
            ++faces;
            DartId e = d;
            do {
                seen[e] = 1;
                e = face_next(e);
            } while (e != d);
        }
        return faces;
    }

    // Connected, and V - E + F = 2 (a planar rotation system).
    void check_invariants() const {
        if (order() == 0) return;
        if (!connected()) throw StructuralError("graph is not connected");
        if (edges_ == 0) return;
        const auto lhs = static_cast<long long>(order()) - static_cast<long long>(edges_) +
                         static_cast<long long>(face_count());
        if (lhs != 2)
            throw StructuralError("rotation system violates Euler's formula (V - E + F = " +
                                  std::to_string(lhs) + ")");
    }

    bool connected() const {
        std::vector<char> seen(order(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for_each_dart(v, [&](DartId d) {
                VertexId w = head_[d];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            });
        }
        return count == order();
    }

    // Same vertex count, same cyclic rotations, and the outer darts lie
    // on the same face.
    friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
        if (a.order() != b.order() || a.size() != b.size()) return false;
        for (VertexId v = 0; v < a.order(); ++v) {
            auto ra = a.rotation(v), rb = b.rotation(v);
            if (ra.size() != rb.size()) return false;
            if (!ra.empty()) {
                std::rotate(ra.begin(), std::min_element(ra.begin(), ra.end()), ra.end());
                std::rotate(rb.begin(), std::min_element(rb.begin(), rb.end()), rb.end());
            }
            if (ra != rb) return false;
        }
        if (a.outer_ == kNoDart || b.outer_ == kNoDart) return a.outer_ == b.outer_;
        const VertexId t = a.tail(a.outer_), h = a.head(a.outer_);
        DartId d = b.outer_;
        do {
            if (b.tail(d) == t && b.head(d) == h) return true;
            d = b.face_next(d);
        } while (d != b.outer_);
        return false;
    }

private:
    friend EmbeddedGraph add_vertex_in_face(EmbeddedGraph, DartId, VertexId*);
    friend EmbeddedGraph add_edge_in_face(EmbeddedGraph, DartId, VertexId, VertexId);
    friend EmbeddedGraph delete_edge(EmbeddedGraph, VertexId, VertexId);

    // Allocates the dart pair u -> v, v -> u without linking rotations.
    DartId new_pair(VertexId u, VertexId v) {
        const auto d = static_cast<DartId>(head_.size());
        head_.push_back(v);
        head_.push_back(u);
        next_.resize(head_.size(), kNoDart);
        prev_.resize(head_.size(), kNoDart);
        ++edges_;
        return d;
    }

    // Links the unattached dart nd into the rotation immediately before pos.
    void link_before(DartId pos, DartId nd) {
        const DartId p = prev_[pos];
        next_[p] = nd;
        prev_[nd] = p;
        next_[nd] = pos;
        prev_[pos] = nd;
    }

    void link_alone(VertexId v, DartId nd) {
        next_[nd] = prev_[nd] = nd;
        first_[v] = nd;
    }

    void unlink(DartId d) {
        const VertexId t = tail(d);
        if (next_[d] == d) {
            first_[t] = kNoDart;
        } else {
            next_[prev_[d]] = next_[d];
            prev_[next_[d]] = prev_[d];
            if (first_[t] == d) first_[t] = next_[d];
        }
        next_[d] = prev_[d] = kNoDart;
    }

    std::vector<VertexId> head_;
    std::vector<DartId> next_, prev_;
    std::vector<DartId> first_;
    DartId outer_ = kNoDart;
    std::size_t edges_ = 0;
};

inline std::vector<FaceWalk> face_walks(const EmbeddedGraph& g) {
    std::vector<FaceWalk> out;
    std::vector<char> seen(g.dart_capacity(), 0);
    for (DartId d = 0; d < g.dart_capacity(); ++d) {
        if (!g.live(d) || seen[d]) continue;
        FaceWalk w = g.face_walk(d);
        DartId e = d;
        do {
            seen[e] = 1;
            e = g.face_next(e);
        } while (e != d);
        out.push_back(std::move(w));
    }
    return out;
}

inline bool is_triangulation(const EmbeddedGraph& g) {
    if (g.order() < 3 || g.size() != 3 * g.order() - 6) return false;
    for (const auto& f : face_walks(g))
        if (f.length() != 3) return false;
    return true;
}

// All faces are triangles except the outer one, whose walk has outer_len darts.
inline bool is_near_triangulation(const EmbeddedGraph& g, std::size_t outer_len) {
    if (g.outer() == kNoDart || g.outer_face().length() != outer_len) return false;
    std::vector<char> on_outer(g.dart_capacity(), 0);
    DartId d = g.outer();
    do {
        on_outer[d] = 1;
        d = g.face_next(d);
    } while (d != g.outer());
    for (const auto& f : face_walks(g))
        if (!on_outer[f.start] && f.length() != 3) return false;
    return true;
}

// Inserts a new vertex into the triangular face traced from `face` and
// joins it to the three boundary vertices.  The new vertex gets id order().
inline EmbeddedGraph add_vertex_in_face(EmbeddedGraph g, DartId face, VertexId* created) {
    if (face >= g.dart_capacity() || !g.live(face)) throw ContractError("face dart is not live");
    const DartId ab = face, bc = g.face_next(ab), ca = g.face_next(bc);
    if (g.face_next(ca) != ab) throw ContractError("face is not a triangle");
    const VertexId a = g.tail(ab), b = g.tail(bc), c = g.tail(ca);
    const auto u = static_cast<VertexId>(g.order());
    g.first_.push_back(kNoDart);

    const DartId au = g.new_pair(a, u);
    const DartId bu = g.new_pair(b, u);
    const DartId cu = g.new_pair(c, u);
    g.link_before(ab, au);
    g.link_before(bc, bu);
    g.link_before(ca, cu);
    // Rotation at u is (b, a, c).
    const DartId ub = EmbeddedGraph::twin(bu), ua = EmbeddedGraph::twin(au),
                 uc = EmbeddedGraph::twin(cu);
    g.link_alone(u, ub);
    g.link_before(ub, uc);
    g.link_before(uc, ua);
    if (created) *created = u;
    return g;
}

// Adds the chord u v inside the face traced from `face`.  The outer dart
// is left unchanged.
inline EmbeddedGraph add_edge_in_face(EmbeddedGraph g, DartId face, VertexId u, VertexId v) {
    if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v))
        throw StructuralError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    DartId du = kNoDart, dv = kNoDart;
    DartId d = face;
    do {
        if (g.tail(d) == u && du == kNoDart) du = d;
        if (g.tail(d) == v && dv == kNoDart) dv = d;
        d = g.face_next(d);
    } while (d != face);
    if (du == kNoDart || dv == kNoDart) throw ContractError("chord endpoints not on the face");
    const DartId uv = g.new_pair(u, v);
    g.link_before(du, uv);
    g.link_before(dv, EmbeddedGraph::twin(uv));
    return g;
}

// Removes edge u v, merging its two faces.  If the outer dart was one of
// the removed darts the outer face moves to the merged face.
inline EmbeddedGraph delete_edge(EmbeddedGraph g, VertexId u, VertexId v) {
    auto found = g.find_dart(u, v);
    if (!found) throw ContractError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    const DartId d = *found, t = EmbeddedGraph::twin(d);
    if (g.outer_ == d || g.outer_ == t) {
        // The dart entering tail(outer) on the same face survives the removal.
        const DartId dead = g.outer_;
        DartId before = EmbeddedGraph::twin(g.prev_[dead]);
        if (before == d || before == t) before = EmbeddedGraph::twin(g.prev_[EmbeddedGraph::twin(dead)]);
        g.outer_ = before;
    }
    g.unlink(d);
    g.unlink(t);
    g.head_[d] = g.head_[t] = kNoVertex;
    --g.edges_;
    if (g.edges_ == 0) g.outer_ = kNoDart;
    if (!g.connected()) throw StructuralError("deleting the edge disconnects the graph");
    return g;
}

// One group of vertices to merge: members[j] is the vertex taken from
// graph j (kNoVertex if absent).  The merged rotation is the concatenation
// of each member's rotation, cut open at that graph's outer face, in
// graph order (or reverse graph order).
struct IdentifyGroup {
    std::vector<VertexId> members;
    bool reverse_order = false;
};

// Disjoint union of `graphs` with each group merged into one vertex.  New
// ids are assigned in graph-major order; a merged vertex takes the id of
// its first occurrence.  The result's outer dart is the image of graph 0's.
inline EmbeddedGraph identify_vertices(std::span<const EmbeddedGraph> graphs,
                                       std::span<const IdentifyGroup> groups) {
    const std::size_t count = graphs.size();
    if (count == 0) return {};
    std::vector<std::vector<VertexId>> group_of(count);
    for (std::size_t j = 0; j < count; ++j) group_of[j].assign(graphs[j].order(), kNoVertex);
    for (std::size_t q = 0; q < groups.size(); ++q) {
        if (groups[q].members.size() != count)
            throw ContractError("identify group must name one member per graph");
        for (std::size_t j = 0; j < count; ++j) {
            VertexId v = groups[q].members[j];
            if (v == kNoVertex) continue;
            if (v >= graphs[j].order()) throw ContractError("identify member out of range");
            if (group_of[j][v] != kNoVertex) throw ContractError("vertex in two identify groups");
            group_of[j][v] = static_cast<VertexId>(q);
        }
    }

    std::vector<std::vector<VertexId>> new_id(count);
    std::vector<VertexId> group_id(groups.size(), kNoVertex);
    VertexId next = 0;
    for (std::size_t j = 0; j < count; ++j) {
        new_id[j].resize(graphs[j].order());
        for (VertexId v = 0; v < graphs[j].order(); ++v) {
            const VertexId q = group_of[j][v];
            if (q == kNoVertex) {
                new_id[j][v] = next++;
            } else {
                if (group_id[q] == kNoVertex) group_id[q] = next++;
                new_id[j][v] = group_id[q];
            }
        }
    }

    std::vector<std::vector<VertexId>> rot(next);
    auto append_interval = [&](std::size_t j, VertexId v, std::vector<VertexId>& out) {
        const EmbeddedGraph& g = graphs[j];
        // Find p -> v -> q on the outer face; the interval runs q .. p.
        DartId start = kNoDart;
        if (g.outer() != kNoDart) {
            DartId d = g.outer();
            do {
                if (g.head(d) == v) {
                    start = g.face_next(d);
                    break;
                }
                d = g.face_next(d);
            } while (d != g.outer());
        }
        if (start == kNoDart) {
            if (g.size() == 0) return;
            throw ContractError("identified vertex is not on its graph's outer face");
        }
        DartId d = start;
        do {
            out.push_back(new_id[j][g.head(d)]);
            d = g.succ(d);
        } while (d != start);
    };
    for (std::size_t j = 0; j < count; ++j)
        for (VertexId v = 0; v < graphs[j].order(); ++v)
            if (group_of[j][v] == kNoVertex) {
                auto& r = rot[new_id[j][v]];
                for (VertexId w : graphs[j].rotation(v)) r.push_back(new_id[j][w]);
            }
    for (std::size_t q = 0; q < groups.size(); ++q) {
        if (group_id[q] == kNoVertex) continue;
        auto& r = rot[group_id[q]];
        for (std::size_t step = 0; step < count; ++step) {
            const std::size_t j = groups[q].reverse_order ? count - 1 - step : step;
            if (groups[q].members[j] != kNoVertex) append_interval(j, groups[q].members[j], r);
        }
    }

    VertexId ot = kNoVertex, oh = kNoVertex;
    if (graphs[0].outer() != kNoDart) {
        ot = new_id[0][graphs[0].tail(graphs[0].outer())];
        oh = new_id[0][graphs[0].head(graphs[0].outer())];
    }
    return EmbeddedGraph::from_rotations(rot, ot, oh);
}

}  // namespace ckfree
