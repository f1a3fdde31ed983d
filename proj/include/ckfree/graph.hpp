#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ckfree/errors.hpp"

namespace ckfree {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph with sorted adjacency lists.  This is the
// embedding-free view used by the search and by graph6.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    // Builds from an edge list; endpoints are normalised, loops and
    // repeated edges are rejected.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw StructuralError("edge endpoint out of range");
            if (u == v)
                throw StructuralError("loop at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& a : g.adj_) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw StructuralError("parallel edge");
        }
        g.m_ = edges.size();
        return g;
    }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return m_; }

    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
    std::size_t degree(VertexId v) const { return adj_[v].size(); }

    bool adjacent(VertexId u, VertexId v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Edges (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (VertexId u = 0; u < order(); ++u)
            for (VertexId v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced on `vertices`; local id i corresponds to vertices[i].
    Graph induced(std::span<const VertexId> vertices) const {
        std::vector<VertexId> local(order(), kNoVertex);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            local[vertices[i]] = static_cast<VertexId>(i);
        std::vector<Edge> es;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (VertexId w : adj_[vertices[i]])
                if (local[w] != kNoVertex && local[w] > i)
                    es.emplace_back(static_cast<VertexId>(i), local[w]);
        return from_edges(vertices.size(), es);
    }

    Graph without_edge(VertexId u, VertexId v) const {
        auto es = edges();
        std::erase(es, Edge{std::min(u, v), std::max(u, v)});
        return from_edges(order(), es);
    }

    bool connected() const {
        if (order() == 0) return true;
        std::vector<char> seen(order(), 0);
        std::vector<VertexId> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == order();
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adj_;
    std::size_t m_ = 0;
};

}  // namespace ckfree
