#pragma once

// Exact branch-and-bound search for long cycles and paths.
//
// Every search grows a simple path p = (p_0, ..., e) and asks how many more
// vertices could still be placed between e and the target t (the start
// vertex for cycles, the far endpoint for paths).  Two admissible bounds
// are combined; neither ever discards an extension that could beat the
// incumbent.
//
//  * Block bound.  Let A be the unvisited usable vertices.  Every e-t path
//    through A lies inside the biconnected component of G[A + {e, t}] + et
//    that contains the virtual edge et, so only that component's vertices
//    can be used.
//
//  * Slot bound.  Fix an independent set I.  On the remaining sequence
//    e, r_1, ..., r_m, t no two consecutive vertices lie in I, so with a
//    vertices outside I among the r's, at most a + 1 of the r's are in I
//    (one fewer for each of e, t that is itself in I).
//
// Cycles are enumerated in canonical form: the start is the smallest
// vertex and the second vertex is smaller than the last.  Neighbours are
// tried in increasing order, so the first optimum found is the
// lexicographically smallest canonical certificate.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ckfree/graph.hpp"

namespace ckfree {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit = 600.0;  // seconds
};

struct CycleCertificate {
    std::vector<VertexId> vertices;  // cyclic order
    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const CycleCertificate&, const CycleCertificate&) = default;
};

struct PathCertificate {
    std::vector<VertexId> vertices;  // from one endpoint to the other
    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
    friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

template <class Certificate>
struct SearchResult {
    std::optional<Certificate> best;  // best found; absent if none exists (or none found)
    bool exhaustive = true;           // false: budget ran out, best may not be optimal
    std::uint64_t nodes = 0;
};

inline bool validate_cycle(const Graph& g, const CycleCertificate& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) return false;
    std::vector<char> seen(g.order(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.order() || seen[vs[i]]) return false;
        seen[vs[i]] = 1;
        if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    }
    return true;
}

inline bool validate_path(const Graph& g, const PathCertificate& p, VertexId a, VertexId b) {
    const auto& vs = p.vertices;
    if (vs.size() < 2 || vs.front() != a || vs.back() != b) return false;
    std::vector<char> seen(g.order(), 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] >= g.order() || seen[vs[i]]) return false;
        seen[vs[i]] = 1;
        if (i + 1 < vs.size() && !g.adjacent(vs[i], vs[i + 1])) return false;
    }
    return true;
}

// Rotates and orients a cycle so it starts at its smallest vertex and the
// second vertex is smaller than the last.
inline CycleCertificate canonical_cycle(CycleCertificate c) {
    auto& vs = c.vertices;
    if (vs.size() < 3) return c;
    std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
    if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
    return c;
}

namespace detail {

class PathSearch {
public:
    PathSearch(const Graph& g, SearchBudget budget)
    : g_(g), budget_(budget), n_(g.order()), on_path_(n_, 0), usable_(n_, 1),
      in_set_(n_, 0), disc_(n_, 0), low_(n_, 0), epoch_(n_, 0), started_(std::chrono::steady_clock::now()) {
        // Greedy independent set, smallest degree first.
        std::vector<VertexId> order(n_);
        for (VertexId v = 0; v < n_; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
        std::vector<char> blocked(n_, 0);
        for (VertexId v : order) {
            if (blocked[v]) continue;
            in_set_[v] = 1;
            for (VertexId w : g.neighbors(v)) blocked[w] = 1;
        }
    }

    bool aborted() const noexcept { return aborted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

    // Longest cycle.  Returns length 0 when the graph is acyclic.
    std::optional<CycleCertificate> longest_cycle() {
        mode_ = Mode::longest_cycle;
        for (VertexId s = 0; s < n_ && !aborted_; ++s) {
            if (n_ - s <= best_len_) break;
            run_cycle_from(s);
        }
        if (best_.empty()) return std::nullopt;
        return CycleCertificate{best_};
    }

    std::optional<CycleCertificate> cycle_of_length(std::size_t k) {
        mode_ = Mode::exact_cycle;
        target_len_ = k;
        if (k < 3 || k > n_) return std::nullopt;
        for (VertexId s = 0; s + k <= n_ && !aborted_ && best_.empty(); ++s) run_cycle_from(s);
        if (best_.empty()) return std::nullopt;
        return CycleCertificate{best_};
    }

    std::optional<PathCertificate> longest_path(VertexId a, VertexId b) {
        mode_ = Mode::longest_path;
        target_ = b;
        std::fill(usable_.begin(), usable_.end(), 1);
        path_.assign(1, a);
        on_path_[a] = 1;
        extend_path(a);
        on_path_[a] = 0;
        if (best_.empty()) return std::nullopt;
        return PathCertificate{best_};
    }

    // Marks every achievable a-b path length (edge count) in `lengths`.
    void all_path_lengths(VertexId a, VertexId b, std::vector<char>& lengths) {
        mode_ = Mode::path_lengths;
        target_ = b;
        lengths_ = &lengths;
        lengths.assign(n_, 0);
        std::fill(usable_.begin(), usable_.end(), 1);
        path_.assign(1, a);
        on_path_[a] = 1;
        extend_path(a);
        on_path_[a] = 0;
    }

private:
    enum class Mode { longest_cycle, exact_cycle, longest_path, path_lengths };

    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.node_limit) aborted_ = true;
        if ((nodes_ & 0xfff) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - started_;
            if (dt.count() > budget_.time_limit) aborted_ = true;
        }
        return !aborted_;
    }

    // Upper bound on the number of vertices that can still be inserted
    // strictly between e and t, or -1 if t is unreachable.
    long remaining_bound(VertexId e, VertexId t) {
        // Tarjan's biconnected components restricted to usable, unvisited
        // vertices plus e and t, rooted at e with the virtual tree edge e-t.
        if (++stamp_ == 0) {
            std::fill(epoch_.begin(), epoch_.end(), 0);
            stamp_ = 1;
        }
        auto available = [&](VertexId w) {
            return w == e || w == t || (usable_[w] && !on_path_[w]);
        };
        std::uint32_t clock = 0;
        auto discover = [&](VertexId w) {
            epoch_[w] = stamp_;
            disc_[w] = low_[w] = ++clock;
        };
        auto seen = [&](VertexId w) { return epoch_[w] == stamp_; };

        discover(e);
        bool touches_e = false;
        frames_.clear();
        vstack_.clear();
        discover(t);
        frames_.push_back({t, e, 0});
        vstack_.push_back(t);
        while (!frames_.empty()) {
            Frame& f = frames_.back();
            auto nb = g_.neighbors(f.v);
            if (f.next < nb.size()) {
                const VertexId w = nb[f.next++];
                if (!available(w)) continue;
                if (w == e && f.v != t) touches_e = true;
                if (!seen(w)) {
                    discover(w);
                    vstack_.push_back(w);
                    frames_.push_back({w, f.v, 0});
                } else if (w != f.parent || w == e) {
                    low_[f.v] = std::min(low_[f.v], disc_[w]);
                }
            } else {
                const VertexId v = f.v, parent = f.parent;
                frames_.pop_back();
                if (frames_.empty()) break;
                low_[parent] = std::min(low_[parent], low_[v]);
                if (low_[v] >= disc_[parent]) {
                    // v's subtree hangs off parent through a cut vertex: drop it.
                    while (true) {
                        const VertexId w = vstack_.back();
                        vstack_.pop_back();
                        if (w == v) break;
                    }
                }
            }
        }
        // No real e-t connection outside the virtual edge.
        if (!touches_e && !g_.adjacent(e, t)) return -1;
        // vstack_ now holds t and the interior of the e-t component.
        long outside = 0, inside = 0;
        for (VertexId w : vstack_) {
            if (w == t) continue;
            (in_set_[w] ? inside : outside) += 1;
        }
        long gaps = outside + 1 - in_set_[e] - in_set_[t];
        if (gaps < 0) gaps = 0;
        return outside + std::min(inside, gaps);
    }

    void run_cycle_from(VertexId s) {
        for (VertexId v = 0; v < n_; ++v) usable_[v] = v > s;
        start_ = s;
        path_.assign(1, s);
        on_path_[s] = 1;
        for (VertexId u : g_.neighbors(s)) {
            if (u <= s) continue;
            if (aborted_ || (mode_ == Mode::exact_cycle && !best_.empty())) break;
            // The closing neighbour must exceed u.
            if (g_.neighbors(s).back() <= u) break;
            path_.push_back(u);
            on_path_[u] = 1;
            extend_cycle(u);
            on_path_[u] = 0;
            path_.pop_back();
        }
        on_path_[s] = 0;
    }

    void extend_cycle(VertexId e) {
        if (!tick()) return;
        const std::size_t len = path_.size();
        const bool closes = len >= 3 && e > path_[1] && g_.adjacent(e, start_);
        if (mode_ == Mode::exact_cycle) {
            if (len == target_len_) {
                if (closes) best_ = path_;
                return;
            }
        } else if (closes && len > best_len_) {
            best_ = path_;
            best_len_ = len;
        }
        const long extra = remaining_bound(e, start_);
        if (extra < 0) return;
        const std::size_t reach = len + static_cast<std::size_t>(extra);
        if (mode_ == Mode::exact_cycle ? reach < target_len_ : reach <= best_len_) return;
        for (VertexId w : g_.neighbors(e)) {
            if (!usable_[w] || on_path_[w]) continue;
            path_.push_back(w);
            on_path_[w] = 1;
            extend_cycle(w);
            on_path_[w] = 0;
            path_.pop_back();
            if (aborted_ || (mode_ == Mode::exact_cycle && !best_.empty())) return;
        }
    }

    void extend_path(VertexId e) {
        if (!tick()) return;
        const std::size_t edges = path_.size() - 1;
        if (e == target_) {
            if (mode_ == Mode::path_lengths) {
                (*lengths_)[edges] = 1;
            } else if (best_.empty() || edges > best_len_) {
                best_ = path_;
                best_len_ = edges;
            }
            return;
        }
        const long extra = remaining_bound(e, target_);
        if (extra < 0) return;
        if (mode_ == Mode::longest_path && !best_.empty() &&
            edges + static_cast<std::size_t>(extra) + 1 <= best_len_)
            return;
        for (VertexId w : g_.neighbors(e)) {
            if (on_path_[w]) continue;
            path_.push_back(w);
            on_path_[w] = 1;
            extend_path(w);
            on_path_[w] = 0;
            path_.pop_back();
            if (aborted_) return;
        }
    }

    struct Frame {
        VertexId v, parent;
        std::size_t next;
    };

    const Graph& g_;
    SearchBudget budget_;
    std::size_t n_;
    Mode mode_ = Mode::longest_cycle;
    std::vector<char> on_path_, usable_, in_set_;
    std::vector<std::uint32_t> disc_, low_, epoch_;
    std::uint32_t stamp_ = 0;
    std::vector<Frame> frames_;
    std::vector<VertexId> vstack_;
    std::vector<VertexId> path_, best_;
    std::size_t best_len_ = 0, target_len_ = 0;
    VertexId start_ = 0, target_ = 0;
    std::vector<char>* lengths_ = nullptr;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point started_;
};

}  // namespace detail

inline SearchResult<CycleCertificate> longest_cycle(const Graph& g, SearchBudget budget = {}) {
    detail::PathSearch search(g, budget);
    SearchResult<CycleCertificate> r;
    r.best = search.longest_cycle();
    r.exhaustive = !search.aborted();
    r.nodes = search.nodes();
    return r;
}

inline SearchResult<PathCertificate> longest_path_between(const Graph& g, VertexId a, VertexId b,
                                                          SearchBudget budget = {}) {
    if (a == b || a >= g.order() || b >= g.order())
        throw ContractError("path endpoints must be distinct vertices of the graph");
    detail::PathSearch search(g, budget);
    SearchResult<PathCertificate> r;
    r.best = search.longest_path(a, b);
    r.exhaustive = !search.aborted();
    r.nodes = search.nodes();
    return r;
}

// A cycle of exactly k vertices, if one exists.  `best` is absent and
// `exhaustive` true when the search proves there is none.
inline SearchResult<CycleCertificate> has_cycle_of_length(const Graph& g, std::size_t k,
                                                          SearchBudget budget = {}) {
    if (k < 3) throw ContractError("cycle length must be at least 3");
    detail::PathSearch search(g, budget);
    SearchResult<CycleCertificate> r;
    r.best = search.cycle_of_length(k);
    r.exhaustive = r.best.has_value() || !search.aborted();
    r.nodes = search.nodes();
    return r;
}

// lengths[l] is true iff some a-b path has exactly l edges.
inline SearchResult<std::vector<char>> path_lengths_between(const Graph& g, VertexId a, VertexId b,
                                                            SearchBudget budget = {}) {
    if (a == b || a >= g.order() || b >= g.order())
        throw ContractError("path endpoints must be distinct vertices of the graph");
    detail::PathSearch search(g, budget);
    SearchResult<std::vector<char>> r;
    std::vector<char> lengths;
    search.all_path_lengths(a, b, lengths);
    r.best = std::move(lengths);
    r.exhaustive = !search.aborted();
    r.nodes = search.nodes();
    return r;
}

}  // namespace ckfree
