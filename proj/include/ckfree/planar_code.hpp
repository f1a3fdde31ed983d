#pragma once

// Line-oriented text format carrying an embedding and its labels.
//
//     ckfree-planar 1
//     order <n> size <m>
//     outer <u> <v>
//     <v>: <neighbours of v in rotation order>      (n lines, v = 0..n-1)
//     labels <count>
//     <name> <vertex>                               (count lines)
//     end
//
// The outer face is the face traced from the dart u -> v.  Each rotation
// line starts at the vertex's first dart, so encoding is byte-exact across
// a round trip.

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ckfree/construction.hpp"
#include "ckfree/errors.hpp"
#include "ckfree/planar.hpp"

namespace ckfree {

inline constexpr const char* kPlanarCodeMagic = "ckfree-planar 1";

using LabelSet = std::vector<std::pair<std::string, VertexId>>;

struct PlanarCodeRecord {
    EmbeddedGraph graph;
    LabelSet labels;
};

inline LabelSet moon_moser_labels(const MoonMoserGraph& t) {
    return {{"x", t.x}, {"y", t.y}, {"z", t.z}};
}

// x, y and the 1-based block labels z_j, w_j (w_j omitted for a triangle block).
inline LabelSet construction_labels(const ExtremalConstruction& h) {
    LabelSet out{{"x", h.x}, {"y", h.y}};
    for (std::size_t j = 0; j < h.blocks.size(); ++j) {
        const std::string idx = std::to_string(j + 1);
        if (h.blocks[j].w) out.emplace_back("w_" + idx, *h.blocks[j].w);
        out.emplace_back("z_" + idx, h.blocks[j].z);
    }
    return out;
}

inline std::optional<VertexId> find_label(const LabelSet& labels, std::string_view name) {
    for (const auto& [k, v] : labels)
        if (k == name) return v;
    return std::nullopt;
}

inline void write_planar(const EmbeddedGraph& g, const LabelSet& labels, std::ostream& out) {
    out << kPlanarCodeMagic << '\n';
    out << "order " << g.order() << " size " << g.size() << '\n';
    if (g.outer() == kNoDart)
        out << "outer - -\n";
    else
        out << "outer " << g.tail(g.outer()) << ' ' << g.head(g.outer()) << '\n';
    for (VertexId v = 0; v < g.order(); ++v) {
        out << v << ':';
        for (VertexId w : g.rotation(v)) out << ' ' << w;
        out << '\n';
    }
    out << "labels " << labels.size() << '\n';
    for (const auto& [name, v] : labels) out << name << ' ' << v << '\n';
    out << "end\n";
}

inline std::string encode_planar(const EmbeddedGraph& g, const LabelSet& labels = {}) {
    std::ostringstream os;
    write_planar(g, labels, os);
    return os.str();
}

// Offsets in ParseError are 1-based line numbers.
inline PlanarCodeRecord read_planar(std::istream& in) {
    std::size_t line_no = 0;
    std::string line;
    auto next_line = [&]() -> std::istringstream {
        if (!std::getline(in, line)) throw ParseError("unexpected end of planar-code input", line_no + 1);
        ++line_no;
        return std::istringstream(line);
    };
    auto fail = [&](const std::string& why) { throw ParseError(why, line_no); };

    next_line();
    if (line != kPlanarCodeMagic) fail("missing '" + std::string(kPlanarCodeMagic) + "' header");

    std::size_t n = 0, m = 0;
    {
        auto ls = next_line();
        std::string a, b;
        if (!(ls >> a >> n >> b >> m) || a != "order" || b != "size") fail("expected 'order <n> size <m>'");
    }
    VertexId ot = kNoVertex, oh = kNoVertex;
    {
        auto ls = next_line();
        std::string tag, u, v;
        if (!(ls >> tag >> u >> v) || tag != "outer") fail("expected 'outer <u> <v>'");
        if (u != "-") {
            try {
                ot = static_cast<VertexId>(std::stoul(u));
                oh = static_cast<VertexId>(std::stoul(v));
            } catch (const std::exception&) {
                fail("malformed outer dart");
            }
        }
    }
    std::vector<std::vector<VertexId>> rot(n);
    const std::size_t first_rotation_line = line_no + 1;
    std::size_t darts = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto ls = next_line();
        std::string tag;
        if (!(ls >> tag) || tag != std::to_string(v) + ":") fail("expected rotation line for vertex " + std::to_string(v));
        long long w;
        while (ls >> w) {
            if (w < 0 || static_cast<std::size_t>(w) >= n) fail("neighbour out of range");
            rot[v].push_back(static_cast<VertexId>(w));
        }
        if (!ls.eof()) fail("malformed rotation entry");
        darts += rot[v].size();
    }
    if (darts != 2 * m) fail("rotation lists do not match the stated size");
    LabelSet labels;
    {
        auto ls = next_line();
        std::string tag;
        std::size_t count = 0;
        if (!(ls >> tag >> count) || tag != "labels") fail("expected 'labels <count>'");
        for (std::size_t t = 0; t < count; ++t) {
            auto lt = next_line();
            std::string name;
            std::size_t v = 0;
            if (!(lt >> name >> v) || v >= n) fail("malformed label line");
            labels.emplace_back(name, static_cast<VertexId>(v));
        }
    }
    next_line();
    if (line != "end") fail("expected 'end'");

    PlanarCodeRecord rec;
    try {
        rec.graph = EmbeddedGraph::from_rotations(rot, ot, oh);
    } catch (const StructuralError& e) {
        throw ParseError(std::string("inconsistent rotation system: ") + e.what(), first_rotation_line);
    }
    rec.labels = std::move(labels);
    return rec;
}

inline PlanarCodeRecord decode_planar(const std::string& text) {
    std::istringstream is(text);
    return read_planar(is);
}

}  // namespace ckfree
