#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "ckfree/graph.hpp"
#include "ckfree/planar_code.hpp"

namespace ckfree {

// Graphviz rendering.  Labelled vertices show their label; the hubs x and y
// are drawn as filled double circles.
inline void write_dot(const Graph& g, const LabelSet& labels, std::ostream& out,
                      const std::string& name = "G") {
    std::vector<std::string> text(g.order());
    for (const auto& [label, v] : labels)
        if (v < g.order()) text[v] = text[v].empty() ? label : text[v] + "," + label;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  " << v;
        const bool hub = text[v] == "x" || text[v] == "y";
        if (!text[v].empty()) {
            out << " [label=\"" << text[v] << "\"";
            if (hub) out << ", shape=doublecircle, style=filled, fillcolor=gray80";
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if ((text[u] == "x" && text[v] == "y") || (text[u] == "y" && text[v] == "x"))
            out << " [penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
}

inline std::string export_dot(const Graph& g, const LabelSet& labels, const std::string& name = "G") {
    std::ostringstream os;
    write_dot(g, labels, os, name);
    return os.str();
}

}  // namespace ckfree
