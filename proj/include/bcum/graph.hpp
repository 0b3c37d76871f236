#pragma once

// Small undirected labelled graphs: structural queries and DOT output.

#include <string>
#include <utility>
#include <vector>

namespace bcum {

struct Graph {
    std::vector<std::string> vertex_labels;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> edge_labels;  // parallel to edges

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<int> degrees() const;
    bool is_connected() const;
    bool is_bipartite() const;
    /// -1 if the graph is not regular.
    int regular_degree() const;
    /// Number of independent cycles, E - V + (components).
    int cycle_rank() const;
    int component_count() const;

    std::string to_dot(const std::string& name) const;
};

}  // namespace bcum
