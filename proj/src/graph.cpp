#include "bcum/graph.hpp"

#include <queue>

namespace bcum {

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (auto [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

// BFS 2-colouring; colour -1 marks unvisited. Returns the component count and
// whether every edge joins two colours.
std::pair<int, bool> colour_components(const Graph& g)
{
    const auto adj = adjacency(g);
    std::vector<int> colour(adj.size(), -1);
    int components = 0;
    bool bipartite = true;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (colour[s] >= 0)
            continue;
        ++components;
        colour[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (int w : adj[u]) {
                const auto v = static_cast<std::size_t>(w);
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    q.push(v);
                } else if (colour[v] == colour[u]) {
                    bipartite = false;
                }
            }
        }
    }
    return {components, bipartite};
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::vector<int> Graph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(vertex_count()), 0);
    for (auto [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

int Graph::component_count() const
{
    return colour_components(*this).first;
}

bool Graph::is_connected() const
{
    return component_count() <= 1;
}

bool Graph::is_bipartite() const
{
    return colour_components(*this).second;
}

int Graph::regular_degree() const
{
    const auto deg = degrees();
    if (deg.empty())
        return 0;
    for (int d : deg)
        if (d != deg.front())
            return -1;
    return deg.front();
}

int Graph::cycle_rank() const
{
    return edge_count() - vertex_count() + component_count();
}

std::string Graph::to_dot(const std::string& name) const
{
    std::string out = "graph \"" + escape(name) + "\" {\n";
    for (int v = 0; v < vertex_count(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + escape(vertex_labels[static_cast<std::size_t>(v)]) + "\"];\n";
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out += "  v" + std::to_string(edges[e].first) + " -- v" + std::to_string(edges[e].second);
        if (e < edge_labels.size() && !edge_labels[e].empty())
            out += " [label=\"" + escape(edge_labels[e]) + "\"]";
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace bcum
