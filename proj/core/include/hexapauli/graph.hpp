#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace hexapauli {

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(n_) {}
    void add_edge(int u, int v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::size_t edge_count() const {
        std::size_t e = 0;
        for (const auto& a : adj) e += a.size();
        return e / 2;
    }
    bool adjacent(int u, int v) const {
        for (int w : adj[u])
            if (w == v) return true;
        return false;
    }
};

/// BFS distances from a source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);
int diameter(const Graph& g);   // -1 if disconnected
int girth(const Graph& g);      // -1 if acyclic
bool is_regular(const Graph& g, int degree);

std::vector<std::vector<int>> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

/// Backtracking isomorphism search with distance-matrix pruning.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Enumerates every automorphism; aborts past node_budget search-tree nodes.
std::vector<std::vector<int>> all_automorphisms(const Graph& g,
                                                std::size_t node_budget = 1000000000);

/// Exact integer characteristic polynomial of the adjacency matrix,
/// coefficients of lambda^0 .. lambda^n (Faddeev-LeVerrier).
std::vector<mpz_class> adjacency_charpoly(const Graph& g);

/// All exact covers: subsets of the given 64-bit-masked sets partitioning
/// the items 0..item_count-1. Calls on_solution with the chosen set indices.
void exact_cover(int item_count, const std::vector<std::uint64_t>& sets,
                 const std::function<void(const std::vector<int>&)>& on_solution);

}  // namespace hexapauli
