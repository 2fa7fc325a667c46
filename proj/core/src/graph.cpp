#include "hexapauli/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hexapauli {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

int diameter(const Graph& g) {
    int diam = 0;
    for (int s = 0; s < g.n; ++s) {
        const auto d = bfs_distances(g, s);
        for (int x : d) {
            if (x < 0) return -1;
            diam = std::max(diam, x);
        }
    }
    return diam;
}

int girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge closing at depth d gives a cycle.
    int best = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (v == parent[u]) continue;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else {
                    const int cycle = dist[u] + dist[v] + 1;
                    if (best < 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

bool is_regular(const Graph& g, int degree) {
    return std::all_of(g.adj.begin(), g.adj.end(),
                       [&](const auto& a) { return static_cast<int>(a.size()) == degree; });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        seen[s] = true;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> index(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int v : g.adj[verts[i]])
            if (index[v] > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), index[v]);
    return sub;
}

namespace {

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
    std::vector<std::vector<int>> d(g.n);
    for (int s = 0; s < g.n; ++s) d[s] = bfs_distances(g, s);
    return d;
}

// Shared backtracking mapper from graph a into graph b, preserving the
// full distance matrix. Orders a's vertices so each extends the mapped core.
struct MappingSearch {
    const Graph& a;
    const Graph& b;
    std::vector<std::vector<int>> da, db;
    std::vector<int> order;           // a-vertices in insertion order
    std::vector<int> image;           // image[a-vertex] or -1
    std::vector<bool> used;           // b-vertex already an image
    std::size_t nodes = 0, budget;
    bool stop_at_first;
    std::vector<std::vector<int>> found;

    MappingSearch(const Graph& a_, const Graph& b_, bool first_only, std::size_t budget_)
        : a(a_), b(b_), da(distance_matrix(a_)), db(distance_matrix(b_)),
          image(a_.n, -1), used(b_.n, false), budget(budget_), stop_at_first(first_only) {
        // BFS order from vertex 0 so consecutive vertices touch the mapped core.
        std::vector<bool> seen(a.n, false);
        for (int s = 0; s < a.n; ++s) {
            if (seen[s]) continue;
            std::queue<int> q;
            seen[s] = true;
            q.push(s);
            while (!q.empty()) {
                const int u = q.front();
                q.pop();
                order.push_back(u);
                for (int v : a.adj[u])
                    if (!seen[v]) {
                        seen[v] = true;
                        q.push(v);
                    }
            }
        }
    }

    bool consistent(int depth, int u, int v) const {
        for (int i = 0; i < depth; ++i) {
            const int w = order[i];
            if (da[u][w] != db[v][image[w]]) return false;
        }
        return true;
    }

    bool extend(int depth) {
        if (depth == a.n) {
            found.push_back(image);
            return stop_at_first;
        }
        const int u = order[depth];
        for (int v = 0; v < b.n; ++v) {
            if (used[v]) continue;
            if (a.adj[u].size() != b.adj[v].size()) continue;
            if (++nodes > budget) throw std::runtime_error("mapping search exceeded node budget");
            if (!consistent(depth, u, v)) continue;
            image[u] = v;
            used[v] = true;
            if (extend(depth + 1)) return true;
            image[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return std::nullopt;
    MappingSearch s(a, b, /*first_only=*/true, 1000000000);
    s.extend(0);
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

std::vector<std::vector<int>> all_automorphisms(const Graph& g, std::size_t node_budget) {
    MappingSearch s(g, g, /*first_only=*/false, node_budget);
    s.extend(0);
    return std::move(s.found);
}

std::vector<mpz_class> adjacency_charpoly(const Graph& g) {
    const int n = g.n;
    // Faddeev-LeVerrier: M_0 = I, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I,
    // c_{n-k} = -tr(A M_k)/k.
    std::vector<std::vector<mpz_class>> A(n, std::vector<mpz_class>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u]) A[u][v] = 1;
    std::vector<std::vector<mpz_class>> M(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) M[i][i] = 1;
    std::vector<mpz_class> c(n + 1);
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        // AM = A * M
        std::vector<std::vector<mpz_class>> AM(n, std::vector<mpz_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (A[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) AM[i][j] += A[i][l] * M[l][j];
            }
        mpz_class tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[i][i];
        mpz_class ck = -tr / k;  // exact by construction
        c[n - k] = ck;
        if (k < n) {
            M = AM;
            for (int i = 0; i < n; ++i) M[i][i] += ck;
        }
    }
    return c;
}

void exact_cover(int item_count, const std::vector<std::uint64_t>& sets,
                 const std::function<void(const std::vector<int>&)>& on_solution) {
    if (item_count > 64) throw std::invalid_argument("exact_cover supports up to 64 items");
    const std::uint64_t full =
        item_count == 64 ? ~0ull : ((1ull << item_count) - 1);
    std::vector<int> chosen;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t covered) {
        if (covered == full) {
            on_solution(chosen);
            return;
        }
        // Branch on the lowest uncovered item.
        const int item = __builtin_ctzll(~covered & full);
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            if (!(sets[s] >> item & 1)) continue;
            if (sets[s] & covered) continue;
            chosen.push_back(s);
            rec(covered | sets[s]);
            chosen.pop_back();
        }
    };
    rec(0);
}

}  // namespace hexapauli
