#include "spectra/multigraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "spectra/errors.hpp"

namespace spectra {

Multigraph Multigraph::from_matrix(const std::vector<std::vector<long long>>& entries) {
    const size_t n = entries.size();
    if (n == 0) throw Error("vertex count must be positive");
    for (const auto& row : entries) {
        if (row.size() != n) throw Error("adjacency matrix must be square");
    }
    std::vector<int> flat(n * n);
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = 0; v < n; ++v) {
            const long long e = entries[u][v];
            if (e < 0) throw NegativeEntry("adjacency entry (" + std::to_string(u) + "," +
                                           std::to_string(v) + ") is negative");
            if (e != entries[v][u]) {
                throw AsymmetricMatrix("adjacency entries (" + std::to_string(u) + "," +
                                       std::to_string(v) + ") and transpose differ");
            }
            if (e > std::numeric_limits<int>::max()) throw Error("entry too large");
            flat[u * n + v] = static_cast<int>(e);
        }
    }
    return Multigraph(static_cast<int>(n), std::move(flat));
}

Multigraph Multigraph::from_flat_unchecked(int n, std::vector<int> flat) {
    return Multigraph(n, std::move(flat));
}

long long Multigraph::degree(int u) const {
    long long d = 0;
    for (int v = 0; v < n_; ++v) d += entry(u, v);
    return d;
}

long long Multigraph::trace() const {
    long long t = 0;
    for (int u = 0; u < n_; ++u) t += entry(u, u);
    return t;
}

int Multigraph::max_off_diagonal() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v) m = std::max(m, entry(u, v));
    return m;
}

bool Multigraph::is_simple() const { return trace() == 0 && max_off_diagonal() <= 1; }

IntMatrix Multigraph::adjacency() const {
    IntMatrix m(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) m.at(u, v) = entry(u, v);
    return m;
}

DegreeProfile regularity(const Multigraph& g) {
    DegreeProfile p;
    p.degrees.reserve(g.order());
    for (int u = 0; u < g.order(); ++u) p.degrees.push_back(g.degree(u));
    const bool constant =
        std::all_of(p.degrees.begin(), p.degrees.end(), [&](long long d) { return d == p.degrees[0]; });
    if (constant) p.regular_k = p.degrees[0];
    return p;
}

bool is_connected(const Multigraph& g) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.entry(u, v) > 0) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    return reached == n;
}

namespace {

// Edge instances of a multigraph: each unit of multiplicity is a distinct
// instance; a loop (u,u) is a single instance whose traversal returns to u.
struct EdgeInstances {
    std::vector<std::pair<int, int>> ends;        // ends.first <= ends.second
    std::vector<std::vector<int>> incident;       // per-vertex instance ids

    explicit EdgeInstances(const Multigraph& g) : incident(g.order()) {
        for (int u = 0; u < g.order(); ++u) {
            for (int v = u; v < g.order(); ++v) {
                for (int c = 0; c < g.entry(u, v); ++c) {
                    const int id = static_cast<int>(ends.size());
                    ends.emplace_back(u, v);
                    incident[u].push_back(id);
                    if (v != u) incident[v].push_back(id);
                }
            }
        }
    }

    int other(int id, int from) const {
        const auto& [a, b] = ends[id];
        return a + b - from;
    }
};

}  // namespace

std::optional<long long> girth(const Multigraph& g) {
    if (g.trace() > 0) return 1;
    const EdgeInstances edges(g);
    const int n = g.order();
    const long long cap = 2LL * n + 1;
    long long best = std::numeric_limits<long long>::max();

    // State (vertex, incoming instance) per start vertex; the first return
    // to the start is the shortest closed non-backtracking walk through it.
    std::vector<long long> dist(edges.ends.size() * 2);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        for (int id : edges.incident[s]) {
            const int v = edges.other(id, s);
            const int state = 2 * id + (v == edges.ends[id].second ? 1 : 0);
            if (dist[state] < 0) {
                dist[state] = 1;
                q.push(state);
            }
        }
        bool closed = false;
        while (!q.empty() && !closed) {
            const int state = q.front();
            q.pop();
            const int id = state / 2;
            const int v = (state % 2) ? edges.ends[id].second : edges.ends[id].first;
            const long long d = dist[state];
            if (d >= best || d >= cap) continue;
            for (int next : edges.incident[v]) {
                if (next == id) continue;
                const int w = edges.other(next, v);
                if (w == s) {
                    best = std::min(best, d + 1);
                    closed = true;
                    break;
                }
                const int nstate = 2 * next + (w == edges.ends[next].second ? 1 : 0);
                if (dist[nstate] < 0) {
                    dist[nstate] = d + 1;
                    q.push(nstate);
                }
            }
        }
        if (best == 2) break;  // nothing shorter is possible once trace is 0
    }
    if (best > cap) return std::nullopt;
    return best;
}

Int walk_count(const Multigraph& g, int u, int v, unsigned long long i) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw VertexOutOfRange("vertex index out of range");
    }
    return g.adjacency().pow(i).at(u, v);
}

Multigraph bipartite_double(const Multigraph& g) {
    const int n = g.order();
    std::vector<int> flat(static_cast<size_t>(2 * n) * (2 * n), 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int e = g.entry(u, v);
            flat[static_cast<size_t>(u) * 2 * n + (n + v)] = e;
            flat[static_cast<size_t>(n + v) * 2 * n + u] = e;
        }
    }
    return Multigraph::from_flat_unchecked(2 * n, std::move(flat));
}

Multigraph degree_shift(const Multigraph& g, long long t) {
    const auto profile = regularity(g);
    if (!profile.regular_k) throw NotRegular("degree_shift requires a regular graph");
    if (t < 0) throw Error("shift must be non-negative");
    const int n = g.order();
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            flat[static_cast<size_t>(u) * n + v] = g.entry(u, v) + (u == v ? static_cast<int>(t) : 0);
    return Multigraph::from_flat_unchecked(n, std::move(flat));
}

Multigraph make_cycle(int n) {
    if (n < 1) throw Error("cycle order must be >= 1");
    std::vector<int> flat(static_cast<size_t>(n) * n, 0);
    if (n == 1) {
        flat[0] = 1;  // the length-1 closed walk: one loop
    } else if (n == 2) {
        flat[1] = flat[2] = 2;  // double edge
    } else {
        for (int u = 0; u < n; ++u) {
            const int v = (u + 1) % n;
            flat[static_cast<size_t>(u) * n + v] = 1;
            flat[static_cast<size_t>(v) * n + u] = 1;
        }
    }
    return Multigraph::from_flat_unchecked(n, std::move(flat));
}

Multigraph make_petersen() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<int> flat(100, 0);
    auto link = [&](int u, int v) {
        flat[static_cast<size_t>(u) * 10 + v] = 1;
        flat[static_cast<size_t>(v) * 10 + u] = 1;
    };
    for (int i = 0; i < 5; ++i) {
        link(i, (i + 1) % 5);
        link(5 + i, 5 + (i + 2) % 5);
        link(i, 5 + i);
    }
    return Multigraph::from_flat_unchecked(10, std::move(flat));
}

Multigraph make_complete(int n) {
    if (n < 1) throw Error("complete graph order must be >= 1");
    std::vector<int> flat(static_cast<size_t>(n) * n, 1);
    for (int u = 0; u < n; ++u) flat[static_cast<size_t>(u) * n + u] = 0;
    return Multigraph::from_flat_unchecked(n, std::move(flat));
}

Multigraph builtin_graph(BuiltinName name, int n) {
    switch (name) {
        case BuiltinName::cycle: return make_cycle(n);
        case BuiltinName::petersen: return make_petersen();
        case BuiltinName::complete: return make_complete(n);
    }
    throw UnknownName("unknown builtin graph");
}

Multigraph builtin_graph(const std::string& name, int n) {
    if (name == "cycle") return make_cycle(n);
    if (name == "petersen") return make_petersen();
    if (name == "complete") return make_complete(n);
    throw UnknownName("unknown builtin graph '" + name + "'");
}

}  // namespace spectra
