#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/exact.hpp"

namespace spectra {

// Undirected multigraph on vertices 0..n-1, stored as a symmetric matrix of
// non-negative integer edge multiplicities. The diagonal entry adj(u,u)
// counts the loops on u.
//
// Degree convention: a loop contributes exactly 1 to the degree, i.e.
// degree(u) is the plain row sum of the adjacency matrix. This differs from
// the common contributes-2 convention; it is what makes the polarity graphs
// (q+1)-regular with unit diagonal.
//
// Instances are immutable after construction and safe to share across
// threads; every operation below is a pure function.
class Multigraph {
  public:
    // Validates and builds a multigraph. Throws AsymmetricMatrix or
    // NegativeEntry; a non-square or empty matrix is an Error.
    static Multigraph from_matrix(const std::vector<std::vector<long long>>& entries);

    // Trusted constructor for generators that build symmetric data directly.
    static Multigraph from_flat_unchecked(int n, std::vector<int> flat);

    int order() const { return n_; }
    int entry(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v]; }

    long long degree(int u) const;
    long long trace() const;
    int max_off_diagonal() const;
    bool has_loop() const { return trace() > 0; }
    bool is_simple() const;

    IntMatrix adjacency() const;

    bool operator==(const Multigraph& o) const = default;

  private:
    Multigraph(int n, std::vector<int> flat) : n_(n), adj_(std::move(flat)) {}

    int n_ = 0;
    std::vector<int> adj_;
};

struct DegreeProfile {
    std::vector<long long> degrees;
    std::optional<long long> regular_k;  // present iff all degrees equal
};

DegreeProfile regularity(const Multigraph& g);

// Connectivity of the positive-entry support, by breadth-first traversal.
bool is_connected(const Multigraph& g);

// Minimum length of a closed non-backtracking walk over distinct edge
// instances: 1 for a loop, 2 for a parallel pair, nullopt (infinite) for
// forests. Exhaustive non-backtracking BFS, capped at length 2n+1.
std::optional<long long> girth(const Multigraph& g);

// (A^i)[u][v], exact. Throws VertexOutOfRange.
Int walk_count(const Multigraph& g, int u, int v, unsigned long long i);

// Order-2n graph with block adjacency [[0, A], [A^T, 0]]; loops of g become
// single edges between the two copies.
Multigraph bipartite_double(const Multigraph& g);

// A + tI for a k-regular g: a (k+t)-regular multigraph with the same number
// of distinct eigenvalues. Throws NotRegular.
Multigraph degree_shift(const Multigraph& g, long long t);

enum class BuiltinName { cycle, petersen, complete };

// cycle(1) is a single loop and cycle(2) a double edge (the closed
// non-backtracking walks of lengths 1 and 2); n >= 3 gives the plain cycle.
Multigraph builtin_graph(BuiltinName name, int n = 0);
Multigraph builtin_graph(const std::string& name, int n = 0);  // throws UnknownName

Multigraph make_cycle(int n);
Multigraph make_petersen();
Multigraph make_complete(int n);

}  // namespace spectra
