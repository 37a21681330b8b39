#ifndef ZKPT_GRAPH_HPP
#define ZKPT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zkpt/rng.hpp"

namespace zkpt {

// Simple undirected graph on n labeled nodes (symmetric adjacency, zero
// diagonal).
class Graph {
public:
    explicit Graph(int n);

    int node_count() const { return n_; }
    bool edge(int i, int j) const { return adj_[static_cast<size_t>(i * n_ + j)] != 0; }
    void set_edge(int i, int j, bool present);

    int edge_count() const;
    std::vector<int> sorted_degrees() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<uint8_t> adj_;
};

// Bijection on {0,...,n-1}.
class Permutation {
public:
    explicit Permutation(std::vector<int> map);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<size_t>(i)]; }
    const std::vector<int>& map() const { return map_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> map_;
};

// Relabels g: edge (i,j) in g <=> edge (p(i), p(j)) in the result.
Graph apply_perm(const Permutation& p, const Graph& g);

// result(i) = outer(inner(i)); apply_perm(compose(a,b), g) equals
// apply_perm(a, apply_perm(b, g)).
Permutation compose(const Permutation& outer, const Permutation& inner);

Permutation invert(const Permutation& p);

// Unbiased Fisher-Yates shuffle.
Permutation random_perm(int n, Rng& rng);

struct GraphInstance {
    Graph g0;
    Graph g1;
    Permutation sigma; // apply_perm(sigma, g1) == g0
};

// Erdos-Renyi G(n, density) for g0; g1 is a relabeling of g0 with witness
// sigma: g1 -> g0. Passing forced_sigma pins the witness (test hook).
GraphInstance gen_instance(int n, double edge_density, Rng& rng,
                           const std::optional<Permutation>& forced_sigma = std::nullopt);

// Erdos-Renyi sample on its own.
Graph random_graph(int n, double edge_density, Rng& rng);

// Deterministic labeled encoding: n as 4-byte big-endian, then the upper
// triangle row-major, bits packed MSB-first and zero-padded to a byte.
// Injective on labeled graphs; NOT isomorphism-invariant.
std::vector<uint8_t> canonical_bytes(const Graph& g);

size_t canonical_byte_len(int n);

// Upper-triangle bytes (without the node-count prefix) as hex, for logs.
std::string tri_hex(const Graph& g);

} // namespace zkpt

#endif
