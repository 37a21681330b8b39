#include "zkpt/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zkpt/bits.hpp"

namespace zkpt {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
}

void Graph::set_edge(int i, int j, bool present) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("node index out of range");
    if (i == j) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<size_t>(i * n_ + j)] = present ? 1 : 0;
    adj_[static_cast<size_t>(j * n_ + i)] = present ? 1 : 0;
}

int Graph::edge_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (edge(i, j)) ++c;
    return c;
}

std::vector<int> Graph::sorted_degrees() const {
    std::vector<int> deg(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && edge(i, j)) ++deg[static_cast<size_t>(i)];
    std::sort(deg.begin(), deg.end());
    return deg;
}

Permutation::Permutation(std::vector<int> map) : map_(std::move(map)) {
    std::vector<uint8_t> seen(map_.size(), 0);
    for (int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("permutation map is not a bijection");
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(static_cast<size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    return Permutation(std::move(m));
}

Graph apply_perm(const Permutation& p, const Graph& g) {
    if (p.size() != g.node_count())
        throw std::invalid_argument("permutation and graph sizes differ");
    Graph out(g.node_count());
    for (int i = 0; i < g.node_count(); ++i)
        for (int j = i + 1; j < g.node_count(); ++j)
            if (g.edge(i, j)) out.set_edge(p(i), p(j), true);
    return out;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("permutation sizes differ");
    std::vector<int> m(static_cast<size_t>(inner.size()));
    for (int i = 0; i < inner.size(); ++i) m[static_cast<size_t>(i)] = outer(inner(i));
    return Permutation(std::move(m));
}

Permutation invert(const Permutation& p) {
    std::vector<int> m(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) m[static_cast<size_t>(p(i))] = i;
    return Permutation(std::move(m));
}

Permutation random_perm(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("permutation needs n >= 1");
    std::vector<int> m(static_cast<size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.below(static_cast<uint64_t>(i) + 1));
        std::swap(m[static_cast<size_t>(i)], m[static_cast<size_t>(j)]);
    }
    return Permutation(std::move(m));
}

Graph random_graph(int n, double edge_density, Rng& rng) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    if (!(edge_density > 0.0) || !(edge_density < 1.0))
        throw std::invalid_argument("edge density must lie strictly between 0 and 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(edge_density)) g.set_edge(i, j, true);
    return g;
}

GraphInstance gen_instance(int n, double edge_density, Rng& rng,
                           const std::optional<Permutation>& forced_sigma) {
    if (n < 2) throw std::invalid_argument("instance needs n >= 2");
    Graph g0 = random_graph(n, edge_density, rng);
    Permutation sigma = forced_sigma ? *forced_sigma : random_perm(n, rng);
    if (sigma.size() != n) throw std::invalid_argument("forced sigma has wrong size");
    Graph g1 = apply_perm(invert(sigma), g0);
    return {std::move(g0), std::move(g1), std::move(sigma)};
}

size_t canonical_byte_len(int n) {
    size_t tri_bits = static_cast<size_t>(n) * (static_cast<size_t>(n) - 1) / 2;
    return 4 + (tri_bits + 7) / 8;
}

std::vector<uint8_t> canonical_bytes(const Graph& g) {
    int n = g.node_count();
    std::vector<uint8_t> out;
    out.reserve(canonical_byte_len(n));
    uint32_t un = static_cast<uint32_t>(n);
    out.push_back(static_cast<uint8_t>(un >> 24));
    out.push_back(static_cast<uint8_t>(un >> 16));
    out.push_back(static_cast<uint8_t>(un >> 8));
    out.push_back(static_cast<uint8_t>(un));
    size_t t = 0;
    uint8_t cur = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.edge(i, j)) cur |= static_cast<uint8_t>(1u << (7 - t % 8));
            if (++t % 8 == 0) {
                out.push_back(cur);
                cur = 0;
            }
        }
    }
    if (t % 8 != 0) out.push_back(cur);
    return out;
}

std::string tri_hex(const Graph& g) {
    auto bytes = canonical_bytes(g);
    return to_hex(std::vector<uint8_t>(bytes.begin() + 4, bytes.end()));
}

} // namespace zkpt
