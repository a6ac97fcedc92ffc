#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blocksing/rational.hpp"

namespace blocksing {

/// Vertex ids are 1-based, matching the figures the fixtures encode.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending

/// Simple undirected graph on vertices 1..n. Loops are not edges; they live in
/// LoopWeights.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-pairs, duplicates, or out-of-range ids.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Edges in construction order, each stored as given.
    std::span<const Edge> edges() const { return edges_; }

    /// Neighbours of v in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v - 1], targets_.data() + offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v] - offsets_[v - 1]; }

    /// O(log deg(u)).
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v, lexicographically sorted.
    std::vector<Edge> sorted_edges() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> targets_;
};

/// Per-vertex rational loop weight. Absent means 0; an exact 0 is never stored.
class LoopWeights {
public:
    Rational get(Vertex v) const;
    void set(Vertex v, const Rational& weight);
    bool contains(Vertex v) const { return weights_.contains(v); }
    std::size_t size() const { return weights_.size(); }
    bool empty() const { return weights_.empty(); }

    auto begin() const { return weights_.begin(); }
    auto end() const { return weights_.end(); }

    friend bool operator==(const LoopWeights&, const LoopWeights&) = default;

private:
    std::map<Vertex, Rational> weights_;
};

/// Dense square matrix of rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t order) : order_(order), entries_(order * order) {}

    std::size_t order() const { return order_; }
    Rational& operator()(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
    const Rational& operator()(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

    bool is_symmetric() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Rational> entries_;
};

/// Thrown by parse_graph; carries the 1-based line number of the offending line
/// (0 when the problem is the input as a whole, e.g. missing edge lines).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct GraphFile {
    Graph graph;
    LoopWeights loops;
};

/// Reads the text format:
///
///     n m
///     u v          (exactly m lines, 1-based, u != v)
///     l v p/q      (zero or more loop-weight lines, after the edges)
///
/// Lines whose first non-blank character is '#' and blank lines are skipped.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

/// Canonical text: edges as "u v" with u < v sorted lexicographically, then
/// loops sorted by vertex.
std::string serialize_graph(const Graph& graph, const LoopWeights& loops = {});

/// Entry (i,j) = 1 iff {i,j} is an edge, diagonal carries loop weights. Row k
/// corresponds to vertex k+1.
RationalMatrix adjacency_matrix(const Graph& graph, const LoopWeights& loops = {});

/// Adjacency matrix of the subgraph induced on `vertices` (in the given order).
RationalMatrix induced_matrix(const Graph& graph, const LoopWeights& loops, std::span<const Vertex> vertices);

/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Graph& graph);

}  // namespace blocksing
