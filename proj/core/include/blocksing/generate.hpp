#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "blocksing/graph.hpp"

namespace blocksing {

namespace family {

/// The block graphs of the three worked examples, labelled as drawn.
struct Fig1 {};
struct Fig2 {};
struct Fig3 {};
struct Complete {
    std::size_t k = 1;
};
struct Path {
    std::size_t n = 1;
};
/// K_{1,n-1} with centre 1.
struct Star {
    std::size_t n = 1;
};
/// (n - 1) / 2 triangles sharing vertex 1 (friendship graph); n >= 3.
struct StarK3 {
    std::size_t n = 3;
};
struct RandomTree {
    std::size_t n = 1;
    std::uint64_t seed = 0;
};
/// A random tree of `num_blocks` cliques, sizes uniform in [min_block, max_block];
/// each non-root block shares one vertex with its parent block.
struct RandomBlock {
    std::size_t num_blocks = 1;
    std::size_t min_block = 2;
    std::size_t max_block = 2;
    std::uint64_t seed = 0;
};

}  // namespace family

using GenSpec = std::variant<family::Fig1, family::Fig2, family::Fig3, family::Complete, family::Path, family::Star,
                             family::StarK3, family::RandomTree, family::RandomBlock>;

/// Deterministic: the same spec always yields the same edge list. Throws
/// std::invalid_argument on invalid parameters.
Graph generate(const GenSpec& spec);

/// Builds a spec from a family name and its positional arguments, as used on
/// the command line: fig1 | fig2 | fig3 | complete K | path N | star N |
/// star_k3 N | random_tree N SEED | random_block B MIN MAX SEED.
GenSpec parse_gen_spec(const std::string& name, const std::vector<std::string>& args);

/// Same family scaled to roughly `size` vertices (benchmarks). Supported:
/// path, star, star_k3, complete, random_tree, random_block.
GenSpec sized_spec(const std::string& name, std::size_t size, std::uint64_t seed = 1);

/// All n^(n-2) labelled trees on 1..n via Pruefer sequences, in lexicographic
/// sequence order. Valid for 1 <= n <= 8.
class LabeledTreeEnumerator {
public:
    explicit LabeledTreeEnumerator(std::size_t n);

    std::optional<Graph> next();
    std::size_t total() const { return total_; }

private:
    std::size_t n_;
    std::size_t total_;
    std::size_t emitted_ = 0;
    std::vector<Vertex> sequence_;
};

LabeledTreeEnumerator enumerate_labeled_trees(std::size_t n);

/// Decodes a Pruefer sequence (entries in 1..n, length n - 2) in O(n).
Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence);

}  // namespace blocksing
