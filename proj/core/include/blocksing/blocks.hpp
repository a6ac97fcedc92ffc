#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocksing/graph.hpp"

namespace blocksing {

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) of a
/// graph together with its cut vertices.
///
/// Blocks are listed in a canonical order that does not depend on adjacency
/// order: ascending by the block's smallest private (non-cut) vertex, with
/// blocks made only of cut vertices last, compared lexicographically. The
/// reduction's deterministic pendant selection is "lowest index", so this
/// order fixes its traces.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    /// edge_counts[i] = number of graph edges inside blocks[i].
    std::vector<std::size_t> edge_counts;
    VertexSet cut_vertices;
};

/// O(n + m), single iterative depth-first traversal with low-link values.
BlockDecomposition biconnected_components(const Graph& graph);

struct BlockGraphCheck {
    bool ok = true;
    /// Index of the first block that is not a clique.
    std::optional<std::size_t> offending_block;
};

/// True iff every block with k vertices has k(k-1)/2 edges.
BlockGraphCheck validate_block_graph(const Graph& graph, const BlockDecomposition& decomposition);

class NotBlockGraph : public std::runtime_error {
public:
    explicit NotBlockGraph(std::size_t block_index)
        : std::runtime_error("block " + std::to_string(block_index + 1) + " is not complete"),
          block_index_(block_index) {}
    std::size_t block_index() const { return block_index_; }

private:
    std::size_t block_index_;
};

/// BV / CV / f bookkeeping for a block graph.
struct BlockCutStructure {
    std::size_t vertex_count = 0;
    std::vector<VertexSet> bv;  ///< vertex set of each block
    std::vector<VertexSet> cv;  ///< cut vertices of each block, cv[i] subset of bv[i]
    /// f[p] = number of cv sets containing p; index 0 unused.
    std::vector<std::uint32_t> f;

    std::size_t block_count() const { return bv.size(); }
    std::uint32_t multiplicity(Vertex p) const { return p < f.size() ? f[p] : 0; }
};

/// Throws NotBlockGraph if some block is not complete.
BlockCutStructure build_block_cut_structure(const Graph& graph);
BlockCutStructure build_block_cut_structure(const Graph& graph, const BlockDecomposition& decomposition);

/// U - S_i: drop element `index`, keep the order of the rest.
std::vector<VertexSet> sets_minus(std::span<const VertexSet> sets, std::size_t index);

/// U -* S_i: drop element `index` and remove its members from every remaining set.
std::vector<VertexSet> sets_star_minus(std::span<const VertexSet> sets, std::size_t index);

}  // namespace blocksing
