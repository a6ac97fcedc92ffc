#include "blocksing/blocks.hpp"

#include <algorithm>
#include <limits>

namespace blocksing {

namespace {

struct Frame {
    Vertex vertex;
    Vertex parent;
    std::size_t next;  // position in the adjacency list
};

// Orders blocks canonically; see BlockDecomposition.
void canonicalize(BlockDecomposition& d, std::size_t n) {
    std::vector<std::uint8_t> is_cut(n + 1, 0);
    for (const Vertex c : d.cut_vertices) {
        is_cut[c] = 1;
    }

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> by_private(n + 1, none);
    std::vector<std::size_t> interior;
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto& block = d.blocks[b];
        std::sort(block.begin(), block.end());
        const auto it = std::find_if(block.begin(), block.end(), [&](Vertex v) { return is_cut[v] == 0; });
        if (it == block.end()) {
            interior.push_back(b);
        } else {
            // Private vertices belong to exactly one block, so keys are distinct.
            by_private[*it] = b;
        }
    }
    std::sort(interior.begin(), interior.end(),
              [&](std::size_t a, std::size_t b) { return d.blocks[a] < d.blocks[b]; });

    std::vector<std::size_t> order;
    order.reserve(d.blocks.size());
    for (std::size_t v = 1; v <= n; ++v) {
        if (by_private[v] != none) {
            order.push_back(by_private[v]);
        }
    }
    order.insert(order.end(), interior.begin(), interior.end());

    BlockDecomposition sorted;
    sorted.blocks.reserve(order.size());
    sorted.edge_counts.reserve(order.size());
    for (const std::size_t b : order) {
        sorted.blocks.push_back(std::move(d.blocks[b]));
        sorted.edge_counts.push_back(d.edge_counts[b]);
    }
    sorted.cut_vertices = std::move(d.cut_vertices);
    d = std::move(sorted);
}

}  // namespace

BlockDecomposition biconnected_components(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    BlockDecomposition result;

    std::vector<std::uint32_t> disc(n + 1, 0);  // 0 = unvisited
    std::vector<std::uint32_t> low(n + 1, 0);
    std::vector<std::uint32_t> stamp(n + 1, 0);  // block id + 1 that last collected v
    std::vector<std::uint32_t> membership(n + 1, 0);
    std::vector<Edge> edge_stack;
    std::vector<Frame> stack;
    std::uint32_t clock = 0;

    const auto emit_block = [&](Vertex u, Vertex v) {
        VertexSet block;
        std::size_t edges = 0;
        const auto id = static_cast<std::uint32_t>(result.blocks.size() + 1);
        const auto take = [&](Vertex x) {
            if (stamp[x] != id) {
                stamp[x] = id;
                block.push_back(x);
                ++membership[x];
            }
        };
        while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            ++edges;
            take(e.first);
            take(e.second);
            if (e.first == u && e.second == v) {
                break;
            }
        }
        result.blocks.push_back(std::move(block));
        result.edge_counts.push_back(edges);
    };

    for (Vertex root = 1; root <= n; ++root) {
        if (disc[root] != 0) {
            continue;
        }
        if (graph.degree(root) == 0) {
            disc[root] = ++clock;
            result.blocks.push_back({root});
            result.edge_counts.push_back(0);
            ++membership[root];
            continue;
        }
        disc[root] = low[root] = ++clock;
        stack.push_back({root, 0, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const Vertex u = frame.vertex;
            const auto nb = graph.neighbors(u);
            if (frame.next < nb.size()) {
                const Vertex w = nb[frame.next++];
                if (disc[w] == 0) {
                    edge_stack.emplace_back(u, w);
                    disc[w] = low[w] = ++clock;
                    stack.push_back({w, u, 0});
                } else if (w != frame.parent && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            const Vertex parent = frame.parent;
            stack.pop_back();
            if (parent != 0) {
                low[parent] = std::min(low[parent], low[u]);
                if (low[u] >= disc[parent]) {
                    emit_block(parent, u);
                }
            }
        }
    }

    for (Vertex v = 1; v <= n; ++v) {
        if (membership[v] >= 2) {
            result.cut_vertices.push_back(v);
        }
    }
    canonicalize(result, n);
    return result;
}

BlockGraphCheck validate_block_graph(const Graph& /*graph*/, const BlockDecomposition& decomposition) {
    for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
        const std::size_t k = decomposition.blocks[b].size();
        if (decomposition.edge_counts[b] != k * (k - 1) / 2) {
            return {false, b};
        }
    }
    return {};
}

BlockCutStructure build_block_cut_structure(const Graph& graph) {
    return build_block_cut_structure(graph, biconnected_components(graph));
}

BlockCutStructure build_block_cut_structure(const Graph& graph, const BlockDecomposition& decomposition) {
    const auto check = validate_block_graph(graph, decomposition);
    if (!check.ok) {
        throw NotBlockGraph(*check.offending_block);
    }
    const std::size_t n = graph.vertex_count();
    std::vector<std::uint8_t> is_cut(n + 1, 0);
    for (const Vertex c : decomposition.cut_vertices) {
        is_cut[c] = 1;
    }

    BlockCutStructure s;
    s.vertex_count = n;
    s.bv = decomposition.blocks;
    s.cv.resize(s.bv.size());
    s.f.assign(n + 1, 0);
    for (std::size_t b = 0; b < s.bv.size(); ++b) {
        for (const Vertex v : s.bv[b]) {
            if (is_cut[v] != 0) {
                s.cv[b].push_back(v);
                ++s.f[v];
            }
        }
    }
    return s;
}

std::vector<VertexSet> sets_minus(std::span<const VertexSet> sets, std::size_t index) {
    if (index >= sets.size()) {
        throw std::out_of_range("set index " + std::to_string(index) + " out of range");
    }
    std::vector<VertexSet> out;
    out.reserve(sets.size() - 1);
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (j != index) {
            out.push_back(sets[j]);
        }
    }
    return out;
}

std::vector<VertexSet> sets_star_minus(std::span<const VertexSet> sets, std::size_t index) {
    if (index >= sets.size()) {
        throw std::out_of_range("set index " + std::to_string(index) + " out of range");
    }
    const VertexSet& removed = sets[index];
    std::vector<VertexSet> out;
    out.reserve(sets.size() - 1);
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (j == index) {
            continue;
        }
        VertexSet kept;
        for (const Vertex v : sets[j]) {
            if (std::find(removed.begin(), removed.end(), v) == removed.end()) {
                kept.push_back(v);
            }
        }
        out.push_back(std::move(kept));
    }
    return out;
}

}  // namespace blocksing
