#include "blocksing/generate.hpp"

#include <charconv>
#include <stdexcept>

#include "blocksing/splitmix.hpp"

namespace blocksing {

namespace {

std::vector<Edge> clique_edges(const std::vector<Vertex>& vertices) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            edges.emplace_back(vertices[i], vertices[j]);
        }
    }
    return edges;
}

Graph from_cliques(std::size_t n, const std::vector<std::vector<Vertex>>& cliques) {
    std::vector<Edge> edges;
    for (const auto& c : cliques) {
        const auto e = clique_edges(c);
        edges.insert(edges.end(), e.begin(), e.end());
    }
    return Graph(n, std::move(edges));
}

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

struct Generator {
    Graph operator()(const family::Fig1&) const {
        return from_cliques(12, {{3, 5, 6, 7}, {1, 2, 3, 4}, {2, 11, 12}, {1, 8, 9, 10}});
    }
    Graph operator()(const family::Fig2&) const {
        return from_cliques(9, {{3, 4, 5}, {1, 2, 3}, {1, 8, 9}, {2, 6, 7}});
    }
    Graph operator()(const family::Fig3&) const { return (*this)(family::Star{9}); }

    Graph operator()(const family::Complete& f) const {
        require(f.k >= 1, "complete: k must be >= 1");
        std::vector<Vertex> all(f.k);
        for (std::size_t i = 0; i < f.k; ++i) {
            all[i] = static_cast<Vertex>(i + 1);
        }
        return Graph(f.k, clique_edges(all));
    }

    Graph operator()(const family::Path& f) const {
        require(f.n >= 1, "path: n must be >= 1");
        std::vector<Edge> edges;
        edges.reserve(f.n - 1);
        for (Vertex v = 1; v < f.n; ++v) {
            edges.emplace_back(v, v + 1);
        }
        return Graph(f.n, std::move(edges));
    }

    Graph operator()(const family::Star& f) const {
        require(f.n >= 1, "star: n must be >= 1");
        std::vector<Edge> edges;
        edges.reserve(f.n - 1);
        for (Vertex v = 2; v <= f.n; ++v) {
            edges.emplace_back(1, v);
        }
        return Graph(f.n, std::move(edges));
    }

    Graph operator()(const family::StarK3& f) const {
        require(f.n >= 3, "star_k3: n must be >= 3");
        const std::size_t triangles = (f.n - 1) / 2;
        const std::size_t n = 2 * triangles + 1;
        std::vector<Edge> edges;
        edges.reserve(3 * triangles);
        for (std::size_t t = 0; t < triangles; ++t) {
            const auto a = static_cast<Vertex>(2 * t + 2);
            edges.emplace_back(1, a);
            edges.emplace_back(1, a + 1);
            edges.emplace_back(a, a + 1);
        }
        return Graph(n, std::move(edges));
    }

    Graph operator()(const family::RandomTree& f) const {
        require(f.n >= 1, "random_tree: n must be >= 1");
        SplitMix64 rng(f.seed);
        std::vector<Edge> edges;
        edges.reserve(f.n - 1);
        for (Vertex v = 2; v <= f.n; ++v) {
            edges.emplace_back(static_cast<Vertex>(rng.uniform(1, v - 1)), v);
        }
        return Graph(f.n, std::move(edges));
    }

    Graph operator()(const family::RandomBlock& f) const {
        require(f.num_blocks >= 1, "random_block: num_blocks must be >= 1");
        require(f.min_block >= 2, "random_block: min_block must be >= 2");
        require(f.max_block >= f.min_block, "random_block: max_block must be >= min_block");
        SplitMix64 rng(f.seed);
        std::vector<std::vector<Vertex>> blocks;
        blocks.reserve(f.num_blocks);
        Vertex next = 0;
        for (std::size_t b = 0; b < f.num_blocks; ++b) {
            const std::size_t size = rng.uniform(f.min_block, f.max_block);
            std::vector<Vertex> block;
            block.reserve(size);
            if (b > 0) {
                const auto& parent = blocks[rng.uniform(0, b - 1)];
                block.push_back(parent[rng.uniform(0, parent.size() - 1)]);
            }
            while (block.size() < size) {
                block.push_back(++next);
            }
            blocks.push_back(std::move(block));
        }
        return from_cliques(next, blocks);
    }
};

std::uint64_t to_number(const std::string& s, const std::string& what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("invalid " + what + " '" + s + "'");
    }
    return value;
}

}  // namespace

Graph generate(const GenSpec& spec) { return std::visit(Generator{}, spec); }

GenSpec parse_gen_spec(const std::string& name, const std::vector<std::string>& args) {
    const auto expect = [&](std::size_t count) {
        if (args.size() != count) {
            throw std::invalid_argument(name + " expects " + std::to_string(count) + " argument(s)");
        }
    };
    if (name == "fig1") {
        expect(0);
        return family::Fig1{};
    }
    if (name == "fig2") {
        expect(0);
        return family::Fig2{};
    }
    if (name == "fig3") {
        expect(0);
        return family::Fig3{};
    }
    if (name == "complete") {
        expect(1);
        return family::Complete{to_number(args[0], "k")};
    }
    if (name == "path") {
        expect(1);
        return family::Path{to_number(args[0], "n")};
    }
    if (name == "star") {
        expect(1);
        return family::Star{to_number(args[0], "n")};
    }
    if (name == "star_k3") {
        expect(1);
        return family::StarK3{to_number(args[0], "n")};
    }
    if (name == "random_tree") {
        expect(2);
        return family::RandomTree{to_number(args[0], "n"), to_number(args[1], "seed")};
    }
    if (name == "random_block") {
        expect(4);
        return family::RandomBlock{to_number(args[0], "num_blocks"), to_number(args[1], "min_block"),
                                   to_number(args[2], "max_block"), to_number(args[3], "seed")};
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

GenSpec sized_spec(const std::string& name, std::size_t size, std::uint64_t seed) {
    if (name == "path") {
        return family::Path{size};
    }
    if (name == "star") {
        return family::Star{size};
    }
    if (name == "star_k3") {
        return family::StarK3{size};
    }
    if (name == "complete") {
        return family::Complete{size};
    }
    if (name == "random_tree") {
        return family::RandomTree{size, seed};
    }
    if (name == "random_block") {
        // Mean block size 4 with 3 new vertices per block after the first.
        return family::RandomBlock{std::max<std::size_t>(1, size / 3), 2, 6, seed};
    }
    throw std::invalid_argument("family '" + name + "' cannot be sized");
}

LabeledTreeEnumerator::LabeledTreeEnumerator(std::size_t n) : n_(n), total_(1) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("labelled tree enumeration supports 1 <= n <= 8");
    }
    for (std::size_t i = 2; i < n; ++i) {
        total_ *= n;
    }
    if (n >= 2) {
        sequence_.assign(n - 2, 1);
    }
}

std::optional<Graph> LabeledTreeEnumerator::next() {
    if (emitted_ == total_) {
        return std::nullopt;
    }
    Graph tree = tree_from_pruefer(n_, sequence_);
    ++emitted_;
    // Odometer increment over {1..n}^(n-2).
    for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it) {
        if (*it < n_) {
            ++*it;
            break;
        }
        *it = 1;
    }
    return tree;
}

LabeledTreeEnumerator enumerate_labeled_trees(std::size_t n) { return LabeledTreeEnumerator(n); }

Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& sequence) {
    if (n == 1) {
        return Graph(1, {});
    }
    if (sequence.size() != n - 2) {
        throw std::invalid_argument("Pruefer sequence must have length n - 2");
    }
    std::vector<std::size_t> degree(n + 1, 1);
    for (const Vertex v : sequence) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("Pruefer entry out of range");
        }
        ++degree[v];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    // Linear decoding: `ptr` scans for the smallest leaf, `leaf` may step back.
    std::size_t ptr = 1;
    while (degree[ptr] != 1) {
        ++ptr;
    }
    std::size_t leaf = ptr;
    for (const Vertex v : sequence) {
        edges.emplace_back(static_cast<Vertex>(leaf), v);
        if (--degree[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (degree[ptr] != 1) {
                ++ptr;
            }
            leaf = ptr;
        }
    }
    edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n));
    return Graph(n, std::move(edges));
}

}  // namespace blocksing
