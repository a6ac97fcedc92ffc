#include "blocksing/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

namespace blocksing {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    std::vector<std::size_t> degree(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        if (u < 1 || v < 1 || u > n_ || v > n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a vertex outside 1.." + std::to_string(n_));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop edge at vertex " + std::to_string(u));
        }
        ++degree[u];
        ++degree[v];
    }

    // Unordered CSR first, then one transposition pass yields ascending lists.
    std::vector<std::size_t> start(n_ + 2, 0);
    for (std::size_t v = 1; v <= n_; ++v) {
        start[v + 1] = start[v] + degree[v];
    }
    std::vector<Vertex> raw(start[n_ + 1]);
    {
        std::vector<std::size_t> fill(start.begin(), start.end());
        for (const auto& [u, v] : edges_) {
            raw[fill[u]++] = v;
            raw[fill[v]++] = u;
        }
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 1; v <= n_; ++v) {
        offsets_[v] = start[v + 1];
    }
    targets_.resize(raw.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end());
    for (Vertex u = 1; u <= n_; ++u) {
        for (std::size_t k = start[u]; k < start[u + 1]; ++k) {
            const Vertex v = raw[k];
            targets_[fill[v - 1]++] = u;
        }
    }

    for (Vertex v = 1; v <= n_; ++v) {
        const auto nb = neighbors(v);
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            const auto dup = *std::adjacent_find(nb.begin(), nb.end());
            throw std::invalid_argument("duplicate edge (" + std::to_string(std::min(v, dup)) + "," +
                                        std::to_string(std::max(v, dup)) + ")");
        }
    }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 1 || v < 1 || u > n_ || v > n_) {
        return false;
    }
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::sorted_edges() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (Vertex u = 1; u <= n_; ++u) {
        for (const Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Rational LoopWeights::get(Vertex v) const {
    const auto it = weights_.find(v);
    return it == weights_.end() ? Rational{} : it->second;
}

void LoopWeights::set(Vertex v, const Rational& weight) {
    if (weight.is_zero()) {
        weights_.erase(v);
    } else {
        weights_.insert_or_assign(v, weight);
    }
}

bool RationalMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = i + 1; j < order_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > begin) {
            out.push_back(line.substr(begin, i - begin));
        }
    }
    return out;
}

template <typename T>
bool parse_uint(std::string_view s, T& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    LoopWeights loops;
    std::vector<bool> loop_seen;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }

        if (!have_header) {
            if (tokens.size() != 2 || !parse_uint(tokens[0], n) || !parse_uint(tokens[1], m)) {
                throw ParseError(line_no, "expected header 'n m'");
            }
            if (n > std::numeric_limits<Vertex>::max()) {
                throw ParseError(line_no, "vertex count too large");
            }
            have_header = true;
            loop_seen.assign(n + 1, false);
            edges.reserve(m);
            continue;
        }

        if (tokens.front() == "l") {
            if (edges.size() != m) {
                throw ParseError(line_no, "loop line before all " + std::to_string(m) + " edge lines");
            }
            Vertex v = 0;
            if (tokens.size() != 3 || !parse_uint(tokens[1], v)) {
                throw ParseError(line_no, "expected loop line 'l v p/q'");
            }
            if (v < 1 || v > n) {
                throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
            }
            if (loop_seen[v]) {
                throw ParseError(line_no, "duplicate loop weight for vertex " + std::to_string(v));
            }
            loop_seen[v] = true;
            try {
                loops.set(v, Rational::parse(tokens[2]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            continue;
        }

        Vertex u = 0;
        Vertex v = 0;
        if (tokens.size() != 2 || !parse_uint(tokens[0], u) || !parse_uint(tokens[1], v)) {
            throw ParseError(line_no, "expected edge line 'u v'");
        }
        if (edges.size() == m) {
            throw ParseError(line_no, "more than " + std::to_string(m) + " edge lines");
        }
        if (u < 1 || u > n || v < 1 || v > n) {
            throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
        }
        if (u == v) {
            throw ParseError(line_no, "self-loop edge at vertex " + std::to_string(u) + " (use an 'l' line)");
        }
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }

    if (!have_header) {
        throw ParseError(0, "missing header line 'n m'");
    }
    if (edges.size() != m) {
        throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }

    // Duplicate detection with the line of the second occurrence.
    {
        std::vector<std::pair<Edge, std::size_t>> keyed;
        keyed.reserve(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const auto [a, b] = edges[k];
            keyed.push_back({{std::min(a, b), std::max(a, b)}, edge_lines[k]});
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t k = 1; k < keyed.size(); ++k) {
            if (keyed[k].first == keyed[k - 1].first) {
                throw ParseError(keyed[k].second, "duplicate edge (" + std::to_string(keyed[k].first.first) + "," +
                                                      std::to_string(keyed[k].first.second) + ")");
            }
        }
    }

    return {Graph(n, std::move(edges)), std::move(loops)};
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const Graph& graph, const LoopWeights& loops) {
    std::string out;
    out += std::to_string(graph.vertex_count()) + " " + std::to_string(graph.edge_count()) + "\n";
    for (const auto& [u, v] : graph.sorted_edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    for (const auto& [v, w] : loops) {
        out += "l " + std::to_string(v) + " " + w.to_string() + "\n";
    }
    return out;
}

RationalMatrix adjacency_matrix(const Graph& graph, const LoopWeights& loops) {
    RationalMatrix a(graph.vertex_count());
    for (const auto& [u, v] : graph.edges()) {
        a(u - 1, v - 1) = 1;
        a(v - 1, u - 1) = 1;
    }
    for (const auto& [v, w] : loops) {
        a(v - 1, v - 1) = w;
    }
    return a;
}

RationalMatrix induced_matrix(const Graph& graph, const LoopWeights& loops, std::span<const Vertex> vertices) {
    RationalMatrix a(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        a(i, i) = loops.get(vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (graph.has_edge(vertices[i], vertices[j])) {
                a(i, j) = 1;
                a(j, i) = 1;
            }
        }
    }
    return a;
}

std::vector<VertexSet> connected_components(const Graph& graph) {
    const std::size_t n = graph.vertex_count();
    std::vector<bool> seen(n + 1, false);
    std::vector<VertexSet> components;
    std::vector<Vertex> stack;
    for (Vertex root = 1; root <= n; ++root) {
        if (seen[root]) {
            continue;
        }
        VertexSet component;
        seen[root] = true;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (const Vertex v : graph.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace blocksing
