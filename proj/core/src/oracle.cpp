#include "blocksing/oracle.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace blocksing {

namespace {

struct IntegerMatrix {
    std::size_t order = 0;
    std::vector<mpz_class> entries;
    mpz_class scale = 1;  // product of the row multipliers

    mpz_class& at(std::size_t r, std::size_t c) { return entries[r * order + c]; }
};

IntegerMatrix clear_denominators(const RationalMatrix& m) {
    IntegerMatrix out;
    out.order = m.order();
    out.entries.resize(out.order * out.order);
    for (std::size_t r = 0; r < out.order; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < out.order; ++c) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).denominator().get_mpz_t());
        }
        for (std::size_t c = 0; c < out.order; ++c) {
            out.at(r, c) = m(r, c).numerator() * (lcm / m(r, c).denominator());
        }
        out.scale *= lcm;
    }
    return out;
}

// Fraction-free row echelon form in place. Returns the rank; `sign` tracks row
// swaps and `last_pivot` the final leading principal minor when full rank.
std::size_t bareiss(IntegerMatrix& a, int& sign, mpz_class& last_pivot) {
    const std::size_t k = a.order;
    mpz_class previous = 1;
    std::size_t rank = 0;
    sign = 1;
    for (std::size_t col = 0; col < k && rank < k; ++col) {
        std::size_t pivot = rank;
        while (pivot < k && sgn(a.at(pivot, col)) == 0) {
            ++pivot;
        }
        if (pivot == k) {
            continue;
        }
        if (pivot != rank) {
            for (std::size_t c = 0; c < k; ++c) {
                std::swap(a.at(pivot, c), a.at(rank, c));
            }
            sign = -sign;
        }
        const mpz_class& p = a.at(rank, col);
        for (std::size_t r = rank + 1; r < k; ++r) {
            for (std::size_t c = col + 1; c < k; ++c) {
                mpz_class t = p * a.at(r, c) - a.at(r, col) * a.at(rank, c);
                mpz_divexact(a.at(r, c).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            a.at(r, col) = 0;
        }
        previous = a.at(rank, col);
        ++rank;
    }
    last_pivot = previous;
    return rank;
}

}  // namespace

Rational exact_determinant(const RationalMatrix& matrix) {
    return exact_rank_nullity(matrix).det;
}

RankReport exact_rank_nullity(const RationalMatrix& matrix) {
    IntegerMatrix a = clear_denominators(matrix);
    int sign = 1;
    mpz_class pivot;
    RankReport report;
    report.rank = bareiss(a, sign, pivot);
    report.nullity = matrix.order() - report.rank;
    if (report.nullity == 0) {
        report.det = Rational(sign * pivot, a.scale);
    }
    return report;
}

Coalescence coalesce(const Graph& g1, const LoopWeights& w1, Vertex v1, const Graph& g2, const LoopWeights& w2,
                     Vertex v2, const Rational& alpha) {
    if (v1 < 1 || v1 > g1.vertex_count() || v2 < 1 || v2 > g2.vertex_count()) {
        throw std::out_of_range("coalescence vertex out of range");
    }
    const std::size_t n1 = g1.vertex_count();
    std::vector<Vertex> relabel(g2.vertex_count() + 1, 0);
    Vertex next = static_cast<Vertex>(n1);
    for (Vertex u = 1; u <= g2.vertex_count(); ++u) {
        relabel[u] = u == v2 ? v1 : ++next;
    }

    std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
    for (const auto& [a, b] : g2.edges()) {
        edges.emplace_back(relabel[a], relabel[b]);
    }
    Coalescence out{Graph(next, std::move(edges)), {}, v1};
    for (const auto& [v, x] : w1) {
        if (v != v1) {
            out.loops.set(v, x);
        }
    }
    for (const auto& [v, x] : w2) {
        if (v != v2) {
            out.loops.set(relabel[v], x);
        }
    }
    out.loops.set(v1, alpha);
    return out;
}

namespace {

std::vector<Vertex> all_but(std::size_t n, Vertex skip) {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n; ++v) {
        if (v != skip) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Vertex> all_of(std::size_t n) { return all_but(n, 0); }

}  // namespace

bool coalescence_identity_holds(const Graph& g1, const LoopWeights& w1, Vertex v1, const Graph& g2,
                                const LoopWeights& w2, Vertex v2, const Rational& alpha) {
    const Coalescence glued = coalesce(g1, w1, v1, g2, w2, v2, alpha);

    LoopWeights l1 = w1;
    l1.set(v1, alpha);
    LoopWeights l2 = w2;
    l2.set(v2, alpha);

    const Rational det_g = exact_determinant(adjacency_matrix(glued.graph, glued.loops));
    const Rational det_g1 = exact_determinant(induced_matrix(g1, l1, all_of(g1.vertex_count())));
    const Rational det_g2 = exact_determinant(induced_matrix(g2, l2, all_of(g2.vertex_count())));
    const Rational det_g1v = exact_determinant(induced_matrix(g1, l1, all_but(g1.vertex_count(), v1)));
    const Rational det_g2v = exact_determinant(induced_matrix(g2, l2, all_but(g2.vertex_count(), v2)));

    return det_g == det_g1 * det_g2v + det_g1v * det_g2 - alpha * det_g1v * det_g2v;
}

bool tree_has_perfect_matching(const Graph& tree) {
    const std::size_t n = tree.vertex_count();
    if (n == 0 || tree.edge_count() != n - 1 || connected_components(tree).size() != 1) {
        throw std::invalid_argument("input is not a tree");
    }
    if (n % 2 != 0) {
        return false;
    }
    std::vector<std::size_t> degree(n + 1);
    std::vector<std::uint8_t> matched(n + 1, 0);
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] == 1) {
            leaves.push_back(v);
        }
    }
    std::size_t matched_count = 0;
    while (!leaves.empty()) {
        const Vertex leaf = leaves.back();
        leaves.pop_back();
        if (matched[leaf] != 0) {
            continue;
        }
        Vertex partner = 0;
        for (const Vertex u : tree.neighbors(leaf)) {
            if (matched[u] == 0) {
                partner = u;
                break;
            }
        }
        if (partner == 0) {
            return false;  // the leaf's only neighbour is already taken
        }
        matched[leaf] = matched[partner] = 1;
        matched_count += 2;
        for (const Vertex u : tree.neighbors(partner)) {
            if (matched[u] == 0 && --degree[u] == 1) {
                leaves.push_back(u);
            }
        }
    }
    return matched_count == n;
}

}  // namespace blocksing
