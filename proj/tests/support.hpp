#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "blocksing/generate.hpp"
#include "blocksing/graph.hpp"
#include "blocksing/rational.hpp"
#include "blocksing/splitmix.hpp"

namespace testing_support {

using blocksing::Graph;
using blocksing::LoopWeights;
using blocksing::Rational;
using blocksing::RationalMatrix;
using blocksing::SplitMix64;
using blocksing::Vertex;

inline Rational random_rational(SplitMix64& rng, long max_abs_num = 5, long max_den = 4) {
    const long num = static_cast<long>(rng.uniform(0, 2 * max_abs_num)) - max_abs_num;
    const long den = static_cast<long>(rng.uniform(1, max_den));
    return Rational(num, den);
}

/// Rational with numerator and denominator of roughly `bits` bits.
inline Rational random_big_rational(SplitMix64& rng, int bits) {
    mpz_class num = 0;
    mpz_class den = 0;
    for (int i = 0; i < bits; i += 64) {
        num = (num << 64) + mpz_class(std::to_string(rng.next()));
        den = (den << 64) + mpz_class(std::to_string(rng.next()));
    }
    if (den == 0) {
        den = 1;
    }
    if (rng.uniform(0, 1) == 1) {
        num = -num;
    }
    return Rational(num, den);
}

/// Diagonal x_i, off-diagonal 1.
inline RationalMatrix clique_matrix(const std::vector<Rational>& weights) {
    RationalMatrix m(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = 0; j < weights.size(); ++j) {
            m(i, j) = i == j ? weights[i] : Rational(1);
        }
    }
    return m;
}

/// [[M, j], [j^T, alpha]] for the clique matrix M of `weights`.
inline RationalMatrix bordered_clique_matrix(const std::vector<Rational>& weights, const Rational& alpha) {
    std::vector<Rational> all = weights;
    all.push_back(alpha);
    return clique_matrix(all);
}

/// Copy of `m` without row and column `index`.
inline RationalMatrix drop_index(const RationalMatrix& m, std::size_t index) {
    RationalMatrix out(m.order() - 1);
    for (std::size_t r = 0, rr = 0; r < m.order(); ++r) {
        if (r == index) {
            continue;
        }
        for (std::size_t c = 0, cc = 0; c < m.order(); ++c) {
            if (c == index) {
                continue;
            }
            out(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return out;
}

/// Laplace expansion along the first row; only for tiny matrices.
inline Rational cofactor_determinant(const RationalMatrix& m) {
    if (m.order() == 0) {
        return Rational(1);
    }
    if (m.order() == 1) {
        return m(0, 0);
    }
    Rational total;
    for (std::size_t c = 0; c < m.order(); ++c) {
        if (m(0, c).is_zero()) {
            continue;
        }
        RationalMatrix minor(m.order() - 1);
        for (std::size_t r = 1; r < m.order(); ++r) {
            for (std::size_t cc = 0, k = 0; cc < m.order(); ++cc) {
                if (cc != c) {
                    minor(r - 1, k++) = m(r, cc);
                }
            }
        }
        Rational term = m(0, c) * cofactor_determinant(minor);
        if (c % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

/// Plain Gauss-Jordan elimination over Q.
inline std::size_t gaussian_rank(RationalMatrix m) {
    const std::size_t n = m.order();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::swap(m(pivot, c), m(rank, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m(r, col).is_zero()) {
                continue;
            }
            const Rational factor = m(r, col) / m(rank, col);
            for (std::size_t c = col; c < n; ++c) {
                m(r, c) -= factor * m(rank, c);
            }
        }
        ++rank;
    }
    return rank;
}

inline RationalMatrix random_matrix(SplitMix64& rng, std::size_t order) {
    RationalMatrix m(order);
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t c = 0; c < order; ++c) {
            m(r, c) = rng.uniform(0, 3) == 0 ? Rational(0) : random_rational(rng);
        }
    }
    return m;
}

/// Erdos-Renyi style graph with edge probability 1/2.
inline Graph random_graph(SplitMix64& rng, std::size_t n) {
    std::vector<blocksing::Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (rng.uniform(0, 1) == 1) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

/// Loop weights drawn from a small pool that makes 0 and 1 frequent.
inline LoopWeights random_loops(SplitMix64& rng, std::size_t n) {
    static const Rational pool[] = {Rational(0),  Rational(0),     Rational(1),     Rational(-1),
                                    Rational(2),  Rational(-2),    Rational(1, 2),  Rational(-3, 2),
                                    Rational(3),  Rational(2, 3)};
    LoopWeights loops;
    for (Vertex v = 1; v <= n; ++v) {
        loops.set(v, pool[rng.uniform(0, std::size(pool) - 1)]);
    }
    return loops;
}

/// A random block graph whose vertex count lies in [min_vertices, max_vertices].
inline Graph random_block_graph(SplitMix64& rng, std::size_t min_vertices, std::size_t max_vertices,
                                std::size_t min_block, std::size_t max_block) {
    for (;;) {
        const std::size_t average = (min_block + max_block) / 2;
        const std::size_t most = std::max<std::size_t>(1, max_vertices / std::max<std::size_t>(1, average - 1));
        const std::size_t blocks = rng.uniform(1, most);
        Graph g = blocksing::generate(blocksing::family::RandomBlock{blocks, min_block, max_block, rng.next()});
        if (g.vertex_count() >= min_vertices && g.vertex_count() <= max_vertices) {
            return g;
        }
    }
}

/// Relabels vertex v as perm[v - 1].
inline std::pair<Graph, LoopWeights> relabel(const Graph& g, const LoopWeights& loops,
                                             const std::vector<Vertex>& perm) {
    std::vector<blocksing::Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(perm[u - 1], perm[v - 1]);
    }
    LoopWeights relabelled;
    for (const auto& [v, w] : loops) {
        relabelled.set(perm[v - 1], w);
    }
    return {Graph(g.vertex_count(), std::move(edges)), std::move(relabelled)};
}

inline std::vector<Vertex> random_permutation(SplitMix64& rng, std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<Vertex>(i + 1);
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace testing_support
