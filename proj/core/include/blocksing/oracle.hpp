#pragma once

#include <cstddef>

#include "blocksing/graph.hpp"
#include "blocksing/rational.hpp"

namespace blocksing {

struct RankReport {
    std::size_t rank = 0;
    std::size_t nullity = 0;  ///< order - rank
    Rational det;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Each row is first
/// scaled to integers by the lcm of its denominators; the scaling is divided
/// back out at the end. Pivot: first nonzero entry in the column, rows in
/// order. O(k^3) big-integer operations. The 0x0 determinant is 1.
Rational exact_determinant(const RationalMatrix& matrix);

/// Rank (over Q), nullity and determinant of a square matrix.
RankReport exact_rank_nullity(const RationalMatrix& matrix);

/// Checks
///
///     det(G) = det(G1) det(G2\v) + det(G1\v) det(G2) - alpha det(G1\v) det(G2\v)
///
/// where G glues G1 at v1 to G2 at v2 into a vertex v. All three graphs carry
/// loop weight alpha at v (the loops of W1 at v1 and W2 at v2 are replaced);
/// every other vertex keeps its own loop. Both sides are evaluated with
/// exact_determinant. Throws std::out_of_range for invalid vertex ids.
bool coalescence_identity_holds(const Graph& g1, const LoopWeights& w1, Vertex v1, const Graph& g2,
                                const LoopWeights& w2, Vertex v2, const Rational& alpha);

struct Coalescence {
    Graph graph;
    LoopWeights loops;
    Vertex merged = 0;
};

/// The glued graph used by coalescence_identity_holds. G1 keeps its labels;
/// G2's vertices other than v2 are appended after them in order.
Coalescence coalesce(const Graph& g1, const LoopWeights& w1, Vertex v1, const Graph& g2, const LoopWeights& w2,
                     Vertex v2, const Rational& alpha);

/// Repeatedly matches a leaf with its neighbour. Linear time. Throws
/// std::invalid_argument unless the input is a tree (connected, m = n - 1).
bool tree_has_perfect_matching(const Graph& tree);

}  // namespace blocksing
