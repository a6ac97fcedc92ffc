#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "blocksing/blocks.hpp"
#include "blocksing/graph.hpp"
#include "blocksing/rational.hpp"

namespace blocksing {

/// A precondition of a reduction operation was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Weighted cliques M = J - D, D = diag(1 - x_1, ..., 1 - x_k).
//
// The diagonal x_i is the loop weight of clique vertex i; an empty clique is
// nonsingular by convention.
// ---------------------------------------------------------------------------

/// Two or more x_i equal 1: two equal rows, M is singular.
struct MultipleOnes {
    friend bool operator==(const MultipleOnes&, const MultipleOnes&) = default;
};
/// Exactly one x_i equals 1: M is nonsingular.
struct ExactlyOneOne {
    friend bool operator==(const ExactlyOneOne&, const ExactlyOneOne&) = default;
};
/// No x_i equals 1; s = sum 1/(1 - x_i), and M is singular iff s == 1.
struct SumCase {
    Rational s;
    friend bool operator==(const SumCase&, const SumCase&) = default;
};
using CliqueCase = std::variant<MultipleOnes, ExactlyOneOne, SumCase>;

CliqueCase clique_case(std::span<const Rational> weights);
bool clique_is_singular(std::span<const Rational> weights);

/// Loop-weight correction pushed onto a vertex joined to every clique vertex
/// once the clique is eliminated: -s/(s-1) in the sum case, -1 when exactly
/// one weight is 1. Throws ContractViolation for singular cliques.
Rational gamma(std::span<const Rational> weights);

// ---------------------------------------------------------------------------
// Pendant elimination
// ---------------------------------------------------------------------------

enum class CaseTag { multiple_ones, one_equals_one, sum_neq_one, sum_eq_one, final_component };

std::string_view to_string(CaseTag tag);

struct TraceStep {
    std::size_t step = 0;  ///< 1-based
    VertexSet block;       ///< live vertices of the block, sorted
    std::vector<Rational> weights;  ///< loop weights aligned with `block`, before the step
    std::optional<Vertex> cut_vertex;
    CaseTag kind = CaseTag::final_component;
    std::optional<Rational> s;
    std::optional<Rational> gamma;
    std::optional<Rational> new_weight;  ///< updated weight at the cut vertex
};

struct Witness {
    CaseTag reason = CaseTag::final_component;
    VertexSet block;
    std::size_t step = 0;
};

struct Verdict {
    bool singular = false;
    std::optional<Witness> witness;  ///< first witnessing step when singular
    std::vector<TraceStep> trace;
    /// Largest bit length of any numerator/denominator produced by the reduction.
    std::size_t max_rational_bits = 0;
};

enum class StepResult { reduced, singular };

struct ReductionOptions {
    /// Unset: always pick the lowest live pendant block index. Set: seeded
    /// uniformly random pendant order (order-invariance testing).
    std::optional<std::uint64_t> seed;
    bool record_trace = true;
};

/// Live BV/CV/f, loop weights W and the trace across elimination steps.
///
/// Blocks keep their initial indices; elimination flips liveness flags and
/// adjusts counts instead of rebuilding the sets, so every block and every
/// block membership is touched O(1) times over a whole run.
class ReductionState {
public:
    explicit ReductionState(const BlockCutStructure& structure, const LoopWeights& initial = {},
                            ReductionOptions options = {});
    ~ReductionState();
    ReductionState(ReductionState&&) noexcept;
    ReductionState& operator=(ReductionState&&) noexcept;

    /// A live block with exactly one cut vertex, if any.
    std::optional<std::size_t> find_pendant();

    /// Eliminates pendant block `block`. Returns StepResult::singular when the
    /// leaf clique has several weights equal to 1 (the run is then over).
    StepResult eliminate_pendant(std::size_t block);

    /// Decides the remaining disjoint weighted cliques. Requires that no
    /// pendant block remains (unless the run already ended singular). The
    /// trace is moved into the returned verdict.
    Verdict final_check();

    // Inspection, mostly for tests and the CLI.
    std::size_t block_count() const;
    bool is_live(std::size_t block) const;
    bool is_pendant(std::size_t block) const;
    VertexSet block_vertices(std::size_t block) const;
    VertexSet cut_set(std::size_t block) const;
    std::vector<std::size_t> live_blocks() const;
    std::uint32_t multiplicity(Vertex p) const;
    Rational weight(Vertex v) const;
    /// Vertices still present in the reduced graph.
    VertexSet live_vertices() const;
    /// Stored weights; never contains an exact zero.
    const std::unordered_map<Vertex, Rational>& weights() const;
    const std::vector<TraceStep>& trace() const;
    std::size_t max_rational_bits() const;
    bool finished() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Whole pipeline: block decomposition, validation, elimination, final check.
/// Throws NotBlockGraph before any reduction when a block is not complete.
Verdict is_singular(const Graph& graph, const LoopWeights& loops = {}, ReductionOptions options = {});
Verdict is_singular(const BlockCutStructure& structure, const LoopWeights& loops = {},
                    ReductionOptions options = {});

}  // namespace blocksing
