#include "blocksing/reduction.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "blocksing/splitmix.hpp"

namespace blocksing {

CliqueCase clique_case(std::span<const Rational> weights) {
    std::size_t ones = 0;
    for (const auto& x : weights) {
        if (x.is_one() && ++ones >= 2) {
            return MultipleOnes{};
        }
    }
    if (ones == 1) {
        return ExactlyOneOne{};
    }
    Rational s;
    for (const auto& x : weights) {
        s += (Rational(1) - x).reciprocal();
    }
    return SumCase{std::move(s)};
}

bool clique_is_singular(std::span<const Rational> weights) {
    if (weights.empty()) {
        return false;
    }
    const auto c = clique_case(weights);
    if (std::holds_alternative<MultipleOnes>(c)) {
        return true;
    }
    if (const auto* sum = std::get_if<SumCase>(&c)) {
        return sum->s.is_one();
    }
    return false;
}

Rational gamma(std::span<const Rational> weights) {
    const auto c = clique_case(weights);
    if (std::holds_alternative<MultipleOnes>(c)) {
        throw ContractViolation("gamma of a clique with several weights equal to 1");
    }
    if (std::holds_alternative<ExactlyOneOne>(c)) {
        return Rational(-1);
    }
    const Rational& s = std::get<SumCase>(c).s;
    if (s.is_one()) {
        throw ContractViolation("gamma of a singular clique (S = 1)");
    }
    return -(s / (s - Rational(1)));
}

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::multiple_ones:
            return "multiple_ones";
        case CaseTag::one_equals_one:
            return "one_equals_one";
        case CaseTag::sum_neq_one:
            return "sum_neq_one";
        case CaseTag::sum_eq_one:
            return "sum_eq_one";
        case CaseTag::final_component:
            return "final_component";
    }
    return "unknown";
}

namespace {

// Set of block indices with O(log_64 n) insert/erase/lowest.
class LowestIndexSet {
public:
    explicit LowestIndexSet(std::size_t capacity) {
        std::size_t size = std::max<std::size_t>(capacity, 1);
        do {
            size = (size + 63) / 64;
            levels_.emplace_back(size, 0);
        } while (size > 1);
    }

    void insert(std::size_t i) {
        for (auto& level : levels_) {
            auto& word = level[i >> 6];
            const bool was_empty = word == 0;
            word |= std::uint64_t{1} << (i & 63);
            if (!was_empty) {
                break;
            }
            i >>= 6;
        }
    }

    void erase(std::size_t i) {
        for (auto& level : levels_) {
            auto& word = level[i >> 6];
            word &= ~(std::uint64_t{1} << (i & 63));
            if (word != 0) {
                break;
            }
            i >>= 6;
        }
    }

    std::optional<std::size_t> lowest() const {
        if (levels_.back()[0] == 0) {
            return std::nullopt;
        }
        std::size_t idx = 0;
        for (auto level = levels_.rbegin(); level != levels_.rend(); ++level) {
            idx = idx * 64 + static_cast<std::size_t>(std::countr_zero((*level)[idx]));
        }
        return idx;
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
};

// Unordered set of block indices with O(1) insert/erase/random pick.
class RandomPool {
public:
    RandomPool(std::size_t capacity, std::uint64_t seed) : pos_(capacity, npos), rng_(seed) {}

    void insert(std::size_t i) {
        if (pos_[i] == npos) {
            pos_[i] = items_.size();
            items_.push_back(i);
        }
    }

    void erase(std::size_t i) {
        if (pos_[i] == npos) {
            return;
        }
        const std::size_t last = items_.back();
        items_[pos_[i]] = last;
        pos_[last] = pos_[i];
        items_.pop_back();
        pos_[i] = npos;
    }

    std::optional<std::size_t> pick() {
        if (items_.empty()) {
            return std::nullopt;
        }
        return items_[rng_.uniform(0, items_.size() - 1)];
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> items_;
    std::vector<std::size_t> pos_;
    SplitMix64 rng_;
};

}  // namespace

struct ReductionState::Impl {
    std::size_t n = 0;
    // BV and CV as CSR: members of block b are bv_members[bv_offsets[b] .. bv_offsets[b+1]).
    std::vector<std::size_t> bv_offsets;
    std::vector<Vertex> bv_members;
    std::vector<std::size_t> cv_offsets;
    std::vector<Vertex> cv_members;
    std::vector<std::uint8_t> block_live;
    std::vector<std::uint32_t> cv_count;
    std::vector<std::uint32_t> f;
    std::vector<std::uint8_t> is_cut;
    std::vector<std::uint8_t> vertex_alive;
    // Blocks that list p as a cut vertex, CSR over p.
    std::vector<std::size_t> cut_offsets;
    std::vector<std::uint32_t> cut_blocks;
    std::unordered_map<Vertex, Rational> w;

    std::optional<LowestIndexSet> lowest;
    std::optional<RandomPool> random;

    ReductionOptions options;
    std::vector<TraceStep> trace;
    std::size_t steps = 0;
    std::size_t max_bits = 0;
    std::optional<Witness> witness;
    bool finished = false;

    Rational weight(Vertex v) const {
        const auto it = w.find(v);
        return it == w.end() ? Rational{} : it->second;
    }

    void set_weight(Vertex v, Rational value) {
        if (value.is_zero()) {
            w.erase(v);
        } else {
            w.insert_or_assign(v, std::move(value));
        }
    }

    void note_bits(const Rational& r) { max_bits = std::max(max_bits, r.bit_length()); }

    void pool_insert(std::size_t b) {
        if (lowest) {
            lowest->insert(b);
        } else {
            random->insert(b);
        }
    }

    void pool_erase(std::size_t b) {
        if (lowest) {
            lowest->erase(b);
        } else {
            random->erase(b);
        }
    }

    void refresh(std::size_t b) {
        if (block_live[b] != 0 && cv_count[b] == 1) {
            pool_insert(b);
        } else {
            pool_erase(b);
        }
    }

    // CV := CV -* p, with `except` already gone.
    void uncut(Vertex p, std::size_t except) {
        is_cut[p] = 0;
        f[p] = 0;
        for (std::size_t k = cut_offsets[p - 1]; k < cut_offsets[p]; ++k) {
            const std::size_t b = cut_blocks[k];
            if (b != except && block_live[b] != 0) {
                --cv_count[b];
                refresh(b);
            }
        }
    }

    void retire_block(std::size_t b) {
        block_live[b] = 0;
        pool_erase(b);
    }

    void kill(Vertex v) {
        vertex_alive[v] = 0;
        w.erase(v);
    }

    std::size_t block_count() const { return bv_offsets.size() - 1; }

    std::span<const Vertex> members(std::size_t b) const {
        return {bv_members.data() + bv_offsets[b], bv_members.data() + bv_offsets[b + 1]};
    }

    std::span<const Vertex> cuts(std::size_t b) const {
        return {cv_members.data() + cv_offsets[b], cv_members.data() + cv_offsets[b + 1]};
    }

    VertexSet live_members(std::size_t b) const {
        VertexSet out;
        for (const Vertex v : members(b)) {
            if (vertex_alive[v] != 0) {
                out.push_back(v);
            }
        }
        return out;
    }

    Vertex pendant_cut(std::size_t b) const {
        for (const Vertex p : cuts(b)) {
            if (is_cut[p] != 0) {
                return p;
            }
        }
        throw ContractViolation("block has no live cut vertex");
    }

    std::size_t record(TraceStep step) {
        step.step = ++steps;
        const std::size_t index = step.step;
        if (options.record_trace) {
            trace.push_back(std::move(step));
        }
        return index;
    }
};

ReductionState::ReductionState(const BlockCutStructure& structure, const LoopWeights& initial,
                               ReductionOptions options)
    : impl_(std::make_unique<Impl>()) {
    Impl& s = *impl_;
    s.n = structure.vertex_count;
    s.options = options;
    const std::size_t blocks = structure.bv.size();

    s.bv_offsets.assign(blocks + 1, 0);
    s.cv_offsets.assign(blocks + 1, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        s.bv_offsets[b + 1] = s.bv_offsets[b] + structure.bv[b].size();
        s.cv_offsets[b + 1] = s.cv_offsets[b] + structure.cv[b].size();
    }
    s.bv_members.reserve(s.bv_offsets[blocks]);
    s.cv_members.reserve(s.cv_offsets[blocks]);
    for (std::size_t b = 0; b < blocks; ++b) {
        const auto first = s.bv_members.insert(s.bv_members.end(), structure.bv[b].begin(), structure.bv[b].end());
        std::sort(first, s.bv_members.end());
        s.cv_members.insert(s.cv_members.end(), structure.cv[b].begin(), structure.cv[b].end());
    }

    s.block_live.assign(blocks, 1);
    s.cv_count.resize(blocks);
    s.f.assign(s.n + 1, 0);
    s.is_cut.assign(s.n + 1, 0);
    s.vertex_alive.assign(s.n + 1, 1);
    s.vertex_alive[0] = 0;

    s.cut_offsets.assign(s.n + 1, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        s.cv_count[b] = static_cast<std::uint32_t>(s.cuts(b).size());
        for (const Vertex p : s.cuts(b)) {
            ++s.f[p];
            s.is_cut[p] = 1;
            ++s.cut_offsets[p];
        }
    }
    for (std::size_t v = 1; v <= s.n; ++v) {
        s.cut_offsets[v] += s.cut_offsets[v - 1];
    }
    s.cut_blocks.resize(s.cut_offsets[s.n]);
    {
        std::vector<std::size_t> fill(s.cut_offsets.begin(), s.cut_offsets.end());
        for (std::size_t b = 0; b < blocks; ++b) {
            for (const Vertex p : s.cuts(b)) {
                s.cut_blocks[fill[p - 1]++] = static_cast<std::uint32_t>(b);
            }
        }
    }

    s.w.reserve(initial.size());
    for (const auto& [v, x] : initial) {
        s.set_weight(v, x);
        s.note_bits(x);
    }

    if (options.seed) {
        s.random.emplace(blocks, *options.seed);
    } else {
        s.lowest.emplace(blocks);
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        s.refresh(b);
    }
}

ReductionState::~ReductionState() = default;
ReductionState::ReductionState(ReductionState&&) noexcept = default;
ReductionState& ReductionState::operator=(ReductionState&&) noexcept = default;

std::optional<std::size_t> ReductionState::find_pendant() {
    if (impl_->finished) {
        return std::nullopt;
    }
    return impl_->lowest ? impl_->lowest->lowest() : impl_->random->pick();
}

StepResult ReductionState::eliminate_pendant(std::size_t block) {
    Impl& s = *impl_;
    if (s.finished) {
        throw ContractViolation("reduction already finished");
    }
    if (block >= s.block_count() || s.block_live[block] == 0 || s.cv_count[block] != 1) {
        throw ContractViolation("block " + std::to_string(block) + " is not a live pendant block");
    }
    const Vertex p = s.pendant_cut(block);
    const bool tracing = s.options.record_trace;

    TraceStep step;
    step.cut_vertex = p;
    std::vector<Rational> leaf_weights;
    for (const Vertex v : s.members(block)) {
        if (s.vertex_alive[v] == 0) {
            continue;
        }
        Rational x = s.weight(v);
        if (tracing) {
            step.block.push_back(v);
            step.weights.push_back(x);
        }
        if (v != p) {
            leaf_weights.push_back(std::move(x));
        }
    }

    const CliqueCase c = clique_case(leaf_weights);
    if (std::holds_alternative<MultipleOnes>(c)) {
        step.kind = CaseTag::multiple_ones;
        const std::size_t index = s.record(std::move(step));
        s.witness = Witness{CaseTag::multiple_ones, s.live_members(block), index};
        s.finished = true;
        return StepResult::singular;
    }

    const auto* sum = std::get_if<SumCase>(&c);
    if (sum != nullptr) {
        s.note_bits(sum->s);
        if (tracing) {
            step.s = sum->s;
        }
    }

    for (const Vertex v : s.members(block)) {
        if (v != p && s.vertex_alive[v] != 0) {
            s.kill(v);
        }
    }
    s.retire_block(block);

    if (sum != nullptr && sum->s.is_one()) {
        // The leaf clique is singular; the pendant block together with p is
        // split off as a nonsingular bordered matrix, whatever p's weight was.
        step.kind = CaseTag::sum_eq_one;
        s.kill(p);
        s.uncut(p, block);
        s.record(std::move(step));
        return StepResult::reduced;
    }

    Rational g = sum != nullptr ? -(sum->s / (sum->s - Rational(1))) : Rational(-1);
    Rational updated = s.weight(p) + g;
    s.note_bits(g);
    s.note_bits(updated);
    step.kind = sum != nullptr ? CaseTag::sum_neq_one : CaseTag::one_equals_one;
    if (tracing) {
        step.gamma = std::move(g);
        step.new_weight = updated;
    }
    s.set_weight(p, std::move(updated));

    if (s.f[p] == 2) {
        s.uncut(p, block);
    } else {
        --s.f[p];
    }
    s.record(std::move(step));
    return StepResult::reduced;
}

Verdict ReductionState::final_check() {
    Impl& s = *impl_;
    if (!s.finished) {
        if ((s.lowest ? s.lowest->lowest() : s.random->pick()).has_value()) {
            throw ContractViolation("final_check called while pendant blocks remain");
        }
        for (std::size_t b = 0; b < s.block_count(); ++b) {
            if (s.block_live[b] == 0) {
                continue;
            }
            TraceStep step;
            step.block = s.live_members(b);
            if (step.block.empty()) {
                continue;
            }
            step.kind = CaseTag::final_component;
            for (const Vertex v : step.block) {
                step.weights.push_back(s.weight(v));
            }
            const CliqueCase c = clique_case(step.weights);
            bool singular = std::holds_alternative<MultipleOnes>(c);
            if (const auto* sum = std::get_if<SumCase>(&c)) {
                s.note_bits(sum->s);
                singular = sum->s.is_one();
                step.s = sum->s;
            }
            VertexSet block = singular && !s.witness ? step.block : VertexSet{};
            const std::size_t index = s.record(std::move(step));
            if (singular && !s.witness) {
                s.witness = Witness{CaseTag::final_component, std::move(block), index};
            }
        }
        s.finished = true;
    }

    Verdict verdict;
    verdict.singular = s.witness.has_value();
    verdict.witness = s.witness;
    verdict.trace = std::move(s.trace);
    s.trace.clear();
    verdict.max_rational_bits = s.max_bits;
    return verdict;
}

std::size_t ReductionState::block_count() const { return impl_->block_count(); }

bool ReductionState::is_live(std::size_t block) const { return impl_->block_live.at(block) != 0; }

bool ReductionState::is_pendant(std::size_t block) const {
    return is_live(block) && impl_->cv_count[block] == 1;
}

VertexSet ReductionState::block_vertices(std::size_t block) const { return impl_->live_members(block); }

VertexSet ReductionState::cut_set(std::size_t block) const {
    VertexSet out;
    if (!is_live(block)) {
        return out;
    }
    for (const Vertex p : impl_->cuts(block)) {
        if (impl_->is_cut[p] != 0) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> ReductionState::live_blocks() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < impl_->block_count(); ++b) {
        if (impl_->block_live[b] != 0) {
            out.push_back(b);
        }
    }
    return out;
}

std::uint32_t ReductionState::multiplicity(Vertex p) const { return p < impl_->f.size() ? impl_->f[p] : 0; }

Rational ReductionState::weight(Vertex v) const { return impl_->weight(v); }

VertexSet ReductionState::live_vertices() const {
    VertexSet out;
    for (Vertex v = 1; v <= impl_->n; ++v) {
        if (impl_->vertex_alive[v] != 0) {
            out.push_back(v);
        }
    }
    return out;
}

const std::unordered_map<Vertex, Rational>& ReductionState::weights() const { return impl_->w; }

const std::vector<TraceStep>& ReductionState::trace() const { return impl_->trace; }

std::size_t ReductionState::max_rational_bits() const { return impl_->max_bits; }

bool ReductionState::finished() const { return impl_->finished; }

Verdict is_singular(const BlockCutStructure& structure, const LoopWeights& loops, ReductionOptions options) {
    ReductionState state(structure, loops, options);
    while (const auto block = state.find_pendant()) {
        if (state.eliminate_pendant(*block) == StepResult::singular) {
            break;
        }
    }
    return state.final_check();
}

Verdict is_singular(const Graph& graph, const LoopWeights& loops, ReductionOptions options) {
    return is_singular(build_block_cut_structure(graph), loops, options);
}

}  // namespace blocksing
