#include "blocksing/trace_json.hpp"

namespace blocksing {

namespace {

nlohmann::ordered_json optional_rational(const std::optional<Rational>& r) {
    return r ? nlohmann::ordered_json(r->to_string()) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const TraceStep& step) {
    nlohmann::ordered_json j;
    j["step"] = step.step;
    j["block"] = step.block;
    j["cut_vertex"] = step.cut_vertex ? nlohmann::ordered_json(*step.cut_vertex) : nlohmann::ordered_json(nullptr);
    j["case"] = std::string(to_string(step.kind));
    j["S"] = optional_rational(step.s);
    j["gamma"] = optional_rational(step.gamma);
    j["new_weight"] = optional_rational(step.new_weight);
    return j;
}

std::string to_json_line(const TraceStep& step) { return to_json(step).dump(); }

nlohmann::ordered_json to_json(const BlockCutStructure& structure) {
    nlohmann::ordered_json j;
    j["BV"] = structure.bv;
    j["CV"] = structure.cv;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (Vertex v = 1; v < structure.f.size(); ++v) {
        if (structure.f[v] != 0) {
            f[std::to_string(v)] = structure.f[v];
        }
    }
    j["f"] = std::move(f);
    return j;
}

}  // namespace blocksing
