#include "qwalk/json_io.hpp"

namespace qwalk {

using nlohmann::json;

json to_json(const DeciderReport& report) {
    return json{
        {"n", report.n},
        {"s", report.s},
        {"t", report.t},
        {"k", report.k},
        {"acceptance_probability", report.acceptance_probability},
        {"threshold", report.threshold},
        {"verdict", report.accept ? "accept" : "reject"},
        {"oracle_connected", report.oracle_connected},
        {"distance_to_uniform", report.distance_to_uniform},
    };
}

json to_json(const SpectralReport& report) {
    json doc{
        {"component", report.component},
        {"n_u", report.n_u},
        {"lambdas", report.lambdas},
        {"mus", report.mus},
        {"gap", report.gap},
    };
    if (report.start.has_value()) doc["start"] = *report.start;
    if (report.overlaps.has_value()) doc["overlaps"] = *report.overlaps;
    return doc;
}

json to_json(const AmplificationPlan& plan) {
    return json{
        {"p", plan.p},
        {"f", plan.f},
        {"amplified", plan.amplified},
        {"target", plan.target},
    };
}

json to_json(const AmplifierRun& run) {
    return json{
        {"total", run.total},
        {"rounds", run.round_acceptance},
    };
}

json spectrum_document(const RegularGraph& graph, const std::vector<SpectralReport>& reports) {
    json list = json::array();
    for (const auto& report : reports) list.push_back(to_json(report));
    return json{
        {"n", graph.n},
        {"d", graph.d},
        {"num_components", reports.size()},
        {"components", std::move(list)},
    };
}

} // namespace qwalk
