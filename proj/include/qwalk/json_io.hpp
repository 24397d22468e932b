#pragma once

#include <json.hpp>

#include "qwalk/amplify.hpp"
#include "qwalk/decider.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

nlohmann::json to_json(const DeciderReport& report);
nlohmann::json to_json(const SpectralReport& report);
nlohmann::json to_json(const AmplificationPlan& plan);
nlohmann::json to_json(const AmplifierRun& run);

// Full spectrum document: graph summary plus one entry per component.
nlohmann::json spectrum_document(const RegularGraph& graph,
                                 const std::vector<SpectralReport>& reports);

} // namespace qwalk
