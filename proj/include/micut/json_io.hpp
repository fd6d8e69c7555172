#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "micut/game.hpp"
#include "micut/reductions.hpp"
#include "micut/sat.hpp"
#include "micut/solvers.hpp"

namespace micut {

// {set, value, algorithm, seed?}
nlohmann::json solution_to_json(const IndependentCutSolution& sol, const std::string& algorithm,
                                std::optional<std::uint64_t> seed = std::nullopt);

// {steps, frustration_sequence, final_profile}
nlohmann::json trace_to_json(const DynamicsTrace& trace);

nlohmann::json certificate_to_json(const ReductionCertificate& cert);

nlohmann::json preprocess_report_to_json(const PreprocessReport& report);

}  // namespace micut
