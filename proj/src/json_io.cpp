#include "micut/json_io.hpp"

namespace micut {

using nlohmann::json;

json solution_to_json(const IndependentCutSolution& sol, const std::string& algorithm,
                      std::optional<std::uint64_t> seed) {
  json j;
  j["set"] = sol.set.members();
  j["value"] = sol.value;
  j["algorithm"] = algorithm;
  if (seed) j["seed"] = *seed;
  return j;
}

json trace_to_json(const DynamicsTrace& trace) {
  json j;
  j["steps"] = trace.step_count;
  json seq = json::array();
  for (const Rational& phi : trace.frustration_sequence) seq.push_back(phi.str());
  j["frustration_sequence"] = std::move(seq);
  j["final_profile"] = profile_to_string(trace.final_profile);
  return j;
}

json certificate_to_json(const ReductionCertificate& cert) {
  json j;
  j["source"] = cert.source;
  j["n"] = cert.n;
  j["m"] = cert.m;
  j["nodes"] = cert.nodes;
  j["edges"] = cert.edges;
  j["max_degree"] = cert.max_deg;
  j["opt_sat"] = cert.opt_sat;
  j["opt_cut"] = cert.opt_cut;
  j["counts_hold"] = cert.counts_hold;
  j["degree_bound_holds"] = cert.degree_bound_holds;
  j["solution_bound_holds"] = cert.solution_bound_holds;
  j["optimum_identity_holds"] = cert.optimum_identity_holds;
  j["beta1_holds"] = cert.beta1_holds;
  j["alpha21_holds"] = cert.alpha21_holds;
  j["check_mode"] = cert.check_mode;
  j["checked_sets"] = cert.checked_sets;
  j["all_hold"] = cert.all_hold();
  if (cert.counterexample) {
    json cx;
    cx["failed_check"] = cert.counterexample->failed_check;
    cx["set"] = cert.counterexample->set;
    cx["assignment"] = cert.counterexample->assignment;
    cx["cut_value"] = cert.counterexample->cut_value;
    cx["sat_value"] = cert.counterexample->sat_value;
    j["counterexample"] = std::move(cx);
  }
  return j;
}

json preprocess_report_to_json(const PreprocessReport& report) {
  json j;
  j["removed_tautologies"] = report.removed_tautologies;
  j["guaranteed_true"] = report.guaranteed_true;
  json forced = json::object();
  for (const auto& [var, value] : report.forced) forced[std::to_string(var)] = value;
  j["forced"] = std::move(forced);
  j["residual_n"] = report.residual.variable_count;
  j["residual_m"] = report.residual.clause_count();
  j["residual_vars"] = report.residual_vars;
  return j;
}

}  // namespace micut
