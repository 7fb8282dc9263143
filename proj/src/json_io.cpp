#include "tw/json_io.hpp"

namespace tw {

void to_json(nlohmann::json& j, const CounterexampleReport& r) {
  j = nlohmann::json{
      {"test_value", r.test_value},
      {"antecedent_holds", r.antecedent_holds},
      {"consequent_holds", r.consequent_holds},
      {"eps_prefix_zero_up_to", r.eps_prefix_zero_up_to},
      {"f_kreisel_at_infinity", r.f_kreisel_at_infinity},
      {"f_kreisel_at_zerobar", r.f_kreisel_at_zerobar},
  };
}

void to_json(nlohmann::json& j, const DiscontinuityReport& r) {
  j = nlohmann::json{
      {"bound", r.bound},
      {"value_at_infinity", r.value_at_infinity},
      {"finite_values_all_zero", r.finite_values_all_zero},
      {"agreement_at", nullptr},
  };
  if (r.agreement_at) j["agreement_at"] = *r.agreement_at;
}

void to_json(nlohmann::json& j, const FuzzReport& r) {
  j = nlohmann::json{
      {"samples", r.samples},
      {"failures", r.failures},
      {"seed", r.seed},
      {"elapsed_ms", r.elapsed_ms},
  };
}

}  // namespace tw
