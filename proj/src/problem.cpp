#include "ssrm/problem.hpp"

#include "ssrm/error.hpp"

namespace ssrm {

double ProblemDefinition::evaluate_u(std::span<const double> u) const {
  return lsf(from_u(marginals, u));
}

void validate(const ProblemDefinition& p) {
  if (p.marginals.empty()) throw ParameterError("problem '" + p.name + "' has no variables");
  if (!p.lsf) throw ParameterError("problem '" + p.name + "' has no limit state function");
  if (!p.variable_names.empty() && p.variable_names.size() != p.marginals.size()) {
    throw ParameterError("problem '" + p.name + "': variable names and marginals differ in length");
  }
  for (const auto& m : p.marginals) validate(m);
}

}  // namespace ssrm
