#include "og10/fibration.hpp"

#include <unordered_set>

#include "og10/degrees.hpp"
#include "og10/prym.hpp"

namespace og10::fibration {

namespace {

constexpr int kMaxMuTotal = 5;

using singularity::PlaneCurveClass;
using singularity::SingularityConfiguration;
using singularity::SingularityType;

BigInt fiber_euler_for(const SingularityConfiguration& config) {
  const int genus = singularity::geometric_genus(PlaneCurveClass::quintic(), config);
  if (config.is_nodal() && genus >= 1) {
    const prym::NodalCoverModel cover(config.multiplicity(SingularityType::A(1)), genus);
    return prym::euler_prym(cover);
  }
  return genus == 1 ? 1 : 0;
}

}  // namespace

FibrationModel::FibrationModel(std::vector<FibrationStratum> strata) {
  for (auto& s : strata) add(std::move(s));
}

void FibrationModel::add(FibrationStratum stratum) {
  if (find(stratum.label) != nullptr)
    throw DomainError("duplicate stratum label '" + stratum.label + "'");
  strata_.push_back(std::move(stratum));
}

const FibrationStratum* FibrationModel::find(const std::string& label) const {
  for (const auto& s : strata_)
    if (s.label == label) return &s;
  return nullptr;
}

FibrationModel FibrationModel::disjoint_union(const FibrationModel& other) const {
  FibrationModel out = *this;
  for (const auto& s : other.strata_) out.add(s);
  return out;
}

BigInt total_euler(const FibrationModel& model) {
  std::unordered_set<std::string> seen;
  BigInt total = 0;
  for (const auto& s : model.strata()) {
    if (!seen.insert(s.label).second) throw DomainError("duplicate stratum label '" + s.label + "'");
    if (s.fiber_euler == 0) continue;
    if (!s.base_euler)
      throw DomainError("stratum '" + s.label + "' has nonzero fiber chi but no base Euler characteristic");
    total += *s.base_euler * s.fiber_euler;
  }
  return total;
}

FibrationModel build_og10_model() {
  FibrationModel model;
  // Smooth intermediate Jacobians are complex tori.
  model.add({kSmoothLabel, std::nullopt, 0});

  const SingularityConfiguration five_nodes{{SingularityType::A(1), 5}};
  for (const auto& config : singularity::enumerate_configurations(kMaxMuTotal)) {
    if (config.empty()) continue;
    FibrationStratum stratum{config.label(), std::nullopt, fiber_euler_for(config)};
    // Each 5-tangent hyperplane is one point of the base, multiplicity 1.
    if (config == five_nodes) stratum.base_euler = degrees::evaluate_m5A1(3).count;
    model.add(std::move(stratum));
  }
  return model;
}

std::vector<TraceRow> og10_trace() {
  const FibrationModel model = build_og10_model();
  std::vector<TraceRow> rows;
  const auto configs = singularity::enumerate_configurations(kMaxMuTotal);
  for (const auto& s : model.strata()) {
    std::optional<SingularityConfiguration> config;
    if (s.label != kSmoothLabel) {
      for (const auto& c : configs)
        if (c.label() == s.label) config = c;
    }
    const SingularityConfiguration resolved = config.value_or(SingularityConfiguration{});
    BigInt contribution = s.base_euler ? *s.base_euler * s.fiber_euler : BigInt(0);
    rows.push_back({s.label, config, singularity::mu_total(resolved),
                    singularity::geometric_genus(PlaneCurveClass::quintic(), resolved), s.fiber_euler,
                    s.base_euler, std::move(contribution)});
  }
  return rows;
}

}  // namespace og10::fibration
