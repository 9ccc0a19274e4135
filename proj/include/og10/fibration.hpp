#pragma once

// Euler characteristic of a proper map aggregated over a stratification of
// the base, and the stratum model for the intermediate-Jacobian fibration of
// a general cubic fourfold.

#include <optional>
#include <string>
#include <vector>

#include "og10/common.hpp"
#include "og10/singularity.hpp"

namespace og10::fibration {

struct FibrationStratum {
  std::string label;
  /// chi of the base stratum, or its point count when finite. Empty means
  /// "unused": the stratum is only allowed to have fiber chi 0.
  std::optional<BigInt> base_euler;
  BigInt fiber_euler;
};

/// Strata are declared by the caller to partition the base; labels must be
/// distinct.
class FibrationModel {
 public:
  FibrationModel() = default;
  explicit FibrationModel(std::vector<FibrationStratum> strata);

  /// Throws DomainError on a duplicate label.
  void add(FibrationStratum stratum);

  const std::vector<FibrationStratum>& strata() const { return strata_; }
  const FibrationStratum* find(const std::string& label) const;

  /// Disjoint union; labels must stay distinct.
  FibrationModel disjoint_union(const FibrationModel& other) const;

 private:
  std::vector<FibrationStratum> strata_;
};

/// base(S) * fiber(S) summed over strata. A stratum with an unused base and a
/// nonzero fiber is rejected with DomainError, as are duplicate labels.
BigInt total_euler(const FibrationModel& model);

/// Label of the smooth locus.
inline constexpr const char* kSmoothLabel = "U";

/// U with torus fibers, plus one stratum per singular configuration with
/// mu_total <= 5. Only 5A1 has a nonzero fiber chi; its base is the finite
/// set of 5-tangent hyperplanes.
FibrationModel build_og10_model();

struct TraceRow {
  std::string label;
  std::optional<singularity::SingularityConfiguration> configuration;  // empty for U
  int mu_total;
  int geometric_genus;
  BigInt fiber_euler;
  std::optional<BigInt> base_euler;
  BigInt contribution;
};

/// One row per stratum of build_og10_model(), in model order.
std::vector<TraceRow> og10_trace();

}  // namespace og10::fibration
