#pragma once

// ADE singularity bookkeeping for plane curves and configurations of
// singularities on a plane quintic.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "og10/common.hpp"

namespace og10::singularity {

enum class Family : std::uint8_t { A = 0, D = 1 };

/// A simple curve singularity A_index (index >= 1) or D_index (index >= 4).
///
/// Ordering is the canonical one used for display and serialization:
/// every A type before every D type, ascending index within a family.
class SingularityType {
 public:
  SingularityType(Family family, int index);

  static SingularityType A(int index) { return {Family::A, index}; }
  static SingularityType D(int index) { return {Family::D, index}; }

  /// Parses labels such as "A1" or "D4".
  static SingularityType parse(std::string_view label);

  Family family() const { return family_; }
  int index() const { return index_; }
  std::string label() const;

  auto operator<=>(const SingularityType&) const = default;

 private:
  Family family_;
  int index_;
};

/// The seven types that can appear on hyperplane sections of a general cubic
/// fourfold: A1..A5, D4, D5, in canonical order.
std::span<const SingularityType> admissible_types();

/// Multiset of singularity types. Absent types have multiplicity zero;
/// stored multiplicities are always positive. The empty configuration is a
/// smooth curve.
class SingularityConfiguration {
 public:
  SingularityConfiguration() = default;
  SingularityConfiguration(std::initializer_list<std::pair<SingularityType, int>> counts);

  /// Adds `multiplicity` copies of `type`. Zero is a no-op; negative throws.
  void add(SingularityType type, int multiplicity = 1);

  int multiplicity(SingularityType type) const;
  bool empty() const { return counts_.empty(); }
  const std::map<SingularityType, int>& counts() const { return counts_; }

  /// Types repeated by multiplicity, in canonical order.
  std::vector<SingularityType> expanded() const;

  /// Only nodes (A1) occur.
  bool is_nodal() const;

  /// "5A1", "A1+D4", "2A1+A3"; "smooth" for the empty configuration.
  std::string label() const;

  /// Multiset union.
  SingularityConfiguration operator+(const SingularityConfiguration& other) const;
  bool operator==(const SingularityConfiguration&) const = default;

 private:
  std::map<SingularityType, int> counts_;
};

/// JSON object keyed by type label in canonical order, e.g. {"A1": 5}.
nlohmann::ordered_json to_json(const SingularityConfiguration& config);
SingularityConfiguration configuration_from_json(const nlohmann::json& j);

struct PlaneCurveClass {
  int degree;

  /// (d-1)(d-2)/2
  int arithmetic_genus() const { return (degree - 1) * (degree - 2) / 2; }

  static PlaneCurveClass quintic() { return PlaneCurveClass{5}; }
};

/// Genus drop of a singularity on an irreducible curve:
/// ceil(m/2) for A_m (m <= 5) and 3 for D4, D5. Throws DomainError outside
/// that table.
int delta_invariant(SingularityType type);

/// Milnor number: m for A_m, k for D_k.
int milnor_number(SingularityType type);

/// Sum of Milnor numbers over the multiset.
int mu_total(const SingularityConfiguration& config);

/// Sum of delta invariants over the multiset.
int delta_total(const SingularityConfiguration& config);

/// Arithmetic genus minus total delta. Not clamped: out-of-regime inputs can
/// yield values below 1.
int geometric_genus(PlaneCurveClass curve, const SingularityConfiguration& config);

/// Every configuration over the admissible types with mu_total <= mu_max,
/// the empty one included. Sorted by ascending mu_total, then by the
/// expanded type sequence compared lexicographically in canonical order.
std::vector<SingularityConfiguration> enumerate_configurations(int mu_max);

/// Configurations from enumerate_configurations(mu_max) whose quintic
/// geometric genus equals 1.
std::vector<SingularityConfiguration> genus_one_configurations(int mu_max);

}  // namespace og10::singularity
