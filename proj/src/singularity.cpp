#include "og10/singularity.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>

namespace og10::singularity {

namespace {

constexpr int kMaxTabulatedA = 5;
constexpr int kMaxTabulatedD = 5;

const std::array<SingularityType, 7> kAdmissible = {
    SingularityType::A(1), SingularityType::A(2), SingularityType::A(3),
    SingularityType::A(4), SingularityType::A(5), SingularityType::D(4),
    SingularityType::D(5)};

bool canonical_less(const SingularityConfiguration& lhs, const SingularityConfiguration& rhs) {
  const int mu_l = mu_total(lhs);
  const int mu_r = mu_total(rhs);
  if (mu_l != mu_r) return mu_l < mu_r;
  const auto seq_l = lhs.expanded();
  const auto seq_r = rhs.expanded();
  return std::lexicographical_compare(seq_l.begin(), seq_l.end(), seq_r.begin(), seq_r.end());
}

}  // namespace

SingularityType::SingularityType(Family family, int index) : family_(family), index_(index) {
  if (family == Family::A && index < 1)
    throw DomainError("A_k singularity requires k >= 1, got " + std::to_string(index));
  if (family == Family::D && index < 4)
    throw DomainError("D_k singularity requires k >= 4, got " + std::to_string(index));
}

SingularityType SingularityType::parse(std::string_view label) {
  if (label.size() < 2 || (label[0] != 'A' && label[0] != 'D'))
    throw DomainError("malformed singularity label '" + std::string(label) + "'");
  int index = 0;
  const auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw DomainError("malformed singularity label '" + std::string(label) + "'");
  return {label[0] == 'A' ? Family::A : Family::D, index};
}

std::string SingularityType::label() const {
  return (family_ == Family::A ? "A" : "D") + std::to_string(index_);
}

std::span<const SingularityType> admissible_types() { return kAdmissible; }

SingularityConfiguration::SingularityConfiguration(
    std::initializer_list<std::pair<SingularityType, int>> counts) {
  for (const auto& [type, mult] : counts) add(type, mult);
}

void SingularityConfiguration::add(SingularityType type, int multiplicity) {
  if (multiplicity < 0) throw DomainError("negative multiplicity for " + type.label());
  if (multiplicity == 0) return;
  counts_[type] += multiplicity;
}

int SingularityConfiguration::multiplicity(SingularityType type) const {
  auto it = counts_.find(type);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<SingularityType> SingularityConfiguration::expanded() const {
  std::vector<SingularityType> out;
  for (const auto& [type, mult] : counts_) out.insert(out.end(), static_cast<std::size_t>(mult), type);
  return out;
}

bool SingularityConfiguration::is_nodal() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](const auto& kv) { return kv.first == SingularityType::A(1); });
}

std::string SingularityConfiguration::label() const {
  if (counts_.empty()) return "smooth";
  std::string out;
  for (const auto& [type, mult] : counts_) {
    if (!out.empty()) out += '+';
    if (mult > 1) out += std::to_string(mult);
    out += type.label();
  }
  return out;
}

SingularityConfiguration SingularityConfiguration::operator+(
    const SingularityConfiguration& other) const {
  SingularityConfiguration sum = *this;
  for (const auto& [type, mult] : other.counts_) sum.add(type, mult);
  return sum;
}

nlohmann::ordered_json to_json(const SingularityConfiguration& config) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [type, mult] : config.counts()) j[type.label()] = mult;
  return j;
}

SingularityConfiguration configuration_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("configuration JSON must be an object");
  SingularityConfiguration config;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw DomainError("multiplicity of " + key + " must be an integer");
    config.add(SingularityType::parse(key), value.get<int>());
  }
  return config;
}

int delta_invariant(SingularityType type) {
  if (type.family() == Family::A && type.index() <= kMaxTabulatedA) return (type.index() + 1) / 2;
  if (type.family() == Family::D && type.index() <= kMaxTabulatedD) return 3;
  throw DomainError("unsupported singularity type " + type.label() +
                    ": delta invariant is tabulated only for A1..A5, D4, D5");
}

int milnor_number(SingularityType type) { return type.index(); }

int mu_total(const SingularityConfiguration& config) {
  int mu = 0;
  for (const auto& [type, mult] : config.counts()) mu += mult * milnor_number(type);
  return mu;
}

int delta_total(const SingularityConfiguration& config) {
  int delta = 0;
  for (const auto& [type, mult] : config.counts()) delta += mult * delta_invariant(type);
  return delta;
}

int geometric_genus(PlaneCurveClass curve, const SingularityConfiguration& config) {
  return curve.arithmetic_genus() - delta_total(config);
}

std::vector<SingularityConfiguration> enumerate_configurations(int mu_max) {
  std::vector<SingularityConfiguration> out;
  if (mu_max < 0) return out;

  SingularityConfiguration current;
  std::function<void(std::size_t, int)> recurse = [&](std::size_t slot, int budget) {
    if (slot == kAdmissible.size()) {
      out.push_back(current);
      return;
    }
    const SingularityType type = kAdmissible[slot];
    const int weight = milnor_number(type);
    const SingularityConfiguration saved = current;
    for (int mult = 0; mult * weight <= budget; ++mult) {
      current = saved;
      current.add(type, mult);
      recurse(slot + 1, budget - mult * weight);
    }
    current = saved;
  };
  recurse(0, mu_max);

  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<SingularityConfiguration> genus_one_configurations(int mu_max) {
  std::vector<SingularityConfiguration> out;
  for (auto& config : enumerate_configurations(mu_max))
    if (geometric_genus(PlaneCurveClass::quintic(), config) == 1) out.push_back(std::move(config));
  return out;
}

}  // namespace og10::singularity
