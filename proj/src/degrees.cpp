#include "og10/degrees.hpp"

#include <boost/multiprecision/integer.hpp>

namespace og10::degrees {

namespace {

constexpr std::size_t kInnerDegree = kM5A1Coefficients.size() - 1;

BigInt ipow(BigInt base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

}  // namespace

BigInt inner_polynomial_horner(std::int64_t d) {
  BigInt acc = 0;
  const BigInt x = d;
  for (std::int64_t c : kM5A1Coefficients) acc = acc * x + c;
  return acc;
}

BigInt inner_polynomial_power_sum(std::int64_t d) {
  BigInt acc = 0;
  const BigInt x = d;
  for (std::size_t i = 0; i < kM5A1Coefficients.size(); ++i)
    acc += BigInt(kM5A1Coefficients[i]) * ipow(x, static_cast<unsigned>(kInnerDegree - i));
  return acc;
}

TangentCount evaluate_m5A1(std::int64_t d) {
  const BigInt horner = inner_polynomial_horner(d);
  if (horner != inner_polynomial_power_sum(d))
    throw InvariantViolation("inner polynomial evaluations disagree at d = " + std::to_string(d));

  const BigInt numerator = BigInt(d - 2) * BigInt(d) * horner;
  if (numerator % kM5A1Denominator != 0)
    throw InvariantViolation("m5A1(" + std::to_string(d) + ") is not an integer; coefficient table corrupted");
  return {d, numerator / kM5A1Denominator, d >= 3};
}

std::vector<IdentityCheck> identity_checks() {
  std::vector<IdentityCheck> out;

  const BigInt three_torsion = ipow(3, 5) * (ipow(3, 6) - 1);
  const BigInt m3 = evaluate_m5A1(3).count;
  out.push_back({"3^5(3^6-1)", three_torsion, m3, three_torsion == m3});

  const BigInt cubic_threefold = ipow(2, 4) * (ipow(2, 5) - 1) - 1;
  const BigInt four_tangent = 495;
  out.push_back({"2^4(2^5-1)-1", cubic_threefold, four_tangent, cubic_threefold == four_tangent});

  // Reference value only; nothing independent to compare it with.
  const BigInt tritangent = 45;
  out.push_back({"tritangents", tritangent, tritangent, true});
  return out;
}

BigInt dual_variety_degree_cubic_fourfold() { return 3 * ipow(2, 4); }

StratumDegreeRecord degree_record(const singularity::SingularityConfiguration& config) {
  using singularity::SingularityConfiguration;
  using singularity::SingularityType;
  StratumDegreeRecord record{config, singularity::mu_total(config), std::nullopt};
  if (config == SingularityConfiguration{{SingularityType::A(1), 1}})
    record.degree = dual_variety_degree_cubic_fourfold();
  else if (config == SingularityConfiguration{{SingularityType::A(1), 5}})
    record.degree = evaluate_m5A1(3).count;
  return record;
}

}  // namespace og10::degrees
