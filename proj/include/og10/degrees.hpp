#pragma once

// Degree of the 5-tangent hyperplane locus of a general hypersurface in P^5
// and related reference counts for cubics.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "og10/common.hpp"
#include "og10/singularity.hpp"

namespace og10::degrees {

/// m(d) = (d-2) * d * P(d) / 120, with P of degree 23.
inline constexpr std::int64_t kM5A1Denominator = 120;

/// Coefficients of P, highest degree first.
inline constexpr std::array<std::int64_t, 24> kM5A1Coefficients = {
    1,         -18,        154,        -832,      3181,       -9332,     23306,     -56258,
    137704,    -315702,    632037,     -1167746,  2276543,    -4606484,  8183892,   -12182630,
    19262625,  -37322080,  63347155,   -72821310, 73475394,   -156527928, 284455368, -193415040};

struct TangentCount {
  std::int64_t degree;
  BigInt count;
  /// The formula is an enumerative count only for d >= 3.
  bool valid_range;
};

/// Horner evaluation of the degree-23 factor P(d).
BigInt inner_polynomial_horner(std::int64_t d);
/// Sum of c_k * d^k with explicitly computed powers.
BigInt inner_polynomial_power_sum(std::int64_t d);

/// Number of 5-tangent hyperplanes to a general degree-d hypersurface in P^5.
///
/// Evaluates through both inner-polynomial routes and throws
/// InvariantViolation if they disagree or if the division by 120 leaves a
/// remainder; either signals a corrupted coefficient table.
TangentCount evaluate_m5A1(std::int64_t d);

struct IdentityCheck {
  std::string name;
  BigInt left;
  BigInt right;
  bool equal;
};

/// 3^5(3^6-1) against m(3); 2^4(2^5-1)-1 against 495; the 45 tritangent
/// planes of a cubic surface as a recorded reference value.
std::vector<IdentityCheck> identity_checks();

/// deg of the dual variety of a smooth cubic fourfold: 3 * 2^4.
BigInt dual_variety_degree_cubic_fourfold();

struct StratumDegreeRecord {
  singularity::SingularityConfiguration configuration;
  int codimension;
  std::optional<BigInt> degree;
};

/// Known only for A1 (the dual variety) and 5A1; absent otherwise.
StratumDegreeRecord degree_record(const singularity::SingularityConfiguration& config);

}  // namespace og10::degrees
