#pragma once

// Betti-number constraints for compact hyper-Kahler manifolds and a bounded
// feasibility search for the OG10 case.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "og10/common.hpp"

namespace og10::betti {

inline constexpr int kOg10HalfDimension = 5;
inline constexpr std::int64_t kOg10B2 = 24;
inline constexpr std::int64_t kOg10Euler = 176904;

/// b_0..b_{4n} of a compact manifold of real dimension 4n. Construction only
/// checks shape (length 4n+1, nonnegative entries); b0 = 1, b1 = 0 and
/// Poincare duality are reported by the checks instead of enforced here.
class BettiVector {
 public:
  BettiVector(int half_dimension, std::vector<std::int64_t> values);

  /// Builds the full vector from b_0..b_{2n} by Poincare duality.
  static BettiVector from_lower_half(int half_dimension, const std::vector<std::int64_t>& lower);

  int half_dimension() const { return n_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::int64_t operator[](std::size_t k) const { return values_.at(k); }

  bool poincare_dual() const;

  auto operator<=>(const BettiVector&) const = default;

 private:
  int n_;
  std::vector<std::int64_t> values_;
};

/// {"n": 5, "b": [1, 0, 24, ...]}
nlohmann::ordered_json to_json(const BettiVector& b);
BettiVector betti_from_json(const nlohmann::json& j);

struct SalamonResult {
  bool holds;
  BigInt left;
  BigInt right;
};

/// left = 2 * sum_{l=1}^{2n} (-1)^l (3 l^2 - n) b_{2n-l}, right = n * b_{2n}.
/// Uses only b_0..b_{2n}; does not assume duality.
SalamonResult salamon_check(const BettiVector& b);

/// Coefficient of b_j (0 <= j <= 2n) in left - right of the relation above.
std::int64_t salamon_coefficient(int n, int j);

struct VerbitskyBound {
  int k;
  BigInt lower_bound;
};

/// b_{2k} >= C(b2 + k - 1, k) for k = 2..n. Requires n >= 2.
std::vector<VerbitskyBound> verbitsky_bounds(int n, std::int64_t b2);

/// For b2 < 3 the bounds degenerate and fall outside the studied regime.
inline bool verbitsky_outside_regime(std::int64_t b2) { return b2 < 3; }

/// Alternating sum of Betti numbers.
BigInt euler_from_betti(const BettiVector& b);

struct VerbitskyViolation {
  int k;
  BigInt required;
  std::int64_t actual;
};

/// Independent checks of a candidate OG10 Betti vector.
struct ConstraintReport {
  bool b0_holds;
  bool b1_holds;
  std::int64_t b2_actual;
  bool b2_holds;
  bool duality_holds;
  SalamonResult salamon;
  /// Bounds use the vector's own b2.
  std::vector<VerbitskyViolation> verbitsky_violations;
  BigInt euler_value;
  bool euler_holds;

  bool all_pass() const {
    return b0_holds && b1_holds && b2_holds && duality_holds && salamon.holds &&
           verbitsky_violations.empty() && euler_holds;
  }
};

/// Throws DomainError unless n = 5.
ConstraintReport check_og10(const BettiVector& b);

/// Upper bounds on b3, b5, b7, b9.
struct OddBounds {
  std::array<std::int64_t, 4> max{12, 12, 12, 12};

  static OddBounds uniform(std::int64_t bound) { return {{bound, bound, bound, bound}}; }
};

struct SearchResult {
  /// Exact number of feasible vectors within the bounds.
  BigInt total_count;
  /// Lexicographically smallest feasible vectors, at most `limit` of them.
  std::vector<BettiVector> vectors;
  bool truncated;
};

/// Enumerates OG10 Betti vectors with b0 = 1, b1 = 0, b2 = 24, duality, the
/// Verbitsky bounds, Salamon's relation and chi = 176904, with the odd Betti
/// numbers b3..b9 inside `bounds`. Returns the exact count and the first
/// `limit` vectors in lexicographic order (all of them when limit is empty).
/// Throws DomainError for negative bounds.
SearchResult search_feasible_og10(const OddBounds& bounds = {},
                                  std::optional<std::size_t> limit = std::nullopt);

}  // namespace og10::betti
