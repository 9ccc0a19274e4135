#include "og10/betti.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace og10::betti {

namespace {

BigInt binomial(BigInt top, int k) {
  if (k < 0 || top < k) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (top - k + i) / i;
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m, gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = positive_mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return positive_mod(old_s, m);
}

// Coefficient of b_j in the Euler characteristic once duality folds b_{4n-j}
// onto b_j.
std::int64_t folded_euler_coefficient(int n, int j) {
  const std::int64_t sign = (j % 2 == 0) ? 1 : -1;
  return j == 2 * n ? sign : 2 * sign;
}

// Arithmetic progression first, first + step, ..., <= last.
struct Progression {
  std::int64_t first;
  std::int64_t step;
  std::int64_t last;

  std::uint64_t size() const { return static_cast<std::uint64_t>((last - first) / step + 1); }
};

// The OG10 system with the odd Betti numbers fixed. Euler's relation is used
// to eliminate b10, which leaves
//   a4 b4 + a6 b6 + a8 b8 = rhs,   b10 = euler_rest - e4 b4 - e6 b6 - e8 b8,
// with every coefficient derived from the Salamon and Euler formulas.
class Og10System {
 public:
  explicit Og10System(const std::array<std::int64_t, 4>& odd) : odd_(odd) {
    constexpr int n = kOg10HalfDimension;
    const std::int64_t s_mid = salamon_coefficient(n, 2 * n);
    for (int j = 0; j < 2 * n; ++j) {
      euler_[j] = folded_euler_coefficient(n, j);
      reduced_[j] = salamon_coefficient(n, j) - s_mid * euler_[j];
    }
    for (int k = 2; k <= n; ++k) {
      const BigInt bound = binomial(BigInt(kOg10B2 + k - 1), k);
      lower_[k] = bound.convert_to<std::int64_t>();
    }

    rhs_ = -s_mid * kOg10Euler;
    euler_rest_ = kOg10Euler;
    const std::array<std::pair<int, std::int64_t>, 7> known = {
        {{0, 1}, {1, 0}, {2, kOg10B2}, {3, odd[0]}, {5, odd[1]}, {7, odd[2]}, {9, odd[3]}}};
    for (auto [j, value] : known) {
      rhs_ -= reduced_[j] * value;
      euler_rest_ -= euler_[j] * value;
    }

    // The search relies on b8 decreasing and b10 increasing in b6 at fixed b4.
    if (a(4) <= 0 || a(6) <= 0 || a(8) <= 0 || b6_slope() <= 0)
      throw InvariantViolation("eliminated Betti system lost its monotone structure");
  }

  std::int64_t a(int j) const { return reduced_[j]; }
  std::int64_t lower(int k) const { return lower_[k]; }

  std::int64_t max_b4() const {
    return floor_div(rhs_ - a(6) * lower(3) - a(8) * lower(4), a(4));
  }

  // Feasible b6 values for a fixed b4.
  std::optional<Progression> b6_values(std::int64_t b4) const {
    const std::int64_t k_rest = rhs_ - a(4) * b4;
    const std::int64_t hi = floor_div(k_rest - a(8) * lower(4), a(6));
    const std::int64_t b10_rhs =
        a(8) * lower(5) - a(8) * (euler_rest_ - euler_[4] * b4) + euler_[8] * k_rest;
    const std::int64_t lo = std::max(lower(3), ceil_div(b10_rhs, b6_slope()));
    if (lo > hi) return std::nullopt;

    // a6 * b6 == k_rest (mod a8)
    const std::int64_t g = std::gcd(a(6), a(8));
    if (positive_mod(k_rest, g) != 0) return std::nullopt;
    const std::int64_t m = a(8) / g;
    const std::int64_t residue =
        m == 1 ? 0 : positive_mod((k_rest / g % m) * mod_inverse(a(6) / g, m), m);
    const std::int64_t first = lo + positive_mod(residue - lo, m);
    if (first > hi) return std::nullopt;
    return Progression{first, m, hi - positive_mod(hi - first, m)};
  }

  BettiVector vector_at(std::int64_t b4, std::int64_t b6) const {
    const std::int64_t numerator = rhs_ - a(4) * b4 - a(6) * b6;
    if (numerator % a(8) != 0) throw InvariantViolation("b8 is not integral on a progression point");
    const std::int64_t b8 = numerator / a(8);
    const std::int64_t b10 = euler_rest_ - euler_[4] * b4 - euler_[6] * b6 - euler_[8] * b8;
    return BettiVector::from_lower_half(
        kOg10HalfDimension,
        {1, 0, kOg10B2, odd_[0], b4, odd_[1], b6, odd_[2], b8, odd_[3], b10});
  }

 private:
  std::int64_t b6_slope() const { return euler_[8] * a(6) - euler_[6] * a(8); }

  std::array<std::int64_t, 4> odd_;
  std::array<std::int64_t, 2 * kOg10HalfDimension> euler_{};
  std::array<std::int64_t, 2 * kOg10HalfDimension> reduced_{};
  std::array<std::int64_t, kOg10HalfDimension + 1> lower_{};
  std::int64_t rhs_ = 0;
  std::int64_t euler_rest_ = 0;
};

template <typename F>
void for_each_odd(const OddBounds& bounds, F&& f) {
  for (std::int64_t b3 = 0; b3 <= bounds.max[0]; ++b3)
    for (std::int64_t b5 = 0; b5 <= bounds.max[1]; ++b5)
      for (std::int64_t b7 = 0; b7 <= bounds.max[2]; ++b7)
        for (std::int64_t b9 = 0; b9 <= bounds.max[3]; ++b9) f(std::array{b3, b5, b7, b9});
}

BigInt count_feasible(const OddBounds& bounds) {
  BigInt total = 0;
  for_each_odd(bounds, [&](const std::array<std::int64_t, 4>& odd) {
    const Og10System system(odd);
    std::uint64_t count = 0;
    for (std::int64_t b4 = system.lower(2); b4 <= system.max_b4(); ++b4)
      if (auto p = system.b6_values(b4)) count += p->size();
    total += count;
  });
  return total;
}

// Lexicographic order on the full vector reduces to (b3, b4, b5, b6, b7, b8,
// b9): everything else is fixed or determined by these. b3, b4, b5 are looped
// directly; the progressions of b6 for every (b7, b9) are merged in ascending
// order, and ties are broken by sorting the vectors themselves.
std::vector<BettiVector> first_feasible(const OddBounds& bounds, std::optional<std::size_t> limit) {
  std::vector<BettiVector> out;
  auto full = [&] { return limit && out.size() >= *limit; };

  for (std::int64_t b3 = 0; b3 <= bounds.max[0] && !full(); ++b3) {
    std::int64_t b4_hi = -1;
    std::int64_t b4_lo = 0;
    for (std::int64_t b5 = 0; b5 <= bounds.max[1]; ++b5)
      for (std::int64_t b7 = 0; b7 <= bounds.max[2]; ++b7)
        for (std::int64_t b9 = 0; b9 <= bounds.max[3]; ++b9) {
          const Og10System system({b3, b5, b7, b9});
          b4_lo = system.lower(2);
          b4_hi = std::max(b4_hi, system.max_b4());
        }

    for (std::int64_t b4 = b4_lo; b4 <= b4_hi && !full(); ++b4) {
      for (std::int64_t b5 = 0; b5 <= bounds.max[1] && !full(); ++b5) {
        struct Stream {
          Og10System system;
          Progression p;
          std::int64_t next;
        };
        std::vector<Stream> streams;
        for (std::int64_t b7 = 0; b7 <= bounds.max[2]; ++b7)
          for (std::int64_t b9 = 0; b9 <= bounds.max[3]; ++b9) {
            Og10System system({b3, b5, b7, b9});
            if (b4 > system.max_b4()) continue;
            if (auto p = system.b6_values(b4)) streams.push_back({system, *p, p->first});
          }

        while (!streams.empty() && !full()) {
          std::int64_t b6 = streams.front().next;
          for (const auto& s : streams) b6 = std::min(b6, s.next);
          std::vector<BettiVector> batch;
          for (auto& s : streams)
            if (s.next == b6) {
              batch.push_back(s.system.vector_at(b4, b6));
              s.next += s.p.step;
            }
          std::erase_if(streams, [](const Stream& s) { return s.next > s.p.last; });
          std::sort(batch.begin(), batch.end());
          for (auto& v : batch) {
            if (full()) break;
            if (!check_og10(v).all_pass())
              throw InvariantViolation("search produced a vector failing the OG10 checks");
            out.push_back(std::move(v));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

BettiVector::BettiVector(int half_dimension, std::vector<std::int64_t> values)
    : n_(half_dimension), values_(std::move(values)) {
  if (n_ < 1) throw DomainError("half dimension must be positive");
  if (values_.size() != static_cast<std::size_t>(4 * n_ + 1))
    throw DomainError("Betti vector for n = " + std::to_string(n_) + " needs " +
                      std::to_string(4 * n_ + 1) + " entries, got " + std::to_string(values_.size()));
  if (std::any_of(values_.begin(), values_.end(), [](std::int64_t v) { return v < 0; }))
    throw DomainError("Betti numbers must be nonnegative");
}

BettiVector BettiVector::from_lower_half(int half_dimension, const std::vector<std::int64_t>& lower) {
  if (lower.size() != static_cast<std::size_t>(2 * half_dimension + 1))
    throw DomainError("lower half needs 2n+1 entries");
  std::vector<std::int64_t> values(4 * half_dimension + 1);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    values[k] = lower[k];
    values[values.size() - 1 - k] = lower[k];
  }
  return {half_dimension, std::move(values)};
}

bool BettiVector::poincare_dual() const { return std::equal(values_.begin(), values_.end(), values_.rbegin()); }

nlohmann::ordered_json to_json(const BettiVector& b) {
  return nlohmann::ordered_json{{"n", b.half_dimension()}, {"b", b.values()}};
}

BettiVector betti_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("b"))
    throw DomainError(R"(Betti JSON must look like {"n": 5, "b": [...]})");
  if (!j["n"].is_number_integer() || !j["b"].is_array())
    throw DomainError("Betti JSON: 'n' must be an integer and 'b' an array");
  std::vector<std::int64_t> values;
  for (const auto& v : j["b"]) {
    if (!v.is_number_integer()) throw DomainError("Betti JSON: entries of 'b' must be integers");
    values.push_back(v.get<std::int64_t>());
  }
  return {j["n"].get<int>(), std::move(values)};
}

std::int64_t salamon_coefficient(int n, int j) {
  if (j < 0 || j > 2 * n) throw DomainError("Salamon coefficient index out of range");
  if (j == 2 * n) return -n;
  const std::int64_t l = 2 * n - j;
  const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
  return 2 * sign * (3 * l * l - n);
}

SalamonResult salamon_check(const BettiVector& b) {
  const int n = b.half_dimension();
  BigInt left = 0;
  for (int l = 1; l <= 2 * n; ++l) {
    const std::int64_t sign = (l % 2 == 0) ? 1 : -1;
    left += BigInt(sign * (3 * l * l - n)) * b[2 * n - l];
  }
  left *= 2;
  const BigInt right = BigInt(n) * b[2 * n];
  return {left == right, left, right};
}

std::vector<VerbitskyBound> verbitsky_bounds(int n, std::int64_t b2) {
  if (n < 2) throw DomainError("Verbitsky bounds need n >= 2");
  if (b2 < 0) throw DomainError("b2 must be nonnegative");
  std::vector<VerbitskyBound> out;
  for (int k = 2; k <= n; ++k) out.push_back({k, binomial(BigInt(b2 + k - 1), k)});
  return out;
}

BigInt euler_from_betti(const BettiVector& b) {
  BigInt chi = 0;
  for (std::size_t i = 0; i < b.values().size(); ++i) chi += (i % 2 == 0) ? BigInt(b[i]) : -BigInt(b[i]);
  return chi;
}

ConstraintReport check_og10(const BettiVector& b) {
  if (b.half_dimension() != kOg10HalfDimension)
    throw DomainError("OG10 vectors have n = 5, got n = " + std::to_string(b.half_dimension()));
  ConstraintReport report{};
  report.b0_holds = b[0] == 1;
  report.b1_holds = b[1] == 0;
  report.b2_actual = b[2];
  report.b2_holds = b[2] == kOg10B2;
  report.duality_holds = b.poincare_dual();
  report.salamon = salamon_check(b);
  for (const auto& bound : verbitsky_bounds(kOg10HalfDimension, b[2])) {
    const std::int64_t actual = b[2 * static_cast<std::size_t>(bound.k)];
    if (actual < bound.lower_bound) report.verbitsky_violations.push_back({bound.k, bound.lower_bound, actual});
  }
  report.euler_value = euler_from_betti(b);
  report.euler_holds = report.euler_value == kOg10Euler;
  return report;
}

SearchResult search_feasible_og10(const OddBounds& bounds, std::optional<std::size_t> limit) {
  if (std::any_of(bounds.max.begin(), bounds.max.end(), [](std::int64_t m) { return m < 0; }))
    throw DomainError("odd Betti bounds must be nonnegative; the search range is empty");
  SearchResult result;
  result.total_count = count_feasible(bounds);
  result.vectors = first_feasible(bounds, limit);
  result.truncated = result.total_count > result.vectors.size();
  return result;
}

}  // namespace og10::betti
