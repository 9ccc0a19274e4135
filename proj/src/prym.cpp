#include "og10/prym.hpp"

#include <bit>
#include <string>

#include "og10/common.hpp"

namespace og10::prym {

namespace {

void check_cap(int nodes, int cap) {
  if (cap < 0 || cap > kMaxBruteNodeCap)
    throw ResourceLimitError("enumeration cap must lie in [0, " + std::to_string(kMaxBruteNodeCap) +
                             "], got " + std::to_string(cap));
  if (nodes > cap)
    throw ResourceLimitError("stratum enumeration over " + std::to_string(nodes) +
                             " nodes exceeds the cap of " + std::to_string(cap));
}

// Lifts a subset of base nodes to the involution-invariant subset of cover
// nodes lying over it: base bit i becomes cover bits 2i and 2i+1.
std::uint64_t lift_to_cover(std::uint64_t base_subset) {
  std::uint64_t x = base_subset & 0xFFFFFFFFULL;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFULL;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFULL;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0FULL;
  x = (x | (x << 2)) & 0x3333333333333333ULL;
  x = (x | (x << 1)) & 0x5555555555555555ULL;
  return x | (x << 1);
}

// The involution swaps bits 2i and 2i+1, so invariance means the even and
// odd bit planes coincide.
bool involution_invariant(std::uint64_t cover_subset) {
  constexpr std::uint64_t kEvenBits = 0x5555555555555555ULL;
  return (cover_subset & kEvenBits) == ((cover_subset >> 1) & kEvenBits);
}

}  // namespace

NodalCoverModel::NodalCoverModel(int base_nodes, int normalization_genus)
    : base_nodes_(base_nodes), normalization_genus_(normalization_genus) {
  if (base_nodes < 0) throw DomainError("node count must be nonnegative");
  if (normalization_genus < 1)
    throw DomainError("no connected etale double cover: normalization genus must be >= 1, got " +
                      std::to_string(normalization_genus));
}

int euler_prym(const NodalCoverModel& model) { return model.normalization_genus() == 1 ? 1 : 0; }

EnumerationResult euler_prym_bruteforce(const NodalCoverModel& model, int cap) {
  const int r = model.base_nodes();
  check_cap(r, cap);
  // Cover masks need 2r bits.
  if (model.cover_nodes() > 64)
    throw ResourceLimitError("cover node set does not fit a 64-bit mask");

  EnumerationResult result;
  const std::uint64_t count = std::uint64_t{1} << r;
  for (std::uint64_t base_subset = 0; base_subset < count; ++base_subset) {
    const std::uint64_t cover_subset = lift_to_cover(base_subset);
    if (!involution_invariant(cover_subset))
      throw InvariantViolation("lifted node subset is not involution-invariant");
    const int normalized = std::popcount(base_subset);
    const int outside = model.cover_nodes() - std::popcount(cover_subset);
    const PrymStratum stratum{normalized, outside / 2, model.normalization_genus() - 1};
    const int chi = stratum.euler();
    result.euler += chi;
    ++result.strata;
    if (chi != 0) ++result.nonzero_strata;
  }
  return result;
}

EnumerationResult euler_compactified_jacobian_bruteforce(int node_count, int normalization_genus,
                                                         int cap) {
  if (node_count < 0 || normalization_genus < 0)
    throw DomainError("node count and genus must be nonnegative");
  check_cap(node_count, cap);

  EnumerationResult result;
  const std::uint64_t count = std::uint64_t{1} << node_count;
  for (std::uint64_t subset = 0; subset < count; ++subset) {
    const int torus = node_count - std::popcount(subset);
    const int chi = (torus == 0 && normalization_genus == 0) ? 1 : 0;
    result.euler += chi;
    ++result.strata;
    if (chi != 0) ++result.nonzero_strata;
  }
  return result;
}

}  // namespace og10::prym
