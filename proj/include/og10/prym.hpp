#pragma once

// Euler characteristics of compactified Prym and Jacobian varieties of
// irreducible nodal curves, computed from the stratification by partial
// normalizations.

#include <cstdint>

namespace og10::prym {

/// Default cap on the number of base nodes for subset enumeration.
inline constexpr int kDefaultBruteNodeCap = 25;
/// Hard ceiling for any cap: subsets are indexed by a 64-bit mask.
inline constexpr int kMaxBruteNodeCap = 62;

/// Etale double cover D -> C of an irreducible nodal curve.
///
/// C has `base_nodes` nodes and its normalization has genus
/// `normalization_genus` (at least 1, since a connected etale double cover of
/// a rational normalization does not exist). The 2r nodes of D are labelled
/// 0..2r-1 and the covering involution swaps 2i and 2i+1, so it acts freely
/// with r orbits.
class NodalCoverModel {
 public:
  NodalCoverModel(int base_nodes, int normalization_genus);

  int base_nodes() const { return base_nodes_; }
  int normalization_genus() const { return normalization_genus_; }
  int cover_nodes() const { return 2 * base_nodes_; }

  /// Image of cover node `node` under the involution.
  static int involution(int node) { return node ^ 1; }

 private:
  int base_nodes_;
  int normalization_genus_;
};

/// Stratum of the compactified Prym indexed by an involution-invariant set of
/// normalized cover nodes. It is an extension of an abelian variety of
/// dimension g~-1 by a torus of dimension (#A \ B)/2.
struct PrymStratum {
  int normalized_base_nodes;
  int torus_dimension;
  int abelian_dimension;

  /// chi((C*)^t) = 0 for t >= 1 and chi(abelian variety) = 0 in positive
  /// dimension, so only a bare point contributes.
  int euler() const { return (torus_dimension == 0 && abelian_dimension == 0) ? 1 : 0; }
};

struct EnumerationResult {
  std::int64_t euler = 0;
  std::uint64_t strata = 0;
  std::uint64_t nonzero_strata = 0;
};

/// Closed form: 1 if g~ = 1, 0 if g~ >= 2.
int euler_prym(const NodalCoverModel& model);

/// Sums stratum Euler characteristics over the 2^r involution-invariant
/// subsets of cover nodes. Throws ResourceLimitError when r > cap.
EnumerationResult euler_prym_bruteforce(const NodalCoverModel& model,
                                        int cap = kDefaultBruteNodeCap);

/// Jacobian-side analogue: compactified Jacobian of a nodal curve with
/// `node_count` nodes whose normalization has genus `normalization_genus`,
/// stratified over all 2^node_count node subsets.
EnumerationResult euler_compactified_jacobian_bruteforce(int node_count, int normalization_genus,
                                                         int cap = kDefaultBruteNodeCap);

}  // namespace og10::prym
