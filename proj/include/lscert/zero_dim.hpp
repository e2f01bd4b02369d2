#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lscert/coarse.hpp"
#include "lscert/dist.hpp"
#include "lscert/groups.hpp"
#include "lscert/rational.hpp"

namespace lscert {

// A point of the ternary model space: the number sum_{i in support} 2*3^i,
// digits 0/2 only, indices bounded below by min_index (0 gives the subspace A,
// negative bounds give fractional digits). The value determines the support.
class TriadicPoint {
 public:
  TriadicPoint() : min_index_(0) {}
  TriadicPoint(std::vector<int> support, int min_index = 0);

  const std::vector<int>& support() const { return support_; }
  int min_index() const { return min_index_; }
  const Rational& value() const { return value_; }

  // Numeric order; supports are recoverable from values, so this is total.
  bool operator<(const TriadicPoint& o) const { return value_ < o.value_; }
  bool operator==(const TriadicPoint& o) const { return value_ == o.value_; }

 private:
  int min_index_;
  std::vector<int> support_;
  Rational value_;
};

Rational triadic_value(const std::vector<int>& support);

// Greedy top-down digit extraction; nullopt when v has no 0/2 expansion over
// indices >= min_index. Test oracle for the value <-> support round trip.
std::optional<std::vector<int>> support_from_value(const Rational& v, int min_index);

// |value(x) - value(y)|, the metric inherited from the half-line.
Rational m0_distance(const TriadicPoint& x, const TriadicPoint& y);

struct TriadicModel {
  using Point = TriadicPoint;
  Dist dist(const Point& a, const Point& b) const { return Dist::of(m0_distance(a, b)); }
  std::string label(const Point& p) const;
};

// All points with support inside [min_index, max_index), ordered by value.
std::vector<TriadicPoint> enumerate_triadic(int min_index, int max_index);

// The flip group: direct sum of Z_2 over digit indices 0..N-1.
std::shared_ptr<const DirectSumGroup> flip_group(std::size_t digit_count);

// Digit flips named by g's support; defined on points with min_index >= 0.
TriadicPoint flip_action(const EnumGroup& group, const GroupElem& g, const TriadicPoint& x);

// ---------------------------------------------------------------------------
// The bounded-distance argument between the full ternary space and A.

struct HausdorffReport {
  int min_index = 0;
  int support_cap = 0;
  Rational bound;                 // sum of 2*3^i over negative indices
  std::size_t points_checked = 0;
  bool all_within = false;        // every point within `bound` of its truncation
  bool attained = false;
  std::optional<TriadicPoint> attaining_point;
};

HausdorffReport a_hausdorff_bound(int min_index, int support_cap);

// ---------------------------------------------------------------------------
// The flip correspondence between the Z_2 sum and A.

struct TightBoundRow {
  int index = 0;            // k for forward rows, i for flip-minimum rows
  Rational expected;        // 3^(k+1)-1 resp. 3^i+1
  Rational observed;
  bool tight = false;
  std::vector<int> witness_a;  // supports of an attaining pair
  std::vector<int> witness_b;
};

struct M0Z2Certificate {
  std::size_t support_cap = 0;
  std::size_t point_count = 0;
  std::size_t pair_count = 0;
  bool bijection = true;
  CoarseCertificate coarse;              // metric-level certificate, both ways
  std::vector<TightBoundRow> forward;    // max value change, supports in {0..k}
  std::vector<TightBoundRow> flip_min;   // min value change when digit i flips
  bool bounds_tight = false;
  // The flip is a group action but not an isometry of A; one witness
  // (g, x, y) with d(gx, gy) != d(x, y) is recorded in the certificate.
  std::optional<std::array<std::vector<int>, 3>> isometry_counterexample;
};

// Exhaustive certificate for the correspondence g -> g * (empty support)
// between the Z_2 sum under the w_i = 3^(i+1)-1 support norm and A. Caps the
// support at `support_cap` digits (default 9: 512 points).
M0Z2Certificate verify_m0_z2_equivalence(std::size_t support_cap);

// ---------------------------------------------------------------------------
// Locally finite decomposition along a subgroup chain.

struct DecompositionMap {
  FiniteSubgroupChain chain;
  std::vector<std::uint64_t> n;                       // n_1 = |G_1|, n_i = |G_i|/|G_{i-1}|
  std::vector<std::vector<GroupElem>> transversals;   // T_i, identity's coset first
  std::shared_ptr<const DirectSumGroup> target;       // sum of Z_{n_i}, indices 1..k
  std::map<GroupElem, GroupElem> phi;                 // top level -> coordinate tuple

  GroupElem apply(const GroupElem& g) const;
};

// Left-transversal normal form: g = t_k * g' with t_k representing g*G_{k-1}.
DecompositionMap locally_finite_decomposition(const FiniteSubgroupChain& chain);

struct FiltrationRow {
  std::size_t k = 0;
  std::size_t pairs_in_f = 0;      // ordered pairs with x^-1 y in G_k
  std::size_t e_size = 0;          // distinct phi-differences over those pairs
  bool forward_ok = false;         // x^-1 y in G_k  =>  images agree above k
  bool backward_ok = false;        // images agree above k  =>  x^-1 y in G_k
};

struct DecompositionCertificate {
  DecompositionMap map;
  std::size_t ordered_pairs = 0;   // distinct ordered pairs checked
  bool bijection = false;
  bool identity_to_zero = false;
  bool filtration_respected = false;  // membership level == top phi coordinate, all pairs
  std::vector<FiltrationRow> rows;
  bool pass = false;
};

// Both directions of the finite-subset criterion for phi, exhaustively over
// the top chain level (truncated to k_max levels first).
DecompositionCertificate verify_decomposition_equivalence(const FiniteSubgroupChain& chain,
                                                          std::size_t k_max);

}  // namespace lscert
