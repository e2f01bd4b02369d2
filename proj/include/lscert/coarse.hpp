#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lscert/dist.hpp"
#include "lscert/group_metrics.hpp"
#include "lscert/groups.hpp"
#include "lscert/space.hpp"

namespace lscert {

// A map restricted to a finite sample: the first points of `source`, with
// image[i] the target index of the i-th source point.
struct MapSample {
  const LsSpace* source = nullptr;
  const LsSpace* target = nullptr;
  std::vector<std::size_t> image;

  std::size_t image_of(std::size_t i) const;  // throws "undefined-image"
};

struct ControlRow {
  Dist r;
  Dist s;                  // max target distance over sampled pairs with d_src <= r
  std::size_t pair_count = 0;
};

// Finite control function r -> s measured exhaustively over sample pairs.
// "Stable" compares the half-sample table against the full one on shared
// rows: a control value still growing with the sample is the desk-scale
// signature of an unbounded one.
struct ControlTable {
  std::vector<ControlRow> rows;
  std::size_t sample_size = 0;
  std::size_t pair_count = 0;
  bool monotone = false;
  bool stable = false;
  std::string inequality = "<=";  // source-side comparison in use

  // Largest s over rows with row.r <= r; nullopt when no pair qualifies.
  std::optional<Dist> value_at(const Dist& r) const;
};

// Exhaustive control table over the first n source points. The default grid
// is the sorted set of distinct source distances realized in the sample.
ControlTable estimate_control(const MapSample& f, std::size_t n,
                              const std::vector<Dist>& r_grid = {});

// max over the first n source points of d(back(f(x)), x).
Dist displacement(const MapSample& f, const MapSample& back, std::size_t n);

struct CoarseCertificate {
  ControlTable forward;
  ControlTable backward;
  Dist displacement_fwd;
  Dist displacement_bwd;
  bool displacement_fwd_stable = false;  // same half/full-sample protocol
  bool displacement_bwd_stable = false;
  std::size_t horizon = 0;
  bool pass = false;
};

CoarseCertificate coarse_equivalence_certificate(const MapSample& f, const MapSample& back,
                                                 std::size_t n,
                                                 const std::vector<Dist>& fwd_grid = {},
                                                 const std::vector<Dist>& bwd_grid = {});

// ---------------------------------------------------------------------------
// The finite-subset (F -> E) criterion on groups.

using GroupMap = std::function<GroupElem(const GroupElem&)>;

struct GroupUniformCheck {
  std::vector<GroupElem> f_set;
  std::vector<GroupElem> e_set;        // {f(x)^-1 f(y) : x^-1 y in F}, at the horizon
  std::size_t e_size_extended = 0;     // same set over factor * horizon elements
  std::size_t horizon = 0;
  std::size_t extended_horizon = 0;
  std::size_t pairs_checked = 0;
  bool stabilized = false;
};

// E listed exactly over the sampled pairs; stabilized iff E stops growing when
// the horizon is raised by `factor` (clamped at the group order).
GroupUniformCheck group_ls_uniform_check(const GroupMap& f, const EnumGroup& source,
                                         const EnumGroup& target,
                                         const std::vector<GroupElem>& f_subset,
                                         std::size_t horizon, std::size_t factor = 2);

struct AgreementRow {
  Rational r;
  Dist s_half;
  Dist s_full;
  bool metric_stable = false;   // Def-4 side: control value stopped growing
  std::size_t f_size = 0;       // |ball(r)| on the source group
  std::size_t e_half = 0;
  std::size_t e_full = 0;
  bool e_stable = false;        // F->E side: E stopped growing
  Dist e_max_norm;              // the s the finite-subset proof would pick
  bool translation_ok = false;  // E sits inside the metric ball of radius s_full
  bool agree = false;
};

struct AgreementReport {
  std::vector<AgreementRow> rows;
  std::size_t horizon = 0;
  bool all_agree = false;
  std::string inequality = "<";  // both sides use open balls / strict pairs
};

// Runs the metric criterion (control values, <= r) and the finite-subset
// criterion (F = open ball of radius r) side by side on the same map and
// horizon; the two verdicts must agree at every grid radius.
AgreementReport equivalence_agreement(const GroupMap& f, const GroupPseudoMetric& source,
                                      const GroupPseudoMetric& target, std::size_t horizon,
                                      const std::vector<Rational>& r_grid);

// ---------------------------------------------------------------------------
// Quasi-isometry constants.

struct QiFit {
  double lambda = 1.0;
  double c = 0.0;
  double tolerance = 1e-9;
  Rational d_min;
  std::size_t pair_count = 0;
  std::size_t ratio_pairs = 0;        // pairs entering the lambda pass
  std::size_t zero_target_skipped = 0;
  bool verified = false;              // post-check of both inequalities, all pairs
};

// Two-pass deterministic fit of (1/lambda) d - c <= d' <= lambda d + c:
// lambda from ratios over pairs with d >= d_min, then the minimal c, then an
// independent re-check of every sampled pair at the reported tolerance.
QiFit fit_qi_constants(const MapSample& f, std::size_t n, const Rational& d_min,
                       double tolerance);

}  // namespace lscert
