#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lscert/dist.hpp"
#include "lscert/groups.hpp"
#include "lscert/space.hpp"

namespace lscert {

// A pseudo-metric on an enumerated group. dist is the primitive; norm(g) is
// dist(identity, g). Metrics that can list a complete metric ball {g : norm(g) < r}
// certify properness exactly; the rest fall back to horizon stabilization.
class GroupPseudoMetric {
 public:
  explicit GroupPseudoMetric(GroupPtr group) : group_(std::move(group)) {}
  virtual ~GroupPseudoMetric() = default;

  const EnumGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }

  virtual std::string describe() const = 0;
  virtual Dist dist(const GroupElem& g, const GroupElem& h) const = 0;
  virtual Dist norm(const GroupElem& g) const { return dist(group_->identity(), g); }

  // Complete list of {g : norm(g) < r} when the metric can certify one.
  virtual std::optional<std::vector<GroupElem>> certified_ball(const Rational& r) const {
    return std::nullopt;
  }

 private:
  GroupPtr group_;
};

using MetricPtr = std::shared_ptr<const GroupPseudoMetric>;

// Norm-induced metric: dist(g,h) = norm(g^-1 h). Left-invariant by
// construction (and spot-verified in tests anyway).
class NormMetric : public GroupPseudoMetric {
 public:
  using GroupPseudoMetric::GroupPseudoMetric;
  virtual Dist norm_of(const GroupElem& g) const = 0;
  Dist dist(const GroupElem& g, const GroupElem& h) const override {
    return norm_of(group().mul(group().inv(g), h));
  }
  Dist norm(const GroupElem& g) const override { return norm_of(g); }
};

// Word length over a finite generating set, closed under inversion, computed
// by breadth-first search on the Cayley graph up to a fixed depth.
class WordMetric : public NormMetric {
 public:
  WordMetric(GroupPtr group, std::vector<GroupElem> generators, std::size_t depth);

  std::string describe() const override;
  Dist norm_of(const GroupElem& g) const override;
  std::optional<std::size_t> try_norm(const GroupElem& g) const;
  std::optional<std::vector<GroupElem>> certified_ball(const Rational& r) const override;

  std::size_t depth() const { return depth_; }
  const std::vector<GroupElem>& generators() const { return generators_; }
  // Elements at word length exactly d, in first-discovery order.
  std::vector<GroupElem> sphere(std::size_t d) const;

 private:
  std::vector<GroupElem> generators_;
  std::size_t depth_;
  std::map<GroupElem, std::size_t> length_;
};

// Strictly increasing positive weights indexed like a direct sum.
struct WeightFunction {
  std::string description;
  std::function<Rational(std::int64_t)> at;
};

WeightFunction linear_weights();                 // w_i = i
WeightFunction pow2_weights();                   // w_i = 2^i
WeightFunction triadic_weights();                // w_i = 3^(i+1) - 1

// Support-weight norm on a direct sum: norm(g) = sum of w(i) over the support.
class SupportWeightMetric : public NormMetric {
 public:
  SupportWeightMetric(std::shared_ptr<const DirectSumGroup> group, WeightFunction weights);

  std::string describe() const override;
  Dist norm_of(const GroupElem& g) const override;
  std::optional<std::vector<GroupElem>> certified_ball(const Rational& r) const override;
  const WeightFunction& weights() const { return weights_; }

 private:
  std::shared_ptr<const DirectSumGroup> dsum_;
  WeightFunction weights_;
};

// Weighted word norm for a general enumerated group: generators are the first
// `generator_count` enumerated elements (and their inverses) with weight
// w(index); norm is the cheapest factorization found by Dijkstra search over
// at most `budget` states. Throws "budget-exceeded" when a requested element
// is not settled within the budget.
class WeightedWordMetric : public NormMetric {
 public:
  WeightedWordMetric(GroupPtr group, WeightFunction weights, std::size_t generator_count,
                     std::size_t budget);

  std::string describe() const override;
  Dist norm_of(const GroupElem& g) const override;
  std::optional<Rational> try_norm(const GroupElem& g) const;

 private:
  WeightFunction weights_;
  std::size_t generator_count_;
  std::size_t budget_;
  std::map<GroupElem, Rational> settled_;
  Rational frontier_floor_;  // every unsettled element costs at least this
};

// Arbitrary group distance oracle, for planting non-invariant examples.
class OracleGroupMetric : public GroupPseudoMetric {
 public:
  OracleGroupMetric(GroupPtr group, std::string description,
                    std::function<Dist(const GroupElem&, const GroupElem&)> oracle)
      : GroupPseudoMetric(std::move(group)),
        description_(std::move(description)),
        oracle_(std::move(oracle)) {}
  std::string describe() const override { return description_; }
  Dist dist(const GroupElem& g, const GroupElem& h) const override { return oracle_(g, h); }

 private:
  std::string description_;
  std::function<Dist(const GroupElem&, const GroupElem&)> oracle_;
};

// --------------------------------------------------------------------------
// Checks

struct LeftInvarianceReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<GroupElem, 3>> witness;  // (f, g, h)
};

// Exhaustive d(g,h) == d(fg, fh) over enumerated triples.
LeftInvarianceReport check_left_invariance(const GroupPseudoMetric& metric, std::size_t n);

struct NormAxiomReport {
  bool pass = true;
  bool identity_zero = true;
  std::optional<GroupElem> inverse_witness;              // norm(g^-1) != norm(g)
  std::optional<std::array<GroupElem, 2>> subadditivity_witness;
};

// norm(1) = 0, norm(g^-1) = norm(g), norm(gh) <= norm(g) + norm(h) over pairs.
NormAxiomReport check_norm_axioms(const GroupPseudoMetric& metric, std::size_t n);

enum class BallCertainty { certified, empirical };

struct PropernessReport {
  Rational radius;
  std::size_t horizon = 0;
  std::vector<GroupElem> ball;        // {g among first horizon : norm(g) < r}
  std::size_t ball_size_half = 0;     // same count over the first horizon/2
  BallCertainty certainty = BallCertainty::empirical;
  std::optional<std::size_t> certified_size;
  bool pass = false;                  // ball stabilized / certified complete
  std::string note;
};

// Ball listing with a stabilization verdict. Metrics with a certified ball
// get an exact answer; otherwise the ball at horizon/2 is compared with the
// ball at the horizon. With require_certified, missing certification is the
// error "cannot-certify" rather than an empirical verdict.
PropernessReport check_properness(const GroupPseudoMetric& metric, const Rational& r,
                                  std::size_t horizon, bool require_certified = false);

struct GeneratingSet {
  std::vector<GroupElem> elements;   // F = {g : norm(g) < M+1}
  Rational threshold;                // M+1
  Dist max_norm;                     // M_back = max norm over F
};

// Lemma-style extraction: F is the ball of radius M+1 about the identity.
// Throws "ball-not-stabilized" when the ball cannot be certified or has not
// stabilized at the given horizon.
GeneratingSet extract_generating_set(const GroupPseudoMetric& metric, const Rational& M,
                                     std::size_t horizon);

struct GenerationReport {
  bool pass = false;
  std::size_t horizon = 0;
  std::size_t reached = 0;           // how many of the first `horizon` lie in <F>
  std::optional<GroupElem> missing;  // first enumerated element not reached
};

// BFS closure of F (and inverses) bounded by depth `horizon`; pass iff the
// closure covers the first `horizon` enumerated elements.
GenerationReport verify_generates(const EnumGroup& group, const std::vector<GroupElem>& gens,
                                  std::size_t horizon);

// Group sample as an LsSpace (Cayley-graph view when the metric is a word
// metric): points are the first n enumerated elements.
class GroupSpace : public LsSpace {
 public:
  GroupSpace(MetricPtr metric, std::size_t n);
  // Explicit sample in a caller-chosen order.
  GroupSpace(MetricPtr metric, std::vector<GroupElem> elems);
  std::string name() const override;
  std::size_t size() const override { return elems_.size(); }
  Dist dist(PointRef a, PointRef b) const override;
  std::string label(PointRef p) const override;
  const std::vector<GroupElem>& elements() const { return elems_; }
  const GroupPseudoMetric& metric() const { return *metric_; }

 private:
  MetricPtr metric_;
  std::vector<GroupElem> elems_;
};

}  // namespace lscert
