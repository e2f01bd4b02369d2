#include "lscert/group_metrics.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

namespace lscert {

// ---------------------------------------------------------------------------
// WordMetric

WordMetric::WordMetric(GroupPtr group, std::vector<GroupElem> generators, std::size_t depth)
    : NormMetric(std::move(group)), depth_(depth) {
  require(!generators.empty(), "invalid-parameter", "word metric needs generators");
  std::set<GroupElem> closed;
  for (const auto& g : generators) {
    if (g == this->group().identity()) {
      continue;
    }
    closed.insert(g);
    closed.insert(this->group().inv(g));
  }
  require(!closed.empty(), "invalid-parameter", "word metric needs a non-identity generator");
  generators_.assign(closed.begin(), closed.end());

  std::deque<GroupElem> frontier;
  length_[this->group().identity()] = 0;
  frontier.push_back(this->group().identity());
  for (std::size_t d = 0; d < depth_ && !frontier.empty(); ++d) {
    std::deque<GroupElem> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators_) {
        GroupElem h = this->group().mul(g, s);
        if (length_.emplace(h, d + 1).second) {
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
}

std::string WordMetric::describe() const {
  std::string s = "word metric on " + group().name() + " with generators {";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    s += (i ? "," : "") + group().label(generators_[i]);
  }
  return s + "}, depth " + std::to_string(depth_);
}

std::optional<std::size_t> WordMetric::try_norm(const GroupElem& g) const {
  auto it = length_.find(g);
  if (it == length_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Dist WordMetric::norm_of(const GroupElem& g) const {
  auto n = try_norm(g);
  require(n.has_value(), "unreachable-element",
          group().label(g) + " is beyond BFS depth " + std::to_string(depth_) +
              " (generators may not generate, or the depth is too small)");
  return Dist::of(Rational(*n));
}

std::vector<GroupElem> WordMetric::sphere(std::size_t d) const {
  std::vector<GroupElem> out;
  for (const auto& [g, len] : length_) {
    if (len == d) {
      out.push_back(g);
    }
  }
  return out;
}

std::optional<std::vector<GroupElem>> WordMetric::certified_ball(const Rational& r) const {
  if (r <= 0) {
    return std::vector<GroupElem>{};
  }
  // Word lengths are integers: {norm < r} = {norm <= D}.
  Int d = denominator(r) == 1 ? numerator(r) - 1 : rational_floor(r);
  if (d > Int(static_cast<long>(depth_))) {
    return std::nullopt;
  }
  std::size_t cap = d.convert_to<std::size_t>();
  std::vector<GroupElem> ball;
  for (const auto& [g, len] : length_) {
    if (len <= cap) {
      ball.push_back(g);
    }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

// ---------------------------------------------------------------------------
// Weight families

WeightFunction linear_weights() {
  return {"w_i = i", [](std::int64_t i) { return Rational(i); }};
}

WeightFunction pow2_weights() {
  return {"w_i = 2^i", [](std::int64_t i) {
            Int p = 1;
            for (std::int64_t k = 0; k < i; ++k) {
              p *= 2;
            }
            return Rational(p);
          }};
}

WeightFunction triadic_weights() {
  return {"w_i = 3^(i+1)-1", [](std::int64_t i) {
            return pow3(static_cast<int>(i) + 1) - 1;
          }};
}

// ---------------------------------------------------------------------------
// SupportWeightMetric

SupportWeightMetric::SupportWeightMetric(std::shared_ptr<const DirectSumGroup> group,
                                         WeightFunction weights)
    : NormMetric(group), dsum_(std::move(group)), weights_(std::move(weights)) {
  Rational prev;
  bool have_prev = false;
  for (std::int64_t p = 0; p < 16; ++p) {
    std::int64_t idx = dsum_->first_index() + p;
    if (!dsum_->index_in_range(idx)) {
      break;
    }
    Rational w = weights_.at(idx);
    require(w >= 0, "invalid-parameter", "weights must be nonnegative");
    require(!have_prev || w > prev, "invalid-parameter",
            "weights must be strictly increasing along the enumeration");
    prev = w;
    have_prev = true;
  }
}

std::string SupportWeightMetric::describe() const {
  return "support-weight norm (" + weights_.description + ") on " + group().name();
}

Dist SupportWeightMetric::norm_of(const GroupElem& g) const {
  Rational total = 0;
  for (const auto& [idx, val] : DirectSumGroup::support_of(g)) {
    total += weights_.at(idx);
  }
  return Dist::of(total);
}

std::optional<std::vector<GroupElem>> SupportWeightMetric::certified_ball(const Rational& r) const {
  // Every index that can appear in the ball has weight < r; weights increase,
  // so the index range is an initial segment.
  std::vector<std::int64_t> usable;
  for (std::int64_t idx = dsum_->first_index();; ++idx) {
    if (!dsum_->index_in_range(idx)) {
      break;
    }
    if (idx - dsum_->first_index() > 4096) {
      return std::nullopt;  // weights grow too slowly to certify at this radius
    }
    if (weights_.at(idx) >= r) {
      break;
    }
    if (dsum_->modulus_at(idx) >= 2) {
      usable.push_back(idx);
    }
  }
  std::vector<GroupElem> ball;
  std::vector<std::pair<std::int64_t, std::int64_t>> support;
  // Depth-first over usable indices; every partial support below the budget
  // is an element of the ball.
  auto recurse = [&](auto&& self, std::size_t from, const Rational& budget) -> void {
    ball.push_back(dsum_->from_support(support));
    for (std::size_t k = from; k < usable.size(); ++k) {
      Rational w = weights_.at(usable[k]);
      if (w >= budget) {
        continue;
      }
      std::int64_t m = static_cast<std::int64_t>(dsum_->modulus_at(usable[k]));
      for (std::int64_t v = 1; v < m; ++v) {
        support.emplace_back(usable[k], v);
        self(self, k + 1, budget - w);
        support.pop_back();
      }
    }
  };
  if (r > 0) {
    recurse(recurse, 0, r);
  }
  std::sort(ball.begin(), ball.end());
  ball.erase(std::unique(ball.begin(), ball.end()), ball.end());
  return ball;
}

// ---------------------------------------------------------------------------
// WeightedWordMetric

WeightedWordMetric::WeightedWordMetric(GroupPtr group, WeightFunction weights,
                                       std::size_t generator_count, std::size_t budget)
    : NormMetric(std::move(group)), weights_(std::move(weights)),
      generator_count_(generator_count), budget_(budget) {
  require(generator_count_ >= 2, "invalid-parameter", "need at least one non-identity generator");
  std::vector<std::pair<GroupElem, Rational>> gens;
  for (std::size_t i = 1; i < generator_count_; ++i) {
    GroupElem g = this->group().element(i);
    Rational w = weights_.at(static_cast<std::int64_t>(i));
    require(w > 0, "invalid-parameter", "generator weights must be positive");
    gens.emplace_back(g, w);
    gens.emplace_back(this->group().inv(g), w);
  }

  using State = std::pair<Rational, GroupElem>;
  auto cmp = [](const State& a, const State& b) {
    if (a.first != b.first) {
      return a.first > b.first;
    }
    return a.second > b.second;  // deterministic tie-break
  };
  std::priority_queue<State, std::vector<State>, decltype(cmp)> queue(cmp);
  queue.push({Rational(0), this->group().identity()});
  std::map<GroupElem, Rational> best;
  best[this->group().identity()] = 0;
  while (!queue.empty() && settled_.size() < budget_) {
    auto [cost, g] = queue.top();
    queue.pop();
    auto it = settled_.find(g);
    if (it != settled_.end()) {
      continue;
    }
    settled_.emplace(g, cost);
    frontier_floor_ = cost;
    for (const auto& [s, w] : gens) {
      GroupElem h = this->group().mul(g, s);
      Rational c = cost + w;
      auto bi = best.find(h);
      if (bi == best.end() || c < bi->second) {
        best[h] = c;
        queue.push({c, h});
      }
    }
  }
}

std::string WeightedWordMetric::describe() const {
  return "weighted word norm (" + weights_.description + ", " +
         std::to_string(generator_count_) + " enumerated generators) on " + group().name();
}

std::optional<Rational> WeightedWordMetric::try_norm(const GroupElem& g) const {
  auto it = settled_.find(g);
  if (it == settled_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Dist WeightedWordMetric::norm_of(const GroupElem& g) const {
  auto n = try_norm(g);
  require(n.has_value(), "budget-exceeded",
          "factorization search for " + group().label(g) + " passed the budget of " +
              std::to_string(budget_) + " states");
  return Dist::of(*n);
}

// ---------------------------------------------------------------------------
// Checks

LeftInvarianceReport check_left_invariance(const GroupPseudoMetric& metric, std::size_t n) {
  const EnumGroup& grp = metric.group();
  n = grp.clamp_horizon(n);
  LeftInvarianceReport report;
  auto elems = grp.enumerate(n);
  for (const auto& f : elems) {
    for (const auto& g : elems) {
      for (const auto& h : elems) {
        ++report.triples_checked;
        if (metric.dist(g, h) != metric.dist(grp.mul(f, g), grp.mul(f, h))) {
          report.pass = false;
          report.witness = {f, g, h};
          return report;
        }
      }
    }
  }
  return report;
}

NormAxiomReport check_norm_axioms(const GroupPseudoMetric& metric, std::size_t n) {
  const EnumGroup& grp = metric.group();
  n = grp.clamp_horizon(n);
  NormAxiomReport report;
  if (!metric.norm(grp.identity()).is_zero()) {
    report.pass = false;
    report.identity_zero = false;
    return report;
  }
  auto elems = grp.enumerate(n);
  for (const auto& g : elems) {
    if (metric.norm(grp.inv(g)) != metric.norm(g)) {
      report.pass = false;
      report.inverse_witness = g;
      return report;
    }
  }
  for (const auto& g : elems) {
    Dist ng = metric.norm(g);
    for (const auto& h : elems) {
      if (!metric.norm(grp.mul(g, h)).le_add(ng, metric.norm(h))) {
        report.pass = false;
        report.subadditivity_witness = {g, h};
        return report;
      }
    }
  }
  return report;
}

PropernessReport check_properness(const GroupPseudoMetric& metric, const Rational& r,
                                  std::size_t horizon, bool require_certified) {
  require(r > 0, "invalid-parameter", "ball radius must be positive");
  const EnumGroup& grp = metric.group();
  PropernessReport report;
  report.radius = r;
  report.horizon = grp.clamp_horizon(horizon);

  std::size_t half = report.horizon / 2;
  for (std::size_t i = 0; i < report.horizon; ++i) {
    GroupElem g = grp.element(i);
    if (metric.norm(g).lt(r)) {
      report.ball.push_back(g);
      if (i < half) {
        ++report.ball_size_half;
      }
    }
  }

  bool exhausted = grp.order() && *grp.order() == report.horizon;
  if (auto exact = metric.certified_ball(r)) {
    report.certainty = BallCertainty::certified;
    report.certified_size = exact->size();
    report.pass = report.ball.size() == exact->size();
    report.note = report.pass ? "ball certified complete"
                              : "certified ball has elements beyond the enumeration horizon";
    return report;
  }
  if (exhausted) {
    report.certainty = BallCertainty::certified;
    report.certified_size = report.ball.size();
    report.pass = true;
    report.note = "group fully enumerated";
    return report;
  }
  require(!require_certified, "cannot-certify",
          metric.describe() + " gives no norm lower bound at the horizon");
  report.certainty = BallCertainty::empirical;
  report.pass = report.ball.size() == report.ball_size_half;
  report.note = report.pass ? "ball stabilized between horizon/2 and horizon"
                            : "ball still growing with the horizon";
  return report;
}

GeneratingSet extract_generating_set(const GroupPseudoMetric& metric, const Rational& M,
                                     std::size_t horizon) {
  require(M > 0, "invalid-parameter", "connectivity threshold must be positive");
  PropernessReport ball = check_properness(metric, M + 1, horizon);
  require(ball.pass, "ball-not-stabilized",
          "ball of radius " + rat_to_string(M + 1) + " not stabilized: " + ball.note);
  GeneratingSet out;
  out.threshold = M + 1;
  out.elements = ball.ball;
  out.max_norm = Dist::zero();
  for (const auto& g : out.elements) {
    out.max_norm = std::max(out.max_norm, metric.norm(g));
  }
  return out;
}

GenerationReport verify_generates(const EnumGroup& group, const std::vector<GroupElem>& gens,
                                  std::size_t horizon) {
  require(!gens.empty(), "invalid-parameter", "generating set must be nonempty");
  GenerationReport report;
  report.horizon = group.clamp_horizon(horizon);

  std::set<GroupElem> step;
  for (const auto& g : gens) {
    step.insert(g);
    step.insert(group.inv(g));
  }
  std::set<GroupElem> visited{group.identity()};
  std::deque<GroupElem> frontier{group.identity()};
  std::size_t cap = 4 * report.horizon + 64;
  for (std::size_t depth = 0; depth < report.horizon && !frontier.empty(); ++depth) {
    std::deque<GroupElem> next;
    for (const auto& g : frontier) {
      for (const auto& s : step) {
        GroupElem h = group.mul(g, s);
        if (visited.size() < cap && visited.insert(h).second) {
          next.push_back(h);
        }
      }
    }
    frontier = std::move(next);
  }
  report.pass = true;
  for (std::size_t i = 0; i < report.horizon; ++i) {
    GroupElem g = group.element(i);
    if (visited.count(g)) {
      ++report.reached;
    } else if (report.pass) {
      report.pass = false;
      report.missing = g;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// GroupSpace

GroupSpace::GroupSpace(MetricPtr metric, std::size_t n)
    : metric_(std::move(metric)), elems_(metric_->group().enumerate(metric_->group().clamp_horizon(n))) {}

GroupSpace::GroupSpace(MetricPtr metric, std::vector<GroupElem> elems)
    : metric_(std::move(metric)), elems_(std::move(elems)) {}

std::string GroupSpace::name() const {
  return metric_->group().name() + " with " + metric_->describe();
}

Dist GroupSpace::dist(PointRef a, PointRef b) const {
  return metric_->dist(elems_.at(a.index), elems_.at(b.index));
}

std::string GroupSpace::label(PointRef p) const {
  return metric_->group().label(elems_.at(p.index));
}

}  // namespace lscert
