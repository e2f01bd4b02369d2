#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lscert/group_metrics.hpp"
#include "lscert/groups.hpp"
#include "lscert/space.hpp"

namespace lscert {

template <MetricModel M>
struct GroupAction {
  GroupPtr group;
  M model;
  std::string description;
  std::function<typename M::Point(const GroupElem&, const typename M::Point&)> act;
};

struct ActionAxiomReport {
  bool identity_ok = true;
  bool compat_ok = true;   // act(g, act(h, x)) == act(g*h, x)
  bool isometry_ok = true;
  std::size_t elems_checked = 0;
  std::size_t points_checked = 0;
  std::string witness;

  bool action_ok() const { return identity_ok && compat_ok; }
  bool pass() const { return action_ok() && isometry_ok; }
};

template <MetricModel M>
ActionAxiomReport verify_action_axioms(const GroupAction<M>& action, std::size_t n_elems,
                                       const std::vector<typename M::Point>& points) {
  ActionAxiomReport report;
  const EnumGroup& grp = *action.group;
  auto elems = grp.enumerate(grp.clamp_horizon(n_elems));
  report.elems_checked = elems.size();
  report.points_checked = points.size();

  for (const auto& x : points) {
    if (!(action.act(grp.identity(), x) == x)) {
      report.identity_ok = false;
      report.witness = "identity moves " + action.model.label(x);
      return report;
    }
  }
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      GroupElem gh = grp.mul(g, h);
      for (const auto& x : points) {
        if (!(action.act(g, action.act(h, x)) == action.act(gh, x))) {
          report.compat_ok = false;
          report.witness = "compatibility fails at (" + grp.label(g) + "," + grp.label(h) +
                           ") on " + action.model.label(x);
          return report;
        }
      }
    }
  }
  for (const auto& g : elems) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        Dist before = action.model.dist(points[i], points[j]);
        Dist after = action.model.dist(action.act(g, points[i]), action.act(g, points[j]));
        if (!(before == after)) {
          report.isometry_ok = false;
          report.witness = grp.label(g) + " moves " + action.model.label(points[i]) + "," +
                           action.model.label(points[j]) + " from distance " +
                           before.to_string() + " to " + after.to_string();
          return report;
        }
      }
    }
  }
  return report;
}

// The pullback pseudo-metric d(g,h) = d_X(g x0, h x0). Left-invariant when
// the action is isometric; may fail properness, which is exactly what the
// characterization checks below probe.
template <MetricModel M>
class InducedMetric : public GroupPseudoMetric {
 public:
  InducedMetric(GroupAction<M> action, typename M::Point basepoint)
      : GroupPseudoMetric(action.group), action_(std::move(action)),
        basepoint_(std::move(basepoint)) {}

  std::string describe() const override {
    return "metric induced by " + action_.description + " at basepoint " +
           action_.model.label(basepoint_);
  }
  Dist dist(const GroupElem& g, const GroupElem& h) const override {
    return action_.model.dist(action_.act(g, basepoint_), action_.act(h, basepoint_));
  }
  const typename M::Point& basepoint() const { return basepoint_; }

 private:
  GroupAction<M> action_;
  typename M::Point basepoint_;
};

template <MetricModel M>
std::shared_ptr<const InducedMetric<M>> induced_metric(const GroupAction<M>& action,
                                                       const typename M::Point& basepoint) {
  return std::make_shared<InducedMetric<M>>(action, basepoint);
}

// ---------------------------------------------------------------------------

struct StabilizerReport {
  std::vector<GroupElem> elements;  // among the first `horizon` enumerated
  std::size_t horizon = 0;
  std::size_t count_at_half = 0;
  bool exhausted = false;           // the whole group was enumerated
  bool stabilized = false;
};

template <MetricModel M>
StabilizerReport stabilizer(const GroupAction<M>& action, const typename M::Point& basepoint,
                            std::size_t horizon) {
  const EnumGroup& grp = *action.group;
  StabilizerReport report;
  report.horizon = grp.clamp_horizon(horizon);
  report.exhausted = grp.order() && *grp.order() == report.horizon;
  std::size_t half = report.horizon / 2;
  for (std::size_t i = 0; i < report.horizon; ++i) {
    GroupElem g = grp.element(i);
    if (action.act(g, basepoint) == basepoint) {
      report.elements.push_back(g);
      if (i < half) {
        ++report.count_at_half;
      }
    }
  }
  report.stabilized = report.exhausted || report.elements.size() == report.count_at_half;
  return report;
}

struct OrbitReport {
  std::size_t horizon = 0;
  std::size_t orbit_size = 0;       // distinct points of G.x0 seen
  bool single_point = false;
  std::optional<Dist> min_gap;      // smallest positive pairwise distance
  std::optional<Dist> min_gap_at_half;
  Rational radius;
  std::size_t in_ball = 0;          // distinct orbit points with d(x0, p) < radius
  std::size_t in_ball_at_half = 0;
  bool count_stable = false;
  std::string inequality = "<";
};

template <MetricModel M>
OrbitReport orbit_report(const GroupAction<M>& action, const typename M::Point& basepoint,
                         std::size_t horizon, const Rational& radius) {
  const EnumGroup& grp = *action.group;
  OrbitReport report;
  report.horizon = grp.clamp_horizon(horizon);
  report.radius = radius;
  std::size_t half = report.horizon / 2;

  std::vector<typename M::Point> orbit;
  orbit.reserve(report.horizon);
  std::vector<typename M::Point> orbit_half;
  for (std::size_t i = 0; i < report.horizon; ++i) {
    auto p = action.act(grp.element(i), basepoint);
    orbit.push_back(p);
    if (i < half) {
      orbit_half.push_back(p);
    }
  }
  auto dedup = [](std::vector<typename M::Point>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  };
  dedup(orbit);
  dedup(orbit_half);
  report.orbit_size = orbit.size();
  report.single_point = orbit.size() == 1;

  auto min_gap_of = [&action](const std::vector<typename M::Point>& pts) {
    std::optional<Dist> gap;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Dist d = action.model.dist(pts[i], pts[j]);
        if (!d.is_zero() && (!gap || d < *gap)) {
          gap = d;
        }
      }
    }
    return gap;
  };
  report.min_gap = min_gap_of(orbit);
  report.min_gap_at_half = min_gap_of(orbit_half);

  bool exhausted = grp.order() && *grp.order() == report.horizon;
  for (const auto& p : orbit) {
    if (action.model.dist(basepoint, p).lt(radius)) {
      ++report.in_ball;
    }
  }
  for (const auto& p : orbit_half) {
    if (action.model.dist(basepoint, p).lt(radius)) {
      ++report.in_ball_at_half;
    }
  }
  report.count_stable = exhausted || report.in_ball == report.in_ball_at_half;
  return report;
}

struct CharConditionsReport {
  StabilizerReport stab;
  OrbitReport orbit;
  bool cond_finite_stabilizer = false;
  bool cond_discrete_orbit = false;   // positive minimum gap (horizon-qualified)
  bool cond_bounded_finite = false;   // in-ball count stabilized across horizons
  bool overall = false;
  PropernessReport properness;        // of the induced metric, same horizon/radius
  bool agreement = false;             // overall == properness.pass
};

// The three characterization conditions next to the induced-metric ball
// check; the lemma says the verdicts must coincide, and `agreement` records
// whether they did.
template <MetricModel M>
CharConditionsReport check_char_conditions(const GroupAction<M>& action,
                                           const typename M::Point& basepoint,
                                           std::size_t horizon, const Rational& radius) {
  CharConditionsReport report;
  report.stab = stabilizer(action, basepoint, horizon);
  report.orbit = orbit_report(action, basepoint, horizon, radius);
  report.cond_finite_stabilizer = report.stab.stabilized;
  report.cond_discrete_orbit =
      report.orbit.single_point || (report.orbit.min_gap && !report.orbit.min_gap->is_zero());
  report.cond_bounded_finite = report.orbit.count_stable;
  report.overall = report.cond_finite_stabilizer && report.cond_discrete_orbit &&
                   report.cond_bounded_finite;
  auto metric = induced_metric(action, basepoint);
  report.properness = check_properness(*metric, radius, horizon);
  report.agreement = report.overall == report.properness.pass;
  return report;
}

// ---------------------------------------------------------------------------

// Decides g.U intersect U != empty for U = B(x0, r). Exact oracles decide both
// ways; a sampling oracle certifies non-emptiness only.
struct IntersectionOracle {
  std::function<bool(const GroupElem&)> test;
  bool exact = false;
  std::string description;
};

// For actions whose translates of balls are balls around the moved center, in
// a geodesic model: g.B(x0,r) meets B(x0,r) iff d(x0, g.x0) < 2r.
template <MetricModel M>
IntersectionOracle center_distance_oracle(const GroupAction<M>& action,
                                          const typename M::Point& basepoint, const Rational& r) {
  return {[action, basepoint, r](const GroupElem& g) {
            return action.model.dist(basepoint, action.act(g, basepoint)).lt(2 * r);
          },
          true, "centers within 2r (geodesic model, balls map to balls)"};
}

// Circle arcs wrap: arcs of radius r around a and b meet iff the center
// distance is < 2r on either side of the circle.
inline IntersectionOracle circle_arc_oracle(const GroupAction<CircleModel>& action,
                                            const CircleModel::Point& basepoint,
                                            const Rational& r) {
  return {[action, basepoint, r](const GroupElem& g) {
            Dist d = action.model.dist(basepoint, action.act(g, basepoint));
            Rational two_r = 2 * r;
            if (d.lt(two_r)) {
              return true;
            }
            auto root = exact_sqrt(d.sq());
            return root && (1 - *root) < two_r;
          },
          true, "circle arcs within 2r on either side"};
}

// Witness scan over a stated point set; exact when the points are the whole
// (capped) model and the action preserves it.
template <MetricModel M>
IntersectionOracle witness_scan_oracle(const GroupAction<M>& action,
                                       const typename M::Point& basepoint, const Rational& r,
                                       std::vector<typename M::Point> points, bool complete) {
  return {[action, basepoint, r, points = std::move(points)](const GroupElem& g) {
            for (const auto& x : points) {
              if (action.model.dist(basepoint, x).lt(r) &&
                  action.model.dist(basepoint, action.act(g, x)).lt(r)) {
                return true;
              }
            }
            return false;
          },
          complete,
          complete ? "exhaustive over the full capped model"
                   : "witness sampling (certifies non-emptiness only)"};
}

struct ProperActionReport {
  Rational radius;
  std::size_t horizon = 0;
  std::vector<GroupElem> intersecting;  // S = {g : g.U meets U}, up to horizon
  std::size_t count_at_half = 0;
  bool exhausted = false;
  bool stabilized = false;
  bool four_r_bound_ok = false;  // S inside the closed 4r ball of the induced metric
  Dist max_induced_norm;
  bool exact = false;
  std::string oracle;
};

template <MetricModel M>
ProperActionReport proper_action_check(const GroupAction<M>& action,
                                       const typename M::Point& basepoint, const Rational& r,
                                       std::size_t horizon, const IntersectionOracle& oracle,
                                       bool require_exact = true) {
  require(r > 0, "invalid-parameter", "ball radius must be positive");
  require(oracle.exact || !require_exact, "no-intersection-predicate",
          "only a sampling oracle is available for this space");
  const EnumGroup& grp = *action.group;
  ProperActionReport report;
  report.radius = r;
  report.horizon = grp.clamp_horizon(horizon);
  report.exhausted = grp.order() && *grp.order() == report.horizon;
  report.exact = oracle.exact;
  report.oracle = oracle.description;

  auto metric = induced_metric(action, basepoint);
  std::size_t half = report.horizon / 2;
  report.four_r_bound_ok = true;
  for (std::size_t i = 0; i < report.horizon; ++i) {
    GroupElem g = grp.element(i);
    if (!oracle.test(g)) {
      continue;
    }
    report.intersecting.push_back(g);
    if (i < half) {
      ++report.count_at_half;
    }
    Dist n = metric->norm(g);
    report.max_induced_norm = std::max(report.max_induced_norm, n);
    if (!n.le(4 * r)) {
      report.four_r_bound_ok = false;
    }
  }
  report.stabilized =
      report.exhausted || report.intersecting.size() == report.count_at_half;
  return report;
}

struct CocompactnessReport {
  Dist radius;                  // sup over the sample of the distance to the orbit
  std::string witness;          // a sample point attaining it
  std::size_t sample_size = 0;
  std::size_t orbit_horizon = 0;
  bool length_space_assumed = true;  // model spaces are geodesic by construction
};

template <MetricModel M>
CocompactnessReport cocompactness_radius(const GroupAction<M>& action,
                                         const typename M::Point& basepoint,
                                         const std::vector<typename M::Point>& sample,
                                         std::size_t orbit_horizon) {
  require(!sample.empty(), "invalid-parameter", "cocompactness needs a nonempty sample");
  const EnumGroup& grp = *action.group;
  CocompactnessReport report;
  report.sample_size = sample.size();
  report.orbit_horizon = grp.clamp_horizon(orbit_horizon);

  std::vector<typename M::Point> orbit;
  orbit.reserve(report.orbit_horizon);
  for (std::size_t i = 0; i < report.orbit_horizon; ++i) {
    orbit.push_back(action.act(grp.element(i), basepoint));
  }
  for (const auto& x : sample) {
    std::optional<Dist> nearest;
    for (const auto& p : orbit) {
      Dist d = action.model.dist(x, p);
      if (!nearest || d < *nearest) {
        nearest = d;
      }
    }
    if (*nearest > report.radius) {
      report.radius = *nearest;
      report.witness = action.model.label(x);
    }
  }
  return report;
}

}  // namespace lscert
