#include "lscert/scenarios.hpp"

#include <future>
#include <map>

#include "lscert/coarse.hpp"
#include "lscert/core_metrics.hpp"
#include "lscert/group_metrics.hpp"

namespace lscert {

// ---------------------------------------------------------------------------
// Report

Json CheckRecord::to_json() const {
  Json j;
  j["name"] = name;
  j["anchor"] = anchor;
  j["verdict"] = verdict;
  if (!reason.empty()) {
    j["reason"] = reason;
  }
  j["data"] = data;
  return j;
}

bool Report::pass() const {
  for (const auto& c : checks) {
    if (c.verdict == "fail") {
      return false;
    }
  }
  return true;
}

Json Report::to_json() const {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["scenario"] = scenario;
  j["description"] = description;
  j["parameters"] = parameters;
  j["checks"] = Json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t na = 0;
  for (const auto& c : checks) {
    j["checks"].push_back(c.to_json());
    if (c.verdict == "pass") {
      ++passed;
    } else if (c.verdict == "fail") {
      ++failed;
    } else {
      ++na;
    }
  }
  j["summary"] = Json{{"total", checks.size()},
                      {"passed", passed},
                      {"failed", failed},
                      {"not_applicable", na}};
  j["verdict"] = pass() ? "pass" : "fail";
  return j;
}

std::string Report::to_string() const { return to_json().dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Built-in actions

namespace builtin {

GroupAction<EuclideanModel> z2_plane_translation() {
  auto translate = [](const GroupElem& g, const EuclideanModel::Point& x) {
    EuclideanModel::Point y = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += g.rep[i];
    }
    return y;
  };
  return {std::make_shared<FreeAbelianGroup>(2), EuclideanModel(2),
          "Z^2 translating the rational plane", translate};
}

GroupAction<EuclideanModel> z_line_translation() {
  auto translate = [](const GroupElem& g, const EuclideanModel::Point& x) {
    return EuclideanModel::Point{x[0] + g.rep[0]};
  };
  return {std::make_shared<FreeAbelianGroup>(1), EuclideanModel(1),
          "Z translating the rational line", translate};
}

GroupAction<EuclideanModel> z_trivial_on_line() {
  auto fix = [](const GroupElem&, const EuclideanModel::Point& x) { return x; };
  return {std::make_shared<FreeAbelianGroup>(1), EuclideanModel(1),
          "Z acting trivially on the rational line", fix};
}

GroupAction<EuclideanModel> reflection_on_line() {
  auto reflect = [](const GroupElem& g, const EuclideanModel::Point& x) {
    return g.rep[0] == 1 ? EuclideanModel::Point{-x[0]} : x;
  };
  return {std::make_shared<CyclicGroup>(2), EuclideanModel(1),
          "Z_2 reflecting the rational line through the origin", reflect};
}

GroupAction<CircleModel> circle_rotation() {
  Rational alpha(7050, 10000);
  auto rotate = [alpha](const GroupElem& g, const CircleModel::Point& x) {
    return CircleModel::reduce(x + g.rep[0] * alpha);
  };
  return {std::make_shared<FreeAbelianGroup>(1), CircleModel{},
          "Z rotating the unit-circumference circle by 7050/10000", rotate};
}

GroupAction<TriadicModel> flip_on_a(std::size_t support_cap) {
  auto group = flip_group(support_cap);
  auto flip = [group](const GroupElem& g, const TriadicPoint& x) {
    return flip_action(*group, g, x);
  };
  return {group, TriadicModel{},
          "digit flips of the ternary subspace A (" + std::to_string(support_cap) + " digits)",
          flip};
}

}  // namespace builtin

// ---------------------------------------------------------------------------
// Scenario plumbing

namespace {

struct Check {
  std::string name;
  std::string anchor;
  std::function<CheckRecord()> body;
};

Report assemble(std::string name, std::string description, Json parameters,
                std::vector<Check> checks, bool parallel) {
  Report report;
  report.scenario = std::move(name);
  report.description = std::move(description);
  report.parameters = std::move(parameters);

  auto run_one = [](const Check& c) -> CheckRecord {
    try {
      return c.body();
    } catch (const Error& e) {
      return CheckRecord::fail(c.name, c.anchor, e.what());
    }
  };
  if (parallel) {
    std::vector<std::future<CheckRecord>> futures;
    futures.reserve(checks.size());
    for (const auto& c : checks) {
      futures.push_back(std::async(std::launch::async, run_one, std::cref(c)));
    }
    for (auto& f : futures) {
      report.checks.push_back(f.get());
    }
  } else {
    for (const auto& c : checks) {
      report.checks.push_back(run_one(c));
    }
  }
  return report;
}

Json elems_json(const EnumGroup& group, const std::vector<GroupElem>& elems,
                std::size_t cap = 64) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < elems.size() && i < cap; ++i) {
    arr.push_back(group.label(elems[i]));
  }
  return arr;
}

Json axiom_json(const ActionAxiomReport& r) {
  Json j;
  j["identity_ok"] = r.identity_ok;
  j["compatibility_ok"] = r.compat_ok;
  j["isometry_ok"] = r.isometry_ok;
  j["elements_checked"] = r.elems_checked;
  j["points_checked"] = r.points_checked;
  if (!r.witness.empty()) {
    j["witness"] = r.witness;
  }
  return j;
}

Json properness_json(const PropernessReport& r, const EnumGroup& group) {
  Json j;
  j["radius"] = rational_json(r.radius);
  j["inequality"] = "<";
  j["horizon"] = r.horizon;
  j["ball_size"] = r.ball.size();
  j["ball_size_at_half_horizon"] = r.ball_size_half;
  j["certainty"] = r.certainty == BallCertainty::certified ? "certified" : "empirical";
  if (r.certified_size) {
    j["certified_ball_size"] = *r.certified_size;
  }
  j["stabilized"] = r.pass;
  j["note"] = r.note;
  j["ball"] = elems_json(group, r.ball, 32);
  return j;
}

Json char_json(const CharConditionsReport& r, const EnumGroup& group) {
  Json j;
  j["condition1_finite_stabilizer"] = r.cond_finite_stabilizer;
  j["condition2_discrete_orbit"] = r.cond_discrete_orbit;
  j["condition3_bounded_finite"] = r.cond_bounded_finite;
  j["overall"] = r.overall;
  j["stabilizer_size"] = r.stab.elements.size();
  j["stabilizer"] = elems_json(group, r.stab.elements, 16);
  j["orbit_size"] = r.orbit.orbit_size;
  if (r.orbit.min_gap) {
    j["orbit_min_gap"] = dist_json(*r.orbit.min_gap);
  } else {
    j["orbit_min_gap"] = "orbit is a single point";
  }
  j["orbit_in_ball"] = r.orbit.in_ball;
  j["orbit_in_ball_at_half_horizon"] = r.orbit.in_ball_at_half;
  j["induced_metric_properness"] = properness_json(r.properness, group);
  j["agreement"] = r.agreement;
  return j;
}

Json control_table_json(const ControlTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["r"] = dist_json(row.r);
    r["s"] = dist_json(row.s);
    r["pairs"] = row.pair_count;
    rows.push_back(r);
  }
  Json j;
  j["inequality"] = t.inequality;
  j["sample_size"] = t.sample_size;
  j["pair_count"] = t.pair_count;
  j["monotone"] = t.monotone;
  j["stable"] = t.stable;
  j["rows"] = rows;
  return j;
}

Json certificate_json(const CoarseCertificate& c) {
  Json j;
  j["forward_control"] = control_table_json(c.forward);
  j["backward_control"] = control_table_json(c.backward);
  j["displacement_forward"] = dist_json(c.displacement_fwd);
  j["displacement_backward"] = dist_json(c.displacement_bwd);
  j["displacement_forward_stable"] = c.displacement_fwd_stable;
  j["displacement_backward_stable"] = c.displacement_bwd_stable;
  j["horizon"] = c.horizon;
  j["verdict"] = c.pass ? "coarse equivalence (up to horizon)" : "not certified at this horizon";
  return j;
}

Json agreement_json(const AgreementReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["r"] = rational_json(row.r);
    x["s_at_half_horizon"] = dist_json(row.s_half);
    x["s_at_horizon"] = dist_json(row.s_full);
    x["metric_criterion_stable"] = row.metric_stable;
    x["f_ball_size"] = row.f_size;
    x["e_size_at_half_horizon"] = row.e_half;
    x["e_size_at_horizon"] = row.e_full;
    x["e_criterion_stable"] = row.e_stable;
    x["e_max_norm"] = dist_json(row.e_max_norm);
    x["e_inside_metric_ball"] = row.translation_ok;
    x["agree"] = row.agree;
    rows.push_back(x);
  }
  Json j;
  j["inequality"] = r.inequality;
  j["horizon"] = r.horizon;
  j["rows"] = rows;
  j["all_agree"] = r.all_agree;
  return j;
}

Json qi_json(const QiFit& f) {
  Json j;
  j["lambda"] = f.lambda;
  j["c"] = f.c;
  j["tolerance"] = f.tolerance;
  j["d_min"] = rational_json(f.d_min);
  j["pairs"] = f.pair_count;
  j["ratio_pairs"] = f.ratio_pairs;
  j["verified"] = f.verified;
  return j;
}

Json uniform_check_json(const GroupUniformCheck& c, const EnumGroup& target) {
  Json j;
  j["f_size"] = c.f_set.size();
  j["e_size"] = c.e_set.size();
  j["e_size_extended"] = c.e_size_extended;
  j["horizon"] = c.horizon;
  j["extended_horizon"] = c.extended_horizon;
  j["pairs_checked"] = c.pairs_checked;
  j["stabilized"] = c.stabilized;
  j["e_set"] = elems_json(target, c.e_set, 32);
  return j;
}

Json support_json(const std::vector<int>& support) {
  Json arr = Json::array();
  for (int i : support) {
    arr.push_back(i);
  }
  return arr;
}

std::size_t horizon_or(const ScenarioParams& p, std::size_t fallback) {
  std::size_t h = p.horizon.value_or(fallback);
  require(h >= 4 && h <= 4000, "invalid-scenario", "horizon must be in 4..4000");
  return h;
}

Rational radius_or(const ScenarioParams& p, const Rational& fallback) {
  Rational r = p.radius.value_or(fallback);
  require(r > 0, "invalid-scenario", "radius must be positive");
  return r;
}

double tolerance_or(const ScenarioParams& p, double fallback) {
  double t = p.tolerance.value_or(fallback);
  require(t > 0, "invalid-scenario", "tolerance must be positive");
  return t;
}

// ---------------------------------------------------------------------------
// svarc-milnor:z2-plane

Report scenario_z2_plane(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 200);
  Rational proper_r = radius_or(p, 1);
  double tol = tolerance_or(p, 1e-9);
  const std::size_t qi_ball_radius = 10;
  const Rational char_radius = 4;

  auto action = builtin::z2_plane_translation();
  const EnumGroup& grp = *action.group;
  EuclideanModel::Point origin{Rational(0), Rational(0)};
  auto induced = induced_metric(action, origin);

  Json params;
  params["horizon"] = horizon;
  params["proper_action_radius"] = rational_json(proper_r);
  params["characterization_radius"] = rational_json(char_radius);
  params["qi_word_ball_radius"] = qi_ball_radius;
  params["cocompactness_grid_step"] = "1/10";
  params["tolerance"] = tol;

  std::vector<Check> checks;
  checks.push_back({"action-axioms", "isometric action axioms", [&] {
    auto r = verify_action_axioms(action, 12, lattice_ball_l1(2, 2));
    return CheckRecord::outcome(r.pass(), "action-axioms", "isometric action axioms", r.witness,
                                axiom_json(r));
  }});
  checks.push_back({"induced-metric", "Def 2 (left-invariant pseudo-metric)", [&] {
    auto inv = check_left_invariance(*induced, 16);
    Json data;
    data["left_invariance_triples"] = inv.triples_checked;
    data["left_invariance_ok"] = inv.pass;
    GroupElem a{{0, 0}};
    GroupElem b{{3, 4}};
    data["example"] = Json{{"pair", "(0,0) vs (3,4)"},
                           {"distance", dist_json(induced->dist(a, b))["value"]}};
    return CheckRecord::outcome(inv.pass, "induced-metric", "Def 2 (left-invariant pseudo-metric)",
                                "left-invariance violated", data);
  }});
  checks.push_back({"stabilizer", "Lemma 7 condition 1 (finite stabilizer)", [&] {
    auto st = stabilizer(action, origin, horizon);
    Json data;
    data["stabilizer"] = elems_json(grp, st.elements);
    data["stabilized"] = st.stabilized;
    bool ok = st.stabilized && st.elements.size() == 1 && st.elements[0] == grp.identity();
    return CheckRecord::outcome(ok, "stabilizer", "Lemma 7 condition 1 (finite stabilizer)",
                                "expected the trivial stabilizer", data);
  }});
  checks.push_back({"characterization-agreement", "Lemma 7 (conditions vs induced properness)", [&] {
    auto r = check_char_conditions(action, origin, horizon, char_radius);
    return CheckRecord::outcome(r.overall && r.agreement, "characterization-agreement",
                                "Lemma 7 (conditions vs induced properness)",
                                "conditions failed or disagreed with the metric verdict",
                                char_json(r, grp));
  }});
  checks.push_back({"proper-action", "Cor 8 (g.U meets U; the 4r bound)", [&] {
    auto oracle = center_distance_oracle(action, origin, proper_r);
    auto r = proper_action_check(action, origin, proper_r, horizon, oracle);
    Json data;
    data["radius"] = rational_json(proper_r);
    data["intersection_oracle"] = r.oracle;
    data["set_size"] = r.intersecting.size();
    data["set"] = elems_json(grp, r.intersecting);
    data["stabilized"] = r.stabilized;
    data["max_induced_norm"] = dist_json(r.max_induced_norm);
    data["four_r_bound"] = rational_json(4 * proper_r);
    data["four_r_bound_ok"] = r.four_r_bound_ok;
    return CheckRecord::outcome(r.stabilized && r.four_r_bound_ok, "proper-action",
                                "Cor 8 (g.U meets U; the 4r bound)",
                                "set not stabilized or 4r bound violated", data);
  }});
  checks.push_back({"cocompactness", "Cor 9 (space within bounded distance of the orbit)", [&] {
    auto r = cocompactness_radius(action, origin, unit_grid(2, 10), horizon);
    Json data;
    data["covering_radius"] = dist_json(r.radius);
    data["witness"] = r.witness;
    data["sample_size"] = r.sample_size;
    data["orbit_horizon"] = r.orbit_horizon;
    data["length_space_assumed"] = r.length_space_assumed;
    bool ok = r.radius.sq() == Rational(1, 2);
    return CheckRecord::outcome(ok, "cocompactness",
                                "Cor 9 (space within bounded distance of the orbit)",
                                "expected covering radius sqrt(1/2) on the unit-cell grid", data);
  }});
  checks.push_back({"generating-set", "Lemma 3 (F = ball of radius M+1 generates)", [&] {
    auto word = std::make_shared<WordMetric>(
        action.group,
        std::vector<GroupElem>{GroupElem{{1, 0}}, GroupElem{{0, 1}}}, 24);
    auto gen = extract_generating_set(*word, 1, horizon);
    auto ver = verify_generates(grp, gen.elements, horizon);
    Json data;
    data["threshold"] = rational_json(gen.threshold);
    data["generating_set"] = elems_json(grp, gen.elements);
    data["max_norm_in_f"] = dist_json(gen.max_norm);
    data["closure_covers_first"] = ver.reached;
    data["horizon"] = ver.horizon;
    bool ok = gen.elements.size() == 5 && ver.pass;
    return CheckRecord::outcome(ok, "generating-set",
                                "Lemma 3 (F = ball of radius M+1 generates)",
                                "extraction or closure failed", data);
  }});
  checks.push_back({"qi-fit", "Cor 10 (quasi-isometry constants)", [&] {
    auto word = std::make_shared<WordMetric>(
        action.group,
        std::vector<GroupElem>{GroupElem{{1, 0}}, GroupElem{{0, 1}}},
        2 * qi_ball_radius + 2);
    auto ball = word->certified_ball(Rational(qi_ball_radius) + 1);
    require(ball.has_value(), "invalid-scenario", "word ball not certified");
    GroupSpace word_space(word, *ball);
    GroupSpace induced_space(induced, *ball);
    std::vector<std::size_t> ident(ball->size());
    for (std::size_t i = 0; i < ident.size(); ++i) {
      ident[i] = i;
    }
    MapSample f{&word_space, &induced_space, ident};
    auto fit = fit_qi_constants(f, ball->size(), 1, tol);
    Json data = qi_json(fit);
    data["sample"] = "word ball of radius " + std::to_string(qi_ball_radius) + " (" +
                     std::to_string(ball->size()) + " elements)";
    double sqrt2 = std::sqrt(2.0);
    bool ok = fit.verified && std::abs(fit.lambda - sqrt2) <= tol && fit.c <= tol;
    return CheckRecord::outcome(ok, "qi-fit", "Cor 10 (quasi-isometry constants)",
                                "expected lambda = sqrt(2), c = 0 at tolerance", data);
  }});
  return assemble("svarc-milnor:z2-plane",
                  "Translation action of Z^2 on the rational plane: stabilizer, "
                  "characterization, 4r bound, covering radius, QI constants.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// svarc-milnor:z-line

Report scenario_z_line(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 100);
  Rational proper_r = radius_or(p, Rational(2, 5));
  double tol = tolerance_or(p, 1e-9);
  const Rational char_radius = 3;

  auto action = builtin::z_line_translation();
  const EnumGroup& grp = *action.group;
  EuclideanModel::Point half{Rational(1, 2)};
  auto induced = induced_metric(action, half);
  auto word = std::make_shared<WordMetric>(action.group,
                                           std::vector<GroupElem>{GroupElem{{1}}}, horizon + 4);

  Json params;
  params["horizon"] = horizon;
  params["basepoint"] = "1/2";
  params["proper_action_radius"] = rational_json(proper_r);
  params["characterization_radius"] = rational_json(char_radius);
  params["tolerance"] = tol;

  std::vector<Check> checks;
  checks.push_back({"action-axioms", "isometric action axioms", [&] {
    std::vector<EuclideanModel::Point> pts;
    for (long k = -3; k <= 3; ++k) {
      pts.push_back({Rational(k, 2)});
    }
    auto r = verify_action_axioms(action, 10, pts);
    return CheckRecord::outcome(r.pass(), "action-axioms", "isometric action axioms", r.witness,
                                axiom_json(r));
  }});
  checks.push_back({"induced-metric", "Lemma 7 (induced pseudo-metric)", [&] {
    Json data;
    data["example"] = Json{{"pair", "0 vs 1 at basepoint 1/2"},
                           {"distance", dist_json(induced->dist(GroupElem{{0}}, GroupElem{{1}}))["value"]}};
    auto inv = check_left_invariance(*induced, 12);
    data["left_invariance_ok"] = inv.pass;
    bool ok = inv.pass && induced->dist(GroupElem{{0}}, GroupElem{{1}}) == Dist::of(1);
    return CheckRecord::outcome(ok, "induced-metric", "Lemma 7 (induced pseudo-metric)",
                                "unexpected induced distance", data);
  }});
  checks.push_back({"characterization-agreement", "Lemma 7 (conditions vs induced properness)", [&] {
    auto r = check_char_conditions(action, half, horizon, char_radius);
    return CheckRecord::outcome(r.overall && r.agreement, "characterization-agreement",
                                "Lemma 7 (conditions vs induced properness)",
                                "conditions failed or disagreed", char_json(r, grp));
  }});
  checks.push_back({"proper-action", "Cor 8 (g.U meets U)", [&] {
    auto oracle = center_distance_oracle(action, half, proper_r);
    auto r = proper_action_check(action, half, proper_r, horizon, oracle);
    Json data;
    data["set"] = elems_json(grp, r.intersecting);
    data["four_r_bound_ok"] = r.four_r_bound_ok;
    data["stabilized"] = r.stabilized;
    bool ok = r.stabilized && r.four_r_bound_ok && r.intersecting.size() == 1;
    return CheckRecord::outcome(ok, "proper-action", "Cor 8 (g.U meets U)",
                                "expected S = {identity} at radius 2/5", data);
  }});
  checks.push_back({"connectivity", "Lemma 3 (metric connectedness threshold)", [&] {
    GroupSpace space(word, horizon);
    auto connected = is_m_connected(space, 1, space.size());
    auto split = is_m_connected(space, Rational(1, 2), space.size());
    auto chain = find_chain(space, {0}, {grp.index_of(GroupElem{{3}}, space.size()).value()}, 1);
    auto no_chain =
        find_chain(space, {0}, {grp.index_of(GroupElem{{3}}, space.size()).value()}, Rational(1, 2));
    Json data;
    data["connected_at_1"] = connected.connected;
    data["components_at_1/2"] = split.component_count;
    data["chain_0_to_3_at_1"] = chain ? Json(chain->points.size()) : Json("none");
    data["chain_0_to_3_at_1/2"] = no_chain ? Json(no_chain->points.size()) : Json("none");
    bool ok = connected.connected && split.component_count == space.size() && chain.has_value() &&
              chain->points.size() == 4 && !no_chain.has_value();
    return CheckRecord::outcome(ok, "connectivity", "Lemma 3 (metric connectedness threshold)",
                                "threshold behavior differs from |m-n| expectations", data);
  }});
  checks.push_back({"generating-set", "Lemma 3 (F = ball of radius M+1)", [&] {
    auto gen = extract_generating_set(*word, 1, horizon);
    auto ver = verify_generates(grp, gen.elements, std::max<std::size_t>(horizon, 101));
    std::vector<GroupElem> expected{GroupElem{{-1}}, GroupElem{{0}}, GroupElem{{1}}};
    std::vector<GroupElem> sorted = gen.elements;
    std::sort(sorted.begin(), sorted.end());
    Json data;
    data["generating_set"] = elems_json(grp, sorted);
    data["max_norm_in_f"] = dist_json(gen.max_norm);
    data["verify_horizon"] = ver.horizon;
    data["closure_covers_first"] = ver.reached;
    bool ok = sorted == expected && ver.pass;
    return CheckRecord::outcome(ok, "generating-set", "Lemma 3 (F = ball of radius M+1)",
                                "expected F = {-1, 0, 1}", data);
  }});
  checks.push_back({"cocompactness", "Cor 9 (bounded distance from the orbit)", [&] {
    auto r = cocompactness_radius(action, half, unit_grid(1, 10), horizon);
    Json data;
    data["covering_radius"] = dist_json(r.radius);
    data["witness"] = r.witness;
    bool ok = r.radius == Dist::of(Rational(1, 2));
    return CheckRecord::outcome(ok, "cocompactness", "Cor 9 (bounded distance from the orbit)",
                                "expected covering radius 1/2", data);
  }});
  checks.push_back({"qi-fit", "Cor 10 (quasi-isometry constants)", [&] {
    auto ball = word->certified_ball(Rational(31));
    require(ball.has_value(), "invalid-scenario", "word ball not certified");
    GroupSpace word_space(word, *ball);
    GroupSpace induced_space(induced, *ball);
    std::vector<std::size_t> ident(ball->size());
    for (std::size_t i = 0; i < ident.size(); ++i) {
      ident[i] = i;
    }
    MapSample f{&word_space, &induced_space, ident};
    auto fit = fit_qi_constants(f, ball->size(), 1, tol);
    bool ok = fit.verified && std::abs(fit.lambda - 1.0) <= tol && fit.c <= tol;
    return CheckRecord::outcome(ok, "qi-fit", "Cor 10 (quasi-isometry constants)",
                                "expected lambda = 1, c = 0", qi_json(fit));
  }});
  return assemble("svarc-milnor:z-line",
                  "Translation action of Z on the rational line with basepoint 1/2.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// lemma7 scenarios

Report scenario_trivial_action(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 100);
  Rational radius = radius_or(p, 1);
  auto action = builtin::z_trivial_on_line();
  const EnumGroup& grp = *action.group;
  EuclideanModel::Point origin{Rational(0)};

  Json params;
  params["horizon"] = horizon;
  params["radius"] = rational_json(radius);

  std::vector<Check> checks;
  checks.push_back({"action-axioms", "isometric action axioms", [&] {
    std::vector<EuclideanModel::Point> pts;
    for (long k = 0; k <= 4; ++k) {
      pts.push_back({Rational(k)});
    }
    auto r = verify_action_axioms(action, 8, pts);
    return CheckRecord::outcome(r.pass(), "action-axioms", "isometric action axioms", r.witness,
                                axiom_json(r));
  }});
  checks.push_back({"expected-failure", "Lemma 7 condition 1 (infinite stabilizer detected)", [&] {
    auto r = check_char_conditions(action, origin, horizon, radius);
    Json data = char_json(r, grp);
    bool ok = !r.cond_finite_stabilizer && !r.overall && !r.properness.pass && r.agreement;
    return CheckRecord::outcome(ok, "expected-failure",
                                "Lemma 7 condition 1 (infinite stabilizer detected)",
                                "the growing stabilizer should fail condition 1 and properness",
                                data);
  }});
  return assemble("lemma7:trivial-action",
                  "Trivial action of Z on the line: the stabilizer grows with the horizon and "
                  "the induced pseudo-metric has an infinite zero ball.",
                  params, std::move(checks), p.parallel);
}

Report scenario_dense_orbit(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 160);
  Rational radius = radius_or(p, 1);
  auto action = builtin::circle_rotation();
  const EnumGroup& grp = *action.group;
  CircleModel::Point origin(0);

  Json params;
  params["horizon"] = horizon;
  params["radius"] = rational_json(radius);
  params["rotation"] = "7050/10000";

  std::vector<Check> checks;
  checks.push_back({"action-axioms", "isometric action axioms", [&] {
    std::vector<CircleModel::Point> pts;
    for (long k = 0; k < 8; ++k) {
      pts.push_back(Rational(k, 8));
    }
    auto r = verify_action_axioms(action, 10, pts);
    return CheckRecord::outcome(r.pass(), "action-axioms", "isometric action axioms", r.witness,
                                axiom_json(r));
  }});
  checks.push_back({"expected-failure", "Lemma 7 condition 3 (crowding orbit detected)", [&] {
    auto r = check_char_conditions(action, origin, horizon, radius);
    Json data = char_json(r, grp);
    bool ok = r.cond_finite_stabilizer && r.cond_discrete_orbit && !r.cond_bounded_finite &&
              !r.overall && !r.properness.pass && r.agreement;
    return CheckRecord::outcome(ok, "expected-failure",
                                "Lemma 7 condition 3 (crowding orbit detected)",
                                "expected condition 3 to flag the crowding orbit", data);
  }});
  return assemble("lemma7:dense-orbit",
                  "Rotation of the circle by 7050/10000: orbit points crowd every ball, so "
                  "condition 3 fails and the induced ball keeps growing.",
                  params, std::move(checks), p.parallel);
}

Report scenario_reflect_line(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 8);
  Rational radius = radius_or(p, 2);
  auto action = builtin::reflection_on_line();
  const EnumGroup& grp = *action.group;
  EuclideanModel::Point origin{Rational(0)};

  Json params;
  params["horizon"] = horizon;
  params["radius"] = rational_json(radius);

  std::vector<Check> checks;
  checks.push_back({"action-axioms", "isometric action axioms", [&] {
    std::vector<EuclideanModel::Point> pts;
    for (long k = -3; k <= 3; ++k) {
      pts.push_back({Rational(k)});
    }
    auto r = verify_action_axioms(action, 2, pts);
    return CheckRecord::outcome(r.pass(), "action-axioms", "isometric action axioms", r.witness,
                                axiom_json(r));
  }});
  checks.push_back({"characterization-agreement", "Lemma 7 (nontrivial finite stabilizer)", [&] {
    auto st = stabilizer(action, origin, horizon);
    auto r = check_char_conditions(action, origin, horizon, radius);
    Json data = char_json(r, grp);
    bool ok = st.elements.size() == 2 && r.overall && r.agreement;
    return CheckRecord::outcome(ok, "characterization-agreement",
                                "Lemma 7 (nontrivial finite stabilizer)",
                                "expected the full two-element stabilizer and a proper metric",
                                data);
  }});
  return assemble("lemma7:reflect-line",
                  "Z_2 reflecting the line through the origin: the basepoint 0 is fixed by both "
                  "elements, a finite stabilizer that keeps the induced metric proper.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// two-metrics:dsum2

Report scenario_two_metrics(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 64);
  auto group = std::make_shared<DirectSumGroup>(std::vector<std::uint64_t>{2});
  auto linear = std::make_shared<SupportWeightMetric>(group, linear_weights());
  auto doubling = std::make_shared<SupportWeightMetric>(group, pow2_weights());

  Json params;
  params["horizon"] = horizon;
  params["metric_1"] = linear->describe();
  params["metric_2"] = doubling->describe();

  std::vector<Check> checks;
  checks.push_back({"norm-axioms", "Def 2 (proper left-invariant norms)", [&] {
    auto a1 = check_norm_axioms(*linear, 32);
    auto a2 = check_norm_axioms(*doubling, 32);
    auto ball = check_properness(*linear, 4, horizon);
    Json data;
    data["linear_norm_ok"] = a1.pass;
    data["doubling_norm_ok"] = a2.pass;
    data["ball_radius_4"] = properness_json(ball, *group);
    bool ok = a1.pass && a2.pass && ball.pass && ball.ball.size() == 5;
    return CheckRecord::outcome(ok, "norm-axioms", "Def 2 (proper left-invariant norms)",
                                "expected the 5-element ball of radius 4", data);
  }});
  checks.push_back({"identity-certificate", "Cor 6 (any two proper metrics are equivalent)", [&] {
    GroupSpace s1(linear, horizon);
    GroupSpace s2(doubling, horizon);
    std::vector<std::size_t> ident(horizon);
    for (std::size_t i = 0; i < horizon; ++i) {
      ident[i] = i;
    }
    MapSample f{&s1, &s2, ident};
    MapSample b{&s2, &s1, ident};
    std::vector<Dist> fwd_grid;
    for (int r = 1; r <= 6; ++r) {
      fwd_grid.push_back(Dist::of(r));
    }
    std::vector<Dist> bwd_grid{Dist::of(2), Dist::of(4), Dist::of(8), Dist::of(16)};
    auto cert = coarse_equivalence_certificate(f, b, horizon, fwd_grid, bwd_grid);
    bool ok = cert.pass && cert.displacement_fwd.is_zero() && cert.displacement_bwd.is_zero();
    return CheckRecord::outcome(ok, "identity-certificate",
                                "Cor 6 (any two proper metrics are equivalent)",
                                "identity certificate failed", certificate_json(cert));
  }});
  checks.push_back({"e-equals-f", "Cor 6 proof (the choice E = F always works)", [&] {
    Json rows = Json::array();
    bool ok = true;
    for (int r = 2; r <= 4; ++r) {
      auto ball = linear->certified_ball(r);
      require(ball.has_value(), "invalid-scenario", "ball not certified");
      auto check = group_ls_uniform_check([](const GroupElem& g) { return g; }, *group, *group,
                                          *ball, horizon);
      bool contained = std::includes(ball->begin(), ball->end(), check.e_set.begin(),
                                     check.e_set.end());
      Json row = uniform_check_json(check, *group);
      row["r"] = r;
      row["e_subset_of_f"] = contained;
      rows.push_back(row);
      ok = ok && contained && check.stabilized;
    }
    return CheckRecord::outcome(ok, "e-equals-f", "Cor 6 proof (the choice E = F always works)",
                                "E escaped F for the identity map", Json{{"rows", rows}});
  }});
  checks.push_back({"lemma5-agreement", "Lemma 5 (metric vs finite-subset criterion)", [&] {
    auto report = equivalence_agreement([](const GroupElem& g) { return g; }, *linear, *doubling,
                                        horizon, {1, 2, 3, 4});
    return CheckRecord::outcome(report.all_agree, "lemma5-agreement",
                                "Lemma 5 (metric vs finite-subset criterion)",
                                "criteria disagreed", agreement_json(report));
  }});
  return assemble("two-metrics:dsum2",
                  "The identity between two support-weight metrics on the Z_2 sum: control "
                  "tables both ways, zero displacements, and E = F as the uniformity witness.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// m0-z2

Report scenario_m0_z2(const ScenarioParams& p) {
  std::size_t cap = p.support_cap.value_or(9);
  require(cap >= 2 && cap <= 10, "invalid-scenario", "support cap must be in 2..10");

  Json params;
  params["support_cap"] = cap;
  params["points"] = std::size_t{1} << cap;

  std::vector<Check> checks;
  checks.push_back({"action-vs-isometry", "Prop 12 (flip action; not an ambient isometry)", [&] {
    auto action = builtin::flip_on_a(std::min<std::size_t>(cap, 5));
    auto pts = enumerate_triadic(0, static_cast<int>(std::min<std::size_t>(cap, 5)));
    auto r = verify_action_axioms(action, 8, pts);
    Json data = axiom_json(r);
    bool ok = r.action_ok() && !r.isometry_ok;
    return CheckRecord::outcome(ok, "action-vs-isometry",
                                "Prop 12 (flip action; not an ambient isometry)",
                                "expected a genuine action that fails the isometry test", data);
  }});
  checks.push_back({"correspondence", "Prop 12 (coarse equivalence with the Z_2 sum)", [&] {
    auto cert = verify_m0_z2_equivalence(cap);
    Json data;
    data["bijection"] = cert.bijection;
    data["pairs"] = cert.pair_count;
    Json fwd = Json::array();
    for (const auto& row : cert.forward) {
      fwd.push_back(Json{{"k", row.index},
                         {"expected", rational_json(row.expected)},
                         {"observed", rational_json(row.observed)},
                         {"tight", row.tight},
                         {"witness_a", support_json(row.witness_a)},
                         {"witness_b", support_json(row.witness_b)}});
    }
    Json mins = Json::array();
    for (const auto& row : cert.flip_min) {
      mins.push_back(Json{{"i", row.index},
                          {"expected", rational_json(row.expected)},
                          {"observed", rational_json(row.observed)},
                          {"tight", row.tight},
                          {"witness_a", support_json(row.witness_a)},
                          {"witness_b", support_json(row.witness_b)}});
    }
    data["forward_max_change"] = fwd;
    data["flip_min_change"] = mins;
    data["coarse_certificate"] = certificate_json(cert.coarse);
    if (cert.isometry_counterexample) {
      const auto& w = *cert.isometry_counterexample;
      data["isometry_counterexample"] = Json{{"g", support_json(w[0])},
                                             {"x", support_json(w[1])},
                                             {"y", support_json(w[2])}};
    }
    bool ok = cert.bijection && cert.bounds_tight && cert.coarse.pass &&
              cert.coarse.displacement_fwd.is_zero() && cert.coarse.displacement_bwd.is_zero();
    return CheckRecord::outcome(ok, "correspondence",
                                "Prop 12 (coarse equivalence with the Z_2 sum)",
                                "bounds not tight or certificate failed", data);
  }});
  checks.push_back({"ls-axioms", "Def 1 (the ternary space is a large-scale metric space)", [&] {
    std::size_t axiom_cap = std::min<std::size_t>(cap, 6);
    ModelSample<TriadicModel> space("A", TriadicModel{},
                                    enumerate_triadic(0, static_cast<int>(axiom_cap)));
    auto axioms = check_pseudo_metric(space, space.size());
    auto ls = check_ls_condition(space, space.size());
    Json data;
    data["points"] = space.size();
    data["pseudo_metric_ok"] = axioms.pass;
    data["max_zero_class"] = ls.max_class_size;
    bool ok = axioms.pass && ls.max_class_size == 1;
    return CheckRecord::outcome(ok, "ls-axioms",
                                "Def 1 (the ternary space is a large-scale metric space)",
                                "zero classes must be singletons", data);
  }});
  return assemble("m0-z2",
                  "The digit-flip correspondence between the Z_2 sum and the ternary subspace A: "
                  "exhaustive control bounds 3^(k+1)-1 and 3^i+1, both attained.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// decompose:*

Json decomposition_json(const DecompositionCertificate& cert) {
  Json j;
  Json n = Json::array();
  for (auto q : cert.map.n) {
    n.push_back(q);
  }
  j["quotient_orders"] = n;
  j["ordered_pairs"] = cert.ordered_pairs;
  j["bijection"] = cert.bijection;
  j["identity_to_zero"] = cert.identity_to_zero;
  j["filtration_respected"] = cert.filtration_respected;
  Json rows = Json::array();
  for (const auto& row : cert.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"pairs_in_f", row.pairs_in_f},
                        {"e_size", row.e_size},
                        {"forward_ok", row.forward_ok},
                        {"backward_ok", row.backward_ok}});
  }
  j["levels"] = rows;
  return j;
}

Report scenario_symchain(const ScenarioParams& p) {
  std::size_t kmax = p.kmax.value_or(5);
  require(kmax >= 1 && kmax <= 6, "invalid-scenario", "kmax must be in 1..6");

  Json params;
  params["kmax"] = kmax;

  auto chain = symmetric_chain(kmax);
  std::vector<Check> checks;
  checks.push_back({"chain", "final remarks (strictly increasing finite subgroups)", [&] {
    Json sizes = Json::array();
    for (const auto& level : chain.levels) {
      sizes.push_back(level.size());
    }
    return CheckRecord::pass("chain", "final remarks (strictly increasing finite subgroups)",
                             Json{{"level_sizes", sizes}});
  }});
  checks.push_back({"decomposition", "final remarks (n_i = |G_i/G_{i-1}|; both criteria)", [&] {
    auto cert = verify_decomposition_equivalence(chain, kmax);
    Json data = decomposition_json(cert);
    std::vector<std::uint64_t> expected;
    for (std::size_t i = 1; i <= kmax; ++i) {
      expected.push_back(i);
    }
    bool ok = cert.pass && cert.map.n == expected;
    return CheckRecord::outcome(ok, "decomposition",
                                "final remarks (n_i = |G_i/G_{i-1}|; both criteria)",
                                "decomposition certificate failed", data);
  }});
  checks.push_back({"lemma5-e-sets", "Lemma 5 (E sets stay inside the low coordinates)", [&] {
    auto dec = locally_finite_decomposition(chain);
    const EnumGroup& src = *chain.ambient;
    const DirectSumGroup& dst = *dec.target;
    std::size_t top = chain.levels.back().size();
    Json rows = Json::array();
    bool ok = true;
    for (std::size_t k = 2; k <= std::min<std::size_t>(3, kmax); ++k) {
      auto check = group_ls_uniform_check([&dec](const GroupElem& g) { return dec.apply(g); },
                                          src, dst, chain.levels[k - 1], top);
      bool inside = true;
      for (const auto& e : check.e_set) {
        for (const auto& [idx, val] : DirectSumGroup::support_of(e)) {
          if (static_cast<std::size_t>(idx) > k) {
            inside = false;
          }
        }
      }
      Json row = uniform_check_json(check, dst);
      row["k"] = k;
      row["e_supported_in_1..k"] = inside;
      rows.push_back(row);
      ok = ok && inside && check.stabilized;
    }
    return CheckRecord::outcome(ok, "lemma5-e-sets",
                                "Lemma 5 (E sets stay inside the low coordinates)",
                                "an E set escaped its coordinate range", Json{{"rows", rows}});
  }});
  checks.push_back({"metric-agreement", "Lemma 5 + Cor 6 (metric-level certificate)", [&] {
    auto dec = locally_finite_decomposition(chain);
    auto ambient = chain.ambient;
    std::vector<GroupElem> transpositions;
    auto sym = std::dynamic_pointer_cast<const SymmetricChainGroup>(ambient);
    require(sym != nullptr, "invalid-scenario", "symchain scenario needs a symmetric group");
    for (std::size_t i = 1; i < sym->degree(); ++i) {
      std::vector<std::int64_t> one_line;
      for (std::size_t x = 1; x <= sym->degree(); ++x) {
        one_line.push_back(static_cast<std::int64_t>(x));
      }
      std::swap(one_line[i - 1], one_line[i]);
      transpositions.push_back({one_line});
    }
    auto word = std::make_shared<WordMetric>(ambient, transpositions, 16);
    auto target_metric = std::make_shared<SupportWeightMetric>(dec.target, linear_weights());
    auto report = equivalence_agreement([&dec](const GroupElem& g) { return dec.apply(g); },
                                        *word, *target_metric, chain.levels.back().size(),
                                        {1, 2, 3});
    return CheckRecord::outcome(report.all_agree, "metric-agreement",
                                "Lemma 5 + Cor 6 (metric-level certificate)",
                                "criteria disagreed on the normal-form map",
                                agreement_json(report));
  }});
  return assemble("decompose:symchain",
                  "Normal form along the symmetric-group chain: quotient orders (1,2,...,k), a "
                  "verified bijection, and the filtration equivalence both ways.",
                  params, std::move(checks), p.parallel);
}

Report scenario_cyclic_tower(const ScenarioParams& p) {
  std::size_t height = p.kmax.value_or(3);
  require(height >= 1 && height <= 6, "invalid-scenario", "tower height must be in 1..6");
  std::vector<std::uint64_t> orders;
  std::uint64_t o = 2;
  for (std::size_t i = 0; i < height; ++i) {
    orders.push_back(o);
    o *= 2;
  }

  Json params;
  Json ordj = Json::array();
  for (auto v : orders) {
    ordj.push_back(v);
  }
  params["orders"] = ordj;

  auto chain = cyclic_tower_chain(orders);
  std::vector<Check> checks;
  checks.push_back({"decomposition", "final remarks (doubling tower, n = (2,2,...))", [&] {
    auto cert = verify_decomposition_equivalence(chain, height);
    Json data = decomposition_json(cert);
    bool ok = cert.pass;
    for (auto q : cert.map.n) {
      ok = ok && q == 2;
    }
    return CheckRecord::outcome(ok, "decomposition",
                                "final remarks (doubling tower, n = (2,2,...))",
                                "expected all quotient orders equal to 2", data);
  }});
  return assemble("decompose:cyclic-tower",
                  "Nested cyclic subgroups Z_2 < Z_4 < ... : the normal form against the "
                  "doubling filtration.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// a-vs-m0

Report scenario_a_vs_m0(const ScenarioParams& p) {
  std::size_t cap = p.support_cap.value_or(9);
  require(cap >= 1 && cap <= 10, "invalid-scenario", "support cap must be in 1..10");
  const int min_index = -3;
  const int table_cap = 3;

  Json params;
  params["min_index"] = min_index;
  params["support_cap"] = cap;
  params["table_support_cap"] = table_cap;

  std::vector<Check> checks;
  checks.push_back({"hausdorff-bound", "Prop 12 (the full space stays within 26/27 of A)", [&] {
    auto r = a_hausdorff_bound(min_index, static_cast<int>(cap));
    Json data;
    data["bound"] = rational_json(r.bound);
    data["bound_below_one"] = r.bound < 1;
    data["points_checked"] = r.points_checked;
    data["all_within"] = r.all_within;
    data["attained"] = r.attained;
    if (r.attaining_point) {
      data["attaining_support"] = support_json(r.attaining_point->support());
    }
    bool ok = r.bound == Rational(26, 27) && r.all_within && r.attained;
    return CheckRecord::outcome(ok, "hausdorff-bound",
                                "Prop 12 (the full space stays within 26/27 of A)",
                                "expected the exact bound 26/27, attained", data);
  }});
  checks.push_back({"bound-family", "Prop 12 (geometric tail below 1 for every digit bound)", [&] {
    Json rows = Json::array();
    bool ok = true;
    for (int m = -1; m >= -4; --m) {
      auto r = a_hausdorff_bound(m, 2);
      rows.push_back(Json{{"min_index", m}, {"bound", rational_json(r.bound)}});
      ok = ok && r.bound < 1 && r.all_within;
    }
    return CheckRecord::outcome(ok, "bound-family",
                                "Prop 12 (geometric tail below 1 for every digit bound)",
                                "a tail bound reached 1", Json{{"rows", rows}});
  }});
  checks.push_back({"truncation-certificate", "Def 4 (inclusion and truncation are uniform)", [&] {
    auto m0_points = enumerate_triadic(min_index, table_cap);
    auto a_points = enumerate_triadic(0, table_cap);
    ModelSample<TriadicModel> m0_space("M0(-3)", TriadicModel{}, m0_points);
    ModelSample<TriadicModel> a_space("A", TriadicModel{}, a_points);

    std::map<Rational, std::size_t> a_index;
    for (std::size_t i = 0; i < a_points.size(); ++i) {
      a_index[a_points[i].value()] = i;
    }
    std::map<Rational, std::size_t> m0_index;
    for (std::size_t i = 0; i < m0_points.size(); ++i) {
      m0_index[m0_points[i].value()] = i;
    }
    std::vector<std::size_t> truncate;
    for (const auto& pt : m0_points) {
      std::vector<int> kept;
      for (int i : pt.support()) {
        if (i >= 0) {
          kept.push_back(i);
        }
      }
      truncate.push_back(a_index.at(triadic_value(kept)));
    }
    std::vector<std::size_t> include;
    for (const auto& pt : a_points) {
      include.push_back(m0_index.at(pt.value()));
    }
    MapSample f{&m0_space, &a_space, truncate};
    MapSample b{&a_space, &m0_space, include};
    std::vector<Dist> grid{Dist::of(1), Dist::of(3), Dist::of(9)};
    auto cert = coarse_equivalence_certificate(f, b, m0_points.size(), grid, grid);
    Json data = certificate_json(cert);
    bool ok = cert.pass && cert.displacement_bwd.is_zero() &&
              cert.displacement_fwd == Dist::of(Rational(26, 27));
    return CheckRecord::outcome(ok, "truncation-certificate",
                                "Def 4 (inclusion and truncation are uniform)",
                                "expected displacement exactly 26/27 against 0", data);
  }});
  checks.push_back({"ls-axioms", "Def 1 (the fractional-digit space is an ls-metric space)", [&] {
    ModelSample<TriadicModel> space("M0(-3)", TriadicModel{},
                                    enumerate_triadic(min_index, table_cap));
    auto axioms = check_pseudo_metric(space, space.size());
    auto ls = check_ls_condition(space, space.size());
    Json data;
    data["points"] = space.size();
    data["pseudo_metric_ok"] = axioms.pass;
    data["max_zero_class"] = ls.max_class_size;
    bool ok = axioms.pass && ls.max_class_size == 1;
    return CheckRecord::outcome(ok, "ls-axioms",
                                "Def 1 (the fractional-digit space is an ls-metric space)",
                                "zero classes must be singletons", data);
  }});
  return assemble("a-vs-m0",
                  "The inclusion of A into the space with three fractional digits: exact "
                  "Hausdorff bound 26/27 and the truncation certificate.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// axioms:builtin-spaces

Report scenario_axioms(const ScenarioParams& p) {
  std::size_t horizon = horizon_or(p, 100);

  Json params;
  params["horizon"] = horizon;

  std::vector<Check> checks;
  checks.push_back({"builtin-spaces", "Def 1 (axiom sweep over the built-in spaces)", [&] {
    struct Entry {
      std::string name;
      std::shared_ptr<LsSpace> space;
    };
    std::vector<Entry> entries;
    auto plane_points = lattice_ball_l1(2, 5);
    plane_points.resize(50);
    entries.push_back({"euclidean-plane-50",
                       std::make_shared<ModelSample<EuclideanModel>>(
                           "E2", EuclideanModel(2), plane_points)});
    std::vector<CircleModel::Point> circle_pts;
    for (long k = 0; k < 50; ++k) {
      circle_pts.push_back(Rational(k, 50));
    }
    entries.push_back({"circle-50", std::make_shared<ModelSample<CircleModel>>(
                                        "circle", CircleModel{}, circle_pts)});
    entries.push_back({"ternary-m0-64",
                       std::make_shared<ModelSample<TriadicModel>>("M0", TriadicModel{},
                                                                   enumerate_triadic(0, 6))});
    entries.push_back({"ternary-a-32",
                       std::make_shared<ModelSample<TriadicModel>>("A", TriadicModel{},
                                                                   enumerate_triadic(0, 5))});
    auto z = std::make_shared<FreeAbelianGroup>(1);
    auto z_word = std::make_shared<WordMetric>(z, std::vector<GroupElem>{GroupElem{{1}}}, 40);
    entries.push_back({"z-word-50", std::make_shared<GroupSpace>(z_word, 50)});
    auto z2 = std::make_shared<FreeAbelianGroup>(2);
    auto z2_word = std::make_shared<WordMetric>(
        z2, std::vector<GroupElem>{GroupElem{{1, 0}}, GroupElem{{0, 1}}}, 12);
    entries.push_back({"z2-word-50", std::make_shared<GroupSpace>(z2_word, 50)});
    auto dsum = std::make_shared<DirectSumGroup>(std::vector<std::uint64_t>{2});
    entries.push_back(
        {"dsum2-linear-32",
         std::make_shared<GroupSpace>(
             std::make_shared<SupportWeightMetric>(dsum, linear_weights()), 32)});
    entries.push_back(
        {"dsum2-doubling-32",
         std::make_shared<GroupSpace>(
             std::make_shared<SupportWeightMetric>(dsum, pow2_weights()), 32)});

    Json rows = Json::array();
    bool ok = true;
    for (const auto& entry : entries) {
      auto axioms = check_pseudo_metric(*entry.space, entry.space->size());
      auto ls = check_ls_condition(*entry.space, entry.space->size());
      bool entry_ok = axioms.pass && ls.max_class_size == 1 && !ls.growing;
      rows.push_back(Json{{"space", entry.name},
                          {"points", entry.space->size()},
                          {"pseudo_metric_ok", axioms.pass},
                          {"max_zero_class", ls.max_class_size},
                          {"zero_class_growing", ls.growing}});
      ok = ok && entry_ok;
    }
    return CheckRecord::outcome(ok, "builtin-spaces",
                                "Def 1 (axiom sweep over the built-in spaces)",
                                "a built-in space failed the axiom sweep", Json{{"rows", rows}});
  }});
  checks.push_back({"planted-asymmetric", "Def 1 (asymmetric oracle detected)", [&] {
    OracleSpace space("signed-difference", 10, [](std::size_t a, std::size_t b) {
      return Dist::of(Rational(static_cast<long>(a)) - Rational(static_cast<long>(b)));
    });
    auto r = check_pseudo_metric(space, 10);
    Json data;
    data["pass"] = r.pass;
    if (r.pair_witness) {
      data["witness"] = Json{{"kind", r.pair_kind},
                             {"pair", Json::array({(*r.pair_witness)[0].index,
                                                   (*r.pair_witness)[1].index})}};
    }
    bool ok = !r.pass && r.pair_witness && (*r.pair_witness)[0].index == 0 &&
              (*r.pair_witness)[1].index == 1;
    return CheckRecord::outcome(ok, "planted-asymmetric", "Def 1 (asymmetric oracle detected)",
                                "the asymmetric oracle must fail with witness (0,1)", data);
  }});
  checks.push_back({"planted-zero-class", "Def 1 (infinite zero class detected)", [&] {
    auto z2 = std::make_shared<FreeAbelianGroup>(2);
    auto elems = z2->enumerate(horizon);
    OracleSpace space("first-coordinate-only", horizon, [&elems](std::size_t a, std::size_t b) {
      Rational d = Rational(elems[a].rep[0]) - Rational(elems[b].rep[0]);
      return Dist::of(d < 0 ? -d : d);
    });
    auto axioms = check_pseudo_metric(space, horizon);
    auto ls = check_ls_condition(space, horizon);
    Json data;
    data["pseudo_metric_ok"] = axioms.pass;
    data["max_zero_class"] = ls.max_class_size;
    data["max_zero_class_at_half"] = ls.max_class_size_half;
    data["growing"] = ls.growing;
    if (ls.growing_witness) {
      data["growing_witness"] = space.label(*ls.growing_witness);
    }
    bool ok = axioms.pass && ls.growing && ls.max_class_size >= 10;
    return CheckRecord::outcome(ok, "planted-zero-class", "Def 1 (infinite zero class detected)",
                                "the zero class of the origin must grow with the horizon", data);
  }});
  checks.push_back({"planted-parity-ball", "Def 2 (infinite ball detected)", [&] {
    auto z = std::make_shared<FreeAbelianGroup>(1);
    auto parity = std::make_shared<OracleGroupMetric>(
        z, "parity pseudo-metric on Z", [](const GroupElem& g, const GroupElem& h) {
          return Dist::of(Rational(((g.rep[0] - h.rep[0]) % 2 + 2) % 2));
        });
    auto r = check_properness(*parity, Rational(1, 2), horizon);
    Json data = properness_json(r, *z);
    return CheckRecord::outcome(!r.pass, "planted-parity-ball", "Def 2 (infinite ball detected)",
                                "the parity ball must keep growing", data);
  }});
  return assemble("axioms:builtin-spaces",
                  "Pseudo-metric and zero-class sweeps over every built-in space, plus the two "
                  "planted counterexamples the checkers must catch.",
                  params, std::move(checks), p.parallel);
}

// ---------------------------------------------------------------------------
// Registry

struct ScenarioDef {
  std::string description;
  Report (*run)(const ScenarioParams&);
};

const std::map<std::string, ScenarioDef>& registry() {
  static const std::map<std::string, ScenarioDef> reg = {
      {"svarc-milnor:z2-plane",
       {"Z^2 translating the plane: stabilizer, 4r bound, covering radius, QI constants.",
        scenario_z2_plane}},
      {"svarc-milnor:z-line",
       {"Z translating the line with basepoint 1/2: full pipeline at desk scale.",
        scenario_z_line}},
      {"lemma7:trivial-action",
       {"Trivial action of Z: the infinite stabilizer fails condition 1.",
        scenario_trivial_action}},
      {"lemma7:dense-orbit",
       {"Circle rotation by 7050/10000: crowding orbit fails condition 3.",
        scenario_dense_orbit}},
      {"lemma7:reflect-line",
       {"Z_2 reflection with both elements fixing the basepoint.", scenario_reflect_line}},
      {"two-metrics:dsum2",
       {"Identity between two support-weight metrics on the Z_2 sum.", scenario_two_metrics}},
      {"m0-z2",
       {"Digit-flip correspondence between the Z_2 sum and the ternary subspace A.",
        scenario_m0_z2}},
      {"decompose:symchain",
       {"Normal form along S_1 < S_2 < ... < S_k with both filtration directions.",
        scenario_symchain}},
      {"decompose:cyclic-tower",
       {"Normal form along Z_2 < Z_4 < Z_8.", scenario_cyclic_tower}},
      {"a-vs-m0",
       {"Bounded distance between A and the three-fractional-digit space.", scenario_a_vs_m0}},
      {"axioms:builtin-spaces",
       {"Axiom sweeps plus the planted counterexamples.", scenario_axioms}},
  };
  return reg;
}

}  // namespace

std::vector<ScenarioInfo> list_scenarios() {
  std::vector<ScenarioInfo> out;
  for (const auto& [name, def] : registry()) {
    out.push_back({name, def.description});
  }
  return out;
}

Report run_scenario(const std::string& name, const ScenarioParams& params) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    throw Error("invalid-scenario", "unknown scenario '" + name + "' (see `list`)");
  }
  return it->second.run(params);
}

}  // namespace lscert
