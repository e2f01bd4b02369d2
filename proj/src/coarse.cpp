#include "lscert/coarse.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace lscert {

std::size_t MapSample::image_of(std::size_t i) const {
  require(i < image.size(), "undefined-image",
          "map not defined on sample point #" + std::to_string(i));
  std::size_t j = image[i];
  require(target != nullptr && j < target->size(), "undefined-image",
          "image of sample point #" + std::to_string(i) + " is not materialized in the target");
  return j;
}

namespace {

// Rows of the measured control function over pairs among the first n points.
std::vector<ControlRow> table_rows(const MapSample& f, std::size_t n,
                                   const std::vector<Dist>& grid) {
  std::vector<std::pair<Dist, Dist>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Dist ds = f.source->dist({i}, {j});
      Dist dt = f.target->dist({f.image_of(i)}, {f.image_of(j)});
      pairs.emplace_back(ds, dt);
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Dist> rs = grid;
  if (rs.empty()) {
    for (const auto& [ds, dt] : pairs) {
      rs.push_back(ds);
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  }

  std::vector<ControlRow> rows;
  Dist running = Dist::zero();
  std::size_t consumed = 0;
  for (const Dist& r : rs) {
    while (consumed < pairs.size() && pairs[consumed].first <= r) {
      running = std::max(running, pairs[consumed].second);
      ++consumed;
    }
    if (consumed == 0) {
      continue;  // no sampled pair is this close; the row would be empty
    }
    rows.push_back({r, running, consumed});
  }
  return rows;
}

}  // namespace

std::optional<Dist> ControlTable::value_at(const Dist& r) const {
  std::optional<Dist> best;
  for (const auto& row : rows) {
    if (row.r <= r) {
      best = row.s;
    }
  }
  return best;
}

ControlTable estimate_control(const MapSample& f, std::size_t n, const std::vector<Dist>& r_grid) {
  require(f.source != nullptr && f.target != nullptr, "invalid-parameter",
          "control table needs both spaces");
  f.source->check_horizon(n);

  ControlTable table;
  table.sample_size = n;
  table.pair_count = n * (n - 1) / 2;
  table.rows = table_rows(f, n, r_grid);
  table.monotone = true;
  for (std::size_t k = 1; k < table.rows.size(); ++k) {
    if (table.rows[k].s < table.rows[k - 1].s) {
      table.monotone = false;
    }
  }

  auto half_rows = table_rows(f, n / 2, r_grid);
  table.stable = true;
  std::size_t h = 0;
  for (const auto& row : table.rows) {
    while (h < half_rows.size() && half_rows[h].r < row.r) {
      ++h;
    }
    if (h < half_rows.size() && half_rows[h].r == row.r && half_rows[h].s != row.s) {
      table.stable = false;
      break;
    }
  }
  return table;
}

Dist displacement(const MapSample& f, const MapSample& back, std::size_t n) {
  require(f.source != nullptr && back.target != nullptr, "invalid-parameter",
          "displacement needs both map samples");
  f.source->check_horizon(n);
  Dist worst = Dist::zero();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = f.image_of(i);
    std::size_t k = back.image_of(j);
    require(k < f.source->size(), "undefined-image", "round trip leaves the source sample");
    worst = std::max(worst, f.source->dist({k}, {i}));
  }
  return worst;
}

CoarseCertificate coarse_equivalence_certificate(const MapSample& f, const MapSample& back,
                                                 std::size_t n, const std::vector<Dist>& fwd_grid,
                                                 const std::vector<Dist>& bwd_grid) {
  CoarseCertificate cert;
  cert.horizon = n;
  std::size_t n_target = std::min<std::size_t>(back.image.size(), back.source->size());
  cert.forward = estimate_control(f, n, fwd_grid);
  cert.backward = estimate_control(back, n_target, bwd_grid);
  cert.displacement_fwd = displacement(f, back, n);
  cert.displacement_bwd = displacement(back, f, n_target);
  cert.displacement_fwd_stable = displacement(f, back, n / 2) == cert.displacement_fwd;
  cert.displacement_bwd_stable = displacement(back, f, n_target / 2) == cert.displacement_bwd;
  cert.pass = cert.forward.stable && cert.backward.stable && cert.displacement_fwd_stable &&
              cert.displacement_bwd_stable;
  return cert;
}

// ---------------------------------------------------------------------------
// F -> E criterion

namespace {

std::set<GroupElem> e_set_over(const GroupMap& f, const EnumGroup& source,
                               const EnumGroup& target, const std::set<GroupElem>& f_subset,
                               std::size_t horizon, std::size_t* pairs_checked) {
  auto elems = source.enumerate(horizon);
  std::vector<GroupElem> images;
  images.reserve(elems.size());
  for (const auto& x : elems) {
    images.push_back(f(x));
  }
  std::set<GroupElem> e;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) {
        continue;
      }
      if (pairs_checked) {
        ++*pairs_checked;
      }
      GroupElem diff = source.mul(source.inv(elems[i]), elems[j]);
      if (f_subset.count(diff)) {
        e.insert(target.mul(target.inv(images[i]), images[j]));
      }
    }
  }
  // Pairs with x = y always contribute the identity.
  if (!elems.empty() && f_subset.count(source.identity())) {
    e.insert(target.identity());
  }
  return e;
}

}  // namespace

GroupUniformCheck group_ls_uniform_check(const GroupMap& f, const EnumGroup& source,
                                         const EnumGroup& target,
                                         const std::vector<GroupElem>& f_subset,
                                         std::size_t horizon, std::size_t factor) {
  require(factor >= 2, "invalid-parameter", "horizon factor must be at least 2");
  GroupUniformCheck check;
  check.horizon = source.clamp_horizon(horizon);
  check.extended_horizon = source.clamp_horizon(horizon * factor);
  check.f_set = f_subset;
  std::sort(check.f_set.begin(), check.f_set.end());
  check.f_set.erase(std::unique(check.f_set.begin(), check.f_set.end()), check.f_set.end());
  std::set<GroupElem> fs(check.f_set.begin(), check.f_set.end());

  auto e = e_set_over(f, source, target, fs, check.horizon, &check.pairs_checked);
  auto e_ext = check.extended_horizon == check.horizon
                   ? e
                   : e_set_over(f, source, target, fs, check.extended_horizon, nullptr);
  check.e_set.assign(e.begin(), e.end());
  check.e_size_extended = e_ext.size();
  check.stabilized = e.size() == e_ext.size();
  return check;
}

AgreementReport equivalence_agreement(const GroupMap& f, const GroupPseudoMetric& source,
                                      const GroupPseudoMetric& target, std::size_t horizon,
                                      const std::vector<Rational>& r_grid) {
  const EnumGroup& sg = source.group();
  const EnumGroup& tg = target.group();
  AgreementReport report;
  report.horizon = sg.clamp_horizon(horizon);
  std::size_t half = report.horizon / 2;

  auto elems = sg.enumerate(report.horizon);
  std::vector<GroupElem> images;
  images.reserve(elems.size());
  for (const auto& x : elems) {
    images.push_back(f(x));
  }

  report.all_agree = true;
  bool exhausted = sg.order() && *sg.order() == report.horizon;
  for (const Rational& r : r_grid) {
    AgreementRow row;
    row.r = r;

    // Metric side: s over pairs with d_source < r, half sample vs full. The
    // strict inequality matches the finite-subset side, where F is the open
    // ball of radius r, so both criteria see exactly the same pairs.
    bool any_half = false;
    bool any_full = false;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        if (source.dist(elems[i], elems[j]).lt(r)) {
          Dist dt = target.dist(images[i], images[j]);
          row.s_full = std::max(row.s_full, dt);
          any_full = true;
          if (j < half) {
            row.s_half = std::max(row.s_half, dt);
            any_half = true;
          }
        }
      }
    }
    // A fully enumerated finite group leaves nothing to grow.
    row.metric_stable =
        exhausted || !any_full || (any_half && row.s_half == row.s_full);

    // Finite-subset side with F the strict ball of radius r about 1.
    std::vector<GroupElem> ball;
    for (const auto& g : sg.enumerate(report.horizon)) {
      if (source.norm(g).lt(r)) {
        ball.push_back(g);
      }
    }
    row.f_size = ball.size();
    auto check = group_ls_uniform_check(f, sg, tg, ball, half, 2);
    row.e_half = check.e_set.size();
    row.e_full = check.e_size_extended;
    row.e_stable = check.stabilized;

    for (const auto& e : check.e_set) {
      row.e_max_norm = std::max(row.e_max_norm, target.norm(e));
    }
    row.translation_ok = row.e_max_norm <= row.s_full;

    row.agree = row.metric_stable == row.e_stable;
    if (!row.agree) {
      report.all_agree = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Quasi-isometry fit

QiFit fit_qi_constants(const MapSample& f, std::size_t n, const Rational& d_min,
                       double tolerance) {
  f.source->check_horizon(n);
  require(d_min > 0, "invalid-parameter", "d_min must be positive");
  QiFit fit;
  fit.tolerance = tolerance;
  fit.d_min = d_min;

  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Dist ds = f.source->dist({i}, {j});
      Dist dt = f.target->dist({f.image_of(i)}, {f.image_of(j)});
      double d = ds.to_double();
      double dp = dt.to_double();
      pairs.emplace_back(d, dp);
      if (ds.ge(d_min)) {
        if (dt.is_zero()) {
          ++fit.zero_target_skipped;
          continue;
        }
        ++fit.ratio_pairs;
        fit.lambda = std::max(fit.lambda, std::max(dp / d, d / dp));
      }
    }
  }
  fit.pair_count = pairs.size();
  require(fit.ratio_pairs + fit.zero_target_skipped > 0, "empty-sample",
          "no sampled pair has source distance >= " + rat_to_string(d_min));

  for (const auto& [d, dp] : pairs) {
    fit.c = std::max(fit.c, dp - fit.lambda * d);
    fit.c = std::max(fit.c, d / fit.lambda - dp);
  }
  fit.c = std::max(fit.c, 0.0);

  fit.verified = true;
  for (const auto& [d, dp] : pairs) {
    if (dp > fit.lambda * d + fit.c + tolerance ||
        dp < d / fit.lambda - fit.c - tolerance) {
      fit.verified = false;
      break;
    }
  }
  return fit;
}

}  // namespace lscert
