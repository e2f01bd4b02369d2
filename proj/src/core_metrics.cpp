#include "lscert/core_metrics.hpp"

#include <deque>

#include "lscert/union_find.hpp"

namespace lscert {

MetricAxiomReport check_pseudo_metric(const LsSpace& space, std::size_t n) {
  space.check_horizon(n);
  MetricAxiomReport report;
  report.points_checked = n;

  for (std::size_t i = 0; i < n; ++i) {
    if (!space.dist({i}, {i}).is_zero()) {
      report.pass = false;
      report.self_witness = PointRef{i};
      return report;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Dist dij = space.dist({i}, {j});
      Dist dji = space.dist({j}, {i});
      if (dij != dji) {
        report.pass = false;
        report.pair_witness = {PointRef{i}, PointRef{j}};
        report.pair_kind = "symmetry";
        return report;
      }
      if (dij.negative()) {
        report.pass = false;
        report.pair_witness = {PointRef{i}, PointRef{j}};
        report.pair_kind = "negative";
        return report;
      }
    }
  }
  // Symmetry holds past this point, so per unordered triple the three choices
  // of middle point cover all orderings.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Dist dij = space.dist({i}, {j});
      for (std::size_t k = j + 1; k < n; ++k) {
        Dist dik = space.dist({i}, {k});
        Dist djk = space.dist({j}, {k});
        if (!dik.le_add(dij, djk)) {
          report.pass = false;
          report.triangle_witness = {PointRef{i}, PointRef{j}, PointRef{k}};
          return report;
        }
        if (!djk.le_add(dij, dik)) {
          report.pass = false;
          report.triangle_witness = {PointRef{j}, PointRef{i}, PointRef{k}};
          return report;
        }
        if (!dij.le_add(dik, djk)) {
          report.pass = false;
          report.triangle_witness = {PointRef{i}, PointRef{k}, PointRef{j}};
          return report;
        }
      }
    }
  }
  return report;
}

LsConditionReport check_ls_condition(const LsSpace& space, std::size_t n) {
  space.check_horizon(n);
  LsConditionReport report;
  report.points_checked = n;
  report.class_size.assign(n, 1);

  std::vector<std::size_t> half_class(n, 1);
  std::size_t half = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.dist({i}, {j}).is_zero()) {
        ++report.class_size[i];
        ++report.class_size[j];
        if (i < half && j < half) {
          ++half_class[i];
          ++half_class[j];
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    report.max_class_size = std::max(report.max_class_size, report.class_size[i]);
    if (i < half) {
      report.max_class_size_half = std::max(report.max_class_size_half, half_class[i]);
      if (report.class_size[i] > half_class[i] && !report.growing_witness) {
        report.growing = true;
        report.growing_witness = PointRef{i};
      }
    }
  }
  return report;
}

ComponentReport is_m_connected(const LsSpace& space, const Rational& M, std::size_t n) {
  space.check_horizon(n);
  require(M > 0, "invalid-parameter", "step bound M must be positive");
  ComponentReport report;
  report.step_bound = M;
  report.points_checked = n;

  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (space.dist({i}, {j}).le(M)) {
        uf.unite(i, j);
      }
    }
  }
  report.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    report.component_of[i] = uf.find(i);
    if (report.component_of[i] == i) {
      ++report.component_count;
    }
  }
  report.connected = report.component_count <= 1;
  if (!report.connected && n > 0) {
    std::size_t base = uf.find(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (uf.find(i) != base) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (uf.find(j) == base) {
          continue;
        }
        Dist d = space.dist({i}, {j});
        if (!report.gap || d < *report.gap) {
          report.gap = d;
          report.gap_witness = {PointRef{i}, PointRef{j}};
        }
      }
    }
  }
  return report;
}

std::optional<Chain> find_chain(const LsSpace& space, PointRef a, PointRef b, const Rational& M) {
  std::size_t n = space.size();
  require(a.index < n && b.index < n, "horizon-exceeded", "chain endpoints must be enumerated");
  require(M > 0, "invalid-parameter", "step bound M must be positive");

  std::vector<std::size_t> prev(n, n);
  std::deque<std::size_t> queue;
  prev[a.index] = a.index;
  queue.push_back(a.index);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == b.index) {
      break;
    }
    for (std::size_t next = 0; next < n; ++next) {
      if (prev[next] != n || next == cur) {
        continue;
      }
      if (space.dist({cur}, {next}).le(M)) {
        prev[next] = cur;
        queue.push_back(next);
      }
    }
  }
  if (prev[b.index] == n) {
    return std::nullopt;
  }
  Chain chain;
  chain.step_bound = M;
  std::size_t cur = b.index;
  while (cur != a.index) {
    chain.points.push_back({cur});
    cur = prev[cur];
  }
  chain.points.push_back({a.index});
  std::reverse(chain.points.begin(), chain.points.end());
  return chain;
}

}  // namespace lscert
