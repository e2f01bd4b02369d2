#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lscert/rational.hpp"
#include "lscert/space.hpp"

namespace lscert {

// Pseudo-metric axiom sweep over the first n points: zero self-distance,
// nonnegativity, symmetry, triangle inequality. Exact arithmetic, first
// violation wins; scan order is fixed so witnesses are deterministic.
struct MetricAxiomReport {
  bool pass = true;
  std::size_t points_checked = 0;
  std::optional<PointRef> self_witness;                 // dist(p,p) != 0
  std::optional<std::array<PointRef, 2>> pair_witness;  // symmetry or sign
  std::string pair_kind;                                // "symmetry" | "negative"
  std::optional<std::array<PointRef, 3>> triangle_witness;
};

MetricAxiomReport check_pseudo_metric(const LsSpace& space, std::size_t n);

// Zero-distance class sizes (the ls-metric condition of a large-scale metric).
// A class that keeps growing when the sample is extended from n/2 to n is
// flagged: at desk scale that is what an infinite zero class looks like.
struct LsConditionReport {
  std::size_t points_checked = 0;
  std::vector<std::size_t> class_size;      // per point, among first n
  std::size_t max_class_size = 0;
  std::size_t max_class_size_half = 0;      // same statistic over first n/2
  bool growing = false;
  std::optional<PointRef> growing_witness;  // a point whose class grew
};

LsConditionReport check_ls_condition(const LsSpace& space, std::size_t n);

// Connected components of the "dist <= M" relation over the first n points.
struct ComponentReport {
  Rational step_bound;
  std::size_t points_checked = 0;
  std::vector<std::size_t> component_of;  // root index per point
  std::size_t component_count = 0;
  bool connected = false;
  // When disconnected: the closest pair separating the component of point 0
  // from the rest, i.e. the gap a chain would have to jump.
  std::optional<std::array<PointRef, 2>> gap_witness;
  std::optional<Dist> gap;
};

ComponentReport is_m_connected(const LsSpace& space, const Rational& M, std::size_t n);

struct Chain {
  std::vector<PointRef> points;
  Rational step_bound;
};

// Shortest chain from a to b with steps <= M among enumerated points (BFS),
// or nullopt when a and b sit in different components of the sample.
std::optional<Chain> find_chain(const LsSpace& space, PointRef a, PointRef b, const Rational& M);

}  // namespace lscert
