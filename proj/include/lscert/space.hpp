#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lscert/dist.hpp"
#include "lscert/error.hpp"
#include "lscert/rational.hpp"

namespace lscert {

// Index of a point within an enumerated space.
struct PointRef {
  std::size_t index = 0;
  auto operator<=>(const PointRef&) const = default;
};

// A finite, materialized point sample with an exact distance oracle. All
// verdicts downstream are "up to horizon": they speak only about the points
// stored here.
class LsSpace {
 public:
  virtual ~LsSpace() = default;
  virtual std::string name() const = 0;
  virtual std::size_t size() const = 0;
  virtual Dist dist(PointRef a, PointRef b) const = 0;
  virtual std::string label(PointRef p) const = 0;

  void check_horizon(std::size_t n) const {
    require(n <= size(), "horizon-exceeded",
            name() + " materializes " + std::to_string(size()) + " points, asked for " +
                std::to_string(n));
  }
};

// A metric model: a typed point set with an exact distance. Points must be
// totally ordered so orbit samples can be deduplicated deterministically.
template <class M>
concept MetricModel = requires(const M& m, const typename M::Point& p, const typename M::Point& q) {
  { m.dist(p, q) } -> std::same_as<Dist>;
  { m.label(p) } -> std::convertible_to<std::string>;
  { p < q } -> std::convertible_to<bool>;
  { p == q } -> std::convertible_to<bool>;
};

// Euclidean R^n over rational coordinates; distances are exact as squares.
class EuclideanModel {
 public:
  using Point = std::vector<Rational>;

  explicit EuclideanModel(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  Dist dist(const Point& a, const Point& b) const {
    Rational sq = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      Rational d = a[i] - b[i];
      sq += d * d;
    }
    return Dist::from_sq(sq);
  }

  std::string label(const Point& p) const {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) {
        s += ",";
      }
      s += rat_to_string(p[i]);
    }
    return s + ")";
  }

 private:
  std::size_t dim_;
};

// Circle of circumference 1: points are rationals in [0,1), distance is arc
// length. Geodesic, so the translated-ball intersection test stays exact.
class CircleModel {
 public:
  using Point = Rational;

  static Rational reduce(Rational x) {
    Int n = numerator(x);
    Int d = denominator(x);
    Int m = n % d;
    if (m < 0) {
      m += d;
    }
    return Rational(m, d);
  }

  Dist dist(const Point& a, const Point& b) const {
    Rational d = a > b ? a - b : b - a;
    if (d > Rational(1, 2)) {
      d = 1 - d;
    }
    return Dist::of(d);
  }

  std::string label(const Point& p) const { return rat_to_string(p); }
};

// LsSpace view of a list of model points.
template <MetricModel M>
class ModelSample : public LsSpace {
 public:
  ModelSample(std::string name, M model, std::vector<typename M::Point> points)
      : name_(std::move(name)), model_(std::move(model)), points_(std::move(points)) {}

  std::string name() const override { return name_; }
  std::size_t size() const override { return points_.size(); }
  Dist dist(PointRef a, PointRef b) const override {
    return model_.dist(points_.at(a.index), points_.at(b.index));
  }
  std::string label(PointRef p) const override { return model_.label(points_.at(p.index)); }

  const M& model() const { return model_; }
  const std::vector<typename M::Point>& points() const { return points_; }

 private:
  std::string name_;
  M model_;
  std::vector<typename M::Point> points_;
};

// Arbitrary (possibly broken) distance oracle over n abstract points. Used to
// plant counterexamples for the axiom checkers.
class OracleSpace : public LsSpace {
 public:
  OracleSpace(std::string name, std::size_t n, std::function<Dist(std::size_t, std::size_t)> oracle)
      : name_(std::move(name)), n_(n), oracle_(std::move(oracle)) {}

  std::string name() const override { return name_; }
  std::size_t size() const override { return n_; }
  Dist dist(PointRef a, PointRef b) const override { return oracle_(a.index, b.index); }
  std::string label(PointRef p) const override { return "#" + std::to_string(p.index); }

 private:
  std::string name_;
  std::size_t n_;
  std::function<Dist(std::size_t, std::size_t)> oracle_;
};

// Rational grid samples for the Euclidean models.
std::vector<EuclideanModel::Point> lattice_ball_l1(std::size_t dim, long radius);
std::vector<EuclideanModel::Point> unit_grid(std::size_t dim, long denom);

}  // namespace lscert
