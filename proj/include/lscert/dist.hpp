#pragma once

#include <cassert>
#include <cmath>
#include <compare>
#include <string>

#include "lscert/rational.hpp"

namespace lscert {

// Exact distance value of the form sign * sqrt(sq) with sq rational.
// Rational-valued metrics store sq = d^2; Euclidean metrics store the squared
// distance directly, so every comparison below stays exact. Negative values
// exist only so broken distance oracles can be fed to the axiom checkers and
// caught with a witness.
class Dist {
 public:
  Dist() : sq_(0), neg_(false) {}

  static Dist zero() { return Dist(); }

  static Dist of(const Rational& value) {
    Dist d;
    d.sq_ = value * value;
    d.neg_ = value < 0;
    return d;
  }

  static Dist from_sq(const Rational& squared) {
    assert(squared >= 0);
    Dist d;
    d.sq_ = squared;
    return d;
  }

  const Rational& sq() const { return sq_; }
  bool negative() const { return neg_; }
  bool is_zero() const { return sq_ == 0; }

  // Total order consistent with the represented real value.
  std::strong_ordering operator<=>(const Dist& o) const {
    if (neg_ != o.neg_) {
      return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (sq_ == o.sq_) {
      return std::strong_ordering::equal;
    }
    bool less = neg_ ? sq_ > o.sq_ : sq_ < o.sq_;
    return less ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  bool operator==(const Dist& o) const { return neg_ == o.neg_ && sq_ == o.sq_; }

  bool lt(const Rational& r) const { return *this < Dist::of(r); }
  bool le(const Rational& r) const { return *this <= Dist::of(r); }
  bool ge(const Rational& r) const { return !lt(r); }

  // Exact test of *this <= b + c for nonnegative b, c:
  //   sqrt(A) <= sqrt(B) + sqrt(C)  <=>  A <= B + C  or  (A-B-C)^2 <= 4BC.
  bool le_add(const Dist& b, const Dist& c) const {
    assert(!b.neg_ && !c.neg_);
    if (neg_) {
      return true;
    }
    Rational gap = sq_ - b.sq_ - c.sq_;
    if (gap <= 0) {
      return true;
    }
    return gap * gap <= 4 * b.sq_ * c.sq_;
  }

  double to_double() const {
    double v = std::sqrt(lscert::to_double(sq_));
    return neg_ ? -v : v;
  }

  // "5", "26/27", or "sqrt(2)" when the value is irrational.
  std::string to_string() const {
    std::string sign = neg_ ? "-" : "";
    if (auto root = exact_sqrt(sq_)) {
      return sign + rat_to_string(*root);
    }
    return sign + "sqrt(" + rat_to_string(sq_) + ")";
  }

 private:
  Rational sq_;
  bool neg_;
};

}  // namespace lscert
