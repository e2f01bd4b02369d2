#include "lscert/space.hpp"

namespace lscert {

namespace {

void gen_lattice(std::size_t pos, std::size_t dim, long budget, std::vector<Rational>& cur,
                 std::vector<EuclideanModel::Point>& out) {
  if (pos == dim) {
    out.push_back(cur);
    return;
  }
  for (long c = -budget; c <= budget; ++c) {
    cur[pos] = c;
    gen_lattice(pos + 1, dim, budget - std::labs(c), cur, out);
  }
}

}  // namespace

std::vector<EuclideanModel::Point> lattice_ball_l1(std::size_t dim, long radius) {
  std::vector<EuclideanModel::Point> out;
  std::vector<Rational> cur(dim);
  gen_lattice(0, dim, radius, cur, out);
  return out;
}

std::vector<EuclideanModel::Point> unit_grid(std::size_t dim, long denom) {
  std::vector<EuclideanModel::Point> out;
  std::vector<Rational> cur(dim);
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == dim) {
      out.push_back(cur);
      return;
    }
    for (long a = 0; a <= denom; ++a) {
      cur[pos] = Rational(a, denom);
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace lscert
