#include "lscert/zero_dim.hpp"

#include <algorithm>

#include "lscert/group_metrics.hpp"

namespace lscert {

TriadicPoint::TriadicPoint(std::vector<int> support, int min_index)
    : min_index_(min_index), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  for (std::size_t i = 0; i < support_.size(); ++i) {
    require(support_[i] >= min_index_, "invalid-parameter",
            "support index below the space's digit bound");
    require(i == 0 || support_[i] != support_[i - 1], "invalid-parameter",
            "support indices must be distinct");
  }
  value_ = triadic_value(support_);
}

Rational triadic_value(const std::vector<int>& support) {
  Rational v = 0;
  for (int i : support) {
    v += 2 * pow3(i);
  }
  return v;
}

std::optional<std::vector<int>> support_from_value(const Rational& v, int min_index) {
  std::vector<int> support;
  Rational rest = v;
  if (rest < 0) {
    return std::nullopt;
  }
  while (rest != 0) {
    // The top digit index is the unique i with 2*3^i <= rest < 2*3^(i+1).
    int i = 0;
    Rational p = 2;
    while (p * 3 <= rest) {
      p *= 3;
      ++i;
    }
    while (p > rest) {
      p /= 3;
      --i;
    }
    if (i < min_index) {
      return std::nullopt;
    }
    support.push_back(i);
    rest -= p;
  }
  std::sort(support.begin(), support.end());
  return support;
}

Rational m0_distance(const TriadicPoint& x, const TriadicPoint& y) {
  Rational d = x.value() - y.value();
  return d < 0 ? -d : d;
}

std::string TriadicModel::label(const Point& p) const {
  std::string s = rat_to_string(p.value()) + "@{";
  for (std::size_t i = 0; i < p.support().size(); ++i) {
    s += (i ? "," : "") + std::to_string(p.support()[i]);
  }
  return s + "}";
}

std::vector<TriadicPoint> enumerate_triadic(int min_index, int max_index) {
  require(max_index >= min_index, "invalid-parameter", "empty index range");
  std::size_t width = static_cast<std::size_t>(max_index - min_index);
  require(width <= 16, "cap-exceeded", "triadic enumeration capped at 16 digits");
  std::vector<TriadicPoint> out;
  out.reserve(std::size_t{1} << width);
  // Digit weights are super-increasing, so counting in binary (bit j standing
  // for index min_index + j) lists values in increasing order.
  for (std::size_t mask = 0; mask < (std::size_t{1} << width); ++mask) {
    std::vector<int> support;
    for (std::size_t j = 0; j < width; ++j) {
      if (mask & (std::size_t{1} << j)) {
        support.push_back(min_index + static_cast<int>(j));
      }
    }
    out.emplace_back(std::move(support), min_index);
  }
  return out;
}

std::shared_ptr<const DirectSumGroup> flip_group(std::size_t digit_count) {
  return std::make_shared<DirectSumGroup>(std::vector<std::uint64_t>{2}, 0, digit_count);
}

TriadicPoint flip_action(const EnumGroup& group, const GroupElem& g, const TriadicPoint& x) {
  (void)group;
  require(x.min_index() >= 0, "domain-mismatch",
          "the flip action is defined on points with nonnegative digits only");
  std::vector<int> flips;
  for (const auto& [idx, val] : DirectSumGroup::support_of(g)) {
    flips.push_back(static_cast<int>(idx));
  }
  std::vector<int> result;
  std::set_symmetric_difference(x.support().begin(), x.support().end(), flips.begin(),
                                flips.end(), std::back_inserter(result));
  return TriadicPoint(std::move(result), x.min_index());
}

// ---------------------------------------------------------------------------

HausdorffReport a_hausdorff_bound(int min_index, int support_cap) {
  require(min_index < 0, "invalid-parameter", "the bound concerns negative digit indices");
  require(support_cap >= 1, "invalid-parameter", "support cap must be positive");
  HausdorffReport report;
  report.min_index = min_index;
  report.support_cap = support_cap;
  report.bound = 0;
  for (int i = min_index; i < 0; ++i) {
    report.bound += 2 * pow3(i);
  }

  report.all_within = true;
  for (const auto& p : enumerate_triadic(min_index, support_cap)) {
    ++report.points_checked;
    Rational tail = 0;
    for (int i : p.support()) {
      if (i < 0) {
        tail += 2 * pow3(i);
      }
    }
    if (tail > report.bound) {
      report.all_within = false;
    }
    if (tail == report.bound && !report.attained) {
      report.attained = true;
      report.attaining_point = p;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

M0Z2Certificate verify_m0_z2_equivalence(std::size_t support_cap) {
  require(support_cap >= 1 && support_cap <= 10, "cap-exceeded",
          "support cap must be in 1..10 (default 9: 512 points)");
  M0Z2Certificate cert;
  cert.support_cap = support_cap;
  std::size_t count = std::size_t{1} << support_cap;
  cert.point_count = count;
  cert.pair_count = count * (count - 1) / 2;

  auto group = flip_group(support_cap);
  auto metric = std::make_shared<SupportWeightMetric>(group, triadic_weights());
  auto a_points = enumerate_triadic(0, static_cast<int>(support_cap));

  // Both samples in binary-counter order (bit i = digit i), so the support
  // bijection is the identity on indices.
  std::vector<GroupElem> elems;
  elems.reserve(count);
  std::vector<Rational> value;
  value.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t j = 0; j < support_cap; ++j) {
      if (mask & (std::size_t{1} << j)) {
        pairs.emplace_back(static_cast<std::int64_t>(j), 1);
      }
    }
    elems.push_back(group->from_support(pairs));
    value.push_back(a_points[mask].value());
  }

  cert.bijection = true;
  for (std::size_t mask = 0; mask < count; ++mask) {
    TriadicPoint image = flip_action(*group, elems[mask], TriadicPoint({}, 0));
    if (!(image == a_points[mask])) {
      cert.bijection = false;
    }
  }

  GroupSpace group_space(metric, elems);
  ModelSample<TriadicModel> a_space("A[0.." + std::to_string(support_cap - 1) + "]",
                                    TriadicModel{}, a_points);
  std::vector<std::size_t> ident(count);
  for (std::size_t i = 0; i < count; ++i) {
    ident[i] = i;
  }
  MapSample fwd{&group_space, &a_space, ident};
  MapSample bwd{&a_space, &group_space, ident};

  // Grid radii where the half sample already realizes the extremal pairs;
  // the exhaustive tight-bound rows below cover every k up to the cap.
  std::vector<Dist> fwd_grid;
  std::vector<Dist> bwd_grid;
  Rational acc = 0;
  for (int k = 0; k < std::min<int>(5, static_cast<int>(support_cap)); ++k) {
    acc += pow3(k + 1) - 1;
    fwd_grid.push_back(Dist::of(acc));
    bwd_grid.push_back(Dist::of(pow3(k + 1) - 1));
  }
  cert.coarse = coarse_equivalence_certificate(fwd, bwd, count, fwd_grid, bwd_grid);

  // Exhaustive scan: per top flipped digit the max value change, per flipped
  // digit the min value change.
  std::vector<std::optional<Rational>> max_by_top(support_cap);
  std::vector<std::pair<std::size_t, std::size_t>> max_witness(support_cap);
  std::vector<std::optional<Rational>> min_by_digit(support_cap);
  std::vector<std::pair<std::size_t, std::size_t>> min_witness(support_cap);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      std::size_t diff = a ^ b;
      Rational dv = value[a] > value[b] ? value[a] - value[b] : value[b] - value[a];
      std::size_t top = 0;
      for (std::size_t j = 0; j < support_cap; ++j) {
        if (diff & (std::size_t{1} << j)) {
          top = j;
          if (!min_by_digit[j] || dv < *min_by_digit[j]) {
            min_by_digit[j] = dv;
            min_witness[j] = {a, b};
          }
        }
      }
      if (!max_by_top[top] || dv > *max_by_top[top]) {
        max_by_top[top] = dv;
        max_witness[top] = {a, b};
      }
    }
  }

  auto supports_of_mask = [support_cap](std::size_t mask) {
    std::vector<int> s;
    for (std::size_t j = 0; j < support_cap; ++j) {
      if (mask & (std::size_t{1} << j)) {
        s.push_back(static_cast<int>(j));
      }
    }
    return s;
  };

  cert.bounds_tight = true;
  Rational prefix_max = 0;
  std::pair<std::size_t, std::size_t> prefix_witness{0, 0};
  for (std::size_t k = 0; k < support_cap; ++k) {
    if (max_by_top[k] && *max_by_top[k] > prefix_max) {
      prefix_max = *max_by_top[k];
      prefix_witness = max_witness[k];
    }
    TightBoundRow row;
    row.index = static_cast<int>(k);
    row.expected = pow3(static_cast<int>(k) + 1) - 1;
    row.observed = prefix_max;
    row.tight = row.observed == row.expected;
    row.witness_a = supports_of_mask(prefix_witness.first);
    row.witness_b = supports_of_mask(prefix_witness.second);
    cert.bounds_tight = cert.bounds_tight && row.tight;
    cert.forward.push_back(row);

    TightBoundRow mrow;
    mrow.index = static_cast<int>(k);
    mrow.expected = pow3(static_cast<int>(k)) + 1;
    mrow.observed = min_by_digit[k] ? *min_by_digit[k] : Rational(0);
    mrow.tight = min_by_digit[k] && mrow.observed == mrow.expected;
    mrow.witness_a = supports_of_mask(min_witness[k].first);
    mrow.witness_b = supports_of_mask(min_witness[k].second);
    cert.bounds_tight = cert.bounds_tight && mrow.tight;
    cert.flip_min.push_back(mrow);
  }

  // The flip is not an isometry of A; record the first counterexample.
  for (std::size_t g = 0; g < count && !cert.isometry_counterexample; ++g) {
    for (std::size_t x = 0; x < count && !cert.isometry_counterexample; ++x) {
      for (std::size_t y = x + 1; y < count; ++y) {
        Rational before = value[x] > value[y] ? value[x] - value[y] : value[y] - value[x];
        std::size_t gx = g ^ x;
        std::size_t gy = g ^ y;
        Rational after = value[gx] > value[gy] ? value[gx] - value[gy] : value[gy] - value[gx];
        if (before != after) {
          cert.isometry_counterexample = {supports_of_mask(g), supports_of_mask(x),
                                          supports_of_mask(y)};
          break;
        }
      }
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Decomposition along a chain

GroupElem DecompositionMap::apply(const GroupElem& g) const {
  auto it = phi.find(g);
  require(it != phi.end(), "invalid-parameter",
          "element outside the decomposed chain level");
  return it->second;
}

DecompositionMap locally_finite_decomposition(const FiniteSubgroupChain& chain) {
  validate_chain(chain);
  const EnumGroup& grp = *chain.ambient;
  DecompositionMap dec;
  dec.chain = chain;

  std::size_t depth = chain.depth();
  dec.n.resize(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    std::size_t prev = i == 0 ? 1 : chain.levels[i - 1].size();
    require(chain.levels[i].size() % prev == 0, "not-a-chain",
            "level sizes violate Lagrange divisibility");
    dec.n[i] = chain.levels[i].size() / prev;
  }

  // Left transversals: walk G_i in ambient enumeration order; the first
  // member of an uncovered coset g*G_{i-1} represents it. coset_pos[i] maps
  // each member of G_i to the position of its coset representative in T_i.
  std::vector<std::map<GroupElem, std::pair<std::size_t, GroupElem>>> coset_info(depth);
  dec.transversals.resize(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<GroupElem> lower =
        i == 0 ? std::vector<GroupElem>{grp.identity()} : chain.levels[i - 1];
    for (const auto& g : chain.levels[i]) {
      if (coset_info[i].count(g)) {
        continue;
      }
      std::size_t pos = dec.transversals[i].size();
      dec.transversals[i].push_back(g);
      for (const auto& u : lower) {
        coset_info[i].emplace(grp.mul(g, u), std::make_pair(pos, g));
      }
    }
    require(dec.transversals[i].size() == dec.n[i], "not-a-chain",
            "transversal size does not match the quotient order");
  }

  std::vector<std::uint64_t> moduli;
  for (auto q : dec.n) {
    moduli.push_back(q);
  }
  dec.target = std::make_shared<DirectSumGroup>(moduli, 1, depth);

  for (const auto& start : chain.levels[depth - 1]) {
    GroupElem g = start;
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (std::size_t i = depth; i-- > 0;) {
      const auto& [pos, rep] = coset_info[i].at(g);
      if (pos != 0) {
        coords.emplace_back(static_cast<std::int64_t>(i) + 1,
                            static_cast<std::int64_t>(pos));
      }
      g = grp.mul(grp.inv(rep), g);
    }
    require(g == grp.identity(), "not-a-chain", "normal form did not reach the identity");
    dec.phi.emplace(start, dec.target->from_support(coords));
  }
  return dec;
}

DecompositionCertificate verify_decomposition_equivalence(const FiniteSubgroupChain& chain,
                                                          std::size_t k_max) {
  require(k_max >= 1, "invalid-parameter", "k_max must be positive");
  FiniteSubgroupChain truncated = chain;
  if (truncated.levels.size() > k_max) {
    truncated.levels.resize(k_max);
  }
  DecompositionCertificate cert;
  cert.map = locally_finite_decomposition(truncated);
  const EnumGroup& grp = *truncated.ambient;
  const DirectSumGroup& target = *cert.map.target;
  std::size_t depth = truncated.depth();
  const auto& top = truncated.levels[depth - 1];

  cert.identity_to_zero = cert.map.apply(grp.identity()) == target.identity();

  std::set<GroupElem> images;
  for (const auto& [g, im] : cert.map.phi) {
    images.insert(im);
  }
  cert.bijection = images.size() == top.size();

  // Membership level of each element: the first chain level containing it.
  std::vector<std::vector<GroupElem>> sorted_levels(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    sorted_levels[i] = truncated.levels[i];
    std::sort(sorted_levels[i].begin(), sorted_levels[i].end());
  }
  auto member_level = [&](const GroupElem& e) {
    for (std::size_t i = 0; i < depth; ++i) {
      if (std::binary_search(sorted_levels[i].begin(), sorted_levels[i].end(), e)) {
        return i + 1;
      }
    }
    return depth + 1;
  };
  auto top_coordinate = [&](const GroupElem& e) -> std::size_t {
    std::size_t t = 0;
    for (const auto& [idx, val] : DirectSumGroup::support_of(e)) {
      t = std::max<std::size_t>(t, static_cast<std::size_t>(idx));
    }
    return std::max<std::size_t>(t, 1);  // the identity difference sits at level 1
  };

  cert.filtration_respected = true;
  std::vector<std::set<GroupElem>> e_sets(depth);
  std::vector<std::size_t> pairs_in_f(depth, 0);
  std::vector<std::size_t> fwd_violations(depth, 0);  // x^-1 y in G_k, images differ above k
  std::vector<std::size_t> bwd_violations(depth, 0);  // images agree above k, x^-1 y outside G_k
  for (const auto& x : top) {
    GroupElem px = cert.map.apply(x);
    for (const auto& y : top) {
      if (x == y) {
        continue;
      }
      ++cert.ordered_pairs;
      GroupElem diff = grp.mul(grp.inv(x), y);
      GroupElem image_diff = target.mul(target.inv(px), cert.map.apply(y));
      std::size_t lv = member_level(diff);
      std::size_t tc = top_coordinate(image_diff);
      if (lv != tc) {
        cert.filtration_respected = false;
      }
      for (std::size_t k = 0; k < depth; ++k) {
        if (lv <= k + 1) {
          e_sets[k].insert(image_diff);
          ++pairs_in_f[k];
          if (tc > k + 1) {
            ++fwd_violations[k];
          }
        }
        if (tc <= k + 1 && lv > k + 1) {
          ++bwd_violations[k];
        }
      }
    }
  }

  cert.pass = cert.bijection && cert.identity_to_zero && cert.filtration_respected;
  for (std::size_t k = 0; k < depth; ++k) {
    FiltrationRow row;
    row.k = k + 1;
    row.pairs_in_f = pairs_in_f[k];
    row.e_size = e_sets[k].size();
    row.forward_ok = fwd_violations[k] == 0;
    row.backward_ok = bwd_violations[k] == 0;
    cert.pass = cert.pass && row.forward_ok && row.backward_ok;
    cert.rows.push_back(row);
  }
  return cert;
}

}  // namespace lscert
