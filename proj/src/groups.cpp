#include "lscert/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lscert {

std::vector<GroupElem> EnumGroup::enumerate(std::size_t n) const {
  std::vector<GroupElem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(element(i));
  }
  return out;
}

std::size_t EnumGroup::clamp_horizon(std::size_t n) const {
  if (auto ord = order()) {
    return std::min<std::size_t>(n, static_cast<std::size_t>(*ord));
  }
  return n;
}

std::optional<std::size_t> EnumGroup::index_of(const GroupElem& g, std::size_t bound) const {
  bound = clamp_horizon(bound);
  for (std::size_t i = 0; i < bound; ++i) {
    if (element(i) == g) {
      return i;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// FreeAbelianGroup

namespace {

void gen_shell(std::size_t pos, std::size_t dim, long remaining, std::vector<std::int64_t>& cur,
               std::vector<GroupElem>& out) {
  if (pos + 1 == dim) {
    if (remaining == 0) {
      cur[pos] = 0;
      out.push_back({cur});
    } else {
      cur[pos] = -remaining;
      out.push_back({cur});
      cur[pos] = remaining;
      out.push_back({cur});
    }
    return;
  }
  for (long c = -remaining; c <= remaining; ++c) {
    cur[pos] = c;
    gen_shell(pos + 1, dim, remaining - std::abs(c), cur, out);
  }
}

}  // namespace

FreeAbelianGroup::FreeAbelianGroup(std::size_t dim) : dim_(dim) {
  require(dim >= 1, "invalid-parameter", "free-abelian rank must be positive");
}

std::string FreeAbelianGroup::name() const { return "Z^" + std::to_string(dim_); }

GroupElem FreeAbelianGroup::identity() const {
  return {std::vector<std::int64_t>(dim_, 0)};
}

GroupElem FreeAbelianGroup::mul(const GroupElem& a, const GroupElem& b) const {
  GroupElem c = a;
  for (std::size_t i = 0; i < dim_; ++i) {
    c.rep[i] += b.rep[i];
  }
  return c;
}

GroupElem FreeAbelianGroup::inv(const GroupElem& a) const {
  GroupElem c = a;
  for (auto& v : c.rep) {
    v = -v;
  }
  return c;
}

GroupElem FreeAbelianGroup::element(std::size_t index) const {
  std::lock_guard<std::mutex> lock(mu_);
  while (cache_.size() <= index) {
    std::vector<GroupElem> shell;
    std::vector<std::int64_t> cur(dim_, 0);
    gen_shell(0, dim_, next_shell_, cur, shell);
    // gen_shell walks first coordinates in ascending order, but the final
    // coordinate emits -r before r, which is already lexicographic.
    cache_.insert(cache_.end(), shell.begin(), shell.end());
    ++next_shell_;
  }
  return cache_[index];
}

std::string FreeAbelianGroup::label(const GroupElem& g) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < g.rep.size(); ++i) {
    os << (i ? "," : "") << g.rep[i];
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// CyclicGroup

CyclicGroup::CyclicGroup(std::uint64_t modulus) : modulus_(modulus) {
  require(modulus >= 1, "invalid-parameter", "cyclic order must be positive");
}

std::string CyclicGroup::name() const { return "Z_" + std::to_string(modulus_); }

GroupElem CyclicGroup::identity() const { return {{0}}; }

GroupElem CyclicGroup::mul(const GroupElem& a, const GroupElem& b) const {
  return {{static_cast<std::int64_t>((a.rep[0] + b.rep[0]) % static_cast<std::int64_t>(modulus_))}};
}

GroupElem CyclicGroup::inv(const GroupElem& a) const {
  return {{a.rep[0] == 0 ? 0 : static_cast<std::int64_t>(modulus_) - a.rep[0]}};
}

GroupElem CyclicGroup::element(std::size_t index) const {
  require(index < modulus_, "horizon-exceeded", name() + " has only " + std::to_string(modulus_) +
                                                    " elements");
  return {{static_cast<std::int64_t>(index)}};
}

std::string CyclicGroup::label(const GroupElem& g) const { return std::to_string(g.rep[0]); }

// ---------------------------------------------------------------------------
// DirectSumGroup

DirectSumGroup::DirectSumGroup(std::vector<std::uint64_t> moduli, std::int64_t first_index,
                               std::optional<std::size_t> truncate)
    : moduli_(std::move(moduli)), first_index_(first_index), truncate_(truncate) {
  require(!moduli_.empty(), "invalid-parameter", "direct sum needs at least one modulus");
  for (auto m : moduli_) {
    require(m >= 1, "invalid-parameter", "direct sum moduli must be positive");
  }
  require(first_index_ >= 0, "invalid-parameter", "direct sum indices start at 0 or 1");
  if (truncate_) {
    require(*truncate_ >= 1, "invalid-parameter", "truncation must keep at least one index");
  }
}

std::string DirectSumGroup::name() const {
  std::ostringstream os;
  os << "sum(Z_";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    os << (i ? ",Z_" : "") << moduli_[i];
  }
  if (!truncate_) {
    os << ",...";
  }
  os << ")";
  if (truncate_) {
    os << "[" << *truncate_ << " indices]";
  }
  return os.str();
}

std::uint64_t DirectSumGroup::modulus_at(std::int64_t index) const {
  std::int64_t pos = index - first_index_;
  require(pos >= 0, "invalid-parameter", "index below the first coordinate");
  if (pos < static_cast<std::int64_t>(moduli_.size())) {
    return moduli_[static_cast<std::size_t>(pos)];
  }
  return moduli_.back();
}

bool DirectSumGroup::index_in_range(std::int64_t index) const {
  if (index < first_index_) {
    return false;
  }
  if (truncate_ && index >= first_index_ + static_cast<std::int64_t>(*truncate_)) {
    return false;
  }
  return true;
}

GroupElem DirectSumGroup::identity() const { return {{}}; }

std::vector<std::pair<std::int64_t, std::int64_t>> DirectSumGroup::support_of(const GroupElem& g) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i + 1 < g.rep.size(); i += 2) {
    pairs.emplace_back(g.rep[i], g.rep[i + 1]);
  }
  return pairs;
}

GroupElem DirectSumGroup::from_support(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) const {
  std::vector<std::pair<std::int64_t, std::int64_t>> sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  GroupElem g;
  for (const auto& [idx, val] : sorted) {
    require(index_in_range(idx), "invalid-parameter", "support index out of range");
    std::int64_t m = static_cast<std::int64_t>(modulus_at(idx));
    std::int64_t v = ((val % m) + m) % m;
    if (v != 0) {
      g.rep.push_back(idx);
      g.rep.push_back(v);
    }
  }
  return g;
}

GroupElem DirectSumGroup::mul(const GroupElem& a, const GroupElem& b) const {
  GroupElem c;
  std::size_t i = 0;
  std::size_t j = 0;
  auto push = [&c](std::int64_t idx, std::int64_t val) {
    if (val != 0) {
      c.rep.push_back(idx);
      c.rep.push_back(val);
    }
  };
  while (i < a.rep.size() || j < b.rep.size()) {
    if (j >= b.rep.size() || (i < a.rep.size() && a.rep[i] < b.rep[j])) {
      push(a.rep[i], a.rep[i + 1]);
      i += 2;
    } else if (i >= a.rep.size() || b.rep[j] < a.rep[i]) {
      push(b.rep[j], b.rep[j + 1]);
      j += 2;
    } else {
      std::int64_t m = static_cast<std::int64_t>(modulus_at(a.rep[i]));
      push(a.rep[i], (a.rep[i + 1] + b.rep[j + 1]) % m);
      i += 2;
      j += 2;
    }
  }
  return c;
}

GroupElem DirectSumGroup::inv(const GroupElem& a) const {
  GroupElem c = a;
  for (std::size_t i = 0; i + 1 < c.rep.size(); i += 2) {
    std::int64_t m = static_cast<std::int64_t>(modulus_at(c.rep[i]));
    c.rep[i + 1] = (m - c.rep[i + 1]) % m;
  }
  return c;
}

std::optional<std::uint64_t> DirectSumGroup::order() const {
  if (!truncate_) {
    return std::nullopt;
  }
  std::uint64_t total = 1;
  for (std::size_t p = 0; p < *truncate_; ++p) {
    total *= modulus_at(first_index_ + static_cast<std::int64_t>(p));
  }
  return total;
}

namespace {

// Distinct index sets with the given weight (sum of indices). Indices with
// modulus 1 carry no nonzero value and never appear.
void gen_supports(std::int64_t min_index, std::int64_t remaining, const DirectSumGroup& group,
                  std::vector<std::int64_t>& cur, std::vector<std::vector<std::int64_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
  }
  for (std::int64_t idx = std::max<std::int64_t>(min_index, 1); idx <= remaining; ++idx) {
    if (!group.index_in_range(idx) || group.modulus_at(idx) < 2) {
      continue;
    }
    cur.push_back(idx);
    gen_supports(idx + 1, remaining - idx, group, cur, out);
    cur.pop_back();
  }
}

void gen_assignments(const DirectSumGroup& group, const std::vector<std::int64_t>& support,
                     std::size_t pos, std::vector<std::int64_t>& rep, std::vector<GroupElem>& out) {
  if (pos == support.size()) {
    out.push_back({rep});
    return;
  }
  std::int64_t m = static_cast<std::int64_t>(group.modulus_at(support[pos]));
  for (std::int64_t v = 1; v < m; ++v) {
    rep.push_back(support[pos]);
    rep.push_back(v);
    gen_assignments(group, support, pos + 1, rep, out);
    rep.pop_back();
    rep.pop_back();
  }
}

}  // namespace

void DirectSumGroup::extend_cache(std::size_t upto) const {
  std::int64_t max_weight = -1;
  if (truncate_) {
    max_weight = 0;
    for (std::size_t p = 0; p < *truncate_; ++p) {
      std::int64_t idx = first_index_ + static_cast<std::int64_t>(p);
      if (modulus_at(idx) >= 2) {
        max_weight += idx;
      }
    }
  }
  while (cache_.size() < upto) {
    if (truncate_ && next_weight_ > max_weight) {
      throw Error("horizon-exceeded",
                  name() + " has only " + std::to_string(cache_.size()) + " elements");
    }
    std::vector<std::vector<std::int64_t>> supports;
    std::vector<std::int64_t> cur;
    gen_supports(1, next_weight_, *this, cur, supports);
    if (first_index_ == 0 && index_in_range(0) && modulus_at(0) >= 2) {
      std::size_t base_count = supports.size();
      for (std::size_t s = 0; s < base_count; ++s) {
        std::vector<std::int64_t> with_zero;
        with_zero.push_back(0);
        with_zero.insert(with_zero.end(), supports[s].begin(), supports[s].end());
        supports.push_back(std::move(with_zero));
      }
    }
    std::vector<GroupElem> batch;
    for (const auto& support : supports) {
      std::vector<std::int64_t> rep;
      gen_assignments(*this, support, 0, rep, batch);
    }
    std::sort(batch.begin(), batch.end());
    cache_.insert(cache_.end(), batch.begin(), batch.end());
    ++next_weight_;
  }
}

GroupElem DirectSumGroup::element(std::size_t index) const {
  std::lock_guard<std::mutex> lock(mu_);
  extend_cache(index + 1);
  return cache_[index];
}

std::string DirectSumGroup::label(const GroupElem& g) const {
  bool all_two = true;
  for (std::size_t i = 0; i + 1 < g.rep.size(); i += 2) {
    if (modulus_at(g.rep[i]) != 2) {
      all_two = false;
    }
  }
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i + 1 < g.rep.size(); i += 2) {
    os << (i ? "," : "") << g.rep[i];
    if (!all_two) {
      os << ":" << g.rep[i + 1];
    }
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// SymmetricChainGroup

std::size_t SymmetricChainGroup::level(const GroupElem& g) {
  for (std::size_t j = g.rep.size(); j >= 2; --j) {
    if (g.rep[j - 1] != static_cast<std::int64_t>(j)) {
      return j;
    }
  }
  return 1;
}

SymmetricChainGroup::SymmetricChainGroup(std::size_t degree) : degree_(degree) {
  require(degree >= 1 && degree <= 8, "invalid-parameter",
          "symmetric chain degree must be in 1..8");
  std::vector<std::int64_t> one_line(degree);
  std::iota(one_line.begin(), one_line.end(), 1);
  do {
    all_.push_back({one_line});
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  std::stable_sort(all_.begin(), all_.end(), [](const GroupElem& a, const GroupElem& b) {
    std::size_t la = level(a);
    std::size_t lb = level(b);
    if (la != lb) {
      return la < lb;
    }
    return a.rep < b.rep;
  });
}

std::string SymmetricChainGroup::name() const { return "S_" + std::to_string(degree_); }

GroupElem SymmetricChainGroup::identity() const {
  std::vector<std::int64_t> id(degree_);
  std::iota(id.begin(), id.end(), 1);
  return {id};
}

GroupElem SymmetricChainGroup::mul(const GroupElem& a, const GroupElem& b) const {
  // (a*b)(x) = a(b(x)).
  std::vector<std::int64_t> c(degree_);
  for (std::size_t x = 0; x < degree_; ++x) {
    c[x] = a.rep[static_cast<std::size_t>(b.rep[x]) - 1];
  }
  return {c};
}

GroupElem SymmetricChainGroup::inv(const GroupElem& a) const {
  std::vector<std::int64_t> c(degree_);
  for (std::size_t x = 0; x < degree_; ++x) {
    c[static_cast<std::size_t>(a.rep[x]) - 1] = static_cast<std::int64_t>(x) + 1;
  }
  return {c};
}

GroupElem SymmetricChainGroup::element(std::size_t index) const {
  require(index < all_.size(), "horizon-exceeded",
          name() + " has only " + std::to_string(all_.size()) + " elements");
  return all_[index];
}

std::optional<std::uint64_t> SymmetricChainGroup::order() const { return all_.size(); }

std::string SymmetricChainGroup::label(const GroupElem& g) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < g.rep.size(); ++i) {
    os << (i ? " " : "") << g.rep[i];
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Subgroup chains

void validate_chain(const FiniteSubgroupChain& chain) {
  require(chain.ambient != nullptr, "not-a-chain", "missing ambient group");
  require(!chain.levels.empty(), "not-a-chain", "chain has no levels");
  const EnumGroup& g = *chain.ambient;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const auto& level = chain.levels[i];
    require(!level.empty(), "not-a-chain", "empty level " + std::to_string(i + 1));
    std::vector<GroupElem> sorted = level;
    std::sort(sorted.begin(), sorted.end());
    auto contains = [&sorted](const GroupElem& e) {
      return std::binary_search(sorted.begin(), sorted.end(), e);
    };
    require(contains(g.identity()), "not-a-chain",
            "level " + std::to_string(i + 1) + " misses the identity");
    for (const auto& a : level) {
      require(contains(g.inv(a)), "not-a-chain",
              "level " + std::to_string(i + 1) + " not closed under inverse");
      for (const auto& b : level) {
        require(contains(g.mul(a, b)), "not-a-chain",
                "level " + std::to_string(i + 1) + " not closed under product");
      }
    }
    if (i > 0) {
      require(chain.levels[i - 1].size() < level.size(), "not-a-chain",
              "inclusion " + std::to_string(i) + " -> " + std::to_string(i + 1) + " not strict");
      for (const auto& a : chain.levels[i - 1]) {
        require(contains(a), "not-a-chain",
                "level " + std::to_string(i) + " not contained in level " + std::to_string(i + 1));
      }
    }
  }
}

FiniteSubgroupChain symmetric_chain(std::size_t degree) {
  auto group = std::make_shared<SymmetricChainGroup>(degree);
  FiniteSubgroupChain chain;
  chain.ambient = group;
  std::uint64_t factorial = 1;
  for (std::size_t i = 1; i <= degree; ++i) {
    factorial *= i;
    // Enumeration is ordered by level, so S_i is an enumeration prefix.
    chain.levels.push_back(group->enumerate(static_cast<std::size_t>(factorial)));
  }
  validate_chain(chain);
  return chain;
}

FiniteSubgroupChain cyclic_tower_chain(const std::vector<std::uint64_t>& orders) {
  require(!orders.empty(), "invalid-parameter", "tower needs at least one order");
  for (std::size_t i = 1; i < orders.size(); ++i) {
    require(orders[i - 1] < orders[i] && orders[i] % orders[i - 1] == 0, "invalid-parameter",
            "tower orders must strictly increase through divisibility");
  }
  auto group = std::make_shared<CyclicGroup>(orders.back());
  FiniteSubgroupChain chain;
  chain.ambient = group;
  for (auto o : orders) {
    std::uint64_t step = orders.back() / o;
    std::vector<GroupElem> level;
    for (std::uint64_t v = 0; v < orders.back(); v += step) {
      level.push_back({{static_cast<std::int64_t>(v)}});
    }
    chain.levels.push_back(std::move(level));
  }
  validate_chain(chain);
  return chain;
}

// ---------------------------------------------------------------------------
// Specifier parsing

GroupPtr parse_group_spec(const std::string& spec) {
  auto colon = spec.find(':');
  require(colon != std::string::npos, "invalid-parameter", "group spec needs 'family:params'");
  std::string family = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  auto parse_ints = [&params]() {
    std::vector<std::uint64_t> values;
    std::istringstream is(params);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      require(!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos,
              "invalid-parameter", "bad number in group spec: '" + tok + "'");
      values.push_back(std::stoull(tok));
    }
    require(!values.empty(), "invalid-parameter", "group spec has no parameters");
    return values;
  };
  if (family == "zn") {
    auto v = parse_ints();
    require(v.size() == 1, "invalid-parameter", "zn takes one rank");
    return std::make_shared<FreeAbelianGroup>(static_cast<std::size_t>(v[0]));
  }
  if (family == "cyclic") {
    auto v = parse_ints();
    require(v.size() == 1, "invalid-parameter", "cyclic takes one order");
    return std::make_shared<CyclicGroup>(v[0]);
  }
  if (family == "dsum") {
    return std::make_shared<DirectSumGroup>(parse_ints());
  }
  if (family == "symchain") {
    auto v = parse_ints();
    require(v.size() == 1, "invalid-parameter", "symchain takes one degree");
    return std::make_shared<SymmetricChainGroup>(static_cast<std::size_t>(v[0]));
  }
  throw Error("invalid-parameter", "unknown group family '" + family + "'");
}

}  // namespace lscert
