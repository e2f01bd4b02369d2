#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lscert/error.hpp"

namespace lscert {

// One canonical flat representation per element; equality and ordering are
// representational. Each group documents how it packs the vector:
//   free-abelian(n): the n coordinates
//   cyclic(m):       [v], 0 <= v < m
//   direct sums:     [i1,v1, i2,v2, ...] sorted by index, values nonzero
//   symmetric:       one-line form [g(1), ..., g(k)]
struct GroupElem {
  std::vector<std::int64_t> rep;
  auto operator<=>(const GroupElem&) const = default;
};

// A countable group with a fixed injective enumeration starting at the
// identity. Enumeration caches are memoized, so lookups are mutex guarded;
// everything else is immutable after construction.
class EnumGroup {
 public:
  virtual ~EnumGroup() = default;
  virtual std::string name() const = 0;
  virtual GroupElem identity() const = 0;
  virtual GroupElem mul(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem inv(const GroupElem& a) const = 0;
  virtual GroupElem element(std::size_t index) const = 0;
  virtual std::string label(const GroupElem& g) const = 0;
  // Group order when finite and known.
  virtual std::optional<std::uint64_t> order() const { return std::nullopt; }

  std::vector<GroupElem> enumerate(std::size_t n) const;
  // n clamped to the group order; the usable horizon.
  std::size_t clamp_horizon(std::size_t n) const;
  // Index of g within the enumeration, scanning at most `bound` elements.
  std::optional<std::size_t> index_of(const GroupElem& g, std::size_t bound) const;
};

using GroupPtr = std::shared_ptr<const EnumGroup>;

// Z^n enumerated by increasing l1 shell, then lexicographically.
class FreeAbelianGroup : public EnumGroup {
 public:
  explicit FreeAbelianGroup(std::size_t dim);
  std::string name() const override;
  GroupElem identity() const override;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inv(const GroupElem& a) const override;
  GroupElem element(std::size_t index) const override;
  std::string label(const GroupElem& g) const override;
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  mutable std::mutex mu_;
  mutable std::vector<GroupElem> cache_;
  mutable long next_shell_ = 0;
};

// Z_m with addition; enumerated 0, 1, ..., m-1.
class CyclicGroup : public EnumGroup {
 public:
  explicit CyclicGroup(std::uint64_t modulus);
  std::string name() const override;
  GroupElem identity() const override;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inv(const GroupElem& a) const override;
  GroupElem element(std::size_t index) const override;
  std::string label(const GroupElem& g) const override;
  std::optional<std::uint64_t> order() const override { return modulus_; }
  std::uint64_t modulus() const { return modulus_; }

 private:
  std::uint64_t modulus_;
};

// Direct sum of cyclic groups Z_{n_i} over indices first_index, first_index+1, ...
// The last modulus repeats forever unless the group is truncated, in which
// case only `truncate` indices exist and the group is finite. Enumeration is
// by increasing support weight (sum of the member indices), ties broken
// lexicographically on the canonical form.
class DirectSumGroup : public EnumGroup {
 public:
  DirectSumGroup(std::vector<std::uint64_t> moduli, std::int64_t first_index = 1,
                 std::optional<std::size_t> truncate = std::nullopt);
  std::string name() const override;
  GroupElem identity() const override;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inv(const GroupElem& a) const override;
  GroupElem element(std::size_t index) const override;
  std::string label(const GroupElem& g) const override;
  std::optional<std::uint64_t> order() const override;

  std::uint64_t modulus_at(std::int64_t index) const;
  std::int64_t first_index() const { return first_index_; }
  std::optional<std::size_t> truncation() const { return truncate_; }
  // Indices usable at all (all of them when infinite).
  bool index_in_range(std::int64_t index) const;
  static std::vector<std::pair<std::int64_t, std::int64_t>> support_of(const GroupElem& g);
  GroupElem from_support(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) const;

 private:
  void extend_cache(std::size_t upto) const;

  std::vector<std::uint64_t> moduli_;
  std::int64_t first_index_;
  std::optional<std::size_t> truncate_;
  mutable std::mutex mu_;
  mutable std::vector<GroupElem> cache_;
  mutable std::int64_t next_weight_ = 0;
};

// All of S_k, enumerated by the subgroup chain S_1 < S_2 < ... < S_k (an
// element sits at the first level whose points it leaves fixed above), then
// lexicographically on one-line forms.
class SymmetricChainGroup : public EnumGroup {
 public:
  explicit SymmetricChainGroup(std::size_t degree);
  std::string name() const override;
  GroupElem identity() const override;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const override;
  GroupElem inv(const GroupElem& a) const override;
  GroupElem element(std::size_t index) const override;
  std::string label(const GroupElem& g) const override;
  std::optional<std::uint64_t> order() const override;
  std::size_t degree() const { return degree_; }
  // Smallest i with g in S_i.
  static std::size_t level(const GroupElem& g);

 private:
  std::size_t degree_;
  std::vector<GroupElem> all_;
};

// Strictly increasing chain of finite subgroups of one ambient group, each
// stored as its element list in ambient enumeration order.
struct FiniteSubgroupChain {
  GroupPtr ambient;
  std::vector<std::vector<GroupElem>> levels;

  std::size_t depth() const { return levels.size(); }
};

// Throws "not-a-chain" when closure, inclusion or strictness fails.
void validate_chain(const FiniteSubgroupChain& chain);

FiniteSubgroupChain symmetric_chain(std::size_t degree);
// Tower of cyclic subgroups with the given orders, e.g. {2,4,8} inside Z_8.
FiniteSubgroupChain cyclic_tower_chain(const std::vector<std::uint64_t>& orders);

// Group family specifiers: "zn:2", "cyclic:8", "dsum:2,2,2", "symchain:5".
GroupPtr parse_group_spec(const std::string& spec);

}  // namespace lscert
