#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <typeindex>
#include <unordered_map>
#include <vector>

#include "classlab/permutation.hpp"

namespace classlab {

/// Base and strong generating set built by the incremental Schreier-Sims
/// algorithm. Level i stabilizes base points 0..i-1.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> position;  // -1 when a point is off the orbit
    std::vector<Permutation> transversal;  // transversal[k] maps base to orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  StabChain() = default;
  /// `priority` lists points in the order they are preferred as base points;
  /// empty means 0, 1, 2, ... The first `forced` priority points become the
  /// leading base points even when their orbits are trivial, so the level
  /// after them holds their pointwise stabilizer.
  StabChain(std::size_t degree, std::span<const Permutation> gens,
            std::span<const Point> priority = {}, std::size_t forced = 0);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  /// Throws CapExceeded when the order does not fit in 63 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  /// Strips p through the chain; returns the residue and the level where
  /// stripping stopped (levels().size() when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation p, std::size_t from = 0) const;

 private:
  void rebuild_orbit(std::size_t i);
  Point choose_base(const Permutation& p) const;

  std::size_t degree_ = 0;
  std::vector<Point> rank_;  // rank_[point] = preference rank
  std::vector<Level> levels_;
};

/// Explicit list of group elements ordered by the stabilizer-chain mixed
/// radix, so index lookup is a chain walk. Index 0 is the identity. A full
/// multiplication table is cached when the order is at most limits().table_cap.
class ElementTable {
 public:
  explicit ElementTable(const StabChain& chain);
  ElementTable(const ElementTable&) = delete;
  ElementTable& operator=(const ElementTable&) = delete;

  std::size_t size() const noexcept { return size_; }
  std::size_t degree() const noexcept { return degree_; }
  std::span<const Point> operator[](std::uint32_t i) const noexcept {
    return {data_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }
  Permutation element(std::uint32_t i) const;
  std::optional<std::uint32_t> index_of(std::span<const Point> p) const;
  std::optional<std::uint32_t> index_of(const Permutation& p) const { return index_of(p.images()); }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }
  /// a b a^-1
  std::uint32_t conj(std::uint32_t b, std::uint32_t a) const { return mul(mul(a, b), inverse_[a]); }
  std::uint64_t element_order(std::uint32_t a) const noexcept { return orders_[a]; }
  bool has_table() const noexcept { return !table_.empty(); }

 private:
  template <class PointMap>
  std::uint32_t index_of_member(PointMap&& p) const;

  const StabChain* chain_;
  std::size_t size_ = 0;
  std::size_t degree_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<Point> data_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> table_;
};

/// A finitely generated permutation group. Immutable value with shared,
/// lazily filled caches that are safe under concurrent readers.
class PermGroup {
 public:
  /// Trivial group on one point.
  PermGroup();
  /// Throws PreconditionError on generator degree mismatch.
  PermGroup(std::size_t degree, std::vector<Permutation> gens);
  PermGroup(std::size_t degree, std::vector<Permutation> gens, std::span<const Point> base_priority);

  static PermGroup trivial(std::size_t degree = 1);

  std::size_t degree() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  Permutation identity() const { return Permutation(degree()); }
  /// Throws PreconditionError when p has a different degree.
  bool contains(const Permutation& p) const;
  bool contains_group(const PermGroup& sub) const;
  const StabChain& chain() const noexcept;
  bool enumerable() const;
  /// Throws CapExceeded when order() > limits().enum_cap.
  const ElementTable& elements() const;

  /// Same degree and same element set.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

  /// Generators in 1-based cycle notation, ';'-separated.
  std::string generator_string() const;

  /// Per-group cache of derived data keyed by type. `make` may run more than
  /// once under contention; the first stored value wins.
  template <class T, class Make>
  const T& memo(Make&& make) const {
    auto key = std::type_index(typeid(T));
    {
      std::lock_guard lock(impl_->memo_mutex);
      auto it = impl_->memo.find(key);
      if (it != impl_->memo.end()) return *static_cast<const T*>(it->second.get());
    }
    auto value = std::make_shared<T>(make());
    std::lock_guard lock(impl_->memo_mutex);
    auto [it, inserted] = impl_->memo.emplace(key, std::move(value));
    return *static_cast<const T*>(it->second.get());
  }

 private:
  struct Impl {
    std::size_t degree = 1;
    std::vector<Permutation> gens;
    StabChain chain;
    std::once_flag elements_once;
    std::unique_ptr<ElementTable> elements;
    std::mutex memo_mutex;
    std::unordered_map<std::type_index, std::shared_ptr<void>> memo;
  };
  std::shared_ptr<Impl> impl_;
};

/// ⟨gens⟩ on `degree` points; empty gens give the trivial group.
PermGroup generate(const std::vector<Permutation>& gens, std::size_t degree);

/// Closes a set of elements under the group operation.
PermGroup subgroup_generated(const PermGroup& parent, std::vector<Permutation> gens);

/// Greedy generating set: keeps each candidate not already in the span of
/// the previously kept ones.
std::vector<Permutation> reduce_generators(std::size_t degree, std::span<const Permutation> candidates);

}  // namespace classlab
