#include "classlab/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"

namespace classlab {

// ---------------------------------------------------------------------------
// StabChain

StabChain::StabChain(std::size_t degree, std::span<const Permutation> gens,
                     std::span<const Point> priority, std::size_t forced)
    : degree_(degree), rank_(degree) {
  if (forced > priority.size()) throw PreconditionError("forced base longer than priority list");
  std::iota(rank_.begin(), rank_.end(), Point{0});
  if (!priority.empty()) {
    std::vector<bool> ranked(degree, false);
    Point next = 0;
    for (Point p : priority) {
      if (p >= degree || ranked[p]) throw PreconditionError("invalid base priority");
      ranked[p] = true;
      rank_[p] = next++;
    }
    for (Point p = 0; p < degree; ++p)
      if (!ranked[p]) rank_[p] = next++;
  }

  std::vector<Permutation> strong;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (!g.is_identity()) strong.push_back(g);
  }

  for (std::size_t k = 0; k < forced; ++k) {
    Level level;
    level.base = priority[k];
    levels_.push_back(std::move(level));
  }
  for (const auto& g : strong) {
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level& l) { return g[l.base] == l.base; });
    if (fixes_base) {
      Level level;
      level.base = choose_base(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j)
        fixes_prefix = g[levels_[j].base] == levels_[j].base;
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(i);
  }

  // Incremental Schreier-Sims: verify every Schreier generator at level i
  // sifts through the levels below; on failure, extend and descend.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restart; ++k) {
      for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
        const Level& level = levels_[li];
        const Permutation& gen = level.gens[s];
        Point image = gen[level.orbit[k]];
        Permutation schreier =
            level.inverse_transversal[static_cast<std::size_t>(level.position[image])] * gen *
            level.transversal[k];
        if (schreier.is_identity()) continue;
        auto [residue, stop] = sift(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base = choose_base(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= stop; ++l) {
          levels_[l].gens.push_back(residue);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
}

Point StabChain::choose_base(const Permutation& p) const {
  Point best = static_cast<Point>(degree_);
  for (Point x = 0; x < degree_; ++x)
    if (p[x] != x && (best == degree_ || rank_[x] < rank_[best])) best = x;
  return best;
}

void StabChain::rebuild_orbit(std::size_t i) {
  Level& level = levels_[i];
  level.orbit.assign(1, level.base);
  level.position.assign(degree_, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  level.inverse_transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& g : level.gens) {
      Point next = g[level.orbit[k]];
      if (level.position[next] >= 0) continue;
      level.position[next] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(next);
      Permutation u = g * level.transversal[k];
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    std::int32_t pos = level.position[p[level.base]];
    if (pos < 0) return {std::move(p), i};
    if (pos > 0) p = level.inverse_transversal[static_cast<std::size_t>(pos)] * p;
  }
  return {std::move(p), levels_.size()};
}

std::uint64_t StabChain::order() const {
  unsigned __int128 n = 1;
  for (const auto& level : levels_) {
    n *= level.orbit.size();
    if (n > static_cast<unsigned __int128>(INT64_MAX))
      throw CapExceeded("group order does not fit in 63 bits");
  }
  return static_cast<std::uint64_t>(n);
}

bool StabChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw PreconditionError("membership test with mismatched degree");
  auto [residue, stop] = sift(p);
  return stop == levels_.size() && residue.is_identity();
}

// ---------------------------------------------------------------------------
// ElementTable

namespace {

std::uint64_t span_order(std::span<const Point> images) {
  std::uint64_t result = 1;
  std::vector<bool> seen(images.size(), false);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

}  // namespace

ElementTable::ElementTable(const StabChain& chain)
    : chain_(&chain), size_(chain.order()), degree_(chain.degree()) {
  const auto& levels = chain.levels();
  stride_.assign(levels.size(), 1);
  for (std::size_t i = levels.size(); i-- > 1;) stride_[i - 1] = stride_[i] * levels[i].orbit.size();

  data_.resize(size_ * degree_);
  // prefix[i] = u_0[d_0] ... u_{i-1}[d_{i-1}], composed right to left.
  std::vector<std::vector<Point>> prefix(levels.size() + 1, std::vector<Point>(degree_));
  std::iota(prefix[0].begin(), prefix[0].end(), Point{0});
  std::vector<std::size_t> digit(levels.size(), 0);
  auto refresh = [&](std::size_t from) {
    for (std::size_t i = from; i < levels.size(); ++i) {
      const auto& u = levels[i].transversal[digit[i]];
      for (std::size_t x = 0; x < degree_; ++x) prefix[i + 1][x] = prefix[i][u[static_cast<Point>(x)]];
    }
  };
  refresh(0);
  for (std::size_t idx = 0; idx < size_; ++idx) {
    std::copy(prefix.back().begin(), prefix.back().end(), data_.begin() + static_cast<std::ptrdiff_t>(idx * degree_));
    // advance mixed-radix counter (last level fastest)
    std::size_t i = levels.size();
    while (i > 0) {
      --i;
      if (++digit[i] < levels[i].orbit.size()) break;
      digit[i] = 0;
      if (i == 0) i = levels.size() + 1;  // wrapped completely
      if (i > levels.size()) break;
    }
    if (i <= levels.size() && idx + 1 < size_) refresh(i);
  }

  inverse_.resize(size_);
  orders_.resize(size_);
  std::vector<Point> inv(degree_);
  for (std::uint32_t a = 0; a < size_; ++a) {
    auto e = (*this)[a];
    for (std::size_t x = 0; x < degree_; ++x) inv[e[x]] = static_cast<Point>(x);
    inverse_[a] = index_of_member([&](Point x) { return inv[x]; });
    orders_[a] = span_order(e);
  }

  if (size_ <= limits().table_cap) {
    table_.resize(size_ * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      auto ea = (*this)[a];
      for (std::uint32_t b = 0; b < size_; ++b) {
        auto eb = (*this)[b];
        table_[static_cast<std::size_t>(a) * size_ + b] = index_of_member([&](Point x) { return ea[eb[x]]; });
      }
    }
  }
}

template <class PointMap>
std::uint32_t ElementTable::index_of_member(PointMap&& p) const {
  const auto& levels = chain_->levels();
  std::size_t idx = 0;
  // digits small: chain depth is bounded by the degree
  std::vector<const Permutation*> used;
  used.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Point y = p(levels[i].base);
    for (const Permutation* u : used) y = (*u)[y];
    auto pos = static_cast<std::size_t>(levels[i].position[y]);
    idx += pos * stride_[i];
    used.push_back(&levels[i].inverse_transversal[pos]);
  }
  return static_cast<std::uint32_t>(idx);
}

Permutation ElementTable::element(std::uint32_t i) const {
  return Permutation::from_images_unchecked((*this)[i]);
}

std::optional<std::uint32_t> ElementTable::index_of(std::span<const Point> p) const {
  if (p.size() != degree_) throw PreconditionError("index lookup with mismatched degree");
  const auto& levels = chain_->levels();
  std::vector<Point> g(p.begin(), p.end());
  std::vector<Point> tmp(degree_);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::int32_t pos = levels[i].position[g[levels[i].base]];
    if (pos < 0) return std::nullopt;
    idx += static_cast<std::size_t>(pos) * stride_[i];
    const auto& u = levels[i].inverse_transversal[static_cast<std::size_t>(pos)];
    for (std::size_t x = 0; x < degree_; ++x) tmp[x] = u[g[x]];
    g.swap(tmp);
  }
  for (std::size_t x = 0; x < degree_; ++x)
    if (g[x] != x) return std::nullopt;
  return static_cast<std::uint32_t>(idx);
}

std::uint32_t ElementTable::mul(std::uint32_t a, std::uint32_t b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size_ + b];
  auto ea = (*this)[a];
  auto eb = (*this)[b];
  return index_of_member([&](Point x) { return ea[eb[x]]; });
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens)
    : PermGroup(degree, std::move(gens), std::span<const Point>{}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::span<const Point> base_priority)
    : impl_(std::make_shared<Impl>()) {
  if (degree == 0) throw PreconditionError("permutation groups need at least one point");
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw PreconditionError("generator " + g.to_cycle_string() + " has degree " +
                              std::to_string(g.degree()) + ", expected " + std::to_string(degree));
  impl_->degree = degree;
  impl_->gens = std::move(gens);
  impl_->chain = StabChain(degree, impl_->gens, base_priority);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

std::size_t PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Permutation>& PermGroup::generators() const noexcept { return impl_->gens; }
std::uint64_t PermGroup::order() const { return impl_->chain.order(); }
const StabChain& PermGroup::chain() const noexcept { return impl_->chain; }

bool PermGroup::contains(const Permutation& p) const { return impl_->chain.contains(p); }

bool PermGroup::contains_group(const PermGroup& sub) const {
  if (sub.degree() != degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return contains(g); });
}

bool PermGroup::enumerable() const { return order() <= limits().enum_cap; }

const ElementTable& PermGroup::elements() const {
  if (!enumerable())
    throw CapExceeded("group of order " + std::to_string(order()) + " exceeds enumeration cap " +
                      std::to_string(limits().enum_cap));
  std::call_once(impl_->elements_once,
                 [this] { impl_->elements = std::make_unique<ElementTable>(impl_->chain); });
  return *impl_->elements;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains_group(b);
}

std::string PermGroup::generator_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < impl_->gens.size(); ++i) {
    if (i) os << ';';
    os << impl_->gens[i].to_cycle_string();
  }
  return os.str();
}

PermGroup generate(const std::vector<Permutation>& gens, std::size_t degree) {
  return PermGroup(degree, gens);
}

PermGroup subgroup_generated(const PermGroup& parent, std::vector<Permutation> gens) {
  for (const auto& g : gens)
    if (!parent.contains(g)) throw PreconditionError("generator " + g.to_cycle_string() + " is not in the parent group");
  return PermGroup(parent.degree(), std::move(gens));
}

std::vector<Permutation> reduce_generators(std::size_t degree, std::span<const Permutation> candidates) {
  std::vector<Permutation> kept;
  StabChain chain(degree, kept);
  for (const auto& c : candidates) {
    if (chain.contains(c)) continue;
    kept.push_back(c);
    chain = StabChain(degree, kept);
  }
  return kept;
}

}  // namespace classlab
