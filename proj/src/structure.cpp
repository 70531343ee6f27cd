#include "classlab/structure.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/isomorphism.hpp"

namespace classlab {

// ---------------------------------------------------------------------------
// Element-set helpers

Bits generate_bits(const ElementTable& table, const std::vector<std::uint32_t>& gens) {
  Bits bits(table.size());
  bits.set(0);
  std::vector<std::uint32_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::uint32_t g : gens) {
      std::uint32_t y = table.mul(queue[k], g);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  return bits;
}

Bits element_bits(const PermGroup& g, const PermGroup& sub) {
  const auto& table = g.elements();
  std::vector<std::uint32_t> gens;
  for (const auto& s : sub.generators()) {
    auto idx = table.index_of(s);
    if (!idx) throw PreconditionError("subgroup generator " + s.to_cycle_string() + " is not in the group");
    gens.push_back(*idx);
  }
  return generate_bits(table, gens);
}

namespace {

std::vector<std::uint32_t> reduced_generator_indices(const ElementTable& table, const Bits& bits) {
  std::vector<std::uint32_t> gens;
  Bits current(table.size());
  current.set(0);
  std::size_t target = bits.count();
  // prefer elements of large order so fewer generators are needed
  std::vector<std::uint32_t> order = bits.indices();
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return table.element_order(a) > table.element_order(b);
  });
  for (std::uint32_t x : order) {
    if (current.count() == target) break;
    if (current.test(x)) continue;
    gens.push_back(x);
    current = generate_bits(table, gens);
  }
  return gens;
}

PermGroup group_from_indices(const PermGroup& g, const std::vector<std::uint32_t>& gens) {
  const auto& table = g.elements();
  std::vector<Permutation> perms;
  for (std::uint32_t i : gens) perms.push_back(table.element(i));
  return PermGroup(g.degree(), std::move(perms));
}

}  // namespace

PermGroup group_from_bits(const PermGroup& g, const Bits& bits) {
  return group_from_indices(g, reduced_generator_indices(g.elements(), bits));
}

// ---------------------------------------------------------------------------
// Conjugacy classes and series

const ConjugacyClasses& conjugacy_classes(const PermGroup& g) {
  return g.memo<ConjugacyClasses>([&] {
    const auto& table = g.elements();
    ConjugacyClasses out;
    constexpr std::uint32_t unset = UINT32_MAX;
    out.class_of.assign(table.size(), unset);
    std::vector<std::uint32_t> gens;
    for (const auto& s : g.generators()) gens.push_back(*table.index_of(s));
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (out.class_of[x] != unset) continue;
      auto id = static_cast<std::uint32_t>(out.classes.size());
      std::vector<std::uint32_t> cls{x};
      out.class_of[x] = id;
      for (std::size_t k = 0; k < cls.size(); ++k)
        for (std::uint32_t s : gens) {
          std::uint32_t y = table.conj(cls[k], s);
          if (out.class_of[y] == unset) {
            out.class_of[y] = id;
            cls.push_back(y);
          }
        }
      std::sort(cls.begin(), cls.end());
      out.classes.push_back(std::move(cls));
    }
    return out;
  });
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& gens) {
  std::vector<Permutation> current;
  for (const auto& x : gens)
    if (!x.is_identity()) current.push_back(x);
  PermGroup h(g.degree(), current);
  for (std::size_t k = 0; k < current.size(); ++k) {
    for (const auto& s : g.generators()) {
      Permutation c = conjugate(current[k], s);
      if (!h.contains(c)) {
        current.push_back(c);
        h = PermGroup(g.degree(), current);
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    std::vector<Permutation> comms;
    for (const auto& x : series.back().generators())
      for (const auto& s : g.generators()) comms.push_back(commutator(x, s));
    PermGroup next = normal_closure(g, comms);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

PermGroup center(const PermGroup& g) {
  const auto& cc = conjugacy_classes(g);
  Bits bits(g.elements().size());
  for (const auto& cls : cc.classes)
    if (cls.size() == 1) bits.set(cls[0]);
  return group_from_bits(g, bits);
}

// ---------------------------------------------------------------------------
// Normal lattice

std::size_t NormalLattice::find(const Bits& b) const {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == b) return i;
  throw PreconditionError("element set is not a member of the normal lattice");
}

std::vector<std::size_t> NormalLattice::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < maximal.size(); ++i)
    if (maximal[i]) out.push_back(i);
  return out;
}

const NormalLattice& normal_subgroups(const PermGroup& g) {
  return g.memo<NormalLattice>([&] {
    const auto& table = g.elements();
    const auto& cc = conjugacy_classes(g);

    struct Member {
      Bits bits;
      std::vector<std::uint32_t> gens;
    };
    std::vector<Member> found;
    std::unordered_set<Bits, BitsHash> seen;
    auto add = [&](Member m) {
      if (seen.insert(m.bits).second) found.push_back(std::move(m));
    };
    add(Member{generate_bits(table, {}), {}});
    for (const auto& cls : cc.classes) {
      if (cls[0] == 0) continue;
      // a class is closed under conjugation, so it generates a normal subgroup
      Member m{Bits(table.size()), {}};
      m.bits.set(0);
      for (std::uint32_t x : cls) {
        if (m.bits.test(x)) continue;
        m.gens.push_back(x);
        m.bits = generate_bits(table, m.gens);
      }
      add(std::move(m));
    }
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        if (found[i].bits.subset_of(found[j].bits) || found[j].bits.subset_of(found[i].bits)) continue;
        Member m{Bits(), found[i].gens};
        m.gens.insert(m.gens.end(), found[j].gens.begin(), found[j].gens.end());
        m.bits = generate_bits(table, m.gens);
        if (seen.count(m.bits)) continue;
        m.gens = reduced_generator_indices(table, m.bits);
        add(std::move(m));
      }

    std::sort(found.begin(), found.end(), [](const Member& a, const Member& b) {
      std::size_t ca = a.bits.count(), cb = b.bits.count();
      if (ca != cb) return ca < cb;
      return lex_less(a.bits, b.bits);
    });

    NormalLattice lattice;
    lattice.parent = g;
    for (auto& m : found) {
      lattice.members.push_back(m.bits.count() == table.size() ? g : group_from_indices(g, m.gens));
      lattice.bits.push_back(std::move(m.bits));
    }
    std::size_t n = lattice.bits.size();
    lattice.maximal.assign(n, false);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      bool maximal = true;
      for (std::size_t j = i + 1; j + 1 < n && maximal; ++j)
        if (lattice.bits[j] != lattice.bits[i] && lattice.contains(j, i)) maximal = false;
      lattice.maximal[i] = maximal;
    }
    return lattice;
  });
}

PermGroup baer_radical(const PermGroup& g) {
  if (g.is_trivial()) throw PreconditionError("the radical is defined for nontrivial groups only");
  const auto& lattice = normal_subgroups(g);
  Bits meet = lattice.bits.back();
  for (std::size_t i : lattice.maximal_indices()) meet = meet & lattice.bits[i];
  return lattice.members[lattice.find(meet)];
}

namespace {

struct QuotientCache {
  std::unique_ptr<std::mutex> mutex = std::make_unique<std::mutex>();
  mutable std::vector<std::shared_ptr<const PermGroup>> slots;
};

}  // namespace

const PermGroup& lattice_quotient(const PermGroup& g, std::size_t i) {
  const auto& lattice = normal_subgroups(g);
  const auto& cache = g.memo<QuotientCache>([&] {
    QuotientCache c;
    c.slots.resize(lattice.size());
    return c;
  });
  {
    std::lock_guard lock(*cache.mutex);
    if (cache.slots.at(i)) return *cache.slots[i];
  }
  std::shared_ptr<const PermGroup> q;
  if (i == 0)
    q = std::make_shared<const PermGroup>(g);
  else if (i == lattice.whole())
    q = std::make_shared<const PermGroup>(PermGroup::trivial());
  else
    q = std::make_shared<const PermGroup>(quotient(g, lattice.members[i]).group);
  std::lock_guard lock(*cache.mutex);
  if (!cache.slots[i]) cache.slots[i] = std::move(q);
  return *cache.slots[i];
}

// ---------------------------------------------------------------------------
// Predicates

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_cyclic(const PermGroup& g) {
  if (!is_abelian(g)) return false;
  const auto& table = g.elements();
  for (std::uint32_t x = 0; x < table.size(); ++x)
    if (table.element_order(x) == table.size()) return true;
  return false;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().is_trivial(); }

bool is_simple(const PermGroup& g) { return !g.is_trivial() && normal_subgroups(g).size() == 2; }

bool is_p_group(const PermGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  std::uint64_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

// ---------------------------------------------------------------------------
// Subgroups

SubgroupList subgroup_list(const PermGroup& g, std::size_t limit) {
  const auto& table = g.elements();
  struct Entry {
    Bits bits;
    std::vector<std::uint32_t> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](Entry e) {
    if (!seen.insert(e.bits).second) return;
    if (seen.size() > limit)
      throw CapExceeded("group of order " + std::to_string(g.order()) + " has more than " +
                        std::to_string(limit) + " subgroups");
    found.push_back(std::move(e));
  };
  add(Entry{generate_bits(table, {}), {}});
  std::vector<std::uint32_t> cyclic_gens;
  for (std::uint32_t x = 1; x < table.size(); ++x) {
    Entry e{generate_bits(table, {x}), {x}};
    if (seen.count(e.bits)) continue;
    cyclic_gens.push_back(x);
    add(std::move(e));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::uint32_t c : cyclic_gens) {
      if (found[i].bits.test(c)) continue;
      Entry e{Bits(), found[i].gens};
      e.gens.push_back(c);
      e.bits = generate_bits(table, e.gens);
      add(std::move(e));
    }

  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].bits.count();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] < counts[b];
    return lex_less(found[a].bits, found[b].bits);
  });
  SubgroupList out;
  for (std::size_t i : order) {
    out.groups.push_back(counts[i] == table.size() ? g : group_from_indices(g, found[i].gens));
    out.bits.push_back(std::move(found[i].bits));
  }
  return out;
}

std::vector<PermGroup> subgroups(const PermGroup& g, std::size_t limit) { return subgroup_list(g, limit).groups; }

// ---------------------------------------------------------------------------
// Radical factorization and quotients

RadicalFactorization radical_factorization(const PermGroup& g) {
  if (g.is_trivial()) throw PreconditionError("radical factorization needs a nontrivial group");
  const auto& lattice = normal_subgroups(g);
  RadicalFactorization out;
  Bits running = lattice.bits.back();
  for (std::size_t i : lattice.maximal_indices()) {
    Bits next = running & lattice.bits[i];
    if (next == running) continue;
    running = std::move(next);
    out.chosen.push_back(i);
  }
  std::reverse(out.chosen.begin(), out.chosen.end());
  std::size_t rad = lattice.find(running);
  out.radical = lattice.members[rad];
  std::uint64_t product = 1;
  for (std::size_t i : out.chosen) {
    out.factors.push_back(lattice_quotient(g, i));
    product *= out.factors.back().order();
  }
  if (product * out.radical.order() != g.order())
    throw FalsificationAlarm("radical factorization of a group of order " + std::to_string(g.order()) +
                             ": product of simple factors " + std::to_string(product) + " != |G/Rad| " +
                             std::to_string(g.order() / out.radical.order()));
  return out;
}

std::vector<PermGroup> simple_quotients(const PermGroup& g) {
  std::vector<PermGroup> out;
  if (g.is_trivial()) return out;
  const auto& lattice = normal_subgroups(g);
  for (std::size_t i : lattice.maximal_indices()) {
    const PermGroup& q = lattice_quotient(g, i);
    bool known = std::any_of(out.begin(), out.end(), [&](const PermGroup& r) { return isomorphic(r, q).has_value(); });
    if (!known) out.push_back(q);
  }
  return out;
}

bool has_prime_order_quotient(const PermGroup& g) { return derived_subgroup(g).order() != g.order(); }

// ---------------------------------------------------------------------------
// Complements

std::optional<PermGroup> complement_exists(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g)) throw PreconditionError("complement search needs a normal subgroup");
  if (n.is_trivial()) return g;
  if (n.order() == g.order()) return PermGroup::trivial(g.degree());

  auto q = quotient(g, n);
  const auto& gens = g.generators();
  const auto& images = q.projection.images();

  // generators of G whose images already generate G/N
  std::vector<std::size_t> picked;
  std::vector<std::uint64_t> partial_orders;
  std::vector<Permutation> image_gens;
  PermGroup span = PermGroup::trivial(q.group.degree());
  for (std::size_t i = 0; i < gens.size() && span.order() < q.group.order(); ++i) {
    if (span.contains(images[i])) continue;
    picked.push_back(i);
    image_gens.push_back(images[i]);
    span = PermGroup(q.group.degree(), image_gens);
    partial_orders.push_back(span.order());
  }

  const auto& n_elems = n.elements();
  std::vector<Permutation> lifts;
  auto search = [&](auto&& self, std::size_t depth) -> std::optional<PermGroup> {
    if (depth == picked.size()) return PermGroup(g.degree(), lifts);
    const Permutation& t = gens[picked[depth]];
    std::uint64_t want = images[picked[depth]].order();
    for (std::uint32_t k = 0; k < n_elems.size(); ++k) {
      Permutation cand = t * n_elems.element(k);
      if (cand.order() != want) continue;
      lifts.push_back(std::move(cand));
      PermGroup partial(g.degree(), lifts);
      if (partial.order() == partial_orders[depth])
        if (auto found = self(self, depth + 1)) return found;
      lifts.pop_back();
    }
    return std::nullopt;
  };
  return search(search, 0);
}

// ---------------------------------------------------------------------------
// Normalizers

PermGroup normalizer(const PermGroup& g, const PermGroup& h) { return group_from_bits(g, normalizer_bits(g, h)); }

}  // namespace classlab
