#include "classlab/classes.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <unordered_map>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/isomorphism.hpp"
#include "classlab/structure.hpp"

namespace classlab {

// ---------------------------------------------------------------------------
// Builders

namespace cls {

namespace {

ClassPtr leaf(ClassKind kind, std::string text, std::vector<std::uint64_t> numbers = {}) {
  auto c = std::make_shared<ClassExpr>();
  c->kind = kind;
  c->numbers = std::move(numbers);
  c->text = std::move(text);
  return c;
}

std::string join_numbers(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

ClassPtr node(ClassKind kind, const std::string& name, std::vector<ClassPtr> children) {
  auto c = std::make_shared<ClassExpr>();
  c->kind = kind;
  c->text = name + "(";
  for (std::size_t i = 0; i < children.size(); ++i) c->text += (i ? "," : "") + children[i]->text;
  c->text += ")";
  c->children = std::move(children);
  return c;
}

}  // namespace

ClassPtr trivial() { return leaf(ClassKind::Trivial, "trivial"); }
ClassPtr all() { return leaf(ClassKind::All, "all"); }
ClassPtr abelian() { return leaf(ClassKind::Abelian, "abelian"); }
ClassPtr cyclic() { return leaf(ClassKind::Cyclic, "cyclic"); }
ClassPtr nilpotent() { return leaf(ClassKind::Nilpotent, "nilpotent"); }
ClassPtr solvable() { return leaf(ClassKind::Solvable, "solvable"); }
ClassPtr simple() { return leaf(ClassKind::Simple, "simple"); }

ClassPtr p_group(std::uint64_t p) {
  if (!is_prime(p)) throw ParseError("p(" + std::to_string(p) + "): not a prime");
  return leaf(ClassKind::PGroup, "p(" + std::to_string(p) + ")", {p});
}

ClassPtr pi(std::vector<std::uint64_t> primes) {
  if (primes.empty()) throw ParseError("pi() needs at least one prime");
  for (auto p : primes)
    if (!is_prime(p)) throw ParseError("pi(): " + std::to_string(p) + " is not a prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::string text = "pi(" + join_numbers(primes) + ")";
  return leaf(ClassKind::Pi, std::move(text), std::move(primes));
}

ClassPtr order_at_most(std::uint64_t n) { return leaf(ClassKind::OrderAtMost, "le(" + std::to_string(n) + ")", {n}); }
ClassPtr alt_ge(std::uint64_t n) { return leaf(ClassKind::AltGE, "altge(" + std::to_string(n) + ")", {n}); }

ClassPtr finite_set(const std::vector<std::string>& specs) {
  auto c = std::make_shared<ClassExpr>();
  c->kind = ClassKind::FiniteSet;
  c->text = "set(";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    c->specs.push_back(specs[i]);
    c->groups.push_back(parse_group_spec(specs[i]));
    c->text += (i ? "," : "") + specs[i];
  }
  c->text += ")";
  return c;
}

ClassPtr unite(ClassPtr a, ClassPtr b) { return node(ClassKind::Union, "union", {std::move(a), std::move(b)}); }
ClassPtr intersect(ClassPtr a, ClassPtr b) { return node(ClassKind::Intersect, "inter", {std::move(a), std::move(b)}); }
ClassPtr dual(ClassPtr a) { return node(ClassKind::Dual, "dual", {std::move(a)}); }
ClassPtr hat(ClassPtr a) { return node(ClassKind::Hat, "hat", {std::move(a)}); }

ClassPtr dual_iter(ClassPtr a, std::uint64_t k) {
  auto c = std::make_shared<ClassExpr>();
  c->kind = ClassKind::DualIter;
  c->numbers = {k};
  c->text = "dualn(" + a->text + "," + std::to_string(k) + ")";
  c->children = {std::move(a)};
  return c;
}

ClassPtr fnr() { return dual(solvable()); }

}  // namespace cls

// ---------------------------------------------------------------------------
// Parser

namespace {

class ClassParser {
 public:
  explicit ClassParser(std::string_view text) : text_(text) {}

  ClassPtr parse() {
    ClassPtr c = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing text");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("class expression \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a class name");
    std::string out(text_.substr(start, pos_ - start));
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return out;
  }
  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 12) fail("expected a number");
    return std::stoull(std::string(text_.substr(start, pos_ - start)));
  }
  std::vector<std::uint64_t> numbers() {
    std::vector<std::uint64_t> out{number()};
    while (accept(',')) out.push_back(number());
    return out;
  }
  // A group spec runs to the next top-level ',' or ')'.
  std::string spec() {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (depth == 0 && (c == ',' || c == ')')) break;
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      ++pos_;
    }
    std::string out(text_.substr(start, pos_ - start));
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected a group spec");
    return out;
  }

  ClassPtr expr() {
    std::string name = ident();
    if (name == "trivial") return cls::trivial();
    if (name == "all") return cls::all();
    if (name == "abelian") return cls::abelian();
    if (name == "cyclic") return cls::cyclic();
    if (name == "nilpotent") return cls::nilpotent();
    if (name == "solvable") return cls::solvable();
    if (name == "simple") return cls::simple();
    if (name == "fnr") return cls::fnr();
    expect('(');
    ClassPtr out;
    if (name == "p") {
      out = cls::p_group(number());
    } else if (name == "pi") {
      out = cls::pi(numbers());
    } else if (name == "le") {
      out = cls::order_at_most(number());
    } else if (name == "altge") {
      out = cls::alt_ge(number());
    } else if (name == "set") {
      std::vector<std::string> specs{spec()};
      while (accept(',')) specs.push_back(spec());
      out = cls::finite_set(specs);
    } else if (name == "union" || name == "inter") {
      out = expr();
      expect(',');
      do {
        ClassPtr next = expr();
        out = name == "union" ? cls::unite(out, next) : cls::intersect(out, next);
      } while (accept(','));
    } else if (name == "dual") {
      out = cls::dual(expr());
    } else if (name == "hat") {
      out = cls::hat(expr());
    } else if (name == "dualn") {
      ClassPtr inner = expr();
      expect(',');
      out = cls::dual_iter(inner, number());
    } else {
      fail("unknown class \"" + name + "\"");
    }
    expect(')');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ClassPtr parse_class(std::string_view text) { return ClassParser(text).parse(); }

// ---------------------------------------------------------------------------
// Isomorphism-type registry and memoized evaluation

namespace {

struct TypeInfo {
  PermGroup rep;
  std::once_flag once;
  std::vector<std::uint32_t> member_ids;    // per normal subgroup of rep
  std::vector<std::uint32_t> quotient_ids;  // rep / member
  std::vector<std::uint64_t> member_orders;
};

struct TypeTag {
  std::uint32_t id;
};

class Registry {
 public:
  std::uint32_t type_id(const PermGroup& g) {
    return g.memo<TypeTag>([&] { return TypeTag{lookup(g)}; }).id;
  }

  TypeInfo& info(std::uint32_t id) {
    TypeInfo* t;
    {
      std::lock_guard lock(mutex_);
      t = types_[id].get();
    }
    std::call_once(t->once, [&] {
      const auto& lattice = normal_subgroups(t->rep);
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        t->member_ids.push_back(type_id(lattice.members[i]));
        t->quotient_ids.push_back(type_id(lattice_quotient(t->rep, i)));
        t->member_orders.push_back(lattice.order(i));
      }
    });
    return *t;
  }

  const PermGroup& rep(std::uint32_t id) {
    std::lock_guard lock(mutex_);
    return types_[id]->rep;
  }

  std::size_t size() {
    std::lock_guard lock(mutex_);
    return types_.size();
  }

  std::optional<bool> cached(const std::string& key) {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, bool value) {
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(key, value);
  }

 private:
  std::uint32_t lookup(const PermGroup& g) {
    const Fingerprint& fp = fingerprint(g);
    std::vector<std::uint32_t> candidates;
    {
      std::lock_guard lock(mutex_);
      auto it = by_print_.find(fp);
      if (it != by_print_.end()) candidates = it->second;
    }
    for (auto id : candidates)
      if (isomorphic(rep(id), g)) return id;
    std::lock_guard lock(mutex_);
    // types registered by other workers since the snapshot
    auto& bucket = by_print_[fp];
    for (std::size_t k = candidates.size(); k < bucket.size(); ++k)
      if (isomorphic(types_[bucket[k]]->rep, g)) return bucket[k];
    auto id = static_cast<std::uint32_t>(types_.size());
    auto t = std::make_unique<TypeInfo>();
    t->rep = g;
    types_.push_back(std::move(t));
    bucket.push_back(id);
    return id;
  }

  std::mutex mutex_;
  std::deque<std::unique_ptr<TypeInfo>> types_;
  std::map<Fingerprint, std::vector<std::uint32_t>> by_print_;
  std::mutex memo_mutex_;
  std::unordered_map<std::string, bool> memo_;
};

Registry& registry() {
  static Registry r;
  return r;
}

bool member_id(const ClassExpr& c, std::uint32_t id);

bool alt_ge_member(std::uint64_t n, const PermGroup& g) {
  if (g.is_trivial()) return true;
  std::uint64_t half_factorial = 1;
  for (std::uint64_t m = 3; m < 64; ++m) {
    half_factorial = m == 3 ? 3 : half_factorial * m;
    if (half_factorial > g.order()) return false;
    if (half_factorial == g.order() && m >= n) return isomorphic(g, named::alternating(m)).has_value();
  }
  return false;
}

bool evaluate(const ClassExpr& c, std::uint32_t id) {
  const PermGroup& g = registry().rep(id);
  switch (c.kind) {
    case ClassKind::Trivial:
      return g.is_trivial();
    case ClassKind::All:
      return true;
    case ClassKind::Abelian:
      return is_abelian(g);
    case ClassKind::Cyclic:
      return is_cyclic(g);
    case ClassKind::Nilpotent:
      return is_nilpotent(g);
    case ClassKind::Solvable:
      return is_solvable(g);
    case ClassKind::Simple:
      return is_simple(g);
    case ClassKind::PGroup:
      return is_p_group(g, c.numbers[0]);
    case ClassKind::Pi: {
      for (auto p : prime_divisors(g.order()))
        if (!std::binary_search(c.numbers.begin(), c.numbers.end(), p)) return false;
      return true;
    }
    case ClassKind::OrderAtMost:
      return g.order() <= c.numbers[0];
    case ClassKind::AltGE:
      return alt_ge_member(c.numbers[0], g);
    case ClassKind::FiniteSet:
      return std::any_of(c.groups.begin(), c.groups.end(),
                         [&](const PermGroup& h) { return h.order() == g.order() && registry().type_id(h) == id; });
    case ClassKind::Union:
      return std::any_of(c.children.begin(), c.children.end(), [&](const ClassPtr& a) { return member_id(*a, id); });
    case ClassKind::Intersect:
      return std::all_of(c.children.begin(), c.children.end(), [&](const ClassPtr& a) { return member_id(*a, id); });
    case ClassKind::Dual: {
      const TypeInfo& t = registry().info(id);
      for (std::size_t i = 0; i + 1 < t.quotient_ids.size(); ++i)
        if (member_id(*c.children[0], t.quotient_ids[i])) return false;
      return true;
    }
    case ClassKind::Hat: {
      if (g.is_trivial()) return true;
      const TypeInfo& t = registry().info(id);
      for (std::size_t i = 0; i + 1 < t.quotient_ids.size(); ++i) {
        if (t.member_orders[i] >= g.order()) throw FalsificationAlarm("series recursion did not decrease the order");
        if (member_id(*c.children[0], t.quotient_ids[i]) && member_id(c, t.member_ids[i])) return true;
      }
      return false;
    }
    case ClassKind::DualIter: {
      std::uint64_t k = c.numbers[0];
      if (k > static_cast<std::uint64_t>(limits().dual_depth))
        throw CapExceeded("dual depth " + std::to_string(k) + " exceeds the limit " +
                                std::to_string(limits().dual_depth));
      if (k == 0) return member_id(*c.children[0], id);
      ClassPtr inner = cls::dual_iter(c.children[0], k - 1);
      const TypeInfo& t = registry().info(id);
      for (std::size_t i = 0; i + 1 < t.quotient_ids.size(); ++i)
        if (member_id(*inner, t.quotient_ids[i])) return false;
      return true;
    }
  }
  throw PreconditionError("unknown class kind");
}

bool member_id(const ClassExpr& c, std::uint32_t id) {
  std::string key = c.text + "#" + std::to_string(id);
  if (auto hit = registry().cached(key)) return *hit;
  bool value = evaluate(c, id);
  registry().store(key, value);
  return value;
}

}  // namespace

bool member(const ClassExpr& c, const PermGroup& g) { return member_id(c, registry().type_id(g)); }

std::size_t registered_types() { return registry().size(); }

std::optional<std::size_t> dual_witness(const ClassExpr& c, const PermGroup& g) {
  const auto& lattice = normal_subgroups(g);
  for (std::size_t i = 0; i < lattice.whole(); ++i)
    if (member(c, lattice_quotient(g, i))) return i;
  return std::nullopt;
}

std::optional<std::vector<PermGroup>> hat_series(const ClassExpr& c, const PermGroup& g) {
  if (g.is_trivial()) return std::vector<PermGroup>{g};
  ClassPtr closure = cls::hat(std::make_shared<ClassExpr>(c));
  const auto& lattice = normal_subgroups(g);
  for (std::size_t i = 0; i < lattice.whole(); ++i) {
    const PermGroup& n = lattice.members[i];
    if (!member(c, lattice_quotient(g, i)) || !member(*closure, n)) continue;
    auto below = hat_series(c, n);
    if (!below) throw FalsificationAlarm("series search disagrees with memoized membership");
    below->push_back(g);
    return below;
  }
  return std::nullopt;
}

bool bidual_member_maxnormal(const ClassExpr& c, const PermGroup& g) {
  if (g.is_trivial()) return true;
  const auto& lattice = normal_subgroups(g);
  for (std::size_t i : lattice.maximal_indices())
    if (!member(c, lattice_quotient(g, i))) return false;
  return true;
}

bool bidual_member_radical(const ClassExpr& c, const PermGroup& g) {
  auto f = radical_factorization(g);
  return std::all_of(f.factors.begin(), f.factors.end(), [&](const PermGroup& s) { return member(c, s); });
}

bool dual_chain_member(const ClassPtr& c, const PermGroup& g, std::uint64_t k) {
  return member(*cls::dual_iter(c, k), g);
}

// ---------------------------------------------------------------------------
// Audits

std::string to_string(Property p) {
  switch (p) {
    case Property::C0:
      return "C0";
    case Property::C1:
      return "C1";
    case Property::C2:
      return "C2";
    case Property::C3:
      return "C3";
  }
  return "?";
}

namespace {

struct MemberAudit {
  std::size_t violations = 0;
  std::vector<AuditWitness> witnesses;
  bool skipped = false;
};

std::string order_text(const PermGroup& g) { return "order " + std::to_string(g.order()); }

MemberAudit audit_member(const ClassExpr& c, const CatalogEntry& e, Property which, std::size_t cap) {
  MemberAudit out;
  const PermGroup& g = e.group;
  auto report = [&](std::string description, std::vector<std::string> subs) {
    ++out.violations;
    if (out.witnesses.size() < cap) out.witnesses.push_back(AuditWitness{e.name, std::move(description), std::move(subs)});
  };
  switch (which) {
    case Property::C0: {
      if (!member(c, g)) break;
      for (const auto& s : subgroups(g, limits().subgroup_limit))
        if (!member(c, s))
          report(e.name + " is in the class but its subgroup of " + order_text(s) + " is not", {s.generator_string()});
      break;
    }
    case Property::C1: {
      if (!member(c, g)) break;
      const auto& lattice = normal_subgroups(g);
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (!member(c, lattice_quotient(g, i)))
          report(e.name + " is in the class but its quotient by the normal subgroup of " +
                     order_text(lattice.members[i]) + " is not",
                 {lattice.members[i].generator_string()});
      break;
    }
    case Property::C2: {
      if (member(c, g)) break;
      const auto& lattice = normal_subgroups(g);
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (member(c, lattice.members[i]) && member(c, lattice_quotient(g, i)))
          report("the normal subgroup N of " + order_text(lattice.members[i]) + " and " + e.name +
                     "/N are in the class but " + e.name + " is not",
                 {lattice.members[i].generator_string()});
      break;
    }
    case Property::C3: {
      const auto& lattice = normal_subgroups(g);
      std::vector<bool> in(lattice.size());
      for (std::size_t i = 0; i < lattice.size(); ++i) in[i] = member(c, lattice_quotient(g, i));
      for (std::size_t i = 0; i < lattice.size(); ++i)
        for (std::size_t j = i + 1; j < lattice.size(); ++j) {
          if (!in[i] || !in[j]) continue;
          std::size_t m = lattice.meet(i, j);
          if (!in[m])
            report(e.name + "/H1 and " + e.name + "/H2 are in the class but " + e.name + "/(H1 ∩ H2) is not (|H1| = " +
                       std::to_string(lattice.order(i)) + ", |H2| = " + std::to_string(lattice.order(j)) + ")",
                   {lattice.members[i].generator_string(), lattice.members[j].generator_string()});
        }
      break;
    }
  }
  return out;
}

}  // namespace

AuditReport audit_property(const ClassPtr& c, const Catalog& universe, Property which, std::size_t max_witnesses) {
  const auto n = static_cast<std::int64_t>(universe.size());
  std::vector<MemberAudit> results(universe.size());
  std::vector<std::exception_ptr> errors(universe.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      results[k] = audit_member(*c, universe.entries[k], which, max_witnesses);
    } catch (const CapExceeded&) {
      results[k].skipped = true;
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  AuditReport report;
  report.property = which;
  report.domain = std::to_string(universe.size()) + " universe groups";
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (results[k].skipped) report.skipped.push_back(universe.entries[k].name);
    report.violations += results[k].violations;
    for (auto& w : results[k].witnesses)
      if (report.counterexamples.size() < max_witnesses) report.counterexamples.push_back(std::move(w));
  }
  report.holds = report.violations == 0;
  return report;
}

Classification classify(const ClassPtr& c, const Catalog& universe) {
  Classification out;
  for (Property p : {Property::C0, Property::C1, Property::C2, Property::C3}) out.audits.push_back(audit_property(c, universe, p));
  bool c0 = out.audits[0].holds, c1 = out.audits[1].holds, c2 = out.audits[2].holds, c3 = out.audits[3].holds;
  out.pre_formation = c1;
  out.formation = c1 && c3;
  out.extensive_formation = c1 && c2 && c3;
  out.pre_variety = c0 && c1;
  out.extensive_variety = c0 && c1 && c2 && c3;
  return out;
}

}  // namespace classlab
