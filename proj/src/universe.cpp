#include "classlab/universe.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "classlab/config.hpp"
#include "classlab/constructions.hpp"
#include "classlab/errors.hpp"
#include "classlab/structure.hpp"

namespace classlab {

namespace {

constexpr std::size_t max_spec_degree = 4096;

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed group spec \"" + std::string(whole) + "\"");
  std::size_t n = std::stoul(std::string(digits));
  if (n == 0) throw ParseError("group spec \"" + std::string(whole) + "\" has size 0");
  if (n > max_spec_degree) throw ParseError("group spec \"" + std::string(whole) + "\" is too large");
  return n;
}

PermGroup parse_perm_spec(const std::string& text) {
  auto open = text.find('[');
  if (open == std::string::npos || text.back() != ']')
    throw ParseError("expected perm<d>[...] in \"" + text + "\"");
  std::size_t degree = parse_count(std::string_view(text).substr(4, open - 4), text);
  std::string body = text.substr(open + 1, text.size() - open - 2);
  std::vector<Permutation> gens;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ';')) {
    part = trim(part);
    if (part.empty()) throw ParseError("empty generator in \"" + text + "\"");
    gens.push_back(parse_cycles(part, degree));
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace

PermGroup parse_group_spec(std::string_view raw) {
  std::string text = trim(raw);
  if (text.empty()) throw ParseError("empty group spec");
  if (text == "1") return PermGroup::trivial();
  if (text == "Q8") return named::quaternion();
  if (text == "SL23") return named::special_linear_2(3);
  if (text == "SL25") return named::special_linear_2(5);
  if (text == "V4") return named::klein_four();
  if (text == "PSL27") return named::psl27();
  if (text.rfind("perm", 0) == 0) return parse_perm_spec(text);
  std::string_view rest = std::string_view(text).substr(1);
  switch (text[0]) {
    case 'C':
      return named::cyclic(parse_count(rest, text));
    case 'S':
      return named::symmetric(parse_count(rest, text));
    case 'A':
      return named::alternating(parse_count(rest, text));
    case 'D': {
      std::size_t order = parse_count(rest, text);
      if (order % 2 != 0) throw ParseError("dihedral spec \"" + text + "\" needs an even order");
      return named::dihedral(order / 2);
    }
    default:
      break;
  }
  throw ParseError("unknown group spec \"" + text + "\"");
}

UniverseSpec UniverseSpec::with_default_extras(std::size_t sym_degree) {
  UniverseSpec spec;
  spec.sym_degree = sym_degree;
  for (int n = 8; n <= 32; ++n) spec.extras.push_back("C" + std::to_string(n));
  for (const char* name : {"D8", "D10", "D12", "Q8", "SL23", "SL25"}) spec.extras.emplace_back(name);
  if (sym_degree < 6) spec.extras.emplace_back("A6");
  return spec;
}

std::string UniverseSpec::to_string() const {
  std::string out = "sym=" + std::to_string(sym_degree) + " extras=";
  for (std::size_t i = 0; i < extras.size(); ++i) out += (i ? "," : "") + extras[i];
  return out;
}

std::string known_name(const PermGroup& g) {
  std::uint64_t n = g.order();
  std::vector<std::pair<std::string, PermGroup>> candidates;
  if (n == 1) return "C1";
  candidates.emplace_back("C" + std::to_string(n), named::cyclic(n));
  if (n == 4) candidates.emplace_back("V4", named::klein_four());
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= 8; ++k) {
    f *= k;
    if (f == n && k >= 3) candidates.emplace_back("S" + std::to_string(k), named::symmetric(k));
    if (f / 2 == n && k >= 4) candidates.emplace_back("A" + std::to_string(k), named::alternating(k));
  }
  if (n % 2 == 0 && n >= 8) candidates.emplace_back("D" + std::to_string(n), named::dihedral(n / 2));
  if (n == 8) candidates.emplace_back("Q8", named::quaternion());
  if (n == 24) candidates.emplace_back("SL23", named::special_linear_2(3));
  if (n == 120) candidates.emplace_back("SL25", named::special_linear_2(5));
  if (n == 168) candidates.emplace_back("PSL27", named::psl27());
  for (const auto& [name, h] : candidates)
    if (isomorphic(g, h)) return name;
  return {};
}

std::size_t Catalog::find_isomorphic(const PermGroup& g) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].group.order() == g.order() && isomorphic(entries[i].group, g)) return i;
  return entries.size();
}

Catalog build_universe(const UniverseSpec& spec) {
  if (spec.sym_degree == 0 || spec.sym_degree > 6)
    throw PreconditionError("universe symmetric degree must be between 1 and 6");
  std::vector<PermGroup> candidates = subgroups(named::symmetric(spec.sym_degree), limits().subgroup_limit);
  for (const auto& e : spec.extras) candidates.push_back(parse_group_spec(e));

  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) (void)fingerprint(candidates[static_cast<std::size_t>(i)]);

  std::vector<PermGroup> reps;
  for (const auto& c : candidates) {
    bool known = std::any_of(reps.begin(), reps.end(), [&](const PermGroup& r) {
      return fingerprint(r) == fingerprint(c) && isomorphic(r, c).has_value();
    });
    if (!known) reps.push_back(c);
  }
  std::stable_sort(reps.begin(), reps.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    if (fingerprint(a) != fingerprint(b)) return fingerprint(a) < fingerprint(b);
    return a.generator_string() < b.generator_string();
  });

  Catalog cat;
  cat.spec = spec;
  std::map<std::uint64_t, int> fallback;
  for (auto& g : reps) {
    std::string name = known_name(g);
    if (name.empty()) name = "G" + std::to_string(g.order()) + "_" + std::to_string(++fallback[g.order()]);
    cat.entries.push_back(CatalogEntry{std::move(name), std::move(g)});
  }
  return cat;
}

std::string Catalog::serialize() const {
  std::ostringstream os;
  os << "version " << version << '\n';
  os << "spec " << spec.to_string() << '\n';
  for (const auto& e : entries) {
    os << e.name << '\t' << e.group.degree() << '\t';
    os << (e.group.generators().empty() ? "()" : e.group.generator_string()) << '\n';
  }
  return os.str();
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("universe file line " + std::to_string(lineno) + ": " + what);
  };

  if (!std::getline(is, line)) fail("missing version header");
  ++lineno;
  if (line != "version " + std::to_string(version)) fail("unsupported version header \"" + line + "\"");
  if (!std::getline(is, line)) fail("missing spec line");
  ++lineno;
  if (line.rfind("spec sym=", 0) != 0) fail("malformed spec line");
  {
    auto extras_at = line.find(" extras=");
    if (extras_at == std::string::npos) fail("malformed spec line");
    std::string sym = line.substr(9, extras_at - 9);
    if (sym.empty() || !std::all_of(sym.begin(), sym.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        sym.size() > 2)
      fail("malformed symmetric degree");
    cat.spec.sym_degree = std::stoul(sym);
    std::stringstream extras(line.substr(extras_at + 8));
    std::string item;
    while (std::getline(extras, item, ','))
      if (!item.empty()) cat.spec.extras.push_back(item);
  }

  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) fail("expected name<TAB>degree<TAB>generators");
    std::string name = line.substr(0, t1);
    std::string deg = line.substr(t1 + 1, t2 - t1 - 1);
    std::string gens = line.substr(t2 + 1);
    if (name.empty()) fail("empty entry name");
    std::size_t degree = 0;
    try {
      degree = parse_count(deg, deg);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    std::vector<Permutation> perms;
    std::stringstream gs(gens);
    std::string part;
    try {
      while (std::getline(gs, part, ';')) perms.push_back(parse_cycles(part, degree));
      PermGroup g(degree, std::move(perms));
      if (g.order() > limits().enum_cap) fail("entry " + name + " exceeds the enumeration cap");
      cat.entries.push_back(CatalogEntry{name, std::move(g)});
    } catch (const ParseError& e) {
      fail(e.what());
    } catch (const PreconditionError& e) {
      fail(e.what());
    }
  }
  if (cat.entries.empty()) fail("universe has no entries");
  return cat;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read universe file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Catalog::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write universe file " + path);
  out << serialize();
}

}  // namespace classlab
