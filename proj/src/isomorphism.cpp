#include "classlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "classlab/config.hpp"
#include "classlab/errors.hpp"
#include "classlab/structure.hpp"

namespace classlab {

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "order=" << order << " orders=";
  for (const auto& [o, c] : order_histogram) os << o << ':' << c << ',';
  os << " classes=";
  for (const auto& [o, s, c] : class_types) os << o << '/' << s << ':' << c << ',';
  os << " center=" << center_order << " derived=";
  for (auto d : derived_orders) os << d << ',';
  return os.str();
}

const Fingerprint& fingerprint(const PermGroup& g) {
  return g.memo<Fingerprint>([&] {
    const auto& table = g.elements();
    const auto& cc = conjugacy_classes(g);
    Fingerprint fp;
    fp.order = table.size();
    std::map<std::uint64_t, std::uint64_t> hist;
    for (std::uint32_t x = 0; x < table.size(); ++x) hist[table.element_order(x)]++;
    fp.order_histogram.assign(hist.begin(), hist.end());
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> types;
    for (const auto& cls : cc.classes) {
      types[{table.element_order(cls[0]), cls.size()}]++;
      if (cls.size() == 1) ++fp.center_order;
    }
    fp.center_order -= 1;
    for (const auto& [key, count] : types) fp.class_types.emplace_back(key.first, key.second, count);
    for (const auto& d : derived_series(g)) fp.derived_orders.push_back(d.order());
    return fp;
  });
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const PermGroup& g, const PermGroup& h)
      : tg_(g.elements()), th_(h.elements()), cg_(conjugacy_classes(g)), ch_(conjugacy_classes(h)) {
    choose_generators();
    phi_.assign(tg_.size(), unset);
    used_.assign(th_.size(), unset);
  }

  std::optional<std::vector<std::uint32_t>> run() {
    images_.clear();
    if (extend(0)) return phi_;
    return std::nullopt;
  }

 private:
  static constexpr std::uint32_t unset = UINT32_MAX;

  void choose_generators() {
    std::vector<std::uint32_t> by_order(tg_.size());
    for (std::uint32_t i = 0; i < tg_.size(); ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return tg_.element_order(a) > tg_.element_order(b); });
    Bits span = generate_bits(tg_, {});
    for (std::uint32_t x : by_order) {
      if (span.count() == tg_.size()) break;
      if (span.test(x)) continue;
      gens_.push_back(x);
      span = generate_bits(tg_, gens_);
    }
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      std::uint32_t s = gens_[i];
      std::uint64_t ord = tg_.element_order(s);
      std::size_t csize = cg_.classes[cg_.class_of[s]].size();
      std::vector<std::uint32_t> cands;
      if (i == 0) {
        for (const auto& cls : ch_.classes)
          if (th_.element_order(cls[0]) == ord && cls.size() == csize) cands.push_back(cls[0]);
      } else {
        for (std::uint32_t y = 0; y < th_.size(); ++y)
          if (th_.element_order(y) == ord && ch_.classes[ch_.class_of[y]].size() == csize) cands.push_back(y);
      }
      candidates_.push_back(std::move(cands));
    }
  }

  // Rebuilds the map on ⟨gens_[0..k]⟩ from the chosen images and checks
  // that it is a well-defined injective homomorphism there.
  bool consistent(std::size_t k) {
    for (std::uint32_t x : touched_) {
      used_[phi_[x]] = unset;
      phi_[x] = unset;
    }
    touched_.clear();
    phi_[0] = 0;
    used_[0] = 0;
    touched_.push_back(0);
    for (std::size_t q = 0; q < touched_.size(); ++q) {
      std::uint32_t x = touched_[q];
      for (std::size_t j = 0; j <= k; ++j) {
        std::uint32_t y = tg_.mul(gens_[j], x);
        std::uint32_t fy = th_.mul(images_[j], phi_[x]);
        if (phi_[y] == unset) {
          if (used_[fy] != unset) return false;
          phi_[y] = fy;
          used_[fy] = y;
          touched_.push_back(y);
        } else if (phi_[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return true;
    for (std::uint32_t cand : candidates_[k]) {
      images_.push_back(cand);
      if (consistent(k) && extend(k + 1)) return true;
      images_.pop_back();
    }
    return false;
  }

  const ElementTable& tg_;
  const ElementTable& th_;
  const ConjugacyClasses& cg_;
  const ConjugacyClasses& ch_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> phi_;
  std::vector<std::uint32_t> used_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

std::optional<IsoCertificate> isomorphic(const PermGroup& g, const PermGroup& h) {
  auto cap = limits().iso_cap;
  if (g.order() > cap || h.order() > cap)
    throw CapExceeded("isomorphism test on orders " + std::to_string(g.order()) + " and " +
                      std::to_string(h.order()) + " exceeds cap " + std::to_string(cap));
  if (g.order() != h.order()) return std::nullopt;
  const auto& fg = fingerprint(g);
  const auto& fh = fingerprint(h);
  if (fg != fh) return std::nullopt;

  if (g.is_trivial()) return IsoCertificate{GroupHom(g, h, std::vector<Permutation>(g.generators().size(), h.identity())), fg, fh};

  auto phi = IsoSearch(g, h).run();
  if (!phi) return std::nullopt;
  const auto& tg = g.elements();
  const auto& th = h.elements();
  std::vector<Permutation> images;
  for (const auto& s : g.generators()) images.push_back(th.element((*phi)[*tg.index_of(s)]));
  GroupHom forward(g, h, std::move(images));
  if (!forward.injective()) throw FalsificationAlarm("isomorphism search returned a non-injective map");
  return IsoCertificate{std::move(forward), fg, fh};
}

}  // namespace classlab
