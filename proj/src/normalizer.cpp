#include <vector>

#include "classlab/structure.hpp"

namespace classlab {

namespace {

struct ScanInput {
  const ElementTable& table;
  Bits h_bits;
  std::vector<std::uint32_t> h_gens;
};

ScanInput prepare(const PermGroup& g, const PermGroup& h) {
  const auto& table = g.elements();
  ScanInput in{table, element_bits(g, h), {}};
  for (const auto& s : h.generators()) in.h_gens.push_back(*table.index_of(s));
  return in;
}

bool normalizes(const ScanInput& in, std::uint32_t x) {
  for (std::uint32_t s : in.h_gens)
    if (!in.h_bits.test(in.table.conj(s, x))) return false;
  return true;
}

}  // namespace

Bits normalizer_bits_serial(const PermGroup& g, const PermGroup& h) {
  ScanInput in = prepare(g, h);
  Bits out(in.table.size());
  for (std::uint32_t x = 0; x < in.table.size(); ++x)
    if (normalizes(in, x)) out.set(x);
  return out;
}

Bits normalizer_bits(const PermGroup& g, const PermGroup& h) {
  ScanInput in = prepare(g, h);
  const auto n = static_cast<std::int64_t>(in.table.size());
  std::vector<char> flags(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t x = 0; x < n; ++x) flags[static_cast<std::size_t>(x)] = normalizes(in, static_cast<std::uint32_t>(x));
  Bits out(in.table.size());
  for (std::int64_t x = 0; x < n; ++x)
    if (flags[static_cast<std::size_t>(x)]) out.set(static_cast<std::size_t>(x));
  return out;
}

}  // namespace classlab
