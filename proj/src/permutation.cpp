#include "classlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "classlab/errors.hpp"

namespace classlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw PreconditionError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_images_unchecked(std::span<const Point> images) {
  Permutation p;
  p.images_.assign(images.begin(), images.end());
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree) throw PreconditionError("cycle point exceeds degree");
      if (used[x]) throw PreconditionError("point repeated across cycles");
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

Point Permutation::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ' ';
      os << cycle[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::embedded(std::size_t total_degree, std::size_t shift) const {
  if (shift + degree() > total_degree) throw PreconditionError("embedding exceeds degree");
  Permutation p(total_degree);
  for (std::size_t i = 0; i < degree(); ++i)
    p.images_[shift + i] = static_cast<Point>(shift + images_[i]);
  return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw PreconditionError("degree mismatch in product");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < q.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& g) { return g * p * g.inverse(); }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a * b * a.inverse() * b.inverse();
}

namespace {

class CycleLexer {
 public:
  explicit CycleLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError("expected '" + std::string(1, c) + "' in cycle text \"" +
                       std::string(text_) + "\"");
    ++pos_;
  }
  std::size_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("point index too large");
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a point in cycle text \"" + std::string(text_) + "\"");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::vector<std::size_t>> lex_cycles(std::string_view text) {
  CycleLexer lex(text);
  std::vector<std::vector<std::size_t>> cycles;
  if (lex.done()) throw ParseError("empty cycle text");
  while (!lex.done()) {
    lex.expect('(');
    std::vector<std::size_t> cycle;
    while (lex.peek() != ')') {
      if (lex.done()) throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      std::size_t pt = lex.number();
      if (pt == 0) throw ParseError("cycle points are 1-based");
      cycle.push_back(pt);
      if (lex.peek() == ',') lex.expect(',');
    }
    lex.expect(')');
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  auto raw = lex_cycles(text);
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  for (const auto& c : raw) {
    std::vector<Point> cycle;
    for (std::size_t pt : c) {
      if (pt > degree)
        throw ParseError("point " + std::to_string(pt) + " exceeds degree " + std::to_string(degree));
      if (used[pt - 1]) throw ParseError("point " + std::to_string(pt) + " repeated in \"" + std::string(text) + "\"");
      used[pt - 1] = true;
      cycle.push_back(static_cast<Point>(pt - 1));
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t max_point_in_cycles(std::string_view text) {
  std::size_t m = 0;
  for (const auto& c : lex_cycles(text))
    for (std::size_t pt : c) m = std::max(m, pt);
  return m;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace classlab
