#include "logcy/divisor.hpp"

#include <algorithm>

#include "logcy/errors.hpp"

namespace logcy {

SphereCycle::SphereCycle(std::vector<Integer> seq) : seq_(std::move(seq)) {
  if (seq_.size() < 2) throw MalformedInput("a sphere cycle needs at least 2 components");
}

SphereCycle::SphereCycle(std::initializer_list<long> seq) {
  seq_.reserve(seq.size());
  for (long v : seq) seq_.emplace_back(v);
  if (seq_.size() < 2) throw MalformedInput("a sphere cycle needs at least 2 components");
}

bool operator<(const SphereCycle& a, const SphereCycle& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.seq_.begin(), a.seq_.end(), b.seq_.begin(), b.seq_.end());
}

std::vector<Integer> Divisor::self_intersections() const {
  if (is_torus()) return {torus().s};
  return cycle().entries();
}

IntMatrix intersection_matrix(const Divisor& d) {
  if (d.is_torus()) {
    IntMatrix m(1, 1);
    m(0, 0) = d.torus().s;
    return m;
  }
  const auto& c = d.cycle();
  const std::size_t k = c.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = c[i];
  if (k == 2) {
    m(0, 1) = 2;
    m(1, 0) = 2;
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + 1) % k;
      m(i, j) = 1;
      m(j, i) = 1;
    }
  }
  return m;
}

Descriptors descriptors(const Divisor& d) {
  Descriptors out;
  out.length = d.length();
  if (d.is_torus()) {
    out.s_total = d.torus().s;
    out.nonnegative = d.torus().s >= 0 ? 1 : 0;
    return out;
  }
  for (const auto& s : d.cycle().entries()) {
    out.s_total += s + 2;
    if (s >= 0) ++out.nonnegative;
  }
  return out;
}

namespace {

// Compares image(m1) with image(m2) without materializing either.
int compare_images(const std::vector<Integer>& src, const DihedralMap& m1, const DihedralMap& m2) {
  const std::size_t k = src.size();
  for (std::size_t j = 0; j < k; ++j) {
    const int c = cmp(src[m1.source_index(j, k)], src[m2.source_index(j, k)]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

DihedralMap canonical_map(const SphereCycle& c) {
  const auto& src = c.entries();
  DihedralMap best{0, false};
  for (std::size_t start = 0; start < src.size(); ++start) {
    for (bool rev : {false, true}) {
      const DihedralMap m{start, rev};
      if (compare_images(src, m, best) < 0) best = m;
    }
  }
  return best;
}

SphereCycle canonical_form(const SphereCycle& c) {
  const DihedralMap m = canonical_map(c);
  return SphereCycle(m.apply(std::span<const Integer>(c.entries())));
}

Divisor canonical_form(const Divisor& d) {
  if (d.is_torus()) return d;
  return canonical_form(d.cycle());
}

SphereCycle rotate(const SphereCycle& c, std::size_t shift) {
  const DihedralMap m{shift % c.size(), false};
  return SphereCycle(m.apply(std::span<const Integer>(c.entries())));
}

SphereCycle reverse(const SphereCycle& c) {
  return SphereCycle(DihedralMap{0, true}.apply(std::span<const Integer>(c.entries())));
}

bool is_toric_minimal(const SphereCycle& c) {
  return std::none_of(c.entries().begin(), c.entries().end(), [](const Integer& s) { return s == -1; });
}

}  // namespace logcy
