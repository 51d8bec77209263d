#include "cif/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cif/error.hpp"

namespace cif {

namespace {

Mask relabel(Mask m, const std::vector<Mask>& image_bit) {
  Mask out = 0;
  for (; m != 0; m &= m - 1) out |= image_bit[static_cast<std::size_t>(std::countr_zero(m))];
  return out;
}

}  // namespace

CanonicalKey canonical_form(std::span<const Family> fams) {
  if (fams.empty()) throw std::invalid_argument("canonical_form of an empty tuple");
  const int n = fams.front().n();
  for (const Family& f : fams) {
    if (f.n() != n) throw std::invalid_argument("canonical_form: ground-set mismatch");
  }
  if (n > kMaxCanonicalN) {
    throw CapExceeded("canonicalization capped at n=" + std::to_string(kMaxCanonicalN));
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> image_bit(static_cast<std::size_t>(n));
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cur;
  std::vector<Mask> scratch;
  do {
    for (int i = 0; i < n; ++i) image_bit[static_cast<std::size_t>(i)] = Mask{1} << perm[static_cast<std::size_t>(i)];
    cur.clear();
    cur.push_back(static_cast<std::uint32_t>(n));
    for (const Family& f : fams) {
      cur.push_back(static_cast<std::uint32_t>(f.k()));
      cur.push_back(static_cast<std::uint32_t>(f.size()));
      scratch.clear();
      for (Mask m : f.members()) scratch.push_back(relabel(m, image_bit));
      std::sort(scratch.begin(), scratch.end());
      cur.insert(cur.end(), scratch.begin(), scratch.end());
    }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalKey{std::move(best)};
}

std::string CanonicalKey::to_text() const {
  if (words.empty()) return {};
  const int n = static_cast<int>(words[0]);
  std::string out;
  std::size_t i = 1;
  while (i + 1 < words.size()) {
    const int k = static_cast<int>(words[i]);
    const std::size_t sz = words[i + 1];
    std::vector<Mask> ms(words.begin() + static_cast<std::ptrdiff_t>(i + 2),
                         words.begin() + static_cast<std::ptrdiff_t>(i + 2 + sz));
    if (!out.empty()) out += " | ";
    out += cif::to_text(Family(n, k, std::move(ms)));
    i += 2 + sz;
  }
  return out;
}

std::vector<Family> permute_families(std::span<const Family> fams, std::span<const int> perm) {
  std::vector<Family> out;
  for (const Family& f : fams) {
    if (static_cast<int>(perm.size()) != f.n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Mask> image_bit(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) image_bit[i] = Mask{1} << (perm[i] - 1);
    std::vector<Mask> ms;
    for (Mask m : f.members()) ms.push_back(relabel(m, image_bit));
    out.emplace_back(f.n(), f.k(), std::move(ms));
  }
  return out;
}

}  // namespace cif
