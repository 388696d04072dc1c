#include "z2z4had/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace z2z4had {

namespace {

// codewords packed into 64-bit limbs for distance and membership work
struct PackedWords {
  std::size_t n = 0, limbs = 0;
  std::vector<std::uint64_t> data;  // row-major, words in the source order

  std::size_t count() const { return limbs == 0 ? 0 : data.size() / limbs; }
  const std::uint64_t* row(std::size_t i) const { return data.data() + i * limbs; }
};

PackedWords pack(const std::vector<BinaryWord>& words, std::size_t n) {
  PackedWords p;
  p.n = n;
  p.limbs = (n + 63) / 64;
  p.data.assign(words.size() * p.limbs, 0);
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t i = 0; i < n; ++i)
      if (words[w][i]) p.data[w * p.limbs + i / 64] |= std::uint64_t{1} << (i % 64);
  return p;
}

bool packed_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t limbs) {
  return std::lexicographical_compare(a, a + limbs, b, b + limbs);
}

// sorted row-index view for O(log) membership
struct PackedSet {
  const PackedWords* pw;
  std::vector<std::size_t> order;

  explicit PackedSet(const PackedWords& p) : pw(&p) {
    order.resize(p.count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return packed_less(p.row(a), p.row(b), p.limbs);
    });
  }
  bool contains(const std::uint64_t* key) const {
    std::size_t lo = 0, hi = order.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (packed_less(pw->row(order[mid]), key, pw->limbs))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < order.size() && std::equal(key, key + pw->limbs, pw->row(order[lo]));
  }
};

std::size_t packed_distance(const std::uint64_t* a, const std::uint64_t* b, std::size_t limbs) {
  std::size_t d = 0;
  for (std::size_t l = 0; l < limbs; ++l) d += static_cast<std::size_t>(std::popcount(a[l] ^ b[l]));
  return d;
}

}  // namespace

bool is_hadamard(const BinaryCode& c) {
  if (c.n == 0 || c.n % 2 != 0) return false;
  if (c.words.size() != 2 * c.n) return false;
  PackedWords p = pack(c.words, c.n);
  std::size_t min_nonzero = c.n + 1;
  for (std::size_t i = 0; i < p.count(); ++i)
    for (std::size_t j = i + 1; j < p.count(); ++j) {
      std::size_t d = packed_distance(p.row(i), p.row(j), p.limbs);
      if (d != 0 && d < min_nonzero) min_nonzero = d;
    }
  return min_nonzero == c.n / 2;
}

std::vector<std::size_t> distance_spectrum(const BinaryCode& c) {
  PackedWords p = pack(c.words, c.n);
  std::vector<std::size_t> ds;
  for (std::size_t i = 0; i < p.count(); ++i)
    for (std::size_t j = i; j < p.count(); ++j)
      ds.push_back(packed_distance(p.row(i), p.row(j), p.limbs));
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return ds;
}

BinaryCode kernel_of(const BinaryCode& c) {
  if (!c.contains(BinaryWord(c.n, 0)))
    throw std::invalid_argument("kernel_of: code does not contain the zero word");
  PackedWords p = pack(c.words, c.n);
  PackedSet set(p);
  std::vector<BinaryWord> kernel;
  std::vector<std::uint64_t> tmp(p.limbs);
  for (std::size_t i = 0; i < p.count(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < p.count() && ok; ++j) {
      for (std::size_t l = 0; l < p.limbs; ++l) tmp[l] = p.row(i)[l] ^ p.row(j)[l];
      ok = set.contains(tmp.data());
    }
    if (ok) kernel.push_back(c.words[i]);
  }
  return make_binary_code(c.n, std::move(kernel));
}

BinaryCode kernel_via_star(const BinaryCode& c, const CodeType& t) {
  if (c.n != t.length()) throw std::invalid_argument("kernel_via_star: type mismatch");
  BinaryWord zero(c.n, 0);
  std::vector<BinaryWord> kernel;
  for (const BinaryWord& w : c.words)
    if (star(w, w, t) == zero) kernel.push_back(w);
  return make_binary_code(c.n, std::move(kernel));
}

namespace {

// incremental GF(2) elimination over packed rows
struct Gf2Basis {
  std::size_t limbs;
  std::vector<std::vector<std::uint64_t>> rows;  // reduced, with distinct pivots
  std::vector<std::size_t> pivots;

  explicit Gf2Basis(std::size_t n) : limbs((n + 63) / 64) {}

  // returns true when the row was independent and has been added
  bool add(std::vector<std::uint64_t> r) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::size_t pl = pivots[k] / 64, pb = pivots[k] % 64;
      if ((r[pl] >> pb) & 1)
        for (std::size_t l = 0; l < limbs; ++l) r[l] ^= rows[k][l];
    }
    for (std::size_t l = 0; l < limbs; ++l)
      if (r[l]) {
        pivots.push_back(l * 64 + static_cast<std::size_t>(std::countr_zero(r[l])));
        rows.push_back(std::move(r));
        return true;
      }
    return false;
  }
};

std::vector<std::uint64_t> pack_one(const BinaryWord& w) {
  std::vector<std::uint64_t> r((w.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) r[i / 64] |= std::uint64_t{1} << (i % 64);
  return r;
}

}  // namespace

std::size_t gf2_dim(const std::vector<BinaryWord>& rows) {
  if (rows.empty()) return 0;
  Gf2Basis basis(rows[0].size());
  for (const BinaryWord& w : rows) basis.add(pack_one(w));
  return basis.rows.size();
}

std::vector<BinaryWord> gf2_span(const std::vector<BinaryWord>& rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<BinaryWord> independent;
  {
    Gf2Basis basis(n == 0 ? 1 : n);
    for (const BinaryWord& w : rows)
      if (basis.add(pack_one(w))) independent.push_back(w);
  }
  std::vector<BinaryWord> span;
  span.reserve(std::size_t{1} << independent.size());
  span.push_back(BinaryWord(n, 0));
  for (const BinaryWord& b : independent) {
    std::size_t cur = span.size();
    for (std::size_t i = 0; i < cur; ++i) {
      BinaryWord w = span[i];
      for (std::size_t k = 0; k < n; ++k) w[k] ^= b[k];
      span.push_back(std::move(w));
    }
  }
  std::sort(span.begin(), span.end());
  return span;
}

std::size_t rank_of(const BinaryCode& c) { return gf2_dim(c.words); }

std::vector<BinaryWord> span_basis_words(const ConstructedCode& code) {
  GeneratorMatrices M = build_GKS(code);
  std::vector<BinaryWord> rows;
  rows.push_back(M.y);
  std::size_t skip = code.family == Family::B ? 1 : 0;  // w of the constant generator is y
  for (std::size_t j = skip; j < M.w.size(); ++j) rows.push_back(M.w[j]);
  for (std::size_t j = skip; j < M.w.size(); ++j)
    for (std::size_t j2 = j + 1; j2 < M.w.size(); ++j2) {
      BinaryWord prod(M.y.size());
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = M.w[j][i] & M.w[j2][i];
      rows.push_back(std::move(prod));
    }
  for (const BinaryWord& r : M.u) rows.push_back(r);
  for (const BinaryWord& r : M.v) rows.push_back(r);
  return rows;
}

Partition partition_from_columns(const std::vector<BinaryWord>& rows, std::size_t n) {
  Partition part;
  part.n = n;
  part.class_of.assign(n, 0);
  std::map<std::vector<Bit>, std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Bit> key;
    key.reserve(rows.size());
    for (const BinaryWord& r : rows) key.push_back(r[i]);
    auto [it, inserted] = ids.try_emplace(std::move(key), ids.size());
    part.class_of[i] = it->second;
  }
  part.num_classes = ids.size();
  // renumber in first-appearance order
  std::vector<std::size_t> remap(part.num_classes, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (remap[part.class_of[i]] == SIZE_MAX) remap[part.class_of[i]] = next++;
    part.class_of[i] = remap[part.class_of[i]];
  }
  return part;
}

std::pair<Partition, Partition> block_partition(const ConstructedCode& code) {
  GeneratorMatrices M = build_GKS(code);
  std::size_t n = code.layout.flat_length();
  Partition blocks = partition_from_columns(M.K, n);
  std::vector<BinaryWord> wrows;
  std::size_t skip = code.family == Family::B ? 1 : 0;
  for (std::size_t j = skip; j < M.w.size(); ++j) wrows.push_back(M.w[j]);
  Partition macro = partition_from_columns(wrows, n);
  return {std::move(blocks), std::move(macro)};
}

bool partition_preserved(const Partition& part, const CoordPerm& p) {
  if (p.size() != part.n) return false;
  // the image of class k must be exactly one class of equal size
  std::vector<std::size_t> size(part.num_classes, 0);
  for (std::size_t c : part.class_of) ++size[c];
  std::vector<std::size_t> image_class(part.num_classes, SIZE_MAX);
  for (std::size_t i = 0; i < part.n; ++i) {
    std::size_t src = part.class_of[i], dst = part.class_of[p.img[i]];
    if (image_class[src] == SIZE_MAX) {
      if (size[src] != size[dst]) return false;
      image_class[src] = dst;
    } else if (image_class[src] != dst) {
      return false;
    }
  }
  return true;
}

Signature signature_of(const BinaryCode& c) {
  Signature s;
  s.n = c.n;
  s.size = c.words.size();
  s.rank = rank_of(c);
  s.kernel_dim = gf2_dim(kernel_of(c).words);
  return s;
}

}  // namespace z2z4had
