#include "permsearch.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace z2z4had::detail {

namespace {

// column masks: for each coordinate, the set of codewords (as a 64-bit
// mask) having a 1 there
std::vector<std::uint64_t> column_masks(const BinaryCode& c) {
  std::vector<std::uint64_t> cols(c.n, 0);
  for (std::size_t w = 0; w < c.words.size(); ++w)
    for (std::size_t i = 0; i < c.n; ++i)
      if (c.words[w][i]) cols[i] |= std::uint64_t{1} << w;
  return cols;
}

// canonical coordinate profiles, computed jointly so the ids are
// comparable between the two codes
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> joint_profiles(
    const std::vector<std::uint64_t>& colS, const std::vector<std::uint64_t>& colT) {
  std::size_t n = colS.size();
  auto dist = [](const std::vector<std::uint64_t>& cols, std::size_t i, std::size_t j) {
    return static_cast<std::size_t>(std::popcount(cols[i] ^ cols[j]));
  };
  std::vector<std::size_t> pS(n), pT(n);
  {
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i) ids.emplace(std::popcount(colS[i]), 0);
    for (std::size_t i = 0; i < n; ++i) ids.emplace(std::popcount(colT[i]), 0);
    std::size_t next = 0;
    for (auto& kv : ids) kv.second = next++;
    for (std::size_t i = 0; i < n; ++i) pS[i] = ids[std::popcount(colS[i])];
    for (std::size_t i = 0; i < n; ++i) pT[i] = ids[std::popcount(colT[i])];
  }
  for (std::size_t round = 0; round < n; ++round) {
    using Key = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
    auto key_of = [&](const std::vector<std::uint64_t>& cols,
                      const std::vector<std::size_t>& prof, std::size_t i) {
      Key k;
      k.first = prof[i];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) k.second.emplace_back(prof[j], dist(cols, i, j));
      std::sort(k.second.begin(), k.second.end());
      return k;
    };
    std::map<Key, std::size_t> ids;
    std::vector<Key> kS(n), kT(n);
    for (std::size_t i = 0; i < n; ++i) ids.emplace(kS[i] = key_of(colS, pS, i), 0);
    for (std::size_t i = 0; i < n; ++i) ids.emplace(kT[i] = key_of(colT, pT, i), 0);
    std::size_t next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::size_t old_classes = 0;
    {
      std::vector<std::size_t> all = pS;
      all.insert(all.end(), pT.begin(), pT.end());
      std::sort(all.begin(), all.end());
      old_classes = static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
    }
    for (std::size_t i = 0; i < n; ++i) pS[i] = ids[kS[i]];
    for (std::size_t i = 0; i < n; ++i) pT[i] = ids[kT[i]];
    if (ids.size() == old_classes) break;  // stable
  }
  return {std::move(pS), std::move(pT)};
}

struct Group {
  std::uint64_t s, t;
};

struct Searcher {
  std::size_t n = 0;
  std::vector<std::uint64_t> colS, colT;
  std::vector<std::vector<std::size_t>> cand;  // per source coordinate
  bool find_all = false, store = false;
  PermSearchResult result;
  std::vector<std::size_t> img;
  std::vector<bool> used;
  // per-depth group storage; a partition of <= 64 codewords has <= 64 parts
  std::vector<std::vector<Group>> levels;
  bool stop = false;

  void dfs(std::size_t depth, std::size_t ngroups) {
    if (depth == n) {
      ++result.count;
      if (store) result.perms.push_back(CoordPerm{img});
      if (!find_all) stop = true;
      return;
    }
    const std::vector<Group>& cur = levels[depth];
    for (std::size_t t : cand[depth]) {
      if (used[t]) continue;
      std::uint64_t cs = colS[depth], ct = colT[t];
      bool ok = true;
      for (std::size_t g = 0; g < ngroups; ++g)
        if (std::popcount(cur[g].s & cs) != std::popcount(cur[g].t & ct)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::vector<Group>& next = levels[depth + 1];
      std::size_t m = 0;
      for (std::size_t g = 0; g < ngroups; ++g) {
        std::uint64_t in_s = cur[g].s & cs, in_t = cur[g].t & ct;
        if (in_s) next[m++] = Group{in_s, in_t};
        std::uint64_t out_s = cur[g].s & ~cs, out_t = cur[g].t & ~ct;
        if (out_s) next[m++] = Group{out_s, out_t};
      }
      used[t] = true;
      img[depth] = t;
      dfs(depth + 1, m);
      used[t] = false;
      if (stop) return;
    }
  }
};

}  // namespace

PermSearchResult perm_search(const BinaryCode& src, const BinaryCode& tgt,
                             bool find_all, bool store,
                             const std::vector<std::size_t>* src_classes,
                             const std::vector<std::size_t>* tgt_classes) {
  if (src.n != tgt.n) throw std::invalid_argument("perm_search: length mismatch");
  if (src.n > 64) throw std::invalid_argument("perm_search: length above 64");
  if (src.words.size() > 64) throw std::invalid_argument("perm_search: more than 64 codewords");
  if ((src_classes == nullptr) != (tgt_classes == nullptr))
    throw std::invalid_argument("perm_search: classes must be given for both sides");
  if (src.words.size() != tgt.words.size()) return {};

  Searcher se;
  se.n = src.n;
  se.colS = column_masks(src);
  se.colT = column_masks(tgt);
  se.find_all = find_all;
  se.store = store;
  auto [pS, pT] = joint_profiles(se.colS, se.colT);
  se.cand.resize(se.n);
  for (std::size_t i = 0; i < se.n; ++i)
    for (std::size_t t = 0; t < se.n; ++t) {
      if (pS[i] != pT[t]) continue;
      if (src_classes && (*src_classes)[i] != (*tgt_classes)[t]) continue;
      se.cand[i].push_back(t);
    }
  se.img.assign(se.n, 0);
  se.used.assign(se.n, false);
  se.levels.assign(se.n + 1, std::vector<Group>(std::max<std::size_t>(2 * src.words.size(), 2)));
  std::uint64_t all = src.words.size() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << src.words.size()) - 1;
  se.levels[0][0] = Group{all, all};
  se.dfs(0, src.words.empty() ? 0 : 1);
  return std::move(se.result);
}

}  // namespace z2z4had::detail
