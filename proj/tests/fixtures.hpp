#pragma once
// Expected generator, kernel, and coset representative matrices for the two
// worked parameter sets (1,2) and (0,3), written in display order: binary
// part by point index, then quaternary pairs grouped by macroblock label
// with representatives ascending inside each group.

#include "z2z4had/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace fixtures {

using namespace z2z4had;

inline std::vector<std::size_t> display_pairs(const PointLayout& L) {
  std::vector<std::size_t> order(L.pair_rep.size());
  std::iota(order.begin(), order.end(), 0);
  auto label = [&](std::size_t j) {
    const GroupPoint& p = L.points[L.pair_rep[j]];
    std::size_t l = 0;
    for (Quat q : p.y) l = l * 2 + (q & 1);
    return l;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return label(a) < label(b); });
  return order;
}

inline std::string display_row(const BinaryWord& flat, const PointLayout& L,
                               const std::vector<std::size_t>& pairs) {
  MixedWord w = L.to_mixed(flat);
  std::string s;
  for (std::size_t i = 0; i < w.alpha; ++i) s += char('0' + w.bits[i]);
  s += '|';
  for (std::size_t j : pairs) s += char('0' + w.quats[j]);
  return s;
}

// G is printed as y, the v rows, then the u rows; K and S already build in
// their printed order.
inline std::vector<BinaryWord> g_display_order(const GeneratorMatrices& gm) {
  std::vector<BinaryWord> rows;
  rows.push_back(gm.y);
  for (const BinaryWord& v : gm.v) rows.push_back(v);
  for (const BinaryWord& u : gm.u) rows.push_back(u);
  return rows;
}

inline std::vector<std::string> render(const std::vector<BinaryWord>& rows, const PointLayout& L) {
  std::vector<std::size_t> pairs = display_pairs(L);
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const BinaryWord& r : rows) out.push_back(display_row(r, L, pairs));
  return out;
}

inline const std::vector<std::string> kG12 = {
    "11111111|222222222222",
    "00110011|020211111111",
    "01010101|111102021313",
    "00001111|002200220022",
};

inline const std::vector<std::string> kK12 = {
    "11111111|222222222222",
    "00000000|000022222222",
    "00000000|222200002222",
    "00001111|002200220022",
};

inline const std::vector<std::string> kS12 = {
    "00000000|000000000000",
    "00110011|020211111111",
    "01010101|111102021313",
    "01100110|131313132020",
};

inline const std::vector<std::string> kG03 = {
    "11111111|" + std::string(28, '2'),
    "00001111|0022002200221111111111111111",
    "00110011|0202111111110022002211331133",
    "01010101|1111020213130202131302021313",
};

inline const std::vector<std::string> kK03 = {
    "11111111|" + std::string(28, '2'),
    "00000000|0000000000002222222222222222",
    "00000000|0000222222220000000022222222",
    "00000000|2222000022220000222200002222",
};

inline const std::vector<std::string> kS03 = {
    "00000000|" + std::string(28, '0'),
    "00001111|0022002200221111111111111111",
    "00110011|0202111111110022002211331133",
    "00111100|0220113311331133113322002200",
    "01010101|1111020213130202131302021313",
    "01011010|1133022013311313202013132020",
    "01100110|1313131320200220133113312002",
    "01101001|1331133120021331200220023113",
};

}  // namespace fixtures
