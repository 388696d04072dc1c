#include "z2z4had/equiv.hpp"

#include "permsearch.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2z4had {

CoordPerm b_to_c_permutation(std::size_t gamma, std::size_t delta_dot) {
  Domain src{gamma, delta_dot};
  Domain dst{gamma + 1, delta_dot};
  CoordPerm p;
  p.img.resize(2 * src.size());
  for (std::size_t idx = 0; idx < src.size(); ++idx) {
    GroupPoint v = point_at(src, idx);
    auto embed = [&](const GroupPoint& q, Bit e) {
      GroupPoint out;
      out.x = q.x;
      out.x.push_back(e);
      out.y = q.y;
      return point_index(out);
    };
    p.img[2 * idx] = embed(negate_point(v), 1);
    p.img[2 * idx + 1] = embed(v, 0);
  }
  return p;
}

BinaryCode apply_coord_perm(const BinaryCode& c, const CoordPerm& p) {
  if (p.size() != c.n) throw std::invalid_argument("apply_coord_perm: size mismatch");
  std::vector<BinaryWord> words;
  words.reserve(c.words.size());
  for (const BinaryWord& w : c.words) words.push_back(apply_perm(w, p));
  return make_binary_code(c.n, std::move(words));
}

std::vector<ClassificationRow> classify(std::size_t t, std::size_t t_cap) {
  if (t < 3) throw std::invalid_argument("classify: t must be at least 3");
  if (t > t_cap) throw std::invalid_argument("classify: t above the configured cap");
  std::vector<ClassificationRow> rows;
  std::vector<Signature> seen;
  for (std::size_t delta = 0; delta <= t / 2; ++delta) {
    ClassificationRow row;
    row.t = t;
    row.delta = delta;
    row.gamma_dot = t - 2 * delta;
    ConstructedCode code = build_C(row.gamma_dot, delta);
    row.type = code.type;
    row.sig = signature_of(code.bin);
    auto it = std::find(seen.begin(), seen.end(), row.sig);
    if (it == seen.end()) {
      row.class_id = seen.size();
      seen.push_back(row.sig);
    } else {
      row.class_id = static_cast<std::size_t>(it - seen.begin());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::size_t count_classes(const std::vector<ClassificationRow>& rows) {
  std::size_t classes = 0;
  for (const ClassificationRow& r : rows) classes = std::max(classes, r.class_id + 1);
  return classes;
}

std::optional<CoordPerm> search_equivalence(const BinaryCode& c1, const BinaryCode& c2,
                                            std::size_t n_max) {
  if (c1.n != c2.n) return std::nullopt;
  if (c1.n > n_max) throw std::invalid_argument("search_equivalence: length above n_max");
  if (c1.words.size() != c2.words.size()) return std::nullopt;
  detail::PermSearchResult res = detail::perm_search(c1, c2, /*find_all=*/false, /*store=*/true);
  if (res.count == 0) return std::nullopt;
  CoordPerm p = res.perms.front();
  if (!(apply_coord_perm(c1, p) == c2))
    throw std::logic_error("search_equivalence: witness failed re-verification");
  return p;
}

}  // namespace z2z4had
