#include "sympgrass/monw.hpp"

#include <algorithm>
#include <functional>

#include "sympgrass/errors.hpp"

namespace sympgrass {

namespace {

void require_below(const IndexSet& v, const IndexSet& w) {
  if (!leq(v, w)) throw InputError("mon_w: need v <= w, got v=" + v.str() + " w=" + w.str());
}

}  // namespace

GridMonomial mon_w(const IndexSet& v, const IndexSet& w) {
  require_below(v, w);
  std::vector<int> open;
  std::vector<GridPoint> points;
  for (int j = 1; j <= v.n(); ++j) {
    const bool in_v = v.contains(j);
    const bool in_w = w.contains(j);
    if (in_v && !in_w) {
      open.push_back(j);
    } else if (in_w && !in_v) {
      ensure(!open.empty(), "mon_w: unmatched row although v <= w");
      points.push_back({j, open.back()});
      open.pop_back();
    }
  }
  ensure(open.empty(), "mon_w: unmatched column although v <= w");
  return GridMonomial::square_free(v, Ground::PosA, points);
}

bool satisfies_condition_b(std::span<const GridPoint> points) {
  for (GridPoint a : points) {
    for (GridPoint b : points) {
      if (a.r < b.r && !(b.c < a.c || a.r < b.c)) return false;
    }
  }
  return true;
}

std::vector<std::vector<GridPoint>> matchings_satisfying_abc(const IndexSet& v, const IndexSet& w) {
  require_below(v, w);
  const std::vector<int> rows = set_difference(w, v);
  const std::vector<int> cols = set_difference(v, w);
  std::vector<std::vector<GridPoint>> found;
  std::vector<GridPoint> points;
  std::vector<bool> used(cols.size(), false);
  // A and C hold for any bijection rows -> cols; B is checked pairwise as
  // each row is assigned, which prunes without losing any matching.
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == rows.size()) {
      auto sorted = points;
      std::sort(sorted.begin(), sorted.end());
      found.push_back(std::move(sorted));
      return;
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const GridPoint p{rows[i], cols[k]};
      if (used[k] || !in_pos_a(v, p)) continue;
      points.push_back(p);
      if (satisfies_condition_b(points)) {
        used[k] = true;
        assign(i + 1);
        used[k] = false;
      }
      points.pop_back();
    }
  };
  assign(0);
  return found;
}

GridMonomial mon_w_reference(const IndexSet& v, const IndexSet& w) {
  auto found = matchings_satisfying_abc(v, w);
  ensure(found.size() == 1, "mon_w: expected exactly one matching satisfying A-C for v=" + v.str() +
                                " w=" + w.str() + ", found " + std::to_string(found.size()));
  return GridMonomial::square_free(v, Ground::PosA, found.front());
}

}  // namespace sympgrass
