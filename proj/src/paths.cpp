#include "sympgrass/paths.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "sympgrass/errors.hpp"
#include "sympgrass/monw.hpp"

namespace sympgrass {

namespace {

int next_row(const IndexSet& v, int r) {
  for (int j = r + 1; j <= v.n(); ++j) {
    if (!v.contains(j)) return j;
  }
  return 0;
}

int next_col(const IndexSet& v, int c) {
  for (int j = c + 1; j <= v.n(); ++j) {
    if (v.contains(j)) return j;
  }
  return 0;
}

// Grid occupancy indexed by (r, c).
class Occupancy {
 public:
  explicit Occupancy(int n) : n_(n), cells_((n + 1) * (n + 1), 0) {}

  bool free(const LatticePath& path) const {
    return std::none_of(path.begin(), path.end(), [&](GridPoint p) { return cells_[index(p)]; });
  }
  void set(const LatticePath& path, char value) {
    for (GridPoint p : path) cells_[index(p)] = value;
  }

 private:
  std::size_t index(GridPoint p) const { return static_cast<std::size_t>(p.r * (n_ + 1) + p.c); }

  int n_;
  std::vector<char> cells_;
};

std::vector<GridPoint> sorted_points(LatticePath path) {
  std::sort(path.begin(), path.end());
  return path;
}

struct Slot {
  std::size_t index;                // source handled here
  std::optional<std::size_t> twin;  // its mirror source, filled in alongside
  std::vector<LatticePath> candidates;
};

}  // namespace

PathEndpoints endpoints(const IndexSet& v, GridPoint beta) {
  if (!in_pos_a(v, beta)) throw InputError("endpoints: " + to_string(beta) + " is not a PosA point");
  PathEndpoints out{beta, beta};
  for (int r = beta.c + 1; r <= beta.r; ++r) {
    if (!v.contains(r)) {
      out.start = {r, beta.c};
      break;
    }
  }
  for (int c = beta.r - 1; c >= beta.c; --c) {
    if (v.contains(c)) {
      out.finish = {beta.r, c};
      break;
    }
  }
  return out;
}

std::vector<LatticePath> lattice_paths(const IndexSet& v, GridPoint start, GridPoint finish) {
  if (!in_pos_a(v, start) || !in_pos_a(v, finish)) throw InputError("lattice_paths: endpoints must lie in PosA");
  std::vector<LatticePath> out;
  LatticePath current{start};
  std::function<void(GridPoint)> walk = [&](GridPoint p) {
    if (p == finish) {
      out.push_back(current);
      return;
    }
    const int r = next_row(v, p.r);
    if (r != 0 && r <= finish.r) {
      current.push_back({r, p.c});
      walk(current.back());
      current.pop_back();
    }
    const int c = next_col(v, p.c);
    if (c != 0 && c <= finish.c && c < p.r) {
      current.push_back({p.r, c});
      walk(current.back());
      current.pop_back();
    }
  };
  walk(start);
  return out;
}

bool satisfies_length_identity(const IndexSet& v, const LatticePath& path) {
  if (path.empty()) return false;
  const GridPoint a = path.front();
  const GridPoint b = path.back();
  int expected = -1;
  for (int j = a.r; j <= b.r; ++j) expected += v.contains(j) ? 0 : 1;
  for (int j = a.c; j <= b.c; ++j) expected += v.contains(j) ? 1 : 0;
  return static_cast<int>(path.size()) == expected;
}

LatticePath mirror_path(const LatticePath& path, int d) {
  LatticePath out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(mirror_point(*it, d));
  return out;
}

bool is_nonintersecting(const PathSystem& system) {
  std::vector<GridPoint> all;
  for (const auto& path : system.paths) all.insert(all.end(), path.begin(), path.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool is_symmetric(const PathSystem& system, int d) {
  for (std::size_t j = 0; j < system.sources.size(); ++j) {
    for (std::size_t k = 0; k < system.sources.size(); ++k) {
      if (system.sources[j] != mirror_point(system.sources[k], d)) continue;
      if (sorted_points(system.paths[j]) != sorted_points(mirror_path(system.paths[k], d))) return false;
    }
  }
  return true;
}

std::vector<PathSystem> enumerate_path_systems(const IsotropicSignature& v, const IsotropicSignature& w,
                                               bool symmetric) {
  const int d = v.d();
  std::vector<GridPoint> sources = mon_w(v, w).support();
  std::stable_sort(sources.begin(), sources.end(), [&](GridPoint a, GridPoint b) {
    return endpoints(v, a).start.c < endpoints(v, b).start.c;
  });

  std::vector<Slot> slots;
  std::vector<bool> covered(sources.size(), false);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (covered[i]) continue;
    Slot slot{i, std::nullopt, {}};
    const GridPoint image = mirror_point(sources[i], d);
    if (symmetric && image != sources[i]) {
      const auto it = std::find(sources.begin(), sources.end(), image);
      ensure(it != sources.end(), "mon_w is not #-stable for w = w#");
      slot.twin = static_cast<std::size_t>(it - sources.begin());
      covered[*slot.twin] = true;
    }
    covered[i] = true;
    const PathEndpoints ends = endpoints(v, sources[i]);
    for (auto& path : lattice_paths(v, ends.start, ends.finish)) {
      if (symmetric && image == sources[i] && sorted_points(mirror_path(path, d)) != sorted_points(path)) continue;
      slot.candidates.push_back(std::move(path));
    }
    slots.push_back(std::move(slot));
  }

  std::vector<PathSystem> out;
  std::vector<LatticePath> chosen(sources.size());
  Occupancy occupied(2 * d);
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == slots.size()) {
      out.push_back({sources, chosen});
      return;
    }
    const Slot& slot = slots[k];
    for (const LatticePath& path : slot.candidates) {
      if (!occupied.free(path)) continue;
      occupied.set(path, 1);
      chosen[slot.index] = path;
      if (slot.twin) {
        LatticePath image = mirror_path(path, d);
        if (occupied.free(image)) {
          occupied.set(image, 1);
          chosen[*slot.twin] = image;
          place(k + 1);
          occupied.set(image, 0);
        }
      } else {
        place(k + 1);
      }
      occupied.set(path, 0);
    }
  };
  place(0);
  return out;
}

BigInt count_path_systems(const IsotropicSignature& v, const IsotropicSignature& w, bool symmetric) {
  return BigInt(enumerate_path_systems(v, w, symmetric).size());
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "svg") return RenderFormat::Svg;
  if (name == "ascii") return RenderFormat::Ascii;
  throw InputError("unknown render format \"" + std::string(name) + "\" (expected svg or ascii)");
}

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 24;
constexpr int kPanelsPerRow = 5;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

struct Layout {
  std::vector<int> cols;  // v ascending
  std::vector<int> rows;  // [2d] \ v ascending

  explicit Layout(const IndexSet& v) {
    for (int j = 1; j <= v.n(); ++j) (v.contains(j) ? cols : rows).push_back(j);
  }
  int col_of(int c) const { return static_cast<int>(std::find(cols.begin(), cols.end(), c) - cols.begin()); }
  int row_of(int r) const { return static_cast<int>(std::find(rows.begin(), rows.end(), r) - rows.begin()); }
};

void svg_panel(std::ostringstream& os, const IsotropicSignature& v, const Layout& layout,
               const std::vector<GridPoint>& sources, const PathSystem* system, int ox, int oy) {
  const int d = v.d();
  const int size = d * kCell;
  auto cx = [&](int c) { return ox + layout.col_of(c) * kCell + kCell / 2; };
  auto cy = [&](int r) { return oy + layout.row_of(r) * kCell + kCell / 2; };
  os << "<rect x=\"" << ox << "\" y=\"" << oy << "\" width=\"" << size << "\" height=\"" << size
     << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  os << "<line x1=\"" << ox << "\" y1=\"" << oy + size << "\" x2=\"" << ox + size << "\" y2=\"" << oy
     << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
  for (int r : layout.rows) {
    for (int c : layout.cols) {
      if (r <= c) continue;
      os << "<circle cx=\"" << cx(c) << "\" cy=\"" << cy(r) << "\" r=\"2\" fill=\"#bbbbbb\"/>\n";
    }
  }
  if (system) {
    for (std::size_t i = 0; i < system->paths.size(); ++i) {
      const char* colour = kPalette[i % std::size(kPalette)];
      os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"3\" points=\"";
      for (std::size_t k = 0; k < system->paths[i].size(); ++k) {
        const GridPoint p = system->paths[i][k];
        os << (k ? " " : "") << cx(p.c) << ',' << cy(p.r);
      }
      os << "\"/>\n";
      const GridPoint s = system->paths[i].front();
      os << "<circle cx=\"" << cx(s.c) << "\" cy=\"" << cy(s.r) << "\" r=\"3.5\" fill=\"" << colour << "\"/>\n";
    }
  }
  for (GridPoint p : sources) {
    os << "<circle cx=\"" << cx(p.c) << "\" cy=\"" << cy(p.r) << "\" r=\"5\" fill=\"#000000\"/>\n";
  }
}

std::string render_svg(const IsotropicSignature& v, const std::vector<GridPoint>& sources,
                       std::span<const PathSystem> systems) {
  const Layout layout(v);
  const int d = v.d();
  const int panels = std::max<int>(1, static_cast<int>(systems.size()));
  const int across = std::min(panels, kPanelsPerRow);
  const int down = (panels + kPanelsPerRow - 1) / kPanelsPerRow;
  const int pitch = d * kCell + kMargin;
  const int width = across * pitch + kMargin;
  const int height = down * pitch + kMargin;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int k = 0; k < panels; ++k) {
    const int ox = kMargin + (k % kPanelsPerRow) * pitch;
    const int oy = kMargin + (k / kPanelsPerRow) * pitch;
    svg_panel(os, v, layout, sources, systems.empty() ? nullptr : &systems[k], ox, oy);
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const IsotropicSignature& v, const std::vector<GridPoint>& sources,
                         std::span<const PathSystem> systems) {
  const Layout layout(v);
  const int d = v.d();
  const std::size_t panels = std::max<std::size_t>(1, systems.size());
  std::ostringstream os;
  for (std::size_t k = 0; k < panels; ++k) {
    std::map<GridPoint, char> marks;
    if (!systems.empty()) {
      for (std::size_t i = 0; i < systems[k].paths.size(); ++i) {
        for (GridPoint p : systems[k].paths[i]) marks[p] = static_cast<char>('a' + i % 26);
      }
    }
    if (!systems.empty()) os << "system " << k + 1 << '/' << systems.size() << '\n';
    os << "    ";
    for (int c : layout.cols) os << (c < 10 ? "  " : " ") << c;
    os << '\n';
    for (int r : layout.rows) {
      os << (r < 10 ? "   " : "  ") << r;
      for (int c : layout.cols) {
        const GridPoint p{r, c};
        char ch = ' ';
        if (r > c) ch = on_diagonal(p, d) ? '/' : '.';
        if (auto it = marks.find(p); it != marks.end()) ch = it->second;
        if (std::find(sources.begin(), sources.end(), p) != sources.end()) {
          ch = marks.count(p) ? static_cast<char>(marks[p] - 'a' + 'A') : 'O';
        }
        os << "  " << ch;
      }
      os << '\n';
    }
    if (k + 1 < panels) os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render(const IsotropicSignature& v, const IsotropicSignature& w, std::span<const PathSystem> systems,
                   RenderFormat format) {
  const std::vector<GridPoint> sources = mon_w(v, w).support();
  for (const auto& system : systems) {
    if (system.sources.size() != system.paths.size()) throw InputError("render: malformed path system");
  }
  return format == RenderFormat::Svg ? render_svg(v, sources, systems) : render_ascii(v, sources, systems);
}

}  // namespace sympgrass
