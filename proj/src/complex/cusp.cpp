#include "geobound/complex/cusp.hpp"

#include <algorithm>
#include <map>

#include "geobound/errors.hpp"

namespace geobound {

namespace {

// Facets through an ideal vertex in cyclic order around it.
std::vector<int> cyclic_facets(const Polytope& t, int v) {
  const auto& fs = t.facets_of(0, v);
  std::vector<int> order{fs.front()};
  while (order.size() < fs.size()) {
    int cur = order.back(), next = -1;
    for (int e : t.superfaces(0, v)) {
      const auto& ef = t.facets_of(1, e);
      if (ef.size() != 2) continue;
      int other = ef[0] == cur ? ef[1] : ef[1] == cur ? ef[0] : -1;
      if (other >= 0 && (order.size() < 2 || other != order[order.size() - 2]) &&
          std::find(order.begin(), order.end(), other) == order.end()) {
        next = other;
        break;
      }
    }
    if (next < 0) throw GluingError("vertex link is not a polygon");
    order.push_back(next);
  }
  return order;
}

}  // namespace

std::string CuspSection::name() const {
  if (h > 0) return std::string(kind == Kind::torus ? "T" : "A") + "_{2x" + std::to_string(h) + "}";
  switch (kind) {
    case Kind::torus: return "torus";
    case Kind::annulus: return "annulus";
    default: return "other";
  }
}

std::vector<CuspSection> cusp_links(const PairingComplex& x) {
  const Polytope& t = x.type();
  require(t.dim() == 3, "cusp_links: three-dimensional cell type required");
  std::vector<int> ideal;
  std::map<int, int> slot_of;
  std::vector<std::vector<int>> sides;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.ideal(v)) {
      slot_of[v] = int(ideal.size());
      ideal.push_back(v);
      sides.push_back(cyclic_facets(t, v));
    }
  const int m = int(ideal.size());
  auto tile_id = [&](int cell, int slot) { return cell * m + slot; };
  std::vector<int> section(static_cast<size_t>(x.cells()) * m, -1);
  std::vector<CuspSection> out;

  for (int c0 = 0; c0 < x.cells(); ++c0)
    for (int s0 = 0; s0 < m; ++s0) {
      if (section[tile_id(c0, s0)] >= 0) continue;
      const int sid = int(out.size());
      CuspSection cs;
      std::vector<int> stack{c0};
      section[tile_id(c0, s0)] = sid;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        cs.tile_list.push_back({c, ideal[s0]});
        for (int f : sides[s0]) {
          int p = x.partner(c, f);
          if (p >= 0 && section[tile_id(p, s0)] < 0) {
            section[tile_id(p, s0)] = sid;
            stack.push_back(p);
          }
        }
      }
      std::sort(cs.tile_list.begin(), cs.tile_list.end());
      cs.tiles = int(cs.tile_list.size());

      const auto& sd = sides[s0];
      if (sd.size() == 4) {
        for (int axis = 0; axis < 2; ++axis) {
          const int fa = sd[axis], fb = sd[axis + 2];
          std::map<int, bool> seen;
          for (const auto& tile : cs.tile_list) {
            if (seen[tile.first]) continue;
            // Walk forward through fb, then backward through fa if the line is open.
            int len = 0;
            bool closed = false;
            int cur = tile.first, exit = fb;
            while (true) {
              seen[cur] = true;
              ++len;
              int p = x.partner(cur, exit);
              if (p < 0) break;
              if (p == tile.first) {
                closed = true;
                break;
              }
              cur = p;
              exit = exit == fa ? fb : fa;
            }
            if (!closed) {
              cur = tile.first;
              exit = fa;
              while (true) {
                int p = x.partner(cur, exit);
                if (p < 0) break;
                cur = p;
                exit = exit == fa ? fb : fa;
                seen[cur] = true;
                ++len;
              }
            }
            cs.lines[axis].push_back({len, closed});
          }
        }
        auto all = [&](int axis, bool closed) {
          return std::all_of(cs.lines[axis].begin(), cs.lines[axis].end(),
                             [&](const auto& l) { return l.second == closed; });
        };
        if (all(0, true) && all(1, true)) cs.kind = CuspSection::Kind::torus;
        else if ((all(0, true) && all(1, false)) || (all(0, false) && all(1, true)))
          cs.kind = CuspSection::Kind::annulus;
        for (int axis = 0; axis < 2; ++axis)
          for (const auto& [len, closed] : cs.lines[axis])
            if (closed && (cs.systole == 0 || len < cs.systole)) cs.systole = len;
        if (cs.kind != CuspSection::Kind::other && cs.tiles % 2 == 0) {
          const int h = cs.tiles / 2;
          for (int axis = 0; axis < 2 && cs.h == 0; ++axis) {
            const auto& across = cs.lines[axis];
            const auto& along = cs.lines[1 - axis];
            bool ok = all(axis, true) && std::all_of(across.begin(), across.end(), [](const auto& l) {
                        return l.first == 2;
                      });
            ok = ok && along.size() == 2 &&
                 std::all_of(along.begin(), along.end(), [&](const auto& l) { return l.first == h; });
            if (ok) cs.h = h;
          }
        }
      }
      out.push_back(std::move(cs));
    }
  return out;
}

std::map<std::string, int> cusp_census(const std::vector<CuspSection>& sections) {
  std::map<std::string, int> out;
  for (const auto& s : sections) ++out[s.name()];
  return out;
}

}  // namespace geobound
