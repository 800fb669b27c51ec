#include "geobound/complex/topology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "geobound/errors.hpp"

namespace geobound {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FaceClasses face_classes(const PairingComplex& x) {
  const Polytope& t = x.type();
  const int d = t.dim();
  FaceClasses out;
  out.classes.resize(d);
  out.count.assign(d, 0);
  for (int k = 0; k < d; ++k) {
    const int per = t.count(k);
    UnionFind uf(static_cast<size_t>(x.cells()) * per);
    for (int a = 0; a < x.cells(); ++a)
      for (int f = 0; f < x.facets_per_cell(); ++f) {
        int b = x.partner(a, f);
        if (b <= a) continue;
        for (int i : t.faces_in_facet(f, k)) uf.unite(a * per + i, b * per + i);
      }
    std::vector<int>& cls = out.classes[k];
    cls.assign(uf.parent.size(), -1);
    std::vector<int> root_id(uf.parent.size(), -1);
    for (size_t u = 0; u < cls.size(); ++u) {
      int r = uf.find(static_cast<int>(u));
      if (root_id[r] < 0) root_id[r] = out.count[k]++;
      cls[u] = root_id[r];
    }
    if (k == 0) {
      out.ideal_vertex.assign(out.count[0], false);
      for (size_t u = 0; u < cls.size(); ++u)
        if (t.ideal(static_cast<int>(u % per))) out.ideal_vertex[cls[u]] = true;
    }
  }
  return out;
}

long long euler_characteristic(const PairingComplex& x) {
  FaceClasses fc = face_classes(x);
  long long chi = 0;
  for (int k = 0; k < x.dim(); ++k) {
    long long n = fc.count[k];
    if (k == 0) n -= std::count(fc.ideal_vertex.begin(), fc.ideal_vertex.end(), true);
    chi += (k % 2 == 0 ? n : -n);
  }
  chi += (x.dim() % 2 == 0 ? 1 : -1) * static_cast<long long>(x.cells());
  return chi;
}

Orientation orientability(const PairingComplex& x) {
  Orientation o;
  o.sign.assign(x.cells(), 0);
  std::vector<int> parent(x.cells(), -1);
  for (int root = 0; root < x.cells() && o.orientable; ++root) {
    if (o.sign[root]) continue;
    o.sign[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty() && o.orientable) {
      int a = q.front();
      q.pop();
      for (int f = 0; f < x.facets_per_cell(); ++f) {
        int b = x.partner(a, f);
        if (b < 0) continue;
        if (!o.sign[b]) {
          o.sign[b] = -o.sign[a];
          parent[b] = a;
          q.push(b);
        } else if (o.sign[b] == o.sign[a]) {
          std::vector<int> pa{a}, pb{b};
          while (parent[pa.back()] >= 0) pa.push_back(parent[pa.back()]);
          while (parent[pb.back()] >= 0) pb.push_back(parent[pb.back()]);
          while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
            pa.pop_back();
            pb.pop_back();
          }
          pb.pop_back();
          o.odd_cycle.assign(pa.begin(), pa.end());
          o.odd_cycle.insert(o.odd_cycle.end(), pb.rbegin(), pb.rend());
          o.orientable = false;
          break;
        }
      }
    }
  }
  if (!o.orientable) o.sign.clear();
  return o;
}

BoundaryStep boundary_step(const PairingComplex& x, FacetRef s, int ridge) {
  const auto& fs = x.type().facets_of(x.dim() - 2, ridge);
  require(fs.size() == 2 && (fs[0] == s.facet || fs[1] == s.facet), "boundary_step: ridge not in facet");
  require(x.is_boundary(s.cell, s.facet), "boundary_step: slot is not on the boundary");
  int stay = s.facet, cross = fs[0] == s.facet ? fs[1] : fs[0];
  int c = s.cell;
  BoundaryStep out;
  for (int guard = 0; guard <= 2 * x.cells() + 2; ++guard) {
    int p = x.partner(c, cross);
    if (p < 0) {
      out.next = {c, cross};
      return out;
    }
    c = p;
    std::swap(cross, stay);
    ++out.gluings;
  }
  throw GluingError("boundary walk around a ridge does not terminate");
}

bool has_corners(const PairingComplex& x) {
  const int d = x.dim();
  for (const FacetRef& s : x.boundary_facets())
    for (int r : x.type().faces_in_facet(s.facet, d - 2))
      if (!boundary_step(x, s, r).smooth()) return true;
  return false;
}

std::vector<std::vector<FacetRef>> boundary_components(const PairingComplex& x) {
  const int d = x.dim();
  const int nf = x.facets_per_cell();
  std::vector<FacetRef> slots = x.boundary_facets();
  std::vector<int> id(static_cast<size_t>(x.cells()) * nf, -1);
  for (size_t i = 0; i < slots.size(); ++i) id[static_cast<size_t>(slots[i].cell) * nf + slots[i].facet] = int(i);
  UnionFind uf(slots.size());
  for (size_t i = 0; i < slots.size(); ++i)
    for (int r : x.type().faces_in_facet(slots[i].facet, d - 2)) {
      BoundaryStep st = boundary_step(x, slots[i], r);
      if (st.smooth()) uf.unite(int(i), id[static_cast<size_t>(st.next.cell) * nf + st.next.facet]);
    }
  std::map<int, int> comp_of_root;
  std::vector<std::vector<FacetRef>> out;
  for (size_t i = 0; i < slots.size(); ++i) {
    int r = uf.find(int(i));
    auto [it, fresh] = comp_of_root.emplace(r, int(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].push_back(slots[i]);
  }
  return out;
}

PairingComplex boundary_complex(const PairingComplex& x, const std::vector<FacetRef>& component) {
  require(!component.empty(), "boundary_complex: empty component");
  const int d = x.dim();
  const int f = component.front().facet;
  for (const FacetRef& s : component)
    if (s.facet != f) throw GluingError("boundary component mixes facet types");
  auto view = x.type().facet(f);
  auto type = std::make_shared<const Polytope>(std::move(view.polytope));
  PairingComplex out(type, static_cast<int>(component.size()), x.type_name() + "/facet" + std::to_string(f));
  std::map<FacetRef, int> index;
  for (size_t i = 0; i < component.size(); ++i) index[component[i]] = int(i);
  for (size_t i = 0; i < component.size(); ++i)
    for (int j = 0; j < type->facet_count(); ++j) {
      int ridge = view.face_map[d - 2][j];
      BoundaryStep st = boundary_step(x, component[i], ridge);
      if (!st.smooth()) continue;
      auto it = index.find(st.next);
      if (it == index.end()) throw GluingError("boundary component is not closed under smooth steps");
      if (it->second > int(i)) out.pair(int(i), it->second, j);
    }
  return out;
}

std::vector<std::vector<int>> connected_components(const PairingComplex& x) {
  std::vector<int> seen(x.cells(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < x.cells(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      out.back().push_back(a);
      for (int f = 0; f < x.facets_per_cell(); ++f) {
        int b = x.partner(a, f);
        if (b >= 0 && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace geobound
