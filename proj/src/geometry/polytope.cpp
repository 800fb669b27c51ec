#include "geobound/geometry/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "geobound/errors.hpp"
#include "json.hpp"

namespace geobound {

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Polytope Polytope::from_facets(int dim, const std::vector<std::vector<int>>& facet_vertices,
                               std::vector<bool> ideal) {
  require(dim >= 1, "Polytope: dimension must be positive");
  Polytope p;
  p.dim_ = dim;
  p.ideal_ = std::move(ideal);
  p.faces_.assign(dim, {});
  p.index_.assign(dim, {});
  p.sub_.assign(dim, {});
  for (auto f : facet_vertices) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (!p.index_[dim - 1].emplace(f, p.count(dim - 1)).second) throw Error("Polytope: repeated facet");
    p.faces_[dim - 1].push_back(f);
  }
  const auto& facets = p.faces_[dim - 1];
  for (int k = dim - 1; k >= 1; --k) {
    std::map<std::vector<int>, int> next;
    std::vector<std::vector<std::vector<int>>> maximal(p.count(k));
    for (int i = 0; i < p.count(k); ++i) {
      const auto& g = p.faces_[k][i];
      std::vector<std::vector<int>> cand;
      for (const auto& f : facets) {
        auto x = intersect(g, f);
        if (!x.empty() && x.size() < g.size()) cand.push_back(std::move(x));
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (size_t a = 0; a < cand.size(); ++a) {
        bool is_max = true;
        for (size_t b = 0; b < cand.size() && is_max; ++b)
          if (a != b && cand[a].size() < cand[b].size() && subset(cand[a], cand[b])) is_max = false;
        if (is_max) {
          maximal[i].push_back(cand[a]);
          next.emplace(cand[a], 0);
        }
      }
    }
    int idx = 0;
    for (auto& [face, id] : next) {
      id = idx++;
      p.faces_[k - 1].push_back(face);
    }
    p.index_[k - 1] = next;
    p.sub_[k].resize(p.count(k));
    for (int i = 0; i < p.count(k); ++i) {
      for (auto& s : maximal[i]) p.sub_[k][i].push_back(next.at(s));
      std::sort(p.sub_[k][i].begin(), p.sub_[k][i].end());
    }
  }
  for (int v = 0; v < p.count(0); ++v)
    if (p.faces_[0][v] != std::vector<int>{v}) throw Error("Polytope: vertex labels are not 0..n-1");
  if (int(p.ideal_.size()) != p.count(0)) throw Error("Polytope: ideal flag count mismatch");
  p.sub_[0].assign(p.count(0), {});
  p.build_incidences();
  p.build_flags();
  return p;
}

void Polytope::build_incidences() {
  super_.assign(dim_, {});
  for (int k = 0; k < dim_; ++k) super_[k].assign(count(k), {});
  for (int k = 1; k < dim_; ++k)
    for (int i = 0; i < count(k); ++i)
      for (int s : sub_[k][i]) super_[k - 1][s].push_back(i);
  // Diamond property.
  for (int k = 1; k < dim_; ++k)
    for (int i = 0; i < count(k); ++i) {
      std::map<int, int> between;
      for (int s : sub_[k][i]) {
        if (k == 1) continue;
        for (int t : sub_[k - 1][s]) between[t]++;
      }
      for (auto& [t, c] : between)
        if (c != 2) throw Error("Polytope: diamond property fails");
      if (k == 1 && sub_[k][i].size() != 2) throw Error("Polytope: edge without two vertices");
    }
  for (int r = 0; dim_ >= 2 && r < count(dim_ - 2); ++r)
    if (super_[dim_ - 2][r].size() != 2) throw Error("Polytope: ridge not in exactly two facets");

  facets_of_.assign(dim_, {});
  facets_of_[dim_ - 1].resize(count(dim_ - 1));
  for (int f = 0; f < count(dim_ - 1); ++f) facets_of_[dim_ - 1][f] = {f};
  for (int k = dim_ - 2; k >= 0; --k) {
    facets_of_[k].resize(count(k));
    for (int i = 0; i < count(k); ++i) {
      std::set<int> s;
      for (int up : super_[k][i]) s.insert(facets_of_[k + 1][up].begin(), facets_of_[k + 1][up].end());
      facets_of_[k][i].assign(s.begin(), s.end());
    }
  }
  in_facet_.assign(count(dim_ - 1), std::vector<std::vector<int>>(dim_));
  for (int k = 0; k < dim_; ++k)
    for (int i = 0; i < count(k); ++i)
      for (int f : facets_of_[k][i]) in_facet_[f][k].push_back(i);
  ridge_of_pair_.clear();
  if (dim_ >= 2)
    for (int r = 0; r < count(dim_ - 2); ++r) {
      auto& fs = super_[dim_ - 2][r];
      ridge_of_pair_[{fs[0], fs[1]}] = r;
      ridge_of_pair_[{fs[1], fs[0]}] = r;
    }
}

void Polytope::build_flags() {
  flags_.clear();
  flag_index_.clear();
  facet_first_flag_.assign(count(dim_ - 1), -1);
  std::vector<int> chain(dim_);
  auto rec = [&](auto&& self, int k) -> void {
    if (k < 0) {
      flag_index_.emplace(chain, int(flags_.size()));
      flags_.push_back(chain);
      return;
    }
    for (int s : sub_[k + 1][chain[k + 1]]) {
      chain[k] = s;
      self(self, k - 1);
    }
  };
  for (int f = 0; f < count(dim_ - 1); ++f) {
    facet_first_flag_[f] = flag_count();
    chain[dim_ - 1] = f;
    rec(rec, dim_ - 2);
  }
  adj_.assign(dim_, std::vector<int>(flags_.size(), -1));
  for (int fi = 0; fi < flag_count(); ++fi) {
    const auto& fl = flags_[fi];
    for (int k = 0; k < dim_; ++k) {
      std::vector<int> lower, upper;
      if (k == 0) {
        lower.resize(count(0));
        std::iota(lower.begin(), lower.end(), 0);
      } else {
        lower = super_[k - 1][fl[k - 1]];
      }
      if (k == dim_ - 1) {
        upper.resize(count(k));
        std::iota(upper.begin(), upper.end(), 0);
      } else {
        upper = sub_[k + 1][fl[k + 1]];
      }
      std::sort(lower.begin(), lower.end());
      std::sort(upper.begin(), upper.end());
      auto both = intersect(lower, upper);
      int other = -1;
      for (int x : both)
        if (x != fl[k]) other = x;
      if (both.size() != 2 || other < 0) throw Error("Polytope: flag without a unique neighbour");
      auto next = fl;
      next[k] = other;
      adj_[k][fi] = flag_index_.at(next);
    }
  }
}

int Polytope::find(int k, const std::vector<int>& vertices) const {
  auto it = index_[k].find(vertices);
  return it == index_[k].end() ? -1 : it->second;
}

int Polytope::ridge_between(int f, int g) const {
  auto it = ridge_of_pair_.find({f, g});
  return it == ridge_of_pair_.end() ? -1 : it->second;
}

bool Polytope::face_has_finite_vertex(int k, int i) const {
  for (int v : faces_[k][i])
    if (!ideal_[v]) return true;
  return false;
}

int Polytope::finite_vertex_count() const {
  return static_cast<int>(std::count(ideal_.begin(), ideal_.end(), false));
}

bool Polytope::right_angled(double tol) const {
  if (ridge_angle_.empty()) return false;
  return std::all_of(ridge_angle_.begin(), ridge_angle_.end(),
                     [&](double a) { return std::fabs(a - std::numbers::pi / 2) < tol; });
}

int Polytope::flag_index(const std::vector<int>& chain) const {
  auto it = flag_index_.find(chain);
  return it == flag_index_.end() ? -1 : it->second;
}

std::vector<int> Polytope::f_vector() const {
  std::vector<int> f;
  for (int k = 0; k < dim_; ++k) f.push_back(count(k));
  return f;
}

Polytope::FacetView Polytope::facet(int f) const {
  const auto& verts = faces_[dim_ - 1][f];
  std::map<int, int> local;
  for (int v : verts) local.emplace(v, int(local.size()));
  std::vector<bool> ideal;
  for (int v : verts) ideal.push_back(ideal_[v]);
  std::vector<std::vector<int>> sub_facets;
  for (int r : in_facet_[f][dim_ - 2]) {
    std::vector<int> s;
    for (int v : faces_[dim_ - 2][r]) s.push_back(local.at(v));
    sub_facets.push_back(s);
  }
  FacetView view;
  view.polytope = from_facets(dim_ - 1, sub_facets, ideal);
  view.face_map.resize(dim_ - 1);
  for (int k = 0; k < dim_ - 1; ++k)
    for (int i = 0; i < view.polytope.count(k); ++i) {
      std::vector<int> global;
      for (int v : view.polytope.vertices_of(k, i)) global.push_back(verts[v]);
      view.face_map[k].push_back(find(k, global));
    }
  return view;
}

namespace {

// Extends flag 0 of a to target flag t of b along the flag graph; empty on conflict.
std::vector<int> flag_map(const Polytope& a, const Polytope& b, int t) {
  std::vector<int> phi(a.flag_count(), -1), inv(b.flag_count(), -1);
  phi[0] = t;
  inv[t] = 0;
  std::vector<int> queue{0};
  for (size_t h = 0; h < queue.size(); ++h) {
    int f = queue[h];
    for (int k = 0; k < a.dim(); ++k) {
      int fa = a.adjacent_flag(k, f), fb = b.adjacent_flag(k, phi[f]);
      if (phi[fa] < 0) {
        if (inv[fb] >= 0) return {};
        phi[fa] = fb;
        inv[fb] = fa;
        queue.push_back(fa);
      } else if (phi[fa] != fb) {
        return {};
      }
    }
  }
  if (int(queue.size()) != a.flag_count()) return {};
  return phi;
}

std::vector<std::vector<int>> face_maps(const Polytope& a, const Polytope& b, const std::vector<int>& phi) {
  std::vector<std::vector<int>> m(a.dim());
  for (int k = 0; k < a.dim(); ++k) m[k].assign(a.count(k), -1);
  for (int f = 0; f < a.flag_count(); ++f)
    for (int k = 0; k < a.dim(); ++k) {
      int x = a.flag(f)[k], y = b.flag(phi[f])[k];
      if (m[k][x] >= 0 && m[k][x] != y) return {};
      m[k][x] = y;
    }
  return m;
}

bool preserves_vertex_flags(const Polytope& a, const Polytope& b, const std::vector<std::vector<int>>& m) {
  for (int v = 0; v < a.count(0); ++v)
    if (a.ideal(v) != b.ideal(m[0][v])) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> find_isomorphism(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim() || a.f_vector() != b.f_vector() || a.flag_count() != b.flag_count()) return {};
  if (a.flag_count() == 0) return {};
  for (int t = 0; t < b.flag_count(); ++t) {
    auto phi = flag_map(a, b, t);
    if (phi.empty()) continue;
    auto m = face_maps(a, b, phi);
    if (!m.empty() && preserves_vertex_flags(a, b, m)) return m;
  }
  return {};
}

SymmetryGroup symmetry_group(const Polytope& p) {
  SymmetryGroup g;
  int d = p.dim();
  auto facet_size = [&](int f) { return p.vertices_of(d - 1, f).size(); };
  auto angle_key = [&](int r) { return std::llround(p.ridge_angles()[r] * 1e6); };
  for (int t = 0; t < p.flag_count(); ++t) {
    auto phi = flag_map(p, p, t);
    if (phi.empty()) continue;
    auto m = face_maps(p, p, phi);
    if (m.empty() || !preserves_vertex_flags(p, p, m)) continue;
    bool ok = true;
    for (int f = 0; f < p.count(d - 1) && ok; ++f) ok = facet_size(f) == facet_size(m[d - 1][f]);
    if (!p.ridge_angles().empty() && d >= 2)
      for (int r = 0; r < p.count(d - 2) && ok; ++r) ok = angle_key(r) == angle_key(m[d - 2][r]);
    if (ok) g.elements.push_back({std::move(m), std::move(phi)});
  }
  std::vector<int> orbit(p.count(d - 1), -1);
  for (int f = 0; f < p.count(d - 1); ++f) {
    if (orbit[f] >= 0) continue;
    std::set<int> o;
    for (auto& a : g.elements) o.insert(a.face_perm[d - 1][f]);
    for (int x : o) orbit[x] = int(g.facet_orbits.size());
    g.facet_orbits.emplace_back(o.begin(), o.end());
  }
  return g;
}

std::string polytope_json(const Polytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  j["f_vector"] = p.f_vector();
  nlohmann::json faces = nlohmann::json::array();
  for (int k = 0; k < p.dim(); ++k) {
    nlohmann::json level = nlohmann::json::array();
    for (int i = 0; i < p.count(k); ++i)
      level.push_back({{"vertices", p.vertices_of(k, i)}, {"subfaces", p.subfaces(k, i)}});
    faces.push_back(level);
  }
  j["faces"] = faces;
  std::vector<std::string> flags;
  for (int v = 0; v < p.vertex_count(); ++v) flags.push_back(p.ideal(v) ? "ideal" : "finite");
  j["vertex_flags"] = flags;
  if (!p.facet_tags().empty()) j["facet_tags"] = p.facet_tags();
  if (!p.ridge_angles().empty()) j["ridge_angles"] = p.ridge_angles();
  return j.dump(1);
}

}  // namespace geobound
