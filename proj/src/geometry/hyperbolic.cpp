#include "geobound/geometry/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <array>
#include <numbers>
#include <unordered_map>

#include "geobound/coxeter/vinberg.hpp"
#include "geobound/errors.hpp"

namespace geobound {

double minkowski(const Vec& x, const Vec& y) {
  int t = static_cast<int>(x.size()) - 1;
  return x.head(t).dot(y.head(t)) - x[t] * y[t];
}

Mat HyperplaneSystem::gram() const {
  Mat g(normals.size(), normals.size());
  for (size_t i = 0; i < normals.size(); ++i)
    for (size_t j = 0; j < normals.size(); ++j) g(i, j) = minkowski(normals[i], normals[j]);
  return g;
}

HyperplaneSystem realize(const Eigen::MatrixXd& g, double tol) {
  Signature sig = signature(g, tol);
  if (sig.neg > 1) throw NotHyperbolic("Gram matrix has " + std::to_string(sig.neg) + " negative eigenvalues");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  const auto& lam = es.eigenvalues();
  const auto& u = es.eigenvectors();
  std::vector<int> pos, neg;
  for (int j = int(lam.size()) - 1; j >= 0; --j)
    if (lam[j] > tol) pos.push_back(j);
  for (int j = 0; j < int(lam.size()); ++j)
    if (lam[j] < -tol) neg.push_back(j);
  HyperplaneSystem s;
  s.n = static_cast<int>(pos.size());
  for (int i = 0; i < g.rows(); ++i) {
    Vec v = Vec::Zero(s.n + 1);
    for (int c = 0; c < s.n; ++c) v[c] = u(i, pos[c]) * std::sqrt(lam[pos[c]]);
    if (!neg.empty()) v[s.n] = u(i, neg[0]) * std::sqrt(-lam[neg[0]]);
    s.normals.push_back(v);
  }
  double err = (s.gram() - g).cwiseAbs().maxCoeff();
  if (err > 1e-9) throw ToleranceError("realization reproduces the Gram matrix only to " + std::to_string(err));
  return s;
}

Mat reflection(const Vec& e) {
  int n = static_cast<int>(e.size());
  Vec je = e;
  je[n - 1] = -je[n - 1];
  return Mat::Identity(n, n) - 2 * e * je.transpose();
}

namespace {

// Hash of a matrix rounded to a grid far coarser than the dedup tolerance.
struct MatrixIndex {
  std::unordered_map<std::string, std::vector<int>> buckets;
  static std::string key(const Mat& m) {
    std::string k;
    k.reserve(m.size() * 4);
    for (int i = 0; i < m.size(); ++i) {
      long long r = std::llround(m.data()[i] * 1e5);
      k.append(reinterpret_cast<const char*>(&r), sizeof r);
    }
    return k;
  }
};

int find_matrix(const MatrixIndex& idx, const std::vector<Mat>& elems, const Mat& m, double tol) {
  auto it = idx.buckets.find(MatrixIndex::key(m));
  if (it == idx.buckets.end()) return -1;
  for (int e : it->second)
    if ((elems[e] - m).cwiseAbs().maxCoeff() < tol) return e;
  return -1;
}

}  // namespace

std::vector<Mat> orbit_group(const HyperplaneSystem& s, const std::vector<int>& generators, int cap) {
  int dim = s.n + 1;
  std::vector<Mat> gens;
  for (int g : generators) gens.push_back(reflection(s.normals.at(g)));
  std::vector<Mat> elems{Mat::Identity(dim, dim)};
  MatrixIndex idx;
  idx.buckets[MatrixIndex::key(elems[0])].push_back(0);
  for (size_t h = 0; h < elems.size(); ++h)
    for (const Mat& g : gens) {
      Mat m = g * elems[h];
      if (find_matrix(idx, elems, m, kOrbitTol) >= 0) continue;
      if (int(elems.size()) >= cap)
        throw InfiniteGroup("reflection group exceeds " + std::to_string(cap) + " elements");
      idx.buckets[MatrixIndex::key(m)].push_back(int(elems.size()));
      elems.push_back(std::move(m));
    }
  for (const Mat& a : elems)
    for (const Mat& b : elems)
      if (find_matrix(idx, elems, a * b, kOrbitTol) < 0) throw ToleranceError("group closure check failed");
  return elems;
}

namespace {

Vec kernel_direction(const std::vector<Vec>& normals, const std::vector<int>& nodes) {
  int dim = static_cast<int>(normals[0].size());
  Mat a(nodes.size(), dim);
  for (size_t r = 0; r < nodes.size(); ++r) {
    Vec je = normals[nodes[r]];
    je[dim - 1] = -je[dim - 1];
    a.row(r) = je.transpose();
  }
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().col(dim - 1);
}

Vec normalize_point(Vec x, bool ideal) {
  int t = static_cast<int>(x.size()) - 1;
  if (x[t] < 0) x = -x;
  if (ideal) return x / x[t];
  return x / std::sqrt(-minkowski(x, x));
}

std::vector<double> ridge_angles_from(const Polytope& p, const std::vector<Vec>& normals) {
  std::vector<double> angles;
  if (p.dim() < 2) return angles;
  for (int r = 0; r < p.count(p.dim() - 2); ++r) {
    const auto& fs = p.facets_of(p.dim() - 2, r);
    double c = std::clamp(-minkowski(normals[fs[0]], normals[fs[1]]), -1.0, 1.0);
    angles.push_back(std::acos(c));
  }
  return angles;
}

std::string polygon_name(size_t sides) {
  switch (sides) {
    case 3: return "triangular";
    case 4: return "quadrilateral";
    case 5: return "pentagonal";
    case 6: return "hexagonal";
    default: return std::to_string(sides) + "-gonal";
  }
}

}  // namespace

RealizedPolytope coxeter_polytope(const CoxeterDiagram& d, int n) {
  RealizedPolytope rp;
  rp.system = realize(gram_matrix_real(d));
  if (rp.system.n != n) throw NotHyperbolic("diagram realizes in dimension " + std::to_string(rp.system.n));
  auto verts = diagram_vertices(d, n);
  if (verts.empty()) throw Error("diagram has no vertices");
  auto& normals = rp.system.normals;
  // Fix the sheet: the first vertex must lie on the inner side of every hyperplane and in the
  // future cone; flip the time axis when it does not.
  Vec x0 = kernel_direction(normals, verts[0].nodes);
  double worst = 0;
  for (auto& e : normals) worst = std::max(worst, std::fabs(minkowski(x0, e)));
  bool inside_pos = true;
  for (auto& e : normals) inside_pos = inside_pos && minkowski(x0, e) <= 1e-9 * std::max(1.0, worst);
  if (!inside_pos) x0 = -x0;
  if (x0[n] < 0)
    for (auto& e : normals) e[n] = -e[n];
  for (auto& v : verts) {
    Vec x = normalize_point(kernel_direction(normals, v.nodes), v.ideal);
    for (auto& e : normals)
      if (minkowski(x, e) > 1e-7) throw Error("diagram vertices do not bound a common polytope");
    rp.vertex_points.push_back(x);
    rp.vertex_nodes.push_back(v.nodes);
  }
  std::vector<std::vector<int>> facet_vertices(d.size());
  std::vector<bool> ideal;
  for (size_t v = 0; v < verts.size(); ++v) {
    ideal.push_back(verts[v].ideal);
    for (int x : verts[v].nodes) facet_vertices[x].push_back(int(v));
  }
  rp.polytope = Polytope::from_facets(n, facet_vertices, ideal);
  rp.polytope.set_ridge_angles(ridge_angles_from(rp.polytope, normals));
  rp.polytope.set_facet_tags(d.nodes());
  rp.facet_node.resize(d.size());
  std::iota(rp.facet_node.begin(), rp.facet_node.end(), 0);
  return rp;
}

RealizedPolytope assemble_orbit_polytope(const RealizedPolytope& seed, const std::vector<Mat>& group,
                                         const std::vector<int>& mirrors, double tol) {
  RealizedPolytope out;
  int n = seed.system.n;
  out.system.n = n;
  auto& normals = out.system.normals;
  for (int x = 0; x < int(seed.system.normals.size()); ++x) {
    if (std::count(mirrors.begin(), mirrors.end(), x)) continue;
    for (const Mat& g : group) {
      Vec v = g * seed.system.normals[x];
      bool merged = false;
      for (const Vec& u : normals) {
        double dist = (v - u).cwiseAbs().maxCoeff();
        if (dist < tol) {
          merged = true;
          break;
        }
        if (dist < 1e-4)
          throw ToleranceError("normals closer than the separation bound but not merged: distance " +
                               std::to_string(dist));
      }
      if (!merged) {
        normals.push_back(v);
        out.facet_node.push_back(x);
      }
    }
  }
  std::map<std::vector<int>, int> vertex_of;
  std::vector<bool> ideal;
  std::vector<std::vector<int>> sigma_list;
  for (size_t v = 0; v < seed.vertex_points.size(); ++v) {
    bool is_ideal = seed.polytope.ideal(int(v));
    for (const Mat& g : group) {
      Vec y = normalize_point(g * seed.vertex_points[v], is_ideal);
      double scale = std::max(1.0, y.cwiseAbs().maxCoeff());
      std::vector<int> sigma;
      for (int k = 0; k < int(normals.size()); ++k)
        if (std::fabs(minkowski(y, normals[k])) < tol * scale) sigma.push_back(k);
      if (sigma.size() < size_t(n - (is_ideal ? 1 : 0))) continue;
      Mat a(sigma.size(), n + 1);
      for (size_t r = 0; r < sigma.size(); ++r) a.row(r) = normals[sigma[r]].transpose();
      Eigen::JacobiSVD<Mat> svd(a);
      int rank = 0;
      for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-7) ++rank;
      if (rank != n) continue;
      if (vertex_of.emplace(sigma, int(sigma_list.size())).second) {
        sigma_list.push_back(sigma);
        ideal.push_back(is_ideal);
        out.vertex_points.push_back(y);
        out.vertex_nodes.push_back(seed.vertex_nodes.empty() ? std::vector<int>{} : seed.vertex_nodes[v]);
      }
    }
  }
  std::vector<std::vector<int>> facet_vertices(normals.size());
  for (size_t v = 0; v < sigma_list.size(); ++v)
    for (int k : sigma_list[v]) facet_vertices[k].push_back(int(v));
  out.polytope = Polytope::from_facets(n, facet_vertices, ideal);
  out.polytope.set_ridge_angles(ridge_angles_from(out.polytope, normals));
  std::vector<std::string> tags;
  for (int f = 0; f < out.polytope.facet_count(); ++f) {
    if (n == 3) tags.push_back(polygon_name(out.polytope.vertices_of(2, f).size()));
    else tags.push_back(seed.polytope.facet_tags().empty() ? std::string() : seed.polytope.facet_tags()[out.facet_node[f]]);
  }
  out.polytope.set_facet_tags(tags);
  return out;
}

RightAngleReport verify_right_angled(const Polytope& p, const HyperplaneSystem& s, double tol) {
  RightAngleReport r;
  int nf = p.facet_count();
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      double g = minkowski(s.normals[i], s.normals[j]);
      if (p.ridge_between(i, j) >= 0) {
        ++r.adjacent_pairs;
        r.max_adjacent_product = std::max(r.max_adjacent_product, std::fabs(g));
        if (std::fabs(g) >= tol) r.failures.emplace_back(i, j);
      } else if (std::fabs(g + 1) < tol) {
        ++r.tangent_pairs;
        r.max_tangent_error = std::max(r.max_tangent_error, std::fabs(g + 1));
      } else if (g < -1) {
        ++r.ultraparallel_pairs;
      } else {
        ++r.other_pairs;
      }
    }
  return r;
}

namespace {

RealizedPolytope make_octahedron() {
  RealizedPolytope rp;
  rp.system.n = 3;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      Vec x = Vec::Zero(4);
      x[i] = s;
      x[3] = 1;
      rp.vertex_points.push_back(x);
    }
  std::vector<std::vector<int>> facets;
  std::vector<std::string> tags;
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1}) {
        int sg[3] = {a, b, c};
        std::vector<int> f;
        for (int i = 0; i < 3; ++i) f.push_back(2 * i + (sg[i] < 0));
        facets.push_back(f);
        tags.push_back(a * b * c > 0 ? "white" : "black");
        Vec e(4);
        e << a, b, c, 1;
        rp.system.normals.push_back(e / std::sqrt(2.0));
      }
  rp.polytope = Polytope::from_facets(3, facets, std::vector<bool>(6, true));
  rp.polytope.set_ridge_angles(ridge_angles_from(rp.polytope, rp.system.normals));
  rp.polytope.set_facet_tags(tags);
  return rp;
}

RealizedPolytope make_24cell() {
  RealizedPolytope rp;
  rp.system.n = 4;
  std::vector<std::array<int, 4>> pts;  // doubled coordinates
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      std::array<int, 4> p{0, 0, 0, 0};
      p[i] = s;
      pts.push_back(p);
    }
  for (int m = 0; m < 16; ++m) pts.push_back({m & 8 ? -1 : 1, m & 4 ? -1 : 1, m & 2 ? -1 : 1, m & 1 ? -1 : 1});
  for (auto& p : pts) {
    Vec x(5);
    x << p[0] / 2.0, p[1] / 2.0, p[2] / 2.0, p[3] / 2.0, 1;
    rp.vertex_points.push_back(x);
  }
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::array<int, 4> u{0, 0, 0, 0};
          u[i] = si;
          u[j] = sj;
          std::vector<int> f;
          for (size_t v = 0; v < pts.size(); ++v) {
            int dot = 0;
            for (int c = 0; c < 4; ++c) dot += u[c] * pts[v][c];
            if (dot == 2) f.push_back(int(v));
          }
          facets.push_back(f);
          Vec e(5);
          e << u[0], u[1], u[2], u[3], 1;
          rp.system.normals.push_back(e);
        }
  rp.polytope = Polytope::from_facets(4, facets, std::vector<bool>(pts.size(), true));
  rp.polytope.set_ridge_angles(ridge_angles_from(rp.polytope, rp.system.normals));
  rp.polytope.set_facet_tags(std::vector<std::string>(facets.size(), "octahedral"));
  return rp;
}

RealizedPolytope make_orbit(const std::string& diagram, int n, std::vector<std::string> mirror_names) {
  CoxeterDiagram d = load_diagram(diagram);
  RealizedPolytope seed = coxeter_polytope(d, n);
  std::vector<int> mirrors;
  for (auto& m : mirror_names) mirrors.push_back(d.index(m));
  return assemble_orbit_polytope(seed, orbit_group(seed.system, mirrors), mirrors);
}

}  // namespace

RealizedPolytope builtin_polytope(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, RealizedPolytope> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  RealizedPolytope rp;
  if (name == "octahedron") rp = make_octahedron();
  else if (name == "24-cell") rp = make_24cell();
  else if (name == "p3") rp = make_orbit("q3-fig6", 3, {"C", "D", "E"});
  else if (name == "p4") rp = make_orbit("q4-fig4", 4, {"B", "C", "D", "E"});
  else throw Error("unknown polytope '" + name + "' (octahedron, 24-cell, p3, p4)");
  return cache[name] = rp;
}

}  // namespace geobound
