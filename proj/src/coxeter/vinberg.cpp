#include "geobound/coxeter/vinberg.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "geobound/errors.hpp"

namespace geobound {

const char* to_string(VertexVerdict::Kind k) {
  switch (k) {
    case VertexVerdict::Kind::finite: return "finite";
    case VertexVerdict::Kind::ideal: return "ideal";
    case VertexVerdict::Kind::none: return "none";
  }
  return "?";
}

const char* to_string(ArithmeticityResult::Verdict v) {
  switch (v) {
    case ArithmeticityResult::Verdict::arithmetic: return "arithmetic";
    case ArithmeticityResult::Verdict::non_arithmetic: return "non-arithmetic";
    case ArithmeticityResult::Verdict::undecidable: return "undecidable";
  }
  return "?";
}

namespace {

// Connected components of the diagram restricted to subset (edges = non-orthogonal pairs).
std::vector<std::vector<int>> components(const SymMatrix& g, const std::vector<int>& subset) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(subset.size(), false);
  for (size_t s = 0; s < subset.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{int(s)};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(subset[u]);
      for (size_t v = 0; v < subset.size(); ++v)
        if (!seen[v] && !g(subset[u], subset[v]).is_zero()) {
          seen[v] = true;
          stack.push_back(int(v));
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

// Nodes whose hyperplane passes through the ideal point fixed by the parabolic subset, when the
// subset is PSD and singular; empty otherwise.
std::vector<int> ideal_closure(const SymMatrix& g, const std::vector<int>& subset) {
  if (subset.empty()) return {};
  SymMatrix sub = g.principal(subset);
  auto info = semidefinite_info(sub);
  if (!info.psd || info.rank == int(subset.size())) return {};
  for (auto& comp : components(g, subset)) {
    SymMatrix gc = g.principal(comp);
    if (is_positive_definite(gc)) continue;
    std::vector<ExactScalar> w = kernel_vector(gc);
    if (w.empty()) return {};
    std::vector<int> closure;
    for (int x = 0; x < g.size(); ++x) {
      ExactScalar s(0);
      for (size_t i = 0; i < comp.size(); ++i) s += w[i] * g(x, comp[i]);
      if (s.is_zero()) closure.push_back(x);
    }
    return closure;
  }
  return {};
}

}  // namespace

VertexVerdict vertex_type(const CoxeterDiagram& d, const std::vector<int>& subset, int n) {
  SymMatrix g = gram_matrix(d);
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  VertexVerdict v{VertexVerdict::Kind::none, s};
  if (int(s.size()) == n && is_positive_definite(g.principal(s))) {
    v.kind = VertexVerdict::Kind::finite;
    return v;
  }
  std::vector<int> closure = ideal_closure(g, s);
  if (closure.empty()) return v;
  auto info = semidefinite_info(g.principal(closure));
  if (info.psd && info.rank == n - 1) {
    v.kind = VertexVerdict::Kind::ideal;
    v.witness = closure;
  }
  return v;
}

std::vector<DiagramVertex> diagram_vertices(const CoxeterDiagram& d, int n) {
  SymMatrix g = gram_matrix(d);
  int k = d.size();
  require(k <= 24, "diagram_vertices: too many nodes for subset enumeration");
  std::vector<DiagramVertex> out;
  std::set<std::vector<int>> ideal_seen;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(i);
    if (int(s.size()) == n && is_positive_definite(g.principal(s))) {
      out.push_back({s, false});
      continue;
    }
    if (s.size() < 2) continue;
    std::vector<int> closure = ideal_closure(g, s);
    if (closure != s) continue;  // count each ideal point once, at its full node set
    auto info = semidefinite_info(g.principal(closure));
    if (info.psd && info.rank == n - 1 && ideal_seen.insert(closure).second) out.push_back({closure, true});
  }
  return out;
}

CoxeterDiagram restrict_to_facet(const CoxeterDiagram& d, int facet) {
  SymMatrix g = gram_matrix(d);
  std::vector<int> keep;
  for (int x = 0; x < d.size(); ++x)
    if (x != facet) keep.push_back(x);
  std::vector<ExactScalar> norm2(d.size());
  for (int x : keep) {
    norm2[x] = ExactScalar(1) - g(x, facet) * g(x, facet);
    if (norm2[x].sign() <= 0)
      throw DegenerateFacet("node " + d.nodes()[x] + " projects to a non-space-like vector in facet " +
                            d.nodes()[facet]);
  }
  CoxeterDiagram r;
  for (int x : keep) r.add_node(d.nodes()[x]);
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b) {
      int x = keep[a], y = keep[b];
      ExactScalar num = g(x, y) - g(x, facet) * g(y, facet);
      if (num.is_zero()) continue;
      auto root = (norm2[x] * norm2[y]).sqrt();
      if (!root) throw UnsupportedField("facet normalization leaves Q(sqrt2,sqrt3)");
      if (auto w = weight_from_gram(num / *root)) r.set_edge(int(a), int(b), *w);
    }
  return r;
}

namespace {

// Exponent parity of (sqrt2, sqrt3) for a monomial r*sqrt(k); -1 if not a monomial.
int parity(const ExactScalar& x) {
  int nz = (sgn(x.a()) != 0) + (sgn(x.b()) != 0) + (sgn(x.c()) != 0) + (sgn(x.d()) != 0);
  if (nz != 1) return -1;
  if (sgn(x.a()) != 0) return 0;
  if (sgn(x.b()) != 0) return 1;
  if (sgn(x.c()) != 0) return 2;
  return 3;
}

bool is_integer(const ExactScalar& x) { return x.is_rational() && x.a().get_den() == 1; }

}  // namespace

ArithmeticityResult arithmeticity(const CoxeterDiagram& d) {
  ArithmeticityResult res;
  SymMatrix g;
  try {
    g = gram_matrix(d);
  } catch (const UnsupportedField& e) {
    res.reason = e.what();
    return res;
  }
  int k = d.size();
  SymMatrix two(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) two.set(i, j, ExactScalar(2) * g(i, j));
  auto adjacent = [&](int i, int j) { return i != j && !two(i, j).is_zero(); };

  // Edge squares are the cyclic products along back-and-forth walks.
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(i, j)) {
        ExactScalar sq = two(i, j) * two(i, j);
        if (!is_integer(sq)) {
          res.verdict = ArithmeticityResult::Verdict::non_arithmetic;
          res.cycle = {i, j};
          res.product = sq;
          res.reason = sq.is_rational() ? "non-integral cyclic product" : "irrational cyclic product";
          return res;
        }
      }

  // Irrationality: GF(2) potentials over a spanning forest.
  bool monomial = true;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adjacent(i, j) && parity(two(i, j)) < 0) monomial = false;
  if (monomial) {
    std::vector<int> pot(k, -1), parent(k, -1), depth(k, 0);
    for (int root = 0; root < k; ++root) {
      if (pot[root] >= 0) continue;
      pot[root] = 0;
      std::vector<int> queue{root};
      for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (int v = 0; v < k; ++v)
          if (adjacent(u, v) && pot[v] < 0) {
            pot[v] = pot[u] ^ parity(two(u, v));
            parent[v] = u;
            depth[v] = depth[u] + 1;
            queue.push_back(v);
          }
      }
    }
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v) {
        if (!adjacent(u, v) || parent[v] == u || parent[u] == v) continue;
        if ((pot[u] ^ pot[v] ^ parity(two(u, v))) == 0) continue;
        // Fundamental cycle: tree paths from u and v up to their common ancestor, closed by uv.
        std::vector<int> up_u{u}, up_v{v};
        int a = u, b = v;
        while (a != b) {
          if (depth[a] >= depth[b]) up_u.push_back(a = parent[a]);
          else up_v.push_back(b = parent[b]);
        }
        up_v.pop_back();
        std::vector<int> cyc = up_u;
        cyc.insert(cyc.end(), up_v.rbegin(), up_v.rend());
        ExactScalar p(1);
        for (size_t t = 0; t < cyc.size(); ++t) p *= two(cyc[t], cyc[(t + 1) % cyc.size()]);
        res.verdict = ArithmeticityResult::Verdict::non_arithmetic;
        res.cycle = cyc;
        res.product = p;
        res.reason = "irrational cyclic product";
        return res;
      }
  }

  // Integrality (and rationality for non-monomial entries) over all simple cycles.
  std::vector<int> path;
  std::vector<bool> on(k, false);
  bool found = false;
  std::function<void(int)> dfs = [&](int u) {
    if (found) return;
    for (int v = 0; v < k && !found; ++v) {
      if (!adjacent(u, v)) continue;
      if (v == path[0] && path.size() >= 3) {
        ExactScalar p(1);
        for (size_t t = 0; t < path.size(); ++t) p *= two(path[t], path[(t + 1) % path.size()]);
        if (!is_integer(p)) {
          res.verdict = ArithmeticityResult::Verdict::non_arithmetic;
          res.cycle = path;
          res.product = p;
          res.reason = p.is_rational() ? "non-integral cyclic product" : "irrational cyclic product";
          found = true;
        }
        continue;
      }
      if (on[v] || v < path[0]) continue;
      on[v] = true;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      on[v] = false;
    }
  };
  for (int s = 0; s < k && !found; ++s) {
    path = {s};
    on[s] = true;
    dfs(s);
    on[s] = false;
  }
  if (!found) {
    res.verdict = ArithmeticityResult::Verdict::arithmetic;
    res.reason = "all cyclic products of 2G are rational integers";
  }
  return res;
}

bool ConstraintReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.passed; });
}

}  // namespace geobound
