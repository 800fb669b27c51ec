#include "geobound/blocks/block.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "geobound/complex/coloring.hpp"
#include "geobound/complex/cusp.hpp"
#include "geobound/complex/topology.hpp"
#include "geobound/coxeter/diagram.hpp"
#include "geobound/errors.hpp"
#include "json.hpp"

namespace geobound {

Family parse_family(const std::string& s) {
  if (s == "arithmetic" || s == "a") return Family::arithmetic;
  if (s == "nonarithmetic" || s == "non-arithmetic" || s == "n") return Family::nonarithmetic;
  throw Error("unknown family '" + s + "' (arithmetic, nonarithmetic)");
}

std::string to_string(Family f) { return f == Family::arithmetic ? "arithmetic" : "nonarithmetic"; }

std::vector<int> boundary_pair_representatives() {
  std::vector<std::array<int, 3>> reps;
  for (int v = 0; v < 8; ++v)
    if (!(v & 1)) reps.push_back({v & 1, v >> 1 & 1, v >> 2 & 1});
  std::sort(reps.begin(), reps.end());
  std::vector<int> out;
  for (auto& r : reps) out.push_back(r[0] + 2 * r[1] + 4 * r[2]);
  return out;
}

namespace {

std::vector<int> facets_tagged(const Polytope& p, const std::string& tag) {
  std::vector<int> out;
  for (int f = 0; f < p.facet_count(); ++f)
    if (p.facet_tags()[f] == tag) out.push_back(f);
  return out;
}

bool meet_at_finite_point(const Polytope& p, int f, int g) {
  const auto& a = p.vertices_of(p.dim() - 1, f);
  for (int v : p.vertices_of(p.dim() - 1, g))
    if (!p.ideal(v) && std::count(a.begin(), a.end(), v)) return true;
  return false;
}

bool share_ideal_vertex(const Polytope& p, int f, int g) {
  const auto& a = p.vertices_of(p.dim() - 1, f);
  for (int v : p.vertices_of(p.dim() - 1, g))
    if (p.ideal(v) && std::count(a.begin(), a.end(), v)) return true;
  return false;
}

void index_components(Block& b, int boundary_facet, const std::function<std::vector<int>(int)>& cells_at) {
  const auto reps = boundary_pair_representatives();
  b.complex.components.assign(8, {});
  b.complex.names.assign(8, "");
  for (int j = 0; j < 4; ++j)
    for (int side = 0; side < 2; ++side) {
      int v = side ? reps[j] ^ 7 : reps[j];
      auto& comp = b.complex.components[side * 4 + j];
      for (int c : cells_at(v)) comp.push_back({c, boundary_facet});
      b.complex.names[side * 4 + j] = (side ? "C'" : "C") + std::to_string(j + 1);
    }
}

Block arithmetic_block() {
  Block b;
  b.family = Family::arithmetic;
  b.cell_type = "octahedron";
  auto type = shared_cell_type("octahedron");
  const auto black = facets_tagged(*type, "black");
  b.prime_coloring.assign(type->facet_count(), -1);
  for (int f : facets_tagged(*type, "white")) b.prime_coloring[f] = 0;
  PairingComplex o(type, 1, "octahedron");
  b.prime = coloring_quotient(o, Coloring::on_cell_type(o, b.prime_coloring));

  // D_1..D_3 are the first three black faces; D_4 carries the boundary.
  IndexedComplex prime;
  prime.complex = b.prime;
  for (int i = 0; i < 4; ++i) {
    prime.components.push_back({{0, black[i]}, {1, black[i]}});
    prime.names.push_back("D" + std::to_string(i + 1));
  }
  std::vector<GraphEdge> cube;
  for (int v = 0; v < 8; ++v)
    for (int i = 0; i < 3; ++i)
      if (!(v >> i & 1)) cube.push_back({v, v | 1 << i, i + 1});
  IndexedComplex glued = glue_by_graph(prime, 8, cube, {{1, {0}}, {2, {1}}, {3, {2}}});
  b.complex.complex = glued.complex;
  b.boundary_facet = black[3];
  b.cube_facets = {black[0], black[1], black[2]};
  index_components(b, black[3], [](int v) { return std::vector<int>{2 * v, 2 * v + 1}; });

  const int n = b.complex.complex.cells();
  b.cube_vertex.resize(n);
  b.iota.resize(n);
  b.mirrors.assign(3, std::vector<int>(n));
  for (int c = 0; c < n; ++c) {
    b.cube_vertex[c] = c >> 1;
    b.iota[c] = c ^ (7 << 1);
    for (int i = 0; i < 3; ++i) b.mirrors[i][c] = c ^ (1 << (i + 1));
  }
  return b;
}

Block nonarithmetic_block() {
  Block b;
  b.family = Family::nonarithmetic;
  b.cell_type = "p3";
  auto type = shared_cell_type("p3");
  const auto hexes = facets_tagged(*type, "hexagonal");
  require(hexes.size() == 4, "P3 must have four hexagonal facets");
  b.prime_coloring = p3_quad_coloring();
  PairingComplex p(type, 1, "p3");
  b.prime = coloring_quotient(p, Coloring::on_cell_type(p, b.prime_coloring));

  // Colour the boundary components over H_1..H_3; H_4 carries the boundary of the block.
  Coloring second;
  second.colors = 3;
  second.slot_color.assign(static_cast<size_t>(b.prime.cells()) * b.prime.facets_per_cell(), -1);
  for (int c = 0; c < b.prime.cells(); ++c)
    for (int i = 0; i < 3; ++i) second.slot_color[static_cast<size_t>(c) * b.prime.facets_per_cell() + hexes[i]] = i;
  b.complex.complex = coloring_quotient(b.prime, second);
  b.boundary_facet = hexes[3];
  b.cube_facets = {hexes[0], hexes[1], hexes[2]};
  const int copies = 8;
  index_components(b, hexes[3], [&](int v) {
    std::vector<int> cells;
    for (int q = 0; q < b.prime.cells(); ++q) cells.push_back(q * copies + v);
    return cells;
  });

  const int n = b.complex.complex.cells();
  b.cube_vertex.resize(n);
  b.iota.resize(n);
  b.mirrors.assign(3, std::vector<int>(n));
  for (int c = 0; c < n; ++c) {
    b.cube_vertex[c] = c & 7;
    b.iota[c] = c ^ 7;
    for (int i = 0; i < 3; ++i) b.mirrors[i][c] = c ^ (1 << i);
  }
  return b;
}

bool is_automorphism(const PairingComplex& x, const std::vector<int>& m) {
  for (int c = 0; c < x.cells(); ++c)
    for (int f = 0; f < x.facets_per_cell(); ++f) {
      int p = x.partner(c, f), q = x.partner(m[c], f);
      if (p < 0 ? q >= 0 : q != m[p]) return false;
    }
  return true;
}

bool is_involution(const std::vector<int>& m) {
  for (size_t c = 0; c < m.size(); ++c)
    if (m[m[c]] != int(c)) return false;
  return true;
}

bool flips_signs(const std::vector<int>& sign, const std::vector<int>& m) {
  for (size_t c = 0; c < m.size(); ++c)
    if (sign[m[c]] != -sign[c]) return false;
  return true;
}

}  // namespace

std::vector<std::vector<int>> solve_p3_quad_colorings() {
  auto type = shared_cell_type("p3");
  const auto quads = facets_tagged(*type, "quadrilateral");
  const int n = int(quads.size());
  std::vector<int> col(n, -1);
  std::vector<std::vector<int>> out;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used != 3) return;
      std::vector<int> full(type->facet_count(), -1);
      for (int k = 0; k < n; ++k) full[quads[k]] = col[k];
      out.push_back(full);
      return;
    }
    for (int c = 0; c <= std::min(used, 2); ++c) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        bool meet = meet_at_finite_point(*type, quads[i], quads[j]);
        if (meet && col[j] == c) ok = false;
        if (!meet && share_ideal_vertex(*type, quads[i], quads[j]) && col[j] != c) ok = false;
      }
      if (!ok) continue;
      col[i] = c;
      rec(i + 1, std::max(used, c + 1));
      col[i] = -1;
    }
  };
  rec(0, 0);
  return out;
}

std::vector<int> p3_quad_coloring() {
  auto type = shared_cell_type("p3");
  std::vector<int> col(type->facet_count(), -1);
  std::istringstream in(read_data_file("p3-quad-coloring.txt"));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    int f, c;
    if (!(ls >> f)) continue;
    if (!(ls >> c) || f < 0 || f >= type->facet_count() || c < 1 || c > 3)
      throw ParseError(lineno, "bad colouring entry");
    if (type->facet_tags()[f] != "quadrilateral") throw ParseError(lineno, "facet is not quadrilateral");
    col[f] = c - 1;
  }
  for (int f : facets_tagged(*type, "quadrilateral"))
    if (col[f] < 0) throw ColoringError("quadrilateral facet " + std::to_string(f) + " has no colour");
  return col;
}

Block build_block(Family family) {
  return family == Family::arithmetic ? arithmetic_block() : nonarithmetic_block();
}

bool InvolutionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

InvolutionReport involution_checks(const PairingComplex& x, const std::vector<int>& iota) {
  InvolutionReport r;
  require(int(iota.size()) == x.cells(), "involution_checks: map size");

  r.checks.push_back({"involution squares to the identity", is_involution(iota), ""});
  r.checks.push_back({"involution preserves the gluing", is_automorphism(x, iota), ""});

  // Fixed points: a cell, or a finite face class of any dimension, mapped to itself.
  std::string fixed;
  for (int c = 0; c < x.cells() && fixed.empty(); ++c)
    if (iota[c] == c) fixed = "cell " + std::to_string(c);
  FaceClasses fc = face_classes(x);
  for (int k = 0; k < x.dim() && fixed.empty(); ++k) {
    const int per = x.type().count(k);
    for (int c = 0; c < x.cells() && fixed.empty(); ++c)
      for (int i = 0; i < per; ++i) {
        int a = fc.classes[k][static_cast<size_t>(c) * per + i];
        if (k == 0 && fc.ideal_vertex[a]) continue;
        if (a == fc.classes[k][static_cast<size_t>(iota[c]) * per + i]) {
          fixed = std::to_string(k) + "-face " + std::to_string(i) + " of cell " + std::to_string(c);
          break;
        }
      }
  }
  r.checks.push_back({"no fixed flag", fixed.empty(), fixed.empty() ? "" : "fixes " + fixed});

  Orientation o = orientability(x);
  r.checks.push_back({"orientation reversing", o.orientable && flips_signs(o.sign, iota), ""});
  return r;
}

InvolutionReport verify_involution(const Block& b, const std::vector<int>* override_map) {
  const std::vector<int>& iota = override_map ? *override_map : b.iota;
  const PairingComplex& x = b.complex.complex;
  InvolutionReport r = involution_checks(x, iota);
  Orientation o = orientability(x);

  bool pairs = true;
  for (int j = 0; j < 4; ++j) {
    std::set<FacetRef> image, target(b.complex.components[4 + j].begin(), b.complex.components[4 + j].end());
    for (const FacetRef& s : b.complex.components[j]) image.insert({iota[s.cell], s.facet});
    pairs &= image == target;
  }
  r.checks.push_back({"maps C_j onto C'_j", pairs, ""});

  bool decomposes = b.mirrors.size() == 3;
  std::string why;
  for (size_t i = 0; i < b.mirrors.size() && decomposes; ++i) {
    const auto& m = b.mirrors[i];
    if (!is_involution(m) || !is_automorphism(x, m) || !o.orientable || !flips_signs(o.sign, m)) {
      decomposes = false;
      why = "r" + std::to_string(i + 1) + " is not a sign-flipping mirror swap";
    }
  }
  for (int c = 0; c < x.cells() && decomposes; ++c)
    if (b.mirrors[0][b.mirrors[1][b.mirrors[2][c]]] != iota[c]) {
      decomposes = false;
      why = "r1 r2 r3 differs at cell " + std::to_string(c);
    }
  r.checks.push_back({"equals r1 r2 r3", decomposes, why});
  return r;
}

std::map<std::string, int> block_cusp_census(const Block& b) {
  auto sections = cusp_links(b.complex.complex);
  std::map<std::string, int> out;
  for (const auto& s : sections) {
    if (s.kind == CuspSection::Kind::other) throw Error("cusp section of unrecognised shape");
    if (b.family == Family::arithmetic) {
      if (s.h == 0) throw Error("cusp section without 2 x h normal form");
      ++out[s.name()];
    } else {
      ++out[s.kind == CuspSection::Kind::torus ? "torus" : "annulus"];
    }
  }
  return out;
}

std::string block_json(const Block& b) {
  nlohmann::json j;
  j["family"] = to_string(b.family);
  j["complex"] = nlohmann::json::parse(complex_json(b.complex.complex));
  nlohmann::json idx = nlohmann::json::object();
  for (size_t i = 0; i < b.complex.components.size(); ++i) {
    nlohmann::json slots = nlohmann::json::array();
    for (const auto& s : b.complex.components[i]) slots.push_back({s.cell, s.facet});
    idx[b.complex.names[i]] = slots;
  }
  j["boundary_index"] = idx;
  j["iota"] = b.iota;
  j["cube_vertex"] = b.cube_vertex;
  return j.dump();
}

}  // namespace geobound
