#include "geobound/census/block4.hpp"

#include <algorithm>

#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"

namespace geobound {

namespace {

// Single colouring of B's cell type whose quotient is B with the same cell numbering.
std::vector<int> block_facet_colors(const Block& b) {
  std::vector<int> colours(b.prime_coloring.size(), -1);
  if (b.family == Family::arithmetic) {
    colours = b.prime_coloring;
    for (int i = 0; i < 3; ++i) colours[b.cube_facets[i]] = i + 1;
  } else {
    for (size_t f = 0; f < colours.size(); ++f)
      if (b.prime_coloring[f] >= 0) colours[f] = 3 + b.prime_coloring[f];
    for (int i = 0; i < 3; ++i) colours[b.cube_facets[i]] = i;
  }
  return colours;
}

bool share_finite_vertex(const Polytope& p, int f, int g) {
  const auto& a = p.vertices_of(p.dim() - 1, f);
  for (int v : p.vertices_of(p.dim() - 1, g))
    if (!p.ideal(v) && std::count(a.begin(), a.end(), v)) return true;
  return false;
}

}  // namespace

Block4 build_block4(const Block& b) {
  Block4 r;
  r.family = b.family;
  r.cell_type = b.family == Family::arithmetic ? "24-cell" : "p4";
  auto type = shared_cell_type(r.cell_type);
  auto block_type = shared_cell_type(b.cell_type);
  const Polytope& p = *type;
  const int nf = p.facet_count();

  const std::vector<int> block_colours = block_facet_colors(b);
  {
    PairingComplex one(block_type, 1, b.cell_type);
    if (!(coloring_quotient(one, Coloring::on_cell_type(one, block_colours)) == b.complex.complex))
      throw Error("build_block4: block is not a single colouring of its cell type");
  }

  auto view = p.facet(r.bottom_facet);
  auto iso = find_isomorphism(view.polytope, *block_type);
  if (iso.empty()) throw Error("build_block4: bottom facet is not the cell type of the block");
  r.bottom_to_cell = iso[2];

  r.role.assign(nf, Block4::Role::top);
  r.over.assign(nf, -1);
  r.role[r.bottom_facet] = Block4::Role::bottom;
  for (int j = 0; j < view.polytope.facet_count(); ++j) {
    int ridge = view.face_map[2][j];
    for (int g : p.facets_of(2, ridge))
      if (g != r.bottom_facet) {
        r.role[g] = Block4::Role::vertical;
        r.over[g] = r.bottom_to_cell[j];
      }
  }
  for (int g = 0; g < nf; ++g)
    if (r.role[g] == Block4::Role::top && share_finite_vertex(p, g, r.bottom_facet))
      throw Error("build_block4: facet " + std::to_string(g) + " meets the bottom without a common ridge");

  r.facet_colors.assign(nf, -1);
  for (int g = 0; g < nf; ++g)
    if (r.over[g] >= 0) r.facet_colors[g] = block_colours[r.over[g]];
  r.colors = *std::max_element(block_colours.begin(), block_colours.end()) + 1;

  PairingComplex one(type, 1, r.cell_type);
  Coloring col = Coloring::on_cell_type(one, r.facet_colors);
  check_coloring(one, col);
  r.complex.complex = coloring_quotient(one, col);
  const PairingComplex& x = r.complex.complex;
  if (x.cells() != b.complex.complex.cells()) throw Error("build_block4: cell count differs from the block");

  int boundary_vertical = -1;
  for (int g = 0; g < nf; ++g)
    if (r.over[g] == b.boundary_facet) boundary_vertical = g;
  for (size_t k = 0; k < b.complex.components.size(); ++k) {
    std::vector<FacetRef> comp;
    for (const FacetRef& s : b.complex.components[k]) comp.push_back({s.cell, boundary_vertical});
    r.complex.components.push_back(comp);
    r.complex.names.push_back("V" + b.complex.names[k]);
  }

  for (int c = 0; c < x.cells(); ++c) r.bottom.push_back({c, r.bottom_facet});
  r.top_of_slot.assign(static_cast<size_t>(x.cells()) * nf, -1);
  int bottoms = 0, verticals = 0;
  for (auto& comp : boundary_components(x)) {
    std::sort(comp.begin(), comp.end());
    switch (r.role[comp.front().facet]) {
      case Block4::Role::bottom:
        ++bottoms;
        if (comp != r.bottom) throw Error("build_block4: bottom is not a single boundary component");
        break;
      case Block4::Role::vertical:
        ++verticals;
        if (std::find_if(r.complex.components.begin(), r.complex.components.end(), [&](auto i) {
              std::sort(i.begin(), i.end());
              return i == comp;
            }) == r.complex.components.end())
          throw Error("build_block4: vertical boundary component is not an interface");
        break;
      case Block4::Role::top:
        for (const FacetRef& s : comp)
          r.top_of_slot[static_cast<size_t>(s.cell) * nf + s.facet] = r.N();
        r.top.push_back(comp);
        break;
    }
  }
  if (bottoms != 1 || verticals != int(r.complex.components.size()))
    throw Error("build_block4: unexpected boundary components");

  r.iota = b.iota;
  r.top_color.assign(r.N(), -1);
  for (int t = 0; t < r.N(); ++t) {
    if (r.top_color[t] >= 0) continue;
    const FacetRef s = r.top[t].front();
    const int image = r.top_of_slot[static_cast<size_t>(r.iota[s.cell]) * nf + s.facet];
    for (const FacetRef& u : r.top[t])
      if (r.top_of_slot[static_cast<size_t>(r.iota[u.cell]) * nf + u.facet] != image)
        throw Error("build_block4: involution splits a top component");
    r.top_color[t] = r.top_color[image] = r.top_colors++;
  }
  return r;
}

PairingComplex bottom_as_block(const Block4& b4) {
  PairingComplex bc = boundary_complex(b4.complex.complex, b4.bottom);
  const std::string name = b4.family == Family::arithmetic ? "octahedron" : "p3";
  PairingComplex out(shared_cell_type(name), bc.cells(), name);
  for (int c = 0; c < bc.cells(); ++c)
    for (int j = 0; j < bc.facets_per_cell(); ++j) {
      int p = bc.partner(c, j);
      if (p > c) out.pair(c, p, b4.bottom_to_cell[j]);
    }
  return out;
}

Coloring top_coloring(const Block4& b4, const PairingComplex& w) {
  const PairingComplex& x = b4.complex.complex;
  const int nf = x.facets_per_cell();
  require(w.facets_per_cell() == nf && w.cells() % x.cells() == 0, "top_coloring: not built from the block");
  Coloring c;
  c.colors = b4.top_colors;
  c.slot_color.assign(static_cast<size_t>(w.cells()) * nf, -1);
  for (int cell = 0; cell < w.cells(); ++cell)
    for (int f = 0; f < nf; ++f)
      if (w.is_boundary(cell, f))
        if (int t = b4.top_of_slot[static_cast<size_t>(cell % x.cells()) * nf + f]; t >= 0)
          c.slot_color[static_cast<size_t>(cell) * nf + f] = b4.top_color[t];
  return c;
}

}  // namespace geobound
