#include "geobound/census/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "geobound/census/census.hpp"
#include "geobound/complex/canonical_code.hpp"
#include "geobound/complex/cusp.hpp"
#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"
#include "geobound/geometry/hyperbolic.hpp"

namespace geobound {

bool VerifyReport::passed() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids{"cusps-B",         "cusps-MG",          "involution",  "recovery",
                                            "right-angled-P4", "combinatorics-P3", "volume-ratio"};
  return ids;
}

namespace {

struct Factor {
  Graph graph;
  FactorGraph factor;
};

std::vector<Factor> factors(int max_n) {
  std::vector<Factor> out;
  for (int n = 6; n <= max_n; n += 2)
    for (const Graph& g : enumerate_regular(n))
      if (auto f = one_factorization(g); !f.empty()) out.push_back({g, f[0]});
  return out;
}

std::string census_str(const std::map<std::string, int>& c) {
  std::string s;
  for (auto& [k, v] : c) s += (s.empty() ? "" : " ") + k + ":" + std::to_string(v);
  return s;
}

bool incidence_connected(const Block& b) {
  const int n = b.complex.complex.cells();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  std::vector<bool> touched(n, false);
  for (auto& s : cusp_links(b.complex.complex)) {
    if (s.kind != CuspSection::Kind::torus) continue;
    for (auto& [cell, v] : s.tile_list) {
      touched[cell] = true;
      parent[find(cell)] = find(s.tile_list.front().first);
    }
  }
  std::set<int> roots;
  for (int c = 0; c < n; ++c) {
    if (!touched[c]) return false;
    roots.insert(find(c));
  }
  return roots.size() == 1;
}

void cusps_b(VerifyReport& r) {
  for (Family fam : {Family::arithmetic, Family::nonarithmetic}) {
    const Block& b = family_context(fam).block;
    const std::string tag = to_string(fam) + " block: ";
    std::map<std::string, int> census;
    try {
      census = block_cusp_census(b);
      r.checks.push_back({tag + "every section is a torus or an annulus", true, census_str(census)});
    } catch (const Error& e) {
      r.checks.push_back({tag + "every section is a torus or an annulus", false, e.what()});
      continue;
    }
    if (fam == Family::arithmetic) {
      r.checks.push_back({tag + "census is T_{2x4}: 6, A_{2x2}: 12",
                          census == std::map<std::string, int>{{"T_{2x4}", 6}, {"A_{2x2}", 12}}, census_str(census)});
      bool systole = true;
      for (auto& s : cusp_links(b.complex.complex))
        if (s.kind == CuspSection::Kind::torus) systole = systole && s.systole == 2;
      r.checks.push_back({tag + "interior tori have systole 2", systole, ""});
      r.checks.push_back({tag + "octahedron-torus incidence is connected", incidence_connected(b), ""});
    }
  }
}

void cusps_mg(VerifyReport& r, int max_n) {
  for (Family fam : {Family::arithmetic, Family::nonarithmetic}) {
    const FamilyContext& ctx = family_context(fam);
    const int top = fam == Family::arithmetic ? max_n : std::min(max_n, 6);
    int records = 0, lemma = 0, predicted = 0;
    std::string first_bad;
    for (const Factor& f : factors(top)) {
      auto m = build_manifold(f.factor, ctx.block);
      auto census = cusp_census(cusp_links(m.complex));
      ++records;
      bool ok = cusp_lemma_holds(fam, census);
      lemma += ok;
      bool match = census == predicted_cusp_census(ctx, f.factor);
      predicted += match;
      if ((!ok || !match) && first_bad.empty()) first_bad = census_str(census);
    }
    const std::string tag = to_string(fam) + " n <= " + std::to_string(top) + ": ";
    r.checks.push_back({tag + "sections are T_{2x4} or T_{2x2k} with 2k >= 8", lemma == records,
                        std::to_string(lemma) + "/" + std::to_string(records) + " " + first_bad});
    r.checks.push_back({tag + "census predicted by alternating cycles", predicted == records,
                        std::to_string(predicted) + "/" + std::to_string(records)});
  }
}

void involution(VerifyReport& r, int max_n) {
  for (Family fam : {Family::arithmetic, Family::nonarithmetic}) {
    const FamilyContext& ctx = family_context(fam);
    for (auto& c : verify_involution(ctx.block).checks)
      r.checks.push_back({to_string(fam) + " block: " + c.name, c.passed, c.detail});
    const int cells = ctx.block.complex.complex.cells();
    int ok = 0, total = 0;
    for (const Factor& f : factors(fam == Family::arithmetic ? max_n : std::min(max_n, 6))) {
      auto m = build_manifold(f.factor, ctx.block);
      std::vector<int> iota(m.complex.cells());
      for (int c = 0; c < m.complex.cells(); ++c) iota[c] = c / cells * cells + ctx.block.iota[c % cells];
      ok += involution_checks(m.complex, iota).passed();
      ++total;
    }
    r.checks.push_back({to_string(fam) + ": induced involution of M_G is free and orientation reversing", ok == total,
                        std::to_string(ok) + "/" + std::to_string(total)});
  }
}

void recovery(VerifyReport& r, int max_n) {
  const FamilyContext& ctx = family_context(Family::arithmetic);
  int ok = 0, total = 0;
  std::set<std::string> codes;
  for (const Factor& f : factors(max_n)) {
    auto m = build_manifold(f.factor, ctx.block);
    ++total;
    try {
      ok += canonical_form(recover_graph(m.complex)) == canonical_form(f.graph);
    } catch (const RecoveryError&) {
    }
    codes.insert(canonical_code(m.complex).hex);
  }
  r.checks.push_back({"recovered graph is isomorphic to the factor graph, n <= " + std::to_string(max_n),
                      ok == total && total > 0, std::to_string(ok) + "/" + std::to_string(total)});
  r.checks.push_back({"complex codes pairwise distinct", int(codes.size()) == total,
                      std::to_string(codes.size()) + " codes for " + std::to_string(total) + " graphs"});
  Graph single = recover_graph(ctx.block.complex.complex);
  r.checks.push_back({"block alone recovers a single vertex", single.size() == 1 && single.edges().empty(), ""});
  bool refused = false;
  try {
    recover_graph(ctx.block.prime);
  } catch (const RecoveryError&) {
    refused = true;
  }
  r.checks.push_back({"complex without T_{2x4} cusps is refused", refused, ""});
}

void right_angled_p4(VerifyReport& r) {
  auto rp = builtin_polytope("p4");
  const Polytope& p = rp.polytope;
  auto rep = verify_right_angled(p, rp.system);
  std::ostringstream d;
  d << rep.adjacent_pairs << " adjacent pairs, max product " << rep.max_adjacent_product;
  r.checks.push_back({"adjacent facets orthogonal within 1e-9", rep.passed() && rep.max_adjacent_product < 1e-9, d.str()});
  r.checks.push_back({"tangent facets have product -1 within 1e-9",
                      rep.tangent_pairs > 0 && rep.max_tangent_error < 1e-9,
                      std::to_string(rep.tangent_pairs) + " tangent pairs"});
  auto p3 = builtin_polytope("p3").polytope;
  r.checks.push_back({"bottom facet is P3", !find_isomorphism(p.facet(0).polytope, p3).empty(), ""});
  const Block4& b4 = family_context(Family::nonarithmetic).block4;
  int vertical = 0;
  for (auto role : b4.role) vertical += role == Block4::Role::vertical;
  r.checks.push_back({"one vertical facet over each face of P3", vertical == p3.facet_count(), std::to_string(vertical)});
  std::ostringstream fv;
  for (int x : p.f_vector()) fv << x << " ";
  fv << "ideal " << p.ideal_vertex_count();
  r.checks.push_back({"face lattice", p.facet_count() > 0, fv.str()});
}

void combinatorics_p3(VerifyReport& r) {
  auto rp = builtin_polytope("p3");
  const Polytope& p = rp.polytope;
  int hex = 0, quad = 0;
  for (auto& t : p.facet_tags()) (t == "hexagonal" ? hex : quad) += t == "hexagonal" || t == "quadrilateral";
  r.checks.push_back({"4 hexagons and 12 quadrilaterals", hex == 4 && quad == 12 && p.facet_count() == 16, ""});
  r.checks.push_back({"6 ideal vertices", p.ideal_vertex_count() == 6, ""});
  r.checks.push_back({"symmetry group of order 24", symmetry_group(p).order() == 24, ""});
  r.checks.push_back({"right-angled", verify_right_angled(p, rp.system).passed(), ""});
  auto solutions = solve_p3_quad_colorings();
  r.checks.push_back({"quadrilateral colouring unique up to renaming", solutions.size() == 1,
                      std::to_string(solutions.size()) + " solutions"});
  auto data = p3_quad_coloring();
  std::map<int, int> rename;
  bool same = solutions.size() == 1;
  for (size_t f = 0; same && f < data.size(); ++f) {
    if ((data[f] < 0) != (solutions[0][f] < 0)) same = false;
    if (data[f] < 0) continue;
    auto [it, fresh] = rename.emplace(data[f], solutions[0][f]);
    if (it->second != solutions[0][f]) same = false;
  }
  r.checks.push_back({"data file agrees with the solved colouring", same, ""});
}

void volume_ratio(VerifyReport& r, int max_n) {
  for (Family fam : {Family::arithmetic, Family::nonarithmetic}) {
    const FamilyContext& ctx = family_context(fam);
    const int top = fam == Family::arithmetic ? max_n : std::min(max_n, 6);
    int total = 0, good = 0;
    bool constant = true;
    mpz_class ref_chi, ref_n;
    for (const Factor& f : factors(top)) {
      CensusRecord rec = census_record(f.graph, f.factor, ctx);
      ++total;
      good += rec.passed();
      const mpz_class chi = rec.promotion.chi_w;
      if (ref_n == 0) {
        ref_chi = chi;
        ref_n = rec.n;
      } else if (chi * ref_n != ref_chi * rec.n) {
        constant = false;
      }
    }
    const std::string tag = to_string(fam) + " n <= " + std::to_string(top) + ": ";
    r.checks.push_back({tag + "every record passes its flags", good == total && total > 0,
                        std::to_string(good) + "/" + std::to_string(total)});
    r.checks.push_back({tag + "chi(W_G) / n is the same for every record", constant, ""});
  }
}

}  // namespace

VerifyReport run_verify(const std::string& id, int max_n) {
  VerifyReport r;
  r.id = id;
  if (id == "cusps-B") cusps_b(r);
  else if (id == "cusps-MG") cusps_mg(r, max_n);
  else if (id == "involution") involution(r, max_n);
  else if (id == "recovery") recovery(r, max_n);
  else if (id == "right-angled-P4") right_angled_p4(r);
  else if (id == "combinatorics-P3") combinatorics_p3(r);
  else if (id == "volume-ratio") volume_ratio(r, max_n);
  else {
    std::string ids;
    for (auto& i : verify_ids()) ids += " " + i;
    throw Error("unknown verify id '" + id + "'; available:" + ids);
  }
  return r;
}

}  // namespace geobound
