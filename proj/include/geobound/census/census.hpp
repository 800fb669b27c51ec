#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "geobound/census/block4.hpp"
#include "geobound/graphs/graph.hpp"

namespace geobound {

// Vol(Q3) to the five digits available; P3 is the union of 24 copies.
inline constexpr double kQ3Volume = 0.40362;

struct FamilyContext {
  Family family;
  Block block;
  Block4 block4;
  double cell_volume3 = 0;
  // Orbifold Euler characteristic of the 4-dimensional cell type, as num / den.
  mpq_class cell_chi4;
};
// Built once per family and shared.
const FamilyContext& family_context(Family f);

// M_G: one block per vertex; an edge of colour j glues C_j of each end to C'_j of the other,
// cell to cell through the block involution.
IndexedComplex build_manifold(const FactorGraph& f, const Block& b);

// Graph of blocks read off the T_{2x4} cusps of a complex made of octahedra.
Graph recover_graph(const PairingComplex& m);

double volume3(const PairingComplex& m);
// (4 pi^2 / 3) chi; throws Error unless chi > 0.
double volume4(const PairingComplex& w);
mpf_class volume4(const mpz_class& chi);
mpq_class orbifold_euler_characteristic(const Polytope& p);

// W_G and D(W_G) for one factor, kept implicit.
struct Promotion {
  int N = 0;                     // top components of B4
  int colors = 0;                // colours on the top facets of W'
  mpz_class w2_cells;            // cells of W''
  mpz_class chi_w2, chi_w, chi_d;
  mpz_class boundary_lifts;      // boundary components of W'' over the bottom
  int boundary_classes = 0;      // boundary classes of W' in the cover
  bool proper = false, corners = true, orientable = false;
  bool boundary_code_match = false;
  InvolutionReport iota;
};
Promotion promote(const FactorGraph& f, const IndexedComplex& m, const std::string& m_code,
                  const FamilyContext& ctx);

struct CensusRecord {
  Family family;
  int n = 0;
  std::string graph_code;
  std::vector<std::vector<int>> adjacency;
  std::vector<std::array<int, 3>> factor;  // u, v, colour
  std::string complex_code;
  long long automorphisms = 0;
  std::map<std::string, int> cusps;
  double vol3 = 0;
  mpz_class chi3;
  Promotion promotion;
  std::map<std::string, bool> flags;
  std::string diagnosis;
  bool passed() const;
  std::string json() const;
};
CensusRecord census_record(const Graph& g, const FactorGraph& f, const FamilyContext& ctx);

bool cusp_lemma_holds(Family f, const std::map<std::string, int>& census);
// Interior tori of the blocks plus, for each alternating cycle of length k, the block annuli of
// its colour pair closed up into tori T_{2x2k}.
std::map<std::string, int> predicted_cusp_census(const FamilyContext& ctx, const FactorGraph& f);

struct CensusOptions {
  Family family = Family::arithmetic;
  int max_n = 8;
  int jobs = 0;  // 0: runtime default
  std::string out_dir = ".";
  bool resume = true;
};
struct SummaryRow {
  int n = 0;
  long long graphs = 0;     // factorable classes
  long long manifolds = 0;  // distinct complex codes
  double vol3 = 0;
  mpz_class chi4;
  mpf_class K;
};
struct CensusSummary {
  std::vector<SummaryRow> rows;
  long long records = 0, failed = 0, resumed = 0;
  bool codes_distinct = true;
  bool ratio_constant = true;
  std::string certificate;
  std::vector<std::string> failures;
  bool passed() const { return failed == 0 && codes_distinct && ratio_constant; }
};
// Largest max_n the enumeration handles in reasonable time.
inline constexpr int kCensusMaxN = 12;
CensusSummary run_census(const CensusOptions& opt, std::ostream* log = nullptr);
std::string summary_csv(const CensusSummary& s);
std::string format_real(double x);
std::string format_real(const mpf_class& x);

}  // namespace geobound
