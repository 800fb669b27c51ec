#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "geobound/blocks/block.hpp"
#include "geobound/census/census.hpp"
#include "geobound/census/verify.hpp"
#include "geobound/complex/canonical_code.hpp"
#include "geobound/coxeter/diagram.hpp"
#include "geobound/coxeter/vinberg.hpp"
#include "geobound/errors.hpp"
#include "geobound/geometry/hyperbolic.hpp"
#include "geobound/kernel/matrix.hpp"

using namespace geobound;

namespace {

// Exit codes: 0 all checks passed, 1 a verification failed, 2 bad input or runtime error.
constexpr int kFailed = 1;
constexpr int kError = 2;

struct Config {
  std::string family = "arithmetic";
  int max_n = 8;
  int jobs = 0;
  std::string out;
  double tol = kSignatureTol;
  unsigned seed = 1;
  std::string diagram;
  bool validate = false;
  bool arithmeticity = false;
  bool json = false;
  bool fresh = false;
  int shuffles = 50;
  std::string name;
};

int report(const std::string& label, bool ok, const std::string& detail = {}) {
  std::cout << (ok ? "PASS " : "FAIL ") << label;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  return ok ? 0 : kFailed;
}

std::string subset_str(const CoxeterDiagram& d, const std::vector<int>& nodes) {
  std::string s = "{";
  for (size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + d.nodes()[nodes[i]];
  return s + "}";
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

int cmd_coxeter(const Config& c) {
  if (c.tol <= 0) throw Error("--tol must be positive");
  CoxeterDiagram d = load_diagram(c.diagram);
  std::cout << format_diagram(d);
  Eigen::MatrixXd g = gram_matrix_real(d);
  std::cout << "gram matrix:\n" << g << "\n";
  Signature s = signature(g, c.tol);
  std::cout << "signature: (" << s.pos << "," << s.neg << "," << s.zero << ")\n";
  int status = 0;
  if (s.neg == 1) {
    for (const DiagramVertex& v : diagram_vertices(d, s.pos))
      std::cout << "vertex " << subset_str(d, v.nodes) << ": " << (v.ideal ? "ideal" : "finite") << "\n";
  } else {
    std::cout << "not hyperbolic\n";
    status = kFailed;
  }
  if (c.validate) {
    ConstraintReport r = validate_q4_constraints(d);
    for (const ConstraintCheck& k : r.checks) status |= report(k.name, k.passed, k.detail);
  }
  if (c.arithmeticity) {
    ArithmeticityResult a = arithmeticity(d);
    std::cout << "arithmeticity: " << to_string(a.verdict) << "\n";
    if (!a.cycle.empty())
      std::cout << "certificate: cycle " << subset_str(d, a.cycle) << " with product " << a.product.str() << "\n";
    if (!a.reason.empty()) std::cout << "reason: " << a.reason << "\n";
  }
  return status;
}

int cmd_polytope(const Config& c) {
  RealizedPolytope rp = builtin_polytope(c.name);
  const Polytope& p = rp.polytope;
  if (c.json) {
    write_or_print(c.out, polytope_json(p) + "\n");
    return 0;
  }
  std::cout << c.name << ": f-vector";
  for (int x : p.f_vector()) std::cout << " " << x;
  std::cout << ", ideal vertices " << p.ideal_vertex_count() << ", symmetry order " << symmetry_group(p).order()
            << "\n";
  std::map<std::string, int> tags;
  for (const auto& t : p.facet_tags()) ++tags[t];
  for (auto& [t, n] : tags) std::cout << "  " << n << " " << t << " facets\n";
  RightAngleReport r = verify_right_angled(p, rp.system, c.tol);
  std::ostringstream d;
  d << r.adjacent_pairs << " adjacent, " << r.tangent_pairs << " tangent, max product " << r.max_adjacent_product;
  return report("right-angled", r.passed(), d.str());
}

int cmd_block(const Config& c) {
  const FamilyContext& ctx = family_context(parse_family(c.family));
  if (c.json) {
    write_or_print(c.out, block_json(ctx.block) + "\n");
    return 0;
  }
  const Block& b = ctx.block;
  std::cout << to_string(b.family) << " block: " << b.complex.complex.cells() << " cells of type " << b.cell_type
            << "\n";
  int status = 0;
  for (auto& k : verify_involution(b).checks) status |= report(k.name, k.passed, k.detail);
  for (auto& [name, n] : block_cusp_census(b)) std::cout << "cusp " << name << ": " << n << "\n";
  std::cout << "B4: " << ctx.block4.complex.complex.cells() << " cells of type " << ctx.block4.cell_type
            << ", N = " << ctx.block4.N() << " top components, " << ctx.block4.top_colors << " top colours\n";
  return status;
}

int cmd_graphs(const Config& c) {
  if (c.max_n > kCensusMaxN) throw Error("--max-n above " + std::to_string(kCensusMaxN) + " is not supported");
  write_or_print(c.out, count_table_csv(count_table(c.max_n)));
  return 0;
}

int cmd_census(const Config& c) {
  CensusOptions opt;
  opt.family = parse_family(c.family);
  opt.max_n = c.max_n;
  opt.jobs = c.jobs;
  opt.out_dir = c.out.empty() ? "." : c.out;
  opt.resume = !c.fresh;
  CensusSummary s = run_census(opt, &std::cerr);
  std::cout << summary_csv(s);
  std::cout << "records " << s.records << " (resumed " << s.resumed << "), failed " << s.failed << "\n";
  std::cout << "certificate: " << s.certificate << "\n";
  int status = report("complex codes pairwise distinct", s.codes_distinct);
  status |= report("volume ratio constant", s.ratio_constant);
  for (const auto& f : s.failures) std::cout << "FAIL " << f << "\n";
  return s.passed() ? status : kFailed;
}

int cmd_verify(const Config& c) {
  VerifyReport r = run_verify(c.name, c.max_n);
  int status = 0;
  for (const auto& k : r.checks) status |= report(k.name, k.passed, k.detail);
  std::cout << r.id << ": " << (r.passed() ? "pass" : "fail") << "\n";
  return r.passed() ? 0 : std::max(status, kFailed);
}

// Canonical codes of census complexes under random relabelling of their cells.
int cmd_invariance(const Config& c) {
  const FamilyContext& ctx = family_context(parse_family(c.family));
  std::mt19937 rng(c.seed);
  int complexes = 0, mismatches = 0;
  for (int n = 6; n <= c.max_n && complexes < 10; n += 2)
    for (const Graph& g : enumerate_regular(n)) {
      auto f = one_factorization(g);
      if (f.empty() || complexes == 10) continue;
      PairingComplex m = build_manifold(f[0], ctx.block).complex;
      const std::string code = canonical_code(m).hex;
      std::vector<int> perm(m.cells());
      std::iota(perm.begin(), perm.end(), 0);
      for (int t = 0; t < c.shuffles; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        mismatches += canonical_code(m.relabeled(perm)).hex != code;
      }
      ++complexes;
    }
  return report("canonical code invariant under relabelling", mismatches == 0 && complexes > 0,
                std::to_string(complexes) + " complexes x " + std::to_string(c.shuffles) + " shuffles, seed " +
                    std::to_string(c.seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometrically bounding hyperbolic manifolds from right-angled blocks"};
  app.require_subcommand(1);
  Config c;

  auto* cox = app.add_subcommand("coxeter", "Gram matrix, vertices, constraints and arithmeticity of a diagram");
  cox->add_option("--diagram", c.diagram, "built-in name or .cox file")->required();
  cox->add_flag("--validate", c.validate, "check the pyramid constraints");
  cox->add_flag("--arithmeticity", c.arithmeticity, "run the cyclic-product criterion");
  cox->add_option("--tol", c.tol, "eigenvalue tolerance");

  auto* poly = app.add_subcommand("polytope", "Face lattice and right angles of a built-in polytope");
  poly->add_option("name", c.name, "octahedron, 24-cell, p3 or p4")->required();
  poly->add_flag("--json", c.json);
  poly->add_option("--out", c.out);
  poly->add_option("--tol", c.tol);

  auto* blk = app.add_subcommand("block", "Block B of a family, its involution and cusps");
  blk->add_option("--family", c.family)->check(CLI::IsMember({"arithmetic", "nonarithmetic"}));
  blk->add_flag("--json", c.json);
  blk->add_option("--out", c.out);

  auto* gr = app.add_subcommand("graphs", "Counts of 4-regular and factorable graphs per vertex count");
  gr->add_option("--max-n", c.max_n)->check(CLI::PositiveNumber);
  gr->add_option("--out", c.out, "CSV path");

  auto* cen = app.add_subcommand("census", "Build, verify and promote M_G for every factorable graph");
  cen->add_option("--family", c.family)->check(CLI::IsMember({"arithmetic", "nonarithmetic"}));
  cen->add_option("--max-n", c.max_n)->check(CLI::PositiveNumber);
  cen->add_option("--jobs", c.jobs, "worker cap")->check(CLI::NonNegativeNumber);
  cen->add_option("--out", c.out, "output directory");
  cen->add_flag("--fresh", c.fresh, "ignore records from an earlier run");

  auto* ver = app.add_subcommand("verify", "Run the checks behind one statement");
  std::string ids;
  for (auto& i : verify_ids()) ids += (ids.empty() ? "" : ", ") + i;
  ver->add_option("id", c.name, ids)->required();
  ver->add_option("--max-n", c.max_n)->check(CLI::PositiveNumber);

  auto* inv = app.add_subcommand("invariance", "Canonical codes under random cell relabelling");
  inv->add_option("--family", c.family)->check(CLI::IsMember({"arithmetic", "nonarithmetic"}));
  inv->add_option("--max-n", c.max_n)->check(CLI::PositiveNumber);
  inv->add_option("--seed", c.seed);
  inv->add_option("--shuffles", c.shuffles)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kError;
  }

  try {
    if (*cox) return cmd_coxeter(c);
    if (*poly) return cmd_polytope(c);
    if (*blk) return cmd_block(c);
    if (*gr) return cmd_graphs(c);
    if (*cen) return cmd_census(c);
    if (*ver) return cmd_verify(c);
    if (*inv) return cmd_invariance(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
