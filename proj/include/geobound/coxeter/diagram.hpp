#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geobound/kernel/exact_scalar.hpp"
#include "geobound/kernel/matrix.hpp"

namespace geobound {

struct EdgeWeight {
  enum class Kind { label, infinity, dashed };
  Kind kind = Kind::label;
  int m = 3;                       // label
  std::optional<ExactScalar> w;    // dashed, exact when known
  double w_real = 0;               // dashed, always set

  static EdgeWeight label(int m) { return {Kind::label, m, std::nullopt, 0}; }
  static EdgeWeight infinite() { return {Kind::infinity, 0, std::nullopt, 0}; }
  static EdgeWeight dashed(const ExactScalar& w) { return {Kind::dashed, 0, w, w.to_double()}; }
  static EdgeWeight dashed(double w) { return {Kind::dashed, 0, std::nullopt, w}; }

  std::string str() const;
  friend bool operator==(const EdgeWeight& x, const EdgeWeight& y);
};

// Weighted simple graph on named nodes; absent pairs are orthogonal (label 2).
class CoxeterDiagram {
 public:
  int add_node(const std::string& name);
  // Index of name, or -1.
  int find(std::string_view name) const;
  int index(std::string_view name) const;  // throws ContractViolation when absent
  void set_edge(int i, int j, const EdgeWeight& w);
  const EdgeWeight* edge(int i, int j) const;

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::map<std::pair<int, int>, EdgeWeight>& edges() const { return edges_; }

  CoxeterDiagram induced(const std::vector<int>& subset) const;
  // Same diagram with nodes reordered: node perm[i] of this becomes node i.
  CoxeterDiagram permuted(const std::vector<int>& perm) const;

  friend bool operator==(const CoxeterDiagram&, const CoxeterDiagram&) = default;

 private:
  std::vector<std::string> nodes_;
  std::map<std::pair<int, int>, EdgeWeight> edges_;
};

// Edge-list text: "<node> <node> <label>" with label in {3,4,5,6,inf} or -<w>, "node <name>"
// declarations, '#' comments. Throws ParseError with the offending line.
CoxeterDiagram parse_diagram(std::string_view text);
std::string format_diagram(const CoxeterDiagram& d);

// Exact Gram matrix; UnsupportedField for label 5 or inexact dashed weights.
SymMatrix gram_matrix(const CoxeterDiagram& d);
Eigen::MatrixXd gram_matrix_real(const CoxeterDiagram& d);

// Gram entry back to a weight; throws Error when it is not -cos(pi/m), -1 or below -1.
std::optional<EdgeWeight> weight_from_gram(const ExactScalar& g);

// Parses rationals and sums of q*sqrtK terms, e.g. "3/2", "1+sqrt2", "2*sqrt3".
std::optional<ExactScalar> parse_exact(std::string_view s);

// Directory holding the shipped diagram and coloring files: $GEOBOUND_DATA or the
// compiled-in source data directory.
std::string data_directory();
std::string read_data_file(const std::string& name);
// Built-in name ("q4-fig4", "q3-fig6", "orthoscheme-434", "orthoscheme-4334") or a file path.
CoxeterDiagram load_diagram(const std::string& name_or_path);
std::vector<std::string> builtin_diagram_names();

}  // namespace geobound
