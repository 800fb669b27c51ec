#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace geobound {

// Simple graph on at most 64 vertices, adjacency as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int size() const { return n_; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u] >> v & 1; }
  uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  std::vector<std::pair<int, int>> edges() const;
  bool connected() const;
  bool regular(int d) const;
  // Vertex v becomes perm[v].
  Graph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<uint64_t> adj_;
};

struct GraphCode {
  int n = 0;
  std::vector<uint64_t> rows;
  std::string hex() const;
  friend bool operator==(const GraphCode&, const GraphCode&) = default;
  friend auto operator<=>(const GraphCode&, const GraphCode&) = default;
};

// Relabelling-invariant code: smallest adjacency among the leaves of an individualisation
// and refinement search.
GraphCode canonical_form(const Graph& g);
// Labelling attaining the canonical form: vertex v gets label[v].
std::vector<int> canonical_labeling(const Graph& g);
Graph graph_from_code(const GraphCode& c);

// Connected simple 4-regular graphs on n vertices, one per isomorphism class, sorted by code.
// Closure of a circulant under edge switches; parallel over each frontier.
std::vector<Graph> enumerate_regular(int n);
std::vector<Graph> enumerate_regular_serial(int n);

struct FactorGraph {
  Graph graph;
  int colors = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, u < v
  std::vector<int> color;                  // 1..colors, aligned with edges
  int color_of(int u, int v) const;
};

// Proper edge colouring with degree many colours by backtracking; empty when none exists.
// Vertex 0 gets colours 1..c on its edges in neighbour order.
std::vector<FactorGraph> one_factorization(const Graph& g, int max_results = 1);
bool is_valid_factor(const FactorGraph& f);

struct AlternatingCycle {
  int i = 0, j = 0, length = 0;
};
// Throws Error on an odd cycle or a cycle of length 2.
std::vector<AlternatingCycle> alternating_cycles(const FactorGraph& f);

struct CountRow {
  int n = 0;
  long long regular = 0, factorable = 0;
  double fraction() const { return regular ? double(factorable) / double(regular) : 0.0; }
};
std::vector<CountRow> count_table(int max_n);
std::string count_table_csv(const std::vector<CountRow>& rows);

// Exchange format: one line per vertex, "v: a b c d", with " | c1 c2 c3 c4" colours for a factor.
std::string format_graph(const Graph& g);
std::string format_factor(const FactorGraph& f);
Graph parse_graph(const std::string& text);
FactorGraph parse_factor(const std::string& text);

Graph cubical_graph();

}  // namespace geobound
