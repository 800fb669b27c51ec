#include "geobound/graphs/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "geobound/errors.hpp"

namespace geobound {

Graph::Graph(int n) : n_(n), adj_(n, 0) { require(n >= 0 && n <= 64, "Graph: at most 64 vertices"); }

void Graph::add_edge(int u, int v) {
  require(u != v && u >= 0 && v >= 0 && u < n_ && v < n_, "Graph: invalid edge");
  adj_[u] |= uint64_t(1) << v;
  adj_[v] |= uint64_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(uint64_t(1) << v);
  adj_[v] &= ~(uint64_t(1) << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.push_back({u, v});
  return out;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t f = frontier; f; f &= f - 1) next |= adj_[__builtin_ctzll(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return __builtin_popcountll(seen) == n_;
}

bool Graph::regular(int d) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

std::string GraphCode::hex() const {
  std::string s = std::to_string(n) + ":";
  char buf[17];
  for (uint64_t r : rows) {
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(r));
    s += buf;
    s += '.';
  }
  if (!rows.empty()) s.pop_back();
  return s;
}

namespace {

// Equitable refinement of an ordered colouring; colours stay ordered consistently. A vertex's
// key is its colour followed by the sorted colours of its neighbours, padded to a fixed width.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.size();
  int width = 1;
  for (int v = 0; v < n; ++v) width = std::max(width, g.degree(v) + 2);
  int cells = n ? *std::max_element(color.begin(), color.end()) + 1 : 0;
  std::vector<int> key(static_cast<size_t>(n) * width), order(n);
  auto less = [&](int a, int b) {
    return std::lexicographical_compare(&key[size_t(a) * width], &key[size_t(a) * width] + width,
                                        &key[size_t(b) * width], &key[size_t(b) * width] + width);
  };
  auto same = [&](int a, int b) {
    return std::equal(&key[size_t(a) * width], &key[size_t(a) * width] + width, &key[size_t(b) * width]);
  };
  while (true) {
    for (int v = 0; v < n; ++v) {
      int* k = &key[size_t(v) * width];
      k[0] = color[v];
      int d = 1;
      for (uint64_t m = g.neighbors(v); m; m &= m - 1) k[d++] = color[__builtin_ctzll(m)];
      std::sort(k + 1, k + d);
      std::fill(k + d, k + width, -1);
      order[v] = v;
    }
    std::sort(order.begin(), order.end(), less);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && !same(order[i], order[i - 1])) ++rank;
      color[order[i]] = rank;
    }
    if (rank + 1 == cells) return;
    cells = rank + 1;
  }
}

std::vector<int> normalized(const std::vector<int>& c) {
  std::vector<int> vals(c);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<int> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = int(std::lower_bound(vals.begin(), vals.end(), c[i]) - vals.begin());
  return out;
}

struct Search {
  const Graph& g;
  std::vector<uint64_t> best;
  std::vector<int> best_label;
  std::vector<std::vector<int>> autos;  // automorphisms found at equal leaves
  std::vector<int> prefix;

  void leaf(const std::vector<int>& label) {
    std::vector<uint64_t> rows(g.size(), 0);
    for (int u = 0; u < g.size(); ++u)
      for (uint64_t m = g.neighbors(u); m; m &= m - 1) rows[label[u]] |= uint64_t(1) << label[__builtin_ctzll(m)];
    if (best_label.empty() || rows < best) {
      best = std::move(rows);
      best_label = label;
    } else if (rows == best) {
      std::vector<int> inv(g.size()), gamma(g.size());
      for (int v = 0; v < g.size(); ++v) inv[best_label[v]] = v;
      for (int v = 0; v < g.size(); ++v) gamma[v] = inv[label[v]];
      autos.push_back(std::move(gamma));
    }
  }

  // Orbit representatives under the automorphisms found so far that fix the prefix pointwise.
  int orbit_rep(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void run(std::vector<int> color) {
    refine(g, color);
    const int n = g.size();
    std::vector<int> size(n, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<bool> done(n, false);
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      std::vector<int> parent(n);
      for (int u = 0; u < n; ++u) parent[u] = u;
      for (const auto& a : autos) {
        bool fixes = true;
        for (int p : prefix) fixes &= a[p] == p;
        if (!fixes) continue;
        for (int u = 0; u < n; ++u) {
          int x = orbit_rep(parent, u), y = orbit_rep(parent, a[u]);
          if (x != y) parent[std::max(x, y)] = std::min(x, y);
        }
      }
      bool seen = false;
      for (int u = 0; u < n && !seen; ++u)
        seen = done[u] && orbit_rep(parent, u) == orbit_rep(parent, v);
      if (seen) continue;
      done[v] = true;
      std::vector<int> next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * color[u] + (color[u] > target || (color[u] == target && u != v) ? 1 : 0);
      prefix.push_back(v);
      run(normalized(next));
      prefix.pop_back();
    }
  }
};

std::vector<Graph> enumerate_impl(int n, bool parallel) {
  require(n >= 5 && n <= 64, "enumerate_regular: n must be at least 5");
  Graph start(n);
  for (int i = 0; i < n; ++i) {
    start.add_edge(i, (i + 1) % n);
    start.add_edge(i, (i + 2) % n);
  }
  std::map<GraphCode, Graph> found;
  GraphCode c0 = canonical_form(start);
  found.emplace(c0, graph_from_code(c0));
  std::vector<Graph> frontier{found.begin()->second};
  while (!frontier.empty()) {
    std::vector<std::pair<GraphCode, Graph>> fresh;
    auto expand = [&](const Graph& g, std::vector<std::pair<GraphCode, Graph>>& out) {
      auto es = g.edges();
      std::set<GraphCode> local;
      for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
          auto [a, b] = es[i];
          auto [c, d] = es[j];
          if (a == c || a == d || b == c || b == d) continue;
          for (int opt = 0; opt < 2; ++opt) {
            int x1 = a, y1 = opt ? d : c, x2 = b, y2 = opt ? c : d;
            if (g.has_edge(x1, y1) || g.has_edge(x2, y2)) continue;
            Graph h = g;
            h.remove_edge(a, b);
            h.remove_edge(c, d);
            h.add_edge(x1, y1);
            h.add_edge(x2, y2);
            if (!h.connected()) continue;
            GraphCode code = canonical_form(h);
            if (local.insert(code).second) out.push_back({code, Graph()});
          }
        }
    };
    if (parallel) {
#pragma omp parallel
      {
        std::vector<std::pair<GraphCode, Graph>> mine;
#pragma omp for schedule(dynamic)
        for (size_t i = 0; i < frontier.size(); ++i) expand(frontier[i], mine);
#pragma omp critical
        fresh.insert(fresh.end(), mine.begin(), mine.end());
      }
    } else {
      for (const Graph& g : frontier) expand(g, fresh);
    }
    std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    frontier.clear();
    for (auto& [code, unused] : fresh)
      if (!found.count(code)) {
        Graph h = graph_from_code(code);
        found.emplace(code, h);
        frontier.push_back(h);
      }
  }
  std::vector<Graph> out;
  for (auto& [code, g] : found) out.push_back(g);
  return out;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  Search s{g, {}, {}, {}, {}};
  s.run(std::vector<int>(g.size(), 0));
  return s.best_label;
}

GraphCode canonical_form(const Graph& g) {
  Search s{g, {}, {}, {}, {}};
  s.run(std::vector<int>(g.size(), 0));
  return {g.size(), s.best};
}

Graph graph_from_code(const GraphCode& c) {
  Graph g(c.n);
  for (int u = 0; u < c.n; ++u)
    for (int v = u + 1; v < c.n; ++v)
      if (c.rows[u] >> v & 1) g.add_edge(u, v);
  return g;
}

std::vector<Graph> enumerate_regular(int n) { return enumerate_impl(n, true); }
std::vector<Graph> enumerate_regular_serial(int n) { return enumerate_impl(n, false); }

int FactorGraph::color_of(int u, int v) const {
  auto e = std::make_pair(std::min(u, v), std::max(u, v));
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  return it != edges.end() && *it == e ? color[it - edges.begin()] : 0;
}

std::vector<FactorGraph> one_factorization(const Graph& g, int max_results) {
  const int n = g.size();
  std::vector<FactorGraph> out;
  if (n == 0) return out;
  const int c = g.degree(0);
  if (!g.regular(c) || n % 2 == 1 || c == 0 || c > 31) return out;
  FactorGraph base;
  base.graph = g;
  base.colors = c;
  base.edges = g.edges();
  base.color.assign(base.edges.size(), 0);
  std::vector<uint32_t> used(n, 0);
  // Vertex 0's edges come first in sorted order; fix their colours.
  for (int i = 0; i < c; ++i) {
    base.color[i] = i + 1;
    used[base.edges[i].first] |= 1u << i;
    used[base.edges[i].second] |= 1u << i;
  }
  std::function<bool(size_t)> rec = [&](size_t k) {
    if (k == base.edges.size()) {
      out.push_back(base);
      return int(out.size()) >= max_results;
    }
    auto [u, v] = base.edges[k];
    uint32_t free = ~(used[u] | used[v]) & ((1u << c) - 1);
    for (; free; free &= free - 1) {
      int col = __builtin_ctz(free);
      base.color[k] = col + 1;
      used[u] |= 1u << col;
      used[v] |= 1u << col;
      bool stop = rec(k + 1);
      used[u] &= ~(1u << col);
      used[v] &= ~(1u << col);
      if (stop) return true;
    }
    base.color[k] = 0;
    return false;
  };
  rec(c);
  return out;
}

bool is_valid_factor(const FactorGraph& f) {
  const int n = f.graph.size();
  if (!f.graph.regular(f.colors) || n % 2) return false;
  if (f.edges != f.graph.edges()) return false;
  for (int col = 1; col <= f.colors; ++col) {
    uint64_t covered = 0;
    int count = 0;
    for (size_t i = 0; i < f.edges.size(); ++i) {
      if (f.color[i] != col) continue;
      uint64_t m = (uint64_t(1) << f.edges[i].first) | (uint64_t(1) << f.edges[i].second);
      if (covered & m) return false;
      covered |= m;
      ++count;
    }
    if (count != n / 2) return false;
  }
  return true;
}

std::vector<AlternatingCycle> alternating_cycles(const FactorGraph& f) {
  const int n = f.graph.size();
  std::vector<std::vector<int>> mate(f.colors + 1, std::vector<int>(n, -1));
  for (size_t k = 0; k < f.edges.size(); ++k) {
    auto [u, v] = f.edges[k];
    mate[f.color[k]][u] = v;
    mate[f.color[k]][v] = u;
  }
  std::vector<AlternatingCycle> out;
  for (int i = 1; i <= f.colors; ++i)
    for (int j = i + 1; j <= f.colors; ++j) {
      std::vector<bool> seen(n, false);
      for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, cur = s, col = i;
        do {
          seen[cur] = true;
          cur = mate[col][cur];
          if (cur < 0) throw Error("colour class is not a perfect matching");
          col = col == i ? j : i;
          ++len;
        } while (cur != s || col != i);
        if (len % 2 || len < 4) throw Error("alternating cycle of length " + std::to_string(len));
        out.push_back({i, j, len});
      }
    }
  return out;
}

std::vector<CountRow> count_table(int max_n) {
  std::vector<CountRow> rows;
  for (int n = 5; n <= max_n; ++n) {
    CountRow r;
    r.n = n;
    for (const Graph& g : enumerate_regular(n)) {
      ++r.regular;
      if (!one_factorization(g).empty()) ++r.factorable;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string count_table_csv(const std::vector<CountRow>& rows) {
  std::string s = "n,regular,factorable,fraction\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.12g", r.fraction());
    s += std::to_string(r.n) + "," + std::to_string(r.regular) + "," + std::to_string(r.factorable) + "," + buf + "\n";
  }
  return s;
}

std::string format_graph(const Graph& g) {
  std::string s;
  for (int v = 0; v < g.size(); ++v) {
    s += std::to_string(v) + ":";
    for (int u = 0; u < g.size(); ++u)
      if (g.has_edge(v, u)) s += " " + std::to_string(u);
    s += "\n";
  }
  return s;
}

std::string format_factor(const FactorGraph& f) {
  std::string s;
  for (int v = 0; v < f.graph.size(); ++v) {
    std::string nb, cols;
    for (int u = 0; u < f.graph.size(); ++u)
      if (f.graph.has_edge(v, u)) {
        nb += " " + std::to_string(u);
        cols += " " + std::to_string(f.color_of(v, u));
      }
    s += std::to_string(v) + ":" + nb + " |" + cols + "\n";
  }
  return s;
}

namespace {

struct ParsedLine {
  int v;
  std::vector<int> nb, colors;
};

std::vector<ParsedLine> parse_lines(const std::string& text) {
  std::vector<ParsedLine> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError(lineno, "expected 'v: neighbours'");
    }
    ParsedLine p;
    try {
      p.v = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError(lineno, "bad vertex id");
    }
    std::string rest = line.substr(colon + 1);
    std::string cols;
    if (auto bar = rest.find('|'); bar != std::string::npos) {
      cols = rest.substr(bar + 1);
      rest.erase(bar);
    }
    std::istringstream a(rest), b(cols);
    for (int x; a >> x;) p.nb.push_back(x);
    for (int x; b >> x;) p.colors.push_back(x);
    if (!a.eof() || !b.eof()) throw ParseError(lineno, "bad number");
    if (!cols.empty() && p.colors.size() != p.nb.size()) throw ParseError(lineno, "colour count differs from degree");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  auto lines = parse_lines(text);
  Graph g(int(lines.size()));
  for (const auto& p : lines) {
    if (p.v < 0 || p.v >= g.size()) throw ParseError(0, "vertex id out of range");
    for (int u : p.nb) {
      if (u < 0 || u >= g.size() || u == p.v) throw ParseError(0, "neighbour out of range");
      g.add_edge(p.v, u);
    }
  }
  for (const auto& p : lines)
    if (int(p.nb.size()) != g.degree(p.v)) throw ParseError(0, "adjacency lists are not symmetric");
  return g;
}

FactorGraph parse_factor(const std::string& text) {
  auto lines = parse_lines(text);
  FactorGraph f;
  f.graph = parse_graph(text);
  f.edges = f.graph.edges();
  f.color.assign(f.edges.size(), 0);
  for (const auto& p : lines)
    for (size_t k = 0; k < p.nb.size() && k < p.colors.size(); ++k) {
      auto e = std::make_pair(std::min(p.v, p.nb[k]), std::max(p.v, p.nb[k]));
      size_t idx = std::lower_bound(f.edges.begin(), f.edges.end(), e) - f.edges.begin();
      if (f.color[idx] && f.color[idx] != p.colors[k]) throw ParseError(0, "edge coloured inconsistently");
      f.color[idx] = p.colors[k];
      f.colors = std::max(f.colors, p.colors[k]);
    }
  return f;
}

Graph cubical_graph() {
  Graph g(8);
  for (int v = 0; v < 8; ++v)
    for (int i = 0; i < 3; ++i)
      if (!(v >> i & 1)) g.add_edge(v, v | 1 << i);
  return g;
}

}  // namespace geobound
