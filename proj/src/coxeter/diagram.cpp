#include "geobound/coxeter/diagram.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "geobound/errors.hpp"

#ifndef GEOBOUND_DEFAULT_DATA_DIR
#define GEOBOUND_DEFAULT_DATA_DIR "data"
#endif

namespace geobound {

std::string EdgeWeight::str() const {
  switch (kind) {
    case Kind::label: return std::to_string(m);
    case Kind::infinity: return "inf";
    case Kind::dashed: {
      if (w) return "-" + w->str();
      std::ostringstream os;
      os.precision(17);
      os << "-" << w_real;
      return os.str();
    }
  }
  return "?";
}

bool operator==(const EdgeWeight& x, const EdgeWeight& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case EdgeWeight::Kind::label: return x.m == y.m;
    case EdgeWeight::Kind::infinity: return true;
    case EdgeWeight::Kind::dashed:
      if (x.w && y.w) return *x.w == *y.w;
      return !x.w && !y.w && x.w_real == y.w_real;
  }
  return false;
}

int CoxeterDiagram::add_node(const std::string& name) {
  if (int i = find(name); i >= 0) return i;
  nodes_.push_back(name);
  return size() - 1;
}

int CoxeterDiagram::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[i] == name) return i;
  return -1;
}

int CoxeterDiagram::index(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw ContractViolation("unknown node " + std::string(name));
  return i;
}

void CoxeterDiagram::set_edge(int i, int j, const EdgeWeight& w) {
  require(i >= 0 && j >= 0 && i < size() && j < size(), "set_edge: node out of range");
  if (i == j) throw Error("self-edge on node " + nodes_[i]);
  edges_[{std::min(i, j), std::max(i, j)}] = w;
}

const EdgeWeight* CoxeterDiagram::edge(int i, int j) const {
  auto it = edges_.find({std::min(i, j), std::max(i, j)});
  return it == edges_.end() ? nullptr : &it->second;
}

CoxeterDiagram CoxeterDiagram::induced(const std::vector<int>& subset) const {
  CoxeterDiagram r;
  for (int i : subset) r.add_node(nodes_[i]);
  for (size_t a = 0; a < subset.size(); ++a)
    for (size_t b = a + 1; b < subset.size(); ++b)
      if (auto* w = edge(subset[a], subset[b])) r.set_edge(int(a), int(b), *w);
  return r;
}

CoxeterDiagram CoxeterDiagram::permuted(const std::vector<int>& perm) const {
  return induced(perm);
}

std::optional<ExactScalar> parse_exact(std::string_view s) {
  ExactScalar total(0);
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (any) {
      return std::nullopt;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term(s.substr(i, j - i));
    if (term.empty()) return std::nullopt;
    mpq_class coef = 1;
    int root = 1;
    auto star = term.find('*');
    std::string num = term, rad;
    if (term.rfind("sqrt", 0) == 0) {
      num = "1";
      rad = term.substr(4);
    } else if (star != std::string::npos) {
      num = term.substr(0, star);
      rad = term.substr(star + 1);
      if (rad.rfind("sqrt", 0) != 0) return std::nullopt;
      rad = rad.substr(4);
    }
    for (char ch : num)
      if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') return std::nullopt;
    try {
      coef = mpq_class(num);
      coef.canonicalize();
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    if (!rad.empty()) {
      if (rad == "2") root = 2;
      else if (rad == "3") root = 3;
      else if (rad == "6") root = 6;
      else return std::nullopt;
    }
    coef *= sign;
    switch (root) {
      case 1: total += ExactScalar(coef); break;
      case 2: total += ExactScalar(0, coef); break;
      case 3: total += ExactScalar(0, 0, coef); break;
      default: total += ExactScalar(0, 0, 0, coef); break;
    }
    any = true;
    i = j;
  }
  if (!any) return std::nullopt;
  return total;
}

CoxeterDiagram parse_diagram(std::string_view text) {
  CoxeterDiagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "node") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'node <name>'");
      d.add_node(tok[1]);
      continue;
    }
    if (tok.size() != 3) throw ParseError(line_no, "expected '<node> <node> <label>'");
    if (tok[0] == tok[1]) throw ParseError(line_no, "self-edge on " + tok[0]);
    EdgeWeight w;
    const std::string& lab = tok[2];
    if (lab == "inf" || lab == "∞") {
      w = EdgeWeight::infinite();
    } else if (lab.size() > 1 && lab[0] == '-') {
      std::string body = lab.substr(1);
      if (auto exact = parse_exact(body)) {
        if (!(ExactScalar(1) < *exact)) throw ParseError(line_no, "dashed weight must exceed 1");
        w = EdgeWeight::dashed(*exact);
      } else {
        char* end = nullptr;
        double v = std::strtod(body.c_str(), &end);
        if (end == body.c_str() || *end != 0) throw ParseError(line_no, "bad dashed weight '" + lab + "'");
        if (!(v > 1)) throw ParseError(line_no, "dashed weight must exceed 1");
        w = EdgeWeight::dashed(v);
      }
    } else if (lab == "3" || lab == "4" || lab == "5" || lab == "6") {
      w = EdgeWeight::label(lab[0] - '0');
    } else {
      throw ParseError(line_no, "label '" + lab + "' outside {3,4,5,6,inf,-w}");
    }
    int i = d.add_node(tok[0]), j = d.add_node(tok[1]);
    if (d.edge(i, j)) throw ParseError(line_no, "duplicate edge " + tok[0] + " " + tok[1]);
    d.set_edge(i, j, w);
  }
  return d;
}

std::string format_diagram(const CoxeterDiagram& d) {
  std::ostringstream os;
  for (auto& name : d.nodes()) os << "node " << name << "\n";
  for (auto& [key, w] : d.edges())
    os << d.nodes()[key.first] << " " << d.nodes()[key.second] << " " << w.str() << "\n";
  return os.str();
}

namespace {

ExactScalar exact_entry(const EdgeWeight& w) {
  switch (w.kind) {
    case EdgeWeight::Kind::label: return -ExactScalar::cos_pi_over(w.m);
    case EdgeWeight::Kind::infinity: return ExactScalar(-1);
    case EdgeWeight::Kind::dashed:
      if (!w.w) throw UnsupportedField("dashed weight given only as a float");
      return -*w.w;
  }
  return ExactScalar(0);
}

}  // namespace

SymMatrix gram_matrix(const CoxeterDiagram& d) {
  SymMatrix g(d.size());
  for (int i = 0; i < d.size(); ++i) g.set(i, i, ExactScalar(1));
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j) g.set(i, j, ExactScalar(0));
  for (auto& [key, w] : d.edges()) g.set(key.first, key.second, exact_entry(w));
  return g;
}

Eigen::MatrixXd gram_matrix_real(const CoxeterDiagram& d) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(d.size(), d.size());
  for (auto& [key, w] : d.edges()) {
    double v = 0;
    switch (w.kind) {
      case EdgeWeight::Kind::label: v = -std::cos(std::numbers::pi / w.m); break;
      case EdgeWeight::Kind::infinity: v = -1; break;
      case EdgeWeight::Kind::dashed: v = -w.w_real; break;
    }
    g(key.first, key.second) = g(key.second, key.first) = v;
  }
  return g;
}

std::optional<EdgeWeight> weight_from_gram(const ExactScalar& g) {
  if (g.is_zero()) return std::nullopt;
  for (int m : {3, 4, 6})
    if (g == -ExactScalar::cos_pi_over(m)) return EdgeWeight::label(m);
  if (g == ExactScalar(-1)) return EdgeWeight::infinite();
  if (g.sign() < 0 && (g + ExactScalar(1)).sign() < 0) return EdgeWeight::dashed(-g);
  throw Error("Gram entry " + g.str() + " is not a Coxeter angle");
}

std::string data_directory() {
  if (const char* env = std::getenv("GEOBOUND_DATA"); env && *env) return env;
  return GEOBOUND_DEFAULT_DATA_DIR;
}

std::string read_data_file(const std::string& name) {
  std::filesystem::path p = std::filesystem::path(data_directory()) / name;
  std::ifstream in(p);
  if (!in) throw Error("cannot open data file " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> builtin_diagram_names() {
  return {"q4-fig4", "q3-fig6", "orthoscheme-434", "orthoscheme-4334"};
}

CoxeterDiagram load_diagram(const std::string& name_or_path) {
  for (auto& b : builtin_diagram_names())
    if (b == name_or_path) return parse_diagram(read_data_file(b + ".cox"));
  std::ifstream in(name_or_path);
  if (!in) throw Error("unknown diagram '" + name_or_path + "' (not built-in, not a readable file)");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_diagram(os.str());
}

}  // namespace geobound
