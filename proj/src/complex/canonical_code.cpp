#include "geobound/complex/canonical_code.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

#include "geobound/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geobound {

namespace {

// Flag graph of the complex: flag id = cell * F + type flag, with dim + 1 involutions.
struct FlagGraph {
  int d = 0;
  int flags = 0;
  std::vector<int> nb;  // nb[u * (d + 1) + k]
  std::vector<int32_t> label;
};

FlagGraph flag_graph(const PairingComplex& x) {
  const Polytope& t = x.type();
  const int d = t.dim(), F = t.flag_count();
  FlagGraph g;
  g.d = d;
  g.flags = x.cells() * F;
  g.nb.resize(static_cast<size_t>(g.flags) * (d + 1));
  g.label.resize(g.flags);
  for (int c = 0; c < x.cells(); ++c)
    for (int f = 0; f < F; ++f) {
      const size_t u = static_cast<size_t>(c) * F + f;
      for (int k = 0; k < d; ++k) g.nb[u * (d + 1) + k] = c * F + t.adjacent_flag(k, f);
      int p = x.partner(c, t.flag(f)[d - 1]);
      g.nb[u * (d + 1) + d] = p < 0 ? int(u) : p * F + f;
      g.label[u] = t.ideal(t.flag(f)[0]) ? 1 : 0;
    }
  return g;
}

// Stable colour refinement; colours are ranks of sorted signatures, so they are canonical.
std::vector<int> refine(const FlagGraph& g) {
  const int D = g.d + 1;
  std::vector<int> color(g.flags);
  {
    // Residue sizes: flags reachable without changing the k-face.
    std::vector<std::vector<int32_t>> sig(g.flags);
    for (int u = 0; u < g.flags; ++u) sig[u] = {g.label[u], g.nb[size_t(u) * D + g.d] == u ? 1 : 0};
    for (int k = 0; k < g.d; ++k) {
      std::vector<int> comp(g.flags, -1), size;
      for (int s = 0; s < g.flags; ++s) {
        if (comp[s] >= 0) continue;
        int id = int(size.size()), n = 0;
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          ++n;
          for (int j = 0; j < D; ++j) {
            if (j == k) continue;
            int v = g.nb[size_t(u) * D + j];
            if (comp[v] < 0) {
              comp[v] = id;
              stack.push_back(v);
            }
          }
        }
        size.push_back(n);
      }
      for (int u = 0; u < g.flags; ++u) sig[u].push_back(size[comp[u]]);
    }
    std::vector<std::vector<int32_t>> keys(sig);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int u = 0; u < g.flags; ++u)
      color[u] = int(std::lower_bound(keys.begin(), keys.end(), sig[u]) - keys.begin());
  }
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::pair<std::vector<int>, int>> sig(g.flags);
  while (true) {
    for (int u = 0; u < g.flags; ++u) {
      auto& s = sig[u].first;
      s.assign(1, color[u]);
      for (int k = 0; k < D; ++k) s.push_back(color[g.nb[size_t(u) * D + k]]);
      sig[u].second = u;
    }
    std::sort(sig.begin(), sig.end());
    std::vector<int> next(g.flags);
    int rank = 0;
    for (int i = 0; i < g.flags; ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
      next[sig[i].second] = rank;
    }
    color.swap(next);
    if (rank + 1 == classes) break;
    classes = rank + 1;
  }
  return color;
}

std::vector<int> candidates(const FlagGraph& g) {
  std::vector<int> color = refine(g);
  std::map<int, int> size;
  for (int c : color) ++size[c];
  int best = -1;
  for (const auto& [c, n] : size)
    if (best < 0 || n < size[best]) best = c;
  std::vector<int> out;
  for (int u = 0; u < g.flags; ++u)
    if (color[u] == best) out.push_back(u);
  return out;
}

// Encodes the traversal from start; stops early (returns false) once it exceeds bound.
bool encode(const FlagGraph& g, int start, const std::vector<int32_t>* bound, std::vector<int32_t>& code,
            std::vector<int>& order, std::vector<int>& index) {
  const int D = g.d + 1;
  code.clear();
  order.clear();
  std::fill(index.begin(), index.end(), -1);
  bool tied = bound != nullptr;
  auto push = [&](int32_t v) {
    size_t i = code.size();
    code.push_back(v);
    if (tied) {
      if (v > (*bound)[i]) return false;
      if (v < (*bound)[i]) tied = false;
    }
    return true;
  };
  if (!push(g.d) || !push(g.flags)) return false;
  index[start] = 0;
  order.push_back(start);
  for (size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    if (!push(g.label[u])) return false;
    for (int k = 0; k < D; ++k) {
      int v = g.nb[size_t(u) * D + k];
      if (index[v] < 0) {
        index[v] = int(order.size());
        order.push_back(v);
      }
      if (!push(index[v])) return false;
    }
  }
  if (int(order.size()) != g.flags) throw ContractViolation("canonical_code: complex is not connected");
  return true;
}

CanonicalCode finish(std::vector<int32_t> code, long long autos) {
  CanonicalCode out;
  out.code = std::move(code);
  out.hex = sha256_hex(out.code);
  out.automorphisms = autos;
  return out;
}

}  // namespace

std::string sha256_hex(const std::vector<int32_t>& words) {
  std::vector<unsigned char> bytes;
  bytes.reserve(words.size() * 4);
  for (int32_t w : words) {
    uint32_t u = static_cast<uint32_t>(w);
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<unsigned char>(u >> (8 * i)));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

namespace {

// Candidates are visited in batches (encoded concurrently when batch > 1). Two starts giving the
// same code differ by an automorphism; its orbits on the candidates are merged so that every
// start already equivalent to an encoded one is skipped.
CanonicalCode search(const PairingComplex& x, int batch) {
  require(x.cells() > 0, "canonical_code: empty complex");
  FlagGraph g = flag_graph(x);
  const std::vector<int> cand = candidates(g);
  const int C = int(cand.size());
  std::vector<int> slot_of(g.flags, -1);
  for (int i = 0; i < C; ++i) slot_of[cand[i]] = i;
  std::vector<int> parent(C), size(C, 1);
  std::vector<char> known(C, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    known[a] = known[a] || known[b];
  };

  std::vector<int32_t> best;
  std::vector<int> best_order;
  int best_rep = -1;
  struct Work {
    int slot = -1;
    bool full = false;
    bool disconnected = false;
    std::vector<int32_t> code;
    std::vector<int> order, index;
  };
  std::vector<Work> work(batch);
  for (auto& w : work) w.index.resize(g.flags);

  int next = 0;
  while (next < C) {
    int used = 0;
    for (; next < C && used < batch; ++next)
      if (!known[find(next)]) work[used++].slot = next;
    if (used == 0) break;
    const std::vector<int32_t>* bound = best.empty() ? nullptr : &best;
#pragma omp parallel for schedule(dynamic) if (used > 1)
    for (int k = 0; k < used; ++k) {
      Work& w = work[k];
      try {
        w.full = encode(g, cand[w.slot], bound, w.code, w.order, w.index);
      } catch (const ContractViolation&) {
        w.disconnected = true;
      }
    }
    for (int k = 0; k < used; ++k) {
      Work& w = work[k];
      if (w.disconnected) throw ContractViolation("canonical_code: complex is not connected");
      if (known[find(w.slot)]) continue;
      known[find(w.slot)] = 1;
      if (!w.full) continue;
      if (best.empty() || w.code < best) {
        best = w.code;
        best_order = w.order;
        best_rep = w.slot;
      } else if (w.code == best) {
        std::vector<int> alpha(g.flags);
        for (int i = 0; i < g.flags; ++i) alpha[best_order[i]] = w.order[i];
        for (int i = 0; i < C; ++i) unite(i, slot_of[alpha[cand[i]]]);
      }
    }
  }
  return finish(std::move(best), size[find(best_rep)]);
}

}  // namespace

CanonicalCode canonical_code_serial(const PairingComplex& x) { return search(x, 1); }

CanonicalCode canonical_code(const PairingComplex& x) {
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  return search(x, threads > 1 ? 2 * threads : 1);
}

}  // namespace geobound
