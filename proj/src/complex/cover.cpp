#include "geobound/complex/cover.hpp"

#include <map>
#include <queue>
#include <set>

#include "geobound/complex/topology.hpp"
#include "geobound/errors.hpp"

namespace geobound {

namespace {

mpz_class pow2(long e) {
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

// Incremental GF(2) basis over bit vectors of fixed width.
struct Gf2Basis {
  std::vector<std::vector<uint64_t>> rows;
  std::vector<size_t> pivots;
  void add(std::vector<uint64_t> v) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i] / 64] >> (pivots[i] % 64) & 1)
        for (size_t w = 0; w < v.size(); ++w) v[w] ^= rows[i][w];
    for (size_t w = 0; w < v.size(); ++w)
      if (v[w]) {
        size_t bit = w * 64 + static_cast<size_t>(__builtin_ctzll(v[w]));
        for (auto& r : rows)
          if (r[bit / 64] >> (bit % 64) & 1)
            for (size_t x = 0; x < v.size(); ++x) r[x] ^= v[x];
        rows.push_back(std::move(v));
        pivots.push_back(bit);
        return;
      }
  }
};

}  // namespace

ColorCover::ColorCover(PairingComplex base, Coloring c) : base_(std::move(base)), coloring_(std::move(c)) {
  check_coloring(base_, coloring_);
}

mpz_class ColorCover::copies() const { return pow2(colors()); }

mpz_class ColorCover::cells() const { return copies() * base_.cells(); }

mpz_class ColorCover::euler_characteristic() const {
  const Polytope& t = base_.type();
  const int d = base_.dim(), nf = base_.facets_per_cell();
  FaceClasses fc = face_classes(base_);
  mpz_class chi = 0;
  for (int k = 0; k < d; ++k) {
    const int per = t.count(k);
    std::vector<std::set<int>> seen(fc.count[k]);
    for (int cell = 0; cell < base_.cells(); ++cell)
      for (int f = 0; f < nf; ++f) {
        int col = coloring_.at(base_, {cell, f});
        if (col < 0) continue;
        for (int i : t.faces_in_facet(f, k)) seen[fc.classes[k][static_cast<size_t>(cell) * per + i]].insert(col);
      }
    mpz_class n = 0;
    for (int cls = 0; cls < fc.count[k]; ++cls) {
      if (k == 0 && fc.ideal_vertex[cls]) continue;
      n += pow2(colors() - static_cast<long>(seen[cls].size()));
    }
    chi += (k % 2 == 0) ? n : mpz_class(-n);
  }
  mpz_class top = cells();
  chi += (d % 2 == 0) ? top : mpz_class(-top);
  return chi;
}

bool ColorCover::orientable() const { return orientability(base_).orientable; }

ColorCover::Step ColorCover::step(FacetRef s, int ridge) const {
  const auto& fs = base_.type().facets_of(base_.dim() - 2, ridge);
  int stay = s.facet, cross = fs[0] == s.facet ? fs[1] : fs[0];
  int c = s.cell;
  Step out;
  for (int guard = 0; guard <= 2 * base_.cells() + 2 * colors() + 4; ++guard) {
    int p = base_.partner(c, cross);
    int col = coloring_.at(base_, {c, cross});
    if (p < 0 && col < 0) {
      out.next = {c, cross};
      return out;
    }
    if (p >= 0) c = p;
    else out.shifts.push_back(col);
    std::swap(cross, stay);
    ++out.gluings;
  }
  throw GluingError("boundary walk around a ridge does not terminate");
}

bool ColorCover::has_corners() const {
  const int d = base_.dim();
  for (const FacetRef& s : base_.boundary_facets()) {
    if (coloring_.at(base_, s) >= 0) continue;
    for (int r : base_.type().faces_in_facet(s.facet, d - 2))
      if (step(s, r).gluings != 1) return true;
  }
  return false;
}

std::vector<ColorCover::BoundaryClass> ColorCover::boundary_classes() const {
  const int d = base_.dim();
  const size_t words = (static_cast<size_t>(colors()) + 63) / 64 + 1;
  std::vector<FacetRef> slots;
  for (const FacetRef& s : base_.boundary_facets())
    if (coloring_.at(base_, s) < 0) slots.push_back(s);
  std::map<FacetRef, int> id;
  for (size_t i = 0; i < slots.size(); ++i) id[slots[i]] = int(i);

  std::vector<int> comp(slots.size(), -1);
  std::vector<std::vector<uint64_t>> pot(slots.size());
  std::vector<BoundaryClass> out;
  for (size_t root = 0; root < slots.size(); ++root) {
    if (comp[root] >= 0) continue;
    const int cid = int(out.size());
    BoundaryClass bc;
    Gf2Basis basis;
    comp[root] = cid;
    pot[root].assign(words, 0);
    std::queue<int> q;
    q.push(int(root));
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      bc.slots.push_back(slots[u]);
      for (int r : base_.type().faces_in_facet(slots[u].facet, d - 2)) {
        Step st = step(slots[u], r);
        if (st.gluings != 1) continue;
        std::vector<uint64_t> p = pot[u];
        for (int col : st.shifts) p[col / 64] ^= uint64_t(1) << (col % 64);
        int v = id.at(st.next);
        if (comp[v] < 0) {
          comp[v] = cid;
          pot[v] = std::move(p);
          q.push(v);
        } else {
          for (size_t w = 0; w < words; ++w) p[w] ^= pot[v][w];
          basis.add(std::move(p));
        }
      }
    }
    bc.shift_rank = static_cast<int>(basis.rows.size());
    bc.lifts = pow2(colors() - bc.shift_rank);
    out.push_back(std::move(bc));
  }
  return out;
}

mpz_class ColorCover::boundary_component_count() const {
  mpz_class n = 0;
  for (const auto& bc : boundary_classes()) n += bc.lifts;
  return n;
}

PairingComplex ColorCover::materialize() const { return coloring_quotient(base_, coloring_); }

}  // namespace geobound
