#pragma once

#include <memory>
#include <string>
#include <vector>

#include "geobound/geometry/polytope.hpp"

namespace geobound {

struct FacetRef {
  int cell = -1;
  int facet = -1;
  friend bool operator==(const FacetRef&, const FacetRef&) = default;
  friend auto operator<=>(const FacetRef&, const FacetRef&) = default;
};

// Copies of one polytope glued along facets by the identity map of the polytope.
class PairingComplex {
 public:
  PairingComplex() = default;
  PairingComplex(std::shared_ptr<const Polytope> type, int cells, std::string type_name = {});

  const Polytope& type() const { return *type_; }
  const std::shared_ptr<const Polytope>& type_ptr() const { return type_; }
  const std::string& type_name() const { return type_name_; }
  int dim() const { return type_->dim(); }
  int cells() const { return cells_; }
  int facets_per_cell() const { return nf_; }

  // Glues facet f of cell a to facet f of cell b. Throws GluingError on a self-pairing or when
  // either slot is already paired.
  void pair(int a, int b, int facet);
  int partner(int cell, int facet) const { return partner_[static_cast<size_t>(cell) * nf_ + facet]; }
  int partner(const FacetRef& r) const { return partner(r.cell, r.facet); }
  bool is_boundary(int cell, int facet) const { return partner(cell, facet) < 0; }

  std::vector<FacetRef> boundary_facets() const;
  bool closed() const;
  // Cell i moves to perm[i].
  PairingComplex relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const PairingComplex& x, const PairingComplex& y) {
    return x.cells_ == y.cells_ && x.nf_ == y.nf_ && x.partner_ == y.partner_;
  }

 private:
  std::shared_ptr<const Polytope> type_;
  std::string type_name_;
  int cells_ = 0, nf_ = 0;
  std::vector<int> partner_;
};

// Complex plus named groups of boundary slots used as gluing interfaces.
struct IndexedComplex {
  PairingComplex complex;
  std::vector<std::vector<FacetRef>> components;
  std::vector<std::string> names;
};

std::string complex_json(const PairingComplex& x);

// Shared handle to a built-in polytope (see builtin_polytope), created once.
std::shared_ptr<const Polytope> shared_cell_type(const std::string& name);

}  // namespace geobound
