#include "geobound/complex/pairing_complex.hpp"

#include <map>
#include <mutex>

#include "geobound/errors.hpp"
#include "geobound/geometry/hyperbolic.hpp"
#include "json.hpp"

namespace geobound {

PairingComplex::PairingComplex(std::shared_ptr<const Polytope> type, int cells, std::string type_name)
    : type_(std::move(type)), type_name_(std::move(type_name)), cells_(cells) {
  require(type_ != nullptr, "PairingComplex: null cell type");
  require(cells >= 0, "PairingComplex: negative cell count");
  nf_ = type_->facet_count();
  partner_.assign(static_cast<size_t>(cells_) * nf_, -1);
}

void PairingComplex::pair(int a, int b, int facet) {
  require(a >= 0 && b >= 0 && a < cells_ && b < cells_ && facet >= 0 && facet < nf_,
          "pair: index out of range");
  if (a == b) throw GluingError("facet " + std::to_string(facet) + " of cell " + std::to_string(a) +
                                " paired with itself");
  int& pa = partner_[static_cast<size_t>(a) * nf_ + facet];
  int& pb = partner_[static_cast<size_t>(b) * nf_ + facet];
  if (pa >= 0 || pb >= 0) {
    if (pa == b && pb == a) return;
    throw GluingError("facet " + std::to_string(facet) + " already paired");
  }
  pa = b;
  pb = a;
}

std::vector<FacetRef> PairingComplex::boundary_facets() const {
  std::vector<FacetRef> out;
  for (int c = 0; c < cells_; ++c)
    for (int f = 0; f < nf_; ++f)
      if (is_boundary(c, f)) out.push_back({c, f});
  return out;
}

bool PairingComplex::closed() const {
  for (int p : partner_)
    if (p < 0) return false;
  return true;
}

PairingComplex PairingComplex::relabeled(const std::vector<int>& perm) const {
  require(int(perm.size()) == cells_, "relabeled: permutation size");
  PairingComplex r(type_, cells_, type_name_);
  for (int c = 0; c < cells_; ++c)
    for (int f = 0; f < nf_; ++f) {
      int p = partner(c, f);
      if (p >= 0) r.partner_[static_cast<size_t>(perm[c]) * nf_ + f] = perm[p];
    }
  return r;
}

std::string complex_json(const PairingComplex& x) {
  nlohmann::json j;
  j["cell_type"] = x.type_name();
  j["cells"] = x.cells();
  j["facets_per_cell"] = x.facets_per_cell();
  nlohmann::json table = nlohmann::json::array();
  nlohmann::json boundary = nlohmann::json::array();
  for (int c = 0; c < x.cells(); ++c) {
    std::vector<int> row;
    for (int f = 0; f < x.facets_per_cell(); ++f) {
      row.push_back(x.partner(c, f));
      if (x.is_boundary(c, f)) boundary.push_back({c, f});
    }
    table.push_back(row);
  }
  j["pairing"] = table;
  j["boundary"] = boundary;
  return j.dump();
}

std::shared_ptr<const Polytope> shared_cell_type(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Polytope>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[name];
  if (!slot) slot = std::make_shared<const Polytope>(builtin_polytope(name).polytope);
  return slot;
}

}  // namespace geobound
