#pragma once

#include <map>
#include <string>
#include <vector>

namespace geobound {

// Combinatorial polytope given by its face lattice. Faces of dimension k are indexed
// 0..count(k)-1 for k = 0..dim-1; each face is identified with its sorted vertex set.
class Polytope {
 public:
  Polytope() = default;
  // Builds the lattice from facet vertex sets by intersection closure; throws Error when the
  // result violates the diamond property.
  static Polytope from_facets(int dim, const std::vector<std::vector<int>>& facet_vertices,
                              std::vector<bool> ideal);

  int dim() const { return dim_; }
  int count(int k) const { return static_cast<int>(faces_[k].size()); }
  int vertex_count() const { return count(0); }
  int facet_count() const { return count(dim_ - 1); }

  const std::vector<int>& vertices_of(int k, int i) const { return faces_[k][i]; }
  const std::vector<int>& subfaces(int k, int i) const { return sub_[k][i]; }
  const std::vector<int>& superfaces(int k, int i) const { return super_[k][i]; }
  // Facets containing the face.
  const std::vector<int>& facets_of(int k, int i) const { return facets_of_[k][i]; }
  // All k-faces contained in facet f.
  const std::vector<int>& faces_in_facet(int f, int k) const { return in_facet_[f][k]; }
  // Index of the k-face with this vertex set, or -1.
  int find(int k, const std::vector<int>& vertices) const;
  // Ridge shared by two facets, or -1.
  int ridge_between(int f, int g) const;

  bool ideal(int v) const { return ideal_[v]; }
  bool face_has_finite_vertex(int k, int i) const;
  int finite_vertex_count() const;
  int ideal_vertex_count() const { return vertex_count() - finite_vertex_count(); }

  // Dihedral angle at each ridge (radians); empty when the polytope carries no geometry.
  const std::vector<double>& ridge_angles() const { return ridge_angle_; }
  void set_ridge_angles(std::vector<double> a) { ridge_angle_ = std::move(a); }
  const std::vector<std::string>& facet_tags() const { return tags_; }
  void set_facet_tags(std::vector<std::string> t) { tags_ = std::move(t); }
  bool right_angled(double tol = 1e-9) const;

  // Flags: maximal chains F_0 < ... < F_{dim-1}. flag(f)[k] is the k-face.
  int flag_count() const { return static_cast<int>(flags_.size()); }
  const std::vector<int>& flag(int f) const { return flags_[f]; }
  // Flag differing from f exactly in its k-face.
  int adjacent_flag(int k, int f) const { return adj_[k][f]; }
  int flag_index(const std::vector<int>& chain) const;
  // Some flag whose facet is f and whose faces lie in f (first in index order).
  int first_flag_of_facet(int f) const { return facet_first_flag_[f]; }

  // Facet as a polytope in its own right, with face_map[k][i] = parent k-face of its k-face i.
  struct FacetView;
  FacetView facet(int f) const;

  std::vector<int> f_vector() const;

 private:
  void build_incidences();
  void build_flags();

  int dim_ = 0;
  std::vector<std::vector<std::vector<int>>> faces_;
  std::vector<std::map<std::vector<int>, int>> index_;
  std::vector<std::vector<std::vector<int>>> sub_, super_, facets_of_;
  std::vector<std::vector<std::vector<int>>> in_facet_;
  std::vector<bool> ideal_;
  std::vector<double> ridge_angle_;
  std::vector<std::string> tags_;
  std::vector<std::vector<int>> flags_;
  std::map<std::vector<int>, int> flag_index_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> facet_first_flag_;
  std::map<std::pair<int, int>, int> ridge_of_pair_;
};

struct Polytope::FacetView {
  Polytope polytope;
  std::vector<std::vector<int>> face_map;
};

// Face-lattice isomorphism a -> b preserving vertex flags; face maps per dimension, or empty.
std::vector<std::vector<int>> find_isomorphism(const Polytope& a, const Polytope& b);

struct Automorphism {
  std::vector<std::vector<int>> face_perm;  // per dimension
  std::vector<int> flag_perm;
};
struct SymmetryGroup {
  std::vector<Automorphism> elements;
  std::vector<std::vector<int>> facet_orbits;
  int order() const { return static_cast<int>(elements.size()); }
};

// Face-lattice automorphisms preserving vertex flags, facet sizes and (when present) ridge angles.
SymmetryGroup symmetry_group(const Polytope& p);

std::string polytope_json(const Polytope& p);

}  // namespace geobound
