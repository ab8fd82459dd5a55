#pragma once

#include "tropcy/linalg.hpp"

#include <optional>
#include <vector>

namespace tropcy {

/// Closed half space {x : <normal, x> >= -offset}; normal is primitive.
struct HalfSpace {
  VecZ normal;
  Rat offset;
};

/// Affine hyperplane {x : <normal, x> == -offset}; normal is primitive.
struct Hyperplane {
  VecZ normal;
  Rat offset;
};

/// A face identified by its (sorted) vertex index set.
struct Face {
  std::vector<int> verts;
  int dim = -1;
};

/// Bounded convex polytope with exact rational V- and H-representations and a
/// full face lattice. Lower-dimensional polytopes are first class; their
/// affine span is carried as a list of hyperplane equations. Immutable after
/// construction.
class Polytope {
 public:
  struct Frame {
    VecQ origin;
    std::vector<VecZ> basis;  // saturated lattice basis of the span directions
  };

  static Polytope hull(std::vector<VecQ> points);
  static Polytope hull_z(const std::vector<VecZ>& points);
  static Polytope intersect(int ambient_rank, std::vector<HalfSpace> halfspaces,
                            std::vector<Hyperplane> equations = {});
  static Polytope empty(int ambient_rank);

  int ambient_rank() const { return ambient_rank_; }
  int dim() const { return dim_; }  // -1 for the empty polytope
  bool is_empty() const { return dim_ < 0; }

  const std::vector<VecQ>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<Hyperplane>& span_equations() const { return equations_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::vector<int> faces_of_dim(int k) const;
  const Face& top_face() const;
  /// Children (codimension-1 subfaces) of face index f in faces().
  const std::vector<int>& children_of(int face_index) const;

  bool contains(const VecQ& p) const;
  bool contains_z(const VecZ& p) const;
  bool is_lattice() const;
  bool same_vertex_set(const Polytope& other) const;

  VecQ vertex(int i) const { return vertices_[i]; }
  std::vector<VecQ> face_vertices(const Face& f) const;
  Polytope face_polytope(const Face& f) const;
  /// Index into faces() of the unique minimal face containing all points;
  /// nullopt when some point is outside the polytope.
  std::optional<int> minimal_face_containing(const std::vector<VecQ>& pts) const;
  std::optional<int> find_face(const std::vector<VecQ>& face_vertices) const;

  /// Lattice-adapted affine frame of the span (origin = first vertex).
  const Frame& frame() const { return frame_; }
  VecQ to_local(const VecQ& ambient) const;
  VecQ to_ambient(const VecQ& local) const;

 private:
  int ambient_rank_ = 0;
  int dim_ = -1;
  std::vector<VecQ> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<Hyperplane> equations_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> children_;
  Frame frame_;

  void build_from_vertices(std::vector<VecQ> pts);
  void build_face_lattice();
};

Polytope convex_hull(const std::vector<VecQ>& points);

/// Polar dual {y : <x, y> >= -1 for all x in P}. Requires a full-dimensional
/// polytope with the origin in its interior.
Polytope polar_dual(const Polytope& p);

bool is_reflexive(const Polytope& p);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// True iff face_p + face_q is a face of p + q, decided exactly via the
/// relative interiors of the normal cones.
bool face_minkowski_test(const Polytope& p, const Polytope& q,
                         const Face& face_p, const Face& face_q);

/// All lattice points of a bounded polytope in lexicographic order.
std::vector<VecZ> lattice_points(const Polytope& p);

/// Volume with respect to the lattice of the affine span: a unimodular
/// k-simplex has volume 1/k!. Requires lattice vertices.
Rat normalized_volume(const Polytope& p);

/// Plain Euclidean volume of the polytope in its given coordinates (used for
/// cells already expressed in lattice-adapted local coordinates).
Rat euclidean_volume(const Polytope& p);

/// Centroid in the polytope's own coordinates (dim >= 0 required).
VecQ centroid(const Polytope& p);

Polytope dilate(const Polytope& p, const Rat& factor);
Polytope translate(const Polytope& p, const VecQ& shift);

}  // namespace tropcy
