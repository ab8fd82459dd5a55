#pragma once

#include "tropcy/polytope.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace tropcy {

/// Strongly convex rational polyhedral cone, stored by its primitive extreme
/// rays (sorted), with derived facet normals and span equations.
class Cone {
 public:
  static Cone from_generators(int ambient_rank, std::vector<VecZ> generators);
  static Cone zero(int ambient_rank);

  int ambient_rank() const { return ambient_rank_; }
  int dim() const { return dim_; }
  const std::vector<VecZ>& rays() const { return rays_; }
  const std::vector<VecZ>& facet_normals() const { return facet_normals_; }
  const std::vector<VecZ>& span_equations() const { return span_equations_; }

  bool contains(const VecQ& x) const;
  bool contains_z(const VecZ& x) const;
  VecQ relative_interior_point() const;

  std::vector<Cone> faces() const;  // all faces, including zero and itself
  bool is_face_of(const Cone& other) const;
  bool is_simplicial() const { return static_cast<int>(rays_.size()) == dim_; }
  /// Index of the lattice generated by the rays inside the span lattice;
  /// defined for simplicial cones.
  Int lattice_index() const;
  bool is_unimodular() const;

  bool operator==(const Cone& o) const {
    return ambient_rank_ == o.ambient_rank_ && rays_ == o.rays_;
  }
  bool operator<(const Cone& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return rays_ < o.rays_;
  }

  std::string describe() const;

 private:
  int ambient_rank_ = 0;
  int dim_ = 0;
  std::vector<VecZ> rays_;
  std::vector<VecZ> facet_normals_;
  std::vector<VecZ> span_equations_;
};

enum class FanSupport { Complete, HalfSpace, Partial };

struct Wall {
  int cone_a = -1;  // indices of the two maximal cones
  int cone_b = -1;
  Cone face;        // the shared codimension-1 cone
  VecZ witness_b;   // an extreme ray of cone_b outside the wall
};

enum class RefinementCheck { Refines, NotRefinement, SupportMismatch };

/// Pure rational polyhedral fan given by maximal cones; validated so that any
/// two cones intersect in a common face and the support matches the declared
/// kind (complete, a coordinate-free half space, or unrestricted).
class Fan {
 public:
  static Fan from_max_cones(int ambient_rank, std::vector<Cone> max_cones,
                            FanSupport support,
                            VecZ halfspace_normal = {});

  int ambient_rank() const { return ambient_rank_; }
  FanSupport support() const { return support_; }
  const VecZ& halfspace_normal() const { return halfspace_normal_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  const std::vector<Cone>& all_cones() const { return all_cones_; }
  const std::vector<VecZ>& rays() const { return rays_; }
  const std::vector<Wall>& walls() const { return walls_; }

  int ray_index(const VecZ& primitive_ray) const;  // -1 when absent
  /// Lowest index of a maximal cone containing x; -1 when outside support.
  int locate(const VecQ& x) const;
  bool has_cone(const Cone& c) const;

  RefinementCheck refines(const Fan& coarser) const;
  /// True when every maximal cone is generated by part of a lattice basis;
  /// otherwise returns the first offending cone.
  std::pair<bool, std::optional<Cone>> is_unimodular() const;

 private:
  int ambient_rank_ = 0;
  FanSupport support_ = FanSupport::Partial;
  VecZ halfspace_normal_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> all_cones_;
  std::vector<VecZ> rays_;
  std::vector<Wall> walls_;

  void validate_and_index();
};

/// Normal fan of a full-dimensional polytope (minimizing convention: the
/// maximal cone at a vertex v consists of the directions minimized at v).
Fan normal_fan(const Polytope& p);

/// Normal fan of the polyhedron conv(vertices) + cone(recession_rays). The
/// support is the polar of the recession cone; for a single recession ray it
/// is the half space {y : <ray, y> >= 0}.
Fan normal_fan_polyhedron(int ambient_rank, const std::vector<VecQ>& vertices,
                          const std::vector<VecZ>& recession_rays);

bool is_refinement(const Fan& fine, const Fan& coarse);

}  // namespace tropcy
