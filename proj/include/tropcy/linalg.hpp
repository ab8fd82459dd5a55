#pragma once

#include "tropcy/numeric.hpp"

#include <optional>
#include <vector>

namespace tropcy {

using MatZ = std::vector<VecZ>;
using MatQ = std::vector<VecQ>;

// ---- small dense exact linear algebra; rows are vectors ----

template <class A, class B>
Rat dot(const A& a, const B& b) {
  if (a.size() != b.size()) throw Error("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * Rat(b[i]);
  return s;
}

Int dot_z(const VecZ& a, const VecZ& b);

VecQ to_q(const VecZ& v);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecQ scale(const VecQ& a, const Rat& c);
VecZ add_z(const VecZ& a, const VecZ& b);
VecZ sub_z(const VecZ& a, const VecZ& b);
VecZ neg_z(const VecZ& a);
bool is_zero(const VecQ& v);
bool is_zero_z(const VecZ& v);

/// Clears denominators and divides by gcd; sign of the first nonzero entry is
/// preserved. Zero vector stays zero.
VecZ primitive(const VecQ& v);
VecZ primitive_z(const VecZ& v);

int rank_of(const MatQ& rows);
int rank_of_z(const MatZ& rows);

Int det_z(const MatZ& square);

/// Solves M x = rhs for square M; nullopt when singular.
std::optional<VecQ> solve_square(const MatQ& m, const VecQ& rhs);

/// Any solution of rows * x = rhs (rows: m x n); nullopt when inconsistent.
std::optional<VecQ> solve_general(const MatQ& rows, const VecQ& rhs);

/// Basis of the rational null space {x in R^dim : rows * x = 0}, scaled to
/// primitive integer vectors.
std::vector<VecZ> nullspace(const MatQ& rows, int dim);

/// Basis of the integer kernel {x in Z^dim : rows * x = 0}.
std::vector<VecZ> integer_kernel(const MatZ& rows, int dim);

/// Basis of the saturated lattice span_Q(rows) ∩ Z^n.  The result has
/// rank(rows) elements and generates the full lattice of integer points in the
/// rational span.
std::vector<VecZ> saturated_lattice_basis(const MatZ& rows);

/// Coordinates of p in the affine frame (origin; basis rows), i.e. solves
/// p = origin + sum c_i basis_i; nullopt when p is outside the affine span.
std::optional<VecQ> affine_coordinates(const std::vector<VecZ>& basis,
                                       const VecQ& origin, const VecQ& p);

// ---- double description: exact extreme rays / vertex enumeration ----

/// Extreme rays of the pointed cone {x in R^dim : c . x >= 0 for all rows c}.
/// Throws if the cone is not pointed (constraint rank < dim). Rays are
/// primitive integer vectors in deterministic (lexicographic) order.
std::vector<VecZ> dd_extreme_rays(const MatZ& constraints, int dim);

struct VertexEnum {
  std::vector<VecQ> vertices;
  std::vector<VecQ> recession_rays;
  bool feasible = false;
};

/// Vertices and recession rays of {x : ineq_normal . x >= -ineq_offset,
/// eq_normal . x == -eq_offset}. Throws if the feasible set contains a line.
VertexEnum enumerate_vertices(int dim, const MatQ& ineq_normals,
                              const VecQ& ineq_offsets, const MatQ& eq_normals,
                              const VecQ& eq_offsets);

/// True when {x : strict_rows . x > 0, eq_rows . x == 0} is nonempty.
bool strictly_feasible(int dim, const MatQ& strict_rows, const MatQ& eq_rows);

}  // namespace tropcy
