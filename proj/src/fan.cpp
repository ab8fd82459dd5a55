#include "tropcy/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropcy {

Cone Cone::zero(int ambient_rank) {
  Cone c;
  c.ambient_rank_ = ambient_rank;
  c.dim_ = 0;
  for (int i = 0; i < ambient_rank; ++i) {
    VecZ e(ambient_rank, Int(0));
    e[i] = 1;
    c.span_equations_.push_back(e);
  }
  return c;
}

Cone Cone::from_generators(int ambient_rank, std::vector<VecZ> generators) {
  std::vector<VecZ> gens;
  for (auto& g : generators) {
    VecZ p = primitive_z(g);
    if (is_zero_z(p)) continue;
    if (std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(std::move(p));
  }
  if (gens.empty()) return zero(ambient_rank);

  // Hull of {0} and the generator endpoints: faces through 0 are the cone's
  // faces.
  std::vector<VecQ> pts;
  pts.push_back(VecQ(ambient_rank, Rat(0)));
  for (const auto& g : gens) pts.push_back(to_q(g));
  Polytope hull = Polytope::hull(pts);

  VecQ origin(ambient_rank, Rat(0));
  int zero_vertex = -1;
  for (std::size_t i = 0; i < hull.vertices().size(); ++i)
    if (hull.vertices()[i] == origin) zero_vertex = static_cast<int>(i);
  if (zero_vertex < 0) throw Error("cone is not strongly convex");

  Cone c;
  c.ambient_rank_ = ambient_rank;
  c.dim_ = hull.dim();

  // Extreme rays are the edges of the hull through the origin.
  for (int ei : hull.faces_of_dim(1)) {
    const Face& e = hull.faces()[ei];
    if (e.verts[0] == zero_vertex)
      c.rays_.push_back(primitive(hull.vertices()[e.verts[1]]));
    else if (e.verts.size() == 2 && e.verts[1] == zero_vertex)
      c.rays_.push_back(primitive(hull.vertices()[e.verts[0]]));
  }
  std::sort(c.rays_.begin(), c.rays_.end());

  // Facets through the origin carry the cone's facet inequalities.
  for (const auto& f : hull.facets())
    if (f.offset == 0) c.facet_normals_.push_back(f.normal);
  for (const auto& e : hull.span_equations())
    c.span_equations_.push_back(e.normal);
  if (c.dim_ == 1) {
    // A segment hull has no facet through 0 inside its own span; positivity
    // along the ray is the only constraint there.
    c.facet_normals_.push_back(c.rays_[0]);
  }
  return c;
}

bool Cone::contains(const VecQ& x) const {
  for (const auto& e : span_equations_)
    if (dot(to_q(e), x) != 0) return false;
  for (const auto& n : facet_normals_)
    if (dot(to_q(n), x) < 0) return false;
  return true;
}

bool Cone::contains_z(const VecZ& x) const { return contains(to_q(x)); }

VecQ Cone::relative_interior_point() const {
  VecQ p(ambient_rank_, Rat(0));
  for (const auto& r : rays_) p = add(p, to_q(r));
  return p;
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  if (rays_.empty()) {
    out.push_back(*this);
    return out;
  }
  std::vector<VecQ> pts;
  pts.push_back(VecQ(ambient_rank_, Rat(0)));
  for (const auto& g : rays_) pts.push_back(to_q(g));
  Polytope hull = Polytope::hull(pts);
  VecQ origin(ambient_rank_, Rat(0));
  int zero_vertex = -1;
  for (std::size_t i = 0; i < hull.vertices().size(); ++i)
    if (hull.vertices()[i] == origin) zero_vertex = static_cast<int>(i);
  for (const auto& f : hull.faces()) {
    if (!std::binary_search(f.verts.begin(), f.verts.end(), zero_vertex))
      continue;
    std::vector<VecZ> gens;
    for (int vi : f.verts) {
      if (vi == zero_vertex) continue;
      gens.push_back(primitive(hull.vertices()[vi]));
    }
    out.push_back(Cone::from_generators(ambient_rank_, gens));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Cone::is_face_of(const Cone& other) const {
  for (const auto& f : other.faces())
    if (f == *this) return true;
  return false;
}

Int Cone::lattice_index() const {
  if (!is_simplicial()) throw Error("lattice index needs a simplicial cone");
  if (dim_ == 0) return 1;
  std::vector<VecZ> basis = saturated_lattice_basis(rays_);
  MatZ coords(dim_, VecZ(dim_));
  for (int i = 0; i < dim_; ++i) {
    auto c = affine_coordinates(basis, VecQ(ambient_rank_, Rat(0)),
                                to_q(rays_[i]));
    if (!c) throw Error("internal: ray outside its own span");
    for (int j = 0; j < dim_; ++j) coords[i][j] = to_int((*c)[j]);
  }
  Int d = det_z(coords);
  return d < 0 ? Int(-d) : d;
}

bool Cone::is_unimodular() const {
  return is_simplicial() && lattice_index() == 1;
}

std::string Cone::describe() const {
  std::ostringstream os;
  os << "cone{";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < rays_[i].size(); ++j) {
      if (j) os << ",";
      os << rays_[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

Fan Fan::from_max_cones(int ambient_rank, std::vector<Cone> max_cones,
                        FanSupport support, VecZ halfspace_normal) {
  Fan f;
  f.ambient_rank_ = ambient_rank;
  f.support_ = support;
  f.halfspace_normal_ = std::move(halfspace_normal);
  f.max_cones_ = std::move(max_cones);
  f.validate_and_index();
  return f;
}

void Fan::validate_and_index() {
  if (max_cones_.empty()) throw Error("fan has no cones");
  std::sort(max_cones_.begin(), max_cones_.end());
  max_cones_.erase(std::unique(max_cones_.begin(), max_cones_.end()),
                   max_cones_.end());

  if (support_ != FanSupport::Partial) {
    for (const auto& c : max_cones_)
      if (c.dim() != ambient_rank_)
        throw Error("maximal cone of deficient dimension: " + c.describe());
  }
  if (support_ == FanSupport::HalfSpace) {
    for (const auto& c : max_cones_)
      for (const auto& r : c.rays())
        if (dot_z(halfspace_normal_, r) < 0)
          throw Error("cone leaves the declared half-space support");
  }

  // Pairwise intersections must be common faces.
  for (std::size_t i = 0; i < max_cones_.size(); ++i) {
    for (std::size_t j = i + 1; j < max_cones_.size(); ++j) {
      MatZ rows;
      auto push_cone = [&rows](const Cone& c) {
        for (const auto& n : c.facet_normals()) rows.push_back(n);
        for (const auto& e : c.span_equations()) {
          rows.push_back(e);
          rows.push_back(neg_z(e));
        }
      };
      push_cone(max_cones_[i]);
      push_cone(max_cones_[j]);
      std::vector<VecZ> inter_rays = dd_extreme_rays(rows, ambient_rank_);
      Cone inter = Cone::from_generators(ambient_rank_, inter_rays);
      if (!inter.is_face_of(max_cones_[i]) || !inter.is_face_of(max_cones_[j]))
        throw Error("cones do not meet in a common face: " +
                    max_cones_[i].describe() + " vs " +
                    max_cones_[j].describe());
    }
  }

  // Collect all faces, rays, and walls.
  std::set<Cone> face_set;
  for (const auto& c : max_cones_)
    for (const auto& f : c.faces()) face_set.insert(f);
  all_cones_.assign(face_set.begin(), face_set.end());

  std::set<VecZ> ray_set;
  for (const auto& c : max_cones_)
    for (const auto& r : c.rays()) ray_set.insert(r);
  rays_.assign(ray_set.begin(), ray_set.end());

  if (support_ != FanSupport::Partial) {
    std::map<Cone, std::vector<int>> facet_owners;
    for (std::size_t i = 0; i < max_cones_.size(); ++i) {
      for (const auto& f : max_cones_[i].faces())
        if (f.dim() == max_cones_[i].dim() - 1)
          facet_owners[f].push_back(static_cast<int>(i));
    }
    for (const auto& [facet, owners] : facet_owners) {
      if (owners.size() == 2) {
        Wall w;
        w.cone_a = owners[0];
        w.cone_b = owners[1];
        w.face = facet;
        for (const auto& r : max_cones_[owners[1]].rays()) {
          if (!facet.contains_z(r)) {
            w.witness_b = r;
            break;
          }
        }
        if (w.witness_b.empty()) throw Error("internal: wall without witness");
        walls_.push_back(std::move(w));
      } else if (owners.size() == 1) {
        if (support_ == FanSupport::Complete)
          throw Error("fan is not complete: unmatched facet " +
                      facet.describe());
        for (const auto& r : facet.rays())
          if (dot_z(halfspace_normal_, r) != 0)
            throw Error("fan does not fill its half-space support");
      } else {
        throw Error("facet shared by more than two maximal cones");
      }
    }
  }
}

int Fan::ray_index(const VecZ& primitive_ray) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), primitive_ray);
  if (it == rays_.end() || *it != primitive_ray) return -1;
  return static_cast<int>(it - rays_.begin());
}

int Fan::locate(const VecQ& x) const {
  for (std::size_t i = 0; i < max_cones_.size(); ++i)
    if (max_cones_[i].contains(x)) return static_cast<int>(i);
  return -1;
}

bool Fan::has_cone(const Cone& c) const {
  return std::binary_search(all_cones_.begin(), all_cones_.end(), c);
}

RefinementCheck Fan::refines(const Fan& coarser) const {
  if (support_ != coarser.support_ ||
      (support_ == FanSupport::HalfSpace &&
       halfspace_normal_ != coarser.halfspace_normal_))
    return RefinementCheck::SupportMismatch;
  for (const auto& c : max_cones_) {
    bool inside = false;
    for (const auto& big : coarser.max_cones_) {
      bool all_in = true;
      for (const auto& r : c.rays())
        if (!big.contains_z(r)) { all_in = false; break; }
      if (all_in) { inside = true; break; }
    }
    if (!inside) return RefinementCheck::NotRefinement;
  }
  return RefinementCheck::Refines;
}

std::pair<bool, std::optional<Cone>> Fan::is_unimodular() const {
  for (const auto& c : max_cones_) {
    if (!c.is_simplicial() || c.lattice_index() != 1) return {false, c};
  }
  return {true, std::nullopt};
}

Fan normal_fan(const Polytope& p) {
  if (p.dim() != p.ambient_rank())
    throw Error("normal fan needs a full-dimensional polytope");
  std::vector<Cone> cones;
  for (const auto& v : p.vertices()) {
    std::vector<VecZ> gens;
    for (const auto& f : p.facets())
      if (dot(to_q(f.normal), v) == -f.offset) gens.push_back(f.normal);
    cones.push_back(Cone::from_generators(p.ambient_rank(), gens));
  }
  return Fan::from_max_cones(p.ambient_rank(), std::move(cones),
                             FanSupport::Complete);
}

Fan normal_fan_polyhedron(int ambient_rank, const std::vector<VecQ>& vertices,
                          const std::vector<VecZ>& recession_rays) {
  if (vertices.empty()) throw Error("polyhedron without vertices");
  MatZ rows;
  for (const auto& v : vertices) {
    VecQ r = v;
    r.push_back(Rat(1));
    rows.push_back(primitive(r));
  }
  for (const auto& rec : recession_rays) {
    VecZ r = rec;
    r.push_back(Int(0));
    rows.push_back(primitive_z(r));
  }
  std::vector<VecZ> dual = dd_extreme_rays(rows, ambient_rank + 1);
  struct Fct {
    VecZ normal;
    Rat offset;
  };
  std::vector<Fct> facets;
  for (const auto& d : dual) {
    VecZ n(d.begin(), d.end() - 1);
    if (is_zero_z(n)) continue;  // the t >= 0 direction, not a facet
    facets.push_back(Fct{n, Rat(d.back())});
  }
  std::vector<Cone> cones;
  for (const auto& v : vertices) {
    std::vector<VecZ> gens;
    for (const auto& f : facets)
      if (dot(to_q(f.normal), v) == -f.offset) gens.push_back(f.normal);
    MatQ normq;
    for (const auto& g : gens) normq.push_back(to_q(g));
    if (rank_of(normq) < ambient_rank) continue;  // not an actual vertex
    cones.push_back(Cone::from_generators(ambient_rank, gens));
  }
  if (recession_rays.empty())
    return Fan::from_max_cones(ambient_rank, std::move(cones),
                               FanSupport::Complete);
  if (recession_rays.size() == 1)
    return Fan::from_max_cones(ambient_rank, std::move(cones),
                               FanSupport::HalfSpace,
                               primitive_z(recession_rays[0]));
  return Fan::from_max_cones(ambient_rank, std::move(cones),
                             FanSupport::Partial);
}

bool is_refinement(const Fan& fine, const Fan& coarse) {
  return fine.refines(coarse) == RefinementCheck::Refines;
}

}  // namespace tropcy
