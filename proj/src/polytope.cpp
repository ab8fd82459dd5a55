#include "tropcy/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropcy {

namespace {

bool qlex(const VecQ& a, const VecQ& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool zlex(const VecZ& a, const VecZ& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Makes the normal primitive integer, scaling the offset accordingly.
std::pair<VecZ, Rat> normalize_halfspace(const VecQ& normal, const Rat& offset) {
  VecZ prim = primitive(normal);
  if (is_zero_z(prim)) throw Error("zero normal");
  Rat factor;
  for (std::size_t i = 0; i < prim.size(); ++i) {
    if (prim[i] != 0) {
      factor = normal[i] / Rat(prim[i]);
      break;
    }
  }
  return {prim, offset / factor};
}

}  // namespace

Polytope Polytope::empty(int ambient_rank) {
  Polytope p;
  p.ambient_rank_ = ambient_rank;
  p.dim_ = -1;
  return p;
}

Polytope Polytope::hull(std::vector<VecQ> points) {
  if (points.empty()) throw Error("empty point set");
  const std::size_t rank = points[0].size();
  for (const auto& p : points)
    if (p.size() != rank) throw Error("points of mixed ambient rank");
  Polytope out;
  out.ambient_rank_ = static_cast<int>(rank);
  out.build_from_vertices(std::move(points));
  return out;
}

Polytope Polytope::hull_z(const std::vector<VecZ>& points) {
  std::vector<VecQ> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_q(p));
  return hull(std::move(q));
}

void Polytope::build_from_vertices(std::vector<VecQ> pts) {
  std::sort(pts.begin(), pts.end(), qlex);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int rank = ambient_rank_;

  // Affine span and lattice-adapted frame.
  const VecQ& v0 = pts[0];
  MatZ dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    VecZ d = primitive(sub(pts[i], v0));
    if (!is_zero_z(d)) dirs.push_back(d);
  }
  frame_.origin = v0;
  frame_.basis = saturated_lattice_basis(dirs);
  dim_ = static_cast<int>(frame_.basis.size());

  // Span equations from the integer orthogonal complement.
  equations_.clear();
  for (const VecZ& e : integer_kernel(dirs.empty() ? MatZ{VecZ(rank, Int(0))}
                                                   : dirs,
                                      rank)) {
    VecZ en = primitive_z(e);
    equations_.push_back(Hyperplane{en, -dot(to_q(en), v0)});
  }

  if (dim_ == 0) {
    vertices_ = {v0};
    facets_.clear();
    faces_ = {Face{{0}, 0}};
    children_ = {{}};
    return;
  }

  // Local coordinates in the frame.
  std::vector<VecQ> local;
  local.reserve(pts.size());
  for (const auto& p : pts) {
    auto c = affine_coordinates(frame_.basis, v0, p);
    if (!c) throw Error("internal: point outside affine span");
    local.push_back(*c);
  }

  // Facets of the full-dimensional local hull: extreme rays (a, b) of the
  // cone dual to the homogenized point cone give supporting halfspaces
  // a.y >= -b.
  MatZ dual_constraints;
  for (const auto& y : local) {
    VecQ row = y;
    row.push_back(Rat(1));
    dual_constraints.push_back(primitive(row));
  }
  std::vector<VecZ> facet_rays = dd_extreme_rays(dual_constraints, dim_ + 1);

  struct LocalFacet {
    VecQ normal;  // in local coordinates
    Rat offset;
    std::vector<int> incident;  // indices into pts
  };
  std::vector<LocalFacet> lf;
  for (const auto& ray : facet_rays) {
    LocalFacet f;
    f.normal.assign(dim_, Rat(0));
    for (int j = 0; j < dim_; ++j) f.normal[j] = Rat(ray[j]);
    f.offset = Rat(ray[dim_]);
    lf.push_back(std::move(f));
  }

  // Vertex detection: a point is a vertex iff its active facet normals span
  // the full local space.
  std::vector<std::vector<int>> active_facets(pts.size());
  for (std::size_t fi = 0; fi < lf.size(); ++fi) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (dot(lf[fi].normal, local[i]) == -lf[fi].offset)
        active_facets[i].push_back(static_cast<int>(fi));
    }
  }
  std::vector<int> vertex_of_point(pts.size(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    MatQ normals;
    for (int fi : active_facets[i]) normals.push_back(lf[fi].normal);
    if (rank_of(normals) == dim_) {
      vertex_of_point[i] = static_cast<int>(vertices_.size());
      vertices_.push_back(pts[i]);
    }
  }

  // Lift facets to ambient halfspaces.
  facets_.clear();
  MatQ basis_rows;
  for (const auto& b : frame_.basis) basis_rows.push_back(to_q(b));
  for (const auto& f : lf) {
    auto n = solve_general(basis_rows, f.normal);
    if (!n) throw Error("internal: facet lift failed");
    Rat off = f.offset - dot(*n, v0);
    auto [prim, prim_off] = normalize_halfspace(*n, off);
    facets_.push_back(HalfSpace{prim, prim_off});
  }

  build_face_lattice();
}

void Polytope::build_face_lattice() {
  const int nv = static_cast<int>(vertices_.size());
  std::vector<std::vector<int>> facet_sets(facets_.size());
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    for (int i = 0; i < nv; ++i) {
      if (dot(to_q(facets_[f].normal), vertices_[i]) == -facets_[f].offset)
        facet_sets[f].push_back(i);
    }
  }
  std::set<std::vector<int>> sets;
  std::vector<int> all(nv);
  for (int i = 0; i < nv; ++i) all[i] = i;
  sets.insert(all);
  for (const auto& s : facet_sets)
    if (!s.empty()) sets.insert(s);
  // Close under pairwise intersection.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(sets.begin(), sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (const auto& fs : facet_sets) {
        std::vector<int> inter;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(),
                              fs.begin(), fs.end(), std::back_inserter(inter));
        if (!inter.empty() && sets.insert(inter).second) grew = true;
      }
    }
  }

  faces_.clear();
  for (const auto& s : sets) {
    Face f;
    f.verts = s;
    MatZ dirs;
    for (std::size_t i = 1; i < s.size(); ++i)
      dirs.push_back(primitive(sub(vertices_[s[i]], vertices_[s[0]])));
    f.dim = static_cast<int>(saturated_lattice_basis(dirs).size());
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });

  children_.assign(faces_.size(), {});
  for (std::size_t p = 0; p < faces_.size(); ++p) {
    for (std::size_t c = 0; c < faces_.size(); ++c) {
      if (faces_[c].dim != faces_[p].dim - 1) continue;
      if (std::includes(faces_[p].verts.begin(), faces_[p].verts.end(),
                        faces_[c].verts.begin(), faces_[c].verts.end()))
        children_[p].push_back(static_cast<int>(c));
    }
  }
}

Polytope Polytope::intersect(int ambient_rank,
                             std::vector<HalfSpace> halfspaces,
                             std::vector<Hyperplane> equations) {
  MatQ in;
  VecQ ib;
  for (const auto& h : halfspaces) {
    in.push_back(to_q(h.normal));
    ib.push_back(h.offset);
  }
  MatQ en;
  VecQ eb;
  for (const auto& e : equations) {
    en.push_back(to_q(e.normal));
    eb.push_back(e.offset);
  }
  VertexEnum ve = enumerate_vertices(ambient_rank, in, ib, en, eb);
  if (!ve.feasible) return empty(ambient_rank);
  if (!ve.recession_rays.empty()) throw Error("unbounded polyhedron");
  return hull(std::move(ve.vertices));
}

std::vector<int> Polytope::faces_of_dim(int k) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].dim == k) out.push_back(static_cast<int>(i));
  return out;
}

const Face& Polytope::top_face() const {
  if (is_empty()) throw Error("empty polytope has no faces");
  return faces_.back();
}

const std::vector<int>& Polytope::children_of(int face_index) const {
  return children_[face_index];
}

bool Polytope::contains(const VecQ& p) const {
  if (is_empty()) return false;
  for (const auto& e : equations_)
    if (dot(to_q(e.normal), p) != -e.offset) return false;
  for (const auto& f : facets_)
    if (dot(to_q(f.normal), p) < -f.offset) return false;
  return true;
}

bool Polytope::contains_z(const VecZ& p) const { return contains(to_q(p)); }

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (!is_integer(c)) return false;
  return true;
}

bool Polytope::same_vertex_set(const Polytope& other) const {
  return vertices_ == other.vertices_;  // both sorted lexicographically
}

std::vector<VecQ> Polytope::face_vertices(const Face& f) const {
  std::vector<VecQ> out;
  out.reserve(f.verts.size());
  for (int i : f.verts) out.push_back(vertices_[i]);
  return out;
}

Polytope Polytope::face_polytope(const Face& f) const {
  return hull(face_vertices(f));
}

std::optional<int> Polytope::minimal_face_containing(
    const std::vector<VecQ>& pts) const {
  for (const auto& p : pts)
    if (!contains(p)) return std::nullopt;
  std::vector<int> active;
  for (std::size_t fi = 0; fi < facets_.size(); ++fi) {
    bool all_on = true;
    for (const auto& p : pts) {
      if (dot(to_q(facets_[fi].normal), p) != -facets_[fi].offset) {
        all_on = false;
        break;
      }
    }
    if (all_on) active.push_back(static_cast<int>(fi));
  }
  if (active.empty()) return static_cast<int>(faces_.size()) - 1;
  std::vector<int> verts;
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    bool on_all = true;
    for (int fi : active) {
      if (dot(to_q(facets_[fi].normal), vertices_[i]) != -facets_[fi].offset) {
        on_all = false;
        break;
      }
    }
    if (on_all) verts.push_back(i);
  }
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].verts == verts) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Polytope::find_face(
    const std::vector<VecQ>& face_vertices) const {
  std::vector<int> idx;
  for (const auto& v : face_vertices) {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v, qlex);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    idx.push_back(static_cast<int>(it - vertices_.begin()));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].verts == idx) return static_cast<int>(i);
  return std::nullopt;
}

VecQ Polytope::to_local(const VecQ& ambient) const {
  auto c = affine_coordinates(frame_.basis, frame_.origin, ambient);
  if (!c) throw Error("point outside affine span");
  return *c;
}

VecQ Polytope::to_ambient(const VecQ& local) const {
  VecQ x = frame_.origin;
  for (std::size_t j = 0; j < frame_.basis.size(); ++j)
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] += local[j] * Rat(frame_.basis[j][k]);
  return x;
}

Polytope convex_hull(const std::vector<VecQ>& points) {
  return Polytope::hull(points);
}

Polytope polar_dual(const Polytope& p) {
  if (p.dim() != p.ambient_rank()) throw Error("origin not interior");
  for (const auto& f : p.facets())
    if (f.offset <= 0) throw Error("origin not interior");
  std::vector<VecQ> dual_verts;
  for (const auto& f : p.facets()) {
    VecQ v(f.normal.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(f.normal[i]) / f.offset;
    dual_verts.push_back(std::move(v));
  }
  return Polytope::hull(std::move(dual_verts));
}

bool is_reflexive(const Polytope& p) {
  if (p.dim() != p.ambient_rank()) return false;
  if (!p.is_lattice()) return false;
  for (const auto& f : p.facets())
    if (f.offset != 1) return false;
  return true;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_rank() != q.ambient_rank()) throw Error("rank mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_rank());
  std::vector<VecQ> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::hull(std::move(sums));
}

bool face_minkowski_test(const Polytope& p, const Polytope& q,
                         const Face& face_p, const Face& face_q) {
  auto check = [](const Polytope& poly, const Face& f) {
    for (int i : f.verts)
      if (i < 0 || i >= static_cast<int>(poly.vertices().size()))
        throw Error("face not of polytope");
    for (const auto& g : poly.faces())
      if (g.verts == f.verts) return;
    throw Error("face not of polytope");
  };
  check(p, face_p);
  check(q, face_q);

  const int rank = p.ambient_rank();
  MatQ eq, strict;
  auto add_rows = [&](const Polytope& poly, const Face& f) {
    const VecQ& v0 = poly.vertices()[f.verts[0]];
    std::set<int> in_face(f.verts.begin(), f.verts.end());
    for (std::size_t i = 1; i < f.verts.size(); ++i)
      eq.push_back(sub(poly.vertices()[f.verts[i]], v0));
    for (int i = 0; i < static_cast<int>(poly.vertices().size()); ++i)
      if (!in_face.count(i)) strict.push_back(sub(poly.vertices()[i], v0));
  };
  add_rows(p, face_p);
  add_rows(q, face_q);
  return strictly_feasible(rank, strict, eq);
}

std::vector<VecZ> lattice_points(const Polytope& p) {
  std::vector<VecZ> out;
  if (p.is_empty()) return out;
  const int rank = p.ambient_rank();

  if (p.dim() < rank && p.is_lattice()) {
    // Enumerate in lattice-adapted local coordinates: the frame maps the
    // span lattice bijectively onto Z^dim.
    const int k = p.dim();
    if (k == 0) {
      VecZ v(rank);
      for (int i = 0; i < rank; ++i) v[i] = to_int(p.vertices()[0][i]);
      return {v};
    }
    std::vector<VecQ> local;
    for (const auto& v : p.vertices()) local.push_back(p.to_local(v));
    VecZ lo(k), hi(k);
    for (int j = 0; j < k; ++j) {
      Rat mn = local[0][j], mx = local[0][j];
      for (const auto& y : local) {
        mn = std::min(mn, y[j]);
        mx = std::max(mx, y[j]);
      }
      lo[j] = ceil_rat(mn);
      hi[j] = floor_rat(mx);
    }
    // Local H-representation via a local hull.
    Polytope local_poly = Polytope::hull(local);
    VecZ cur = lo;
    while (true) {
      VecQ yq(k);
      for (int j = 0; j < k; ++j) yq[j] = Rat(cur[j]);
      if (local_poly.contains(yq)) {
        VecQ amb = p.to_ambient(yq);
        VecZ az(rank);
        bool ok = true;
        for (int i = 0; i < rank; ++i) {
          if (!is_integer(amb[i])) { ok = false; break; }
          az[i] = numerator(amb[i]);
        }
        if (ok) out.push_back(std::move(az));
      }
      int j = k - 1;
      while (j >= 0) {
        if (cur[j] < hi[j]) { ++cur[j]; break; }
        cur[j] = lo[j];
        --j;
      }
      if (j < 0) break;
    }
    std::sort(out.begin(), out.end(), zlex);
    return out;
  }

  // Ambient bounding-box scan (exponential in the rank; fine at desk scale).
  VecZ lo(rank), hi(rank);
  for (int i = 0; i < rank; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_rat(mn);
    hi[i] = floor_rat(mx);
    if (lo[i] > hi[i]) return out;
  }
  VecZ cur = lo;
  while (true) {
    if (p.contains_z(cur)) out.push_back(cur);
    int j = rank - 1;
    while (j >= 0) {
      if (cur[j] < hi[j]) { ++cur[j]; break; }
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  return out;  // scan order is lexicographic already
}

namespace {

// Sum over a recursive triangulation of |det| of local simplices; volumes and
// centroids computed together.
struct TriAccum {
  Rat volume = 0;
  VecQ weighted_centroid;
};

void triangulate_accumulate(const Polytope& p, const std::vector<VecQ>& local,
                            int face_index, std::vector<VecQ>& simplex,
                            TriAccum& acc) {
  const Face& f = p.faces()[face_index];
  if (f.dim == 0) {
    simplex.push_back(local[f.verts[0]]);
    if (static_cast<int>(simplex.size()) == p.dim() + 1) {
      const int d = p.dim();
      MatQ mq(d, VecQ(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) mq[i][j] = simplex[i + 1][j] - simplex[0][j];
      // Exact determinant over rationals via elimination.
      Rat det = 1;
      MatQ a = mq;
      for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d; ++r)
          if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) { det = 0; break; }
        if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
        det *= a[c][c];
        for (int r = c + 1; r < d; ++r) {
          Rat fmul = a[r][c] / a[c][c];
          for (int cc = c; cc < d; ++cc) a[r][cc] -= fmul * a[c][cc];
        }
      }
      if (det < 0) det = -det;
      Int kfact = 1;
      for (int i = 2; i <= d; ++i) kfact *= i;
      Rat vol = det / Rat(kfact);
      if (vol != 0) {
        acc.volume += vol;
        VecQ c(simplex[0].size(), Rat(0));
        for (const auto& s : simplex) c = add(c, s);
        c = scale(c, Rat(1) / Rat(static_cast<int>(simplex.size())));
        if (acc.weighted_centroid.empty())
          acc.weighted_centroid.assign(c.size(), Rat(0));
        acc.weighted_centroid = add(acc.weighted_centroid, scale(c, vol));
      }
    }
    simplex.pop_back();
    return;
  }
  // Pulling triangulation: cone from the face's lowest vertex over the
  // subfaces avoiding it.
  int v0 = f.verts[0];
  simplex.push_back(local[v0]);
  for (int child : p.children_of(face_index)) {
    const Face& cf = p.faces()[child];
    if (std::binary_search(cf.verts.begin(), cf.verts.end(), v0)) continue;
    triangulate_accumulate(p, local, child, simplex, acc);
  }
  simplex.pop_back();
}

TriAccum triangulate(const Polytope& p) {
  TriAccum acc;
  if (p.is_empty()) return acc;
  if (p.dim() == 0) {
    acc.volume = 1;
    acc.weighted_centroid = p.vertices()[0];
    return acc;
  }
  std::vector<VecQ> local;
  for (const auto& v : p.vertices()) local.push_back(p.to_local(v));
  std::vector<VecQ> simplex;
  int top = static_cast<int>(p.faces().size()) - 1;
  triangulate_accumulate(p, local, top, simplex, acc);
  return acc;
}

}  // namespace

Rat normalized_volume(const Polytope& p) {
  if (p.is_empty()) return 0;
  if (!p.is_lattice()) throw Error("non-lattice vertices");
  if (p.dim() == 0) return 1;
  return triangulate(p).volume;
}

Rat euclidean_volume(const Polytope& p) {
  // Volume in the polytope's own coordinates. Lower-dimensional input has
  // zero volume. For full-dimensional input the frame basis is a saturated
  // basis of Z^rank, hence unimodular, so the local volume is the ambient one.
  if (p.is_empty()) return 0;
  if (p.dim() < p.ambient_rank()) return 0;
  if (p.dim() == 0) return 1;
  return triangulate(p).volume;
}

VecQ centroid(const Polytope& p) {
  if (p.is_empty()) throw Error("centroid of empty polytope");
  if (p.dim() == 0) return p.vertices()[0];
  TriAccum acc = triangulate(p);
  if (acc.volume == 0) throw Error("centroid of degenerate polytope");
  VecQ local = scale(acc.weighted_centroid, Rat(1) / acc.volume);
  return p.to_ambient(local);
}

Polytope dilate(const Polytope& p, const Rat& factor) {
  if (factor <= 0) throw Error("dilation factor must be positive");
  if (p.is_empty()) return p;
  std::vector<VecQ> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(scale(v, factor));
  return Polytope::hull(std::move(verts));
}

Polytope translate(const Polytope& p, const VecQ& shift) {
  if (p.is_empty()) return p;
  std::vector<VecQ> verts;
  verts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) verts.push_back(add(v, shift));
  return Polytope::hull(std::move(verts));
}

}  // namespace tropcy
