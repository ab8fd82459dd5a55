#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropcy/polytope.hpp"

#include <random>
#include <set>

using namespace tropcy;

namespace {

VecQ qv(std::initializer_list<int> xs) {
  VecQ v;
  for (int x : xs) v.push_back(Rat(x));
  return v;
}

VecZ zv(std::initializer_list<int> xs) {
  VecZ v;
  for (int x : xs) v.push_back(Int(x));
  return v;
}

// Brute-force 2D hull: every line through a pair of points with all points on
// one side is a supporting halfplane; vertices are points lying on two
// independent supporting lines.
struct BruteHull2D {
  std::vector<std::pair<VecZ, Rat>> halfplanes;  // normal, offset
  std::vector<VecQ> vertices;
};

BruteHull2D brute_hull_2d(const std::vector<VecQ>& pts) {
  BruteHull2D out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      VecQ d = sub(pts[j], pts[i]);
      if (is_zero(d)) continue;
      VecQ n = {d[1], -d[0]};
      for (int sign : {1, -1}) {
        VecQ ns = scale(n, Rat(sign));
        Rat off = -dot(ns, pts[i]);
        bool supporting = true;
        for (const auto& p : pts)
          if (dot(ns, p) < -off) { supporting = false; break; }
        if (supporting) {
          auto prim = primitive(ns);
          Rat f;
          for (std::size_t k = 0; k < prim.size(); ++k)
            if (prim[k] != 0) { f = ns[k] / Rat(prim[k]); break; }
          Rat po = off / f;
          bool dup = false;
          for (auto& hp : out.halfplanes)
            if (hp.first == prim && hp.second == po) dup = true;
          if (!dup) out.halfplanes.push_back({prim, po});
        }
      }
    }
  }
  for (const auto& p : pts) {
    int active = 0;
    std::set<VecZ> normals;
    for (const auto& hp : out.halfplanes)
      if (dot(to_q(hp.first), p) == -hp.second) {
        ++active;
        normals.insert(hp.first);
      }
    if (normals.size() >= 2) out.vertices.push_back(p);
  }
  return out;
}

std::vector<Polytope> sample_reflexive_polygons(int count) {
  // Seed classes, then random unimodular images (shears and swaps).
  std::vector<std::vector<VecQ>> seeds = {
      {qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})},
      {qv({1, 0}), qv({0, 1}), qv({-1, 0}), qv({0, -1})},
      {qv({2, -1}), qv({-1, 2}), qv({-1, -1})},
      {qv({1, 0}), qv({0, 1}), qv({-1, -1})},
      {qv({1, 0}), qv({0, 1}), qv({-1, 1}), qv({-1, -1}), qv({1, -1})},
  };
  std::mt19937 rng(20240811u);
  std::vector<Polytope> out;
  while (static_cast<int>(out.size()) < count) {
    const auto& seed = seeds[rng() % seeds.size()];
    // Random unimodular matrix as a product of shears/swaps.
    long a = 1, b = 0, c = 0, d = 1;
    for (int s = 0; s < 4; ++s) {
      long k = static_cast<long>(rng() % 5) - 2;
      if (rng() % 2) {  // row shear
        a += k * c;
        b += k * d;
      } else {
        c += k * a;
        d += k * b;
      }
      if (rng() % 3 == 0) {
        std::swap(a, c);
        std::swap(b, d);
      }
    }
    std::vector<VecQ> verts;
    for (const auto& v : seed)
      verts.push_back({Rat(a) * v[0] + Rat(b) * v[1],
                       Rat(c) * v[0] + Rat(d) * v[1]});
    Polytope p = Polytope::hull(verts);
    if (is_reflexive(p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("convex hull of the unit box") {
  auto p = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  CHECK(p.dim() == 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(p.span_equations().empty());
}

TEST_CASE("convex hull of a single point") {
  auto p = Polytope::hull({qv({0, 0})});
  CHECK(p.dim() == 0);
  CHECK(p.vertices().size() == 1);
  CHECK(p.span_equations().size() == 2);
  CHECK(p.contains(qv({0, 0})));
  CHECK(!p.contains(qv({1, 0})));
}

TEST_CASE("convex hull discards interior points; matches brute force") {
  std::vector<VecQ> pts = {qv({2, -1}), qv({-1, 2}), qv({-1, -1}), qv({0, 0})};
  auto p = Polytope::hull(pts);
  CHECK(p.vertices().size() == 3);
  auto brute = brute_hull_2d(pts);
  CHECK(brute.vertices.size() == 3);
  for (const auto& v : brute.vertices) {
    bool found = false;
    for (const auto& w : p.vertices()) found = found || w == v;
    CHECK(found);
  }
  CHECK(p.facets().size() == brute.halfplanes.size());
  for (const auto& hp : brute.halfplanes) {
    bool found = false;
    for (const auto& f : p.facets())
      found = found || (f.normal == hp.first && f.offset == hp.second);
    CHECK(found);
  }
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_WITH(Polytope::hull({}), "empty point set");
}

TEST_CASE("hull output supports its facets") {
  auto p = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1}), qv({0, 0}),
                           qv({1, 0}), qv({0, 1})});
  for (const auto& f : p.facets()) {
    bool touched = false;
    for (const auto& v : p.vertices()) {
      Rat s = dot(to_q(f.normal), v);
      CHECK(s >= -f.offset);
      touched = touched || s == -f.offset;
    }
    CHECK(touched);
  }
  // Every vertex lies on at least dim many independent facets.
  for (const auto& v : p.vertices()) {
    MatQ act;
    for (const auto& f : p.facets())
      if (dot(to_q(f.normal), v) == -f.offset) act.push_back(to_q(f.normal));
    CHECK(rank_of(act) >= p.dim());
  }
}

TEST_CASE("polar dual of the square is the diamond") {
  auto square =
      Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  auto diamond = polar_dual(square);
  auto expect =
      Polytope::hull({qv({1, 0}), qv({0, 1}), qv({-1, 0}), qv({0, -1})});
  CHECK(diamond.same_vertex_set(expect));
}

TEST_CASE("polar dual of the anticanonical triangle") {
  auto t = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});
  auto d = polar_dual(t);
  auto expect = Polytope::hull({qv({1, 0}), qv({0, 1}), qv({-1, -1})});
  CHECK(d.same_vertex_set(expect));
}

TEST_CASE("polar dual requires interior origin") {
  auto shifted = Polytope::hull({qv({0, 0}), qv({2, 0}), qv({0, 2})});
  CHECK_THROWS_WITH(polar_dual(shifted), "origin not interior");
}

TEST_CASE("polar duality is an involution on random reflexive polygons") {
  for (const auto& p : sample_reflexive_polygons(20)) {
    auto dd = polar_dual(polar_dual(p));
    CHECK(dd.same_vertex_set(p));
    CHECK(is_reflexive(polar_dual(p)));
  }
}

TEST_CASE("reflexivity checks") {
  CHECK(is_reflexive(
      Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})})));
  CHECK(!is_reflexive(
      Polytope::hull({qv({2, 2}), qv({2, -2}), qv({-2, 2}), qv({-2, -2})})));
  auto simplex = Polytope::hull({qv({3, -1, -1}), qv({-1, 3, -1}),
                                 qv({-1, -1, 3}), qv({-1, -1, -1})});
  CHECK(is_reflexive(simplex));
  CHECK(polar_dual(simplex).is_lattice());
  // Non-lattice input: reflexivity is simply false.
  auto half = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}),
                              {Rat(-1, 2), Rat(-1, 2)}});
  CHECK(!is_reflexive(half));
}

TEST_CASE("minkowski sum basics") {
  auto sq = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  auto zero = Polytope::hull({qv({0, 0})});
  CHECK(minkowski_sum(sq, zero).same_vertex_set(sq));

  auto seg_x = Polytope::hull({qv({0, 0}), qv({1, 0})});
  auto seg_y = Polytope::hull({qv({0, 0}), qv({0, 1})});
  auto unit = minkowski_sum(seg_x, seg_y);
  CHECK(unit.same_vertex_set(
      Polytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})})));

  CHECK_THROWS_WITH(minkowski_sum(sq, Polytope::hull({qv({0, 0, 0})})),
                    "rank mismatch");
}

TEST_CASE("minkowski sum support function is additive") {
  auto p = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});
  auto q = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  auto s = minkowski_sum(p, q);
  CHECK(s.vertices().size() <= p.vertices().size() * q.vertices().size());
  std::mt19937 rng(7u);
  for (int it = 0; it < 100; ++it) {
    VecQ n = {Rat(static_cast<long>(rng() % 41) - 20),
              Rat(static_cast<long>(rng() % 41) - 20)};
    auto support = [&](const Polytope& poly) {
      Rat best = dot(n, poly.vertices()[0]);
      for (const auto& v : poly.vertices()) best = std::max(best, dot(n, v));
      return best;
    };
    CHECK(support(s) == support(p) + support(q));
  }
}

TEST_CASE("face minkowski test against brute force") {
  auto sq = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  auto tri = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});

  // Whole polytopes: trivially a face of the sum.
  CHECK(face_minkowski_test(sq, tri, sq.top_face(), tri.top_face()));

  auto vertex_face = [](const Polytope& p, const VecQ& v) {
    for (const auto& f : p.faces())
      if (f.dim == 0 && p.vertices()[f.verts[0]] == v) return f;
    throw Error("vertex not found");
  };
  // Same corner of two squares is a vertex of the sum.
  CHECK(face_minkowski_test(sq, sq, vertex_face(sq, qv({1, 1})),
                            vertex_face(sq, qv({1, 1}))));
  // Opposite corners are not.
  CHECK(!face_minkowski_test(sq, sq, vertex_face(sq, qv({1, 1})),
                             vertex_face(sq, qv({-1, -1}))));

  // Brute-force oracle: F1 + F2 is a face of the sum iff its vertex set
  // appears among the faces of the sum polytope.
  auto sum = minkowski_sum(sq, tri);
  int agree = 0;
  for (const auto& f1 : sq.faces()) {
    for (const auto& f2 : tri.faces()) {
      std::vector<VecQ> pts;
      for (int i : f1.verts)
        for (int j : f2.verts)
          pts.push_back(add(sq.vertices()[i], tri.vertices()[j]));
      Polytope fsum = Polytope::hull(pts);
      bool brute = false;
      for (const auto& g : sum.faces()) {
        Polytope gp = sum.face_polytope(g);
        if (gp.same_vertex_set(fsum)) { brute = true; break; }
      }
      bool fast = face_minkowski_test(sq, tri, f1, f2);
      CHECK(fast == brute);
      agree += fast == brute;
    }
  }
  CHECK(agree == static_cast<int>(sq.faces().size() * tri.faces().size()));

  // Diagonal vertex pair is not a face of the square.
  CHECK_THROWS_WITH(
      face_minkowski_test(sq, tri, Face{{0, 3}, 1}, tri.top_face()),
      "face not of polytope");
}

TEST_CASE("lattice point enumeration") {
  auto sq = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  CHECK(lattice_points(sq).size() == 9);

  auto tri = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});
  auto pts = lattice_points(tri);
  CHECK(pts.size() == 10);
  // Brute force over the bounding box.
  std::size_t brute = 0;
  for (int x = -1; x <= 2; ++x)
    for (int y = -1; y <= 2; ++y)
      if (tri.contains(qv({x, y}))) ++brute;
  CHECK(pts.size() == brute);
  // Deterministic lexicographic order.
  for (std::size_t i = 1; i < pts.size(); ++i)
    CHECK(pts[i - 1] < pts[i]);

  auto empty_p = Polytope::intersect(
      2, {HalfSpace{zv({1, 0}), Rat(-2)}, HalfSpace{zv({-1, 0}), Rat(-2)},
          HalfSpace{zv({0, 1}), Rat(0)}, HalfSpace{zv({0, -1}), Rat(0)}});
  CHECK(empty_p.is_empty());
  CHECK(lattice_points(empty_p).empty());
}

TEST_CASE("lattice points of a lower-dimensional polytope") {
  auto seg = Polytope::hull({qv({0, 0, 0}), qv({2, 2, 4})});
  auto pts = lattice_points(seg);
  REQUIRE(pts.size() == 3);
  CHECK(pts[1] == zv({1, 1, 2}));
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(Polytope::hull({qv({0, 0}), qv({1, 0})})) == 1);
  CHECK(normalized_volume(Polytope::hull({qv({0, 0}), qv({2, 2})})) == 2);
  CHECK(normalized_volume(Polytope::hull({qv({1, 0}), qv({0, 1})})) == 1);
  auto sq = Polytope::hull({qv({1, 1}), qv({1, -1}), qv({-1, 1}), qv({-1, -1})});
  CHECK(normalized_volume(sq) == 4);
  auto tri = Polytope::hull({qv({0, 0}), qv({1, 0}), qv({0, 1})});
  CHECK(normalized_volume(tri) == Rat(1, 2));
  CHECK_THROWS_WITH(
      normalized_volume(Polytope::hull({qv({0, 0}), {Rat(1, 2), Rat(0)}})),
      "non-lattice vertices");
}

TEST_CASE("normalized volume scales like k^dim") {
  auto tri = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});
  Rat v1 = normalized_volume(tri);
  for (int k = 1; k <= 3; ++k) {
    Rat vk = normalized_volume(dilate(tri, Rat(k)));
    Rat expect = v1;
    for (int i = 0; i < tri.dim(); ++i) expect *= k;
    CHECK(vk == expect);
  }
}

TEST_CASE("ehrhart self-consistency for dilation counts") {
  auto tri = Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})});
  // Fit exact polynomial on k = 1..dim+1 and check on k = 1..4.
  std::vector<Rat> counts;
  for (int k = 1; k <= 4; ++k)
    counts.push_back(Rat(static_cast<long>(lattice_points(dilate(tri, Rat(k))).size())));
  // Lagrange interpolation through k = 1..3.
  auto eval = [&](const Rat& x) {
    Rat total = 0;
    for (int i = 1; i <= 3; ++i) {
      Rat term = counts[i - 1];
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        term *= (x - Rat(j)) / Rat(i - j);
      }
      total += term;
    }
    return total;
  };
  for (int k = 1; k <= 4; ++k) CHECK(eval(Rat(k)) == counts[k - 1]);
  // Leading coefficient equals the normalized volume (Ehrhart).
  Rat lead = (counts[2] - 2 * counts[1] + counts[0]) / 2;
  CHECK(lead == normalized_volume(tri));
}

TEST_CASE("face lattice is graded and closed") {
  auto cube = Polytope::hull({qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}),
                              qv({0, 0, 1}), qv({1, 1, 0}), qv({1, 0, 1}),
                              qv({0, 1, 1}), qv({1, 1, 1})});
  CHECK(cube.faces_of_dim(0).size() == 8);
  CHECK(cube.faces_of_dim(1).size() == 12);
  CHECK(cube.faces_of_dim(2).size() == 6);
  CHECK(cube.faces_of_dim(3).size() == 1);
  // Vertices are exactly the 0-faces.
  for (int idx : cube.faces_of_dim(0))
    CHECK(cube.faces()[idx].verts.size() == 1);
}

TEST_CASE("intersect builds from halfspaces") {
  // Triangle from three halfplanes.
  std::vector<HalfSpace> hs = {HalfSpace{zv({1, 0}), Rat(1)},
                               HalfSpace{zv({0, 1}), Rat(1)},
                               HalfSpace{zv({-1, -1}), Rat(1)}};
  auto p = Polytope::intersect(2, hs);
  CHECK(p.same_vertex_set(
      Polytope::hull({qv({2, -1}), qv({-1, 2}), qv({-1, -1})})));
}
