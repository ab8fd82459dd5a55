#include "tropcy/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropcy {

Int dot_z(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) throw Error("dot_z: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecQ to_q(const VecZ& v) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

VecQ add(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecQ sub(const VecQ& a, const VecQ& b) {
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VecQ scale(const VecQ& a, const Rat& c) {
  VecQ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

VecZ add_z(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

VecZ sub_z(const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VecZ neg_z(const VecZ& a) {
  VecZ out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const VecQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_zero_z(const VecZ& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

VecZ primitive_z(const VecZ& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return v;
  VecZ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

VecZ primitive(const VecQ& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  VecZ scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = to_int(v[i] * Rat(l));
  return primitive_z(scaled);
}

namespace {

// Row-reduces a rational matrix in place; returns pivot column per reduced
// row. Used by rank / solvers.
std::vector<int> row_reduce(MatQ& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
    int p = -1;
    for (int i = row; i < static_cast<int>(m.size()); ++i)
      if (m[i][col] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rat inv = Rat(1) / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_of(const MatQ& rows) {
  MatQ m = rows;
  return static_cast<int>(row_reduce(m).size());
}

int rank_of_z(const MatZ& rows) {
  MatQ m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.push_back(to_q(r));
  return rank_of(m);
}

Int det_z(const MatZ& square) {
  // Bareiss fraction-free elimination.
  const int n = static_cast<int>(square.size());
  if (n == 0) return 1;
  MatZ m = square;
  Int prev = 1;
  Int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<VecQ> solve_square(const MatQ& m, const VecQ& rhs) {
  return solve_general(m, rhs);
}

std::optional<VecQ> solve_general(const MatQ& rows, const VecQ& rhs) {
  const int nrows = static_cast<int>(rows.size());
  const int ncols = nrows == 0 ? 0 : static_cast<int>(rows[0].size());
  MatQ aug(nrows);
  for (int i = 0; i < nrows; ++i) {
    aug[i] = rows[i];
    aug[i].push_back(rhs[i]);
  }
  std::vector<int> pivots = row_reduce(aug);
  // Inconsistent iff a pivot landed in the rhs column.
  for (int c : pivots)
    if (c == ncols) return std::nullopt;
  VecQ x(ncols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

std::vector<VecZ> nullspace(const MatQ& rows, int dim) {
  MatQ m = rows;
  std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VecZ> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(dim, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::vector<VecZ> integer_kernel(const MatZ& rows, int dim) {
  const int m = static_cast<int>(rows.size());
  // Work on [rows^T | I_dim]; unimodular row operations preserve the lattice
  // generated by the rows, so zero rows of the left block expose a kernel
  // lattice basis in the right block.
  MatZ w(dim, VecZ(m + dim, Int(0)));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < m; ++j) w[i][j] = rows[j][i];
    w[i][m + i] = 1;
  }
  int row = 0;
  for (int col = 0; col < m && row < dim; ++col) {
    while (true) {
      int best = -1;
      for (int i = row; i < dim; ++i) {
        if (w[i][col] == 0) continue;
        if (best < 0 || boost::multiprecision::abs(w[i][col]) <
                            boost::multiprecision::abs(w[best][col]))
          best = i;
      }
      if (best < 0) break;
      std::swap(w[row], w[best]);
      bool clean = true;
      for (int i = row + 1; i < dim; ++i) {
        if (w[i][col] == 0) continue;
        Int q = w[i][col] / w[row][col];
        if (q != 0)
          for (int j = 0; j < m + dim; ++j) w[i][j] -= q * w[row][j];
        if (w[i][col] != 0) clean = false;
      }
      if (clean) { ++row; break; }
    }
  }
  std::vector<VecZ> basis;
  for (int i = row; i < dim; ++i) {
    VecZ v(w[i].begin() + m, w[i].end());
    basis.push_back(v);
  }
  return basis;
}

std::vector<VecZ> saturated_lattice_basis(const MatZ& rows) {
  if (rows.empty()) return {};
  const int dim = static_cast<int>(rows[0].size());
  std::vector<VecZ> ortho = integer_kernel(rows, dim);
  return integer_kernel(ortho, dim);
}

std::optional<VecQ> affine_coordinates(const std::vector<VecZ>& basis,
                                       const VecQ& origin, const VecQ& p) {
  const int dim = static_cast<int>(origin.size());
  const int k = static_cast<int>(basis.size());
  MatQ sys(dim, VecQ(k));
  VecQ rhs(dim);
  for (int c = 0; c < dim; ++c) {
    for (int i = 0; i < k; ++i) sys[c][i] = Rat(basis[i][c]);
    rhs[c] = p[c] - origin[c];
  }
  return solve_general(sys, rhs);
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

namespace {

struct DDRay {
  VecZ dir;
  std::vector<char> active;  // activity per processed constraint index
};

bool lex_less(const VecZ& a, const VecZ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

std::vector<VecZ> dd_extreme_rays(const MatZ& raw, int dim) {
  if (dim == 0) return {};
  MatZ cons;
  for (const auto& r : raw) {
    VecZ p = primitive_z(r);
    if (is_zero_z(p)) continue;
    if (std::find(cons.begin(), cons.end(), p) == cons.end()) cons.push_back(p);
  }
  const int m = static_cast<int>(cons.size());
  if (rank_of_z(cons) < dim) throw Error("cone not pointed");

  // Greedy independent subset for the initial simplicial cone.
  std::vector<int> init;
  MatZ picked;
  for (int i = 0; i < m && static_cast<int>(init.size()) < dim; ++i) {
    picked.push_back(cons[i]);
    if (rank_of_z(picked) == static_cast<int>(picked.size()))
      init.push_back(i);
    else
      picked.pop_back();
  }

  std::vector<int> order = init;
  for (int i = 0; i < m; ++i)
    if (std::find(init.begin(), init.end(), i) == init.end()) order.push_back(i);

  MatQ base(dim, VecQ(dim));
  for (int i = 0; i < dim; ++i) base[i] = to_q(cons[init[i]]);

  std::vector<DDRay> rays;
  for (int j = 0; j < dim; ++j) {
    VecQ e(dim, Rat(0));
    e[j] = 1;
    auto sol = solve_general(base, e);
    if (!sol) throw Error("internal: singular initial basis");
    DDRay r;
    r.dir = primitive(*sol);
    rays.push_back(std::move(r));
  }

  auto recompute_active = [&](DDRay& r, int upto) {
    r.active.assign(upto, 0);
    for (int t = 0; t < upto; ++t)
      r.active[t] = dot_z(cons[order[t]], r.dir) == 0 ? 1 : 0;
  };
  for (auto& r : rays) recompute_active(r, dim);

  for (int step = dim; step < m; ++step) {
    const VecZ& c = cons[order[step]];
    std::vector<Int> val(rays.size());
    bool has_pos = false, has_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot_z(c, rays[i].dir);
      if (val[i] > 0) has_pos = true;
      if (val[i] < 0) has_neg = true;
    }
    if (!has_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        rays[i].active.push_back(val[i] == 0 ? 1 : 0);
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] >= 0) {
        DDRay keep = rays[i];
        keep.active.push_back(val[i] == 0 ? 1 : 0);
        next.push_back(std::move(keep));
      }
    }
    if (has_pos) {
      for (std::size_t p = 0; p < rays.size(); ++p) {
        if (val[p] <= 0) continue;
        for (std::size_t q = 0; q < rays.size(); ++q) {
          if (val[q] >= 0) continue;
          // Adjacency: common active constraints must span a (dim-2)-space.
          MatZ common;
          for (int t = 0; t < step; ++t)
            if (rays[p].active[t] && rays[q].active[t])
              common.push_back(cons[order[t]]);
          if (rank_of_z(common) != dim - 2) continue;
          VecZ dir(dim);
          for (int k = 0; k < dim; ++k)
            dir[k] = val[p] * rays[q].dir[k] - val[q] * rays[p].dir[k];
          dir = primitive_z(dir);
          bool dup = false;
          for (const auto& r : next)
            if (r.dir == dir) { dup = true; break; }
          if (dup) continue;
          DDRay nr;
          nr.dir = std::move(dir);
          recompute_active(nr, step + 1);
          next.push_back(std::move(nr));
        }
      }
    }
    rays = std::move(next);
    if (rays.empty()) return {};
  }

  std::vector<VecZ> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

MatZ scale_rows_to_int(const MatQ& rows) {
  MatZ out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(primitive(r));
  return out;
}

}  // namespace

VertexEnum enumerate_vertices(int dim, const MatQ& ineq_normals,
                              const VecQ& ineq_offsets, const MatQ& eq_normals,
                              const VecQ& eq_offsets) {
  VertexEnum result;
  VecQ origin(dim, Rat(0));
  std::vector<VecZ> basis;  // columns of the parameterization x = x0 + B^T y
  VecQ x0 = origin;

  if (!eq_normals.empty()) {
    VecQ rhs(eq_normals.size());
    for (std::size_t i = 0; i < eq_normals.size(); ++i) rhs[i] = -eq_offsets[i];
    auto sol = solve_general(eq_normals, rhs);
    if (!sol) return result;  // inconsistent equations: empty
    x0 = *sol;
    basis = nullspace(eq_normals, dim);
  } else {
    basis.resize(dim);
    for (int i = 0; i < dim; ++i) {
      basis[i] = VecZ(dim, Int(0));
      basis[i][i] = 1;
    }
  }

  const int ny = static_cast<int>(basis.size());
  auto lift = [&](const VecQ& y) {
    VecQ x = x0;
    for (int j = 0; j < ny; ++j)
      for (int k = 0; k < dim; ++k) x[k] += y[j] * Rat(basis[j][k]);
    return x;
  };

  // Reduced inequalities in y coordinates.
  MatQ red;
  VecQ red_off;
  for (std::size_t i = 0; i < ineq_normals.size(); ++i) {
    VecQ row(ny);
    for (int j = 0; j < ny; ++j) row[j] = dot(ineq_normals[i], to_q(basis[j]));
    red.push_back(std::move(row));
    red_off.push_back(ineq_offsets[i] + dot(ineq_normals[i], x0));
  }

  if (ny == 0) {
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red_off[i] < 0) return result;
    result.feasible = true;
    result.vertices.push_back(x0);
    return result;
  }

  // Homogenize: rows (a', b') acting on (y, t).
  MatQ hom;
  for (std::size_t i = 0; i < red.size(); ++i) {
    VecQ row = red[i];
    row.push_back(red_off[i]);
    hom.push_back(std::move(row));
  }
  {
    VecQ trow(ny + 1, Rat(0));
    trow[ny] = 1;
    hom.push_back(std::move(trow));
  }

  std::vector<VecZ> hrays;
  try {
    hrays = dd_extreme_rays(scale_rows_to_int(hom), ny + 1);
  } catch (const Error&) {
    throw Error("feasible set contains a line");
  }

  for (const auto& r : hrays) {
    Int t = r[ny];
    VecQ y(ny);
    if (t > 0) {
      for (int j = 0; j < ny; ++j) y[j] = Rat(r[j]) / Rat(t);
      result.vertices.push_back(lift(y));
    } else {
      for (int j = 0; j < ny; ++j) y[j] = Rat(r[j]);
      VecQ d = lift(y);
      for (int k = 0; k < dim; ++k) d[k] -= x0[k];
      if (!is_zero(d)) result.recession_rays.push_back(d);
    }
  }
  result.feasible = !result.vertices.empty();
  if (!result.feasible) result.recession_rays.clear();

  auto qlex = [](const VecQ& a, const VecQ& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  };
  std::sort(result.vertices.begin(), result.vertices.end(), qlex);
  result.vertices.erase(
      std::unique(result.vertices.begin(), result.vertices.end()),
      result.vertices.end());
  return result;
}

bool strictly_feasible(int dim, const MatQ& strict_rows, const MatQ& eq_rows) {
  std::vector<VecZ> basis;
  if (!eq_rows.empty())
    basis = nullspace(eq_rows, dim);
  else {
    basis.resize(dim);
    for (int i = 0; i < dim; ++i) {
      basis[i] = VecZ(dim, Int(0));
      basis[i][i] = 1;
    }
  }
  if (strict_rows.empty()) return true;
  const int ny = static_cast<int>(basis.size());
  if (ny == 0) return false;  // x must be 0, strict rows cannot hold

  MatQ reduced;
  for (const auto& s : strict_rows) {
    VecQ row(ny);
    for (int j = 0; j < ny; ++j) row[j] = dot(s, to_q(basis[j]));
    reduced.push_back(std::move(row));
  }
  // Quotient out directions along which every strict row vanishes.
  std::vector<VecZ> lin = nullspace(reduced, ny);
  MatQ final_rows;
  int nw = ny;
  if (!lin.empty()) {
    // Parameterize the complement by the row space of `reduced`.
    MatQ indep;
    for (const auto& r : reduced) {
      indep.push_back(r);
      if (rank_of(indep) < static_cast<int>(indep.size())) indep.pop_back();
    }
    nw = static_cast<int>(indep.size());
    if (nw == 0) return false;
    for (const auto& r : reduced) {
      VecQ row(nw);
      for (int j = 0; j < nw; ++j) row[j] = dot(r, indep[j]);
      final_rows.push_back(std::move(row));
    }
  } else {
    final_rows = reduced;
  }

  MatQ hom;
  for (const auto& r : final_rows) {
    VecQ row = r;
    row.push_back(Rat(-1));
    hom.push_back(std::move(row));
  }
  {
    VecQ trow(nw + 1, Rat(0));
    trow[nw] = 1;
    hom.push_back(std::move(trow));
  }
  std::vector<VecZ> rays = dd_extreme_rays(scale_rows_to_int(hom), nw + 1);
  for (const auto& r : rays)
    if (r[nw] > 0) return true;
  return false;
}

}  // namespace tropcy
