#include "latgerm/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace latgerm {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Floor division for arbitrary-precision integers (operator/ truncates).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

PrimVec::PrimVec(IntVec coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail("ZeroVector", "empty vector is not primitive");
  if (vec_gcd(coords_) != 1) fail("NotPrimitive", "entries are not coprime");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns) {
  if (columns.empty()) fail("EmptyMatrix", "no columns");
  std::size_t n = columns.front().size();
  for (const auto& c : columns)
    if (c.size() != n) fail("DimensionMismatch", "columns of unequal dimension");
  IntMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = columns[j][i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows_in) {
  if (rows_in.empty()) fail("EmptyMatrix", "no rows");
  std::size_t n = rows_in.front().size();
  for (const auto& r : rows_in)
    if (r.size() != n) fail("DimensionMismatch", "rows of unequal dimension");
  IntMatrix m(rows_in.size(), n);
  for (std::size_t i = 0; i < rows_in.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows_in[i][j];
  return m;
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

IntVec IntMatrix::row(std::size_t i) const {
  IntVec r(cols);
  for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail("DimensionMismatch", "matrix product shape mismatch");
  IntMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec matvec(const IntMatrix& m, const IntVec& v) {
  if (m.cols != v.size()) fail("DimensionMismatch", "matrix-vector shape mismatch");
  IntVec out(m.rows, Int(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

RatVec matvec(const IntMatrix& m, const RatVec& v) {
  if (m.cols != v.size()) fail("DimensionMismatch", "matrix-vector shape mismatch");
  RatVec out(m.rows, Rat(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[i] += Rat(m.at(i, j)) * v[j];
  return out;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) fail("NotSquare", "determinant of a non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) fail("NotSquare", "unimodularity of a non-square matrix");
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) fail("NotUnimodular", "matrix is not in GL(n, Z)");
  std::size_t n = m.rows;
  // Rational Gauss-Jordan; the result is integral because det is a unit.
  std::vector<RatVec> a(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (a[p][col] == 0) ++p;
    std::swap(a[p], a[col]);
    Rat inv = a[col][col];
    for (auto& x : a[col]) x /= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (den(a[i][j + n]) != 1) fail("NotUnimodular", "inverse is not integral");
      out.at(i, j) = num(a[i][j + n]);
    }
  return out;
}

std::pair<PrimVec, Rat> primitivize(const RatVec& v) {
  bool all_zero = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  if (v.empty() || all_zero) fail("ZeroVector", "cannot primitivize the zero vector");
  Int common = 1;
  for (const Rat& x : v) common = lcm(common, den(x));
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = num(v[i]) * (common / den(v[i]));
  Int g = vec_gcd(scaled);
  for (Int& x : scaled) x /= g;
  return {PrimVec(std::move(scaled)), make_rat(g, common)};
}

namespace {

void k_subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& idx,
               std::size_t start, const std::vector<IntVec>& vs, Int& g) {
  if (idx.size() == k) {
    IntMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = vs[c][idx[r]];
    g = gcd(g, det(sub));
    return;
  }
  for (std::size_t i = start; i + (k - idx.size()) <= n; ++i) {
    idx.push_back(i);
    k_subsets(n, k, idx, i + 1, vs, g);
    idx.pop_back();
  }
}

}  // namespace

Int integral_index(const std::vector<IntVec>& vs) {
  if (vs.empty()) fail("DimensionMismatch", "no vectors given");
  std::size_t n = vs.front().size();
  for (const auto& v : vs)
    if (v.size() != n) fail("DimensionMismatch", "vectors of unequal dimension");
  std::size_t k = vs.size();
  if (k > n) fail("DimensionMismatch", "more vectors than coordinates");
  Int g = 0;
  std::vector<std::size_t> idx;
  k_subsets(n, k, idx, 0, vs, g);
  return abs(g);
}

std::vector<Int> elementary_divisors(IntMatrix m) {
  if (m.rows == 0 || m.cols == 0) fail("EmptyMatrix", "empty matrix");
  std::size_t limit = std::min(m.rows, m.cols);
  std::vector<Int> divisors;

  std::size_t r0 = 0, c0 = 0;
  while (r0 < m.rows && c0 < m.cols) {
    // Find a nonzero pivot in the remaining block.
    std::size_t pi = r0, pj = c0;
    bool found = false;
    for (std::size_t i = r0; i < m.rows && !found; ++i)
      for (std::size_t j = c0; j < m.cols && !found; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r0, j), m.at(pi, j));
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, c0), m.at(i, pj));

    // Alternate row/column elimination until the pivot divides its row and
    // column and everything else in them is zero.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = r0 + 1; i < m.rows; ++i) {
        while (m.at(i, c0) != 0) {
          Int q = floor_div(m.at(i, c0), m.at(r0, c0));
          for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= q * m.at(r0, j);
          if (m.at(i, c0) != 0) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r0, j), m.at(i, j));
            dirty = true;
          }
        }
      }
      for (std::size_t j = c0 + 1; j < m.cols; ++j) {
        while (m.at(r0, j) != 0) {
          Int q = floor_div(m.at(r0, j), m.at(r0, c0));
          for (std::size_t i = 0; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, c0);
          if (m.at(r0, j) != 0) {
            for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, c0), m.at(i, j));
            dirty = true;
          }
        }
      }
    }
    ++r0;
    ++c0;
  }

  for (std::size_t i = 0; i < limit; ++i) divisors.push_back(abs(m.at(i, i)));

  // Enforce the divisibility chain d1 | d2 | ... by gcd/lcm absorption.
  for (std::size_t i = 0; i < divisors.size(); ++i)
    for (std::size_t j = i + 1; j < divisors.size(); ++j) {
      if (divisors[j] == 0) continue;
      Int a = divisors[i], b = divisors[j];
      if (a == 0) {
        divisors[i] = b;
        divisors[j] = 0;
        continue;
      }
      divisors[i] = gcd(a, b);
      divisors[j] = a / divisors[i] * b;
    }
  std::stable_partition(divisors.begin(), divisors.end(), [](const Int& d) { return d != 0; });
  return divisors;
}

HnfResult hnf_with_transform(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) fail("EmptyMatrix", "empty matrix");
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows);

  auto row_combine = [&](std::size_t a, std::size_t b, const Int& p, const Int& q,
                         const Int& r, const Int& s) {
    // (row_a, row_b) <- (p*row_a + q*row_b, r*row_a + s*row_b), ps - qr = +-1
    for (std::size_t j = 0; j < h.cols; ++j) {
      Int ha = h.at(a, j), hb = h.at(b, j);
      h.at(a, j) = p * ha + q * hb;
      h.at(b, j) = r * ha + s * hb;
    }
    for (std::size_t j = 0; j < u.cols; ++j) {
      Int ua = u.at(a, j), ub = u.at(b, j);
      u.at(a, j) = p * ua + q * ub;
      u.at(b, j) = r * ua + s * ub;
    }
  };
  auto row_negate = [&](std::size_t a) {
    for (std::size_t j = 0; j < h.cols; ++j) h.at(a, j) = -h.at(a, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < h.cols; ++j) h.at(dst, j) += c * h.at(src, j);
    for (std::size_t j = 0; j < u.cols; ++j) u.at(dst, j) += c * u.at(src, j);
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols && pivot_row < h.rows; ++col) {
    bool any = false;
    for (std::size_t i = pivot_row; i < h.rows; ++i)
      if (h.at(i, col) != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    for (std::size_t i = pivot_row + 1; i < h.rows; ++i) {
      if (h.at(i, col) == 0) continue;
      Int a = h.at(pivot_row, col), b = h.at(i, col);
      if (a == 0) {
        row_combine(pivot_row, i, 0, 1, -1, 0);
        continue;
      }
      Int g, p, q;
      g = boost::multiprecision::gcd(a, b);
      // Extended gcd: p*a + q*b = g.
      {
        Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
          Int quot = old_r / r;
          Int tmp = old_r - quot * r;
          old_r = r;
          r = tmp;
          tmp = old_s - quot * s;
          old_s = s;
          s = tmp;
          tmp = old_t - quot * t;
          old_t = t;
          t = tmp;
        }
        if (old_r < 0) {
          old_r = -old_r;
          old_s = -old_s;
          old_t = -old_t;
        }
        g = old_r;
        p = old_s;
        q = old_t;
      }
      row_combine(pivot_row, i, p, q, -(b / g), a / g);
    }
    if (h.at(pivot_row, col) < 0) row_negate(pivot_row);
    const Int& pivot = h.at(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h.at(i, col), pivot);
      if (q != 0) row_axpy(i, pivot_row, -q);
    }
    ++pivot_row;
  }
  return {h, u};
}

IntMatrix hnf_canonical(const IntMatrix& m) { return hnf_with_transform(m).h; }

}  // namespace latgerm
