#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "latgerm/numeric.hpp"

namespace latgerm {

// Integer vector with coprime entries (in particular nonzero). The
// constructor validates, so holding a PrimVec is holding the invariant.
class PrimVec {
 public:
  explicit PrimVec(IntVec coords);

  const IntVec& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const Int& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const PrimVec& a, const PrimVec& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const PrimVec& a, const PrimVec& b) { return a.coords_ != b.coords_; }

 private:
  IntVec coords_;
};

// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Int(0)) {}

  Int& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVec>& columns);
  static IntMatrix from_rows(const std::vector<IntVec>& rows_in);

  IntVec column(std::size_t j) const;
  IntVec row(std::size_t i) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntVec matvec(const IntMatrix& m, const IntVec& v);
RatVec matvec(const IntMatrix& m, const RatVec& v);
IntMatrix transpose(const IntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMatrix& m);

// det(M) in {+1, -1}. Throws NotSquare.
bool is_unimodular(const IntMatrix& m);

// Inverse of a matrix in GL(n, Z); entries of the inverse are integers.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Unique primitive vector and positive scale with v = scale * prim.
// Throws ZeroVector.
std::pair<PrimVec, Rat> primitivize(const RatVec& v);

// gcd of all k x k minors of the matrix (v1 | ... | vk), k <= n. Zero iff
// the vectors are linearly dependent. Throws DimensionMismatch.
Int integral_index(const std::vector<IntVec>& vs);

// Diagonal of the Smith normal form: d1 | d2 | ... with min(rows, cols)
// entries, nonnegative, trailing zeros on rank deficiency. The product of
// the entries of the column matrix of a k <= n vector family equals the
// integral index of that family, which is how the two are tested against
// each other.
std::vector<Int> elementary_divisors(IntMatrix m);

struct HnfResult {
  IntMatrix h;  // the normal form
  IntMatrix u;  // unimodular with h = u * m
};

// Canonical representative of the left orbit {U*M : U unimodular}: row
// echelon with the pivot of each successive column on the next row, pivots
// positive, entries above a pivot reduced into [0, pivot), entries left of
// a pivot in its row zero. Bit-stable across runs.
HnfResult hnf_with_transform(const IntMatrix& m);
IntMatrix hnf_canonical(const IntMatrix& m);

}  // namespace latgerm
