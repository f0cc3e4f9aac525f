#include "latgerm/germ.hpp"

#include <algorithm>
#include <numeric>

namespace latgerm {

namespace {

IntVec unit_vector(std::size_t dim, std::size_t i) {
  IntVec e(dim, Int(0));
  e[i] = 1;
  return e;
}

std::vector<Int> sorted_indices_over_subsets(const std::vector<IntVec>& vs, std::size_t k) {
  std::vector<Int> out;
  std::size_t n = vs.size();
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == k) {
      std::vector<IntVec> sub;
      sub.reserve(k);
      for (std::size_t i : idx) sub.push_back(vs[i]);
      out.push_back(integral_index(sub));
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool matrix_lex_less(const IntMatrix& a, const IntMatrix& b) {
  return std::lexicographical_compare(a.data.begin(), a.data.end(), b.data.begin(), b.data.end());
}

std::string multiset_to_string(const std::vector<Int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += xs[i].str();
  }
  return s + "}";
}

std::string matrix_to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
  }
  return s + "]";
}

}  // namespace

Germ::Germ(Rat constant, std::vector<IntVec> vectors)
    : constant_(std::move(constant)), vectors_(std::move(vectors)) {
  if (vectors_.empty()) fail("EmptyGerm", "a germ needs at least one vector");
  dim_ = vectors_.front().size();
  if (dim_ == 0) fail("DimensionMismatch", "germ vectors must have positive dimension");
  for (const auto& v : vectors_) {
    if (v.size() != dim_) fail("DimensionMismatch", "germ vectors of unequal dimension");
    if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; }))
      fail("ZeroVector", "germ vectors must be nonzero");
  }
  std::sort(vectors_.begin(), vectors_.end());
  if (std::adjacent_find(vectors_.begin(), vectors_.end()) != vectors_.end())
    fail("DuplicateVector", "germ vectors must be distinct");
}

Germ germ_product_torus(const ProductTorusSpec& t) {
  Rat m = t.min_area();
  std::vector<IntVec> vs;
  for (std::size_t i = 0; i < t.areas().size(); ++i)
    if (t.areas()[i] == m) vs.push_back(unit_vector(t.areas().size(), i));
  return Germ(m, std::move(vs));
}

Germ germ_toric_fibre(const RationalPolytope& p, const RatVec& x) {
  for (std::size_t i = 0; i < p.facets().size(); ++i)
    if (p.eval(i, x) <= 0) fail("OnBoundary", "point is not strictly interior");
  BoundaryDistance d = dia_boundary(x, p);
  std::vector<IntVec> vs;
  for (std::size_t i : d.argmin) vs.push_back(p.facets()[i].normal.coords());
  return Germ(d.value, std::move(vs));
}

Germ germ_upsilon(const UpsilonParams& p) {
  const Int& k = p.k();
  Rat d = p.a1() - Rat(k) * p.a2();
  IntVec v1{Int(1), k, -k};
  IntVec v2{Int(1), Int(0), -k};
  IntVec v3{Int(0), Int(0), Int(1)};
  if (d < p.a2()) return Germ(d, {v1, v2});
  if (d == p.a2()) return Germ(d, {v1, v2, v3});
  return Germ(p.a2(), {v3});
}

Germ germ_theta(const MarkovTriangle& t, const Rat& area, ThetaVectorMode mode) {
  if (area <= 0) fail("InvalidParams", "area must be positive");
  if (mode == ThetaVectorMode::cone) {
    RationalPolytope cone = cone_over(t.diagram.polytope());
    return germ_toric_fibre(cone, RatVec{Rat(0), Rat(0), area});
  }
  std::vector<IntVec> vs;
  for (const auto& f : t.diagram.polytope().facets()) {
    IntVec v = f.normal.coords();
    v.push_back(1);
    vs.push_back(std::move(v));
  }
  return Germ(area / 3, std::move(vs));
}

Germ germ_theta_product(const MarkovTriangle& t, const Rat& area, const std::vector<Rat>& tail) {
  if (area <= 0) fail("InvalidParams", "area must be positive");
  for (const Rat& a : tail)
    if (a <= 0) fail("InvalidParams", "tail areas must be positive");
  if (tail.empty()) fail("InvalidParams", "tail must be nonempty");
  Rat third = area / 3;
  Rat tail_min = *std::min_element(tail.begin(), tail.end());
  if (third > tail_min) fail("TailTooSmall", "need area/3 <= min(tail)");

  std::size_t dim = 3 + tail.size();
  std::vector<IntVec> vs;
  for (const auto& f : t.diagram.polytope().facets()) {
    IntVec v = f.normal.coords();
    v.push_back(1);
    v.resize(dim, Int(0));
    vs.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < tail.size(); ++i)
    if (tail[i] == third) vs.push_back(unit_vector(dim, 3 + i));
  return Germ(third, std::move(vs));
}

PiecewiseMin upsilon_versal_pieces(const UpsilonParams& p) {
  Rat k(p.k());
  Rat head = p.a1() - k * p.a2();
  PiecewiseMin pw;
  pw.dim = 3;

  MinPiece plus;
  plus.region = Region::coord_positive;
  plus.coord = 1;
  plus.functionals = {
      {head, RatVec{Rat(1), Rat(0), -k}},
      {p.a2(), RatVec{Rat(0), Rat(1), Rat(1)}},
      {p.a2(), RatVec{Rat(0), Rat(0), Rat(1)}},
  };

  MinPiece minus;
  minus.region = Region::coord_negative;
  minus.coord = 1;
  minus.functionals = {
      {head, RatVec{Rat(1), k, -k}},
      {p.a2(), RatVec{Rat(0), Rat(0), Rat(1)}},
      {p.a2(), RatVec{Rat(0), Rat(-1), Rat(1)}},
  };

  pw.pieces = {std::move(plus), std::move(minus)};
  return pw;
}

namespace {

// g is pointwise <= f on the closed region of the piece iff their linear
// difference is supported on the signed coordinate with the right sign.
bool dominates(const MinPiece& piece, const AffineFunctional& g, const AffineFunctional& f) {
  RatVec d(f.linear.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = g.linear[i] - f.linear[i];
  switch (piece.region) {
    case Region::everywhere:
      return std::all_of(d.begin(), d.end(), [](const Rat& x) { return x == 0; });
    case Region::coord_positive:
    case Region::coord_negative:
      for (std::size_t i = 0; i < d.size(); ++i)
        if (i != piece.coord && d[i] != 0) return false;
      return piece.region == Region::coord_positive ? d[piece.coord] <= 0
                                                    : d[piece.coord] >= 0;
  }
  return false;
}

}  // namespace

Germ extract_germ(const PiecewiseMin& pw) {
  if (pw.pieces.empty()) fail("EmptyGerm", "no pieces");
  bool first = true;
  Rat minimum = 0;
  for (const auto& piece : pw.pieces)
    for (const auto& f : piece.functionals) {
      if (f.constant <= 0) fail("NonPositiveConstant", "functional constants must be positive");
      if (f.linear.size() != pw.dim) fail("DimensionMismatch", "functional dimension mismatch");
      if (first || f.constant < minimum) {
        minimum = f.constant;
        first = false;
      }
    }

  std::vector<IntVec> survivors;
  for (const auto& piece : pw.pieces) {
    std::vector<const AffineFunctional*> collected;
    for (const auto& f : piece.functionals)
      if (f.constant == minimum) collected.push_back(&f);
    for (std::size_t i = 0; i < collected.size(); ++i) {
      bool dropped = false;
      for (std::size_t j = 0; j < collected.size() && !dropped; ++j) {
        if (i == j) continue;
        if (!dominates(piece, *collected[j], *collected[i])) continue;
        // Mutual domination means equal functionals; keep the first.
        if (dominates(piece, *collected[i], *collected[j]) && i < j) continue;
        dropped = true;
      }
      if (dropped) continue;
      IntVec v(pw.dim);
      for (std::size_t c = 0; c < pw.dim; ++c) {
        const Rat& x = collected[i]->linear[c];
        if (den(x) != 1) fail("NonIntegerVector", "surviving linear part is not integral");
        v[c] = num(x);
      }
      survivors.push_back(std::move(v));
    }
  }
  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  return Germ(minimum, std::move(survivors));
}

namespace {

constexpr std::size_t kPermutationCap = 8;

struct CanonicalForm {
  IntMatrix h;
  IntMatrix u;                       // h = u * (columns in the found order)
  std::vector<std::size_t> order;    // the found column order
  bool exact = true;
};

CanonicalForm permutation_minimized_form(const std::vector<IntVec>& vectors) {
  CanonicalForm best;
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), 0);
  if (vectors.size() > kPermutationCap) {
    std::vector<IntVec> cols;
    for (std::size_t i : order) cols.push_back(vectors[i]);
    auto hr = hnf_with_transform(IntMatrix::from_columns(cols));
    return CanonicalForm{hr.h, hr.u, order, false};
  }
  bool first = true;
  std::vector<std::size_t> perm = order;
  do {
    std::vector<IntVec> cols;
    cols.reserve(perm.size());
    for (std::size_t i : perm) cols.push_back(vectors[i]);
    auto hr = hnf_with_transform(IntMatrix::from_columns(cols));
    if (first || matrix_lex_less(hr.h, best.h)) {
      best = CanonicalForm{hr.h, hr.u, perm, true};
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

GermInvariants germ_invariants(const Germ& g) {
  GermInvariants inv;
  inv.constant = g.constant();
  inv.dim = g.dim();
  inv.count = g.vectors().size();
  if (inv.count >= 2 && inv.dim >= 2)
    inv.pair_index_multiset = sorted_indices_over_subsets(g.vectors(), 2);
  if (inv.count >= 3 && inv.dim >= 3)
    inv.triple_index_multiset = sorted_indices_over_subsets(g.vectors(), 3);
  if (inv.count <= inv.dim) inv.full_index = integral_index(g.vectors());
  CanonicalForm form = permutation_minimized_form(g.vectors());
  inv.canonical_matrix = form.h;
  inv.canonical_exact = form.exact;
  return inv;
}

GermComparison germ_equivalent(const Germ& a, const Germ& b) {
  if (a.dim() != b.dim()) fail("DimensionMismatch", "germs live in different dimensions");

  if (a.constant() != b.constant())
    return Inequivalent{"constant", rat_to_string(a.constant()), rat_to_string(b.constant())};
  if (a.vectors().size() != b.vectors().size())
    return Inequivalent{"cardinality", std::to_string(a.vectors().size()),
                        std::to_string(b.vectors().size())};

  if (a.vectors().size() >= 2 && a.dim() >= 2) {
    auto pa = sorted_indices_over_subsets(a.vectors(), 2);
    auto pb = sorted_indices_over_subsets(b.vectors(), 2);
    if (pa != pb)
      return Inequivalent{"pairwise_index", multiset_to_string(pa), multiset_to_string(pb)};
  }
  if (a.vectors().size() >= 3 && a.dim() >= 3) {
    auto ta = sorted_indices_over_subsets(a.vectors(), 3);
    auto tb = sorted_indices_over_subsets(b.vectors(), 3);
    if (ta != tb)
      return Inequivalent{"triple_index", multiset_to_string(ta), multiset_to_string(tb)};
  }
  if (a.vectors().size() <= a.dim()) {
    Int fa = integral_index(a.vectors());
    Int fb = integral_index(b.vectors());
    if (fa != fb) return Inequivalent{"full_index", fa.str(), fb.str()};
  }

  if (a.vectors().size() > kPermutationCap)
    return Undecided{"vector set exceeds the exact permutation-search cap"};

  auto hb = hnf_with_transform(IntMatrix::from_columns(b.vectors()));
  IntMatrix u_b_inv = unimodular_inverse(hb.u);

  std::vector<std::size_t> perm(a.vectors().size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<IntVec> cols;
    cols.reserve(perm.size());
    for (std::size_t i : perm) cols.push_back(a.vectors()[i]);
    auto ha = hnf_with_transform(IntMatrix::from_columns(cols));
    if (!(ha.h == hb.h)) continue;
    IntMatrix witness = matmul(u_b_inv, ha.u);
    if (!is_unimodular(witness)) continue;
    std::vector<IntVec> mapped;
    mapped.reserve(a.vectors().size());
    for (const auto& v : a.vectors()) mapped.push_back(matvec(witness, v));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != b.vectors()) continue;
    return Equivalent{witness};
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto fa = permutation_minimized_form(a.vectors());
  auto fb2 = permutation_minimized_form(b.vectors());
  return Inequivalent{"canonical_form", matrix_to_string(fa.h), matrix_to_string(fb2.h)};
}

}  // namespace latgerm
