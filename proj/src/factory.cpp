#include "trm/factory.hpp"

#include <random>

namespace trm {

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, 4> kSideMonomials = {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}};

const std::array<std::size_t, 4>& vars_of(const SpecialRing& r, Side side) {
  return side == Side::A ? r.a_vars : r.b_vars;
}

const std::array<Vector, 4>& monomials_of(const SpecialRing& r, Side side) {
  return side == Side::A ? r.a_monomials : r.b_monomials;
}

}  // namespace

Vector SpecialRing::form(Side side, const SideForm& c) const {
  Vector v = zero_vector(ring->field(), ring->dim(1));
  const auto& vars = vars_of(*this, side);
  for (std::size_t k = 0; k < 4; ++k) v[vars[k]] = c[k];
  return v;
}

SideForm SpecialRing::side_coordinates(Side side, const Vector& v) const {
  if (v.size() != ring->dim(1)) throw DimensionError("side_coordinates: linear form expected");
  const auto& vars = vars_of(*this, side);
  SideForm c;
  Vector rest = v;
  for (std::size_t k = 0; k < 4; ++k) {
    c[k] = v[vars[k]];
    rest[vars[k]] = ring->field().zero();
  }
  if (!is_zero(rest)) throw DimensionError("entry does not lie in the declared side");
  return c;
}

std::array<Scalar, 4> SpecialRing::monomial_coordinates(Side side, const Vector& v) const {
  const auto& monos = monomials_of(*this, side);
  DenseMatrix basis = DenseMatrix::from_columns(ring->field(), ring->dim(2), {monos.begin(), monos.end()});
  auto sol = solve(basis, v);
  if (!sol) throw DimensionError("degree-2 element does not lie in the side");
  return {(*sol)[0], (*sol)[1], (*sol)[2], (*sol)[3]};
}

SpecialRing build_special_ring(const Field& field, int degree_bound) {
  Graph g = ten_vertex_graph();
  GraphReduction red = artinian_reduction(g, ReductionMode::Canonical, 0, field, degree_bound);
  AlgebraPtr ring = red.reduced();
  auto verts = red.reduced_vertices();
  auto index_of_label = [&](const std::string& label) {
    const std::size_t v = g.index_of(label);
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (verts[k] == v) return k;
    }
    throw std::logic_error("vertex " + label + " is not an R_1 basis vector");
  };
  std::array<std::size_t, 4> a_vars = {index_of_label("x1"), index_of_label("y1"), index_of_label("x2"),
                                       index_of_label("y2")};
  std::array<std::size_t, 4> b_vars = {index_of_label("x3"), index_of_label("y3"), index_of_label("x4"),
                                       index_of_label("y4")};
  const std::size_t nu = ring->dim(1);
  std::vector<Vector> ga, gb;
  for (std::size_t k : a_vars) ga.push_back(unit_vector(field, nu, k));
  for (std::size_t k : b_vars) gb.push_back(unit_vector(field, nu, k));
  IdealPairReport rep = ideal_pair_analysis(*ring, ga, gb);
  if (!rep.sum_is_maximal || !rep.product_zero) throw std::logic_error("special ring: m != a + b or ab != 0");
  Subspace meet = subspace_intersection(rep.a[2], rep.b[2]);
  if (meet.dim() != 1 || rep.intersection_dims[1] != 0) throw std::logic_error("special ring: a cap b is not (delta)");

  auto side_monomials = [&](const std::array<std::size_t, 4>& vars) {
    std::array<Vector, 4> out;
    for (std::size_t m = 0; m < 4; ++m) {
      out[m] = ring->basis_product(1, vars[kSideMonomials[m].first], 1, vars[kSideMonomials[m].second]);
    }
    return out;
  };
  SpecialRing r{std::move(red), ring, a_vars, b_vars, rep.a[1], rep.a[2], rep.b[1], rep.b[2],
                side_monomials(a_vars), side_monomials(b_vars), meet.basis().row(0)};
  if (Subspace::span(field, ring->dim(2), {r.a_monomials.begin(), r.a_monomials.end()}) != r.a2 ||
      Subspace::span(field, ring->dim(2), {r.b_monomials.begin(), r.b_monomials.end()}) != r.b2 ||
      r.a2.dim() != 4 || r.b2.dim() != 4) {
    throw std::logic_error("special ring: side monomials do not form a basis of the degree-2 pieces");
  }
  return r;
}

DenseMatrix injectivity_matrix(const Field& field, const SideBlock& block) {
  DenseMatrix m(field, 8, 8);
  for (std::size_t mono = 0; mono < 4; ++mono) {
    const auto [i, j] = kSideMonomials[mono];
    for (std::size_t row = 0; row < 2; ++row) {
      const std::size_t out = 2 * mono + row;
      const SideForm& p = block[row][0];
      const SideForm& q = block[row][1];
      // Coefficient of v_i v_j in p*f + q*g.
      m(out, i) += p[j];
      m(out, j) += p[i];
      m(out, 4 + i) += q[j];
      m(out, 4 + j) += q[i];
    }
  }
  return m;
}

std::size_t induced_map_rank(const SpecialRing& r, Side side, const SideBlock& block) {
  const Field& f = r.ring->field();
  const std::size_t d2 = r.ring->dim(2);
  DenseMatrix m(f, 2 * d2, 8);
  for (std::size_t col = 0; col < 8; ++col) {
    SideForm unit;
    unit.fill(f.zero());
    unit[col % 4] = f.one();
    Vector input = r.form(side, unit);
    const std::size_t slot = col / 4;  // f or g
    for (std::size_t row = 0; row < 2; ++row) {
      Vector entry = r.form(side, block[row][slot]);
      Vector prod = r.ring->multiply(1, entry, 1, input);
      for (std::size_t k = 0; k < d2; ++k) m(row * d2 + k, col) = prod[k];
    }
  }
  return rank(m);
}

bool injectivity_check(const SpecialRing& r, const SideBlock& block) {
  return rank(injectivity_matrix(r.ring->field(), block)) == 8;
}

bool injectivity_check(const SpecialRing& r, const GradedMatrix& block, Side side, bool transpose_block) {
  if (block.rows() != 2 || block.cols() != 2 || block.degree() != 1) {
    throw DimensionError("injectivity_check needs a 2x2 matrix of linear forms");
  }
  SideBlock sb;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) sb[i][j] = r.side_coordinates(side, block.entry(i, j));
  }
  return injectivity_check(r, transpose_block ? transpose(sb) : sb);
}

SideBlock transpose(const SideBlock& b) {
  SideBlock t;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) t[i][j] = b[j][i];
  }
  return t;
}

namespace {

GradedMatrix side_matrix(const SpecialRing& r, Side side, const SideBlock& b) {
  GradedMatrix m(r.ring, 2, 2, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) m.set(i, j, r.form(side, b[i][j]));
  }
  return m;
}

// Columns c_1, c_2 of the successor block: block * c_k = e_k * target, with
// `target` given in the side's monomial basis.
SideBlock successor_side(const SpecialRing& r, const SideBlock& block, const std::array<Scalar, 4>& target,
                         int step, const char* name) {
  const Field& f = r.ring->field();
  DenseMatrix m = injectivity_matrix(f, block);
  SideBlock next;
  for (std::size_t k = 0; k < 2; ++k) {
    Vector rhs = zero_vector(f, 8);
    for (std::size_t mono = 0; mono < 4; ++mono) rhs[2 * mono + k] = target[mono];
    auto sol = solve(m, rhs);
    if (!sol) {
      throw FactoryError("extension step " + std::to_string(step) + ": " + name + " system is inconsistent");
    }
    for (std::size_t t = 0; t < 4; ++t) {
      next[0][k][t] = (*sol)[t];
      next[1][k][t] = (*sol)[4 + t];
    }
  }
  return next;
}

}  // namespace

GradedMatrix PairBlock::a_matrix(const SpecialRing& r) const { return side_matrix(r, Side::A, a); }
GradedMatrix PairBlock::b_matrix(const SpecialRing& r) const { return side_matrix(r, Side::B, b); }

PairBlock make_block(const SpecialRing& r, int index, const SideBlock& a, const SideBlock& b) {
  PairBlock p;
  p.index = index;
  p.a = a;
  p.b = b;
  p.a_injective = injectivity_check(r, a);
  p.a_t_injective = injectivity_check(r, transpose(a));
  p.b_injective = injectivity_check(r, b);
  p.b_t_injective = injectivity_check(r, transpose(b));
  return p;
}

PairBlock extend_forward(const SpecialRing& r, const PairBlock& blk) {
  if (!blk.all_injective()) {
    throw FactoryError("extension step " + std::to_string(blk.index) + ": injectivity fails");
  }
  auto delta_a = r.monomial_coordinates(Side::A, r.delta);
  auto delta_b = r.monomial_coordinates(Side::B, negated(r.delta));
  SideBlock a = successor_side(r, blk.a, delta_a, blk.index, "A");
  SideBlock b = successor_side(r, blk.b, delta_b, blk.index, "B");
  PairBlock next = make_block(r, blk.index + 1, a, b);
  if (!(blk.differential(r) * next.differential(r)).is_zero()) {
    throw std::logic_error("extend_forward: consecutive differentials do not compose to zero");
  }
  return next;
}

PairBlock extend_backward(const SpecialRing& r, const PairBlock& blk) {
  PairBlock t = make_block(r, -blk.index, transpose(blk.a), transpose(blk.b));
  PairBlock fwd = extend_forward(r, t);
  PairBlock prev = make_block(r, blk.index - 1, transpose(fwd.a), transpose(fwd.b));
  if (!(prev.differential(r) * blk.differential(r)).is_zero()) {
    throw std::logic_error("extend_backward: consecutive differentials do not compose to zero");
  }
  return prev;
}

PairBlock canonical_blocks(const SpecialRing& r, int parity) {
  const Field& f = r.ring->field();
  auto sf = [&](int a, int b, int c, int d) { return SideForm{f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)}; };
  // Coefficient order (x, y, x', y').
  SideBlock blk;
  blk[0][0] = sf(1, 1, 1, 1);     // x + x' + y + y'
  blk[1][1] = sf(1, -1, 1, -1);   // x + x' - y - y'
  if (parity % 2 == 0) {
    blk[0][1] = sf(1, 1, -1, -1);  // x - x' + y - y'
  } else {
    blk[0][1] = sf(1, -1, -1, 1);  // x - x' - y + y'
  }
  blk[1][0] = blk[0][1];
  return make_block(r, parity % 2 == 0 ? 0 : 1, blk, blk);
}

PairBlock random_blocks(const SpecialRing& r, std::uint64_t seed, int retries) {
  const Field& f = r.ring->field();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    SideBlock a, b;
    for (SideBlock* blk : {&a, &b}) {
      for (auto& row : *blk) {
        for (auto& entry : row) {
          for (auto& c : entry) c = f.random(rng);
        }
      }
    }
    PairBlock p = make_block(r, 0, a, b);
    if (p.all_injective()) return p;
  }
  throw FactoryError("random_blocks: retry budget exhausted");
}

namespace {

FactoryWindow assemble(const SpecialRing& r, std::vector<PairBlock> blocks) {
  std::vector<GradedMatrix> ds;
  for (const auto& b : blocks) ds.push_back(b.differential(r));
  const int lo = blocks.front().index;
  FreeComplexWindow w(r.ring, lo, std::move(ds));
  return FactoryWindow{std::move(blocks), std::move(w)};
}

}  // namespace

FactoryWindow build_window(const SpecialRing& r, const PairBlock& start, int forward, int backward) {
  if (forward < 0 || backward < 0) throw std::invalid_argument("window sizes must be non-negative");
  if (!start.all_injective()) throw FactoryError("extension step 0: start block fails injectivity");
  std::vector<PairBlock> back;
  PairBlock cur = start;
  for (int k = 0; k < backward; ++k) {
    cur = extend_backward(r, cur);
    if (!cur.all_injective()) {
      throw FactoryError("extension step " + std::to_string(cur.index) + ": injectivity fails");
    }
    back.push_back(cur);
  }
  std::vector<PairBlock> blocks(back.rbegin(), back.rend());
  blocks.push_back(start);
  cur = start;
  for (int k = 0; k < forward; ++k) {
    cur = extend_forward(r, cur);
    if (!cur.all_injective()) {
      throw FactoryError("extension step " + std::to_string(cur.index) + ": injectivity fails");
    }
    blocks.push_back(cur);
  }
  return assemble(r, std::move(blocks));
}

FactoryWindow canonical_window(const SpecialRing& r, int forward, int backward) {
  std::vector<PairBlock> blocks;
  for (int n = -backward; n <= forward; ++n) {
    PairBlock b = canonical_blocks(r, n < 0 ? -n : n);
    b.index = n;
    blocks.push_back(b);
  }
  FactoryWindow fw = assemble(r, std::move(blocks));
  const auto& ds = fw.window.differentials();
  bool repeats = true;
  for (std::size_t k = 0; k + 2 < ds.size(); ++k) repeats = repeats && ds[k] == ds[k + 2];
  return FactoryWindow{fw.blocks, FreeComplexWindow(r.ring, -backward, ds, 0, Periodicity{2, repeats})};
}

bool distinct_modules(const FreeComplexWindow& w1, const FreeComplexWindow& w2) {
  auto s1 = fitting_support(cokernel_presentation(w1, 0));
  auto s2 = fitting_support(cokernel_presentation(w2, 0));
  return !(s1.first == s2.first) || !(s1.second == s2.second);
}

}  // namespace trm
