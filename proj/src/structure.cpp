#include "trm/structure.hpp"

#include <random>
#include <sstream>

namespace trm {

namespace {

void require_artinian(const GradedAlgebra& r, const char* what) {
  if (!r.is_artinian()) throw PreconditionError(std::string(what) + " needs an Artinian algebra");
}

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  for (auto& c : v) c = f.random(rng);
  return v;
}

// Basis vector of the linear annihilator of z when it is one-dimensional.
std::optional<Vector> unique_linear_annihilator(const GradedAlgebra& r, const Vector& z) {
  Subspace k = kernel_basis(r.multiplication_map(1, z, 1));
  if (k.dim() != 1) return std::nullopt;
  return k.basis().row(0);
}

}  // namespace

std::size_t Socle::dim() const {
  std::size_t total = 0;
  for (const auto& s : by_degree) total += s.dim();
  return total;
}

Socle socle(const GradedAlgebra& r) {
  require_artinian(r, "socle");
  const Field& f = r.field();
  const std::size_t nu = r.dim(1);
  Socle s;
  for (int d = 0; d <= r.cutoff(); ++d) {
    if (d == r.cutoff() || r.dim(d + 1) == 0) {
      s.by_degree.push_back(Subspace::full(f, r.dim(d)));
      continue;
    }
    std::vector<DenseMatrix> blocks;
    for (std::size_t i = 0; i < nu; ++i) blocks.push_back(r.multiplication_map(1, unit_vector(f, nu, i), d));
    s.by_degree.push_back(nu == 0 ? Subspace::full(f, r.dim(d)) : kernel_basis(vstack(blocks)));
  }
  return s;
}

std::string to_string(TrVerdict v) {
  return v == TrVerdict::AdmitsPossible ? "admits-possible" : "no-non-free-TR";
}

namespace {

bool has_quadratic_presentation(const GradedAlgebra& r) {
  const Field& f = r.field();
  const std::size_t nu = r.dim(1);
  auto monos = monomials_of_degree(nu, 2);
  DenseMatrix m(f, r.dim(2), monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < nu; ++i) {
      for (int e = 0; e < monos[c][i]; ++e) vars.push_back(i);
    }
    const Vector& p = r.basis_product(1, vars[0], 1, vars[1]);
    for (std::size_t row = 0; row < p.size(); ++row) m(row, c) = p[row];
  }
  std::vector<Polynomial> relations;
  for (const Vector& k : kernel_basis(m).basis_vectors()) {
    Polynomial poly;
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (!k[c].is_zero()) poly.terms.push_back(Term{k[c], monos[c]});
    }
    relations.push_back(std::move(poly));
  }
  AlgebraPtr q = algebra_from_relations(f, r.labels(1), relations, 3);
  return q->dim(2) == r.dim(2) && q->dim(3) == r.dim(3);
}

}  // namespace

YoshinoReport yoshino_check(const GradedAlgebra& r) {
  if (r.cutoff() < 3 || r.dim(3) != 0) throw PreconditionError("yoshino_check needs m^3 = 0 and cutoff >= 3");
  YoshinoReport rep;
  Socle s = socle(r);
  rep.dim_r1 = r.dim(1);
  rep.dim_r2 = r.dim(2);
  rep.type_r = s.dim();
  rep.socle_equals_m2 = s.by_degree[0].dim() == 0 && s.by_degree[1].dim() == 0 && s.by_degree[2].dim() == r.dim(2);
  rep.dims_match = rep.dim_r1 == rep.type_r + 1 && rep.dim_r2 == rep.type_r;
  rep.quadratic_presentation = has_quadratic_presentation(r);
  rep.gorenstein = rep.type_r == 1 && rep.dim_r1 > 0;
  if (rep.dim_r1 == 0) {
    rep.verdict = TrVerdict::NoNonFreeTR;
  } else if (rep.gorenstein) {
    rep.verdict = TrVerdict::AdmitsPossible;
  } else {
    bool ok = rep.socle_equals_m2 && rep.dims_match && rep.quadratic_presentation;
    rep.verdict = ok ? TrVerdict::AdmitsPossible : TrVerdict::NoNonFreeTR;
  }
  return rep;
}

bool wlp_check(const GradedAlgebra& r, const Vector& l) {
  if (r.cutoff() < 2) throw PreconditionError("wlp_check needs cutoff >= 2");
  return rank(r.multiplication_map(1, l, 1)) == r.dim(2);
}

WlpResult wlp_generic(const GradedAlgebra& r, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WlpResult out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    Vector l = random_vector(r.field(), r.dim(1), rng);
    if (wlp_check(r, l)) {
      ++out.surjective;
      if (!out.witness) out.witness = l;
    }
  }
  out.holds = out.surjective > 0;
  return out;
}

KernelSystem kernel_system(const Graph& g, const Vector& alpha, const Vector& beta, const Vector& a) {
  if (!g.is_connected()) throw PreconditionError("kernel_system needs a connected graph");
  const std::size_t n = g.vertex_count();
  if (alpha.size() != n || beta.size() != n || a.size() != n) {
    throw DimensionError("kernel_system: one coefficient per vertex expected");
  }
  const Field f = alpha.front().field();
  const std::size_t u = 0, v = n, w = 2 * n;
  DenseMatrix m(f, g.edge_count() + n, 3 * n);
  std::size_t row = 0;
  for (const auto& [i, j] : g.edges()) {
    m(row, u + i) = alpha[j];
    m(row, u + j) = alpha[i];
    m(row, v + i) = beta[j];
    m(row, v + j) = beta[i];
    m(row, w + i) = a[j];
    m(row, w + j) = a[i];
    ++row;
  }
  for (std::size_t i = 0; i < n; ++i, ++row) {
    m(row, u + i) = alpha[i];
    m(row, v + i) = beta[i];
    m(row, w + i) = a[i];
  }
  KernelSystem ks{m, kernel_basis(m), {}, false, 0, std::nullopt};
  auto stack = [&](const Vector& x, const Vector& y, const Vector& z) {
    Vector out;
    out.reserve(3 * n);
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    out.insert(out.end(), z.begin(), z.end());
    return out;
  };
  Vector zero = zero_vector(f, n);
  ks.koszul = {stack(negated(beta), alpha, zero), stack(negated(a), zero, alpha), stack(zero, negated(a), beta)};
  Subspace koszul_span = Subspace::span(f, 3 * n, {ks.koszul.begin(), ks.koszul.end()});
  ks.koszul_rank = koszul_span.dim();
  ks.koszul_contained = ks.solutions.contains(koszul_span);
  if (ks.dimension() == 4 && ks.koszul_contained && ks.koszul_rank == 3) {
    std::vector<Vector> residues;
    for (const Vector& s : ks.solutions.basis_vectors()) residues.push_back(koszul_span.reduce(s));
    ks.extra_solution = Subspace::span(f, 3 * n, residues).basis().row(0);
  }
  return ks;
}

std::size_t principal_length(const GradedAlgebra& r, const Vector& a) {
  require_artinian(r, "principal_length");
  std::size_t len = 0;
  for (int d = 0; d + 1 <= r.cutoff(); ++d) len += rank(r.multiplication_map(1, a, d));
  return len;
}

bool verify_ezd(const GradedAlgebra& r, const Vector& a, const Vector& b) {
  require_artinian(r, "verify_ezd");
  if (a.size() != r.dim(1) || b.size() != r.dim(1)) throw DimensionError("verify_ezd: linear forms expected");
  if (!is_zero(r.multiply(1, a, 1, b))) return false;
  return principal_length(r, a) + principal_length(r, b) == r.total_dim();
}

namespace {

std::optional<EzdPair> try_candidate(const GradedAlgebra& r, const Vector& z) {
  if (is_zero(z)) return std::nullopt;
  auto b = unique_linear_annihilator(r, z);
  if (!b || !verify_ezd(r, z, *b)) return std::nullopt;
  return EzdPair{z, *b, true};
}

}  // namespace

EzdSearchResult find_ezd(const GradedAlgebra& r, const EzdSearch& search) {
  require_artinian(r, "find_ezd");
  const Field& f = r.field();
  const std::size_t nu = r.dim(1);
  EzdSearchResult out;
  if (nu == 0) {
    out.covered_all_lines = true;
    return out;
  }
  std::mt19937_64 rng(search.seed);
  switch (search.strategy) {
    case EzdStrategy::Random:
      for (; out.trials < search.budget;) {
        ++out.trials;
        if (auto p = try_candidate(r, random_vector(f, nu, rng))) {
          out.pair = p;
          return out;
        }
      }
      return out;
    case EzdStrategy::BipartiteCanonical: {
      if (search.sides.size() != nu) throw DimensionError("bipartite search needs one side flag per R_1 basis vector");
      for (; out.trials < search.budget;) {
        ++out.trials;
        Vector z = random_vector(f, nu, rng);
        Subspace k = kernel_basis(r.multiplication_map(1, z, 1));
        if (k.dim() != 1) continue;
        Vector flipped = z;
        for (std::size_t i = 0; i < nu; ++i) {
          if (!search.sides[i]) flipped[i] = -flipped[i];
        }
        if (!is_zero(r.multiply(1, z, 1, flipped))) throw std::logic_error("sign-flipped form does not annihilate");
        if (verify_ezd(r, z, flipped)) {
          out.pair = EzdPair{z, flipped, true};
          return out;
        }
      }
      return out;
    }
    case EzdStrategy::ExhaustiveLines: {
      if (!f.is_prime()) throw PreconditionError("exhaustive line search needs a prime field");
      const std::uint64_t p = f.characteristic();
      // Lines of P(R_1): first nonzero coordinate 1, later coordinates free.
      for (std::size_t lead = 0; lead < nu; ++lead) {
        std::vector<std::uint64_t> digits(nu - lead - 1, 0);
        while (true) {
          if (out.trials >= search.budget) return out;
          Vector z = zero_vector(f, nu);
          z[lead] = f.one();
          for (std::size_t k = 0; k < digits.size(); ++k) z[lead + 1 + k] = f.from_int(static_cast<std::int64_t>(digits[k]));
          ++out.trials;
          if (auto pr = try_candidate(r, z)) {
            out.pair = pr;
            return out;
          }
          std::size_t k = 0;
          while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
          if (k == digits.size()) break;
        }
      }
      out.covered_all_lines = true;
      return out;
    }
  }
  return out;
}

std::string NoEzdCertificate::describe(const Graph* g) const {
  std::ostringstream s;
  if (kind == Kind::DisconnectingPair && pair) {
    s << "removing ";
    if (g) {
      s << g->label(pair->first) << ", " << g->label(pair->second);
    } else {
      s << pair->first << ", " << pair->second;
    }
    s << " disconnects the graph";
  } else if (complete) {
    s << "no exact zero divisor on any of " << trials << " lines of R_1";
  } else {
    s << "no exact zero divisor among " << trials << " random linear forms";
  }
  return s.str();
}

std::optional<NoEzdCertificate> structural_no_ezd(const Graph& g) {
  if (!g.is_bipartite() || g.edge_count() + 4 != 2 * g.vertex_count()) return std::nullopt;
  auto p = disconnecting_pair(g);
  if (!p) return std::nullopt;
  NoEzdCertificate c;
  c.kind = NoEzdCertificate::Kind::DisconnectingPair;
  c.pair = p;
  return c;
}

std::optional<NoEzdCertificate> search_no_ezd(const EzdSearchResult& result) {
  if (result.pair) return std::nullopt;
  NoEzdCertificate c;
  c.kind = NoEzdCertificate::Kind::SearchExhausted;
  c.trials = result.trials;
  c.complete = result.covered_all_lines;
  return c;
}

std::vector<Subspace> generated_ideal(const GradedAlgebra& r, const std::vector<Vector>& gens) {
  const Field& f = r.field();
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, r.dim(0)));
  if (r.cutoff() < 1) return out;
  out.push_back(Subspace::span(f, r.dim(1), gens));
  for (int d = 1; d < r.cutoff(); ++d) {
    std::vector<Vector> next;
    for (const Vector& v : out.back().basis_vectors()) {
      for (std::size_t i = 0; i < r.dim(1); ++i) {
        next.push_back(r.multiply(1, unit_vector(f, r.dim(1), i), d, v));
      }
    }
    out.push_back(Subspace::span(f, r.dim(d + 1), next));
  }
  return out;
}

IdealPairReport ideal_pair_analysis(const GradedAlgebra& r, const std::vector<Vector>& gens_a,
                                    const std::vector<Vector>& gens_b) {
  IdealPairReport rep;
  rep.a = generated_ideal(r, gens_a);
  rep.b = generated_ideal(r, gens_b);
  rep.generators = r.dim(1);
  rep.sum_is_maximal = true;
  rep.direct_sum = true;
  for (int d = 0; d <= r.cutoff(); ++d) {
    const auto& a = rep.a[static_cast<std::size_t>(d)];
    const auto& b = rep.b[static_cast<std::size_t>(d)];
    if (d >= 1 && subspace_sum(a, b).dim() != r.dim(d)) rep.sum_is_maximal = false;
    std::size_t meet = subspace_intersection(a, b).dim();
    rep.intersection_dims.push_back(meet);
    if (meet != 0) rep.direct_sum = false;
  }
  rep.product_zero = true;
  if (r.cutoff() >= 2) {
    for (const Vector& x : gens_a) {
      for (const Vector& y : gens_b) {
        if (!is_zero(r.multiply(1, x, 1, y))) rep.product_zero = false;
      }
    }
  }
  rep.both_nonzero = rep.a.size() > 1 && rep.a[1].dim() > 0 && rep.b[1].dim() > 0;
  bool cube_zero = r.is_artinian() && (r.cutoff() < 3 || r.dim(3) == 0);
  rep.forbids_tr = cube_zero && rep.sum_is_maximal && rep.direct_sum && rep.both_nonzero && rep.generators >= 3;
  return rep;
}

std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> find_direct_sum_partition(
    const GradedAlgebra& r) {
  const std::size_t nu = r.dim(1);
  if (nu < 2 || nu > 12 || r.cutoff() < 2) return std::nullopt;
  const Field& f = r.field();
  for (std::uint32_t mask = 1; mask < (1u << (nu - 1)); ++mask) {
    std::vector<std::size_t> sa, sb;
    for (std::size_t i = 0; i < nu; ++i) ((mask >> i) & 1u ? sa : sb).push_back(i);
    bool zero = true;
    for (std::size_t i : sa) {
      for (std::size_t j : sb) {
        if (!is_zero(r.basis_product(1, i, 1, j))) {
          zero = false;
          break;
        }
      }
      if (!zero) break;
    }
    if (!zero) continue;
    std::vector<Vector> ga, gb;
    for (std::size_t i : sa) ga.push_back(unit_vector(f, nu, i));
    for (std::size_t j : sb) gb.push_back(unit_vector(f, nu, j));
    IdealPairReport rep = ideal_pair_analysis(r, ga, gb);
    if (rep.direct_sum && rep.sum_is_maximal) return std::make_pair(sa, sb);
  }
  return std::nullopt;
}

}  // namespace trm
