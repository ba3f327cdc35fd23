#include "reduction.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace gvm {

const char* rule_name(ReductionRule r) {
  switch (r) {
    case ReductionRule::Component: return "component";
    case ReductionRule::ParabolicSpan: return "parabolic-span";
    case ReductionRule::SingularSpan: return "singular-span";
  }
  return "?";
}

namespace {

// Span rule relativized to the current subsystem: (QQ(part) + QQ beta) ∩ cur.
Subsystem span_rule(const Realization& R, const Subsystem& cur,
                    const Subsystem& part, int beta) {
  std::vector<Vec> seeds;
  for (int r : part) seeds.push_back(R.roots[r]);
  seeds.push_back(R.roots[beta]);
  return sub_intersect(span_intersect(R, seeds), cur);
}

}  // namespace

ReductionTrace reduce(const Realization& R, const Vec& lam,
                      const ParabolicData& pd, int beta) {
  if (beta < 0 || beta >= static_cast<int>(R.roots.size()) ||
      !R.positive[beta] || sub_contains(pd.phi_I, beta))
    throw RootNotInPsiPlus("reduce: beta is not in Psi+");
  {
    Rat p = pairing(R, lam, beta);
    if (!is_integer(p) || p <= 0)
      throw RootNotInPsiPlus("reduce: <lambda, beta^vee> is not in Z^{>0}");
  }

  Subsystem phi_lam = singular_subsystem(R, lam);

  ReductionTrace trace;
  trace.beta = beta;
  trace.initial = integral_subsystem(R, lam);

  Subsystem cur = trace.initial;
  int unchanged = 0;
  for (int k = 1; unchanged < 4; ++k) {
    ReductionRule rule;
    Subsystem next;
    switch (k % 4) {
      case 1:
      case 3:
        rule = ReductionRule::Component;
        next = irreducible_component(R, cur, beta);
        break;
      case 2:
        rule = ReductionRule::ParabolicSpan;
        next = span_rule(R, cur, sub_intersect(pd.phi_I, cur), beta);
        break;
      default:
        rule = ReductionRule::SingularSpan;
        next = span_rule(R, cur, sub_intersect(phi_lam, cur), beta);
        break;
    }
    unchanged = (next == cur) ? unchanged + 1 : 0;
    if (next != cur) trace.steps.push_back({k, rule, next});
    cur = std::move(next);
  }
  trace.terminal = cur;
  return trace;
}

namespace {

// One nonzero vector of the rational span of `big` orthogonal to `small`
// (the span of `small` has corank 1 inside the span of `big`).
Vec corank_one_complement(const Realization& R, const Subsystem& big,
                          const Subsystem& small) {
  SpanBasis bs;
  std::vector<int> basis;
  for (int r : big)
    if (bs.add(R.roots[r])) basis.push_back(r);
  const int n = static_cast<int>(basis.size());

  SpanBasis ss;
  std::vector<int> sbasis;
  for (int r : small)
    if (ss.add(R.roots[r])) sbasis.push_back(r);
  const int m = static_cast<int>(sbasis.size());
  if (m != n - 1)
    throw NotBasic("corank-1 condition violated");

  // Solve A c = 0 with A[l][k] = <small_l, big_k>; nullity is exactly 1.
  std::vector<Vec> a(m, Vec(n));
  for (int l = 0; l < m; ++l)
    for (int k = 0; k < n; ++k)
      a[l][k] = dot(R.roots[sbasis[l]], R.roots[basis[k]]);
  // Row-reduce, then back-substitute with one free variable.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int pr = row;
    while (pr < m && a[pr][col] == 0) ++pr;
    if (pr == m) continue;
    std::swap(a[pr], a[row]);
    Rat inv = 1 / a[row][col];
    for (int k = col; k < n; ++k) a[row][k] *= inv;
    for (int r2 = 0; r2 < m; ++r2) {
      if (r2 == row || a[r2][col] == 0) continue;
      Rat c = a[r2][col];
      for (int k = col; k < n; ++k) a[r2][k] -= c * a[row][k];
    }
    pivot_col.push_back(col);
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < n; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
      free_col = col;
  if (free_col < 0) throw InternalError("corank_one_complement: no nullspace");
  Vec c(n, Rat(0));
  c[free_col] = 1;
  for (size_t l = 0; l < pivot_col.size(); ++l)
    c[pivot_col[l]] = -a[l][free_col];
  Vec v = zero_vec(R.dim);
  for (int k = 0; k < n; ++k) v = vadd(v, vscale(c[k], R.roots[basis[k]]));
  return v;
}

// Bourbaki index of the corank-1 part inside the classified system: the
// position whose fundamental pairing survives after dominantizing a weight
// vanishing exactly on the part.
int missing_node(const Realization& R, const DynkinLabel& lbl,
                 const Subsystem& system, const Subsystem& part) {
  Vec v;
  if (lbl.rank == 1) {
    v = R.roots[lbl.labeling[0]];
  } else {
    v = corank_one_complement(R, system, part);
  }
  v = dominantize_by(R, v, lbl.labeling, nullptr).rep;
  int found = -1;
  for (int p = 0; p < lbl.rank; ++p) {
    Rat pr = pairing(R, v, lbl.labeling[p]);
    if (pr < 0) throw InternalError("missing_node: dominantization failed");
    if (pr > 0) {
      if (found >= 0) throw NotBasic("part is not corank-1 parabolic");
      found = p;
    }
  }
  if (found < 0) throw InternalError("missing_node: zero weight");
  return found + 1;
}

}  // namespace

std::string label_str(const BasicTriple& t) {
  return "(" + std::string(1, t.letter) + std::to_string(t.rank) + "," +
         std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

BasicTriple basic_triple_of(const Realization& R, const Vec& lam,
                            const ParabolicData& pd,
                            const ReductionTrace& trace) {
  BasicTriple t;
  t.system = trace.terminal;
  t.parabolic_part = sub_intersect(pd.phi_I, t.system);
  t.singular_part = sub_intersect(singular_subsystem(R, lam), t.system);
  t.weight = restrict_weight(R, lam, t.system);

  int r = span_rank(R, t.system);
  if (span_rank(R, t.parabolic_part) != r - 1 ||
      span_rank(R, t.singular_part) != r - 1)
    throw NotBasic("basic-triple rank conditions fail");

  DynkinLabel lbl = dynkin_classify(R, t.system);
  t.letter = lbl.letter;
  t.rank = lbl.rank;
  int i0 = missing_node(R, lbl, t.system, t.parabolic_part);
  int j0 = missing_node(R, lbl, t.system, t.singular_part);

  // Canonicalize over the diagram automorphisms acting diagonally.
  auto autos = diagram_automorphisms(lbl.letter, lbl.rank);
  std::pair<int, int> best(0, 0);
  for (const auto& sigma : autos) {
    std::pair<int, int> cand(sigma[i0], sigma[j0]);
    if (best.first == 0 || cand < best) best = cand;
    t.orbit.push_back(cand);
  }
  std::sort(t.orbit.begin(), t.orbit.end());
  t.orbit.erase(std::unique(t.orbit.begin(), t.orbit.end()), t.orbit.end());
  t.i = best.first;
  t.j = best.second;
  return t;
}

bool simple_via_reduction(const Realization& R, const Vec& lam,
                          const ParabolicData& pd) {
  Ctx ctx = make_ctx(pd);
  if (!ctx_in_lambda_plus(ctx, lam))
    throw NotInLambdaIPlus("simple_via_reduction: weight not in Lambda_I^+");
  PsiSets psi = psi_sets(lam, ctx);
  for (int beta : psi.psi_plus_plus) {
    ReductionTrace trace = reduce(R, lam, pd, beta);
    BasicTriple t = basic_triple_of(R, lam, pd, trace);
    Ctx sub = make_sub_ctx(R, t.system, t.parabolic_part);
    if (!is_simple(t.weight, sub).simple) return false;
  }
  return true;
}

}  // namespace gvm
