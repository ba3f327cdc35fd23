#include "rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "linalg.hpp"

namespace gvm {

namespace {

Vec ei(int dim, int i, const Rat& c = 1) {
  Vec v = zero_vec(dim);
  v[i] = c;
  return v;
}

// Enumerate the roots of the standard realization (Bourbaki coordinates).
std::vector<Vec> generate_roots(char letter, int rank, int dim) {
  std::vector<Vec> out;
  auto push = [&](const Vec& v) { out.push_back(v); };
  switch (letter) {
    case 'A':
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) push(vsub(ei(dim, i), ei(dim, j)));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              push(vadd(ei(dim, i, si), ei(dim, j, sj)));
      if (letter == 'B')
        for (int i = 0; i < rank; ++i)
          for (int s : {1, -1}) push(ei(dim, i, s));
      if (letter == 'C')
        for (int i = 0; i < rank; ++i)
          for (int s : {1, -1}) push(ei(dim, i, 2 * s));
      break;
    case 'F':
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) push(ei(4, i, s));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              push(vadd(ei(4, i, si), ei(4, j, sj)));
      for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i)
          v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        push(v);
      }
      break;
    case 'G': {
      // alpha_1 = e1-e2 and alpha_2 = -2e1+e2+e3; all roots are sum-zero.
      auto g = [&](long a, long b, long c) {
        Vec v(3);
        v[0] = a; v[1] = b; v[2] = c;
        push(v);
        push(vscale(-1, v));
      };
      g(1, -1, 0); g(0, 1, -1); g(1, 0, -1);
      g(2, -1, -1); g(-1, 2, -1); g(-1, -1, 2);
      break;
    }
    case 'E': {
      // E8 roots; E7/E6 are cut out below by orthogonality constraints.
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1})
              push(vadd(ei(8, i, si), ei(8, j, sj)));
      for (int mask = 0; mask < 256; ++mask) {
        int minus = __builtin_popcount(mask);
        if (minus % 2) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i)
          v[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        push(v);
      }
      if (rank < 8) {
        // E7 = E8-roots orthogonal to e7+e8; E6 additionally to e6-e7.
        std::vector<Vec> constraints;
        Vec c1 = zero_vec(8); c1[6] = 1; c1[7] = 1;
        constraints.push_back(c1);
        if (rank == 6) {
          Vec c2 = zero_vec(8); c2[5] = 1; c2[6] = -1;
          constraints.push_back(c2);
        }
        std::vector<Vec> kept;
        for (const auto& r : out) {
          bool ok = true;
          for (const auto& c : constraints)
            if (dot(r, c) != 0) { ok = false; break; }
          if (ok) kept.push_back(r);
        }
        out = kept;
      }
      break;
    }
    default:
      throw InvalidType("unknown type letter");
  }
  return out;
}

std::vector<Vec> generate_simples(char letter, int rank, int dim) {
  std::vector<Vec> s;
  auto chain = [&](int count) {  // e_i - e_{i+1}
    for (int i = 0; i < count; ++i) s.push_back(vsub(ei(dim, i), ei(dim, i + 1)));
  };
  switch (letter) {
    case 'A': chain(rank); break;
    case 'B': chain(rank - 1); s.push_back(ei(dim, rank - 1)); break;
    case 'C': chain(rank - 1); s.push_back(ei(dim, rank - 1, 2)); break;
    case 'D':
      chain(rank - 1);
      s.push_back(vadd(ei(dim, rank - 2), ei(dim, rank - 1)));
      break;
    case 'F':
      s.push_back(vsub(ei(4, 1), ei(4, 2)));
      s.push_back(vsub(ei(4, 2), ei(4, 3)));
      s.push_back(ei(4, 3));
      {
        Vec v(4);
        v[0] = Rat(1, 2); v[1] = Rat(-1, 2); v[2] = Rat(-1, 2); v[3] = Rat(-1, 2);
        s.push_back(v);
      }
      break;
    case 'G': {
      Vec a1(3), a2(3);
      a1[0] = 1; a1[1] = -1; a1[2] = 0;
      a2[0] = -2; a2[1] = 1; a2[2] = 1;
      s.push_back(a1);
      s.push_back(a2);
      break;
    }
    case 'E': {
      // Bourbaki numbering for E8; E7/E6 take the first 7/6 simple roots.
      Vec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      s.push_back(a1);
      s.push_back(vadd(ei(8, 0), ei(8, 1)));          // alpha_2 = e1+e2
      for (int i = 1; i <= 6; ++i)                    // alpha_{i+2} = e_i - e_{i-1}
        s.push_back(vsub(ei(8, i), ei(8, i - 1)));
      s.resize(rank);
      break;
    }
    default:
      throw InvalidType("unknown type letter");
  }
  return s;
}

std::unique_ptr<Realization> build(char letter, int rank) {
  bool ok = (letter == 'A' && rank >= 1) || (letter == 'B' && rank >= 2) ||
            (letter == 'C' && rank >= 2) || (letter == 'D' && rank >= 4) ||
            (letter == 'E' && rank >= 6 && rank <= 8) ||
            (letter == 'F' && rank == 4) || (letter == 'G' && rank == 2);
  if (!ok)
    throw InvalidType(std::string("invalid type ") + letter +
                      std::to_string(rank));

  auto R = std::make_unique<Realization>();
  R->letter = letter;
  R->rank = rank;
  R->dim = letter == 'A' ? rank + 1
           : letter == 'E' ? 8
           : letter == 'G' ? 3
                           : rank;
  R->roots = generate_roots(letter, rank, R->dim);
  std::sort(R->roots.begin(), R->roots.end(), vec_less);
  for (size_t k = 0; k < R->roots.size(); ++k)
    R->index_[wkey(R->roots[k])] = static_cast<int>(k);

  auto simple_vecs = generate_simples(letter, rank, R->dim);
  for (const auto& sv : simple_vecs) {
    int idx = R->root_index(sv);
    if (idx < 0) throw InternalError("simple root missing from root table");
    R->simples.push_back(idx);
  }

  const size_t nroots = R->roots.size();
  R->neg.resize(nroots);
  R->norm.resize(nroots);
  for (size_t k = 0; k < nroots; ++k) {
    R->neg[k] = R->root_index(vscale(-1, R->roots[k]));
    if (R->neg[k] < 0) throw InternalError("root table not negation-closed");
    R->norm[k] = dot(R->roots[k], R->roots[k]);
  }

  // Expand every root over Delta (Gram system: valid because every root
  // lies in the rational span of the simple roots).
  std::vector<Vec> gram(rank, Vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      gram[i][j] = dot(R->roots[R->simples[i]], R->roots[R->simples[j]]);
  R->simple_coords.resize(nroots);
  R->positive.resize(nroots);
  for (size_t k = 0; k < nroots; ++k) {
    Vec rhs(rank);
    for (int i = 0; i < rank; ++i)
      rhs[i] = dot(R->roots[k], R->roots[R->simples[i]]);
    Vec c = solve_square(gram, rhs);
    bool pos = true, negv = true;
    R->simple_coords[k].resize(rank);
    for (int i = 0; i < rank; ++i) {
      if (!is_integer(c[i]))
        throw InternalError("non-integral simple-root coordinate");
      long ci = to_long(c[i]);
      R->simple_coords[k][i] = ci;
      if (ci < 0) pos = false;
      if (ci > 0) negv = false;
    }
    if (pos == negv) throw InternalError("root neither positive nor negative");
    R->positive[k] = pos;
    if (pos) R->positives.push_back(static_cast<int>(k));
  }

  // Highest (and highest short) roots by height among positives.
  Rat min_norm = R->norm[R->simples[0]];
  for (int s : R->simples)
    if (R->norm[s] < min_norm) min_norm = R->norm[s];
  int best = -1, best_s = -1;
  for (int k : R->positives) {
    if (best < 0 || R->height(k) > R->height(best)) best = k;
    if (R->norm[k] == min_norm &&
        (best_s < 0 || R->height(k) > R->height(best_s)))
      best_s = k;
  }
  R->highest = best;
  R->highest_short = best_s;

  // Cartan matrix over Delta.
  R->cartan.assign(rank, std::vector<long>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      R->cartan[i][j] =
          to_long(pairing(R->roots[R->simples[i]], R->roots[R->simples[j]]));

  // Fundamental weights: varpi_i = sum_k c_k alpha_k with C^T c = e_i.
  std::vector<Vec> ct(rank, Vec(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) ct[i][j] = Rat(R->cartan[j][i]);
  for (int i = 0; i < rank; ++i) {
    Vec e(rank, Rat(0));
    e[i] = 1;
    Vec c = solve_square(ct, e);
    Vec w = zero_vec(R->dim);
    for (int k = 0; k < rank; ++k)
      w = vadd(w, vscale(c[k], R->roots[R->simples[k]]));
    R->fundamental.push_back(w);
  }
  return R;
}

}  // namespace

const Realization& build_realization(char letter, int rank) {
  static std::map<std::pair<char, int>, std::unique_ptr<Realization>> cache;
  auto key = std::make_pair(letter, rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build(letter, rank)).first;
  return *it->second;
}

ParabolicData make_parabolic(const Realization& R,
                             const std::vector<int>& crossed) {
  ParabolicData pd;
  pd.R = &R;
  pd.crossed = crossed;
  std::sort(pd.crossed.begin(), pd.crossed.end());
  for (int c : pd.crossed)
    if (c < 1 || c > R.rank)
      throw ParseError("crossed index out of range: " + std::to_string(c));
  for (int i = 1; i <= R.rank; ++i)
    if (!std::binary_search(pd.crossed.begin(), pd.crossed.end(), i))
      pd.included.push_back(i);
  // Phi_I = roots supported on I alone.
  for (int k = 0; k < static_cast<int>(R.roots.size()); ++k) {
    bool in = true;
    for (int c : pd.crossed)
      if (R.simple_coords[k][c - 1] != 0) { in = false; break; }
    if (in) pd.phi_I.push_back(k);
  }
  return pd;
}

Rat pairing(const Vec& lam, const Vec& alpha) {
  return 2 * dot(lam, alpha) / dot(alpha, alpha);
}

Rat pairing(const Realization& R, const Vec& lam, int root) {
  return 2 * dot(lam, R.roots[root]) / R.norm[root];
}

Subsystem singular_subsystem(const Realization& R, const Vec& lam) {
  Subsystem out;
  for (int k = 0; k < static_cast<int>(R.roots.size()); ++k)
    if (dot(lam, R.roots[k]) == 0) out.push_back(k);
  return out;
}

Subsystem integral_subsystem(const Realization& R, const Vec& lam) {
  Subsystem out;
  for (int k = 0; k < static_cast<int>(R.roots.size()); ++k)
    if (is_integer(pairing(R, lam, k))) out.push_back(k);
  return out;
}

Subsystem span_intersect(const Realization& R, const std::vector<Vec>& seeds) {
  SpanBasis basis;
  for (const auto& s : seeds) basis.add(s);
  Subsystem out;
  if (basis.rank() == 0) return out;
  for (int k = 0; k < static_cast<int>(R.roots.size()); ++k)
    if (basis.contains(R.roots[k])) out.push_back(k);
  return out;
}

Subsystem irreducible_component(const Realization& R, const Subsystem& sub,
                                int beta) {
  if (!sub_contains(sub, beta))
    throw RootNotInSubsystem("beta not a member of the subsystem");
  std::vector<int> stack{beta};
  std::vector<bool> seen(sub.size(), false);
  auto pos_of = [&](int r) {
    return static_cast<int>(std::lower_bound(sub.begin(), sub.end(), r) -
                            sub.begin());
  };
  seen[pos_of(beta)] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (size_t p = 0; p < sub.size(); ++p) {
      if (seen[p]) continue;
      if (dot(R.roots[cur], R.roots[sub[p]]) != 0) {
        seen[p] = true;
        stack.push_back(sub[p]);
      }
    }
  }
  Subsystem out;
  for (size_t p = 0; p < sub.size(); ++p)
    if (seen[p]) out.push_back(sub[p]);
  return out;
}

std::vector<int> simple_system_of(const Realization& R, const Subsystem& sub) {
  std::vector<int> pos = positive_members(R, sub);
  std::vector<int> out;
  for (int a : pos) {
    bool decomposable = false;
    for (int b : pos) {
      if (b == a) continue;
      int c = R.root_index(vsub(R.roots[a], R.roots[b]));
      if (c >= 0 && sub_contains(sub, c) && R.positive[c]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

namespace {

// Backtracking match of the Cartan matrix of `simples` against the
// standard Cartan matrix of (letter, rank).  Returns the assignment
// Bourbaki-position -> index into `simples`, or nullopt.
std::optional<std::vector<int>> match_cartan(
    const std::vector<std::vector<long>>& c, const Realization& std_r) {
  const int n = static_cast<int>(c.size());
  std::vector<int> assign(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int pos) -> bool {
    if (pos == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p) {
        if (c[cand][assign[p]] != std_r.cartan[pos][p] ||
            c[assign[p]][cand] != std_r.cartan[p][pos])
          ok = false;
      }
      if (ok && c[cand][cand] == 2) {
        assign[pos] = cand;
        used[cand] = true;
        if (rec(pos + 1)) return true;
        used[cand] = false;
        assign[pos] = -1;
      }
    }
    return false;
  };
  if (rec(0)) return assign;
  return std::nullopt;
}

}  // namespace

DynkinLabel dynkin_classify(const Realization& R, const Subsystem& sub) {
  if (sub.empty()) throw NotIrreducible("empty subsystem");
  if (irreducible_component(R, sub, sub[0]).size() != sub.size())
    throw NotIrreducible("subsystem is not irreducible");
  std::vector<int> simples = simple_system_of(R, sub);
  const int n = static_cast<int>(simples.size());
  std::vector<std::vector<long>> c(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c[i][j] = to_long(pairing(R.roots[simples[i]], R.roots[simples[j]]));

  // Candidate letters for this rank; for the self-dual rank-2 double bond
  // (B2 = C2 abstractly) prefer the ambient realization's letter so that
  // labels inside C_n come out as C2.
  std::vector<char> letters;
  if (n == 1) letters = {'A'};
  else if (n == 2) letters = {'A', R.letter == 'C' ? 'C' : 'B', 'G'};
  else letters = {'A', 'B', 'C', 'D', 'E', 'F'};
  for (char letter : letters) {
    bool valid = (letter == 'A') || (letter == 'B' && n >= 2) ||
                 (letter == 'C' && n >= 2) || (letter == 'D' && n >= 4) ||
                 (letter == 'E' && n >= 6 && n <= 8) ||
                 (letter == 'F' && n == 4) || (letter == 'G' && n == 2);
    if (!valid) continue;
    const Realization& std_r = build_realization(letter, n);
    if (auto assign = match_cartan(c, std_r)) {
      DynkinLabel lbl;
      lbl.letter = letter;
      lbl.rank = n;
      for (int p = 0; p < n; ++p) lbl.labeling.push_back(simples[(*assign)[p]]);
      return lbl;
    }
  }
  throw InternalError("dynkin_classify: no standard type matched");
}

Vec restrict_weight(const Realization& R, const Vec& lam,
                    const Subsystem& sub) {
  // Pick a basis of QQ*Phi' among the roots, then solve the Gram system
  // <lam', b_i> = <lam, b_i> for lam' = sum c_k b_k.
  SpanBasis span;
  std::vector<int> basis;
  for (int r : sub)
    if (span.add(R.roots[r])) basis.push_back(r);
  if (basis.empty()) return zero_vec(R.dim);
  const int n = static_cast<int>(basis.size());
  std::vector<Vec> gram(n, Vec(n));
  Vec rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = dot(lam, R.roots[basis[i]]);
    for (int j = 0; j < n; ++j)
      gram[i][j] = dot(R.roots[basis[i]], R.roots[basis[j]]);
  }
  Vec c = solve_square(gram, rhs);
  Vec out = zero_vec(R.dim);
  for (int i = 0; i < n; ++i) out = vadd(out, vscale(c[i], R.roots[basis[i]]));
  return out;
}

bool sub_contains(const Subsystem& s, int root) {
  return std::binary_search(s.begin(), s.end(), root);
}

Subsystem sub_intersect(const Subsystem& a, const Subsystem& b) {
  Subsystem out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> positive_members(const Realization& R, const Subsystem& s) {
  std::vector<int> out;
  for (int r : s)
    if (R.positive[r]) out.push_back(r);
  return out;
}

Subsystem full_subsystem(const Realization& R) {
  Subsystem out(R.roots.size());
  for (size_t k = 0; k < R.roots.size(); ++k) out[k] = static_cast<int>(k);
  return out;
}

Vec rho_of(const Realization& R) {
  Vec rho = zero_vec(R.dim);
  for (int p : R.positives) rho = vadd(rho, R.roots[p]);
  return vscale(Rat(1, 2), rho);
}

int span_rank(const Realization& R, const Subsystem& s) {
  SpanBasis b;
  for (int r : s) b.add(R.roots[r]);
  return static_cast<int>(b.rank());
}

std::vector<std::vector<int>> diagram_automorphisms(char letter, int rank) {
  auto identity = [&]() {
    std::vector<int> p(rank + 1);
    for (int i = 1; i <= rank; ++i) p[i] = i;
    return p;
  };
  std::vector<std::vector<int>> out{identity()};
  if (letter == 'A' && rank >= 2) {
    auto p = identity();
    for (int i = 1; i <= rank; ++i) p[i] = rank + 1 - i;
    out.push_back(p);
  } else if (letter == 'D' && rank == 4) {
    // Full S3 on the outer nodes {1,3,4}.
    int nodes[3] = {1, 3, 4};
    int perm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    out.clear();
    for (auto& pr : perm3) {
      auto p = identity();
      for (int k = 0; k < 3; ++k) p[nodes[k]] = nodes[pr[k]];
      out.push_back(p);
    }
  } else if (letter == 'D' && rank >= 5) {
    auto p = identity();
    std::swap(p[rank - 1], p[rank]);
    out.push_back(p);
  } else if (letter == 'E' && rank == 6) {
    auto p = identity();
    p[1] = 6; p[6] = 1; p[3] = 5; p[5] = 3;
    out.push_back(p);
  }
  return out;
}

}  // namespace gvm
