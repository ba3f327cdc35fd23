#include "classical.hpp"

#include <algorithm>

namespace gvm {

namespace {

bool is_classical(char c) {
  return c == 'A' || c == 'B' || c == 'C' || c == 'D';
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Nonzero coordinates of a root, as (1-based index, value) pairs.
std::vector<std::pair<int, Rat>> support(const Vec& v) {
  std::vector<std::pair<int, Rat>> out;
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(static_cast<int>(k) + 1, v[k]);
  return out;
}

Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

bool pos_int(const Rat& x) { return x > 0 && is_integer(x); }
bool pos_half_int(const Rat& x) { return x > 0 && is_integer(Rat(2) * x); }

}  // namespace

bool is_standard(const Realization& R, const std::vector<int>& crossed) {
  if (R.letter != 'D') return true;
  return !(contains(crossed, R.rank - 1) && !contains(crossed, R.rank));
}

Vec phi_map(const Vec& v) {
  Vec out = v;
  out.back() = -out.back();
  return out;
}

std::vector<int> phi_crossed(const Realization& R,
                             const std::vector<int>& crossed) {
  const int n = R.rank;
  std::vector<int> out;
  for (int c : crossed) {
    if (c == n - 1)
      out.push_back(n);
    else if (c == n)
      out.push_back(n - 1);
    else
      out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int SegmentData::segment_of(int i) const {
  for (int s = 1; s <= m; ++s)
    if (q[s - 1] < i && i <= q[s]) return s;
  throw InternalError("coordinate index outside all segments");
}

SegmentData segment_data(const Realization& R,
                         const std::vector<int>& crossed) {
  const int n = R.rank;
  SegmentData sd;
  sd.m = static_cast<int>(crossed.size()) + 1;
  sd.q.push_back(0);
  for (int c : crossed) sd.q.push_back(c);
  sd.q.push_back(n + 1);
  bool standard = is_standard(R, crossed);

  sd.segments.resize(sd.m);
  for (int s = 1; s <= sd.m; ++s) {
    if (!standard && s == sd.m - 1) {
      // q_{m-1} = n-1; the segment absorbs alpha_n instead of alpha_{n-1}.
      for (int i = sd.q[s - 1] + 1; i < n - 1; ++i) sd.segments[s - 1].push_back(i);
      sd.segments[s - 1].push_back(n);
      continue;
    }
    if (!standard && s == sd.m) break;  // I_m = empty
    int hi = (s == sd.m) ? n : sd.q[s] - 1;
    for (int i = sd.q[s - 1] + 1; i <= hi; ++i) sd.segments[s - 1].push_back(i);
  }
  for (int s = 1; s <= sd.m; ++s) {
    int sz = static_cast<int>(sd.segments[s - 1].size());
    sd.n_s.push_back(s < sd.m ? sz + 1 : sz);
  }
  return sd;
}

std::pair<int, int> c_indices(const Realization& R,
                              const std::vector<int>& crossed,
                              const Vec& beta) {
  if (!is_standard(R, crossed))
    return c_indices(R, phi_crossed(R, crossed), phi_map(beta));
  SegmentData sd = segment_data(R, crossed);
  auto sup = support(beta);
  if (sup.size() == 1) return {sd.segment_of(sup[0].first), sd.m};
  int s = sd.segment_of(sup[0].first);
  int t = sd.segment_of(sup[1].first);
  return {s, t > s ? t : sd.m};
}

std::pair<Rat, Rat> d_indices(const Vec& lambda, const Vec& beta) {
  auto sup = support(beta);
  Rat x = rat_abs(lambda[sup[0].first - 1]);
  if (sup.size() == 1) return {x, Rat(0)};
  Rat y = rat_abs(lambda[sup[1].first - 1]);
  if (x == y) return {x, Rat(0)};
  return x > y ? std::pair<Rat, Rat>{x, y} : std::pair<Rat, Rat>{y, x};
}

Subsystem phi_lambda_a(const Realization& R, const Vec& lambda, const Rat& a) {
  Subsystem out;
  for (int r : singular_subsystem(R, lambda))
    if (d_indices(lambda, R.roots[r]).first == a) out.push_back(r);
  return out;
}

std::vector<int> k_set(const Vec& lambda, const Rat& z) {
  std::vector<int> out;
  for (size_t i = 0; i < lambda.size(); ++i)
    if (is_integer(lambda[i] - z)) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Subsystem phi_z(const Realization& R, const Vec& lambda, const Rat& z) {
  if (!is_classical(R.letter) || R.letter == 'A')
    throw WrongType("congruence blocks are defined for types B, C, D");
  bool half = is_integer(Rat(2) * z);
  auto in = [&](const std::vector<int>& K, int i) {
    return std::binary_search(K.begin(), K.end(), i);
  };
  Subsystem out;
  if (!half) {
    std::vector<int> K = k_set(lambda, z), K2 = k_set(lambda, Rat(1) - z);
    for (size_t r = 0; r < R.roots.size(); ++r) {
      auto sup = support(R.roots[r]);
      if (sup.size() != 2) continue;
      int i = sup[0].first, j = sup[1].first;
      bool diff = (sup[0].second * sup[1].second) < 0;
      bool keep = diff ? ((in(K, i) && in(K, j)) || (in(K2, i) && in(K2, j)))
                       : ((in(K, i) && in(K2, j)) || (in(K2, i) && in(K, j)));
      if (keep) out.push_back(static_cast<int>(r));
    }
    return out;
  }
  std::vector<int> K = k_set(lambda, z);
  // Whether the short (B) / long (C) one-coordinate roots belong to the block.
  bool with_single =
      (R.letter == 'B') || (R.letter == 'C' && is_integer(z));
  for (size_t r = 0; r < R.roots.size(); ++r) {
    auto sup = support(R.roots[r]);
    if (sup.size() == 1 && !with_single) continue;
    bool keep = true;
    for (auto& [i, v] : sup)
      if (!in(K, i)) keep = false;
    if (keep) out.push_back(static_cast<int>(r));
  }
  return out;
}

std::vector<std::pair<Rat, Subsystem>> congruence_decomposition(
    const Realization& R, const Vec& lambda) {
  std::vector<Rat> reps;
  for (const Rat& x : lambda) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(),
               x.get_den().get_mpz_t());
    Rat f = x - Rat(fl);
    if (f > Rat(1, 2)) f = Rat(1) - f;
    if (std::find(reps.begin(), reps.end(), f) == reps.end()) reps.push_back(f);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<std::pair<Rat, Subsystem>> out;
  for (const Rat& z : reps) {
    Subsystem block = phi_z(R, lambda, z);
    if (!block.empty()) out.emplace_back(z, block);
  }
  return out;
}

Subsystem closed_form_parabolic(const Realization& R, const ParabolicData& pd,
                                int beta) {
  if (!is_standard(R, pd.crossed)) {
    ParabolicData pd2 = make_parabolic(R, phi_crossed(R, pd.crossed));
    int beta2 = R.root_index(phi_map(R.roots[beta]));
    Subsystem sub = closed_form_parabolic(R, pd2, beta2);
    Subsystem out;
    for (int r : sub) out.push_back(R.root_index(phi_map(R.roots[r])));
    std::sort(out.begin(), out.end());
    return out;
  }
  SegmentData sd = segment_data(R, pd.crossed);
  auto [s, t] = c_indices(R, pd.crossed, R.roots[beta]);
  std::vector<Vec> seeds = {R.roots[beta]};
  for (int i : sd.segments[s - 1]) seeds.push_back(R.roots[R.simples[i - 1]]);
  for (int i : sd.segments[t - 1]) seeds.push_back(R.roots[R.simples[i - 1]]);
  return irreducible_component(R, span_intersect(R, seeds), beta);
}

Subsystem closed_form_singular(const Realization& R, const Vec& lambda,
                               int beta) {
  auto [a, b] = d_indices(lambda, R.roots[beta]);
  std::vector<Vec> seeds = {R.roots[beta]};
  for (int r : phi_lambda_a(R, lambda, a)) seeds.push_back(R.roots[r]);
  for (int r : phi_lambda_a(R, lambda, b)) seeds.push_back(R.roots[r]);
  return irreducible_component(R, span_intersect(R, seeds), beta);
}

namespace {

// The vanishing conditions of the classical simplicity theorems, evaluated
// for standard I.  beta is given by its ambient coordinates.
bool vanishes_standard(const Realization& R, const std::vector<int>& crossed,
                       const Vec& lam, const Vec& beta) {
  const int n = R.rank;
  SegmentData sd = segment_data(R, crossed);
  const int m = sd.m;
  auto block = [&](int s) {  // coordinate range q_{s-1} < k <= q_s
    std::vector<int> out;
    for (int k = sd.q[s - 1] + 1; k <= std::min(sd.q[s], n); ++k)
      out.push_back(k);
    return out;
  };
  std::vector<int> last = block(m);  // q_{m-1} < l <= n (empty if q_{m-1}=n)
  auto sup = support(beta);

  if (R.letter == 'B' || R.letter == 'C') {
    auto lead_ok = [&](const Rat& x) {
      return R.letter == 'B' ? pos_half_int(x) : pos_int(x);
    };
    auto cond1_tail = [&](int i) {  // common part of condition (i)
      for (int k : block(sd.segment_of(i)))
        if (lam[k - 1] == 0 || lam[k - 1] == -lam[i - 1]) return false;
      return true;
    };
    auto cond2_tail = [&](int i) {  // common part of condition (ii)
      for (int k : block(sd.segment_of(i)))
        if (lam[k - 1] == -lam[i - 1]) return false;
      for (int l : last)
        if (lam[l - 1] == lam[i - 1]) return false;
      return true;
    };
    if (sup.size() == 1) {  // beta = e_i (B) or 2e_i (C)
      int i = sup[0].first;
      int s = sd.segment_of(i);
      if (s == m) return false;
      bool c1 = lead_ok(lam[i - 1]) && cond1_tail(i) &&
                std::any_of(last.begin(), last.end(), [&](int j) {
                  return lam[j - 1] == lam[i - 1];
                });
      std::vector<int> blk = block(s);
      bool c2 = pos_int(lam[i - 1]) && cond2_tail(i) &&
                std::any_of(blk.begin(), blk.end(), [&](int j) {
                  return j > i && lam[j - 1] == 0;
                });
      return c1 || c2;
    }
    int i = sup[0].first, j = sup[1].first;
    if (sup[0].second * sup[1].second < 0) return false;  // e_i - e_j
    int s = sd.segment_of(i), t = sd.segment_of(j);
    if (s < m && t == m)
      return lam[i - 1] == lam[j - 1] && lead_ok(lam[i - 1]) && cond1_tail(i);
    if (s == t && s < m)
      return pos_int(lam[i - 1]) && lam[j - 1] == 0 && cond2_tail(i);
    return false;
  }

  // Type D, condition (iii).
  if (sup.size() != 2 || sup[0].second * sup[1].second < 0) return false;
  int i = sup[0].first, j = sup[1].first;
  int s = sd.segment_of(i), t = sd.segment_of(j);
  if (s == m || lam[n - 1] != 0) return false;
  auto seg_ok = [&](void) {
    for (int l : block(s))
      if (lam[l - 1] == -lam[i - 1]) return false;
    return true;
  };
  if (s == t) {  // beta = e_i + e_j inside one segment; need partner e_k
    if (!(pos_int(lam[i - 1]) && lam[j - 1] == 0 && seg_ok())) return false;
    for (int k : last)
      if (k < n && lam[k - 1] == lam[i - 1]) return true;
    return false;
  }
  if (t == m && j < n) {  // beta = e_i + e_k; need partner e_j with lam_j = 0
    if (!(lam[i - 1] == lam[j - 1] && pos_int(lam[i - 1]) && seg_ok()))
      return false;
    for (int jj : block(s))
      if (jj > i && lam[jj - 1] == 0) return true;
    return false;
  }
  return false;
}

bool vanishes_dispatch(const Realization& R, const ParabolicData& pd,
                       const Vec& lam, int beta) {
  if (R.letter == 'A') return false;
  if (is_standard(R, pd.crossed))
    return vanishes_standard(R, pd.crossed, lam, R.roots[beta]);
  return vanishes_standard(R, phi_crossed(R, pd.crossed), phi_map(lam),
                           phi_map(R.roots[beta]));
}

}  // namespace

bool theorem_d_vanishes(const Realization& R, const ParabolicData& pd,
                        const Vec& lambda, int beta) {
  if (!is_classical(R.letter))
    throw WrongType("classical criterion requires type A, B, C or D");
  Ctx ctx = make_ctx(pd);
  PsiSets ps = psi_sets(lambda, ctx);
  if (!contains(ps.psi_plus_plus, beta))
    throw RootNotInPsiPlus("root is not in Psi++ of the weight");
  return vanishes_dispatch(R, pd, lambda, beta);
}

bool classical_is_simple(const Realization& R, const ParabolicData& pd,
                         const Vec& lambda) {
  if (!is_classical(R.letter))
    throw WrongType("classical criterion requires type A, B, C or D");
  Ctx ctx = make_ctx(pd);
  PsiSets ps = psi_sets(lambda, ctx);
  if (R.letter == 'A') return ps.psi_plus_plus.empty();
  for (int beta : ps.psi_plus_plus)
    if (!vanishes_dispatch(R, pd, lambda, beta)) return false;
  return true;
}

}  // namespace gvm
