#include "weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace gvm {

Vec reflect(const Realization& R, const Vec& lam, int root) {
  Rat p = pairing(R, lam, root);
  if (p == 0) return lam;
  return vsub(lam, vscale(p, R.roots[root]));
}

DominantizationResult dominantize_by(const Realization& R, Vec lam,
                                     const std::vector<int>& simples,
                                     const std::vector<int>* positives) {
  bool regular = true;
  long inversions = 0;
  if (positives) {
    for (int p : *positives) {
      int s = sgn_of(dot(lam, R.roots[p]));
      if (s == 0) regular = false;
      if (s < 0) ++inversions;
    }
  }
  DominantizationResult out;
  out.steps = 0;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int s : simples) {
      if (pairing(R, lam, s) < 0) {
        lam = reflect(R, lam, s);
        ++out.steps;
        progressed = true;
      }
    }
  }
  out.rep = std::move(lam);
  out.parity = (out.steps % 2 == 0) ? 1 : -1;
  // Normative parity: (-1)^{#inversions} for regular weights; the step
  // count must agree (they can only differ through a bug).
  if (positives && regular && ((inversions % 2 == 0) ? 1 : -1) != out.parity)
    throw InternalError("dominantize parity mismatch with inversion count");
  return out;
}

DominantizationResult dominantize(const Realization& R, const Vec& lam,
                                  const ParabolicData& pd) {
  std::vector<int> simples;
  for (int i : pd.included) simples.push_back(R.simples[i - 1]);
  if (!is_levi_integral(R, lam, pd.phi_I))
    throw NotIntegralOnI("weight is not integral on Phi_I");
  std::vector<int> pos = positive_members(R, pd.phi_I);
  return dominantize_by(R, lam, simples, &pos);
}

DominantizationResult dominantize_full(const Realization& R, const Vec& lam) {
  std::vector<int> pos = R.positives;
  if (!is_levi_integral(R, lam, full_subsystem(R)))
    throw NotIntegralOnI("weight is not integral");
  return dominantize_by(R, lam, R.simples, &pos);
}

bool is_levi_integral(const Realization& R, const Vec& lam,
                      const Subsystem& levi) {
  for (int r : levi)
    if (!is_integer(pairing(R, lam, r))) return false;
  return true;
}

bool is_levi_regular(const Realization& R, const Vec& lam,
                     const Subsystem& levi) {
  for (int r : levi)
    if (dot(lam, R.roots[r]) == 0) return false;
  return true;
}

bool is_in_lambda_I_plus(const Realization& R, const Vec& lam,
                         const ParabolicData& pd) {
  for (int i : pd.included) {
    Rat p = pairing(R, lam, R.simples[i - 1]);
    if (!is_integer(p) || p <= 0) return false;
  }
  return true;
}

int sign_function(const Realization& R, const Vec& lam, const Vec& mu,
                  const ParabolicData& pd) {
  if (!is_levi_integral(R, lam, pd.phi_I) ||
      !is_levi_integral(R, mu, pd.phi_I))
    throw NotIntegralOnI("sign function requires Phi_I-integral weights");
  if (!is_levi_regular(R, lam, pd.phi_I) ||
      !is_levi_regular(R, mu, pd.phi_I))
    return 0;
  auto a = dominantize(R, lam, pd);
  auto b = dominantize(R, mu, pd);
  if (a.rep != b.rep) return 0;
  return a.parity * b.parity;
}

// ---- orbit enumeration ----

Rat OrbitSet::state_pairing(size_t k, int simple_pos) const {
  return integral ? Rat(istates[k][simple_pos]) : qstates[k][simple_pos];
}

Vec OrbitSet::member(size_t k) const {
  Vec out = perp;
  for (int i = 0; i < R->rank; ++i)
    out = vadd(out, vscale(state_pairing(k, i), R->fundamental[i]));
  return out;
}

std::vector<Vec> OrbitSet::members() const {
  std::vector<Vec> out;
  out.reserve(size());
  for (size_t k = 0; k < size(); ++k) out.push_back(member(k));
  return out;
}

namespace {

std::string ikey(const std::vector<long>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()),
                     v.size() * sizeof(long));
}

std::string qkey(const Vec& v) { return vec_str(v); }

}  // namespace

OrbitSet weyl_orbit(const Realization& R, const Vec& lam, size_t cap) {
  OrbitSet out;
  out.R = &R;
  out.base = lam;
  const int n = R.rank;

  // The orbit is determined by the coroot-pairing vector against Delta;
  // the component of lambda orthogonal to QQ*Phi is W-invariant.
  Vec p0(n);
  bool integral = true;
  for (int i = 0; i < n; ++i) {
    p0[i] = pairing(R, lam, R.simples[i]);
    if (!is_integer(p0[i])) integral = false;
  }
  out.perp = lam;
  for (int i = 0; i < n; ++i)
    out.perp = vsub(out.perp, vscale(p0[i], R.fundamental[i]));
  out.integral = integral;

  if (integral) {
    std::vector<long> start(n);
    for (int i = 0; i < n; ++i) start[i] = to_long(p0[i]);
    std::unordered_set<std::string> seen;
    std::deque<std::vector<long>> queue;
    seen.insert(ikey(start));
    queue.push_back(start);
    out.istates.push_back(start);
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (cur[j] == 0) continue;
        std::vector<long> nxt(n);
        for (int k = 0; k < n; ++k)
          nxt[k] = cur[k] - R.cartan[j][k] * cur[j];
        if (seen.insert(ikey(nxt)).second) {
          if (seen.size() > cap) throw OrbitTooLarge("orbit cap exceeded");
          out.istates.push_back(nxt);
          queue.push_back(std::move(nxt));
        }
      }
    }
  } else {
    std::unordered_set<std::string> seen;
    std::deque<Vec> queue;
    seen.insert(qkey(p0));
    queue.push_back(p0);
    out.qstates.push_back(p0);
    while (!queue.empty()) {
      Vec cur = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (cur[j] == 0) continue;
        Vec nxt(n);
        for (int k = 0; k < n; ++k)
          nxt[k] = cur[k] - Rat(R.cartan[j][k]) * cur[j];
        if (seen.insert(qkey(nxt)).second) {
          if (seen.size() > cap) throw OrbitTooLarge("orbit cap exceeded");
          out.qstates.push_back(nxt);
          queue.push_back(std::move(nxt));
        }
      }
    }
  }
  return out;
}

// ---- group enumeration ----

std::vector<GroupElement> enumerate_group(const Realization& R,
                                          const Subsystem& phi, size_t cap) {
  std::vector<int> gens = simple_system_of(R, phi);
  const int m = static_cast<int>(phi.size());
  auto pos_of = [&](int root) {
    auto it = std::lower_bound(phi.begin(), phi.end(), root);
    if (it == phi.end() || *it != root)
      throw InternalError("enumerate_group: reflection left the subsystem");
    return static_cast<int>(it - phi.begin());
  };
  // Action of each generator on phi's root list.
  std::vector<std::vector<int>> gen_perm;
  for (int g : gens) {
    std::vector<int> p(m);
    for (int k = 0; k < m; ++k) {
      Vec img = reflect(R, R.roots[phi[k]], g);
      p[k] = pos_of(R.root_index(img));
    }
    gen_perm.push_back(std::move(p));
  }

  std::vector<GroupElement> out;
  std::map<std::vector<int>, int> seen;
  GroupElement id;
  id.perm.resize(m);
  for (int k = 0; k < m; ++k) id.perm[k] = k;
  seen[id.perm] = 0;
  out.push_back(id);
  // BFS in the Cayley graph: levels are Coxeter lengths.
  for (size_t head = 0; head < out.size(); ++head) {
    GroupElement cur = out[head];  // copy: out may reallocate
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      GroupElement nxt;
      nxt.perm.resize(m);
      for (int k = 0; k < m; ++k) nxt.perm[k] = gen_perm[gi][cur.perm[k]];
      if (seen.count(nxt.perm)) continue;
      nxt.word = cur.word;
      nxt.word.insert(nxt.word.begin(), gens[gi]);
      nxt.length = cur.length + 1;
      nxt.parity = -cur.parity;
      seen[nxt.perm] = static_cast<int>(out.size());
      out.push_back(std::move(nxt));
      if (out.size() > cap)
        throw OracleCapExceeded("group enumeration cap exceeded");
    }
  }
  return out;
}

Vec apply_word(const Realization& R, const std::vector<int>& word, Vec lam) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    lam = reflect(R, lam, *it);
  return lam;
}

Vec apply_word_inverse(const Realization& R, const std::vector<int>& word,
                       Vec lam) {
  for (int r : word) lam = reflect(R, lam, r);
  return lam;
}

std::vector<GroupElement> stabilizer_brute(const Realization& R,
                                           const Vec& lam) {
  if (R.rank > 4)
    throw RankTooLargeForOracle("stabilizer_brute is a rank <= 4 oracle");
  auto all = enumerate_group(R, full_subsystem(R), 100000);
  std::vector<GroupElement> out;
  for (const auto& w : all)
    if (apply_word(R, w.word, lam) == lam) out.push_back(w);
  return out;
}

}  // namespace gvm
