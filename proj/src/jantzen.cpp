#include "jantzen.hpp"

#include <algorithm>

namespace gvm {

Ctx make_ctx(const ParabolicData& pd) {
  return make_sub_ctx(*pd.R, full_subsystem(*pd.R), pd.phi_I);
}

Ctx make_sub_ctx(const Realization& R, Subsystem sys, Subsystem levi) {
  Ctx c;
  c.R = &R;
  c.sys = std::move(sys);
  c.levi = std::move(levi);
  c.levi_simples = simple_system_of(R, c.levi);
  c.sys_pos = positive_members(R, c.sys);
  c.levi_pos = positive_members(R, c.levi);
  return c;
}

bool ctx_in_lambda_plus(const Ctx& c, const Vec& lam) {
  for (int s : c.levi_simples) {
    Rat p = pairing(*c.R, lam, s);
    if (!is_integer(p) || p <= 0) return false;
  }
  return true;
}

DominantizationResult ctx_dominantize(const Ctx& c, const Vec& lam) {
  return dominantize_by(*c.R, lam, c.levi_simples, &c.levi_pos);
}

PsiSets psi_sets(const Vec& lam, const Ctx& c) {
  if (!ctx_in_lambda_plus(c, lam))
    throw NotInLambdaIPlus("psi_sets: weight not in Lambda_I^+");
  PsiSets out;
  for (int b : c.sys_pos) {
    if (sub_contains(c.levi, b)) continue;
    Rat p = pairing(*c.R, lam, b);
    if (!is_integer(p) || p <= 0) continue;
    out.psi_plus.push_back(b);
    Vec refl = reflect(*c.R, lam, b);
    if (is_levi_regular(*c.R, refl, c.levi)) out.psi_plus_plus.push_back(b);
  }
  return out;
}

CoefficientRow jantzen_row(const Vec& lam, const Ctx& c) {
  PsiSets psi = psi_sets(lam, c);
  CoefficientRow row;
  row.lambda = lam;
  for (int b : psi.psi_plus_plus) {
    DominantizationResult d = ctx_dominantize(c, reflect(*c.R, lam, b));
    auto& entry = row.produced[wkey(d.rep)];
    if (entry.contributors.empty()) entry.mu = d.rep;
    entry.total += d.parity;
    entry.contributors.emplace_back(b, d.parity);
  }
  return row;
}

long jantzen_coefficient(const Vec& lam, const Vec& mu, const Ctx& c) {
  if (!ctx_in_lambda_plus(c, lam) || !ctx_in_lambda_plus(c, mu))
    throw NotInLambdaIPlus("jantzen_coefficient: weights not in Lambda_I^+");
  // The row of lam only produces strictly lower targets, so query both
  // sides (Definition 4.1's symmetric extension).
  long v = jantzen_row(lam, c).coefficient_at(mu);
  if (v != 0) return v;
  return jantzen_row(mu, c).coefficient_at(lam);
}

SimplicityResult is_simple(const Vec& lam, const Ctx& c) {
  CoefficientRow row = jantzen_row(lam, c);
  SimplicityResult out;
  for (const auto& [key, e] : row.produced) {
    if (e.total == 0) continue;
    out.simple = false;
    out.witness_beta = e.contributors.front().first;
    out.witness_mu = e.mu;
    out.witness_c = e.total;
    break;  // produced is ordered by weight key: deterministic witness
  }
  return out;
}

FormalVermaSum theta_expand(const Vec& lam, const Ctx& c, size_t cap) {
  auto group = enumerate_group(*c.R, c.levi, cap);
  FormalVermaSum out;
  for (const auto& w : group) {
    Vec img = apply_word(*c.R, w.word, lam);
    auto& slot = out[wkey(img)];
    if (slot.first.empty()) slot.first = img;
    slot.second += w.parity;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.second == 0 ? out.erase(it) : std::next(it);
  return out;
}

CoefficientRow sum_formula_oracle(const Vec& lam, const Ctx& c, size_t cap) {
  PsiSets psi = psi_sets(lam, c);
  auto group = enumerate_group(*c.R, c.levi, cap);

  // Full expansion of sum_{beta in Psi+} theta(s_beta lam) in the Verma
  // basis.  Terms coming from Phi_I-singular s_beta(lam) cancel here by
  // themselves (Prop. 3.2(2)).
  FormalVermaSum total;
  for (int b : psi.psi_plus) {
    Vec refl = reflect(*c.R, lam, b);
    for (const auto& w : group) {
      Vec img = apply_word(*c.R, w.word, refl);
      auto& slot = total[wkey(img)];
      if (slot.first.empty()) slot.first = img;
      slot.second += w.parity;
    }
  }

  // Re-collect into I-dominant representatives: the coefficient of
  // [M_I(mu)] must reproduce every Verma term of theta(mu).
  CoefficientRow row;
  row.lambda = lam;
  std::map<std::string, long> remaining;
  for (const auto& [k, v] : total)
    if (v.second != 0) remaining[k] = v.second;
  for (const auto& [k, v] : total) {
    if (v.second == 0 || !remaining.count(k)) continue;
    if (!is_levi_regular(*c.R, v.first, c.levi))
      throw InternalError("oracle: singular Verma term survived");
    DominantizationResult d = ctx_dominantize(c, v.first);
    long coeff = v.second * d.parity;
    // Consume the whole W_I-orbit of mu and check consistency.
    for (const auto& w : group) {
      Vec img = apply_word(*c.R, w.word, d.rep);
      auto it = remaining.find(wkey(img));
      if (it == remaining.end() || it->second != coeff * w.parity)
        throw InternalError("oracle: inconsistent theta expansion");
      remaining.erase(it);
    }
    auto& entry = row.produced[wkey(d.rep)];
    entry.mu = d.rep;
    entry.total = coeff;
  }
  if (!remaining.empty())
    throw InternalError("oracle: leftover Verma terms");
  return row;
}

}  // namespace gvm
