// jantzen.hpp — Psi sets, Jantzen coefficient rows, simplicity, and the
// brute-force theta-expansion oracles.
//
// Everything here is relativized to a Ctx = (ambient subsystem, parabolic
// part) so the same code serves the full root system and the reduced
// triples produced by module reduction.

#pragma once

#include <map>
#include <vector>

#include "rootsys.hpp"
#include "weyl.hpp"

namespace gvm {

struct Ctx {
  const Realization* R = nullptr;
  Subsystem sys;                   // ambient subsystem (Phi by default)
  Subsystem levi;                  // parabolic part inside sys
  std::vector<int> levi_simples;   // simple system of the parabolic part
  std::vector<int> sys_pos;        // positive members of sys
  std::vector<int> levi_pos;       // positive members of levi
};

Ctx make_ctx(const ParabolicData& pd);
Ctx make_sub_ctx(const Realization& R, Subsystem sys, Subsystem levi);

bool ctx_in_lambda_plus(const Ctx& c, const Vec& lam);
DominantizationResult ctx_dominantize(const Ctx& c, const Vec& lam);

struct PsiSets {
  std::vector<int> psi_plus;       // positive root indices
  std::vector<int> psi_plus_plus;  // subset keeping s_beta(lam) regular
};

PsiSets psi_sets(const Vec& lam, const Ctx& c);

struct RowEntry {
  Vec mu;
  long total = 0;
  std::vector<std::pair<int, int>> contributors;  // (root index, sign)
};

struct CoefficientRow {
  Vec lambda;
  // All produced targets, including totals that cancelled to zero (the
  // contributor lists are the debugging witness for such cancellations);
  // keyed by the canonical weight string.
  std::map<std::string, RowEntry> produced;

  std::vector<const RowEntry*> nonzero() const {
    std::vector<const RowEntry*> out;
    for (const auto& [k, e] : produced)
      if (e.total != 0) out.push_back(&e);
    return out;
  }
  long coefficient_at(const Vec& mu) const {
    auto it = produced.find(wkey(mu));
    return it == produced.end() ? 0 : it->second.total;
  }
};

// c(lam, mu) = sum over beta in Psi++ of the dominantization
// parity of s_beta(lam).
CoefficientRow jantzen_row(const Vec& lam, const Ctx& c);

// Symmetric-extension lookup: row of lam, then row of mu, else 0.
long jantzen_coefficient(const Vec& lam, const Vec& mu, const Ctx& c);

struct SimplicityResult {
  bool simple = true;
  int witness_beta = -1;
  Vec witness_mu;
  long witness_c = 0;
};

SimplicityResult is_simple(const Vec& lam, const Ctx& c);

// theta(lam) = sum over w in W_I of (-1)^{l(w)} [M(w lam)], as an explicit
// map from weights to integer coefficients (oracle; capped).
using FormalVermaSum = std::map<std::string, std::pair<Vec, long>>;

FormalVermaSum theta_expand(const Vec& lam, const Ctx& c, size_t cap = 10000);

// Expand sum over beta in Psi+ of theta(s_beta lam) in the Verma basis,
// then re-collect into I-dominant representatives; must equal jantzen_row.
CoefficientRow sum_formula_oracle(const Vec& lam, const Ctx& c,
                                  size_t cap = 10000);

}  // namespace gvm
