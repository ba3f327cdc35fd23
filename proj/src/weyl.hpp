// weyl.hpp — Weyl-group actions: reflections, dominant representatives with
// length parity, orbit enumeration, the sign function, and brute-force
// group enumeration for oracles.

#pragma once

#include <vector>

#include "rootsys.hpp"

namespace gvm {

// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha
Vec reflect(const Realization& R, const Vec& lam, int root);

struct DominantizationResult {
  Vec rep;
  int parity = 1;  // (-1)^steps
  long steps = 0;
};

// Dominantize w.r.t. the reflection group generated by `simples` (root
// indices forming a simple system).  When `positives` is supplied and the
// input is regular for the subsystem, the step parity is cross-checked
// against the inversion-count formula (the normative definition).
DominantizationResult dominantize_by(const Realization& R, Vec lam,
                                     const std::vector<int>& simples,
                                     const std::vector<int>* positives);

// Dominantize w.r.t. W_I; requires lambda to be Phi_I-integral.
DominantizationResult dominantize(const Realization& R, const Vec& lam,
                                  const ParabolicData& pd);
// Dominantize w.r.t. the full Weyl group (integral lambda).
DominantizationResult dominantize_full(const Realization& R, const Vec& lam);

bool is_levi_integral(const Realization& R, const Vec& lam, const Subsystem& levi);
bool is_levi_regular(const Realization& R, const Vec& lam, const Subsystem& levi);
bool is_in_lambda_I_plus(const Realization& R, const Vec& lam,
                         const ParabolicData& pd);

// Sign function of two Phi_I-integral weights: 0 unless both are
// Phi_I-regular with a common I-dominant representative, otherwise the
// product of the two dominantization parities.
int sign_function(const Realization& R, const Vec& lam, const Vec& mu,
                  const ParabolicData& pd);

// ---- orbits ----

struct OrbitSet {
  const Realization* R = nullptr;
  Vec base;
  Vec perp;  // component of base orthogonal to QQ*Phi (W-invariant)
  bool integral = false;
  // BFS states are coroot-pairing vectors against Delta; the integral fast
  // path stores them as machine integers.
  std::vector<std::vector<long>> istates;
  std::vector<Vec> qstates;

  size_t size() const { return integral ? istates.size() : qstates.size(); }
  Rat state_pairing(size_t k, int simple_pos) const;
  Vec member(size_t k) const;  // reconstruct ambient coordinates
  std::vector<Vec> members() const;
};

OrbitSet weyl_orbit(const Realization& R, const Vec& lam,
                    size_t cap = 10'000'000);

// ---- brute-force group enumeration (oracles and property tests) ----

struct GroupElement {
  std::vector<int> word;  // reflection word, apply right-to-left
  long length = 0;        // Coxeter length w.r.t. the subsystem
  int parity = 1;
  std::vector<int> perm;  // action on the subsystem's root list (positions)
};

// Enumerate W(phi) for a subsystem phi; elements are keyed by their action
// on phi's roots.  Throws OracleCapExceeded past `cap` elements.
std::vector<GroupElement> enumerate_group(const Realization& R,
                                          const Subsystem& phi, size_t cap);

Vec apply_word(const Realization& R, const std::vector<int>& word, Vec lam);
Vec apply_word_inverse(const Realization& R, const std::vector<int>& word,
                       Vec lam);

// Brute-force isotropy group of lambda in W (rank <= 4 only; test oracle).
std::vector<GroupElement> stabilizer_brute(const Realization& R,
                                           const Vec& lam);

}  // namespace gvm
