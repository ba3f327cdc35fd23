// rootsys.hpp — standard realizations of the finite root systems and the
// exact subsystem / linear-algebra primitives built on them.
//
// Conventions:
//   * Bourbaki numbering of simple roots throughout.
//   * Ambient coordinates: A_n lives in n+1 coordinates (sum-zero span),
//     B_n/C_n/D_n in n, F4 in 4, G2 in 3 (with alpha_1 = e1-e2 and
//     alpha_2 = -2e1+e2+e3), and E6/E7 are realized inside the 8-coordinate
//     E8 space.
//   * Roots are stored once in an immutable table; everything downstream
//     refers to them by index.  A Subsystem is a sorted, negation-closed
//     set of root indices.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rational.hpp"

namespace gvm {

using Subsystem = std::vector<int>;  // sorted root indices, negation-closed

struct Realization {
  char letter = '?';
  int rank = 0;
  int dim = 0;  // ambient dimension

  std::vector<Vec> roots;               // all roots of Phi
  std::vector<bool> positive;           // positivity w.r.t. Delta
  std::vector<int> neg;                 // index of -roots[k]
  std::vector<Rat> norm;                // <alpha, alpha>
  std::vector<int> simples;             // root indices, Bourbaki order
  std::vector<Vec> fundamental;         // varpi_1 ... varpi_rank (in QQ*Phi)
  std::vector<std::vector<long>> cartan;  // cartan[i][j] = <a_i, a_j^vee>
  std::vector<std::vector<long>> simple_coords;  // root -> coords over Delta
  std::vector<int> positives;           // indices of positive roots
  int highest = -1;                     // index of the highest root
  int highest_short = -1;               // highest short root (== highest when
                                        // simply laced)

  int root_index(const Vec& v) const {
    auto it = index_.find(wkey(v));
    return it == index_.end() ? -1 : it->second;
  }

  int height(int r) const {
    long h = 0;
    for (long c : simple_coords[r]) h += c;
    return static_cast<int>(h);
  }

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }

  std::unordered_map<std::string, int> index_;  // wkey -> root index
};

// Parabolic data: I is given by its complement ("crossed" Bourbaki indices,
// 1-based), matching the paper's q-notation.
struct ParabolicData {
  const Realization* R = nullptr;
  std::vector<int> crossed;       // sorted, 1-based
  std::vector<int> included;      // sorted, 1-based (the set I)
  Subsystem phi_I;                // root indices of Phi_I
};

const Realization& build_realization(char letter, int rank);
ParabolicData make_parabolic(const Realization& R,
                             const std::vector<int>& crossed);

// <lambda, alpha^vee> = 2<lambda, alpha>/<alpha, alpha>
Rat pairing(const Realization& R, const Vec& lam, int root);
Rat pairing(const Vec& lam, const Vec& alpha);

// Phi_lambda = { alpha : <lambda, alpha> = 0 }
Subsystem singular_subsystem(const Realization& R, const Vec& lam);
// Phi_[lambda] = { alpha : <lambda, alpha^vee> in Z }
Subsystem integral_subsystem(const Realization& R, const Vec& lam);
// (QQ-span of the seeds) ∩ Phi
Subsystem span_intersect(const Realization& R, const std::vector<Vec>& seeds);
// Irreducible (non-orthogonality) component of beta inside sub
Subsystem irreducible_component(const Realization& R, const Subsystem& sub,
                                int beta);
// Simple system of sub relative to sub ∩ Phi^+
std::vector<int> simple_system_of(const Realization& R, const Subsystem& sub);

struct DynkinLabel {
  char letter;
  int rank;
  std::vector<int> labeling;  // Bourbaki position (0-based) -> root index
};
// Classify an irreducible subsystem; throws NotIrreducible otherwise.
DynkinLabel dynkin_classify(const Realization& R, const Subsystem& sub);

// lambda|_{Phi'} — unique weight in QQ*Phi' with the same coroot pairings
Vec restrict_weight(const Realization& R, const Vec& lam, const Subsystem& sub);

// ---- small set utilities on subsystems ----

bool sub_contains(const Subsystem& s, int root);
Subsystem sub_intersect(const Subsystem& a, const Subsystem& b);
std::vector<int> positive_members(const Realization& R, const Subsystem& s);
Subsystem full_subsystem(const Realization& R);

// Half-sum of the positive roots of Phi.
Vec rho_of(const Realization& R);

// Rank of the rational span of a set of roots.
int span_rank(const Realization& R, const Subsystem& s);

// Diagram automorphism group of an irreducible type as permutations of
// 1..rank (Bourbaki indices); always contains the identity.
std::vector<std::vector<int>> diagram_automorphisms(char letter, int rank);

}  // namespace gvm
