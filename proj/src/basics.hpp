// basics.hpp — classification of the basic systems: the height/rho bound
// vectors, candidate filtering, enumeration of basic weights, the
// coefficient tables with their posets, and the full rank sweep.

#pragma once

#include <vector>

#include "golden.hpp"
#include "jantzen.hpp"
#include "rootsys.hpp"

namespace gvm {

// Per-simple-root bounds (1-based positions shifted down to 0-based):
//   a[j]  = (<alpha_j, alpha_j>/2) * ht_j(beta_0)
//   b[i]  = max{0, <rho, beta> : beta in Phi_I^+},  I = Delta \ {alpha_i}
// and the short-root analogues (equal to a/b for simply-laced types).
struct BoundVectors {
  std::vector<Rat> a, a_short, b, b_short;
};

BoundVectors bound_vectors(const Realization& R);

// Pairs (i, j), 1-based, passing the necessary bound conditions
//   a_j >= b_i, a_i >= b_j (and the short analogues when two root lengths).
std::vector<std::pair<int, int>> candidate_basic_systems(const Realization& R);

// All basic weights of (Phi, i, j) up to positive integer scaling:
// W varpi_j intersected with Lambda_I^+ for I = Delta \ {alpha_i}.
// Ordered by the reference fixture when one exists (type E), otherwise by
// descending lexicographic order of the ambient coordinates.
std::vector<Vec> basic_weights(const Realization& R, int i, int j);

struct BasicSystemRecord {
  char letter = '?';
  int rank = 0;
  int i = 0, j = 0;
  std::vector<Vec> weights;                // ordered basic weights
  std::vector<CoefficientRow> rows;        // Jantzen row of each weight
  std::vector<GoldenCoeff> coeffs;         // nonzero c_{s,t}, 1-based, s < t
  std::vector<std::pair<int, int>> poset;  // adjacency edges
  std::vector<int> non_simple;             // 1-based indices with nonzero row
};

// Compute everything about one basic system.  Verifies that every nonzero
// row target is itself a basic weight and that the chosen order is
// topological (nonzero coefficients only point forward).
BasicSystemRecord basic_jantzen_table(const Realization& R, int i, int j);

// Sweep A_1..A_12, B/C_2..12, D_4..12, E_6..8, F_4, G_2: candidates with at
// least one basic weight.
std::vector<GoldenLabel> classify_basic_systems();

}  // namespace gvm
