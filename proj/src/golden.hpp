// golden.hpp — embedded reference tables: the classification of basic
// systems, their standard basic weights, the nonzero coefficient tables,
// the poset edge sets, the simplicity catalog, and the classical Psi++
// summary table.  The compiled-in data is normative; the versioned file
// data/golden_tables.txt is its serialized copy.

#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace gvm {

struct GoldenLabel {
  char letter = '?';
  int rank = 0;
  int i = 0;
  int j = 0;
};

bool operator==(const GoldenLabel& a, const GoldenLabel& b);

struct GoldenCoeff {
  int s = 0;  // 1-based weight indices, s < t
  int t = 0;
  long c = 0;
};

struct GoldenSystem {
  GoldenLabel label;
  std::vector<Vec> weights;                  // standard basic weights, ordered
  std::vector<GoldenCoeff> coeffs;           // all nonzero coefficients
  std::vector<std::pair<int, int>> poset;    // adjacency edges
  std::vector<int> non_simple;               // 1-based non-simple indices
};

// Adjacency rule shared with the live computation: an edge (s, t) survives
// iff c_{s,t} != 0 and no strictly increasing nonzero-coefficient chain of
// length > 1 joins s to t.
std::vector<std::pair<int, int>> adjacency_edges(
    const std::vector<GoldenCoeff>& coeffs, int n);

// The full classification (42 labeled triples) with all attached data.
const std::vector<GoldenSystem>& golden_systems();
const GoldenSystem* golden_find(char letter, int rank, int i, int j);

struct GoldenClassicalRow {
  GoldenLabel label;
  Vec lambda;
  std::vector<Vec> psi_pp;  // Psi++ as root vectors
  bool theta_sum_zero = false;
  bool simple = false;
};

// The eight classical basic-weight rows with nonempty Psi++.
const std::vector<GoldenClassicalRow>& golden_classical_rows();

// Canonical text form of everything above (contents of
// data/golden_tables.txt).
std::string golden_serialized();

}  // namespace gvm
