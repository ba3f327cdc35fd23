// classical.hpp — closed-form reduction data and simplicity criteria for
// the classical root systems B_n / C_n / D_n (and the type-A criterion):
// segment decompositions of the parabolic set, c/d-indices, congruence
// decomposition of the integral subsystem, closed forms of the first
// parabolic and singular reduction steps, and the per-root vanishing
// criterion behind the classical simplicity theorems.

#pragma once

#include <utility>
#include <vector>

#include "jantzen.hpp"
#include "rootsys.hpp"

namespace gvm {

// I is "nonstandard" only for D_n with alpha_{n-1} crossed and alpha_n
// included; phi = s_{e_n} repairs it.
bool is_standard(const Realization& R, const std::vector<int>& crossed);

// phi = s_{e_n}: negate the last coordinate.
Vec phi_map(const Vec& v);
// Image of the crossed set under phi (swaps alpha_{n-1} and alpha_n).
std::vector<int> phi_crossed(const Realization& R,
                             const std::vector<int>& crossed);

// Segments of I between consecutive crossed indices q_1 < ... < q_{m-1}.
struct SegmentData {
  std::vector<int> q;  // q_0 = 0, q_1..q_{m-1} crossed, q_m = n+1
  int m = 0;
  std::vector<std::vector<int>> segments;  // I_1..I_m (1-based simple indices)
  std::vector<int> n_s;                    // n_1..n_m

  // Segment of coordinate index i (1-based): the s with q_{s-1} < i <= q_s.
  int segment_of(int i) const;
};

// Requires B/C, or D with standard I (apply phi first otherwise);
// handles the nonstandard-D bookkeeping when given such an I directly.
SegmentData segment_data(const Realization& R, const std::vector<int>& crossed);

// c-indices of a root: (c_1, c_2) as defined from the segment structure;
// nonstandard I delegates through phi.
std::pair<int, int> c_indices(const Realization& R,
                              const std::vector<int>& crossed, const Vec& beta);

// d-indices: d_1 = max(|lambda_i|, |lambda_j|), d_2 = min or 0 on equality
// (always 0 for the e_i / 2e_i shapes).
std::pair<Rat, Rat> d_indices(const Vec& lambda, const Vec& beta);

// Phi_lambda(a) = { gamma in Phi_lambda : d_1(gamma) = a }.
Subsystem phi_lambda_a(const Realization& R, const Vec& lambda, const Rat& a);

// K_(z) = { i : lambda_i - z in Z }, 1-based.
std::vector<int> k_set(const Vec& lambda, const Rat& z);

// The congruence block Phi_(z) (type-specific shape).
Subsystem phi_z(const Realization& R, const Vec& lambda, const Rat& z);

// All nonempty blocks for representatives 0 <= z <= 1/2; their disjoint
// union is the integral subsystem Phi_[lambda].
std::vector<std::pair<Rat, Subsystem>> congruence_decomposition(
    const Realization& R, const Vec& lambda);

// Closed form of the irreducible component of (QQ beta + QQ Phi_I) ∩ Phi
// containing beta: span of {beta} u I_s u I_t with (s,t) = c(beta).
Subsystem closed_form_parabolic(const Realization& R, const ParabolicData& pd,
                                int beta);

// Closed form of the irreducible component of (QQ beta + QQ Phi_lambda) ∩ Phi
// containing beta: span of {beta} u Phi_lambda(d_1) u Phi_lambda(d_2).
Subsystem closed_form_singular(const Realization& R, const Vec& lambda,
                               int beta);

// Per-root criterion: for beta in Psi_lambda^{++}, whether c(lambda, mu_beta)
// vanishes.  Type A always answers false; throws WrongType for exceptional
// letters and RootNotInPsiPlus when beta is not in Psi_lambda^{++}.
bool theorem_d_vanishes(const Realization& R, const ParabolicData& pd,
                        const Vec& lambda, int beta);

// Closed-form simplicity: type A iff Psi^{++} is empty; B/C/D iff every
// beta in Psi^{++} vanishes per the criterion above.
bool classical_is_simple(const Realization& R, const ParabolicData& pd,
                         const Vec& lambda);

}  // namespace gvm
