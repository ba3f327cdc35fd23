// reduction.hpp — the reduction chain (Eq. (3.3) order: component,
// parabolic-span, component, singular-span, cyclically), the resulting
// basic triples with canonical labels, and simplicity via reduction.

#pragma once

#include <string>
#include <vector>

#include "jantzen.hpp"
#include "rootsys.hpp"

namespace gvm {

enum class ReductionRule { Component, ParabolicSpan, SingularSpan };

const char* rule_name(ReductionRule r);

struct ReductionStep {
  int index = 0;
  ReductionRule rule = ReductionRule::Component;
  Subsystem result;
};

struct ReductionTrace {
  int beta = -1;
  Subsystem initial;  // Phi_[lambda]
  std::vector<ReductionStep> steps;
  Subsystem terminal;  // Phi(beta)
};

ReductionTrace reduce(const Realization& R, const Vec& lam,
                      const ParabolicData& pd, int beta);

struct BasicTriple {
  Subsystem system;         // Phi(beta)
  Subsystem parabolic_part; // Phi_I ∩ Phi(beta)
  Subsystem singular_part;  // Phi_lambda ∩ Phi(beta)
  Vec weight;               // lambda|_{Phi(beta)}
  char letter = '?';
  int rank = 0;
  int i = 0, j = 0;                          // canonical label
  std::vector<std::pair<int, int>> orbit;    // all automorphic (i,j) images
};

std::string label_str(const BasicTriple& t);

// Build the basic triple for a finished trace and identify its basic
// system; throws NotBasic when the basic-triple rank conditions fail.
BasicTriple basic_triple_of(const Realization& R, const Vec& lam,
                            const ParabolicData& pd,
                            const ReductionTrace& trace);

// M_I(lambda) is simple iff every basic triple over
// Psi++ is simple; each triple is decided by a direct Jantzen row inside
// Phi(beta).
bool simple_via_reduction(const Realization& R, const Vec& lam,
                          const ParabolicData& pd);

}  // namespace gvm
