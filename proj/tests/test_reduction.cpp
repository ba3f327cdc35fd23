#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reduction.hpp"

using namespace gvm;

namespace {
Vec W(const std::string& s) { return parse_vec(s); }
}

TEST_CASE("reduce: worked chains") {
  // B3, crossed {2}, lambda=(1,0,1), beta=e1+e2: Phi(beta) is all of B3.
  const Realization& b3 = build_realization('B', 3);
  ParabolicData pd3 = make_parabolic(b3, {2});
  ReductionTrace t1 = reduce(b3, W("1,0,1"), pd3, b3.root_index(W("1,1,0")));
  CHECK(t1.terminal.size() == b3.roots.size());
  BasicTriple bt1 = basic_triple_of(b3, W("1,0,1"), pd3, t1);
  CHECK(label_str(bt1) == "(B3,2,2)");

  // B2, crossed {1}, lambda=(1/2,1/2), beta=e1: label (B2,1,2).
  const Realization& b2 = build_realization('B', 2);
  ParabolicData pd2 = make_parabolic(b2, {1});
  ReductionTrace t2 = reduce(b2, W("1/2,1/2"), pd2, b2.root_index(W("1,0")));
  BasicTriple bt2 = basic_triple_of(b2, W("1/2,1/2"), pd2, t2);
  CHECK(label_str(bt2) == "(B2,1,2)");

  // A2, I={e1-e2}, lambda=(1,0,-1), beta=e2-e3: terminal of type A1.
  const Realization& a2 = build_realization('A', 2);
  ParabolicData pda = make_parabolic(a2, {2});
  ReductionTrace t3 = reduce(a2, W("1,0,-1"), pda, a2.root_index(W("0,1,-1")));
  BasicTriple bt3 = basic_triple_of(a2, W("1,0,-1"), pda, t3);
  CHECK(label_str(bt3) == "(A1,1,1)");
  CHECK(t3.terminal.size() == 2);

  CHECK_THROWS_AS(reduce(a2, W("1,0,-1"), pda, a2.root_index(W("1,-1,0"))),
                  RootNotInPsiPlus);
}

TEST_CASE("trace invariants: chains weakly decrease and terminal is stable") {
  const Realization& b3 = build_realization('B', 3);
  ParabolicData pd = make_parabolic(b3, {2});
  Vec lam = W("1,0,1");
  Ctx c = make_ctx(pd);
  for (int beta : psi_sets(lam, c).psi_plus) {
    ReductionTrace t = reduce(b3, lam, pd, beta);
    const Subsystem* prev = &t.initial;
    for (const auto& step : t.steps) {
      CHECK(sub_intersect(step.result, *prev) == step.result);  // inclusion
      prev = &step.result;
    }
    // Terminal is irreducible.
    CHECK(irreducible_component(b3, t.terminal, beta) == t.terminal);
  }
}

TEST_CASE("gamma in Psi+ ∩ Phi(beta) gives the same terminal") {
  for (auto [l, n, crossed, lam] :
       std::vector<std::tuple<char, int, std::vector<int>, std::string>>{
           {'B', 3, {2}, "1,0,1"},
           {'B', 8, {2, 5}, "2,1,2,-1,-3,4,2,1"},
           {'C', 3, {2}, "1,0,1"},
           {'D', 4, {2}, "1,0,1,0"}}) {
    const Realization& R = build_realization(l, n);
    ParabolicData pd = make_parabolic(R, crossed);
    Vec w = W(lam);
    Ctx c = make_ctx(pd);
    PsiSets psi = psi_sets(w, c);
    for (int beta : psi.psi_plus) {
      ReductionTrace t = reduce(R, w, pd, beta);
      for (int gamma : psi.psi_plus) {
        if (!sub_contains(t.terminal, gamma)) continue;
        CHECK(reduce(R, w, pd, gamma).terminal == t.terminal);
      }
    }
  }
}

TEST_CASE("simple_via_reduction agrees with is_simple") {
  struct Case {
    char l;
    int n;
    std::vector<int> crossed;
    std::string lam;
    bool expect;
  };
  for (const Case& cse : std::vector<Case>{
           {'B', 8, {2, 5}, "2,1,2,-1,-3,4,2,1", false},
           {'D', 4, {2}, "1,0,1,0", true},
           {'B', 3, {2}, "1,0,1", false},
           {'B', 2, {1}, "1/2,1/2", true},
           {'A', 2, {1, 2}, "1,0,-1", false}}) {
    const Realization& R = build_realization(cse.l, cse.n);
    ParabolicData pd = make_parabolic(R, cse.crossed);
    Vec lam = W(cse.lam);
    bool via = simple_via_reduction(R, lam, pd);
    bool direct = is_simple(lam, make_ctx(pd)).simple;
    CHECK(via == cse.expect);
    CHECK(direct == cse.expect);
  }
}

TEST_CASE("|c| preserved under reduction") {
  const Realization& b8 = build_realization('B', 8);
  ParabolicData pd = make_parabolic(b8, {2, 5});
  Vec lam = W("2,1,2,-1,-3,4,2,1");
  Ctx full = make_ctx(pd);
  for (int beta : psi_sets(lam, full).psi_plus_plus) {
    ReductionTrace t = reduce(b8, lam, pd, beta);
    BasicTriple bt = basic_triple_of(b8, lam, pd, t);
    Ctx sub = make_sub_ctx(b8, bt.system, bt.parabolic_part);
    Vec mu = ctx_dominantize(full, reflect(b8, lam, beta)).rep;
    Vec mu_sub =
        ctx_dominantize(sub, reflect(b8, bt.weight, beta)).rep;
    long ambient = jantzen_row(lam, full).coefficient_at(mu);
    long reduced = jantzen_row(bt.weight, sub).coefficient_at(mu_sub);
    CHECK(std::abs(ambient) == std::abs(reduced));
  }
}
