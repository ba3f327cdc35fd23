#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootsys.hpp"
#include "weyl.hpp"

using namespace gvm;

namespace {

Vec W(const std::string& s) { return parse_vec(s); }

Subsystem roots_of(const Realization& R, const std::vector<std::string>& vs) {
  Subsystem out;
  for (const auto& s : vs) {
    int idx = R.root_index(W(s));
    REQUIRE(idx >= 0);
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("standard realizations: cardinalities and ambient dimensions") {
  const Realization& a2 = build_realization('A', 2);
  CHECK(a2.roots.size() == 6);
  CHECK(a2.dim == 3);
  CHECK(a2.roots[a2.simples[0]] == W("1,-1,0"));
  CHECK(a2.roots[a2.simples[1]] == W("0,1,-1"));

  const Realization& b8 = build_realization('B', 8);
  CHECK(b8.roots.size() == 128);  // 2*8*7 + 2*8
  CHECK(b8.dim == 8);

  const Realization& e8 = build_realization('E', 8);
  CHECK(e8.roots.size() == 240);
  CHECK(e8.roots[e8.highest] == W("0,0,0,0,0,0,1,1"));  // e7+e8

  CHECK(build_realization('E', 7).roots.size() == 126);
  CHECK(build_realization('E', 6).roots.size() == 72);
  CHECK(build_realization('F', 4).roots.size() == 48);
  CHECK(build_realization('G', 2).roots.size() == 12);
  CHECK(build_realization('D', 4).roots.size() == 24);

  CHECK_THROWS_AS(build_realization('D', 3), InvalidType);
  CHECK_THROWS_AS(build_realization('E', 9), InvalidType);
  CHECK_THROWS_AS(build_realization('H', 3), InvalidType);
}

TEST_CASE("realization invariants") {
  for (auto [l, n] : std::vector<std::pair<char, int>>{{'A', 3},
                                                       {'B', 4},
                                                       {'C', 3},
                                                       {'D', 4},
                                                       {'F', 4},
                                                       {'G', 2},
                                                       {'E', 6}}) {
    const Realization& R = build_realization(l, n);
    CHECK(R.positives.size() * 2 == R.roots.size());
    // Positive roots have nonnegative integer coordinates over Delta, and
    // the highest root dominates all heights.
    for (int p : R.positives) {
      for (long c : R.simple_coords[p]) CHECK(c >= 0);
      CHECK(R.height(p) <= R.height(R.highest));
    }
    // <varpi_i, alpha_j^vee> = delta_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(pairing(R, R.fundamental[i], R.simples[j]) ==
              Rat(i == j ? 1 : 0));
    // Negation closure.
    for (size_t k = 0; k < R.roots.size(); ++k)
      CHECK(R.roots[R.neg[k]] == vscale(-1, R.roots[k]));
  }
}

TEST_CASE("coroot pairing") {
  const Realization& a2 = build_realization('A', 2);
  CHECK(pairing(a2, W("1,0,-1"), a2.root_index(W("1,0,-1"))) == 2);
  const Realization& b2 = build_realization('B', 2);
  CHECK(pairing(b2, W("1/2,1/2"), b2.root_index(W("0,1"))) == 1);
  const Realization& b3 = build_realization('B', 3);
  CHECK(pairing(b3, W("1,0,1"), b3.root_index(W("1,0,1"))) == 2);
}

TEST_CASE("singular and integral subsystems") {
  const Realization& b3 = build_realization('B', 3);
  CHECK(singular_subsystem(b3, zero_vec(3)).size() == b3.roots.size());
  CHECK(singular_subsystem(b3, W("1,0,1")) ==
        roots_of(b3, {"1,0,-1", "-1,0,1", "0,1,0", "0,-1,0"}));
  CHECK(singular_subsystem(b3, rho_of(b3)).empty());

  const Realization& b2 = build_realization('B', 2);
  CHECK(integral_subsystem(b2, W("1/2,1/4")) == roots_of(b2, {"1,0", "-1,0"}));
  const Realization& a2 = build_realization('A', 2);
  CHECK(integral_subsystem(a2, W("1,2,3")).size() == 6);
  CHECK(integral_subsystem(a2, W("1/3,1/3,-2/3")).size() == 6);
}

TEST_CASE("span_intersect") {
  const Realization& b2 = build_realization('B', 2);
  CHECK(span_intersect(b2, {}).empty());
  CHECK(span_intersect(b2, {W("0,1"), W("1,-1")}).size() == 8);
  const Realization& a2 = build_realization('A', 2);
  CHECK(span_intersect(a2, {W("1,-1,0")}) ==
        roots_of(a2, {"1,-1,0", "-1,1,0"}));
  // Result is negation-closed and reflection-closed (small exhaustive).
  for (auto [l, n] :
       std::vector<std::pair<char, int>>{{'B', 3}, {'A', 3}, {'G', 2}}) {
    const Realization& R = build_realization(l, n);
    Subsystem s = span_intersect(R, {R.roots[R.simples[0]], rho_of(R)});
    for (int r : s) {
      CHECK(sub_contains(s, R.neg[r]));
      for (int r2 : s) {
        int img = R.root_index(reflect(R, R.roots[r2], r));
        CHECK(sub_contains(s, img));
      }
    }
  }
}

TEST_CASE("irreducible_component") {
  const Realization& a3 = build_realization('A', 3);
  Subsystem s = roots_of(a3, {"1,-1,0,0", "-1,1,0,0", "0,0,1,-1", "0,0,-1,1"});
  int b = a3.root_index(W("1,-1,0,0"));
  CHECK(irreducible_component(a3, s, b) ==
        roots_of(a3, {"1,-1,0,0", "-1,1,0,0"}));
  CHECK(irreducible_component(a3, full_subsystem(a3), b).size() == 12);
  CHECK_THROWS_AS(irreducible_component(a3, s, a3.root_index(W("0,1,-1,0"))),
                  RootNotInSubsystem);
}

TEST_CASE("simple_system_of") {
  const Realization& b3 = build_realization('B', 3);
  auto d = simple_system_of(b3, full_subsystem(b3));
  std::sort(d.begin(), d.end());
  auto expected = b3.simples;
  std::sort(expected.begin(), expected.end());
  CHECK(d == expected);

  Subsystem sub = roots_of(b3, {"1,0,0", "-1,0,0", "0,1,0", "0,-1,0",
                                "1,1,0", "-1,-1,0", "1,-1,0", "-1,1,0"});
  auto s = simple_system_of(b3, sub);
  std::sort(s.begin(), s.end());
  CHECK(s == roots_of(b3, {"1,-1,0", "0,1,0"}));
  // Every positive member decomposes over the simple system: verify by
  // checking closure under subtracting simples.
  for (int p : positive_members(b3, sub)) {
    Vec v = b3.roots[p];
    long guard = 0;
    while (!is_zero(v)) {
      bool moved = false;
      for (int sr : s) {
        Vec diff = vsub(v, b3.roots[sr]);
        if (is_zero(diff) || (b3.root_index(diff) >= 0 &&
                              sub_contains(sub, b3.root_index(diff)) &&
                              b3.positive[b3.root_index(diff)])) {
          v = diff;
          moved = true;
          break;
        }
      }
      REQUIRE(moved);
      REQUIRE(++guard < 100);
    }
  }
}

TEST_CASE("dynkin_classify") {
  // The whole realization classifies as itself.
  for (auto [l, n] : std::vector<std::pair<char, int>>{{'A', 4}, {'B', 3},
                                                       {'C', 3}, {'D', 5},
                                                       {'E', 6}, {'F', 4},
                                                       {'G', 2}}) {
    const Realization& R = build_realization(l, n);
    DynkinLabel lbl = dynkin_classify(R, full_subsystem(R));
    CHECK(lbl.letter == l);
    CHECK(lbl.rank == n);
    // The labeling realizes the standard Cartan matrix.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(to_long(pairing(R.roots[lbl.labeling[i]],
                              R.roots[lbl.labeling[j]])) == R.cartan[i][j]);
  }
  const Realization& b3 = build_realization('B', 3);
  Subsystem sub = roots_of(b3, {"1,0,0", "-1,0,0", "0,1,0", "0,-1,0",
                                "1,1,0", "-1,-1,0", "1,-1,0", "-1,1,0"});
  CHECK(dynkin_classify(b3, sub).letter == 'B');
  CHECK(dynkin_classify(b3, sub).rank == 2);
  const Realization& a3 = build_realization('A', 3);
  Subsystem split =
      roots_of(a3, {"1,-1,0,0", "-1,1,0,0", "0,0,1,-1", "0,0,-1,1"});
  CHECK_THROWS_AS(dynkin_classify(a3, split), NotIrreducible);
}

TEST_CASE("restrict_weight") {
  const Realization& a2 = build_realization('A', 2);
  Subsystem line = roots_of(a2, {"1,-1,0", "-1,1,0"});
  CHECK(restrict_weight(a2, W("1,0,-1"), line) == W("1/2,-1/2,0"));
  // Idempotence and orthogonality of the residue.
  Vec r = restrict_weight(a2, W("1,0,-1"), line);
  CHECK(restrict_weight(a2, r, line) == r);
  for (int root : line)
    CHECK(dot(vsub(W("1,0,-1"), r), a2.roots[root]) == 0);
  // lambda in QQ*Phi' restricts to itself.
  CHECK(restrict_weight(a2, W("3/2,-3/2,0"), line) == W("3/2,-3/2,0"));
  // Phi' = Phi_lambda gives 0.
  const Realization& b3 = build_realization('B', 3);
  CHECK(restrict_weight(b3, W("1,0,1"), singular_subsystem(b3, W("1,0,1"))) ==
        zero_vec(3));
  // The singular system of the restriction, within Phi',
  // equals Phi_lambda ∩ Phi'.
  Subsystem sub = span_intersect(b3, {W("1,0,0"), W("0,1,0")});
  Vec lam = W("1,0,1");
  Vec lr = restrict_weight(b3, lam, sub);
  CHECK(sub_intersect(singular_subsystem(b3, lr), sub) ==
        sub_intersect(singular_subsystem(b3, lam), sub));
}

TEST_CASE("fundamental weights of A2") {
  const Realization& a2 = build_realization('A', 2);
  CHECK(a2.fundamental[0] == W("2/3,-1/3,-1/3"));
}
