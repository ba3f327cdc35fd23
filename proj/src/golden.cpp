#include "golden.hpp"

#include <algorithm>
#include <sstream>

namespace gvm {

bool operator==(const GoldenLabel& a, const GoldenLabel& b) {
  return a.letter == b.letter && a.rank == b.rank && a.i == b.i && a.j == b.j;
}

namespace {

Vec V(const std::string& s) { return parse_vec(s); }

std::vector<Vec> VL(const std::vector<std::string>& ss) {
  std::vector<Vec> out;
  out.reserve(ss.size());
  for (const auto& s : ss) out.push_back(V(s));
  return out;
}

}  // namespace

// An edge (s, t) survives iff c_{s,t} != 0 and there is no strictly
// increasing chain s = i_0 < i_1 < ... < i_k = t with k > 1 whose
// consecutive coefficients are all nonzero.
std::vector<std::pair<int, int>> adjacency_edges(
    const std::vector<GoldenCoeff>& coeffs, int n) {
  std::vector<std::vector<bool>> direct(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& e : coeffs) direct[e.s][e.t] = true;
  // multi[s][t]: a nonzero chain of length >= 2 from s to t exists.
  std::vector<std::vector<bool>> reach = direct;
  std::vector<std::vector<bool>> multi(n + 1, std::vector<bool>(n + 1, false));
  for (int s = n; s >= 1; --s)
    for (int mid = s + 1; mid <= n; ++mid)
      if (direct[s][mid])
        for (int t = mid + 1; t <= n; ++t)
          if (reach[mid][t]) {
            multi[s][t] = true;
            reach[s][t] = true;
          }
  std::vector<std::pair<int, int>> out;
  for (int s = 1; s <= n; ++s)
    for (int t = s + 1; t <= n; ++t)
      if (direct[s][t] && !multi[s][t]) out.emplace_back(s, t);
  return out;
}

namespace {

struct CoeffRowSpec {
  int i;
  std::vector<int> plus;   // c_{i,j} = 1
  std::vector<int> minus;  // c_{i,j} = -1
};

std::vector<GoldenCoeff> expand_rows(const std::vector<CoeffRowSpec>& rows,
                                     const std::vector<GoldenCoeff>& twos) {
  std::vector<GoldenCoeff> out;
  for (const auto& r : rows) {
    for (int j : r.plus) out.push_back({r.i, j, 1});
    for (int j : r.minus) out.push_back({r.i, j, -1});
  }
  for (const auto& e : twos) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const GoldenCoeff& a, const GoldenCoeff& b) {
    return a.s != b.s ? a.s < b.s : a.t < b.t;
  });
  return out;
}

std::vector<int> range1(int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) out.push_back(k);
  return out;
}

GoldenSystem sys(char letter, int rank, int i, int j,
                 std::vector<std::string> weights,
                 std::vector<GoldenCoeff> coeffs = {},
                 std::vector<int> non_simple = {}) {
  GoldenSystem g;
  g.label = {letter, rank, i, j};
  g.weights = VL(weights);
  g.coeffs = std::move(coeffs);
  g.poset = adjacency_edges(g.coeffs, static_cast<int>(g.weights.size()));
  g.non_simple = std::move(non_simple);
  return g;
}

const std::vector<GoldenCoeff> k_pair_one = {{1, 2, 1}};

std::vector<GoldenCoeff> e7_44_coeffs() {
  return expand_rows({{1, {3}, {5}}, {2, {3}, {6}}, {3, {}, {}}, {4, {5, 6}, {}}},
                     {{1, 6, 2}, {2, 5, 2}, {3, 4, 2}});
}

// The two tables below correct a typo in the source material: the published
// coefficient tables for (E8,4,5)/(E8,5,4) interchange weights 5 and 6
// relative to the published weight tables.  The values here are consistent
// with the weight numbering and verified against the brute-force expansion.
std::vector<GoldenCoeff> e8_54_coeffs() {
  return expand_rows(
      {{1, {2, 3, 10, 11, 14, 16}, {4, 5, 12, 13, 18}},
       {2, {3, 4, 8, 9, 13}, {6, 10, 14, 15}},
       {3, {5, 6, 12, 15, 18}, {8, 9, 11, 16}},
       {4, {5, 9, 10, 16}, {7, 8, 12, 17}},
       {5, {7, 8, 11, 14, 17}, {9, 13, 18}},
       {6, {7, 9, 11, 13, 18}, {10, 12, 17}},
       {7, {9, 10, 16}, {11, 14, 15, 18}},
       {8, {10, 13, 14, 18}, {11, 12, 16}},
       {9, {12, 14, 15, 17}, {13, 16}},
       {10, {11, 12, 15, 18}, {14, 17}},
       {11, {13, 17}, {15, 16}},
       {12, {13, 14}, {15}},
       {13, {15, 16}, {18}},
       {14, {16}, {17}},
       {15, {17}, {18}},
       {16, {17, 18}, {}},
       {17, {18}, {}}},
      {});
}

std::vector<GoldenCoeff> e8_45_coeffs() {
  return expand_rows(
      {{1, {2, 4, 10, 12, 14, 18}, {3, 5, 11, 13, 16}},
       {2, {3, 4, 6, 8, 10, 14}, {9, 13, 15}},
       {3, {5, 6, 8, 11, 16}, {9, 12, 15, 18}},
       {4, {5, 7, 8, 9, 10, 12}, {16, 17}},
       {5, {7, 8, 9, 11, 13}, {14, 17, 18}},
       {6, {7, 10, 11, 17, 18}, {9, 12, 13}},
       {7, {9, 10, 11, 15, 18}, {14, 16}},
       {8, {10, 11, 12, 13, 14, 16}, {18}},
       {9, {12, 13, 15}, {14, 16, 17}},
       {10, {11, 12, 14, 15, 17, 18}, {}},
       {11, {13, 15, 16, 17}, {}},
       {12, {13, 14, 15}, {}},
       {13, {15, 16}, {18}},
       {14, {16, 17}, {}},
       {15, {17, 18}, {}},
       {16, {17}, {18}},
       {17, {18}, {}}},
      {});
}

std::vector<GoldenCoeff> e8_44_coeffs() {
  return expand_rows(
      {{1, {12, 15, 16, 22, 32, 33, 46}, {6, 7, 14, 20, 21, 26, 41, 42}},
       {2, {3, 4, 5, 7, 10, 24, 25, 28, 33, 39, 47}, {6, 9, 11, 27, 32, 38, 40}},
       {3, {6, 7, 14, 17, 26, 36}, {12, 19, 22, 34}},
       {4, {6, 7, 14, 17, 26, 36}, {12, 19, 22, 34}},
       {5, {6, 7, 15, 16, 22, 31, 32, 33}, {9, 10, 26, 29, 38, 39}},
       {6, {8, 11, 13, 14, 20, 22, 24, 35, 41}, {9, 10, 16, 23, 36, 39, 47}},
       {7, {8, 9, 10, 11, 12, 13, 15, 24, 26, 35, 38}, {21, 23, 34, 42, 47}},
       {8, {9, 10, 12, 15, 16, 19, 31}, {14, 17, 29, 46}},
       {9, {11, 12, 13, 18, 19, 21, 28, 42}, {15, 20, 24, 25, 32, 43, 46}},
       {10, {11, 13, 14, 16, 17, 18, 21, 33, 46}, {20, 25, 24, 27, 41, 43}},
       {11, {15, 16, 19, 20, 21, 31, 34}, {17, 27, 28, 29, 36}},
       {12, {15, 17, 18, 20, 21, 23, 26, 34, 37}, {24, 35, 42, 44, 45}},
       {13, {15, 16, 19, 26, 36, 41, 42}, {17, 22, 34}},
       {14, {16, 20, 21, 24, 35, 44, 45}, {18, 19, 22, 23, 36, 37, 41}},
       {15, {17, 18, 21, 22, 24, 25, 26, 27, 28, 43, 47}, {38, 46}},
       {16, {18, 19, 22, 24, 25, 26, 39, 43, 46, 47}, {20, 27, 28}},
       {17, {20, 23, 25, 28, 29, 30}, {22, 37, 40, 43}},
       {18, {20, 21, 26, 27, 28, 29}, {22, 31}},
       {19, {21, 26, 27, 37, 40, 43}, {23, 25, 30, 31}},
       {20, {22, 23, 25, 27, 30, 31, 32}, {33, 37, 39, 46}},
       {21, {23, 25, 26, 29, 30, 32, 38, 46}, {28, 33, 37}},
       {22, {27, 32, 33, 41, 43, 47}, {29, 30, 35, 36, 44, 45}},
       {23, {27, 28, 29, 34}, {31, 36, 41, 42}},
       {24, {32, 33, 36, 41, 42, 46}, {34, 38, 39}},
       {25, {27, 28, 29, 32, 33, 46}, {31, 38, 39}},
       {26, {28, 30, 31, 32, 33, 34, 35, 42, 44, 45}, {43, 47}},
       {27, {29, 30, 34, 36, 37, 41}, {33, 38, 39, 47}},
       {28, {30, 31, 32, 34, 36, 37, 38, 39}, {42, 47}},
       {29, {32, 34, 39, 44, 45}, {35, 37, 40}},
       {30, {32, 33, 34, 38, 39}, {36}},
       {31, {33, 35, 37, 38, 40}, {36, 44, 45}},
       {32, {34, 35, 37, 40, 42, 43, 47}, {38}},
       {33, {35, 36, 37, 39, 40, 43, 47}, {41}},
       {34, {38, 40, 42, 47}, {44, 45}},
       {35, {38, 39, 41, 42}, {}},
       {36, {39, 41, 44, 45}, {40, 47}},
       {37, {38, 39, 41, 42}, {46}},
       {38, {40, 42}, {41, 43, 46}},
       {39, {40, 42, 46}, {41, 43}},
       {40, {41, 42}, {}},
       {41, {43, 44, 45}, {46, 47}},
       {42, {43, 44, 45, 46}, {47}},
       {43, {46}, {}},
       {44, {46}, {}},
       {45, {46}, {}}},
      {{1, 2, 2}, {46, 47, 2}});
}

std::vector<GoldenSystem> build_systems() {
  std::vector<GoldenSystem> out;
  // Type A.
  out.push_back(sys('A', 1, 1, 1, {"1/2,-1/2", "-1/2,1/2"}, k_pair_one, {1}));
  out.push_back(sys('A', 2, 1, 1, {"-1/3,2/3,-1/3"}));
  out.push_back(sys('A', 2, 1, 2, {"1/3,1/3,-2/3"}));
  out.push_back(sys('A', 2, 2, 1, {"2/3,-1/3,-1/3"}));
  out.push_back(sys('A', 2, 2, 2, {"1/3,-2/3,1/3"}));
  out.push_back(sys('A', 3, 2, 2, {"1/2,-1/2,1/2,-1/2"}));
  // Type B.
  out.push_back(sys('B', 2, 1, 1, {"0,1"}));
  out.push_back(sys('B', 2, 1, 2, {"1/2,1/2", "-1/2,1/2"}));
  out.push_back(sys('B', 2, 2, 1, {"1,0", "0,-1"}));
  out.push_back(sys('B', 2, 2, 2, {"1/2,-1/2"}));
  out.push_back(sys('B', 3, 2, 2, {"1,0,1", "0,-1,1"}, k_pair_one, {1}));
  out.push_back(sys('B', 3, 2, 3, {"1/2,-1/2,1/2"}));
  out.push_back(sys('B', 3, 3, 2, {"1,0,-1"}));
  out.push_back(sys('B', 4, 3, 3, {"1,0,-1,1"}));
  // Type C.
  out.push_back(sys('C', 2, 1, 1, {"0,1"}));
  out.push_back(sys('C', 2, 1, 2, {"1,1", "-1,1"}));
  out.push_back(sys('C', 2, 2, 1, {"1,0", "0,-1"}));
  out.push_back(sys('C', 2, 2, 2, {"1,-1"}));
  out.push_back(sys('C', 3, 2, 2, {"1,0,1", "0,-1,1"}, k_pair_one, {1}));
  out.push_back(sys('C', 3, 2, 3, {"1,-1,1"}));
  out.push_back(sys('C', 3, 3, 2, {"1,0,-1"}));
  out.push_back(sys('C', 4, 3, 3, {"1,0,-1,1"}));
  // Type D.
  out.push_back(sys('D', 4, 2, 2, {"1,0,1,0", "0,-1,1,0"}));
  out.push_back(sys('D', 5, 3, 3, {"1,0,-1,1,0"}));
  // Type E.
  out.push_back(sys('E', 6, 4, 4,
                    {"0,1,-1,0,1,-1,-1,1",
                     "1/2,3/2,-3/2,-1/2,1/2,-1/2,-1/2,1/2",
                     "0,1,-2,-1,0,0,0,0"}));
  out.push_back(sys('E', 7, 4, 4,
                    {"1/2,3/2,-3/2,-1/2,1/2,3/2,-3/2,3/2",
                     "0,1,-2,-1,0,2,-1,1",
                     "0,2,-2,-1,0,1,-1,1",
                     "1/2,3/2,-5/2,-3/2,-1/2,1/2,-1/2,1/2",
                     "0,1,-3,-1,0,1,0,0",
                     "1/2,3/2,-5/2,-3/2,-1/2,1/2,1/2,-1/2"},
                    e7_44_coeffs(), {1, 2, 3, 4}));
  out.push_back(sys('E', 7, 4, 5, {"0,1,-2,-1,0,1,-1/2,1/2"}));
  out.push_back(sys('E', 7, 5, 4, {"0,1,2,-2,-1,0,-1,1"}));
  out.push_back(sys('E', 8, 3, 4, {"7/2,-5/2,-3/2,-1/2,1/2,3/2,5/2,1/2"}));
  out.push_back(sys('E', 8, 4, 3, {"1/2,3/2,-5/2,-3/2,-1/2,1/2,3/2,1/2"}));
  out.push_back(sys(
      'E', 8, 4, 4,
      {"0,2,-2,-1,0,1,2,4",
       "1/2,3/2,-5/2,-3/2,-1/2,1/2,5/2,7/2",
       "0,1,-3,-1,0,1,3,3",
       "1/2,5/2,-5/2,-3/2,-1/2,1/2,3/2,7/2",
       "1/2,3/2,-5/2,-3/2,-1/2,1/2,7/2,5/2",
       "1/2,7/2,-5/2,-3/2,-1/2,1/2,3/2,5/2",
       "1/2,3/2,-7/2,-3/2,-1/2,1/2,5/2,5/2",
       "1/2,5/2,-7/2,-3/2,-1/2,1/2,3/2,5/2",
       "0,2,-4,-1,0,1,2,2",
       "1/2,3/2,-7/2,-5/2,-1/2,1/2,3/2,5/2",
       "0,1,-4,-2,0,1,2,2",
       "1/2,5/2,-7/2,-3/2,-1/2,1/2,5/2,3/2",
       "0,1,-4,-2,-1,0,2,2",
       "-1/2,3/2,-7/2,-5/2,-3/2,-1/2,1/2,5/2",
       "1/2,3/2,-7/2,-5/2,-1/2,1/2,5/2,3/2",
       "0,2,-4,-2,-1,0,1,2",
       "1,2,-3,-2,-1,1,3,1",
       "1/2,5/2,-7/2,-5/2,-1/2,1/2,3/2,3/2",
       "-1/2,3/2,-9/2,-3/2,-1/2,1/2,3/2,3/2",
       "1,3,-3,-2,-1,1,2,1",
       "0,2,-4,-2,0,1,2,1",
       "5/2,7/2,-5/2,-3/2,-1/2,1/2,3/2,1/2",
       "3/2,5/2,-7/2,-3/2,-1/2,1/2,5/2,1/2",
       "-1/2,5/2,-7/2,-5/2,-3/2,-1/2,1/2,3/2",
       "1/2,3/2,-7/2,-5/2,-1/2,3/2,5/2,1/2",
       "0,2,-4,-2,-1,0,2,1",
       "3/2,5/2,-7/2,-5/2,-1/2,1/2,3/2,1/2",
       "1/2,3/2,-7/2,-5/2,-3/2,1/2,5/2,1/2",
       "1,2,-4,-2,0,1,2,0",
       "1/2,5/2,-7/2,-5/2,-3/2,1/2,3/2,1/2",
       "-1/2,3/2,-7/2,-5/2,-3/2,-1/2,5/2,1/2",
       "0,2,-4,-2,-1,1,2,0",
       "-1/2,5/2,-7/2,-5/2,-3/2,-1/2,3/2,1/2",
       "1,2,-4,-2,-1,0,2,0",
       "-1,2,-4,-2,-1,0,2,0",
       "-3/2,5/2,-7/2,-5/2,-3/2,-1/2,1/2,1/2",
       "-1/2,3/2,-7/2,-5/2,-3/2,1/2,5/2,-1/2",
       "1/2,3/2,-7/2,-5/2,-3/2,-1/2,5/2,-1/2",
       "-1/2,5/2,-7/2,-5/2,-3/2,1/2,3/2,-1/2",
       "1/2,5/2,-7/2,-5/2,-3/2,-1/2,3/2,-1/2",
       "3/2,5/2,-7/2,-5/2,-3/2,-1/2,1/2,-1/2",
       "0,2,-4,-2,-1,0,2,-1",
       "1/2,3/2,-9/2,-3/2,-1/2,1/2,3/2,-3/2",
       "1/2,5/2,-7/2,-5/2,-3/2,-1/2,1/2,-3/2",
       "0,1,-4,-2,-1,0,2,-2",
       "0,2,-4,-2,-1,0,1,-2",
       "1/2,3/2,-7/2,-5/2,-3/2,-1/2,1/2,-5/2"},
      e8_44_coeffs(), range1(46)));
  out.push_back(sys('E', 8, 4, 5,
                    {"0,1,-2,-1,0,1,2,3",
                     "1/2,3/2,-5/2,-3/2,-1/2,1/2,3/2,5/2",
                     "0,1,-3,-1,0,1,2,2",
                     "1/2,3/2,-5/2,-3/2,-1/2,1/2,5/2,3/2",
                     "1/2,5/2,-5/2,-3/2,-1/2,1/2,3/2,3/2",
                     "0,1,-3,-2,-1,0,1,2",
                     "0,1,-3,-2,0,1,2,1",
                     "0,1,-3,-2,-1,0,2,1",
                     "3/2,5/2,-5/2,-3/2,-1/2,1/2,3/2,1/2",
                     "0,2,-3,-2,-1,0,1,1",
                     "-1/2,3/2,-7/2,-3/2,-1/2,1/2,3/2,1/2",
                     "0,1,-3,-2,-1,1,2,0",
                     "1,2,-3,-2,-1,0,1,0",
                     "-1,2,-3,-2,-1,0,1,0",
                     "1/2,3/2,-7/2,-3/2,-1/2,1/2,3/2,-1/2",
                     "0,1,-3,-2,-1,0,2,-1",
                     "0,2,-3,-2,-1,0,1,-1",
                     "0,1,-3,-2,-1,0,1,-2"},
                    e8_45_coeffs(), range1(17)));
  out.push_back(sys('E', 8, 5, 4,
                    {"0,1,2,-2,-1,0,2,4",
                     "1/2,3/2,5/2,-5/2,-3/2,-1/2,1/2,7/2",
                     "0,1,3,-3,-1,0,1,3",
                     "1/2,3/2,7/2,-5/2,-3/2,-1/2,1/2,5/2",
                     "1/2,3/2,5/2,-7/2,-3/2,-1/2,1/2,5/2",
                     "0,1,2,-4,-1,0,2,2",
                     "0,1,2,-4,-2,0,1,2",
                     "0,1,2,-4,-2,-1,0,2",
                     "0,1,2,-4,-2,0,2,1",
                     "1/2,3/2,5/2,-7/2,-5/2,-1/2,1/2,3/2",
                     "1,2,3,-3,-2,-1,1,1",
                     "1/2,3/2,5/2,-7/2,-5/2,-1/2,3/2,1/2",
                     "1/2,3/2,5/2,-7/2,-5/2,-3/2,1/2,1/2",
                     "0,1,2,-4,-2,-1,2,0",
                     "-1/2,3/2,5/2,-7/2,-5/2,-3/2,-1/2,1/2",
                     "-1/2,3/2,5/2,-7/2,-5/2,-3/2,1/2,-1/2",
                     "1/2,3/2,5/2,-7/2,-5/2,-3/2,-1/2,-1/2",
                     "0,1,2,-4,-2,-1,0,-2"},
                    e8_54_coeffs(), range1(17)));
  out.push_back(sys('E', 8, 5, 5,
                    {"0,1,2,-2,-1,0,1,3",
                     "0,1,2,-3,-1,0,1,2",
                     "1/2,3/2,5/2,-5/2,-3/2,-1/2,1/2,3/2",
                     "0,1,2,-3,-2,0,1,1",
                     "0,1,2,-3,-2,-1,0,1",
                     "0,1,2,-3,-2,-1,1,0",
                     "0,1,2,-3,-2,-1,0,-1"}));
  // Type F.
  out.push_back(sys('F', 4, 2, 2, {"2,0,-1,1", "1,0,-2,1", "0,-1,-2,1"}));
  out.push_back(sys('F', 4, 2, 3,
                    {"3/2,1/2,-1/2,1/2", "1,0,-1,1", "1/2,1/2,-3/2,1/2",
                     "1/2,-1/2,-3/2,1/2", "-1/2,-1/2,-3/2,1/2"}));
  out.push_back(sys('F', 4, 3, 2,
                    {"2,1,0,-1", "1,1,0,-2", "1,0,-1,-2", "0,1,-1,-2",
                     "-1,0,-1,-2"}));
  out.push_back(sys('F', 4, 3, 3,
                    {"1,1,0,-1", "1/2,1/2,-1/2,-3/2", "-1/2,1/2,-1/2,-3/2"}));
  // Type G.
  out.push_back(sys('G', 2, 1, 1, {"-1,1,0", "-1,0,1"}));
  out.push_back(sys('G', 2, 1, 2, {"-1,2,-1", "-1,-1,2", "-2,1,1"}));
  out.push_back(sys('G', 2, 2, 1, {"1,0,-1", "1,-1,0", "0,-1,1"}));
  out.push_back(sys('G', 2, 2, 2, {"2,-1,-1", "1,-2,1"}));
  return out;
}

std::vector<GoldenClassicalRow> build_classical_rows() {
  auto row = [](char l, int n, int i, int j, const std::string& lam,
                const std::vector<std::string>& psi, bool zero, bool simple) {
    GoldenClassicalRow r;
    r.label = {l, n, i, j};
    r.lambda = V(lam);
    r.psi_pp = VL(psi);
    r.theta_sum_zero = zero;
    r.simple = simple;
    return r;
  };
  return {
      row('A', 1, 1, 1, "1/2,-1/2", {"1,-1"}, false, false),
      row('B', 2, 1, 2, "1/2,1/2", {"1,0", "1,1"}, true, true),
      row('B', 2, 2, 1, "1,0", {"1,0", "1,1"}, true, true),
      row('B', 3, 2, 2, "1,0,1", {"1,0,0", "1,1,0", "1,0,1"}, false, false),
      row('C', 2, 1, 2, "1,1", {"2,0", "1,1"}, true, true),
      row('C', 2, 2, 1, "1,0", {"2,0", "1,1"}, true, true),
      row('C', 3, 2, 2, "1,0,1", {"2,0,0", "1,1,0", "1,0,1"}, false, false),
      row('D', 4, 2, 2, "1,0,1,0", {"1,1,0,0", "1,0,1,0"}, true, true),
  };
}

}  // namespace

const std::vector<GoldenSystem>& golden_systems() {
  static const std::vector<GoldenSystem> data = build_systems();
  return data;
}

const GoldenSystem* golden_find(char letter, int rank, int i, int j) {
  for (const auto& g : golden_systems())
    if (g.label == GoldenLabel{letter, rank, i, j}) return &g;
  return nullptr;
}

const std::vector<GoldenClassicalRow>& golden_classical_rows() {
  static const std::vector<GoldenClassicalRow> data = build_classical_rows();
  return data;
}

std::string golden_serialized() {
  std::ostringstream os;
  os << "# Reference tables: basic systems, standard basic weights, nonzero\n"
        "# Jantzen coefficients, poset edges, and simplicity data.\n";
  for (const auto& g : golden_systems()) {
    os << "\n[system " << g.label.letter << g.label.rank << " i="
       << g.label.i << " j=" << g.label.j << "]\n";
    for (size_t k = 0; k < g.weights.size(); ++k)
      os << "weight " << (k + 1) << " = " << vec_str(g.weights[k]) << "\n";
    for (const auto& e : g.coeffs)
      os << "c " << e.s << " " << e.t << " = " << e.c << "\n";
    for (const auto& [s, t] : g.poset) os << "edge " << s << " " << t << "\n";
    os << "non_simple =";
    for (int k : g.non_simple) os << " " << k;
    os << "\n";
  }
  os << "\n[classical-psi-plus-plus]\n";
  for (const auto& r : golden_classical_rows()) {
    os << r.label.letter << r.label.rank << " i=" << r.label.i << " j="
       << r.label.j << " | lambda=" << vec_str(r.lambda) << " | psi++=";
    for (size_t k = 0; k < r.psi_pp.size(); ++k)
      os << (k ? ";" : "") << vec_str(r.psi_pp[k]);
    os << " | theta_sum=" << (r.theta_sum_zero ? "0" : "nonzero")
       << " | simple=" << (r.simple ? "yes" : "no") << "\n";
  }
  return os.str();
}

}  // namespace gvm
