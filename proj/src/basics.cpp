#include "basics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "weyl.hpp"

namespace gvm {

namespace {

bool two_lengths(const Realization& R) {
  return R.highest_short != R.highest;
}

bool is_short(const Realization& R, int r) {
  return R.norm[r] < R.norm[R.highest];
}

// Descending lexicographic order on ambient coordinates.
bool desc_lex(const Vec& x, const Vec& y) {
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y[k]) return x[k] > y[k];
  }
  return false;
}

const OrbitSet& cached_orbit(const Realization& R, int j) {
  static std::map<std::tuple<char, int, int>, OrbitSet> cache;
  auto key = std::make_tuple(R.letter, R.rank, j);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, weyl_orbit(R, R.fundamental[j - 1])).first;
  return it->second;
}

}  // namespace

BoundVectors bound_vectors(const Realization& R) {
  BoundVectors out;
  const int n = R.rank;
  out.a.resize(n);
  out.a_short.resize(n);
  out.b.assign(n, Rat(0));
  out.b_short.assign(n, Rat(0));
  for (int j = 0; j < n; ++j) {
    Rat half_norm = R.norm[R.simples[j]] / 2;
    out.a[j] = half_norm * Rat(R.simple_coords[R.highest][j]);
    out.a_short[j] = half_norm * Rat(R.simple_coords[R.highest_short][j]);
  }
  Vec rho = rho_of(R);
  for (int i = 0; i < n; ++i) {
    for (int r : R.positives) {
      if (R.simple_coords[r][i] != 0) continue;  // beta must lie in Phi_I
      Rat v = dot(rho, R.roots[r]);
      if (v > out.b[i]) out.b[i] = v;
      if (is_short(R, r) && v > out.b_short[i]) out.b_short[i] = v;
    }
  }
  if (!two_lengths(R)) {
    out.a_short = out.a;
    out.b_short = out.b;
  }
  return out;
}

std::vector<std::pair<int, int>> candidate_basic_systems(const Realization& R) {
  BoundVectors bv = bound_vectors(R);
  bool nsl = two_lengths(R);
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= R.rank; ++i)
    for (int j = 1; j <= R.rank; ++j) {
      if (bv.a[j - 1] < bv.b[i - 1] || bv.a[i - 1] < bv.b[j - 1]) continue;
      if (nsl && (bv.a_short[j - 1] < bv.b_short[i - 1] ||
                  bv.a_short[i - 1] < bv.b_short[j - 1]))
        continue;
      out.emplace_back(i, j);
    }
  return out;
}

std::vector<Vec> basic_weights(const Realization& R, int i, int j) {
  if (i < 1 || i > R.rank || j < 1 || j > R.rank)
    throw ParseError("simple-root index out of range");
  const OrbitSet& orbit = cached_orbit(R, j);
  if (!orbit.integral)
    throw InternalError("fundamental-weight orbit must be integral");
  std::vector<Vec> out;
  for (size_t k = 0; k < orbit.size(); ++k) {
    bool ok = true;
    for (int t = 0; t < R.rank && ok; ++t)
      if (t != i - 1 && orbit.istates[k][t] <= 0) ok = false;
    if (ok) out.push_back(orbit.member(k));
  }

  const GoldenSystem* g = golden_find(R.letter, R.rank, i, j);
  if (g) {
    // The reference fixture is normative for both membership and order.
    std::map<std::string, int> pos;
    for (size_t t = 0; t < g->weights.size(); ++t)
      pos[wkey(g->weights[t])] = static_cast<int>(t);
    if (out.size() != g->weights.size())
      throw InternalError("basic-weight count differs from reference table");
    std::vector<Vec> ordered(out.size());
    for (const Vec& w : out) {
      auto it = pos.find(wkey(w));
      if (it == pos.end())
        throw InternalError("basic weight missing from reference table");
      ordered[it->second] = w;
    }
    return ordered;
  }
  std::sort(out.begin(), out.end(), desc_lex);
  return out;
}

BasicSystemRecord basic_jantzen_table(const Realization& R, int i, int j) {
  BasicSystemRecord rec;
  rec.letter = R.letter;
  rec.rank = R.rank;
  rec.i = i;
  rec.j = j;
  rec.weights = basic_weights(R, i, j);

  ParabolicData pd = make_parabolic(R, {i});
  Ctx ctx = make_ctx(pd);
  std::unordered_map<std::string, int> index;  // wkey -> 1-based position
  for (size_t s = 0; s < rec.weights.size(); ++s)
    index[wkey(rec.weights[s])] = static_cast<int>(s) + 1;

  for (size_t s = 0; s < rec.weights.size(); ++s) {
    CoefficientRow row = jantzen_row(rec.weights[s], ctx);
    bool any = false;
    for (const RowEntry* e : row.nonzero()) {
      any = true;
      auto it = index.find(wkey(e->mu));
      if (it == index.end())
        throw InternalError("nonzero coefficient target is not a basic weight");
      int t = it->second;
      if (t <= static_cast<int>(s) + 1)
        throw InternalError("basic-weight order is not topological");
      rec.coeffs.push_back({static_cast<int>(s) + 1, t, e->total});
    }
    if (any) rec.non_simple.push_back(static_cast<int>(s) + 1);
    rec.rows.push_back(std::move(row));
  }
  std::sort(rec.coeffs.begin(), rec.coeffs.end(),
            [](const GoldenCoeff& a, const GoldenCoeff& b) {
              return a.s != b.s ? a.s < b.s : a.t < b.t;
            });
  rec.poset = adjacency_edges(rec.coeffs, static_cast<int>(rec.weights.size()));
  return rec;
}

std::vector<GoldenLabel> classify_basic_systems() {
  std::vector<std::pair<char, std::pair<int, int>>> families = {
      {'A', {1, 12}}, {'B', {2, 12}}, {'C', {2, 12}}, {'D', {4, 12}},
      {'E', {6, 8}},  {'F', {4, 4}},  {'G', {2, 2}}};
  std::vector<GoldenLabel> out;
  for (auto [letter, range] : families)
    for (int n = range.first; n <= range.second; ++n) {
      const Realization& R = build_realization(letter, n);
      for (auto [i, j] : candidate_basic_systems(R))
        if (!basic_weights(R, i, j).empty())
          out.push_back({letter, n, i, j});
    }
  return out;
}

}  // namespace gvm
