#include "ratcert/invariants.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "ratcert/cayley.hpp"
#include "ratcert/error.hpp"
#include "ratcert/subspace.hpp"

namespace ratcert {

namespace {

/// Dual coordinates of the pointwise-fixed line of a pseudo-reflection with
/// repeated eigenvalue alpha: g - alpha*I has rank one, and its row space is
/// the annihilator of the fixed plane ker(g - alpha*I).
Vec3 fixed_line_dual(const Mat3& g, const CycNum& alpha) {
  const Mat3 shifted = g - Mat3::scalar(alpha);
  for (int i = 0; i < 3; ++i) {
    int lead = -1;
    for (int j = 0; j < 3 && lead < 0; ++j)
      if (!shifted.at(i, j).is_zero()) lead = j;
    if (lead < 0) continue;
    const CycNum inv = shifted.at(i, lead).inverse();
    return Vec3{shifted.at(i, 0) * inv, shifted.at(i, 1) * inv, shifted.at(i, 2) * inv};
  }
  throw engine_bug_error("reflection shift has no nonzero row");
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::optional<ReflectionData> is_reflection(const Mat3& g) {
  if (g.is_scalar())
    throw input_error("scalar matrix is the identity in PGL3; the identity is not a reflection");
  const auto re = repeated_eigenvalue(g);
  if (!re) return std::nullopt;
  const CycNum& alpha = re->first;
  // A pointwise-fixed line needs the repeated eigenvalue to act on a full
  // plane; a rank-two shift means a nontrivial Jordan block instead.
  if (kernel3(g - Mat3::scalar(alpha)).dim() != 2) return std::nullopt;
  ReflectionData r;
  r.order = element_order(g, Mode::PROJECTIVE);
  r.line = fixed_line_dual(g, alpha);
  return r;
}

std::optional<ReflectionData> is_reflection(const ProjElement& g) {
  return is_reflection(g.rep());
}

std::vector<int> reflection_indices(const MatrixGroup& g, std::optional<long> order_filter) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    const Mat3& m = g.elements[i];
    if (m.is_scalar()) continue;
    const auto r = is_reflection(m);
    if (!r) continue;
    if (order_filter && r->order != *order_filter) continue;
    out.push_back(static_cast<int>(i));
  }
  return out;
}

bool reflection_generated(const MatrixGroup& g, std::optional<long> order_filter) {
  const std::vector<int> refl = reflection_indices(g, order_filter);
  if (refl.empty()) return false;
  const IndexedGroup ig = build_indexed(g);
  return subgroup_closure(ig, refl).size() == g.elements.size();
}

MatrixGroup reflection_lift(const MatrixGroup& g, std::optional<long> order_filter,
                            long bound) {
  if (g.mode != Mode::PROJECTIVE)
    throw input_error("reflection lift expects a projective group");
  const std::vector<int> refl = reflection_indices(g, order_filter);
  if (refl.empty())
    throw input_error("group has no reflections of the requested kind; no reflection lift");
  const IndexedGroup ig = build_indexed(g);
  const std::size_t target = subgroup_closure(ig, refl).size();
  // Small generating set of reflections: scan in element order, keep the
  // ones that enlarge the generated subgroup.  Deterministic.
  std::vector<int> gens_idx;
  std::vector<int> covered{ig.identity};
  for (int idx : refl) {
    if (std::binary_search(covered.begin(), covered.end(), idx)) continue;
    gens_idx.push_back(idx);
    covered = sorted_copy(subgroup_closure(ig, gens_idx));
    if (covered.size() == target) break;
  }
  std::vector<Mat3> lin;
  lin.reserve(gens_idx.size());
  for (int idx : gens_idx) {
    const Mat3& m = g.elements[static_cast<std::size_t>(idx)];
    const CycNum alpha = repeated_eigenvalue(m)->first;
    lin.push_back(alpha.inverse() * m);
  }
  return close(lin, Mode::LINEAR, bound);
}

long linear_reflection_count(const MatrixGroup& g) {
  if (g.mode != Mode::LINEAR)
    throw input_error("pseudo-reflections are counted in a LINEAR group");
  long count = 0;
  const CycNum one(1);
  for (const Mat3& m : g.elements) {
    if (m.is_scalar()) continue;
    const auto re = repeated_eigenvalue(m);
    if (!re || !(re->first == one)) continue;
    if (kernel3(m - Mat3::identity()).dim() != 2) continue;
    ++count;
  }
  return count;
}

namespace {

/// Comparable key identifying a characteristic polynomial exactly: the
/// power-basis coordinates of its three non-leading coefficients at the
/// group conductor.
using TallyKey = std::vector<Rational>;

TallyKey charpoly_key(const Poly<CycNum>& cp, int conductor) {
  TallyKey key;
  for (int i = 2; i >= 0; --i) {
    const CycNum c = cp.coeff(i).embedded(conductor);
    key.insert(key.end(), c.coords().begin(), c.coords().end());
  }
  return key;
}

/// det(I - t*g) is the reversed characteristic polynomial of g.
Poly<CycNum> molien_denominator(const Poly<CycNum>& cp) {
  return Poly<CycNum>(
      std::vector<CycNum>{CycNum(1), cp.coeff(2), cp.coeff(1), cp.coeff(0)});
}

MolienSeries molien_impl(const MatrixGroup& g, int truncation_depth, bool parallel) {
  if (g.mode != Mode::LINEAR)
    throw input_error("Molien series requires a group in LINEAR mode (a chosen linear lift)");
  if (g.elements.empty()) throw input_error("Molien series of an empty group");
  if (truncation_depth < 0) throw input_error("negative truncation depth");
  const int n = static_cast<int>(g.elements.size());
  // The summand 1/det(I - t g) only depends on the characteristic polynomial
  // of g, so tally distinct characteristic polynomials first (a handful of
  // conjugacy-class values) and sum one reduced fraction per distinct value.
  constexpr int kChunk = 64;
  const int nchunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<std::pair<TallyKey, Poly<CycNum>>>> per_chunk(
      static_cast<std::size_t>(nchunks));
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int c = 0; c < nchunks; ++c) {
      auto& local = per_chunk[static_cast<std::size_t>(c)];
      const int hi = std::min(n, (c + 1) * kChunk);
      for (int i = c * kChunk; i < hi; ++i) {
        const Poly<CycNum> cp = g.elements[static_cast<std::size_t>(i)].charpoly();
        local.emplace_back(charpoly_key(cp, g.conductor), molien_denominator(cp));
      }
    }
  } else {
    for (int c = 0; c < nchunks; ++c) {
      auto& local = per_chunk[static_cast<std::size_t>(c)];
      const int hi = std::min(n, (c + 1) * kChunk);
      for (int i = c * kChunk; i < hi; ++i) {
        const Poly<CycNum> cp = g.elements[static_cast<std::size_t>(i)].charpoly();
        local.emplace_back(charpoly_key(cp, g.conductor), molien_denominator(cp));
      }
    }
  }
  // Merge chunk tallies; the map is keyed deterministically, so the final
  // summation order is independent of how the chunks were produced.
  std::map<TallyKey, std::pair<Poly<CycNum>, long>> tally;
  for (auto& local : per_chunk)
    for (auto& [key, den] : local) {
      auto it = tally.find(key);
      if (it == tally.end())
        tally.emplace(std::move(key), std::make_pair(std::move(den), 1L));
      else
        ++it->second.second;
    }
  // Sum the tally terms pairwise (balanced tree) instead of left-to-right:
  // every fraction addition reduces by a polynomial gcd, and a left fold
  // would run that gcd against the full accumulated denominator once per
  // term, which dominates the cost for large groups.
  std::vector<RatFunc<CycNum>> terms;
  terms.reserve(tally.size());
  for (const auto& [key, entry] : tally)
    terms.emplace_back(Poly<CycNum>::constant(CycNum(entry.second)), entry.first);
  while (terms.size() > 1) {
    std::vector<RatFunc<CycNum>> merged;
    merged.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
      merged.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2 == 1) merged.push_back(terms.back());
    terms = std::move(merged);
  }
  RatFunc<CycNum> total = terms.front();
  total = total * CycNum(Rational(1, n));
  MolienSeries ms;
  ms.closed_form = total.map<Rational>([](const CycNum& c) {
    if (!c.is_rational())
      throw engine_bug_error("Molien closed form has an irrational coefficient");
    return c.as_rational();
  });
  ms.truncation = ms.closed_form.series_prefix(truncation_depth + 1);
  if (!(ms.truncation.at(0) == Rational(1)))
    throw engine_bug_error("Molien series does not have constant coefficient 1");
  return ms;
}

}  // namespace

MolienSeries molien(const MatrixGroup& g, int truncation_depth) {
  return molien_impl(g, truncation_depth, true);
}

MolienSeries molien_serial(const MatrixGroup& g, int truncation_depth) {
  return molien_impl(g, truncation_depth, false);
}

nlohmann::json MolienSeries::to_json() const {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& c : closed_form.num().coeffs()) num.push_back(c.str());
  nlohmann::json den = nlohmann::json::array();
  for (const auto& c : closed_form.den().coeffs()) den.push_back(c.str());
  nlohmann::json trunc = nlohmann::json::array();
  for (const auto& c : truncation) trunc.push_back(c.str());
  return nlohmann::json{{"num", num}, {"den", den}, {"truncation", trunc}};
}

CSTResult shephard_todd_degrees(const MolienSeries& m, const MatrixGroup& g) {
  CSTResult result;
  result.reflection_count = linear_reflection_count(g);
  const RatFunc<Rational> one(Poly<Rational>::constant(Rational(1)));
  RatFunc<Rational> r = m.closed_form;
  std::array<int, 3> degrees{};
  bool factored = true;
  for (int slot = 0; slot < 3 && factored; ++slot) {
    if (r == one) {
      factored = false;  // fewer than three factors cannot be a Molien form
      break;
    }
    // First nonzero series coefficient past t^0; it appears no later than
    // max(deg num, deg den) because r - 1 = (num - den)/den.
    const int bound = std::max(r.num().degree(), r.den().degree());
    const std::vector<Rational> s = r.series_prefix(bound + 1);
    int d = 0;
    for (int i = 1; i <= bound && d == 0; ++i)
      if (!(s[static_cast<std::size_t>(i)] == Rational(0))) d = i;
    if (d == 0) {
      factored = false;
      break;
    }
    std::vector<Rational> peel(static_cast<std::size_t>(d) + 1, Rational(0));
    peel.front() = Rational(1);
    peel.back() = Rational(-1);
    r = r * RatFunc<Rational>(Poly<Rational>(std::move(peel)));
    degrees[static_cast<std::size_t>(slot)] = d;
  }
  if (factored && r == one) {
    std::sort(degrees.begin(), degrees.end());
    result.degrees = degrees;
    const long product =
        static_cast<long>(degrees[0]) * degrees[1] * degrees[2];
    const long excess =
        static_cast<long>(degrees[0] - 1) + (degrees[1] - 1) + (degrees[2] - 1);
    if (product == g.order() && excess == result.reflection_count)
      result.verdict = CSTVerdict::POLYNOMIAL;
  }
  return result;
}

nlohmann::json CSTResult::to_json() const {
  nlohmann::json j;
  if (degrees)
    j["degrees"] = nlohmann::json::array({(*degrees)[0], (*degrees)[1], (*degrees)[2]});
  else
    j["degrees"] = nullptr;
  j["reflections"] = reflection_count;
  j["verdict"] = verdict == CSTVerdict::POLYNOMIAL ? "POLYNOMIAL" : "NOT_POLYNOMIAL";
  return j;
}

SurfaceDescriptor weighted_projective_model(const CSTResult& c) {
  if (c.verdict != CSTVerdict::POLYNOMIAL || !c.degrees)
    throw input_error(
        "weighted projective model requires a POLYNOMIAL invariant-ring verdict");
  const std::array<int, 3>& d = *c.degrees;
  if (d[0] == 1 && d[1] == 1 && d[2] == 1) return standard_surface(SurfaceKind::P2);
  SurfaceDescriptor s;
  s.kind = SurfaceKind::WEIGHTED_PROJECTIVE;
  s.weights = d;
  s.toric_form = true;
  return s;
}

}  // namespace ratcert
