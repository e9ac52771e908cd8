#pragma once

// Independent check paths used by the test binaries.  Everything here is
// deliberately written against public accessors only and avoids the library
// code paths under test (float evaluation instead of exact arithmetic,
// brute force instead of the production algorithms).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratcert/cyclotomic.hpp"
#include "ratcert/group.hpp"
#include "ratcert/rational.hpp"

namespace oracles {

/// Evaluate a cyclotomic number as a complex float by summing
/// coords[i] * exp(2*pi*i*k/n).  Independent of the exact arithmetic.
inline std::complex<double> complex_eval(const ratcert::CycNum& x) {
  const double pi = 3.14159265358979323846;
  std::complex<double> acc(0.0, 0.0);
  const auto& c = x.coords();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double arg = 2.0 * pi * static_cast<double>(k) / x.conductor();
    acc += c[k].to_double() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return acc;
}

inline bool complex_close(const std::complex<double>& a, const std::complex<double>& b,
                          double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

/// Random cyclotomic value with small coordinates at one of the given
/// conductors.  Deterministic for a fixed generator state.
inline ratcert::CycNum random_cyc(std::mt19937_64& rng, const std::vector<int>& conductors) {
  std::uniform_int_distribution<std::size_t> pick(0, conductors.size() - 1);
  const int n = conductors[pick(rng)];
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  std::vector<ratcert::Rational> coords;
  const int ph = ratcert::euler_phi(n);
  coords.reserve(static_cast<std::size_t>(ph));
  for (int i = 0; i < ph; ++i) coords.emplace_back(num(rng), den(rng));
  return ratcert::CycNum(n, std::move(coords));
}

/// Mode-aware product of two elements of a closed group.
inline ratcert::Mat3 group_product(const ratcert::MatrixGroup& g, const ratcert::Mat3& a,
                                   const ratcert::Mat3& b) {
  ratcert::Mat3 p = a * b;
  if (g.mode == ratcert::Mode::PROJECTIVE) p = ratcert::lex_least_det1(p, g.conductor);
  return p;
}

inline ratcert::Mat3 group_inverse(const ratcert::MatrixGroup& g, const ratcert::Mat3& a) {
  ratcert::Mat3 p = a.inverse();
  if (g.mode == ratcert::Mode::PROJECTIVE) p = ratcert::lex_least_det1(p, g.conductor);
  return p;
}

/// Index of a matrix in the element list by linear scan.
inline int find_element(const ratcert::MatrixGroup& g, const ratcert::Mat3& m) {
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    if (g.elements[i] == m) return static_cast<int>(i);
  return -1;
}

/// Conjugacy classes by direct matrix conjugation (no multiplication table).
inline std::vector<std::vector<int>> brute_conjugacy(const ratcert::MatrixGroup& g) {
  const int n = static_cast<int>(g.elements.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::set<int> cls;
    for (int h = 0; h < n; ++h) {
      const ratcert::Mat3 c = group_product(
          g, group_product(g, g.elements[static_cast<std::size_t>(h)],
                           g.elements[static_cast<std::size_t>(x)]),
          group_inverse(g, g.elements[static_cast<std::size_t>(h)]));
      cls.insert(find_element(g, c));
    }
    std::vector<int> sorted(cls.begin(), cls.end());
    for (int y : sorted) seen[static_cast<std::size_t>(y)] = 1;
    classes.push_back(std::move(sorted));
  }
  return classes;
}

/// Closure of an index seed by direct matrix products.
inline std::vector<int> brute_closure(const ratcert::MatrixGroup& g, std::vector<int> seed) {
  std::set<int> in(seed.begin(), seed.end());
  in.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> snapshot(in.begin(), in.end());
    for (int a : snapshot)
      for (int b : snapshot) {
        const int p = find_element(g, group_product(g, g.elements[static_cast<std::size_t>(a)],
                                                    g.elements[static_cast<std::size_t>(b)]));
        if (in.insert(p).second) grew = true;
      }
  }
  return std::vector<int>(in.begin(), in.end());
}

/// Every normal subgroup of a small group, by enumerating closures of seeds
/// of up to three elements and filtering by conjugation-invariance.
inline std::vector<std::vector<int>> brute_normal_subgroups(const ratcert::MatrixGroup& g) {
  const int n = static_cast<int>(g.elements.size());
  std::set<std::vector<int>> subs;
  subs.insert(brute_closure(g, {}));
  for (int a = 0; a < n; ++a) {
    subs.insert(brute_closure(g, {a}));
    for (int b = a + 1; b < n; ++b) {
      subs.insert(brute_closure(g, {a, b}));
      for (int c = b + 1; c < n; ++c) subs.insert(brute_closure(g, {a, b, c}));
    }
  }
  std::vector<std::vector<int>> normal;
  for (const auto& sub : subs) {
    std::set<int> members(sub.begin(), sub.end());
    bool ok = true;
    for (int h = 0; h < n && ok; ++h)
      for (int s : sub) {
        const ratcert::Mat3 c = group_product(
            g, group_product(g, g.elements[static_cast<std::size_t>(h)],
                             g.elements[static_cast<std::size_t>(s)]),
            group_inverse(g, g.elements[static_cast<std::size_t>(h)]));
        if (!members.count(find_element(g, c))) {
          ok = false;
          break;
        }
      }
    if (ok) normal.push_back(sub);
  }
  std::sort(normal.begin(), normal.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return normal;
}

/// Molien truncation by direct summation: each summand 1/det(I - t g) is
/// expanded with the linear recurrence s_k = c1 s_{k-1} - c2 s_{k-2} +
/// c3 s_{k-3} (c1 = tr g, c2 = minor sum, c3 = det g), summed element by
/// element and divided by the order.  No rational-function machinery.
inline std::vector<ratcert::Rational> molien_truncation_by_summation(
    const ratcert::MatrixGroup& g, int depth) {
  using ratcert::CycNum;
  std::vector<CycNum> acc(static_cast<std::size_t>(depth) + 1, CycNum(0));
  for (const ratcert::Mat3& m : g.elements) {
    const CycNum c1 = m.trace();
    const CycNum c2 = m.minor_sum();
    const CycNum c3 = m.det();
    std::vector<CycNum> s(static_cast<std::size_t>(depth) + 1, CycNum(0));
    s[0] = CycNum(1);
    for (int k = 1; k <= depth; ++k) {
      CycNum v = c1 * s[static_cast<std::size_t>(k - 1)];
      if (k >= 2) v -= c2 * s[static_cast<std::size_t>(k - 2)];
      if (k >= 3) v += c3 * s[static_cast<std::size_t>(k - 3)];
      s[static_cast<std::size_t>(k)] = v;
    }
    for (int k = 0; k <= depth; ++k) acc[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k)];
  }
  std::vector<ratcert::Rational> out;
  const ratcert::Rational inv_order(1, g.order());
  for (int k = 0; k <= depth; ++k)
    out.push_back(acc[static_cast<std::size_t>(k)].as_rational() * inv_order);
  return out;
}

/// All JSON-pointer paths to primitive leaves (strings, numbers, booleans,
/// nulls) of a document, in document order.
inline void collect_leaf_pointers(const nlohmann::json& j, const std::string& prefix,
                                  std::vector<std::string>& out) {
  auto escape = [](const std::string& key) {
    std::string e;
    for (char c : key) {
      if (c == '~') e += "~0";
      else if (c == '/') e += "~1";
      else e += c;
    }
    return e;
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      collect_leaf_pointers(it.value(), prefix + "/" + escape(it.key()), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      collect_leaf_pointers(j[i], prefix + "/" + std::to_string(i), out);
  } else {
    out.push_back(prefix);
  }
}

inline std::vector<std::string> leaf_pointers(const nlohmann::json& j) {
  std::vector<std::string> out;
  collect_leaf_pointers(j, "", out);
  return out;
}

/// Replaces the leaf at a JSON-pointer path with a clearly corrupted value of
/// the same JSON type, guaranteeing the document changes.
inline void corrupt_leaf(nlohmann::json& doc, const std::string& pointer) {
  nlohmann::json& v = doc.at(nlohmann::json::json_pointer(pointer));
  if (v.is_string())
    v = v.get<std::string>() + "corrupted";
  else if (v.is_boolean())
    v = !v.get<bool>();
  else if (v.is_number_integer())
    v = v.get<long long>() == 999999 ? 1000000 : 999999;
  else if (v.is_number())
    v = 999999.5;
  else
    v = "corrupted";
}

}  // namespace oracles
