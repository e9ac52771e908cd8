#include "ratcert/piclattice.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ratcert/cyclotomic.hpp"
#include "ratcert/error.hpp"
#include "ratcert/rational.hpp"

namespace ratcert {

namespace {

using RatMat = std::vector<std::vector<Rational>>;

// A D12 element r^k s^j with k in 0..5, j in 0..1; s r^k = r^-k s.
struct D12 {
  int k = 0;
  int j = 0;

  friend bool operator==(const D12& a, const D12& b) { return a.k == b.k && a.j == b.j; }
  friend bool operator<(const D12& a, const D12& b) {
    return a.j != b.j ? a.j < b.j : a.k < b.k;
  }
};

D12 mul(const D12& a, const D12& b) {
  int k = a.k + (a.j ? 6 - b.k : b.k);
  return {k % 6, a.j ^ b.j};
}

D12 inv(const D12& a) { return a.j ? a : D12{(6 - a.k) % 6, 0}; }

std::string label_of(const D12& g) {
  if (g.k == 0) return g.j ? "s" : "e";
  std::string name = "r";
  if (g.k > 1) name += std::to_string(g.k);
  if (g.j) name += "s";
  return name;
}

D12 parse_label(const std::string& label) {
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 6; ++k) {
      if (label == label_of({k, j})) return {k, j};
    }
  }
  throw input_error("unknown D12 element label: " + label);
}

// Image of hexagon position x (0-based) under r^k s^j: reflect, then rotate.
int hexagon_image(const D12& g, int x) {
  int y = g.j ? (6 - x) % 6 : x;
  return (g.k + y) % 6;
}

const std::vector<IntVec>& hexagon_classes() {
  static const std::vector<IntVec> classes = {
      {0, 1, 0, 0}, {1, -1, -1, 0}, {0, 0, 1, 0},
      {1, 0, -1, -1}, {0, 0, 0, 1}, {1, -1, 0, -1},
  };
  return classes;
}

// Action matrix on the blowup basis (h, e1, e2, e3): the hexagon permutation
// determines the images of e1 = C0, e2 = C2, e3 = C4, and h = C0 + C1 + C2.
IntMat action_matrix(const D12& g) {
  const std::vector<IntVec>& c = hexagon_classes();
  IntMat a(4, std::vector<long>(4, 0));
  std::vector<IntVec> images(4, IntVec(4, 0));
  for (int t = 0; t < 3; ++t) {
    const IntVec& img = c[hexagon_image(g, 2 * t)];
    for (int row = 0; row < 4; ++row) images[1 + t][row] = img[row];
  }
  for (int t = 0; t < 3; ++t) {
    const IntVec& img = c[hexagon_image(g, t)];
    for (int row = 0; row < 4; ++row) images[0][row] += img[row];
  }
  for (int col = 0; col < 4; ++col) {
    for (int row = 0; row < 4; ++row) a[row][col] = images[col][row];
  }
  return a;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size();
  IntMat p(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) p[i][j] += a[i][k] * b[k][j];
    }
  }
  return p;
}

// Row rank over Q by Gaussian elimination.
int rational_rank(RatMat m) {
  int rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(m.size()); ++col) {
    std::size_t pivot = m.size();
    for (std::size_t row = rank; row < m.size(); ++row) {
      if (m[row][col] != Rational(0)) {
        pivot = row;
        break;
      }
    }
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (row == static_cast<std::size_t>(rank) || m[row][col] == Rational(0)) continue;
      Rational f = m[row][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[row][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Signature of a symmetric rational matrix by exact congruence
// diagonalization; returns (positives, negatives), throwing on degeneracy.
std::pair<int, int> symmetric_signature(RatMat m) {
  int n = static_cast<int>(m.size());
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == Rational(0)) {
      int swap_with = -1, mix_with = -1;
      for (int j = k + 1; j < n; ++j) {
        if (swap_with < 0 && m[j][j] != Rational(0)) swap_with = j;
        if (mix_with < 0 && m[k][j] != Rational(0)) mix_with = j;
      }
      if (swap_with >= 0) {
        std::swap(m[k], m[swap_with]);
        for (int i = 0; i < n; ++i) std::swap(m[i][k], m[i][swap_with]);
      } else if (mix_with >= 0) {
        for (int j = 0; j < n; ++j) m[k][j] += m[mix_with][j];
        for (int i = 0; i < n; ++i) m[i][k] += m[i][mix_with];
      } else {
        throw engine_bug_error("degenerate intersection form: signature undefined");
      }
    }
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == Rational(0)) continue;
      Rational f = m[i][k] / m[k][k];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[k][j];
      for (int j = 0; j < n; ++j) m[j][i] -= f * m[j][k];
    }
    (m[k][k] > Rational(0) ? pos : neg) += 1;
  }
  return {pos, neg};
}

}  // namespace

long PicLattice::pair(const IntVec& v, const IntVec& w) const {
  if (v.size() != static_cast<std::size_t>(rank) || w.size() != static_cast<std::size_t>(rank)) {
    throw input_error("intersection pairing: vector length does not match lattice rank");
  }
  long total = 0;
  for (int i = 0; i < rank; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank; ++j) total += v[i] * gram[i][j] * w[j];
  }
  return total;
}

IntVec PicLattice::apply(const IntMat& a, const IntVec& v) const {
  IntVec out(rank, 0);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) out[i] += a[i][j] * v[j];
  }
  return out;
}

const IntMat& PicLattice::action_of(const std::string& label) const {
  auto it = action.find(label);
  if (it == action.end()) throw input_error("no action matrix for element label: " + label);
  return it->second;
}

void PicLattice::validate() const {
  if (rank <= 0) throw engine_bug_error("Picard lattice has nonpositive rank");
  auto square = [&](const IntMat& m, const std::string& what) {
    if (m.size() != static_cast<std::size_t>(rank)) {
      throw engine_bug_error(what + " is not rank x rank");
    }
    for (const auto& row : m) {
      if (row.size() != static_cast<std::size_t>(rank)) {
        throw engine_bug_error(what + " is not rank x rank");
      }
    }
  };
  square(gram, "gram matrix");
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      if (gram[i][j] != gram[j][i]) throw engine_bug_error("gram matrix is not symmetric");
    }
  }
  RatMat g(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) g[i][j] = Rational(gram[i][j]);
  }
  auto [pos, neg] = symmetric_signature(g);
  if (pos != 1 || neg != rank - 1) {
    throw engine_bug_error("intersection form does not have signature (1, rank-1)");
  }
  if (canonical.size() != static_cast<std::size_t>(rank)) {
    throw engine_bug_error("canonical class has wrong length");
  }
  for (const IntVec& c : minus_one_classes) {
    if (pair(c, c) != -1) throw engine_bug_error("minus-one class with self-intersection != -1");
    if (pair(c, canonical) != -1) throw engine_bug_error("minus-one class with c.K != -1");
  }
  for (const auto& [label, a] : action) {
    square(a, "action matrix " + label);
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        long entry = 0;
        for (int p = 0; p < rank; ++p) {
          for (int q = 0; q < rank; ++q) entry += a[p][i] * gram[p][q] * a[q][j];
        }
        if (entry != gram[i][j]) {
          throw engine_bug_error("action matrix " + label + " is not a gram isometry");
        }
      }
    }
    if (apply(a, canonical) != canonical) {
      throw engine_bug_error("action matrix " + label + " moves the canonical class");
    }
  }
}

nlohmann::json PicLattice::to_json() const {
  nlohmann::json act = nlohmann::json::object();
  for (const auto& [label, a] : action) act[label] = a;
  return {{"rank", rank},
          {"gram", gram},
          {"canonical", canonical},
          {"minus_one_classes", minus_one_classes},
          {"action", act}};
}

std::vector<std::string> d12_elements() {
  std::vector<std::string> out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 6; ++k) out.push_back(label_of({k, j}));
  }
  return out;
}

std::string d12_multiply(const std::string& a, const std::string& b) {
  return label_of(mul(parse_label(a), parse_label(b)));
}

std::string d12_inverse(const std::string& a) { return label_of(inv(parse_label(a))); }

namespace {

std::set<D12> subgroup_of(const std::vector<std::string>& generators) {
  std::vector<D12> gens;
  gens.reserve(generators.size());
  for (const std::string& s : generators) gens.push_back(parse_label(s));
  std::set<D12> elements{D12{0, 0}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<D12> next = elements;
    for (const D12& h : elements) {
      for (const D12& g : gens) {
        if (next.insert(mul(h, g)).second) grew = true;
      }
    }
    elements = std::move(next);
  }
  return elements;
}

std::vector<std::string> sorted_labels(const std::set<D12>& elements) {
  std::vector<std::string> out;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 6; ++k) {
      if (elements.count({k, j})) out.push_back(label_of({k, j}));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> d12_subgroup(const std::vector<std::string>& generators) {
  return sorted_labels(subgroup_of(generators));
}

std::vector<std::string> d12_normalizer(const std::vector<std::string>& generators) {
  std::set<D12> h = subgroup_of(generators);
  std::set<D12> normalizer;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 6; ++k) {
      D12 g{k, j};
      bool normalizes = true;
      for (const D12& x : h) {
        if (!h.count(mul(mul(g, x), inv(g)))) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) normalizer.insert(g);
    }
  }
  return sorted_labels(normalizer);
}

PicLattice dp6_lattice() {
  PicLattice lattice;
  lattice.rank = 4;
  lattice.gram = {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}};
  lattice.canonical = {-3, 1, 1, 1};
  lattice.minus_one_classes = hexagon_classes();
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 6; ++k) {
      D12 g{k, j};
      lattice.action[label_of(g)] = action_matrix(g);
    }
  }
  lattice.validate();
  // Group-level checks beyond validate(): the label map is a faithful
  // homomorphism into the isometries computed above.
  for (const std::string& a : d12_elements()) {
    for (const std::string& b : d12_elements()) {
      if (mat_mul(lattice.action_of(a), lattice.action_of(b)) !=
          lattice.action_of(d12_multiply(a, b))) {
        throw engine_bug_error("D12 action is not a homomorphism at " + a + " * " + b);
      }
    }
  }
  for (const std::string& a : d12_elements()) {
    for (const std::string& b : d12_elements()) {
      if (a < b && lattice.action_of(a) == lattice.action_of(b)) {
        throw engine_bug_error("D12 action is not faithful: " + a + " = " + b);
      }
    }
  }
  return lattice;
}

int invariant_rank(const PicLattice& lattice, const std::vector<std::string>& labels) {
  RatMat stacked;
  for (const std::string& label : labels) {
    const IntMat& a = lattice.action_of(label);
    for (int i = 0; i < lattice.rank; ++i) {
      std::vector<Rational> row(lattice.rank);
      for (int j = 0; j < lattice.rank; ++j) {
        row[j] = Rational(a[i][j] - (i == j ? 1 : 0));
      }
      stacked.push_back(std::move(row));
    }
  }
  return lattice.rank - rational_rank(std::move(stacked));
}

nlohmann::json MinimalityResult::to_json() const {
  if (minimal) return {{"minimal", true}, {"witness", "none exists"}};
  return {{"minimal", false}, {"witness", witness}};
}

MinimalityResult minimality_test_dp6(const std::vector<std::string>& generators) {
  PicLattice lattice = dp6_lattice();
  const std::vector<IntVec>& c = hexagon_classes();
  // A witness must be invariant under the normalizer of H, not just H: only
  // then is the contraction forced for every ambient minimal action with H
  // normal.  H itself is contained in its normalizer.
  std::vector<D12> normalizer;
  for (const std::string& label : d12_normalizer(generators)) {
    normalizer.push_back(parse_label(label));
  }
  bool disjoint[6][6];
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) disjoint[i][j] = lattice.pair(c[i], c[j]) == 0;
  }
  for (int mask = 1; mask < 64; ++mask) {
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < 6 && ok; ++j) {
        if ((mask >> j & 1) && !disjoint[i][j]) ok = false;
      }
    }
    for (const D12& g : normalizer) {
      if (!ok) break;
      int image = 0;
      for (int i = 0; i < 6; ++i) {
        if (mask >> i & 1) image |= 1 << hexagon_image(g, i);
      }
      if (image != mask) ok = false;
    }
    if (ok) {
      MinimalityResult result;
      result.minimal = false;
      for (int i = 0; i < 6; ++i) {
        if (mask >> i & 1) result.witness.push_back(i);
      }
      return result;
    }
  }
  return MinimalityResult{};
}

long lefschetz_count(const PicLattice& lattice, const std::string& label) {
  const IntMat& a = lattice.action_of(label);
  long trace = 0;
  for (int i = 0; i < lattice.rank; ++i) trace += a[i][i];
  return 2 + trace;
}

std::array<long, 3> holo_lefschetz_order3_solve() {
  CycNum omega = CycNum::zeta(3);
  CycNum minus_third(Rational(-1, 3));
  std::array<CycNum, 3> coeff = {minus_third * omega.inverse(),
                                 minus_third * omega.pow(2).inverse(),
                                 CycNum(Rational(1, 3))};
  // Split the Q(omega)-linear equation into two rational equations on the
  // power basis (1, omega) and adjoin the integer count equation a+b+c = 3.
  RatMat system(3, std::vector<Rational>(4));
  for (int v = 0; v < 3; ++v) system[0][v] = Rational(1);
  system[0][3] = Rational(3);
  for (int v = 0; v < 3; ++v) {
    std::vector<Rational> coords = coeff[v].embedded(3).coords();
    system[1][v] = coords[0];
    system[2][v] = coords[1];
  }
  system[1][3] = Rational(1);
  system[2][3] = Rational(0);
  // Gaussian elimination; the system must be uniquely solvable.
  for (int k = 0; k < 3; ++k) {
    int pivot = -1;
    for (int row = k; row < 3; ++row) {
      if (system[row][k] != Rational(0)) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) {
      throw engine_bug_error("holomorphic Lefschetz system is singular");
    }
    std::swap(system[k], system[pivot]);
    for (int row = 0; row < 3; ++row) {
      if (row == k || system[row][k] == Rational(0)) continue;
      Rational f = system[row][k] / system[k][k];
      for (int col = k; col < 4; ++col) system[row][col] -= f * system[k][col];
    }
  }
  std::array<long, 3> counts{};
  for (int v = 0; v < 3; ++v) {
    Rational value = system[v][3] / system[v][v];
    long found = -1;
    for (long t = 0; t <= 3; ++t) {
      if (value == Rational(t)) found = t;
    }
    if (found < 0) {
      throw engine_bug_error("holomorphic Lefschetz system has no nonnegative integer solution");
    }
    counts[v] = found;
  }
  // Substitute back into the original equations over Q(omega).
  CycNum lhs(0);
  for (int v = 0; v < 3; ++v) lhs = lhs + coeff[v] * CycNum(counts[v]);
  if (!(lhs == CycNum(1)) || counts[0] + counts[1] + counts[2] != 3) {
    throw engine_bug_error("holomorphic Lefschetz solution fails resubstitution");
  }
  return counts;
}

}  // namespace ratcert
