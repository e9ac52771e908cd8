#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ratcert/group.hpp"

namespace ratcert {

/// Multiplication table of a closed group; all downstream group theory
/// (classes, normal subgroups, quotients) works on indices only.
struct IndexedGroup {
  int n = 0;
  int identity = 0;
  std::vector<std::int32_t> table;  // table[i*n+j] = index of element_i * element_j
  std::vector<std::int32_t> inv;
  std::vector<std::int32_t> elem_order;

  int mul(int i, int j) const {
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
  }
  int conj(int g, int x) const { return mul(mul(g, x), inv[static_cast<std::size_t>(g)]); }
};

/// Cayley-table construction: the parallel builder fans the n^2 products out
/// across threads; the serial builder is the reference implementation.  Both
/// produce identical tables (exact arithmetic, no accumulation order).
IndexedGroup build_indexed(const MatrixGroup& g);
IndexedGroup build_indexed_serial(const MatrixGroup& g);

/// Conjugacy classes as sorted index sets, ordered by least member; the
/// identity class {identity} comes first.
std::vector<std::vector<int>> conjugacy_classes(const IndexedGroup& g);

/// Subgroup generated by `seed`, as a sorted index set.
std::vector<int> subgroup_closure(const IndexedGroup& g, const std::vector<int>& seed);

/// Multiplication table of the subgroup with the given sorted index set,
/// reindexed to 0..|sub|-1 in the order of `sub`.
IndexedGroup sub_indexed(const IndexedGroup& g, const std::vector<int>& sub);

/// Small (greedy) generating set for the subgroup with the given sorted
/// index set: scans the members in order and keeps those that enlarge the
/// closure so far.
std::vector<int> small_generating_set(const IndexedGroup& g, const std::vector<int>& sub);

/// Smallest normal subgroup containing `seed`.
std::vector<int> normal_closure(const IndexedGroup& g, const std::vector<int>& seed);

bool is_subgroup(const IndexedGroup& g, const std::vector<int>& sub);
bool is_normal(const IndexedGroup& g, const std::vector<int>& sub);

/// All normal subgroups, found as joins of normal closures of conjugacy
/// classes (every normal subgroup is the join of the normal closures of the
/// classes it contains).  Sorted by size, then lexicographically.
std::vector<std::vector<int>> normal_subgroups(const IndexedGroup& g);

bool is_simple(const IndexedGroup& g);

/// Whether the elements of order 2 generate the whole group.
bool involution_generation_check(const IndexedGroup& g);

/// Quotient by a normal subgroup, with the coset map.
struct Quotient {
  IndexedGroup group;
  std::vector<int> coset_of;          // element index -> coset index
  std::vector<int> representative;    // coset index -> least element index
};
Quotient quotient_by(const IndexedGroup& g, const std::vector<int>& normal_sub);

/// (order, abelian, element-order histogram): enough to tell apart all the
/// small groups this engine ever needs to name.
struct GroupFingerprint {
  long order = 0;
  bool abelian = false;
  std::vector<std::pair<long, long>> order_histogram;  // (element order, count)

  bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const IndexedGroup& g);

/// Isomorphism-type name for the small groups the classification inspects
/// ("C2", "C3", "C4", "C2xC2", "S3", "C6", "A4", "C3^2:C2", ...); groups
/// outside the recognition table get "order<N>".
std::string iso_tag(const IndexedGroup& g);

bool is_abelian(const IndexedGroup& g);

}  // namespace ratcert
