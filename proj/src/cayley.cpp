#include "ratcert/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "ratcert/error.hpp"

namespace ratcert {

namespace {

class ElementIndex {
 public:
  explicit ElementIndex(const std::vector<Mat3>& elements) : elements_(elements) {
    for (std::size_t i = 0; i < elements.size(); ++i)
      buckets_.emplace(elements[i].hash(), static_cast<int>(i));
  }
  int find(const Mat3& m) const {
    auto [lo, hi] = buckets_.equal_range(m.hash());
    for (auto it = lo; it != hi; ++it)
      if (elements_[static_cast<std::size_t>(it->second)] == m) return it->second;
    throw engine_bug_error("product left the closed element set");
  }

 private:
  const std::vector<Mat3>& elements_;
  std::unordered_multimap<std::size_t, int> buckets_;
};

int generator_product_index(const MatrixGroup& g, const ElementIndex& index, int i,
                            const Mat3& gen) {
  Mat3 p = g.elements[static_cast<std::size_t>(i)] * gen;
  if (g.mode == Mode::PROJECTIVE) p = lex_least_det1(p, g.conductor);
  return index.find(p);
}

// The only matrix products needed for the full table are the n*k products of each
// element with each generator: every other entry follows by associativity. Writing
// e_j as (canonical representative of) e_p * g_s for a spanning tree of the right
// Cayley graph gives e_i e_j = (e_i e_p) g_s, so
//   table[i][j] = gen_table[table[i][p]][s],
// an integer recurrence. In projective mode the stray unit scalars cancel inside
// the canonicalization, so the identity holds at the level of representatives too.
void fill_table(const MatrixGroup& g, IndexedGroup& ig, const std::vector<int>& gen_table,
                int k) {
  const int n = ig.n;
  if (g.mode == Mode::PROJECTIVE ? !g.elements.front().is_scalar()
                                 : !g.elements.front().is_identity())
    throw engine_bug_error("closed element set does not start at the identity");
  // Spanning tree of the right Cayley graph, rooted at the identity.
  std::vector<int> order, parent(static_cast<std::size_t>(n), -1),
      pgen(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int u = order[head];
    for (int s = 0; s < k; ++s) {
      const int v = gen_table[static_cast<std::size_t>(u) * static_cast<std::size_t>(k) +
                              static_cast<std::size_t>(s)];
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        pgen[static_cast<std::size_t>(v)] = s;
        order.push_back(v);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw engine_bug_error("right Cayley graph of the closed set is not connected");
  // Base column: e_0 is the identity.
  for (int i = 0; i < n; ++i)
    ig.table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)] = i;
  for (std::size_t head = 1; head < order.size(); ++head) {
    const int j = order[head];
    const int p = parent[static_cast<std::size_t>(j)];
    const int s = pgen[static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      const int ip = ig.table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(p)];
      ig.table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(j)] =
          gen_table[static_cast<std::size_t>(ip) * static_cast<std::size_t>(k) +
                    static_cast<std::size_t>(s)];
    }
  }
}

void finish_tables(IndexedGroup& ig) {
  const int n = ig.n;
  // Identity: the row acting as the identity permutation.
  ig.identity = -1;
  for (int i = 0; i < n && ig.identity < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) ok = (ig.mul(i, j) == j);
    if (ok) ig.identity = i;
  }
  if (ig.identity != 0)
    throw engine_bug_error("closure did not place the identity at index 0");
  ig.inv.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int found = -1;
    for (int j = 0; j < n; ++j)
      if (ig.mul(i, j) == ig.identity) {
        found = j;
        break;
      }
    if (found < 0) throw engine_bug_error("element without inverse in closed set");
    ig.inv[static_cast<std::size_t>(i)] = found;
  }
  ig.elem_order.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int acc = i;
    int k = 1;
    while (acc != ig.identity) {
      acc = ig.mul(acc, i);
      ++k;
    }
    ig.elem_order[static_cast<std::size_t>(i)] = k;
  }
}

}  // namespace

IndexedGroup build_indexed_serial(const MatrixGroup& g) {
  IndexedGroup ig;
  ig.n = static_cast<int>(g.elements.size());
  ig.table.assign(static_cast<std::size_t>(ig.n) * static_cast<std::size_t>(ig.n), 0);
  const ElementIndex index(g.elements);
  const int k = static_cast<int>(g.generators.size());
  std::vector<int> gen_table(static_cast<std::size_t>(ig.n) * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < ig.n; ++i)
    for (int s = 0; s < k; ++s)
      gen_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(s)] =
          generator_product_index(g, index, i, g.generators[static_cast<std::size_t>(s)]);
  fill_table(g, ig, gen_table, k);
  finish_tables(ig);
  return ig;
}

IndexedGroup build_indexed(const MatrixGroup& g) {
  IndexedGroup ig;
  ig.n = static_cast<int>(g.elements.size());
  ig.table.assign(static_cast<std::size_t>(ig.n) * static_cast<std::size_t>(ig.n), 0);
  const ElementIndex index(g.elements);
  const int n = ig.n;
  const int k = static_cast<int>(g.generators.size());
  std::vector<int> gen_table(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
  // Each slot is written exactly once, so the result is identical for any schedule.
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < k; ++s)
      gen_table[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                static_cast<std::size_t>(s)] =
          generator_product_index(g, index, i, g.generators[static_cast<std::size_t>(s)]);
  fill_table(g, ig, gen_table, k);
  finish_tables(ig);
  return ig;
}

std::vector<std::vector<int>> conjugacy_classes(const IndexedGroup& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.n; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::set<int> cls;
    for (int h = 0; h < g.n; ++h) cls.insert(g.conj(h, x));
    std::vector<int> sorted(cls.begin(), cls.end());
    for (int y : sorted) seen[static_cast<std::size_t>(y)] = 1;
    classes.push_back(std::move(sorted));
  }
  return classes;
}

std::vector<int> subgroup_closure(const IndexedGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(static_cast<std::size_t>(g.n), 0);
  std::vector<int> queue{g.identity};
  in[static_cast<std::size_t>(g.identity)] = 1;
  for (int s : seed)
    if (!in[static_cast<std::size_t>(s)]) {
      in[static_cast<std::size_t>(s)] = 1;
      queue.push_back(s);
    }
  std::vector<int> gens = seed;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : gens) {
      const int next = g.mul(queue[head], s);
      if (!in[static_cast<std::size_t>(next)]) {
        in[static_cast<std::size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

IndexedGroup sub_indexed(const IndexedGroup& g, const std::vector<int>& sub) {
  const int m = static_cast<int>(sub.size());
  std::vector<int> local(static_cast<std::size_t>(g.n), -1);
  for (int i = 0; i < m; ++i) local[static_cast<std::size_t>(sub[static_cast<std::size_t>(i)])] = i;
  if (sub.empty() || sub.front() != g.identity)
    throw engine_bug_error("subgroup index set does not start at the identity");
  IndexedGroup out;
  out.n = m;
  out.table.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int prod = g.mul(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
      const int loc = local[static_cast<std::size_t>(prod)];
      if (loc < 0) throw engine_bug_error("index set is not closed under multiplication");
      out.table[static_cast<std::size_t>(i) * static_cast<std::size_t>(m) +
                static_cast<std::size_t>(j)] = loc;
    }
  finish_tables(out);
  return out;
}

std::vector<int> small_generating_set(const IndexedGroup& g, const std::vector<int>& sub) {
  std::vector<int> gens;
  std::vector<char> covered(static_cast<std::size_t>(g.n), 0);
  covered[static_cast<std::size_t>(g.identity)] = 1;
  std::size_t covered_count = 1;
  for (int x : sub) {
    if (covered[static_cast<std::size_t>(x)]) continue;
    gens.push_back(x);
    const std::vector<int> closure = subgroup_closure(g, gens);
    covered.assign(static_cast<std::size_t>(g.n), 0);
    covered_count = closure.size();
    for (int y : closure) covered[static_cast<std::size_t>(y)] = 1;
    if (covered_count == sub.size()) break;
  }
  if (covered_count != sub.size())
    throw engine_bug_error("index set is not closed under multiplication");
  return gens;
}

std::vector<int> normal_closure(const IndexedGroup& g, const std::vector<int>& seed) {
  std::set<int> conj_seed;
  for (int s : seed)
    for (int h = 0; h < g.n; ++h) conj_seed.insert(g.conj(h, s));
  return subgroup_closure(g, std::vector<int>(conj_seed.begin(), conj_seed.end()));
}

bool is_subgroup(const IndexedGroup& g, const std::vector<int>& sub) {
  std::vector<char> in(static_cast<std::size_t>(g.n), 0);
  for (int s : sub) in[static_cast<std::size_t>(s)] = 1;
  if (!in[static_cast<std::size_t>(g.identity)]) return false;
  for (int a : sub)
    for (int b : sub)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
  return true;
}

bool is_normal(const IndexedGroup& g, const std::vector<int>& sub) {
  if (!is_subgroup(g, sub)) return false;
  std::vector<char> in(static_cast<std::size_t>(g.n), 0);
  for (int s : sub) in[static_cast<std::size_t>(s)] = 1;
  for (int h = 0; h < g.n; ++h)
    for (int s : sub)
      if (!in[static_cast<std::size_t>(g.conj(h, s))]) return false;
  return true;
}

std::vector<std::vector<int>> normal_subgroups(const IndexedGroup& g) {
  // Seeds: normal closures of single conjugacy-class representatives.  Any
  // normal subgroup is a union of classes and equals the join of the normal
  // closures of those classes, so iterating pairwise joins to a fixpoint
  // enumerates every normal subgroup.
  std::set<std::vector<int>> found;
  found.insert({g.identity});
  for (const auto& cls : conjugacy_classes(g)) found.insert(normal_closure(g, {cls[0]}));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (std::size_t a = 0; a < snapshot.size(); ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        std::vector<int> seed = snapshot[a];
        seed.insert(seed.end(), snapshot[b].begin(), snapshot[b].end());
        std::vector<int> join = subgroup_closure(g, seed);
        if (found.insert(std::move(join)).second) grew = true;
      }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_simple(const IndexedGroup& g) {
  if (g.n <= 1) return false;
  return normal_subgroups(g).size() == 2;
}

bool involution_generation_check(const IndexedGroup& g) {
  std::vector<int> inv2;
  for (int i = 0; i < g.n; ++i)
    if (g.elem_order[static_cast<std::size_t>(i)] == 2) inv2.push_back(i);
  if (inv2.empty()) return false;
  return static_cast<int>(subgroup_closure(g, inv2).size()) == g.n;
}

Quotient quotient_by(const IndexedGroup& g, const std::vector<int>& normal_sub) {
  if (!is_normal(g, normal_sub)) throw engine_bug_error("quotient by a non-normal subgroup");
  Quotient q;
  q.coset_of.assign(static_cast<std::size_t>(g.n), -1);
  for (int i = 0; i < g.n; ++i) {
    if (q.coset_of[static_cast<std::size_t>(i)] >= 0) continue;
    const int id = static_cast<int>(q.representative.size());
    q.representative.push_back(i);
    for (int s : normal_sub) q.coset_of[static_cast<std::size_t>(g.mul(i, s))] = id;
  }
  const int m = static_cast<int>(q.representative.size());
  q.group.n = m;
  q.group.table.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      q.group.table[static_cast<std::size_t>(a) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(b)] =
          q.coset_of[static_cast<std::size_t>(g.mul(q.representative[static_cast<std::size_t>(a)],
                                                    q.representative[static_cast<std::size_t>(b)]))];
  // The identity's coset is discovered first (element 0 is the identity).
  q.group.identity = q.coset_of[static_cast<std::size_t>(g.identity)];
  if (q.group.identity != 0) throw engine_bug_error("quotient identity not at index 0");
  q.group.inv.assign(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (q.group.mul(a, b) == 0) {
        q.group.inv[static_cast<std::size_t>(a)] = b;
        break;
      }
  q.group.elem_order.assign(static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a) {
    int acc = a, k = 1;
    while (acc != 0) {
      acc = q.group.mul(acc, a);
      ++k;
    }
    q.group.elem_order[static_cast<std::size_t>(a)] = k;
  }
  return q;
}

bool is_abelian(const IndexedGroup& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

GroupFingerprint fingerprint(const IndexedGroup& g) {
  GroupFingerprint fp;
  fp.order = g.n;
  fp.abelian = is_abelian(g);
  std::map<long, long> hist;
  for (int i = 0; i < g.n; ++i) ++hist[g.elem_order[static_cast<std::size_t>(i)]];
  fp.order_histogram.assign(hist.begin(), hist.end());
  return fp;
}

std::string iso_tag(const IndexedGroup& g) {
  const GroupFingerprint fp = fingerprint(g);
  using H = std::vector<std::pair<long, long>>;
  struct Row {
    long order;
    bool abelian;
    H hist;
    const char* name;
  };
  // The fingerprint separates these isomorphism types within their orders.
  static const std::vector<Row> known = {
      {1, true, {{1, 1}}, "C1"},
      {2, true, {{1, 1}, {2, 1}}, "C2"},
      {3, true, {{1, 1}, {3, 2}}, "C3"},
      {4, true, {{1, 1}, {2, 1}, {4, 2}}, "C4"},
      {4, true, {{1, 1}, {2, 3}}, "C2xC2"},
      {6, true, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, "C6"},
      {6, false, {{1, 1}, {2, 3}, {3, 2}}, "S3"},
      {9, true, {{1, 1}, {3, 8}}, "C3xC3"},
      {12, false, {{1, 1}, {2, 3}, {3, 8}}, "A4"},
      {12, false, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "D12"},
      {18, false, {{1, 1}, {2, 9}, {3, 8}}, "C3^2:C2"},
  };
  for (const auto& row : known)
    if (row.order == fp.order && row.abelian == fp.abelian && row.hist == fp.order_histogram)
      return row.name;
  return "order" + std::to_string(fp.order);
}

}  // namespace ratcert
