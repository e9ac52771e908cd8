#include "ratcert/group.hpp"

#include <unordered_map>

#include "ratcert/error.hpp"

namespace ratcert {

namespace {

/// Coordinate-hash index over matrices sharing one conductor.
class MatIndex {
 public:
  /// Returns the index of m, inserting it when new (-1 sentinel never used).
  int find(const Mat3& m, const std::vector<Mat3>& elements) const {
    auto [lo, hi] = buckets_.equal_range(m.hash());
    for (auto it = lo; it != hi; ++it)
      if (elements[static_cast<std::size_t>(it->second)] == m) return it->second;
    return -1;
  }
  void insert(const Mat3& m, int index) { buckets_.emplace(m.hash(), index); }

 private:
  std::unordered_multimap<std::size_t, int> buckets_;
};

[[noreturn]] void over_bound(long bound, long partial) {
  throw closure_limit_error("group closure exceeded the order bound " + std::to_string(bound) +
                            "; not finite at this scale",
                            partial);
}

}  // namespace

MatrixGroup close(const std::vector<Mat3>& generators, Mode mode, long bound) {
  if (generators.empty()) throw input_error("at least one generator is required");
  MatrixGroup g;
  g.mode = mode;

  if (mode == Mode::LINEAR) {
    long conductor = 1;
    for (const auto& m : generators) {
      if (m.det().is_zero()) throw input_error("generator is singular");
      conductor = lcm_long(conductor, m.conductor());
    }
    if (conductor > kMaxConductor)
      throw conductor_limit_error("generators need a conductor beyond the supported bound");
    g.conductor = static_cast<int>(conductor);
    for (const auto& m : generators) g.generators.push_back(m.embedded(g.conductor));
    g.elements.push_back(Mat3::identity().embedded(g.conductor));
  } else {
    long conductor = 3;
    std::vector<Mat3> det1;
    for (const auto& m : generators) {
      if (m.det().is_zero()) throw input_error("generator is singular");
      det1.push_back(det_normalized(m));
      conductor = lcm_long(conductor, det1.back().conductor());
    }
    if (conductor > kMaxConductor)
      throw conductor_limit_error("generators need a conductor beyond the supported bound");
    g.conductor = static_cast<int>(conductor);
    for (const auto& m : det1) g.generators.push_back(lex_least_det1(m, g.conductor));
    g.elements.push_back(lex_least_det1(Mat3::identity(), g.conductor));
  }

  MatIndex index;
  index.insert(g.elements[0], 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (const auto& gen : g.generators) {
      Mat3 next = g.elements[head] * gen;
      if (g.mode == Mode::PROJECTIVE) next = lex_least_det1(next, g.conductor);
      if (index.find(next, g.elements) >= 0) continue;
      if (static_cast<long>(g.elements.size()) + 1 > bound)
        over_bound(bound, static_cast<long>(g.elements.size()) + 1);
      index.insert(next, static_cast<int>(g.elements.size()));
      g.elements.push_back(std::move(next));
    }
  }
  return g;
}

MatrixGroup close(const GroupInput& input, long bound) {
  return close(input.generators, input.mode, bound);
}

long element_order(const Mat3& g, Mode mode, long bound) {
  if (g.det().is_zero()) throw input_error("singular matrix has no order");
  Mat3 acc = g;
  for (long k = 1; k <= bound; ++k) {
    const bool done = (mode == Mode::LINEAR) ? acc.is_identity() : acc.is_scalar();
    if (done) return k;
    acc = acc * g;
  }
  throw closure_limit_error("element order exceeds the bound " + std::to_string(bound), bound);
}

MatrixGroup projectivize(const MatrixGroup& g) {
  if (g.mode == Mode::PROJECTIVE) return g;
  // Determinant-normalize every element first: the working conductor must
  // accommodate all of them before canonical forms are comparable.
  std::vector<Mat3> det1;
  det1.reserve(g.elements.size());
  long conductor = lcm_long(3, g.conductor);
  for (const auto& m : g.elements) {
    det1.push_back(det_normalized(m));
    conductor = lcm_long(conductor, det1.back().conductor());
  }
  std::vector<Mat3> gen1;
  for (const auto& m : g.generators) {
    gen1.push_back(det_normalized(m));
    conductor = lcm_long(conductor, gen1.back().conductor());
  }
  if (conductor > kMaxConductor)
    throw conductor_limit_error("projectivization needs a conductor beyond the supported bound");

  MatrixGroup p;
  p.mode = Mode::PROJECTIVE;
  p.conductor = static_cast<int>(conductor);
  for (const auto& m : gen1) p.generators.push_back(lex_least_det1(m, p.conductor));
  MatIndex index;
  for (const auto& m : det1) {
    Mat3 canon = lex_least_det1(m, p.conductor);
    if (index.find(canon, p.elements) >= 0) continue;
    index.insert(canon, static_cast<int>(p.elements.size()));
    p.elements.push_back(std::move(canon));
  }
  return p;
}

MatrixGroup sl_lift(const MatrixGroup& g, long bound) {
  if (g.mode != Mode::PROJECTIVE) throw engine_bug_error("lift expects a projective group");
  std::vector<Mat3> gens = g.generators;
  gens.push_back(Mat3::scalar(omega_at(g.conductor)));
  MatrixGroup lift = close(gens, Mode::LINEAR, bound);
  if (lift.order() != 3 * g.order())
    throw engine_bug_error("determinant-1 lift is not three copies of the group");
  return lift;
}

std::vector<Mat3> scalar_elements(const MatrixGroup& g) {
  std::vector<Mat3> out;
  for (const auto& m : g.elements)
    if (m.is_scalar()) out.push_back(m);
  return out;
}

bool is_abelian(const MatrixGroup& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      Mat3 ab = g.generators[i] * g.generators[j];
      Mat3 ba = g.generators[j] * g.generators[i];
      if (g.mode == Mode::PROJECTIVE) {
        ab = lex_least_det1(ab, g.conductor);
        ba = lex_least_det1(ba, g.conductor);
      }
      if (!(ab == ba)) return false;
    }
  return true;
}

std::optional<std::array<Vec3, 3>> simultaneous_diagonalization(const MatrixGroup& g) {
  // Refine the full space by eigenspaces of each generator; a common
  // eigenbasis exists iff the refinement pieces still fill dimension 3.
  // Common eigenlines of the generators are common eigenlines of the group.
  const auto pieces = eigen_refinement(g.generators);
  int total = 0;
  for (const auto& piece : pieces) total += piece.dim();
  if (total < 3) return std::nullopt;
  std::array<Vec3, 3> basis;
  std::size_t k = 0;
  for (const auto& piece : pieces)
    for (const auto& v : piece.basis) {
      if (k == 3) throw engine_bug_error("eigenbasis refinement overflow");
      basis[k++] = v;
    }
  return basis;
}

GroupInput GroupInput::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw input_error("group must be a JSON object");
  GroupInput input;
  if (!j.contains("mode") || !j["mode"].is_string())
    throw input_error("group needs a \"mode\" of \"linear\" or \"projective\"");
  const std::string mode = j["mode"].get<std::string>();
  if (mode == "linear")
    input.mode = Mode::LINEAR;
  else if (mode == "projective")
    input.mode = Mode::PROJECTIVE;
  else
    throw input_error("unknown mode \"" + mode + "\"");
  if (!j.contains("conductor") || !j["conductor"].is_number_integer())
    throw input_error("group needs an integer \"conductor\"");
  const long conductor = j["conductor"].get<long>();
  if (conductor < 1 || conductor > kMaxConductor)
    throw input_error("conductor " + std::to_string(conductor) + " outside the supported range 1.." +
                      std::to_string(kMaxConductor));
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw input_error("group needs a nonempty \"generators\" array");
  for (const auto& gj : j["generators"]) {
    Mat3 m = Mat3::from_json(gj);
    try {
      m = m.embedded(static_cast<int>(conductor));
    } catch (const error&) {
      throw input_error("generator entries do not fit the declared conductor " +
                        std::to_string(conductor));
    }
    input.generators.push_back(std::move(m));
  }
  return input;
}

nlohmann::json GroupInput::to_json(int conductor) const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& m : generators) gens.push_back(m.embedded(conductor).to_json());
  return {{"mode", mode == Mode::LINEAR ? "linear" : "projective"},
          {"conductor", conductor},
          {"generators", gens}};
}

nlohmann::json group_to_json(const MatrixGroup& g) {
  GroupInput input;
  input.mode = g.mode;
  input.generators = g.generators;
  return input.to_json(g.conductor);
}

}  // namespace ratcert
