#include "spinlab/boxes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spinlab/errors.hpp"
#include "spinlab/kernels.hpp"

namespace spinlab {

namespace {

constexpr int outcome_index(int value) { return value == 1 ? 0 : 1; }
constexpr int outcome_value(int index) { return index == 0 ? 1 : -1; }

const char* label(int node) {
  static constexpr const char* kLabels[4] = {"a", "a'", "b", "b'"};
  return kLabels[node];
}

// Union-find where each node stores its parity (0 same, 1 antipodal)
// relative to its parent.
struct ParityForest {
  std::array<int, 4> parent{0, 1, 2, 3};
  std::array<int, 4> parity{0, 0, 0, 0};

  std::pair<int, int> find(int v) const {
    int p = 0;
    while (parent[v] != v) {
      p ^= parity[v];
      v = parent[v];
    }
    return {v, p};
  }
};

std::string relation(int u, int v, int parity) {
  return std::string(label(u)) + (parity == 0 ? " = " : " = -") + label(v);
}

BehaviorBox transform(const BehaviorBox& in, unsigned flips, bool swap_alice, bool swap_bob,
                      bool swap_parties) {
  BehaviorBox::Entries out{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
          int nx = swap_alice ? 1 - x : x;
          int ny = swap_bob ? 1 - y : y;
          int na = ((flips >> nx) & 1u) ? 1 - ai : ai;
          int nb = ((flips >> (2 + ny)) & 1u) ? 1 - bi : bi;
          if (swap_parties) {
            std::swap(nx, ny);
            std::swap(na, nb);
          }
          out[BehaviorBox::index(nx, ny, na, nb)] = in.entries()[BehaviorBox::index(x, y, ai, bi)];
        }
  return BehaviorBox(out);
}

}  // namespace

BehaviorBox::BehaviorBox(const Entries& p) : p_(p) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double sum = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double v = p_[index(x, y, a, b)];
          if (!std::isfinite(v) || v < 0.0) {
            throw DomainError("behavior box entries must be finite and non-negative");
          }
          sum += v;
        }
      }
      if (std::abs(sum - 1.0) > kExactTol) {
        std::ostringstream os;
        os << "behavior box block (x=" << x << ", y=" << y << ") sums to " << sum;
        throw DomainError(os.str());
      }
    }
  }
}

BehaviorBox BehaviorBox::uniform() {
  Entries e;
  e.fill(0.25);
  return BehaviorBox(e);
}

BehaviorBox BehaviorBox::deterministic(std::array<int, 2> alice, std::array<int, 2> bob) {
  Entries e{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) e[index(x, y, outcome_index(alice[x]), outcome_index(bob[y]))] = 1.0;
  return BehaviorBox(e);
}

BehaviorBox BehaviorBox::from_correlator_signs(std::array<std::array<int, 2>, 2> signs) {
  Entries e{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (signs[x][y] == 1) {
        e[index(x, y, 0, 0)] = 0.5;
        e[index(x, y, 1, 1)] = 0.5;
      } else {
        e[index(x, y, 0, 1)] = 0.5;
        e[index(x, y, 1, 0)] = 0.5;
      }
    }
  }
  return BehaviorBox(e);
}

double BehaviorBox::p(int x, int y, int a, int b) const {
  return p_[index(x, y, outcome_index(a), outcome_index(b))];
}

double BehaviorBox::correlator(int x, int y) const {
  double e = 0.0;
  for (int ai = 0; ai < 2; ++ai)
    for (int bi = 0; bi < 2; ++bi)
      e += outcome_value(ai) * outcome_value(bi) * p_[index(x, y, ai, bi)];
  return e;
}

double BehaviorBox::alice_plus(int x, int y) const {
  return p_[index(x, y, 0, 0)] + p_[index(x, y, 0, 1)];
}

double BehaviorBox::bob_plus(int x, int y) const {
  return p_[index(x, y, 0, 0)] + p_[index(x, y, 1, 0)];
}

BehaviorBox quantum_box(BellKind kind, const std::array<Vec3, 2>& alice,
                        const std::array<Vec3, 2>& bob) {
  BehaviorBox::Entries e{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const JointProbabilities jp = joint_probabilities(kind, alice[x], bob[y]);
      // Clamp round-off negatives (|v| ~ 1e-17) so the box validates.
      e[BehaviorBox::index(x, y, 0, 0)] = std::max(0.0, jp.p_pp);
      e[BehaviorBox::index(x, y, 0, 1)] = std::max(0.0, jp.p_pm);
      e[BehaviorBox::index(x, y, 1, 0)] = std::max(0.0, jp.p_mp);
      e[BehaviorBox::index(x, y, 1, 1)] = std::max(0.0, jp.p_mm);
    }
  }
  return BehaviorBox(e);
}

NoSignallingReport no_signalling_check(const BehaviorBox& box) {
  NoSignallingReport rep;
  for (int x = 0; x < 2; ++x) {
    const double d = std::abs(box.alice_plus(x, 0) - box.alice_plus(x, 1));
    rep.max_deviation = std::max(rep.max_deviation, d);
    if (d > kExactTol) {
      std::ostringstream os;
      os << "Alice P(+1|" << label(x) << ") is " << box.alice_plus(x, 0) << " with b but "
         << box.alice_plus(x, 1) << " with b'";
      rep.violations.push_back(os.str());
    }
  }
  for (int y = 0; y < 2; ++y) {
    const double d = std::abs(box.bob_plus(0, y) - box.bob_plus(1, y));
    rep.max_deviation = std::max(rep.max_deviation, d);
    if (d > kExactTol) {
      std::ostringstream os;
      os << "Bob P(+1|" << label(2 + y) << ") is " << box.bob_plus(0, y) << " with a but "
         << box.bob_plus(1, y) << " with a'";
      rep.violations.push_back(os.str());
    }
  }
  rep.no_signalling = rep.violations.empty();
  return rep;
}

ChshResult chsh_from_correlators(const std::array<std::array<double, 2>, 2>& e) {
  ChshResult best;
  best.correlators = e;
  best.value = -1.0;
  const double total = e[0][0] + e[0][1] + e[1][0] + e[1][1];
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double v = std::abs(total - 2.0 * e[x][y]);
      if (v > best.value) {
        best.value = v;
        best.negative_x = x;
        best.negative_y = y;
      }
    }
  }
  return best;
}

ChshResult chsh_value(const BehaviorBox& box) {
  std::array<std::array<double, 2>, 2> e{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) e[x][y] = box.correlator(x, y);
  return chsh_from_correlators(e);
}

LhvResult lhv_max_chsh() {
  LhvResult res;
  res.value = -1.0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    LocalStrategy s;
    for (int k = 0; k < 2; ++k) {
      s.alice[k] = (mask >> k) & 1u ? -1 : 1;
      s.bob[k] = (mask >> (2 + k)) & 1u ? -1 : 1;
    }
    const double v = chsh_value(BehaviorBox::deterministic(s.alice, s.bob)).value;
    ++res.strategies_checked;
    if (v > res.value) {
      res.value = v;
      res.witness = s;
      res.maximizing_count = 1;
    } else if (v == res.value) {
      ++res.maximizing_count;
    }
  }
  return res;
}

BehaviorBox pr_box() { return BehaviorBox::from_correlator_signs({{{+1, +1}, {+1, -1}}}); }

std::string_view to_string(ConservationStatus status) {
  switch (status) {
    case ConservationStatus::consistent:
      return "consistent";
    case ConservationStatus::inconsistent:
      return "inconsistent";
    case ConservationStatus::not_applicable:
      return "not-applicable";
  }
  return "?";
}

ConservationVerdict conservation_filter(const BehaviorBox& box) {
  ConservationVerdict v;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double e = box.correlator(x, y);
      if (std::abs(std::abs(e) - 1.0) > kExactTol) {
        std::ostringstream os;
        os << "E(" << label(x) << "," << label(2 + y) << ") = " << e
           << " is not +-1; filter applies to extremal boxes only";
        v.trace.push_back(os.str());
        v.status = ConservationStatus::not_applicable;
        return v;
      }
    }
  }

  ParityForest forest;
  std::vector<std::string> established;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int u = x;
      const int w = 2 + y;
      const int want = box.correlator(x, y) > 0.0 ? 0 : 1;
      const auto [ru, pu] = forest.find(u);
      const auto [rw, pw] = forest.find(w);
      std::ostringstream head;
      head << "E(" << label(u) << "," << label(w) << ") = " << (want == 0 ? "+1" : "-1");
      if (ru != rw) {
        forest.parent[rw] = ru;
        forest.parity[rw] = pu ^ pw ^ want;
        established.push_back(relation(u, w, want));
        v.trace.push_back(head.str() + ": " + established.back());
        continue;
      }
      const int implied = pu ^ pw;
      std::string chain;
      for (std::size_t i = 0; i < established.size(); ++i) {
        chain += (i == 0 ? "" : ", ") + established[i];
      }
      v.trace.push_back(chain + " => " + relation(u, w, implied));
      if (implied == want) {
        v.trace.push_back(head.str() + " agrees: " + relation(u, w, want));
        established.push_back(relation(u, w, want));
      } else {
        v.trace.push_back(head.str() + " requires " + relation(u, w, want) + ": contradiction, " +
                          label(u) + " = -" + label(u));
        v.status = ConservationStatus::inconsistent;
        return v;
      }
    }
  }
  v.status = ConservationStatus::consistent;
  return v;
}

std::vector<BehaviorBox> correlator_sign_family() {
  std::vector<BehaviorBox> out;
  out.reserve(16);
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::array<std::array<int, 2>, 2> s{};
    for (int k = 0; k < 4; ++k) s[k / 2][k % 2] = (mask >> k) & 1u ? -1 : 1;
    out.push_back(BehaviorBox::from_correlator_signs(s));
  }
  return out;
}

bool is_relabeling_of(const BehaviorBox& a, const BehaviorBox& b) {
  for (unsigned flips = 0; flips < 16; ++flips)
    for (int sa = 0; sa < 2; ++sa)
      for (int sb = 0; sb < 2; ++sb)
        for (int sp = 0; sp < 2; ++sp)
          if (transform(a, flips, sa != 0, sb != 0, sp != 0) == b) return true;
  return false;
}

ChshScanResult tsirelson_scan(BellKind kind, Plane plane, int n) {
  return kernels::omp::chsh_scan(kind, plane, n);
}

}  // namespace spinlab
