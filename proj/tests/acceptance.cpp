// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact
// (integer counts, exact chain coefficients, exact double equality on values
// that are never computed, only copied); the only tolerances are wall-clock
// budgets.

#include <algorithm>
#include <chrono>
#include <optional>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dmt/category.hpp"
#include "dmt/chain.hpp"
#include "dmt/cli.hpp"
#include "dmt/collapse.hpp"
#include "dmt/flow.hpp"
#include "dmt/io.hpp"
#include "dmt/minmax.hpp"
#include "support/fixtures.hpp"

using namespace dmt;
using namespace dmt::testing;

namespace {

constexpr int kInstances = 1000;
constexpr int kChainsPerInstance = 100;
constexpr int kPathInstances = 200;
constexpr int kLsFunctions = 50;
constexpr double kBudget1 = 30;
constexpr double kBudget8 = 180;
constexpr double kBudget10 = 300;

int failed = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d [%s] %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Instance {
  std::uint64_t seed;
  MorseFunction f;
};

std::vector<Instance> random_instances() {
  const double probabilities[] = {0.3, 0.6, 0.9};
  std::vector<Instance> out;
  for (int i = 0; i < kInstances; ++i) {
    const auto seed = static_cast<std::uint64_t>(i);
    auto k = random_complex(seed, 8, 3);
    out.push_back({seed, random_morse(k, seed * 31 + 7, {probabilities[i % 3]})});
  }
  return out;
}

Chain random_chain(const SimplicialComplex& k, int p, detail::Rng& rng) {
  Chain c(p);
  for (const auto& s : k.cells_of_dim(p)) {
    c.add(s, static_cast<Coefficient>(detail::below(rng, 7)) - 3);
  }
  return c;
}

CellSet sublevel_set(const MorseFunction& f, double a) {
  CellSet out;
  for (std::size_t i = 0; i < f.complex().size(); ++i) {
    if (f.value(i) <= a) out.insert(f.complex().cell(i));
  }
  return out;
}

void criterion_1(const std::vector<Instance>& instances, double build_seconds) {
  Timer t;
  std::size_t cells = 0;
  std::size_t bad = 0;
  for (const auto& [seed, f] : instances) {
    for (const auto& s : f.complex().cells()) {
      ++cells;
      if (!upper_set(f, s).empty() && !lower_set(f, s).empty()) ++bad;
    }
    try {
      validate(f.complex(), std::vector<double>(f.values().begin(), f.values().end()));
    } catch (const Error&) {
      ++bad;
    }
  }
  const double seconds = t.seconds() + build_seconds;
  report(1, bad == 0 && seconds < kBudget1,
         fmt("Morse exclusivity: %zu instances, %zu cells, %zu violations, %.2f s (< %.0f s)",
             instances.size(), cells, bad, seconds, kBudget1));
}

void criterion_2(const std::vector<Instance>& instances) {
  std::size_t closed = 0;
  for (const auto& [seed, f] : instances) closed += has_closed_path(gradient_field(f));
  report(2, closed == 0, fmt("acyclicity: %zu gradient fields, %zu with a closed V-path", instances.size(), closed));
}

void criterion_3(const std::vector<Instance>& instances) {
  std::size_t bad = 0;
  for (const auto& [seed, f] : instances) {
    const auto& k = f.complex();
    std::vector<int> m(static_cast<std::size_t>(k.dimension() + 1), 0);
    for (const auto& c : critical_cells(f)) ++m[static_cast<std::size_t>(c.dim())];
    int alternating = 0;
    for (std::size_t p = 0; p < m.size(); ++p) alternating += (p % 2 == 0 ? 1 : -1) * m[p];
    const auto betti = betti_numbers_mod2(k);
    bool ok = alternating == euler_characteristic(k);
    for (std::size_t p = 0; p < m.size(); ++p) ok = ok && m[p] >= betti[p];
    bad += !ok;
  }
  report(3, bad == 0, fmt("Euler and Morse inequalities: %zu instances, %zu failures", instances.size(), bad));
}

void criterion_4(const std::vector<Instance>& instances) {
  std::size_t windows = 0;
  std::size_t bad = 0;
  for (const auto& [seed, f] : instances) {
    const auto crit = critical_values(f);
    const auto values = f.distinct_values();
    for (std::size_t i = 0; i < crit.size(); ++i) {
      // (c_i, b] with b the last value before the next critical value.
      double b = crit[i];
      for (double v : values) {
        if (v > crit[i] && (i + 1 == crit.size() || v < crit[i + 1])) b = std::max(b, v);
      }
      if (b == crit[i]) continue;
      ++windows;
      try {
        bad += !replays(verify_dmt_a(f, crit[i], b));
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  report(4, bad == 0, fmt("sublevel collapses: %zu maximal windows, %zu failures", windows, bad));
}

void criterion_5(const std::vector<Instance>& instances) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const auto& [seed, f] : instances) {
    const auto values = f.distinct_values();
    for (const auto& s : critical_cells(f)) {
      const double b = f(s);
      double a = f.min_value() - 1;
      for (double v : values) {
        if (v < b) a = v;
      }
      ++checked;
      try {
        const auto d = verify_dmt_b(f, s, a, b);
        bad += !((d.degree == s.dim() && d.change == 1) || (d.degree == s.dim() - 1 && d.change == -1));
      } catch (const Error&) {
        ++bad;
      }
    }
  }
  report(5, bad == 0, fmt("attachment signatures: %zu critical cells, %zu failures", checked, bad));
}

void criterion_6(const std::vector<Instance>& instances) {
  std::size_t matrix_bad = 0;
  std::size_t chain_bad = 0;
  std::size_t chains = 0;
  std::size_t invariance_bad = 0;
  std::size_t collapse_bad = 0;
  for (const auto& [seed, f] : instances) {
    FlowOperator flow(f);
    const auto& k = f.complex();
    for (int p = 0; p <= k.dimension(); ++p) matrix_bad += !check_flow_matrix(flow, p).ok();
    detail::Rng rng(seed ^ 0x5eedULL);
    for (int i = 0; i < kChainsPerInstance; ++i) {
      const int p = static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(k.dimension() + 1)));
      const auto c = random_chain(k, p, rng);
      ++chains;
      chain_bad += !(boundary(apply_flow(flow, c)) == (p == 0 ? boundary(c) : apply_flow(flow, boundary(c))));
    }
    for (double a : f.distinct_values()) {
      const auto sub = sublevel_set(f, a);
      const auto image = big_phi(flow, sub);
      invariance_bad += !std::includes(sub.begin(), sub.end(), image.begin(), image.end());
      const auto level = level_subcomplex(f, a).level;
      invariance_bad += !big_phi_bar(flow, level.cell_set()).is_subcomplex_of(level);
      try {
        collapse_bad += !replays(verify_phibar_collapse(flow, a));
      } catch (const Error&) {
        ++collapse_bad;
      }
    }
  }
  report(6, matrix_bad + chain_bad + invariance_bad + collapse_bad == 0,
         fmt("flow: %zu matrix reports failing, %zu of %zu chains break the chain-map identity, "
             "%zu sublevel escapes, %zu Phi-bar collapse failures",
             matrix_bad, chain_bad, chains, invariance_bad, collapse_bad));
}

void criterion_7() {
  const auto f = p3_fixture();
  bool ok = false;
  std::string detail;
  try {
    const auto mp = mountain_pass(f, Simplex{3}, Simplex{1});
    ok = mp.value == 4 && mp.edge == Simplex{2, 3} && mp.witness.edges.size() == 1 && mp.value > f(Simplex{3});
    detail = fmt("c = %g at %s, witness length %zu, f(v1) = %g", mp.value, mp.edge.to_string().c_str(),
                 mp.witness.edges.size(), f(Simplex{3}));
  } catch (const Error& e) {
    detail = e.what();
  }
  report(7, ok, "mountain pass on the path fixture: " + detail);
}

void criterion_8() {
  Timer t;
  int used = 0;
  int no_path = 0;
  std::size_t paths = 0;
  std::size_t closure_bad = 0;
  std::size_t deformation_bad = 0;
  std::size_t reassembly_bad = 0;
  std::size_t membership_bad = 0;
  std::size_t value_bad = 0;
  std::size_t topology_bad = 0;
  std::size_t thrown = 0;
  std::string example;
  std::string thrown_example;
  for (std::uint64_t seed = 0; used < kPathInstances && seed < 100000; ++seed) {
    const auto k = random_connected_complex(seed, 3, 8, 2);
    const auto f = random_morse(k, seed * 17 + 5, {0.5});
    std::vector<Simplex> minima;
    for (const auto& c : critical_cells(f)) {
      if (c.dim() == 0) minima.push_back(c);
    }
    if (minima.size() < 2) continue;
    std::sort(minima.begin(), minima.end(), [&](const auto& a, const auto& b) { return f(a) < f(b); });
    // Lowest minimum as v0, the next one that admits a path as v1.
    std::optional<MountainPass> mp;
    Simplex v1;
    bool raised = false;
    for (std::size_t i = 1; i < minima.size() && !mp && !raised; ++i) {
      try {
        mp = mountain_pass(f, minima[i], minima[0]);
        v1 = minima[i];
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NoPathExists) continue;
        raised = true;
        if (thrown_example.empty()) {
          thrown_example = fmt("seed %llu: %s", static_cast<unsigned long long>(seed), e.what());
        }
      }
    }
    if (raised) {
      ++used;
      ++thrown;
      continue;
    }
    if (!mp) {
      ++no_path;
      continue;
    }
    ++used;
    paths += mp->paths.size();
    const auto check = check_minmax_data(mp->instance);
    closure_bad += !check.closure_failures.empty();
    deformation_bad += !check.deformation_failures.empty();

    FlowOperator flow(f);
    const std::set<CellSet> family(mp->instance.family.begin(), mp->instance.family.end());
    bool reassembled = true;
    bool member = true;
    for (const auto& p : mp->paths) {
      try {
        member = member && family.contains(phi_on_path(flow, p).cells());
      } catch (const Error& e) {
        reassembled = false;
        if (example.empty()) example = fmt("seed %llu: %s", static_cast<unsigned long long>(seed), e.what());
      }
    }
    reassembly_bad += !reassembled;
    membership_bad += !member;

    value_bad += !(mp->edge.dim() == 1 && critical_cells(f).contains(mp->edge) && f(mp->edge) == mp->value &&
                   mp->value > f(v1));
    topology_bad += !(level_subcomplex(f, f(v1)).level.component_count() > 1 && k.component_count() == 1);
  }
  const double seconds = t.seconds();
  const bool a = closure_bad == 0 && deformation_bad == 0;
  const bool b = reassembly_bad == 0 && membership_bad == 0;
  const bool c = value_bad == 0 && thrown == 0;
  const bool d = topology_bad == 0;
  report(8, used >= kPathInstances && a && b && c && d && seconds < kBudget8,
         fmt("mountain pass on %d random instances (%d skipped without an admissible path, %zu paths, %.2f s): "
             "(a) %zu closure and %zu deformation failures, (b) %zu instances where Phi does not reassemble "
             "and %zu leaving the family, (c) %zu bad values and %zu instances where the search raised, (d) %zu topology failures",
             used, no_path, paths, seconds, closure_bad, deformation_bad, reassembly_bad, membership_bad,
             value_bad, thrown, topology_bad));
  if (!thrown_example.empty()) std::printf("             first raised, %s\n", thrown_example.c_str());
  if (!example.empty()) std::printf("             first reassembly failure, %s\n", example.c_str());
}

void criterion_9(const std::vector<Instance>& instances) {
  std::size_t with_regular = 0;
  std::size_t bad = 0;
  auto check = [&](const MorseFunction& f) {
    if (critical_cells(f).size() == f.complex().size()) return;
    ++with_regular;
    Simplex lowest = f.complex().cells_of_dim(0).front();
    for (const auto& v : f.complex().cells_of_dim(0)) {
      if (f(v) < f(lowest)) lowest = v;
    }
    try {
      check_minmax_data(MinMaxInstance{f, {identity_map()}, {{lowest}}}).require();
      ++bad;
    } catch (const Error& e) {
      bad += e.kind() != ErrorKind::DeformationViolated;
    }
  };
  for (const auto& [seed, f] : instances) check(f);
  for (const auto& f : {p3_fixture(), collapsible_triangle(), circle_fixture()}) check(f);
  report(9, bad == 0 && with_regular > 0,
         fmt("identity negative control: %zu functions with a regular value, %zu not rejected", with_regular, bad));
}

void criterion_10() {
  Timer t;
  const std::vector<std::pair<const char*, SimplicialComplex>> fixtures = {
      {"point", point()},
      {"edge", edge()},
      {"path", p3_complex()},
      {"full triangle", full_triangle()},
      {"triangle boundary", triangle_boundary()},
      {"two triangles", two_triangles()},
  };
  const double probabilities[] = {0.2, 0.5, 0.8, 1.0};
  std::size_t functions = 0;
  std::size_t value_bad = 0;
  std::size_t bound_bad = 0;
  for (const auto& [name, k] : fixtures) {
    for (int i = 0; i < kLsFunctions; ++i) {
      const auto f = random_morse(k, static_cast<std::uint64_t>(i) * 101 + 3, {probabilities[i % 4]});
      ++functions;
      try {
        const auto ls = ls_minmax(f);
        for (const auto& [j, c] : ls.values) value_bad += !is_critical_value(f, c);
        bound_bad += !(static_cast<std::size_t>(ls.dgcat + 1) <= ls.critical_count) || !ls_bound_check(f);
      } catch (const Error&) {
        ++value_bad;
      }
    }
  }
  const int circle = dgcat(triangle_boundary(), triangle_boundary()).value;
  const int disc = dgcat(full_triangle(), full_triangle()).value;
  const double seconds = t.seconds();
  report(10, value_bad == 0 && bound_bad == 0 && circle == 1 && disc == 0 && seconds < kBudget10,
         fmt("LS: %zu functions on 6 fixtures, %zu non-critical c_k, %zu bound failures, "
             "dgcat(triangle boundary) = %d, dgcat(full triangle) = %d, %.2f s",
             functions, value_bad, bound_bad, circle, disc, seconds));
}

void criterion_11(const std::vector<Instance>& instances) {
  std::size_t basins = 0;
  std::size_t replay_bad = 0;
  std::size_t compared = 0;
  std::size_t not_contained = 0;
  std::size_t strict = 0;
  for (const auto& [seed, f] : instances) {
    const auto field = gradient_field(f);
    const auto& k = f.complex();
    for (const auto& c : critical_cells(f)) {
      if (c.dim() != 0) continue;
      const auto b = basin(field, f, c);
      ++basins;
      replay_bad += !replays(b.witness);
      if (k.size() > 12) continue;
      ++compared;
      const auto cmp = compare_with_maximal_collapsing(b, k, 12);
      not_contained += !cmp.contained;
      strict += cmp.contained && !cmp.basin_is_maximal;
    }
  }
  report(11, replay_bad == 0 && not_contained == 0 && compared > 0,
         fmt("basins: %zu witnesses, %zu fail to replay; %zu compared by brute force, %zu not contained, "
             "%zu strictly inside a larger collapsing subcomplex (reported only)",
             basins, replay_bad, compared, not_contained, strict));
}

void criterion_12(const std::vector<Instance>& instances) {
  std::size_t round_trip_bad = 0;
  for (const auto& [seed, f] : instances) {
    const auto back = parse_scx(emit_scx(f));
    round_trip_bad += !(back.function && back.complex == f.complex() &&
                        std::equal(f.values().begin(), f.values().end(), back.function->values().begin(),
                                   back.function->values().end()));
  }
  const std::string dir = DMT_DATA_DIR;
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "--in", dir + "/p3.scx"},
      {"critical", "--in", dir + "/p3.scx"},
      {"gradient", "--in", dir + "/double_well.scx"},
      {"flow", "--in", dir + "/triangle.scx", "--level", "3"},
      {"levels", "--in", dir + "/circle.scx"},
      {"collapse", "--in", dir + "/p3.scx", "--level", "1", "--to", "3"},
      {"homology", "--in", dir + "/tetra.off"},
      {"mountain-pass", "--in", dir + "/p3.scx", "--min1", "2", "--min0", "0"},
      {"lscat", "--in", dir + "/circle.scx"},
      {"minmax-check", "--in", dir + "/p3.scx", "--min1", "2", "--min0", "0"},
      {"random", "--seed", "7"},
      {"export-dot", "--in", dir + "/p3.scx"},
  };
  std::size_t command_bad = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, out2, err;
    const int a = cli::run(args, out1, err);
    const int b = cli::run(args, out2, err);
    command_bad += !(a == 0 && b == 0 && out1.str() == out2.str() && !out1.str().empty());
  }
  report(12, round_trip_bad == 0 && command_bad == 0,
         fmt("CLI: %zu scx round trips, %zu inexact; %zu commands, %zu not deterministic or failing",
             instances.size(), round_trip_bad, commands.size(), command_bad));
}

}  // namespace

int main() {
  Timer build;
  const auto instances = random_instances();
  const double build_seconds = build.seconds();
  criterion_1(instances, build_seconds);
  criterion_2(instances);
  criterion_3(instances);
  criterion_4(instances);
  criterion_5(instances);
  criterion_6(instances);
  criterion_7();
  criterion_8();
  criterion_9(instances);
  criterion_10();
  criterion_11(instances);
  criterion_12(instances);
  std::printf("%d of 12 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
