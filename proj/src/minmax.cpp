#include "dmt/minmax.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <set>

#include "dmt/collapse.hpp"

namespace dmt {

namespace {

using Index = SimplicialComplex::Index;

double max_value_on(const MorseFunction& f, const CellSet& cells) {
  double out = -std::numeric_limits<double>::infinity();
  for (const auto& s : cells) out = std::max(out, f(s));
  return out;
}

CellSet sublevel_set(const MorseFunction& f, double a) {
  CellSet out;
  const auto& k = f.complex();
  for (Index i = 0; i < k.size(); ++i) {
    if (f.value(i) <= a) out.insert(k.cell(i));
  }
  return out;
}

bool is_critical_vertex(const GradientField& field, const Simplex& v) {
  const auto& k = field.complex();
  return v.dim() == 0 && k.contains(v) && field.is_critical(k.index_of(v));
}

std::vector<bool> basin_vertices(const GradientField& field, const Simplex& v0) {
  const auto& k = field.complex();
  std::vector<bool> in(k.size(), false);
  for (const auto& v : k.cells_of_dim(0)) {
    if (flow_terminal(field, v) == v0) in[k.index_of(v)] = true;
  }
  return in;
}

Simplex other_end(const Simplex& e, const Simplex& v) {
  return e.vertices()[0] == v.vertices()[0] ? Simplex{e.vertices()[1]} : Simplex{e.vertices()[0]};
}

}  // namespace

NamedMap identity_map() {
  return {"identity", [](const CellSet& s) { return s; }};
}

NamedMap phi_map(const FlowOperator& flow) {
  auto shared = std::make_shared<const FlowOperator>(flow);
  return {"Phi", [shared](const CellSet& s) { return big_phi(*shared, s); }};
}

NamedMap phi_bar_map(const FlowOperator& flow) {
  auto shared = std::make_shared<const FlowOperator>(flow);
  return {"PhiBar", [shared](const CellSet& s) { return big_phi_bar(*shared, s).cell_set(); }};
}

MinMaxValue minmax_value(const MinMaxInstance& inst) {
  if (inst.family.empty()) throw Error(ErrorKind::EmptyFamily, "family is empty");
  MinMaxValue out{std::numeric_limits<double>::infinity(), {}};
  for (const auto& s : inst.family) {
    if (s.empty()) throw Error(ErrorKind::EmptyFamily, "family has an empty member");
    const double m = max_value_on(inst.f, s);
    if (m < out.value) out = {m, s};
  }
  if (!is_critical_value(inst.f, out.value)) {
    throw Error(ErrorKind::TheoremViolation,
                "min-max value " + std::to_string(out.value) + " is not a critical value");
  }
  return out;
}

void MinMaxReport::require() const {
  if (!closure_failures.empty()) {
    const auto& c = closure_failures.front();
    throw Error(ErrorKind::ClosureViolated, c.map + " maps " + to_string(c.member) + " to " +
                                                to_string(c.image) + ", outside the family");
  }
  if (!deformation_failures.empty()) {
    throw Error(ErrorKind::DeformationViolated,
                "no map pushes the sublevel set below regular value " +
                    std::to_string(deformation_failures.front()));
  }
}

MinMaxReport check_minmax_data(const MinMaxInstance& inst) {
  const auto& f = inst.f;
  if (!f.is_injective()) throw Error(ErrorKind::PreconditionViolated, "f is not injective");
  MinMaxReport report;
  const auto values = f.distinct_values();
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) gap = std::min(gap, values[i + 1] - values[i]);
  report.epsilon = values.size() > 1 ? gap / 2 : 0.5;

  const std::set<CellSet> members(inst.family.begin(), inst.family.end());
  for (const auto& h : inst.maps) {
    for (const auto& s : inst.family) {
      auto image = h.map(s);
      if (!members.contains(image)) report.closure_failures.push_back({h.name, s, std::move(image)});
    }
  }

  for (double a : values) {
    if (is_critical_value(f, a)) continue;
    report.regular_values.push_back(a);
    const auto upper = sublevel_set(f, a + report.epsilon);
    const auto lower = sublevel_set(f, a - report.epsilon);
    const bool deformed = std::any_of(inst.maps.begin(), inst.maps.end(), [&](const NamedMap& h) {
      const auto image = h.map(upper);
      return std::includes(lower.begin(), lower.end(), image.begin(), image.end());
    });
    if (!deformed) report.deformation_failures.push_back(a);
  }
  return report;
}

std::vector<Simplex> EdgePath::vertices() const {
  std::vector<Simplex> out{start};
  for (const auto& e : edges) out.push_back(other_end(e, out.back()));
  return out;
}

CellSet EdgePath::cells() const {
  CellSet out(edges.begin(), edges.end());
  out.insert(start);
  return out;
}

bool path_less(const EdgePath& a, const EdgePath& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

std::string path_violation(const MorseFunction& f, const GradientField& field, const EdgePath& path,
                           PathOptions options) {
  const auto& k = f.complex();
  if (!is_critical_vertex(field, path.start)) return "start is not a critical vertex";
  if (!is_critical_vertex(field, path.target)) return "target is not a critical vertex";
  if (path.edges.empty()) return "path has no edges";

  std::vector<Simplex> verts{path.start};
  for (const auto& e : path.edges) {
    if (e.dim() != 1 || !k.contains(e)) return e.to_string() + " is not an edge of the complex";
    if (!e.contains(verts.back().vertices()[0])) return e.to_string() + " does not continue the path";
    verts.push_back(other_end(e, verts.back()));
  }
  if (options.vertex_simple) {
    std::set<Simplex> seen(verts.begin(), verts.end());
    if (seen.size() != verts.size()) return "path repeats a vertex";
  } else {
    std::set<Simplex> seen(path.edges.begin(), path.edges.end());
    if (seen.size() != path.edges.size()) return "path repeats an edge";
  }
  for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
    if (verts[i] != path.start && verts[i] != path.target && is_critical_vertex(field, verts[i])) {
      return "path passes through critical vertex " + verts[i].to_string();
    }
  }
  const auto in_basin = basin_vertices(field, path.target);
  if (!in_basin[k.index_of(verts.back())]) return "path does not end in the basin";
  if (options.monotone_tail) {
    std::size_t j = 1;
    while (!in_basin[k.index_of(verts[j])]) ++j;
    for (std::size_t i = j; i < path.edges.size(); ++i) {
      if (!(f(path.edges[i - 1]) > f(path.edges[i]))) return "edge values do not decrease inside the basin";
    }
  }
  return {};
}

std::vector<EdgePath> enumerate_paths(const MorseFunction& f, const GradientField& field,
                                      const Simplex& v1, const Simplex& v0, PathOptions options) {
  if (!is_critical_vertex(field, v1) || !is_critical_vertex(field, v0) || v1 == v0) {
    throw Error(ErrorKind::NotLocalMinima, "need two distinct critical vertices");
  }
  if (!(f(v0) < f(v1))) throw Error(ErrorKind::PreconditionViolated, "need f(v0) < f(v1)");
  const auto& k = f.complex();
  const auto in_basin = basin_vertices(field, v0);

  std::vector<EdgePath> out;
  std::vector<Simplex> edges;
  std::vector<bool> visited(k.size(), false);  // vertices or edges, by mode
  visited[k.index_of(v1)] = options.vertex_simple;

  auto dfs = [&](auto& self, Index cur, bool entered, double last) -> void {
    for (Index e : k.cofaces_of(cur)) {
      const Index w = k.index_of(other_end(k.cell(e), k.cell(cur)));
      const Index mark = options.vertex_simple ? w : e;
      if (visited[mark]) continue;
      if (field.is_critical(w) && k.cell(w) != v0 && k.cell(w) != v1) continue;
      if (entered && options.monotone_tail && !(f.value(e) < last)) continue;
      visited[mark] = true;
      edges.push_back(k.cell(e));
      if (in_basin[w]) out.push_back({v1, v0, edges});
      self(self, w, entered || in_basin[w], f.value(e));
      edges.pop_back();
      visited[mark] = false;
    }
  };
  dfs(dfs, k.index_of(v1), false, 0);

  if (out.empty()) {
    throw Error(ErrorKind::NoPathExists,
                "no admissible edge path from " + v1.to_string() + " to the basin of " + v0.to_string());
  }
  std::sort(out.begin(), out.end(), path_less);
  return out;
}

EdgePath phi_on_path(const FlowOperator& flow, const EdgePath& path, PathOptions options) {
  const auto image = big_phi(flow, path.cells());
  std::vector<Simplex> remaining;
  for (const auto& s : image) {
    if (s.dim() == 1) {
      remaining.push_back(s);
    } else if (s != path.start) {
      throw Error(ErrorKind::ReassemblyFailure, "image contains stray cell " + s.to_string());
    }
  }
  if (!image.contains(path.start)) throw Error(ErrorKind::ReassemblyFailure, "image lost the start vertex");

  EdgePath out{path.start, path.target, {}};
  auto current = path.start;
  while (!remaining.empty()) {
    auto next = std::vector<Simplex>{};
    for (const auto& e : remaining) {
      if (e.contains(current.vertices()[0])) next.push_back(e);
    }
    if (next.empty()) {
      throw Error(ErrorKind::ReassemblyFailure, "image of " + to_string(path.cells()) + " is " +
                                                    to_string(image) + ", which is not connected as a path");
    }
    if (next.size() > 1) {
      throw Error(ErrorKind::ReassemblyFailure, "image of " + to_string(path.cells()) + " is " +
                                                    to_string(image) + ", which branches at " +
                                                    current.to_string());
    }
    out.edges.push_back(next.front());
    current = other_end(next.front(), current);
    remaining.erase(std::find(remaining.begin(), remaining.end(), next.front()));
  }
  if (auto why = path_violation(flow.function(), flow.field(), out, options); !why.empty()) {
    throw Error(ErrorKind::ReassemblyFailure, "image of " + to_string(path.cells()) + ": " + why);
  }
  return out;
}

MountainPass mountain_pass(const MorseFunction& f, const Simplex& v1, const Simplex& v0,
                           PathOptions options) {
  const auto g = make_injective(f);
  FlowOperator flow(g);
  auto paths = enumerate_paths(g, flow.field(), v1, v0, options);
  std::vector<CellSet> family;
  for (const auto& p : paths) family.push_back(p.cells());
  MinMaxInstance instance{g, {phi_map(flow)}, std::move(family)};

  const double c = minmax_value(instance).value;
  const auto witness = *std::find_if(paths.begin(), paths.end(),
                                     [&](const EdgePath& p) { return max_value_on(g, p.cells()) == c; });
  const auto edge_it = std::find_if(witness.edges.begin(), witness.edges.end(),
                                    [&](const Simplex& e) { return g(e) == c; });
  if (edge_it == witness.edges.end()) {
    throw Error(ErrorKind::TheoremViolation, "mountain-pass value is not attained on an edge");
  }
  const auto edge = *edge_it;
  if (!flow.field().is_critical(g.complex().index_of(edge))) {
    throw Error(ErrorKind::TheoremViolation, "mountain-pass edge " + edge.to_string() + " is not critical");
  }
  if (!(c > g(v1))) throw Error(ErrorKind::TheoremViolation, "mountain-pass value does not exceed f(v1)");
  return MountainPass{c, edge, witness, std::move(paths), std::move(instance)};
}

}  // namespace dmt
