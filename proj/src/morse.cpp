#include "dmt/morse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

#include "dmt/detail/random.hpp"

namespace dmt {

namespace {

using Index = SimplicialComplex::Index;
constexpr Index npos = SimplicialComplex::npos;

std::size_t count_upper(const SimplicialComplex& k, std::span<const double> v, Index i) {
  std::size_t n = 0;
  for (auto j : k.cofaces_of(i)) n += v[j] <= v[i];
  return n;
}

std::size_t count_lower(const SimplicialComplex& k, std::span<const double> v, Index i) {
  std::size_t n = 0;
  for (auto j : k.faces_of(i)) n += v[j] >= v[i];
  return n;
}

// Out-neighbours of cell i in the Hasse digraph with matched edges reversed:
// i -> unmatched cofaces, and i -> its lower partner when i is an upper cell.
template <typename Visit>
void for_each_successor(const SimplicialComplex& k, std::span<const Index> partner, Index i,
                        Visit&& visit) {
  for (auto j : k.cofaces_of(i)) {
    if (partner[i] != j) visit(j);
  }
  if (partner[i] != npos && k.cell(partner[i]).dim() < k.cell(i).dim()) visit(partner[i]);
}

bool digraph_has_cycle(const SimplicialComplex& k, std::span<const Index> partner) {
  enum : std::uint8_t { White, Grey, Black };
  std::vector<std::uint8_t> colour(k.size(), White);
  std::vector<std::pair<Index, std::vector<Index>>> stack;
  for (Index root = 0; root < k.size(); ++root) {
    if (colour[root] != White) continue;
    auto successors = [&](Index i) {
      std::vector<Index> out;
      for_each_successor(k, partner, i, [&](Index j) { out.push_back(j); });
      return out;
    };
    colour[root] = Grey;
    stack.emplace_back(root, successors(root));
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next.empty()) {
        colour[node] = Black;
        stack.pop_back();
        continue;
      }
      Index j = next.back();
      next.pop_back();
      if (colour[j] == Grey) return true;
      if (colour[j] == White) {
        colour[j] = Grey;
        stack.emplace_back(j, successors(j));
      }
    }
  }
  return false;
}

// Topological order of the modified Hasse digraph. `pick` selects which of
// the currently available cells comes next.
template <typename Pick>
std::vector<Index> linear_extension(const SimplicialComplex& k, std::span<const Index> partner,
                                    Pick&& pick) {
  std::vector<std::size_t> indegree(k.size(), 0);
  for (Index i = 0; i < k.size(); ++i) {
    for_each_successor(k, partner, i, [&](Index j) { ++indegree[j]; });
  }
  std::vector<Index> available;
  for (Index i = 0; i < k.size(); ++i) {
    if (indegree[i] == 0) available.push_back(i);
  }
  std::vector<Index> order;
  order.reserve(k.size());
  while (!available.empty()) {
    auto pos = pick(available);
    Index i = available[pos];
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(pos));
    order.push_back(i);
    for_each_successor(k, partner, i, [&](Index j) {
      if (--indegree[j] == 0) available.push_back(j);
    });
  }
  if (order.size() != k.size()) {
    throw Error(ErrorKind::AcyclicityBug, "gradient field has a closed V-path");
  }
  return order;
}

std::vector<Index> partners_of(const GradientField& field) {
  std::vector<Index> partner(field.complex().size());
  for (Index i = 0; i < partner.size(); ++i) partner[i] = field.partner(i);
  return partner;
}

}  // namespace

bool MorseFunction::is_injective() const {
  auto sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

double MorseFunction::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double MorseFunction::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

std::vector<double> MorseFunction::distinct_values() const {
  auto sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

MorseConditionError::MorseConditionError(std::vector<MorseViolation> violations)
    : Error(ErrorKind::MorseConditionViolated,
            [&] {
              std::string msg = "Morse conditions violated at";
              for (const auto& v : violations) {
                msg += ' ' + v.simplex.to_string() + " (|U|=" + std::to_string(v.upper) +
                       ", |L|=" + std::to_string(v.lower) + ")";
              }
              return msg;
            }()),
      violations_(std::move(violations)) {}

MorseFunction validate(const SimplicialComplex& complex, std::vector<double> values) {
  if (values.size() != complex.size()) {
    throw Error(ErrorKind::MissingValue, "expected " + std::to_string(complex.size()) +
                                             " values, got " + std::to_string(values.size()));
  }
  for (Index i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::MissingValue, "non-finite value at " + complex.cell(i).to_string());
    }
  }
  std::vector<MorseViolation> violations;
  for (Index i = 0; i < complex.size(); ++i) {
    auto u = count_upper(complex, values, i);
    auto l = count_lower(complex, values, i);
    if (u > 1 || l > 1) violations.push_back({complex.cell(i), u, l});
  }
  if (!violations.empty()) throw MorseConditionError(std::move(violations));
  // Exclusivity of U and L is a theorem for functions passing the check above.
  for (Index i = 0; i < complex.size(); ++i) {
    if (count_upper(complex, values, i) && count_lower(complex, values, i)) {
      throw Error(ErrorKind::PropertyViolation,
                  "both U and L non-empty at " + complex.cell(i).to_string());
    }
  }
  return MorseFunction(complex, std::move(values));
}

MorseFunction validate(const SimplicialComplex& complex, const std::map<Simplex, double>& values) {
  std::vector<double> flat(complex.size());
  for (Index i = 0; i < complex.size(); ++i) {
    auto it = values.find(complex.cell(i));
    if (it == values.end()) {
      throw Error(ErrorKind::MissingValue, "no value for " + complex.cell(i).to_string());
    }
    flat[i] = it->second;
  }
  for (const auto& [s, v] : values) complex.require_index(s);
  return validate(complex, std::move(flat));
}

CellSet upper_set(const MorseFunction& f, const Simplex& s) {
  const auto& k = f.complex();
  auto i = k.require_index(s);
  CellSet out;
  for (auto j : k.cofaces_of(i)) {
    if (f.value(j) <= f.value(i)) out.insert(k.cell(j));
  }
  return out;
}

CellSet lower_set(const MorseFunction& f, const Simplex& s) {
  const auto& k = f.complex();
  auto i = k.require_index(s);
  CellSet out;
  for (auto j : k.faces_of(i)) {
    if (f.value(j) >= f.value(i)) out.insert(k.cell(j));
  }
  return out;
}

CellSet critical_cells(const MorseFunction& f) {
  const auto& k = f.complex();
  CellSet out;
  for (Index i = 0; i < k.size(); ++i) {
    if (!count_upper(k, f.values(), i) && !count_lower(k, f.values(), i)) out.insert(k.cell(i));
  }
  return out;
}

std::vector<double> critical_values(const MorseFunction& f) {
  std::vector<double> out;
  for (const auto& s : critical_cells(f)) out.push_back(f(s));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_critical_value(const MorseFunction& f, double value) {
  auto values = critical_values(f);
  return std::binary_search(values.begin(), values.end(), value);
}

GradientField GradientField::from_pairs(const SimplicialComplex& complex,
                                        const std::vector<std::pair<Simplex, Simplex>>& pairs) {
  std::vector<Index> partner(complex.size(), npos);
  for (const auto& [lower, upper] : pairs) {
    auto i = complex.require_index(lower);
    auto j = complex.require_index(upper);
    if (lower.dim() + 1 != upper.dim() || !lower.is_face_of(upper)) {
      throw Error(ErrorKind::PreconditionViolated,
                  lower.to_string() + " is not a codimension-1 face of " + upper.to_string());
    }
    if (partner[i] != npos || partner[j] != npos) {
      throw Error(ErrorKind::PreconditionViolated,
                  "cell used twice in matching at pair " + lower.to_string() + " < " +
                      upper.to_string());
    }
    partner[i] = j;
    partner[j] = i;
  }
  return GradientField(complex, std::move(partner));
}

std::vector<std::pair<Simplex, Simplex>> GradientField::pairs() const {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (Index i = 0; i < partner_.size(); ++i) {
    auto j = upper_partner(i);
    if (j != npos) out.emplace_back(complex_.cell(i), complex_.cell(j));
  }
  return out;
}

CellSet GradientField::critical_cells() const {
  CellSet out;
  for (Index i = 0; i < partner_.size(); ++i) {
    if (partner_[i] == npos) out.insert(complex_.cell(i));
  }
  return out;
}

GradientField::Index GradientField::upper_partner(Index i) const {
  auto j = partner_[i];
  return (j != npos && j > i) ? j : npos;
}

GradientField::Index GradientField::lower_partner(Index i) const {
  auto j = partner_[i];
  return (j != npos && j < i) ? j : npos;
}

std::optional<Simplex> GradientField::partner(const Simplex& s) const {
  auto j = partner_[complex_.require_index(s)];
  if (j == npos) return std::nullopt;
  return complex_.cell(j);
}

GradientField gradient_field(const MorseFunction& f) {
  const auto& k = f.complex();
  std::vector<std::pair<Simplex, Simplex>> pairs;
  for (Index i = 0; i < k.size(); ++i) {
    for (auto j : k.cofaces_of(i)) {
      if (f.value(j) <= f.value(i)) pairs.emplace_back(k.cell(i), k.cell(j));
    }
  }
  auto field = GradientField::from_pairs(k, pairs);
  if (has_closed_path(field)) {
    throw Error(ErrorKind::AcyclicityBug, "gradient field of a Morse function has a closed V-path");
  }
  return field;
}

std::vector<VPath> v_paths_from(const GradientField& field, const Simplex& start, int p) {
  if (start.dim() != p) {
    throw Error(ErrorKind::PreconditionViolated,
                start.to_string() + " does not have dimension " + std::to_string(p));
  }
  const auto& k = field.complex();
  std::vector<VPath> out;
  std::vector<Index> trail{k.require_index(start)};

  std::function<void()> extend = [&] {
    const Index a = trail.back();
    const Index b = field.upper_partner(a);
    bool closed = false;
    for (std::size_t pos = 0; pos + 1 < trail.size(); pos += 2) closed = closed || trail[pos] == a;
    if (b == npos || closed) {
      VPath path;
      for (auto i : trail) path.cells.push_back(k.cell(i));
      out.push_back(std::move(path));
      return;
    }
    trail.push_back(b);
    for (auto next : k.faces_of(b)) {
      if (next == a) continue;
      trail.push_back(next);
      extend();
      trail.pop_back();
    }
    trail.pop_back();
  };
  extend();
  return out;
}

bool has_closed_path(const GradientField& field) {
  return digraph_has_cycle(field.complex(), partners_of(field));
}

bool are_equivalent(const MorseFunction& f, const MorseFunction& g) {
  if (!(f.complex() == g.complex())) {
    throw Error(ErrorKind::ComplexMismatch, "Morse functions live on different complexes");
  }
  const auto& k = f.complex();
  for (Index i = 0; i < k.size(); ++i) {
    for (auto j : k.cofaces_of(i)) {
      if ((f.value(i) < f.value(j)) != (g.value(i) < g.value(j))) return false;
    }
  }
  return true;
}

MorseFunction make_injective(const MorseFunction& f) {
  if (f.is_injective()) return f;
  const auto& k = f.complex();
  const auto partner = partners_of(gradient_field(f));
  // Every digraph edge runs from a value to a value at least as large, so the
  // smallest available (value, index) always has the smallest remaining value
  // and the extension is non-decreasing in f.
  auto order = linear_extension(k, partner, [&](const std::vector<Index>& available) {
    std::size_t best = 0;
    for (std::size_t c = 1; c < available.size(); ++c) {
      const auto a = available[c];
      const auto b = available[best];
      if (f.value(a) < f.value(b) || (f.value(a) == f.value(b) && a < b)) best = c;
    }
    return best;
  });

  std::vector<double> g(k.size());
  for (std::size_t start = 0; start < order.size();) {
    std::size_t end = start;
    const double v = f.value(order[start]);
    while (end < order.size() && f.value(order[end]) == v) ++end;
    const double next = end < order.size() ? f.value(order[end]) : v + 1.0;
    const double step = (next - v) / static_cast<double>(end - start + 1);
    for (std::size_t r = start; r < end; ++r) g[order[r]] = v + step * static_cast<double>(r - start);
    start = end;
  }
  auto result = validate(k, g);
  if (!result.is_injective()) {
    // Offsets collapsed in floating point; fall back to ranks.
    for (std::size_t r = 0; r < order.size(); ++r) g[order[r]] = static_cast<double>(r);
    result = validate(k, g);
  }
  return result;
}

SimplicialComplex random_complex(std::uint64_t seed, int max_vertices, int max_dim) {
  if (max_vertices < 1 || max_dim < 0) throw Error(ErrorKind::PreconditionViolated, "bad random complex bounds");
  detail::Rng rng(seed);
  const int n = 1 + static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(max_vertices)));
  const int extra = 1 + static_cast<int>(detail::below(rng, 6));
  std::vector<Simplex> generators;
  for (int v = 0; v < n; ++v) generators.push_back(Simplex{v});
  for (int i = 0; i < extra; ++i) {
    const int d = static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(std::min(max_dim, n - 1) + 1)));
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    detail::shuffle(pool, rng);
    pool.resize(static_cast<std::size_t>(d + 1));
    generators.emplace_back(pool);
  }
  return build_complex(generators);
}

MorseFunction random_morse(const SimplicialComplex& complex, std::uint64_t seed,
                           RandomMorseOptions options) {
  detail::Rng rng(seed);
  std::vector<std::pair<Index, Index>> candidates;
  for (Index i = 0; i < complex.size(); ++i) {
    for (auto j : complex.cofaces_of(i)) candidates.emplace_back(i, j);
  }
  detail::shuffle(candidates, rng);

  std::vector<Index> partner(complex.size(), npos);
  std::vector<std::uint8_t> seen(complex.size());
  for (const auto& [lo, hi] : candidates) {
    if (!detail::bernoulli(rng, options.pair_probability)) continue;
    if (partner[lo] != npos || partner[hi] != npos) continue;
    partner[lo] = hi;
    partner[hi] = lo;
    // The reversed edge hi -> lo closes a cycle iff lo already reaches hi.
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Index> stack{lo};
    seen[lo] = 1;
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      Index x = stack.back();
      stack.pop_back();
      for_each_successor(complex, partner, x, [&](Index y) {
        if (y == hi) cyclic = true;
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      });
    }
    if (cyclic) {
      partner[lo] = npos;
      partner[hi] = npos;
    }
  }

  auto order = linear_extension(complex, partner, [&](const std::vector<Index>& available) {
    return static_cast<std::size_t>(detail::below(rng, available.size()));
  });
  std::vector<double> values(complex.size());
  for (std::size_t r = 0; r < order.size(); ++r) values[order[r]] = static_cast<double>(r);
  return validate(complex, std::move(values));
}

MorseFunction morse_function_from_field(const GradientField& field) {
  const auto& k = field.complex();
  auto order = linear_extension(k, partners_of(field), [](const std::vector<Index>& available) {
    return static_cast<std::size_t>(std::min_element(available.begin(), available.end()) -
                                    available.begin());
  });
  std::vector<double> values(k.size());
  for (std::size_t r = 0; r < order.size(); ++r) values[order[r]] = static_cast<double>(r);
  return validate(k, std::move(values));
}

}  // namespace dmt
