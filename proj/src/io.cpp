#include "dmt/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace dmt {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::string_view strip(std::string_view s) {
  if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string vertex_list(const Simplex& s) {
  std::string out;
  for (auto v : s.vertices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string dot_label(const Simplex& s) {
  std::string out;
  for (auto v : s.vertices()) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

std::string dot_body(const SimplicialComplex& k, const MorseFunction* f) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  std::optional<GradientField> field;
  if (f) field = gradient_field(*f);
  for (std::size_t i = 0; i < k.size(); ++i) {
    out << "  s" << i << " [label=\"" << dot_label(k.cell(i));
    if (f) out << "\\nf=" << format_value(f->value(i));
    out << "\"";
    if (field) out << ", shape=" << (field->is_critical(i) ? "doublecircle" : "circle");
    out << "];\n";
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (auto j : k.cofaces_of(i)) {
      if (field && field->upper_partner(i) == j) continue;
      out << "  s" << i << " -> s" << j << " [dir=none, style=dotted];\n";
    }
  }
  if (field) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      const auto j = field->upper_partner(i);
      if (j != GradientField::npos) out << "  s" << i << " -> s" << j << " [style=bold, color=red];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error(ErrorKind::ParseError, line ? "line " + std::to_string(line) + ": " + reason : reason),
      line_(line) {}

ComplexFile parse_scx(std::string_view text) {
  std::vector<Simplex> simplices;
  std::set<Simplex> seen;
  std::map<Simplex, double> values;
  std::size_t with_value = 0;
  std::size_t first_without = 0;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto line = strip(lines[n]);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    std::vector<Vertex> verts;
    for (auto tok : tokens(line.substr(0, colon))) {
      Vertex v;
      if (!parse_number(tok, v) || v < 0) throw ParseError(n + 1, "bad vertex id '" + std::string(tok) + "'");
      verts.push_back(v);
    }
    if (verts.empty()) throw ParseError(n + 1, "no vertices");
    Simplex s;
    try {
      s = Simplex(verts);
    } catch (const Error& e) {
      throw ParseError(n + 1, e.what());
    }
    if (!seen.insert(s).second) {
      throw ParseError(n + 1, "simplex " + s.to_string() + " listed twice");
    }
    simplices.push_back(s);
    if (colon != std::string_view::npos) {
      const auto rest = tokens(line.substr(colon + 1));
      double value;
      if (rest.size() != 1 || !parse_number(rest[0], value)) throw ParseError(n + 1, "bad value");
      values[s] = value;
      ++with_value;
    } else if (!first_without) {
      first_without = n + 1;
    }
  }
  if (simplices.empty()) throw ParseError(0, "no simplices");
  if (with_value != 0 && with_value != simplices.size()) {
    throw ParseError(first_without, "values must be given for every simplex or none");
  }
  ComplexFile out{build_complex(simplices), std::nullopt};
  if (with_value) {
    for (const auto& s : out.complex.cells()) {
      if (!values.contains(s)) throw ParseError(0, "face " + s.to_string() + " has no value");
    }
    out.function = validate(out.complex, values);
  }
  return out;
}

std::string emit_scx(const SimplicialComplex& complex) {
  std::string out;
  for (const auto& s : complex.cells()) out += vertex_list(s) + '\n';
  return out;
}

std::string emit_scx(const MorseFunction& f) {
  std::string out;
  const auto& k = f.complex();
  for (std::size_t i = 0; i < k.size(); ++i) out += vertex_list(k.cell(i)) + " : " + format_value(f.value(i)) + '\n';
  return out;
}

SimplicialComplex parse_off(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  const auto raw = split_lines(text);
  for (std::size_t n = 0; n < raw.size(); ++n) {
    auto t = tokens(strip(raw[n]));
    if (!t.empty()) lines.emplace_back(n + 1, std::move(t));
  }
  if (lines.empty() || lines[0].second[0] != "OFF") throw ParseError(lines.empty() ? 0 : lines[0].first, "missing OFF header");
  std::size_t at = 0;
  std::vector<std::string_view> counts(lines[0].second.begin() + 1, lines[0].second.end());
  if (counts.empty()) {
    if (lines.size() < 2) throw ParseError(0, "missing counts");
    counts = lines[++at].second;
  }
  std::size_t nv = 0;
  std::size_t nf = 0;
  if (counts.size() < 2 || !parse_number(counts[0], nv) || !parse_number(counts[1], nf)) {
    throw ParseError(lines[at].first, "bad counts");
  }
  ++at;
  if (lines.size() < at + nv + nf) throw ParseError(0, "file is truncated");
  for (std::size_t i = 0; i < nv; ++i, ++at) {
    double x;
    const auto& t = lines[at].second;
    if (t.size() < 3 || !parse_number(t[0], x) || !parse_number(t[1], x) || !parse_number(t[2], x)) {
      throw ParseError(lines[at].first, "bad vertex coordinates");
    }
  }
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < nf; ++i, ++at) {
    const auto& [line, t] = lines[at];
    std::size_t k = 0;
    if (!parse_number(t[0], k) || k == 0 || t.size() < k + 1) throw ParseError(line, "bad face");
    std::vector<Vertex> idx;
    for (std::size_t j = 1; j <= k; ++j) {
      Vertex v;
      if (!parse_number(t[j], v) || v < 0 || static_cast<std::size_t>(v) >= nv) {
        throw ParseError(line, "face index out of range");
      }
      idx.push_back(v);
    }
    try {
      if (k <= 2) {
        faces.emplace_back(idx);
      } else {
        for (std::size_t j = 1; j + 1 < k; ++j) faces.push_back(Simplex{idx[0], idx[j], idx[j + 1]});
      }
    } catch (const Error& e) {
      throw ParseError(line, e.what());
    }
  }
  if (faces.empty()) throw ParseError(0, "no faces");
  return build_complex(faces);
}

std::string to_dot(const MorseFunction& f) { return dot_body(f.complex(), &f); }
std::string to_dot(const SimplicialComplex& complex) { return dot_body(complex, nullptr); }

}  // namespace dmt
