#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dmt/morse.hpp"

namespace dmt {

/// ParseError carrying the 1-based line number (0 when not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ComplexFile {
  SimplicialComplex complex;
  std::optional<MorseFunction> function;
};

/// `.scx`: one simplex per line as vertex ids, optional ` : value`, `#`
/// comments. Without values the listed simplices are closed under faces;
/// with values every simplex of the closure must be listed.
ComplexFile parse_scx(std::string_view text);
std::string emit_scx(const SimplicialComplex& complex);
/// Values are written in shortest round-trip form.
std::string emit_scx(const MorseFunction& f);

/// ASCII OFF; polygons are fan-triangulated and coordinates discarded.
SimplicialComplex parse_off(std::string_view text);

/// Hasse diagram (dotted, undirected) plus one arrow per gradient pair from
/// the lower to the upper cell; critical cells are double circles.
std::string to_dot(const MorseFunction& f);
std::string to_dot(const SimplicialComplex& complex);

}  // namespace dmt
