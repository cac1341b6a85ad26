#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "folnewt/polynomial.hpp"

namespace folnewt {

/// Declared variables of one chart, with their kind.
class VariableTable {
 public:
  void declare(const std::string& name, VarKind kind);
  bool contains(std::string_view name) const { return kinds_.find(name) != kinds_.end(); }
  VarKind kind(std::string_view name) const;
  LabelSet names() const;
  LabelSet names(VarKind kind) const;

 private:
  std::map<std::string, VarKind, NaturalLess> kinds_;
};

/// True for identifiers of the form [A-Za-z][A-Za-z0-9_]*.
bool is_identifier(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_variable, bad_exponent };

  ParseError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  /// Zero-based byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// Parses an ASCII polynomial expression: integers, rationals a/b,
/// identifiers, + - * ^ and parentheses. `^` takes nonnegative integer
/// literals only and multiplication is always explicit.
Polynomial parse_poly(std::string_view text, const VariableTable& context);

}  // namespace folnewt
