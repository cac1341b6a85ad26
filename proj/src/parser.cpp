#include "folnewt/parser.hpp"

#include <cctype>

namespace folnewt {

void VariableTable::declare(const std::string& name, VarKind kind) {
  if (!is_identifier(name)) throw std::invalid_argument("not an identifier: '" + name + "'");
  auto [it, inserted] = kinds_.emplace(name, kind);
  if (!inserted) throw std::invalid_argument("variable declared twice: " + name);
}

VarKind VariableTable::kind(std::string_view name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) throw std::out_of_range("undeclared variable: " + std::string(name));
  return it->second;
}

LabelSet VariableTable::names() const {
  std::vector<std::string> out;
  for (const auto& [n, k] : kinds_) out.push_back(n);
  return LabelSet(std::move(out));
}

LabelSet VariableTable::names(VarKind kind) const {
  std::vector<std::string> out;
  for (const auto& [n, k] : kinds_) {
    if (k == kind) out.push_back(n);
  }
  return LabelSet(std::move(out));
}

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (char c : text) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      kind_(kind),
      position_(position) {}

namespace {

constexpr unsigned kMaxExponent = 4096;

class Parser {
 public:
  Parser(std::string_view text, const VariableTable& ctx) : text_(text), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ParseError::Kind kind = ParseError::Kind::syntax) {
    throw ParseError(kind, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
  bool at_alpha() const { return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])); }

  std::string digits() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // expression := term (('+' | '-') term)*
  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  // term := unary ('*' unary)*
  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc *= unary();
    skip_space();
    if (at_alpha() || at_digit() || (pos_ < text_.size() && text_[pos_] == '(')) {
      fail("missing '*' (implicit multiplication is not allowed)");
    }
    return acc;
  }

  // unary := ('-' | '+') unary | power
  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  // power := primary ('^' integer)?
  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      if (!at_digit()) fail("exponent must be a nonnegative integer literal", ParseError::Kind::bad_exponent);
      std::size_t start = pos_;
      std::string d = digits();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/')) {
        pos_ = start;
        fail("exponent must be a nonnegative integer literal", ParseError::Kind::bad_exponent);
      }
      if (d.size() > 6 || std::stoul(d) > kMaxExponent) {
        pos_ = start;
        fail("exponent too large", ParseError::Kind::bad_exponent);
      }
      return base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }

  // primary := integer ('/' integer)? | identifier | '(' expression ')'
  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (at_digit()) {
      Rational value(digits());
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not allowed");
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) fail("expected denominator digits after '/'");
        std::size_t start = pos_;
        mpz_class den(digits());
        if (den == 0) {
          pos_ = start;
          fail("zero denominator");
        }
        value /= den;
      }
      return Polynomial(value);
    }
    if (at_alpha()) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (!ctx_.contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'", ParseError::Kind::unknown_variable);
      }
      return Polynomial::variable(std::move(name));
    }
    if (accept('(')) {
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  const VariableTable& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const VariableTable& context) {
  return Parser(text, context).parse();
}

}  // namespace folnewt
