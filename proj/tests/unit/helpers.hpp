#pragma once

// Small conveniences shared by the unit tests.

#include <regex>
#include <string>
#include <vector>

#include "folnewt/foliated.hpp"
#include "folnewt/parser.hpp"

namespace testing_helpers {

/// Parses `text`, declaring every identifier it mentions as a free variable.
inline folnewt::Polynomial P(const std::string& text) {
  folnewt::VariableTable table;
  static const std::regex ident("[A-Za-z][A-Za-z0-9_]*");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    const std::string name = it->str();
    if (!table.contains(name)) table.declare(name, folnewt::VarKind::free);
  }
  return folnewt::parse_poly(text, table);
}

inline std::vector<folnewt::Polynomial> Ps(const std::vector<std::string>& texts) {
  std::vector<folnewt::Polynomial> out;
  for (const auto& t : texts) out.push_back(P(t));
  return out;
}

inline folnewt::Atlas space(const std::vector<std::string>& divisor, const std::vector<std::string>& free,
                            const std::map<std::string, std::string>& form) {
  folnewt::SpaceDocument doc;
  doc.divisor = divisor;
  doc.free = free;
  doc.form = form;
  return folnewt::load_space(doc);
}

}  // namespace testing_helpers
