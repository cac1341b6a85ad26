#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folnewt/polynomial.hpp"

namespace folnewt {

/// Three-valued answer for fuel-bounded predicates.
enum class Tri { yes, no, undetermined };

std::string_view to_string(Tri t);

namespace groebner {

enum class OrderKind { graded_lex, lex, graded_reverse_lex, block_elimination };

/// A monomial order over the ring variables. Variables are ranked by natural
/// order of their names, except that a block-elimination order puts `front`
/// first (in the given order) and compares the front block before the rest,
/// using graded reverse lex inside each block.
struct TermOrder {
  OrderKind kind = OrderKind::graded_reverse_lex;
  std::vector<std::string> front;

  static TermOrder graded_lex() { return {OrderKind::graded_lex, {}}; }
  static TermOrder lex() { return {OrderKind::lex, {}}; }
  static TermOrder graded_reverse_lex() { return {OrderKind::graded_reverse_lex, {}}; }
  static TermOrder block(std::vector<std::string> front_block) {
    return {OrderKind::block_elimination, std::move(front_block)};
  }
};

struct Fuel {
  std::size_t max_spair_reductions = 10000;
  std::size_t max_total_terms = 200000;
};

/// Accumulated over every Gröbner computation that receives it.
struct FuelUsage {
  std::size_t spair_reductions = 0;
  std::size_t max_spair_reductions_single_run = 0;
  std::size_t runs = 0;
  std::size_t exhausted_runs = 0;

  FuelUsage& operator+=(const FuelUsage& other);
};

struct Ideal {
  std::vector<Polynomial> generators;
  /// Extra ambient variables (variables of the generators are always included).
  std::vector<std::string> variables;
};

/// Remainder of `p` after full reduction by `basis` (division algorithm).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const TermOrder& order);

/// Reduced Gröbner basis (monic, sorted by decreasing leading term), or
/// nullopt when the fuel runs out. The zero ideal yields an empty basis.
std::optional<std::vector<Polynomial>> buchberger(const Ideal& ideal, const TermOrder& order, const Fuel& fuel,
                                                  FuelUsage* usage = nullptr);

/// Weak Nullstellensatz test: yes iff 1 lies in the ideal (empty complex zero set).
Tri contains_one(const Ideal& ideal, const Fuel& fuel, FuelUsage* usage = nullptr);

/// I ∩ Q[remaining variables], via a block-elimination basis.
std::optional<Ideal> eliminate(const Ideal& ideal, const std::vector<std::string>& front, const Fuel& fuel,
                               FuelUsage* usage = nullptr);

/// I : f^∞, computed as the elimination of a fresh u from I + <u*f - 1>.
std::optional<Ideal> saturate(const Ideal& ideal, const Polynomial& f, const Fuel& fuel,
                              FuelUsage* usage = nullptr);

/// Name of a variable not occurring in `ideal` or `f`; not a valid input identifier.
std::string fresh_variable(const Ideal& ideal, const Polynomial& f, std::string_view stem = "_u");

}  // namespace groebner
}  // namespace folnewt
