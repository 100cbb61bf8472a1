#pragma once

#include <stdexcept>
#include <string>

namespace intorder {

enum class Errc {
  empty_bases,
  unequal_cardinality,
  exchange_axiom_violated,
  invalid_element,
  zero_matrix,
  invalid_rank,
  not_a_basis,
  element_in_basis,
  element_not_in_basis,
  not_a_bijection,
  dependent_input,
  gradedness_violated,
  lattice_violated,
  not_a_node,
  element_in_initial_basis,
  budget_exceeded,
  precondition_unmet,
  invalid_diagonal,
  not_an_ideal,
  schema_error,
  unsupported,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_bases: return "empty-bases";
    case Errc::unequal_cardinality: return "unequal-cardinality";
    case Errc::exchange_axiom_violated: return "exchange-axiom-violated";
    case Errc::invalid_element: return "invalid-element";
    case Errc::zero_matrix: return "zero-matrix";
    case Errc::invalid_rank: return "invalid-rank";
    case Errc::not_a_basis: return "not-a-basis";
    case Errc::element_in_basis: return "element-in-basis";
    case Errc::element_not_in_basis: return "element-not-in-basis";
    case Errc::not_a_bijection: return "not-a-bijection";
    case Errc::dependent_input: return "dependent-input";
    case Errc::gradedness_violated: return "gradedness-violated";
    case Errc::lattice_violated: return "lattice-violated";
    case Errc::not_a_node: return "not-a-node";
    case Errc::element_in_initial_basis: return "element-in-initial-basis";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::precondition_unmet: return "precondition-unmet";
    case Errc::invalid_diagonal: return "invalid-diagonal";
    case Errc::not_an_ideal: return "not-an-ideal";
    case Errc::schema_error: return "schema-error";
    case Errc::unsupported: return "unsupported";
  }
  return "unknown";
}

/// Library error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace intorder
