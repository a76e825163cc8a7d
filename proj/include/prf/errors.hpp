#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "prf/nat.hpp"

namespace prf {

struct ArityError : std::invalid_argument {
  explicit ArityError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct BadIndex : std::invalid_argument {
  explicit BadIndex(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownName : std::invalid_argument {
  explicit UnknownName(const std::string& msg) : std::invalid_argument(msg) {}
};

struct UnknownId : std::invalid_argument {
  explicit UnknownId(const std::string& msg) : std::invalid_argument(msg) {}
};

// Parse failure: byte offset into the input plus what the parser expected there.
struct SyntaxError : std::runtime_error {
  std::size_t position;
  std::string expectation;
  SyntaxError(std::size_t pos, const std::string& expected)
      : std::runtime_error("syntax error at offset " + std::to_string(pos) + ": expected " + expected),
        position(pos),
        expectation(expected) {}
};

// Evaluation ran out of its step budget. Carries where it died.
struct BudgetExceededError : std::runtime_error {
  std::uint64_t steps;
  std::string frame;                // rendering of the subterm being applied
  std::optional<Nat> argument;      // leading argument at the point of death, when known
  BudgetExceededError(std::uint64_t steps_used, std::string frame_desc, std::optional<Nat> arg = std::nullopt)
      : std::runtime_error("step budget exceeded after " + std::to_string(steps_used) + " steps in " + frame_desc),
        steps(steps_used),
        frame(std::move(frame_desc)),
        argument(std::move(arg)) {}
};

// A reference-function index we can name but not compute (growth too fast).
struct InfeasibleIndex : std::domain_error {
  explicit InfeasibleIndex(const std::string& msg) : std::domain_error(msg) {}
};

// An argument at which a reference function is exact only symbolically.
struct InfeasibleArgument : std::domain_error {
  explicit InfeasibleArgument(const std::string& msg) : std::domain_error(msg) {}
};

// A builder was asked to combine functions that violate its stated precondition.
struct PreconditionViolated : std::invalid_argument {
  Nat witness;  // input at which the precondition fails
  PreconditionViolated(const std::string& msg, Nat at)
      : std::invalid_argument(msg + " (witness x = " + at.str() + ")"), witness(std::move(at)) {}
};

// Scan for a descent point found none within the bound.
struct NotDecreasingWitness : std::invalid_argument {
  explicit NotDecreasingWitness(const std::string& msg) : std::invalid_argument(msg) {}
};

// A structural analysis hit a node kind it does not cover.
struct UnsupportedNode : std::invalid_argument {
  explicit UnsupportedNode(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace prf
