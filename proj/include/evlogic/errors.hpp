#ifndef EVLOGIC_ERRORS_HPP
#define EVLOGIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// formula

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class MissingAtom : public Error {
 public:
  explicit MissingAtom(std::string name)
      : Error("no truth value assigned to atom '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// size limits; the CLI maps every CapExceeded to exit code 3

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t value, std::size_t cap, const std::string& what = "sentence count")
      : Error(what + " " + std::to_string(value) + " exceeds cap " + std::to_string(cap)),
        value_(value),
        cap_(cap) {}
  std::size_t value() const { return value_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t value_;
  std::size_t cap_;
};

class AtomCapExceeded : public CapExceeded {
 public:
  AtomCapExceeded(std::size_t value, std::size_t cap) : CapExceeded(value, cap, "atom count") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// linear programming

class Infeasible : public Error {
 public:
  Infeasible() : Error("linear program is infeasible") {}
};

class Unbounded : public Error {
 public:
  Unbounded() : Error("linear program is unbounded") {}
};

// Inputs that no probability or mass assignment can satisfy; exit code 2.

class Incoherence : public Error {
 public:
  using Error::Error;
};

class Incoherent : public Incoherence {
 public:
  Incoherent() : Incoherence("incoherent probability assignment") {}
};

class InfeasibleIntervals : public Incoherence {
 public:
  InfeasibleIntervals() : Incoherence("no basic probability assignment matches the evidential intervals") {}
};

class TotalConflict : public Incoherence {
 public:
  TotalConflict() : Incoherence("total conflict: mass functions cannot be combined") {}
};

class ImpermissibleConditional : public Incoherence {
 public:
  ImpermissibleConditional(std::size_t row, const std::string& detail)
      : Incoherence("impermissible conditional probability at interpretation " + std::to_string(row) +
                    ": " + detail),
        row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

// probability / mass bookkeeping

class ZeroProbabilityCondition : public Error {
 public:
  ZeroProbabilityCondition() : Error("conditioning event has probability zero") {}
};

class OverlappingSpecs : public Error {
 public:
  OverlappingSpecs() : Error("margin specifications share a sentence index") {}
};

class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("operands are defined over different interpretation spaces") {}
};

class EmptyFocalElement : public Error {
 public:
  using Error::Error;
  EmptyFocalElement() : Error("focal element is empty") {}
};

class MassSumNotOne : public Error {
 public:
  explicit MassSumNotOne(const std::string& total) : Error("masses sum to " + total + ", not 1") {}
};

class InvalidDistribution : public Error {
 public:
  using Error::Error;
};

// knowledge-base files

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateName : public Error {
 public:
  explicit DuplicateName(const std::string& name) : Error("duplicate name '" + name + "'") {}
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown name '" + name + "'") {}
};

class MixedProbAndInterval : public Error {
 public:
  MixedProbAndInterval() : Error("a knowledge base may carry point probabilities or intervals, not both") {}
};

}  // namespace evlogic

#endif  // EVLOGIC_ERRORS_HPP
