#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

// Base for every error the library reports. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The closure of a cover list violates antisymmetry.
class CycleError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Ideal enumeration would exceed the configured cap.
class ExplosionError : public Error {
 public:
  ExplosionError(std::size_t cap)
      : Error("downset count exceeds cap " + std::to_string(cap)), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Point count exceeds the single-word mask width, or a generator hard cap.
class CapError : public Error {
 public:
  using Error::Error;
};

class NotALatticeError : public Error {
 public:
  enum class Kind { no_meet, no_join, no_bottom, no_top, empty };

  NotALatticeError(Kind kind, std::vector<std::size_t> culprits, std::string what)
      : Error(std::move(what)), kind_(kind), culprits_(std::move(culprits)) {}

  Kind kind() const { return kind_; }
  // For no_meet/no_join: the offending pair. For no_bottom/no_top: all
  // minimal (resp. maximal) elements.
  const std::vector<std::size_t>& culprits() const { return culprits_; }

 private:
  Kind kind_;
  std::vector<std::size_t> culprits_;
};

class NotDistributiveError : public Error {
 public:
  using Error::Error;
};

class EmptyError : public Error {
 public:
  using Error::Error;
};

class NotMaximalJIError : public Error {
 public:
  using Error::Error;
};

class NotASublatticeError : public Error {
 public:
  using Error::Error;
};

class NotACoverError : public Error {
 public:
  using Error::Error;
};

class EmptyClassError : public Error {
 public:
  EmptyClassError(std::size_t gamma)
      : Error("class C_" + std::to_string(gamma) + " is empty"), gamma_(gamma) {}
  std::size_t gamma() const { return gamma_; }

 private:
  std::size_t gamma_;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace latkit
