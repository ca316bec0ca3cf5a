#pragma once

#include <stdexcept>
#include <string>

namespace szeta {

// Base of every library error. name() is the stable identifier the CLI prints
// on stderr ("PoleError", "IncompleteTableError", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SZETA_DEFINE_ERROR(Type)                                          \
  class Type : public Error {                                             \
   public:                                                                \
    explicit Type(const std::string& what) : Error(#Type, what) {}        \
  }

SZETA_DEFINE_ERROR(DomainError);
SZETA_DEFINE_ERROR(PoleError);
SZETA_DEFINE_ERROR(ParseError);
SZETA_DEFINE_ERROR(EmptyTableError);
SZETA_DEFINE_ERROR(IncompleteTableError);
SZETA_DEFINE_ERROR(InconsistencyError);
SZETA_DEFINE_ERROR(ComplexityError);
SZETA_DEFINE_ERROR(NearSingularityError);
SZETA_DEFINE_ERROR(ContourError);

#undef SZETA_DEFINE_ERROR

// Carries the offending line so callers can point at the file position.
class MonotonicityError : public Error {
 public:
  MonotonicityError(std::size_t line, const std::string& what)
      : Error("MonotonicityError", "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace szeta
