#pragma once

#include <stdexcept>
#include <string>

namespace gordian {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be read as a PD code, polynomial, or table.
/// `Malformed` is a syntax problem; `Invalid` means the text parsed but
/// does not describe a consistent oriented planar diagram.
class ParseError : public Error {
 public:
  enum class Kind { Malformed, Invalid };

  ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// The HOMFLY engine refused a diagram above its crossing cap.
class TooLarge : public Error {
 public:
  TooLarge(int crossings, int cap)
      : Error("diagram has " + std::to_string(crossings) +
              " crossings after simplification (cap " + std::to_string(cap) + ")"),
        crossings_(crossings),
        cap_(cap) {}
  int crossings() const noexcept { return crossings_; }
  int cap() const noexcept { return cap_; }

 private:
  int crossings_;
  int cap_;
};

class NotOdd : public Error {
 public:
  using Error::Error;
};

class NotAKnot : public Error {
 public:
  using Error::Error;
};

class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// A computed HOMFLY polynomial failed its structural invariants. This is
/// an engine bug, never a user error.
class MalformedHomfly : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gordian
