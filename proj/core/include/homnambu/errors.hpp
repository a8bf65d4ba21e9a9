#pragma once

#include <stdexcept>
#include <string>

namespace homnambu {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad shapes, unknown labels, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

// Two generators of one symmetry orbit disagree.
class OrbitConflict : public InputError {
 public:
  OrbitConflict(std::string tuple, std::string expected, std::string found);
  const std::string& tuple() const noexcept { return tuple_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string tuple_;
  std::string expected_;
  std::string found_;
};

// A construction was asked to run on data that fails its hypotheses.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class FixedPointViolation : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class SingularMap : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

}  // namespace homnambu
