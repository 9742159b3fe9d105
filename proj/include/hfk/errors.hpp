#pragma once

#include <stdexcept>
#include <string>

namespace hfk {

// Exit codes used by the command line tool.
enum class ExitCode : int {
  ok = 0,
  input = 2,
  io = 3,
  budget = 4,
  invariant = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

struct InputError : Error {
  explicit InputError(const std::string& m) : Error(ExitCode::input, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ExitCode::io, m) {}
};
struct BudgetError : Error {
  explicit BudgetError(const std::string& m) : Error(ExitCode::budget, m) {}
};
struct InvariantError : Error {
  explicit InvariantError(const std::string& m) : Error(ExitCode::invariant, m) {}
};

}  // namespace hfk
