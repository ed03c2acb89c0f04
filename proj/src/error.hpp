#pragma once

#include <stdexcept>
#include <string>

namespace scsudoku {

// Error categories; kept in sync with the scs_status codes of the C API.
enum class ErrorCode {
  parse_error = 1,
  invalid_argument = 2,
  inconsistent = 3,
  too_large = 4,
  budget_exceeded = 5,
  unsupported = 6,
  io_error = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace scsudoku
