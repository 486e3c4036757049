#pragma once

#include <stdexcept>
#include <string>

namespace pfd {

enum class errc {
  invalid_argument,  // bad parameter value (r < 1, negative budget, ...)
  invalid_vertex,    // dead or unknown vertex id
  precondition,      // operation precondition violated
  parse,             // malformed instance text
  too_large,         // enumeration guard refused the input
  internal,          // invariant broken; indicates a bug
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace pfd
