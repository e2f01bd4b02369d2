#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lscert {

// Tool-level error with a stable machine-readable code ("horizon-exceeded",
// "unreachable-element", "invalid-scenario", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void require(bool cond, const std::string& code, const std::string& what) {
  if (!cond) {
    throw Error(code, what);
  }
}

}  // namespace lscert
