#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covertab {

// Error with a stable machine-readable name. The CLI prints the name on
// stderr and maps it to an exit code, so names are part of the interface.
class CoverError : public std::runtime_error {
 public:
  CoverError(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void raise(const std::string& name, const std::string& what) {
  throw CoverError(name, what);
}

}  // namespace covertab
