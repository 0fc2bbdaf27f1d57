#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ecg {

// Malformed text input or an argument outside an operation's domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact oracle refused to run on an instance above its configured guard.
class SizeGuardError : public std::runtime_error {
 public:
  SizeGuardError(const std::string& what, std::size_t size, std::size_t guard)
      : std::runtime_error(what + ": instance too large (" + std::to_string(size) +
                           " > guard " + std::to_string(guard) + ")"),
        size_(size),
        guard_(guard) {}

  std::size_t size() const { return size_; }
  std::size_t guard() const { return guard_; }

 private:
  std::size_t size_;
  std::size_t guard_;
};

inline constexpr std::size_t kDefaultGuard = 60;

inline void check_guard(const char* who, std::size_t size, std::size_t guard) {
  if (size > guard) throw SizeGuardError(who, size, guard);
}

}  // namespace ecg
