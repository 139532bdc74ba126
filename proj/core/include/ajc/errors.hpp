#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ajc {

// Raised when a photon-number tail bound cannot be met below the hard cap.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(std::size_t cap, double remaining_tail)
      : std::runtime_error("photon-number truncation exceeded hard cap n_max=" +
                           std::to_string(cap) + " (remaining tail " +
                           std::to_string(remaining_tail) + ")"),
        cap_(cap),
        remaining_tail_(remaining_tail) {}

  std::size_t cap() const noexcept { return cap_; }
  double remaining_tail() const noexcept { return remaining_tail_; }

 private:
  std::size_t cap_;
  double remaining_tail_;
};

// Configuration problems. key() names the offending field when there is one.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message),
        key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

// A quantity that should be a valid density matrix or Hermitian operator is not.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ajc
