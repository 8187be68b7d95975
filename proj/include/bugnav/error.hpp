#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

namespace bugnav {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data was violated.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Network failure, unexpected status, or a replay request with no recording.
class TransportError : public Error {
 public:
  using Error::Error;
};

class FixtureMissError : public TransportError {
 public:
  using TransportError::TransportError;
};

class RateLimitError : public Error {
 public:
  RateLimitError(const std::string& what, std::chrono::seconds wait)
      : Error(what), wait_(wait) {}

  [[nodiscard]] std::chrono::seconds wait() const noexcept { return wait_; }

 private:
  std::chrono::seconds wait_;
};

/// Every query strategy was exhausted without producing a usable query.
class NoQueryError : public Error {
 public:
  NoQueryError(const std::string& what, std::vector<std::string> attempted)
      : Error(what), attempted_(std::move(attempted)) {}

  [[nodiscard]] const std::vector<std::string>& attempted() const noexcept { return attempted_; }

 private:
  std::vector<std::string> attempted_;
};

}  // namespace bugnav
