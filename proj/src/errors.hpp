#pragma once

// Error taxonomy. Internals throw; the C boundary catches and converts to
// status codes. The CLI maps categories onto exit codes: usage/domain/resource
// problems exit 2, accuracy/pole failures exit 3.

#include <stdexcept>
#include <string>

namespace zr {

enum class errc : int {
  ok = 0,
  usage = 1,
  domain = 2,
  accuracy = 3,
  pole = 4,
  resource = 5,
  internal = 6,
};

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct usage_error : error {
  explicit usage_error(const std::string& msg) : error(errc::usage, msg) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& msg) : error(errc::domain, msg) {}
};

struct pole_error : error {
  explicit pole_error(const std::string& msg) : error(errc::pole, msg) {}
};

struct resource_error : error {
  explicit resource_error(const std::string& msg) : error(errc::resource, msg) {}
};

// Carries the best available estimate of the achieved error so callers can
// report how far the request was missed.
struct accuracy_error : error {
  double estimate;
  accuracy_error(const std::string& msg, double est)
      : error(errc::accuracy, msg), estimate(est) {}
};

}  // namespace zr
