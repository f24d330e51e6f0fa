#pragma once

#include <stdexcept>
#include <string>

namespace charcrf {

// Library-wide error with a stable machine-readable kind. The CLI prints
// "error: <kind>: <message>" and exits nonzero.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

namespace errkind {
inline constexpr const char* resource_not_found = "resource-not-found";
inline constexpr const char* bad_format = "bad-format";
inline constexpr const char* invalid_argument = "invalid-argument";
inline constexpr const char* alignment_failed = "alignment-failed";
inline constexpr const char* train_failed = "train-failed";
inline constexpr const char* io_error = "io-error";
inline constexpr const char* bad_arguments = "bad-arguments";
}  // namespace errkind

}  // namespace charcrf
