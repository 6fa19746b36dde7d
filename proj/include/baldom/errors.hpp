#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace baldom {

// Thrown when a search would exceed its configured limits. Carries the kernel
// nullity when the limit that tripped was the free-variable enumeration bound.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what,
                          std::optional<std::size_t> nullity = std::nullopt)
      : std::runtime_error(what), nullity_(nullity) {}

  std::optional<std::size_t> nullity() const { return nullity_; }

 private:
  std::optional<std::size_t> nullity_;
};

}  // namespace baldom
