#include "murmur/error.hpp"

namespace murmur {

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::size: return "size";
    case ErrorCategory::data: return "data";
    case ErrorCategory::coverage: return "coverage";
    case ErrorCategory::accuracy: return "accuracy";
    case ErrorCategory::window: return "window";
    case ErrorCategory::io: return "io";
  }
  return "unknown";
}

}  // namespace murmur
