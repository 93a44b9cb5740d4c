#pragma once

#include <stdexcept>
#include <string>

namespace extword {

// Invalid input: bad syntax, foreign letters, dimension mismatches,
// violated preconditions. CLI exit code 2.
class invalid_input_error : public std::runtime_error {
public:
  explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was exceeded (step counts, expansion sizes, search
// bounds). Inconclusive, not a disproof. CLI exit code 3.
class cap_exceeded_error : public std::runtime_error {
public:
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace extword
