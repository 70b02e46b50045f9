#ifndef GRIDTHRESH_ERRORS_HPP
#define GRIDTHRESH_ERRORS_HPP

#include <stdexcept>

namespace gridthresh {

// Thrown when a requested computation exceeds its enumeration guard.
// Maps to exit code 2 in the CLI; std::invalid_argument maps to 64/2
// depending on whether it was a flag error or a domain error.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gridthresh

#endif
