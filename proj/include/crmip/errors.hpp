#pragma once

#include <stdexcept>
#include <string>

namespace crmip {

// Parameter outside its documented domain (rates, probabilities, sizes).
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Occupancy distribution with no mass below full occupancy.
class degenerate_distribution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class unsupported_distribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class non_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_scenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw invalid_parameter(what);
}

}  // namespace detail
}  // namespace crmip
