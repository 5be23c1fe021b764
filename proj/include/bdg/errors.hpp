#ifndef BDG_ERRORS_HPP
#define BDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bdg {

// Physically invalid input to a pointwise operation (nonpositive density,
// inadmissible state, bad parameter).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// An iteration failed to converge (EOS pressure recovery, node solve).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stage update left the admissible set; carries the offending cell so the
// time integrator can restart with a halved step.
struct PositivityFault : std::runtime_error {
  long cell;
  explicit PositivityFault(long cell_, const std::string& what)
      : std::runtime_error(what), cell(cell_) {}
};

}  // namespace bdg

#endif
