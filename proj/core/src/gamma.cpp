#include "rieszkit/gamma.hpp"

#include <cmath>
#include <sstream>

#include "rieszkit/error.hpp"

namespace rieszkit {

double gamma_real(double x) {
  if (!(x > 0.0) || x > 50.0) {
    std::ostringstream msg;
    msg << "gamma_real: argument " << x << " outside (0, 50]";
    throw DomainError(msg.str());
  }
  // glibc tgamma is accurate to a few ulp on this range; the test suite pins it at 1e-12.
  return std::tgamma(x);
}

}  // namespace rieszkit
