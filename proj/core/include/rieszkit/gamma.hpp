#pragma once

namespace rieszkit {

// Gamma function for 0 < x <= 50. Throws DomainError outside that range.
double gamma_real(double x);

}  // namespace rieszkit
