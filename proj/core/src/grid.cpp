#include "rieszkit/grid.hpp"

#include "rieszkit/error.hpp"

namespace rieszkit {

UniformGrid::UniformGrid(double a, double b, int M) : a_(a), b_(b), M_(M) {
  if (!(b > a)) throw DomainError("UniformGrid: need b > a");
  if (M < 2) throw DomainError("UniformGrid: need M >= 2");
}

GridFunction GridFunction::sample(const UniformGrid& g, const std::function<double(double)>& f) {
  GridFunction out{g, std::vector<double>(static_cast<std::size_t>(g.M()) + 1)};
  for (int j = 0; j <= g.M(); ++j) out.values[j] = f(g.x(j));
  return out;
}

}  // namespace rieszkit
