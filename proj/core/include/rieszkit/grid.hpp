#pragma once

#include <functional>
#include <vector>

namespace rieszkit {

class UniformGrid {
 public:
  UniformGrid(double a, double b, int M);

  double a() const { return a_; }
  double b() const { return b_; }
  int M() const { return M_; }
  double h() const { return (b_ - a_) / M_; }
  // x_0 = a and x_M = b exactly.
  double x(int j) const { return j == M_ ? b_ : a_ + j * h(); }

 private:
  double a_, b_;
  int M_;
};

struct GridFunction {
  UniformGrid grid;
  std::vector<double> values;  // M + 1 nodal samples

  static GridFunction sample(const UniformGrid& g, const std::function<double(double)>& f);
};

}  // namespace rieszkit
