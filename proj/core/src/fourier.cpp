#include "mrlab/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace mrlab {

namespace {

using PlanKey = std::tuple<std::vector<int>, std::size_t, int>;

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(const Grid& grid, std::size_t howmany, int sign) {
    std::vector<int> dims;
    for (int k = 0; k < grid.dim(); ++k) dims.push_back(static_cast<int>(grid.size(k)));
    PlanKey key{dims, howmany, sign};
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<Complex> scratch(grid.point_count() * howmany);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    const int stride = static_cast<int>(howmany);
    fftw_plan plan = fftw_plan_many_dft(grid.dim(), dims.data(), stride, buf, nullptr, stride, 1,
                                        buf, nullptr, stride, 1, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(std::move(key), plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(GridFunction& u, int sign) {
  fftw_plan plan = cache().get(u.grid(), u.components(), sign);
  auto* buf = reinterpret_cast<fftw_complex*>(u.values().data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

void forward_transform_inplace(GridFunction& u) {
  execute(u, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(u.point_count());
  for (Complex& z : u.values()) z *= scale;
}

void inverse_transform_inplace(GridFunction& u_hat) { execute(u_hat, FFTW_BACKWARD); }

GridFunction forward_transform(const GridFunction& u) {
  GridFunction out(u);
  forward_transform_inplace(out);
  return out;
}

GridFunction inverse_transform(const GridFunction& u_hat) {
  GridFunction out(u_hat);
  inverse_transform_inplace(out);
  return out;
}

double parseval_norm(const GridFunction& u_hat) {
  double volume = 1.0;
  for (int k = 0; k < u_hat.grid().dim(); ++k) volume *= 2.0 * u_hat.grid().extent(k);
  double s = 0.0;
  for (const Complex& z : u_hat.values()) s += std::norm(z);
  return std::sqrt(volume * s);
}

}  // namespace mrlab
