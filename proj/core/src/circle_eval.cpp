// Evaluation of a truncated series on a full circle of equally spaced points.
// The values are the backward DFT of c_k r^k (folded modulo the number of
// angles), computed with FFTW.

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "bazlab/errors.hpp"
#include "bazlab/powseries.hpp"

namespace bazlab {

namespace {

// fftw planning is not thread-safe; execution through fftw_execute_dft is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [size, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan backward(std::size_t size) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(size); it != plans_.end()) return it->second;
    auto* in = fftw_alloc_complex(size);
    auto* out = fftw_alloc_complex(size);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(size), in, out, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(size, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

std::vector<cplx> eval_circle(const TruncSeries& s, double r, std::size_t angles,
                              double r_max) {
  if (angles == 0) throw ParameterError("eval_circle: angles must be positive");
  if (!(r >= 0.0) || r > r_max) {
    throw EvaluationDomainError("eval_circle: radius outside [0, " + std::to_string(r_max) +
                                "]");
  }
  std::vector<cplx> folded(angles, cplx{});
  double rk = 1.0;
  const auto c = s.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    folded[k % angles] += c[k] * rk;
    rk *= r;
  }
  std::vector<cplx> values(angles);
  fftw_execute_dft(plan_cache().backward(angles),
                   reinterpret_cast<fftw_complex*>(folded.data()),
                   reinterpret_cast<fftw_complex*>(values.data()));
  return values;
}

}  // namespace bazlab
