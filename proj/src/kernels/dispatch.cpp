#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "braidswitch/kernels/kernels.hpp"
#include "variants.hpp"

namespace braidswitch::kernels {

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(BRAIDSWITCH_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(BRAIDSWITCH_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("BRAIDSWITCH_ISA")) {
    const std::string_view v(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (v == to_string(isa) && isa_supported(isa)) return isa;
    }
  }
  return best_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("kernel variant not supported: ") + to_string(isa));
  active().store(isa, std::memory_order_relaxed);
}

Mat2Batch::Mat2Batch(std::size_t lanes) : lanes_(lanes) {
  for (auto& v : re_) v.assign(lanes, 0.0);
  for (auto& v : im_) v.assign(lanes, 0.0);
}

void Mat2Batch::set(std::size_t lane, const Mat2& m) {
  for (std::size_t k = 0; k < 4; ++k) {
    const cplx z = m.data()[k];
    re_[k][lane] = z.real();
    im_[k][lane] = z.imag();
  }
}

Mat2 Mat2Batch::get(std::size_t lane) const {
  return Mat2{{re_[0][lane], im_[0][lane]},
              {re_[1][lane], im_[1][lane]},
              {re_[2][lane], im_[2][lane]},
              {re_[3][lane], im_[3][lane]}};
}

void j_unitarity_residuals(std::span<const double> omega, std::span<double> err1, std::span<double> err2, Isa isa) {
  if (err1.size() != omega.size() || err2.size() != omega.size()) {
    throw std::invalid_argument("j_unitarity_residuals: output size mismatch");
  }
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("kernel variant not supported: ") + to_string(isa));
  // Trig stays in scalar libm so every variant sees identical inputs.
  std::vector<double> cos_half(omega.size());
  std::vector<double> sin_half(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    cos_half[i] = std::cos(0.5 * omega[i]);
    sin_half[i] = std::sin(0.5 * omega[i]);
  }
  const detail::JResidualArgs args{cos_half.data(), sin_half.data(), err1.data(), err2.data(), omega.size()};
  switch (isa) {
#if defined(BRAIDSWITCH_HAVE_AVX2)
    case Isa::avx2:
      detail::j_residuals_avx2(args);
      return;
#endif
#if defined(BRAIDSWITCH_HAVE_NEON)
    case Isa::neon:
      detail::j_residuals_neon(args);
      return;
#endif
    default:
      detail::j_residuals_scalar(args);
  }
}

void unitarity_errors(const Mat2Batch& batch, std::span<double> out, Isa isa) {
  if (out.size() != batch.size()) throw std::invalid_argument("unitarity_errors: output size mismatch");
  if (!isa_supported(isa)) throw std::invalid_argument(std::string("kernel variant not supported: ") + to_string(isa));
  detail::UnitarityArgs args{{batch.re(0), batch.re(1), batch.re(2), batch.re(3)},
                             {batch.im(0), batch.im(1), batch.im(2), batch.im(3)},
                             out.data(),
                             batch.size()};
  switch (isa) {
#if defined(BRAIDSWITCH_HAVE_AVX2)
    case Isa::avx2:
      detail::unitarity_avx2(args);
      return;
#endif
#if defined(BRAIDSWITCH_HAVE_NEON)
    case Isa::neon:
      detail::unitarity_neon(args);
      return;
#endif
    default:
      detail::unitarity_scalar(args);
  }
}

}  // namespace braidswitch::kernels
