#pragma once

// Batched per-omega diagnostics for the sweep. Every instruction-set variant
// performs the same IEEE operations in the same order as the scalar reference,
// so results are bit-identical whichever variant the dispatcher picks.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "braidswitch/complex_matrix.hpp"

namespace braidswitch::kernels {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool isa_supported(Isa isa);

/// Widest supported variant.
Isa best_isa();

/// Variant used when no explicit Isa is passed. Starts as best_isa(), or the
/// value of BRAIDSWITCH_ISA (scalar|avx2|neon) when that is set and supported.
Isa active_isa();
void set_active_isa(Isa isa);

/// Structure-of-arrays batch of 2x2 complex matrices. Entry k is row-major
/// (00, 01, 10, 11); re[k][lane], im[k][lane].
class Mat2Batch {
 public:
  explicit Mat2Batch(std::size_t lanes);

  std::size_t size() const { return lanes_; }
  void set(std::size_t lane, const Mat2& m);
  Mat2 get(std::size_t lane) const;

  const double* re(std::size_t entry) const { return re_[entry].data(); }
  const double* im(std::size_t entry) const { return im_[entry].data(); }

 private:
  std::size_t lanes_;
  std::array<std::vector<double>, 4> re_;
  std::array<std::vector<double>, 4> im_;
};

/// For each omega: max-norm of beta_i^dagger J beta_i - J for the two Squier
/// generators at s = e^{i omega / 2}.
void j_unitarity_residuals(std::span<const double> omega, std::span<double> err1, std::span<double> err2,
                           Isa isa = active_isa());

/// For each lane: max-norm of U^dagger U - I.
void unitarity_errors(const Mat2Batch& batch, std::span<double> out, Isa isa = active_isa());

}  // namespace braidswitch::kernels
