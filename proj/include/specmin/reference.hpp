#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specmin {

// ρ² of the kernel for (k, r): (p + q·√s) / t, or a value published only to
// four decimals (decimal_only set, tolerance 5e-5 on ρ).
struct ClosedForm {
  int k = 0, r = 0;
  long p = 0, q = 0, s = 0, t = 1;
  std::optional<double> decimal_only;
  std::string text;

  double kernel_rho2() const;
  // ρ² of the minimizer at order n >= n0: kernel value + (n - n0)/k.
  double rho2_at(int n) const;
};

// Known for k <= 6.
std::optional<ClosedForm> closed_form(int k, int r);

struct ReferenceKernel {
  int main_index = 0;  // 1-based F^k_i
  std::vector<int> sequence;
};

// Published kernels for (k, r), k <= 6.
std::vector<ReferenceKernel> reference_kernels(int k, int r);

// Published per-main-tree candidate counts ("#" column) for k in {5, 6};
// empty otherwise.
std::vector<long> reference_counts(int k, int r);

}  // namespace specmin
