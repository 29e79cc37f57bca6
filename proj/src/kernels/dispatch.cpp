// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>
#include <string>

#include "pinris/kernels/kernels.hpp"

namespace pinris::kernels {

bool cpu_has_avx2();

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return avx2_kernels() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("kernel variant '" + std::string(to_string(isa)) +
                             "' is not available on this CPU/build");
  }
  return isa == Isa::Avx2 ? *avx2_kernels() : scalar_kernels();
}

const KernelTable& best_kernels() {
  return isa_supported(Isa::Avx2) ? *avx2_kernels() : scalar_kernels();
}

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "scalar";
}

const KernelTable& kernels_by_name(std::string_view name) {
  if (name == "auto") return best_kernels();
  if (name == "scalar") return kernels_for(Isa::Scalar);
  if (name == "avx2") return kernels_for(Isa::Avx2);
  throw std::invalid_argument("unknown kernel '" + std::string(name) + "' (auto|scalar|avx2)");
}

}  // namespace pinris::kernels
