#pragma once

#include <string>
#include <vector>

#include "vt/transforms.hpp"

namespace vt {

/// A rendered operator table plus whether the live computation matched the
/// pinned expectation.
struct TableResult {
  std::string text;
  bool matches_pinned = false;
};

/// 4x4 operator composition table over {1, I, J, K} with parity written as P.
TableResult composition_table_text();

/// Powers of the Fourier operator: n = 0..4 alongside i^n.
TableResult frft_cycle_table_text();

/// The Fourier/Laplace hybrid at theta = 0, pi/2, pi, 3pi/2, 2pi.
TableResult hybrid_table_text();

}  // namespace vt
