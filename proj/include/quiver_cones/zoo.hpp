#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quiver_cones/quiver.hpp"

namespace qcones::zoo {

/// Oriented line 1 -> 2 -> ... -> n (arrows a1..a{n-1}) with tau(i) = n+1-i.
QuiverBundle make_line(int n);

/// Vertices 1, 2 with n parallel arrows a1..an from 1 to 2; tau swaps the
/// vertices and fixes every arrow.
QuiverBundle make_kronecker(int n);

/// The (2k, n)-Sun quiver: vertices "i.j" (i in 0..2k-1, j in 1..n), arrows
/// "ai.j". Returns tau, and rho as well when k is odd.
QuiverBundle make_sun(int k, int n);

/// The six-vertex D5-hat quiver x1, x2 -> x3 -> x4 -> x5, x6 with its
/// involution tau = (x1 x6)(x2 x5)(x3 x4), (a1 a5)(a2 a4).
QuiverBundle make_d5hat();

}  // namespace qcones::zoo
