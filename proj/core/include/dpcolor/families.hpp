#pragma once

#include <string>
#include <vector>

#include "dpcolor/multigraph.hpp"

namespace dpc {

// Generators for the named graph families. Vertex numbering is fixed so
// that cover files built against a generated graph stay valid:
//   - joins put the hub at vertex 0 (wheel_even, hk);
//   - cycle/path vertices run in walk order;
//   - hk numbers the path 1..2k+2 after the hub and puts the extra
//     vertex z last, at 2k+3;
//   - theta puts the two end vertices at 0 and 1, then the internal
//     vertices of each path in path order.
// Edge order is documented per generator in families.cpp.

Multigraph edgeless(int n);
Multigraph digon();
Multigraph cycle(int n);  // n >= 3
Multigraph path(int n);   // n >= 1 vertices
Multigraph complete(int n);
Multigraph wheel_even(int k);  // hub joined to C_{2k+2}; n = 2k+3, l = 4k+4
Multigraph hk(int k);          // hub joined to P_{2k+2}, plus z on both path ends
Multigraph theta(const std::vector<int>& lengths);  // at most one length may be 1
Multigraph dodecahedron();
Multigraph c5();

// Dispatch by family name; params as the CLI passes them.
Multigraph family_generate(const std::string& name, const std::vector<int>& params);

std::vector<std::string> family_names();

}  // namespace dpc
