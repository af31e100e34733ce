#ifndef PCUBE_GENERATORS_HPP
#define PCUBE_GENERATORS_HPP

#include "pcube/core.hpp"

namespace pcube::gen {

// All generators throw Error{BadParams} for parameters outside their range.

/// Q_m, m <= 20.
CubeGraph hypercube(int m);
/// Even cycle with `length` vertices, length >= 4.
CubeGraph cycle(int length);
/// Path with n >= 1 vertices.
CubeGraph path(int n);
/// Star K_{1,leaves}.
CubeGraph star(int leaves);
/// Q_m minus its all-ones vertex.
CubeGraph cube_minus(int m);
/// Q_m minus two antipodal vertices, m >= 3.
CubeGraph cube_minus_minus(int m);
/// Full subdivision SK_n in its standard embedding, n >= 2.
CubeGraph full_subdivision(int n);
/// SK_n together with the vertex adjacent to all originals.
CubeGraph full_subdivision_star(int n);
/// Member X_m^i of the excluded family, m >= 4, 1 <= i <= m + 1.
CubeGraph xfamily(int m, int i);

} // namespace pcube::gen

#endif
