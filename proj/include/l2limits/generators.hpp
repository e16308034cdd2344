#pragma once

#include "l2limits/complex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace l2limits {

/// d = 1: the cycle C_n. d = 2: the n x n torus with every unit square
/// split along its (+1,+1) diagonal (n^2 vertices, 3n^2 edges, 2n^2
/// triangles, every vertex of degree 6); vertex (i, j) has id i*n + j.
/// Throws std::invalid_argument for n < 3 or d outside {1, 2}.
SimplicialComplex torus_tower(int d, std::size_t n);

/// Full (d-1)-skeleton of the simplex on n vertices plus each d-face
/// independently with probability p (faces visited in lexicographic order,
/// one draw each).
SimplicialComplex linial_meshulam(int d, std::size_t n, double p, std::uint64_t seed);

/// Clique complex, truncated at max_dim, of G(n, p) (edges drawn in
/// lexicographic order).
SimplicialComplex random_flag(std::size_t n, double p, int max_dim, std::uint64_t seed);

/// Clique complex of an explicit graph, truncated at max_dim.
SimplicialComplex flag_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, int max_dim);

/// Small named complexes used as an oracle corpus.
const std::map<std::string, SimplicialComplex>& fixtures();
const SimplicialComplex& fixture(const std::string& name);

SimplicialComplex path_complex(std::size_t n);   // vertices 0..n-1
SimplicialComplex cycle_complex(std::size_t n);  // n >= 3
SimplicialComplex star_complex(std::size_t leaves);  // centre 0
SimplicialComplex full_simplex(std::size_t n);   // all subsets of 0..n-1

}  // namespace l2limits
