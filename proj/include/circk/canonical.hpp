#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circk/graph.hpp"

namespace circk {

inline constexpr int kCanonicalFormCap = 12;

// Isomorphism-invariant string: equal iff the graphs are isomorphic.
// Throws TooLarge above kCanonicalFormCap vertices.
std::string canonical_form(const Graph& g);

// Rooted variant: isomorphisms must map distinguished[i] to distinguished[i].
std::string canonical_form(const Graph& g, std::span<const Vertex> distinguished);

// Edge-colored variant on an n*n row-major matrix of colors (0 = no edge,
// symmetric, zero diagonal).
std::string canonical_form(int n, std::span<const std::uint8_t> matrix,
                           std::span<const Vertex> distinguished);

}  // namespace circk
