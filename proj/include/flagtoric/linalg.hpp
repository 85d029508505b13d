#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagtoric/rational.hpp"

namespace flagtoric {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major
using IntVec = std::vector<std::int64_t>;

RatMat rat_mat(std::size_t rows, std::size_t cols);

// Gaussian elimination over Q. The matrix is taken by value.
int rank(RatMat m);
Rat det(RatMat m);

// Basis of { x : m x = 0 }, one kernel vector per column of the result.
std::vector<RatVec> kernel(const RatMat& m);

// Solves m x = b; nullopt when inconsistent. With multiple solutions an
// arbitrary one is returned.
std::optional<RatVec> solve(RatMat m, RatVec b);

// Rank of a set of integer points, translated by the first point.
// Entries must stay far from the int64 boundary (desk scale: |x| <= 1e6).
int affine_rank(const std::vector<IntVec>& points);

// Rank of integer vectors via fraction-free elimination.
int rank_int(std::vector<IntVec> m);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(IntVec v);

std::int64_t det_int(std::vector<IntVec> m);

// Normal of the hyperplane through d affinely independent points in Z^d
// (cofactor expansion). Empty when the points are affinely dependent.
IntVec hyperplane_normal(const std::vector<IntVec>& pts);

}  // namespace flagtoric
