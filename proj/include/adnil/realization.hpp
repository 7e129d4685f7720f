#pragma once

#include <vector>

#include "adnil/dynkin.hpp"
#include "adnil/linalg.hpp"
#include "adnil/rootsys.hpp"

// Matrix realization: A as trace-zero n×n matrices, C as Hamiltonian
// matrices for [[0, I], [-I, 0]], D for [[0, I], [I, 0]], and B for the same
// form with an extra 1×1 block, so every Cartan element is diagonal.
namespace adnil {

// Side of the natural representation: n (A), 2n+1 (B), 2n (C, D).
std::size_t matrix_side(const RootSystem& rs);

// Root vector for a root of either sign; the one for -α is the transpose of
// the one for α.
linalg::IntMatrix root_matrix(const RootSystem& rs, const Root& root);
// Y_α for positive α, scaled so that [X_α, Y_α] is the coroot 2α/(α,α).
linalg::IntMatrix negative_root_matrix(const RootSystem& rs, const Root& positive);

// Diagonal matrix of h: diag(h) (A), diag(h, -h[, 0]) (B, C, D).
linalg::IntMatrix cartan_matrix(const RootSystem& rs, const std::vector<int>& h);
linalg::IntMatrix cartan_matrix(const RootSystem& rs, const DynkinElement& H);

// Σ X_α over the given positive roots, all coefficients 1.
linalg::IntMatrix sum_of_roots(const RootSystem& rs, const std::vector<std::size_t>& roots);

}  // namespace adnil
