#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adnil/construct.hpp"
#include "adnil/linalg.hpp"
#include "adnil/partitions.hpp"
#include "adnil/realization.hpp"
#include "adnil/rootsys.hpp"

namespace adnil::oracle {

using linalg::IntMatrix;
using linalg::RatMatrix;

using adnil::cartan_matrix;
using adnil::matrix_side;
using adnil::negative_root_matrix;
using adnil::root_matrix;
using adnil::sum_of_roots;

Partition jordan_type(const IntMatrix& m);

struct GenericityOptions {
    std::uint64_t seed = 0x5eed;
    int trials = 3;
};

Partition associated_orbit(const RootSystem& rs, const AdNilpotentIdeal& ideal, const GenericityOptions& opts = {});

struct OrbitMinEntry {
    int min_dim = 0;
    int minimizers = 0;
    std::vector<std::size_t> witness;  // generators of one minimizing ideal
};

struct OrbitMinTable {
    Kind kind = Kind::A;
    int size = 0;
    std::size_t ideals = 0;
    std::map<Partition, OrbitMinEntry> minima;
};

inline constexpr std::size_t max_enumerable_positive = 30;

// Exhaustive minimum ideal dimension per associated orbit. threads = 0 picks
// the hardware concurrency; the result does not depend on it.
OrbitMinTable min_dims_by_orbit(Kind kind, int size, const GenericityOptions& opts = {}, unsigned threads = 1);

struct TripleCheck {
    bool h_x = false;  // [H,X] = 2X
    bool h_y = false;  // [H,Y] = -2Y
    bool x_y = false;  // [X,Y] = H
    bool ok() const { return h_x && h_y && x_y; }
};

TripleCheck verify_triple(const RootSystem& rs, const TripleData& triple);

struct KostantReport {
    int dim_g2 = 0;
    int ad_h = 0;
    int ad_g0_plus = 0;
    int ad_g0_minus = 0;
    int ad_g0 = 0;  // rank of ad_X on h ⊕ g₀⁺ ⊕ g₀⁻ together
    int generators = 0;
    bool ok() const {
        return ad_h + ad_g0_plus + ad_g0_minus == dim_g2 && ad_g0 == dim_g2 && ad_h == generators;
    }
};

// Types A and D only.
KostantReport kostant_decomposition_check(const OrbitLabel& label);

}  // namespace adnil::oracle
