#pragma once

#include <map>
#include <optional>
#include <vector>

#include "adnil/partitions.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

// Dominant Cartan element of an sl2-triple, as the vector h with
// H = diag(h) (A), diag(h, -h[, 0]) (B, C, D). For very even D variant II the
// stored h is unchanged and the last coordinate is negated on evaluation.
struct DynkinElement {
    Kind kind = Kind::A;
    int size = 0;
    std::vector<int> h;
    std::optional<Variant> variant;

    // h with the variant II sign applied.
    std::vector<int> effective() const;
    int evaluate(const Root& r) const { return dot(r, effective()); }
};

DynkinElement dynkin_element(const OrbitLabel& label);

// α_k(H) for each simple root, in the order of rs.simples().
std::vector<int> weighted_diagram(const RootSystem& rs, const DynkinElement& H);

struct GradeTable {
    std::map<int, int> dims;  // i -> dim g_{H,i}
    int zero_positive = 0;    // |{α ∈ Δ⁺ : α(H) = 0}|

    int dim(int i) const {
        auto it = dims.find(i);
        return it == dims.end() ? 0 : it->second;
    }
};

GradeTable grade_table(const RootSystem& rs, const DynkinElement& H);

// q_{H,i}: the positive roots with α(H) ≥ i. Requires i ≥ 1.
AdNilpotentIdeal graded_ideal(const RootSystem& rs, const DynkinElement& H, int i);

// Rank of the reductive centralizer of a nilpotent in the orbit.
int centralizer_rank(const OrbitLabel& label);

// m_O = dim B − dim B_{G_X}.
int lower_bound_m(const OrbitLabel& label);
int lower_bound_m(const RootSystem& rs, const OrbitLabel& label);

}  // namespace adnil
