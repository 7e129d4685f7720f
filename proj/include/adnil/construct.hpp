#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "adnil/dynkin.hpp"
#include "adnil/partitions.hpp"
#include "adnil/rootsys.hpp"

namespace adnil {

// How a part instance k_i sits relative to its dual k_{r_k+1-i}.
enum class InstanceRole {
    Chain,       // type A: every part stands alone
    FirstHalf,   // i < dual
    SecondHalf,  // i > dual
    Middle,      // i == dual (odd multiplicity)
};

struct PartInstance {
    int value = 0;         // k
    int copy = 0;          // i, 1-based among the parts equal to k
    int multiplicity = 0;  // r_k
    InstanceRole role = InstanceRole::Chain;
    int middle_order = 0;  // s in l^1 < l^2 < ... (types B, D); 0 otherwise
    std::vector<int> domain;  // the values this instance places, descending

    int dual_copy() const { return multiplicity + 1 - copy; }
    bool has(int v) const;
};

// The part instances of a label with their value domains, in partition order
// (descending value, then copy ascending).
std::vector<PartInstance> part_instances(const OrbitLabel& label);

// A choice of maps σ_τ : Dom(τ) → [n], one per part instance.
class IndexAssignment {
public:
    IndexAssignment(OrbitLabel label, std::vector<PartInstance> instances);

    const OrbitLabel& label() const { return label_; }
    const std::vector<PartInstance>& instances() const { return instances_; }
    int n() const { return n_; }

    // σ_τ(v), 1-based; nullopt when v ∉ Dom(τ) or unassigned.
    std::optional<int> position(std::size_t inst, int value) const;
    int at(std::size_t inst, int value) const;  // throws InternalError if absent
    void assign(std::size_t inst, int value, int pos);

    // Owner of a position: (instance, value).
    std::optional<std::pair<std::size_t, int>> owner(int pos) const;

    // Index of the instance with the given part value and copy.
    std::optional<std::size_t> find(int value, int copy) const;
    std::size_t dual(std::size_t inst) const;
    // Middle instances ordered by value ascending (l^1 < l^2 < ...).
    std::vector<std::size_t> middles() const;

    // The diagonal sequence (h_1, ..., h_n) this assignment writes out.
    std::vector<int> sequence() const;

private:
    OrbitLabel label_;
    std::vector<PartInstance> instances_;
    std::vector<std::vector<std::optional<int>>> pos_;  // parallel to domain
    int n_ = 0;
};

// Deterministic assignment satisfying every placement property for the type.
IndexAssignment index_assignment(const OrbitLabel& label);

// Builds an arbitrary assignment from a slot list: slots[p-1] = (instance,
// value) placed at position p. Throws InputError when the shape does not
// match the label (unknown instance, value outside the domain, duplicates,
// missing entries). Placement properties are not checked here.
IndexAssignment assignment_from_slots(const OrbitLabel& label,
                                      const std::vector<std::pair<std::size_t, int>>& slots);

struct PropertyCheck {
    std::string name;
    bool pass = true;
    std::string detail;  // first violation found
};

struct AssignmentReport {
    std::vector<PropertyCheck> checks;
    bool ok() const;
    const PropertyCheck* find(const std::string& name) const;
};

AssignmentReport verify_assignment(const OrbitLabel& label, const IndexAssignment& assignment);

struct GeneratorSet {
    std::vector<std::vector<Root>> chunks;  // parallel to assignment.instances()
    std::vector<Root> all_roots;            // union in chunk order
};

GeneratorSet generator_set(const OrbitLabel& label, const IndexAssignment& assignment);

// Everything produced for one orbit.
struct Construction {
    OrbitLabel label;
    DynkinElement H;
    IndexAssignment assignment;
    GeneratorSet generators;
    std::vector<std::size_t> generator_idx;  // indices of generators.all_roots
    AdNilpotentIdeal ideal;                  // I_C
};

Construction construct(const RootSystem& rs, const OrbitLabel& label);
Construction construct(const RootSystem& rs, const OrbitLabel& label, const IndexAssignment& assignment);

AdNilpotentIdeal minimal_ideal(const OrbitLabel& label);

struct GradedSplit {
    std::vector<std::size_t> in_c;   // C
    std::vector<std::size_t> plus;   // C⁺: in g_{H,2} ∩ I_C, not in C
    std::vector<std::size_t> minus;  // C⁻: in g_{H,2}, not in I_C
};

GradedSplit split_graded(const RootSystem& rs, const DynkinElement& H, const std::vector<std::size_t>& c);

// Type A involution on Δ(g_{H,2}): e_{σ_i(m)} − e_{σ_j(m−2)} ↦ e_{σ_j(2−m)} − e_{σ_i(−m)}.
Root iota(const RootSystem& rs, const IndexAssignment& assignment, const Root& root);

// Coroot 2α/(α,α) in e-coordinates.
std::vector<int> coroot(const RootSystem& rs, const Root& root);

struct TripleData {
    DynkinElement H;
    std::vector<std::size_t> x_roots;       // X = Σ X_α, coefficient 1 each
    std::vector<std::size_t> y_roots;       // Y = Σ a_β Y_β
    std::vector<mpq_class> y_coefficients;  // a_β, parallel to y_roots
};

struct NoTriple {
    std::string reason;
};

using TripleOutcome = std::variant<TripleData, NoTriple>;

// When no difference of generators is a root, solves H = Σ a_α H_α over the
// rationals with Y supported on C. Otherwise type B gives NoTriple and the
// other types solve [X, Y] = H for Y in g_{H,-2}.
TripleOutcome standard_triple(const RootSystem& rs, const DynkinElement& H, const std::vector<std::size_t>& c);
TripleOutcome standard_triple(const RootSystem& rs, const Construction& cons);

}  // namespace adnil
