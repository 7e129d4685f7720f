#pragma once

#include <vector>

#include "adnil/partitions.hpp"

namespace adnil {

// Number of entries ≤ l in the Dynkin sequence of λ.
int count_A(const Partition& lambda, int l);

// Minimal ideal dimension for the type A orbit of λ, via the entry counts.
int m_closed(const Partition& lambda);
// The same value as n(n+1)/2 − Σ(2i−1)λ_i + Σ_t n_t(n_t−1)/2, where n_t are
// the part multiplicities.
int m_linear(const Partition& lambda);

struct FormulaReport {
    int m_via_A_counts = 0;
    int m_via_linear = 0;
    bool agree = false;
};

FormulaReport formula_report(const Partition& lambda);

struct CoverViolation {
    Partition upper;
    Partition lower;
    int m_upper = 0;
    int m_lower = 0;
};

struct MonotoneReport {
    int n = 0;
    int covers_checked = 0;
    std::vector<CoverViolation> violations;
    bool ok() const { return violations.empty(); }
};

// m strictly decreases along every dominance cover of partitions of n.
MonotoneReport check_monotone(int n);

}  // namespace adnil
