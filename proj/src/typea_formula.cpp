#include "adnil/typea_formula.hpp"

#include <algorithm>

#include "adnil/errors.hpp"

namespace adnil {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int multiplicity_pairs(const Partition& lambda) {
    int sum = 0;
    for (const auto& [part, mult] : exponential_form(lambda).pairs) sum += mult * (mult - 1) / 2;
    return sum;
}

}  // namespace

int count_A(const Partition& lambda, int l) {
    int total = 0;
    for (int part : lambda.parts()) total += std::max(std::min(floor_div(part + l + 1, 2), part), 0);
    return total;
}

int m_closed(const Partition& lambda) {
    const int n = lambda.total();
    int m = n * (n + 1) / 2;
    for (int part : lambda.parts()) m += -count_A(lambda, part - 1) + count_A(lambda, -part - 1);
    return m + multiplicity_pairs(lambda);
}

int m_linear(const Partition& lambda) {
    const int n = lambda.total();
    int weighted = 0;
    for (std::size_t i = 0; i < lambda.parts().size(); ++i)
        weighted += (2 * static_cast<int>(i) + 1) * lambda.parts()[i];
    return n * (n + 1) / 2 - weighted + multiplicity_pairs(lambda);
}

FormulaReport formula_report(const Partition& lambda) {
    FormulaReport r;
    r.m_via_A_counts = m_closed(lambda);
    r.m_via_linear = m_linear(lambda);
    r.agree = r.m_via_A_counts == r.m_via_linear;
    return r;
}

MonotoneReport check_monotone(int n) {
    if (n < 1) throw InputError("check_monotone needs n ≥ 1");
    MonotoneReport report;
    report.n = n;
    for (const auto& lambda : all_partitions(n)) {
        const int upper = m_closed(lambda);
        for (const auto& d : covered_by(lambda)) {
            ++report.covers_checked;
            const int lower = m_closed(d);
            if (lower >= upper) report.violations.push_back({lambda, d, upper, lower});
        }
    }
    return report;
}

}  // namespace adnil
