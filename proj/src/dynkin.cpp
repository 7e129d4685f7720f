#include "adnil/dynkin.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "adnil/errors.hpp"

namespace adnil {

std::vector<int> DynkinElement::effective() const {
    std::vector<int> e = h;
    if (variant == Variant::II && !e.empty()) e.back() = -e.back();
    return e;
}

DynkinElement dynkin_element(const OrbitLabel& label) {
    std::vector<int> all;
    for (int k : label.partition.parts())
        for (int v = k - 1; v >= 1 - k; v -= 2) all.push_back(v);
    std::sort(all.begin(), all.end(), std::greater<>());
    if (label.kind != Kind::A) all.resize(static_cast<std::size_t>(label.size));
    return DynkinElement{label.kind, label.size, std::move(all), label.variant};
}

std::vector<int> weighted_diagram(const RootSystem& rs, const DynkinElement& H) {
    std::vector<int> labels;
    for (const auto& s : rs.simples()) {
        const int v = H.evaluate(s);
        if (v < 0) throw InputError("Dynkin element is not dominant");
        if (v > 2) throw InternalError("weighted Dynkin diagram label outside {0,1,2}");
        labels.push_back(v);
    }
    return labels;
}

GradeTable grade_table(const RootSystem& rs, const DynkinElement& H) {
    GradeTable t;
    for (const auto& r : rs.positives()) {
        const int v = H.evaluate(r);
        if (v == 0) {
            ++t.zero_positive;
            t.dims[0] += 2;
        } else {
            ++t.dims[v];
            ++t.dims[-v];
        }
    }
    t.dims[0] += rs.rank();
    return t;
}

AdNilpotentIdeal graded_ideal(const RootSystem& rs, const DynkinElement& H, int i) {
    if (i < 1) throw InputError("graded ideal needs i >= 1");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
        if (H.evaluate(rs.root(k)) >= i) idx.push_back(k);
    auto ideal = close_upward(rs, idx);
    if (ideal.dim() != idx.size()) throw InternalError("graded ideal is not upward closed; H is not dominant");
    return ideal;
}

int centralizer_rank(const OrbitLabel& label) {
    const auto form = exponential_form(label.partition);
    int r = 0;
    switch (label.kind) {
        case Kind::A:
            return static_cast<int>(label.partition.length()) - 1;
        case Kind::B:
        case Kind::C:
        case Kind::D:
            // Sp factors on parts of one parity (multiplicity always even),
            // O factors on the other; both contribute floor(r_k / 2).
            for (const auto& [k, mult] : form.pairs) r += mult / 2;
            return r;
    }
    return r;
}

int lower_bound_m(const RootSystem& rs, const OrbitLabel& label) {
    const auto H = dynkin_element(label);
    const auto t = grade_table(rs, H);
    const int twice = t.dim(0) + t.dim(2) + centralizer_rank(label);
    if (twice % 2 != 0) {
        std::ostringstream os;
        os << "dim g0 + dim g2 + rank G_X is odd for " << to_string(label);
        throw InternalError(os.str());
    }
    const int m = rs.borel_dim() - (t.dim(1) + twice / 2);
    if (m < 0) throw InternalError("negative lower bound for " + to_string(label));
    return m;
}

int lower_bound_m(const OrbitLabel& label) {
    return lower_bound_m(RootSystem::build(label.kind, label.size), label);
}

}  // namespace adnil
