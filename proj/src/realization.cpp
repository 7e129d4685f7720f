#include "adnil/realization.hpp"

#include "adnil/errors.hpp"

namespace adnil {

using linalg::IntMatrix;

namespace {

// Nonzero coordinates of a root as (0-based index, value).
std::vector<std::pair<std::size_t, int>> support(const Root& r) {
    std::vector<std::pair<std::size_t, int>> s;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        if (r.coords[i] != 0) s.emplace_back(i, r.coords[i]);
    return s;
}

void add(IntMatrix& m, std::size_t i, std::size_t j, int v) { m(i, j) += v; }

bool is_short_b(const RootSystem& rs, const Root& r) {
    return rs.kind() == Kind::B && support(r).size() == 1;
}

IntMatrix positive_matrix(const RootSystem& rs, const Root& root) {
    const std::size_t n = rs.dim_coords();
    IntMatrix m(matrix_side(rs), matrix_side(rs));
    const auto s = support(root);
    if (rs.kind() == Kind::A) {
        add(m, s[0].first, s[1].first, 1);
        return m;
    }
    if (s.size() == 2 && s[1].second == -1) {
        const auto p = s[0].first, q = s[1].first;
        add(m, p, q, 1);
        add(m, n + q, n + p, -1);
    } else if (s.size() == 2) {
        const auto p = s[0].first, q = s[1].first;
        const int sign = rs.kind() == Kind::C ? 1 : -1;
        add(m, p, n + q, 1);
        add(m, q, n + p, sign);
    } else if (rs.kind() == Kind::C) {
        add(m, s[0].first, n + s[0].first, 1);
    } else {
        const auto p = s[0].first, z = 2 * n;
        add(m, p, z, 1);
        add(m, z, n + p, -1);
    }
    return m;
}

}  // namespace

std::size_t matrix_side(const RootSystem& rs) {
    const std::size_t n = rs.dim_coords();
    switch (rs.kind()) {
        case Kind::A: return n;
        case Kind::B: return 2 * n + 1;
        default: return 2 * n;
    }
}

IntMatrix root_matrix(const RootSystem& rs, const Root& root) {
    if (!rs.is_root(root)) throw InputError(to_string(root) + " is not a root");
    const auto idx = rs.index_of(root);
    if (idx) return positive_matrix(rs, root);
    return positive_matrix(rs, -root).transpose();
}

IntMatrix negative_root_matrix(const RootSystem& rs, const Root& positive) {
    rs.require_index(positive);
    auto y = positive_matrix(rs, positive).transpose();
    if (is_short_b(rs, positive)) y *= 2;
    return y;
}

IntMatrix cartan_matrix(const RootSystem& rs, const std::vector<int>& h) {
    const std::size_t n = rs.dim_coords();
    if (h.size() != n) throw InputError("Cartan vector has the wrong length");
    IntMatrix m(matrix_side(rs), matrix_side(rs));
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = h[i];
        if (rs.kind() != Kind::A) m(n + i, n + i) = -h[i];
    }
    return m;
}

IntMatrix cartan_matrix(const RootSystem& rs, const DynkinElement& H) {
    return cartan_matrix(rs, H.effective());
}

IntMatrix sum_of_roots(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    IntMatrix x(matrix_side(rs), matrix_side(rs));
    for (auto k : roots) x += positive_matrix(rs, rs.root(k));
    return x;
}

}  // namespace adnil
