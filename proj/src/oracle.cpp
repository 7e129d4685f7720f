#include "adnil/oracle.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "adnil/dynkin.hpp"
#include "adnil/errors.hpp"

namespace adnil::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::size_t column_rank(const std::vector<IntMatrix>& ms, std::size_t side) {
    if (ms.empty()) return 0;
    IntMatrix out(side * side, ms.size());
    for (std::size_t c = 0; c < ms.size(); ++c)
        for (std::size_t k = 0; k < side * side; ++k) out(k, c) = ms[c].entries()[k];
    return linalg::rank(out);
}

}  // namespace

Partition jordan_type(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("jordan_type needs a square matrix");
    const std::size_t side = m.rows();
    std::vector<std::size_t> ranks{side};
    IntMatrix power = m;
    while (ranks.back() != 0) {
        if (ranks.size() > side) throw InputError("matrix is not nilpotent");
        ranks.push_back(linalg::rank(power));
        power = power * m;
    }
    // at_least[k] = number of blocks of size ≥ k.
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const auto at_least = ranks[k - 1] - ranks[k];
        const auto longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least - longer; ++c) parts.push_back(static_cast<int>(k));
    }
    return Partition::from_unsorted(parts);
}

Partition associated_orbit(const RootSystem& rs, const AdNilpotentIdeal& ideal, const GenericityOptions& opts) {
    if (opts.trials < 1) throw InputError("at least one trial is required");
    const auto roots = members(ideal.roots);
    std::mt19937_64 rng(splitmix64(opts.seed));
    std::uniform_int_distribution<long> coeff(1, 1L << 20);
    constexpr int batches = 5;
    std::vector<Partition> seen;
    for (int b = 0; b < batches; ++b) {
        std::vector<Partition> results;
        for (int t = 0; t < opts.trials; ++t) {
            IntMatrix x(matrix_side(rs), matrix_side(rs));
            for (auto k : roots) {
                auto term = root_matrix(rs, rs.root(k));
                term *= mpz_class(coeff(rng));
                x += term;
            }
            results.push_back(jordan_type(x));
        }
        for (const auto& cand : results) {
            const bool top = std::all_of(results.begin(), results.end(),
                                         [&](const Partition& p) { return dominance_leq(p, cand); });
            if (top) return cand;
        }
        seen.insert(seen.end(), results.begin(), results.end());
    }
    std::string msg = "generic Jordan type has no dominance maximum after retries; saw";
    for (const auto& p : seen) msg += " [" + to_string(p) + "]";
    throw InternalError(msg);
}

OrbitMinTable min_dims_by_orbit(Kind kind, int size, const GenericityOptions& opts, unsigned threads) {
    const auto rs = RootSystem::build(kind, size);
    if (rs.num_positive() > max_enumerable_positive)
        throw InputError("refusing to enumerate " + std::to_string(rs.num_positive()) +
                         " positive roots (limit " + std::to_string(max_enumerable_positive) + ")");
    const auto ideals = enumerate_ideals(rs);
    std::vector<Partition> orbit(ideals.size(), Partition{});
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, ideals.size())));

    auto work = [&](std::size_t begin) {
        for (std::size_t i = begin; i < ideals.size(); i += threads) {
            GenericityOptions o = opts;
            o.seed = splitmix64(opts.seed + i);
            orbit[i] = associated_orbit(rs, ideals[i], o);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    work(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    OrbitMinTable table{kind, size, ideals.size(), {}};
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const int dim = static_cast<int>(ideals[i].dim());
        auto [it, fresh] = table.minima.try_emplace(orbit[i], OrbitMinEntry{dim, 1, ideals[i].generators});
        if (fresh) continue;
        auto& e = it->second;
        if (dim < e.min_dim) {
            e = OrbitMinEntry{dim, 1, ideals[i].generators};
        } else if (dim == e.min_dim) {
            ++e.minimizers;
        }
    }
    return table;
}

TripleCheck verify_triple(const RootSystem& rs, const TripleData& triple) {
    const std::size_t side = matrix_side(rs);
    if (triple.y_coefficients.size() != triple.y_roots.size())
        throw InputError("triple has mismatched X and Y terms");
    const auto h = linalg::to_rational(cartan_matrix(rs, triple.H));
    const auto x = linalg::to_rational(sum_of_roots(rs, triple.x_roots));
    RatMatrix y(side, side);
    for (std::size_t k = 0; k < triple.y_roots.size(); ++k)
        y += linalg::to_rational(negative_root_matrix(rs, rs.root(triple.y_roots[k]))) * triple.y_coefficients[k];
    TripleCheck c;
    c.h_x = linalg::bracket(h, x) == x * mpq_class(2);
    c.h_y = linalg::bracket(h, y) == y * mpq_class(-2);
    c.x_y = linalg::bracket(x, y) == h;
    return c;
}

KostantReport kostant_decomposition_check(const OrbitLabel& label) {
    if (label.kind != Kind::A && label.kind != Kind::D)
        throw InputError("the decomposition check applies to types A and D");
    const auto rs = RootSystem::build(label.kind, label.size);
    const auto cons = construct(rs, label);
    const auto x = sum_of_roots(rs, cons.generator_idx);
    const std::size_t side = matrix_side(rs);
    const std::size_t n = rs.dim_coords();

    std::vector<IntMatrix> ad_h, ad_plus, ad_minus;
    if (label.kind == Kind::A) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            std::vector<int> h(n, 0);
            h[i] = 1;
            h[i + 1] = -1;
            ad_h.push_back(linalg::bracket(x, cartan_matrix(rs, h)));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> h(n, 0);
            h[i] = 1;
            ad_h.push_back(linalg::bracket(x, cartan_matrix(rs, h)));
        }
    }
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        if (cons.H.evaluate(rs.root(k)) != 0) continue;
        ad_plus.push_back(linalg::bracket(x, root_matrix(rs, rs.root(k))));
        ad_minus.push_back(linalg::bracket(x, negative_root_matrix(rs, rs.root(k))));
    }
    KostantReport r;
    r.dim_g2 = grade_table(rs, cons.H).dim(2);
    r.ad_h = static_cast<int>(column_rank(ad_h, side));
    r.ad_g0_plus = static_cast<int>(column_rank(ad_plus, side));
    r.ad_g0_minus = static_cast<int>(column_rank(ad_minus, side));
    std::vector<IntMatrix> all = ad_h;
    all.insert(all.end(), ad_plus.begin(), ad_plus.end());
    all.insert(all.end(), ad_minus.begin(), ad_minus.end());
    r.ad_g0 = static_cast<int>(column_rank(all, side));
    r.generators = static_cast<int>(cons.generator_idx.size());
    return r;
}

}  // namespace adnil::oracle
