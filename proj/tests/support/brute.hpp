#pragma once

// Slow, definition-level reference implementations used to check the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "adnil/partitions.hpp"
#include "adnil/rootsys.hpp"

namespace brute {

using adnil::Kind;
using adnil::Partition;
using adnil::Root;

inline Root unit(int n, int i, int c = 1) {
    Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
    r.coords[static_cast<std::size_t>(i)] = c;
    return r;
}

// Positive roots straight from the textbook lists.
inline std::set<Root> positive_roots(Kind kind, int n) {
    std::set<Root> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.insert(unit(n, i) - unit(n, j));
            if (kind != Kind::A) out.insert(unit(n, i) + unit(n, j));
        }
    for (int i = 0; i < n; ++i) {
        if (kind == Kind::B) out.insert(unit(n, i));
        if (kind == Kind::C) out.insert(unit(n, i, 2));
    }
    return out;
}

inline std::vector<Root> simple_roots(Kind kind, int n) {
    std::vector<Root> s;
    for (int i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
    if (kind == Kind::B) s.push_back(unit(n, n - 1));
    if (kind == Kind::C) s.push_back(unit(n, n - 1, 2));
    if (kind == Kind::D) s.push_back(unit(n, n - 2) + unit(n, n - 1));
    return s;
}

// Every Σ c_k α_k with 0 ≤ c_k ≤ bound, a superset of all differences of
// positive roots for classical systems (coefficients never exceed 2).
class PositiveCone {
public:
    PositiveCone(Kind kind, int n, int bound = 2) {
        const auto s = simple_roots(kind, n);
        std::vector<int> c(s.size(), 0);
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == s.size()) {
                Root r{std::vector<int>(static_cast<std::size_t>(n), 0)};
                for (std::size_t t = 0; t < s.size(); ++t)
                    for (int x = 0; x < c[t]; ++x) r = r + s[t];
                cone_.insert(r);
                return;
            }
            for (int v = 0; v <= bound; ++v) {
                c[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
    }
    bool contains(const Root& r) const { return cone_.count(r) > 0; }
    bool leq(const Root& a, const Root& b) const { return contains(b - a); }

private:
    std::set<Root> cone_;
};

// All upward-closed subsets of Δ⁺ by testing every subset.
inline std::vector<std::vector<Root>> ideals(Kind kind, int n) {
    const auto pos_set = positive_roots(kind, n);
    const std::vector<Root> pos(pos_set.begin(), pos_set.end());
    const PositiveCone cone(kind, n);
    std::vector<std::vector<Root>> out;
    const std::uint64_t limit = std::uint64_t{1} << pos.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool closed = true;
        for (std::size_t a = 0; a < pos.size() && closed; ++a) {
            if (!(mask >> a & 1)) continue;
            for (std::size_t b = 0; b < pos.size() && closed; ++b)
                if (!(mask >> b & 1) && cone.leq(pos[a], pos[b])) closed = false;
        }
        if (!closed) continue;
        std::vector<Root> ideal;
        for (std::size_t a = 0; a < pos.size(); ++a)
            if (mask >> a & 1) ideal.push_back(pos[a]);
        out.push_back(std::move(ideal));
    }
    return out;
}

// Partitions of n from the 2^(n-1) compositions.
inline std::set<Partition> partitions(int n) {
    std::set<Partition> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask >> i & 1) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.insert(Partition::from_unsorted(parts));
    }
    return out;
}

inline bool dominated(const Partition& mu, const Partition& lambda) {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
        a += mu[i];
        b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

// Partitions covered by λ: strictly below with nothing strictly between.
inline std::set<Partition> covers(const Partition& lambda) {
    const auto all = partitions(lambda.total());
    std::set<Partition> out;
    for (const auto& mu : all) {
        if (mu == lambda || !dominated(mu, lambda)) continue;
        bool between = false;
        for (const auto& nu : all)
            if (nu != mu && nu != lambda && dominated(mu, nu) && dominated(nu, lambda)) between = true;
        if (!between) out.insert(mu);
    }
    return out;
}

// Full eigenvalue multiset of the Dynkin element: the union of the strings
// k-1, k-3, ..., 1-k over the parts.
inline std::vector<int> eigenvalues(const Partition& p) {
    std::vector<int> v;
    for (int k : p.parts())
        for (int e = k - 1; e >= 1 - k; e -= 2) v.push_back(e);
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace brute
