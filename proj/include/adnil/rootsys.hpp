#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace adnil {

enum class Kind { A, B, C, D };

char kind_letter(Kind k);
Kind parse_kind(const std::string& s);

// A root written in the e-basis: coords[i] is the coefficient of e_{i+1}.
struct Root {
    std::vector<int> coords;

    friend auto operator<=>(const Root&, const Root&) = default;
    friend bool operator==(const Root&, const Root&) = default;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
};

// Renders e1-e3, 2e2, e2+e4, e1 ...
std::string to_string(const Root& r);

int dot(const Root& r, const std::vector<int>& h);

// Helpers for writing roots by hand; indices are 1-based like the e_i.
Root e_minus(std::size_t n, int i, int j);
Root e_plus(std::size_t n, int i, int j);
Root e_single(std::size_t n, int i, int mult = 1);

using RootSet = boost::dynamic_bitset<>;

// A classical root system with its positive roots in a fixed order. `size` is
// the matrix size n for type A (rank n-1) and the rank n for B, C, D.
class RootSystem {
public:
    static RootSystem build(Kind kind, int size);

    Kind kind() const { return kind_; }
    int size() const { return size_; }
    int rank() const { return kind_ == Kind::A ? size_ - 1 : size_; }
    // Dimension of the e-coordinate space (n for every type here).
    std::size_t dim_coords() const { return static_cast<std::size_t>(size_); }
    std::size_t num_positive() const { return positives_.size(); }
    int borel_dim() const { return static_cast<int>(positives_.size()) + rank(); }
    int dim_g() const { return 2 * static_cast<int>(positives_.size()) + rank(); }

    const std::vector<Root>& positives() const { return positives_; }
    const std::vector<Root>& simples() const { return simples_; }
    const Root& root(std::size_t idx) const { return positives_[idx]; }

    std::optional<std::size_t> index_of(const Root& r) const;
    // Like index_of but throws InputError when r is not a positive root.
    std::size_t require_index(const Root& r) const;
    bool is_root(const Root& r) const;  // in Δ = Δ⁺ ∪ −Δ⁺

    // Coefficients of a positive root in the simple-root basis.
    const std::vector<int>& simple_coords(std::size_t idx) const { return simple_coords_[idx]; }
    int height(std::size_t idx) const;

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    // Every positive root β with root(idx) ≤ β.
    const RootSet& up_set(std::size_t idx) const { return up_[idx]; }

    RootSet empty_set() const { return RootSet(positives_.size()); }

private:
    RootSystem() = default;

    Kind kind_ = Kind::A;
    int size_ = 0;
    std::vector<Root> positives_;
    std::vector<Root> simples_;
    std::map<Root, std::size_t> index_;
    std::vector<std::vector<int>> simple_coords_;
    std::vector<std::vector<bool>> leq_;
    std::vector<RootSet> up_;
};

// Upward-closed subset of Δ⁺ together with its minimal generators.
struct AdNilpotentIdeal {
    RootSet roots;
    std::vector<std::size_t> generators;  // sorted ascending, an antichain

    std::size_t dim() const { return roots.count(); }
    bool contains(std::size_t idx) const { return roots.test(idx); }
    friend bool operator==(const AdNilpotentIdeal& a, const AdNilpotentIdeal& b) {
        return a.roots == b.roots;
    }
};

std::vector<std::size_t> members(const RootSet& s);
std::vector<Root> roots_of(const RootSystem& rs, const std::vector<std::size_t>& idx);

bool root_leq(const RootSystem& rs, const Root& a, const Root& b);

AdNilpotentIdeal close_upward(const RootSystem& rs, const std::vector<std::size_t>& gens);
AdNilpotentIdeal close_upward(const RootSystem& rs, const std::vector<Root>& gens);

bool is_upward_closed(const RootSystem& rs, const RootSet& s);

// Throws InputError when `roots` is not upward closed.
std::vector<std::size_t> minimal_generators(const RootSystem& rs, const RootSet& roots);

bool is_antichain(const RootSystem& rs, const std::vector<std::size_t>& s);
// α − β ∉ Δ for every pair of distinct elements.
bool is_weak_antichain(const RootSystem& rs, const std::vector<std::size_t>& s);

// Visits every ad-nilpotent ideal once, ordered lexicographically by the
// sorted index list of its generator antichain.
void for_each_ideal(const RootSystem& rs, const std::function<void(const AdNilpotentIdeal&)>& visit);
std::vector<AdNilpotentIdeal> enumerate_ideals(const RootSystem& rs);

// Type A only: for each row i = 1..n-1 the smallest column j with e_i - e_j in
// the ideal, or n+1 when the row is empty.
std::vector<int> ferrers(const RootSystem& rs, const AdNilpotentIdeal& ideal);

// Right-justified box diagram of a type A ideal, one line per row.
std::string ferrers_diagram(const RootSystem& rs, const AdNilpotentIdeal& ideal);

}  // namespace adnil
