#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adnil/rootsys.hpp"

namespace adnil {

// Non-increasing list of positive integers.
class Partition {
public:
    Partition() = default;
    // Throws InputError unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);

    // Accepts any order; sorts descending and drops zeros.
    static Partition from_unsorted(std::vector<int> parts);
    // "4,2" or "4,2,1,1". Whitespace around entries is ignored.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    // r_k: how many parts equal k.
    int multiplicity(int k) const;
    bool all_even() const;

    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int total_ = 0;
};

std::string to_string(const Partition& p);  // "4,2"

enum class Variant { I, II };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct OrbitLabel {
    Kind kind = Kind::A;
    int size = 0;
    Partition partition;
    std::optional<Variant> variant;

    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
};

std::string to_string(const OrbitLabel& l);  // "C3 [4,2]", "D4 [4,4] II"

// Total the partition must have for an orbit of the given type and size.
int orbit_total(Kind kind, int size);
bool is_very_even(Kind kind, const Partition& p);

// Throws ValidationError naming the violated clause. A very even type D
// partition yields two labels (I, II), everything else one.
std::vector<OrbitLabel> validate(Kind kind, int size, const Partition& p);
// Single label; `variant` is required exactly for very even type D.
OrbitLabel make_label(Kind kind, int size, const Partition& p, std::optional<Variant> variant = std::nullopt);

// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> all_partitions(int n);
// All orbit labels of a type and size, in decreasing lexicographic order of
// partitions; very even D labels appear as I then II.
std::vector<OrbitLabel> orbit_labels(Kind kind, int size);

// mu ≤ lambda in dominance order. Throws InputError on unequal totals.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Partitions covered by lambda, via the elementary box move.
std::vector<Partition> covered_by(const Partition& lambda);

struct ExponentialForm {
    std::vector<std::pair<int, int>> pairs;  // (value, multiplicity), values decreasing
};
ExponentialForm exponential_form(const Partition& p);

}  // namespace adnil
