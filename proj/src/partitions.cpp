#include "adnil/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "adnil/errors.hpp"

namespace adnil {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be non-increasing");
        total_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("empty entry in partition '" + text + "'");
        item = item.substr(b, e - b + 1);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad partition entry '" + item + "'");
        }
        if (used != item.size()) throw InputError("bad partition entry '" + item + "'");
        parts.push_back(v);
    }
    if (parts.empty()) throw InputError("empty partition");
    return Partition(std::move(parts));
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

bool Partition::all_even() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    return os.str();
}

std::string to_string(Variant v) {
    return v == Variant::I ? "I" : "II";
}

Variant parse_variant(const std::string& s) {
    if (s == "I" || s == "1") return Variant::I;
    if (s == "II" || s == "2") return Variant::II;
    throw InputError("unknown variant '" + s + "' (expected I or II)");
}

std::string to_string(const OrbitLabel& l) {
    std::ostringstream os;
    os << kind_letter(l.kind) << l.size << " [" << to_string(l.partition) << "]";
    if (l.variant) os << ' ' << to_string(*l.variant);
    return os.str();
}

int orbit_total(Kind kind, int size) {
    switch (kind) {
        case Kind::A: return size;
        case Kind::B: return 2 * size + 1;
        case Kind::C:
        case Kind::D: return 2 * size;
    }
    return 0;
}

bool is_very_even(Kind kind, const Partition& p) {
    return kind == Kind::D && p.length() > 0 && p.all_even();
}

namespace {

// Parts of the given parity that occur with odd multiplicity.
std::vector<int> odd_multiplicity_parts(const Partition& p, int parity) {
    std::vector<int> bad;
    for (const auto& [value, mult] : exponential_form(p).pairs)
        if (value % 2 == parity && mult % 2 == 1) bad.push_back(value);
    return bad;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

}  // namespace

std::vector<OrbitLabel> validate(Kind kind, int size, const Partition& p) {
    const int want = orbit_total(kind, size);
    if (p.total() != want) {
        std::ostringstream os;
        os << "partition [" << to_string(p) << "] sums to " << p.total() << ", type " << kind_letter(kind)
           << size << " needs total " << want;
        throw ValidationError(os.str());
    }
    if (kind == Kind::C) {
        auto bad = odd_multiplicity_parts(p, 1);
        if (!bad.empty())
            throw ValidationError("type C requires odd parts to have even multiplicity; violated by " + join(bad));
    }
    if (kind == Kind::B || kind == Kind::D) {
        auto bad = odd_multiplicity_parts(p, 0);
        if (!bad.empty())
            throw ValidationError(std::string("type ") + kind_letter(kind) +
                                  " requires even parts to have even multiplicity; violated by " + join(bad));
    }
    if (is_very_even(kind, p))
        return {OrbitLabel{kind, size, p, Variant::I}, OrbitLabel{kind, size, p, Variant::II}};
    return {OrbitLabel{kind, size, p, std::nullopt}};
}

OrbitLabel make_label(Kind kind, int size, const Partition& p, std::optional<Variant> variant) {
    auto labels = validate(kind, size, p);
    if (labels.size() == 2) {
        if (!variant) throw ValidationError("very even partition [" + to_string(p) + "] needs --variant I or II");
        return labels[*variant == Variant::I ? 0 : 1];
    }
    if (variant) throw ValidationError("variant is only meaningful for very even type D partitions");
    return labels.front();
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

std::vector<OrbitLabel> orbit_labels(Kind kind, int size) {
    std::vector<OrbitLabel> out;
    for (const auto& p : all_partitions(orbit_total(kind, size))) {
        try {
            for (auto& l : validate(kind, size, p)) out.push_back(std::move(l));
        } catch (const ValidationError&) {
        }
    }
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.total() != lambda.total()) throw InputError("dominance order needs partitions of the same total");
    int sm = 0, sl = 0;
    const std::size_t len = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < len; ++i) {
        sm += mu[i];
        sl += lambda[i];
        if (sm > sl) return false;
    }
    return true;
}

std::vector<Partition> covered_by(const Partition& lambda) {
    std::vector<Partition> out;
    const std::size_t p = lambda.length();
    for (std::size_t i = 0; i < p; ++i) {
        const int li = lambda[i];
        // First j > i with lambda_j < lambda_i - 1; indices past the end read as 0.
        std::size_t j = i + 1;
        while (!(lambda[j] < li - 1)) {
            if (j >= p) break;
            ++j;
        }
        if (!(lambda[j] < li - 1)) continue;
        bool all_equal = true;
        for (std::size_t k = i + 1; k < j; ++k) all_equal = all_equal && lambda[k] == li;
        if (!(lambda[j] == li - 2 || all_equal)) continue;
        std::vector<int> parts = lambda.parts();
        parts.resize(std::max(parts.size(), j + 1), 0);
        parts[i] -= 1;
        parts[j] += 1;
        auto d = Partition::from_unsorted(std::move(parts));
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
    }
    return out;
}

ExponentialForm exponential_form(const Partition& p) {
    ExponentialForm f;
    for (int v : p.parts()) {
        if (!f.pairs.empty() && f.pairs.back().first == v)
            ++f.pairs.back().second;
        else
            f.pairs.emplace_back(v, 1);
    }
    return f;
}

}  // namespace adnil
