#include "adnil/rootsys.hpp"

#include <algorithm>
#include <sstream>

#include "adnil/errors.hpp"
#include "adnil/linalg.hpp"

namespace adnil {

char kind_letter(Kind k) {
    switch (k) {
        case Kind::A: return 'A';
        case Kind::B: return 'B';
        case Kind::C: return 'C';
        case Kind::D: return 'D';
    }
    return '?';
}

Kind parse_kind(const std::string& s) {
    if (s == "A" || s == "a") return Kind::A;
    if (s == "B" || s == "b") return Kind::B;
    if (s == "C" || s == "c") return Kind::C;
    if (s == "D" || s == "d") return Kind::D;
    throw InputError("unknown root system type '" + s + "' (expected A, B, C or D)");
}

Root Root::operator-() const {
    Root r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

Root operator+(const Root& a, const Root& b) {
    Root r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Root operator-(const Root& a, const Root& b) {
    return a + (-b);
}

std::string to_string(const Root& r) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < r.coords.size(); ++i) {
        const int c = r.coords[i];
        if (c == 0) continue;
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (c != 1 && c != -1) os << (c < 0 ? -c : c);
        os << 'e' << (i + 1);
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

int dot(const Root& r, const std::vector<int>& h) {
    int s = 0;
    for (std::size_t i = 0; i < r.coords.size(); ++i) s += r.coords[i] * h[i];
    return s;
}

Root e_minus(std::size_t n, int i, int j) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i - 1] += 1;
    r.coords[j - 1] -= 1;
    return r;
}

Root e_plus(std::size_t n, int i, int j) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i - 1] += 1;
    r.coords[j - 1] += 1;
    return r;
}

Root e_single(std::size_t n, int i, int mult) {
    Root r{std::vector<int>(n, 0)};
    r.coords[i - 1] = mult;
    return r;
}

RootSystem RootSystem::build(Kind kind, int size) {
    const int min_size = kind == Kind::D ? 3 : 2;
    if (size < min_size) {
        std::ostringstream os;
        os << "type " << kind_letter(kind) << " needs size >= " << min_size << ", got " << size;
        throw InputError(os.str());
    }
    RootSystem rs;
    rs.kind_ = kind;
    rs.size_ = size;
    const auto n = static_cast<std::size_t>(size);

    // Each row i lists its roots in increasing height.
    for (int i = 1; i <= size; ++i) {
        for (int j = i + 1; j <= size; ++j) rs.positives_.push_back(e_minus(n, i, j));
        if (kind == Kind::A) continue;
        if (kind == Kind::B) rs.positives_.push_back(e_single(n, i));
        for (int j = size; j > i; --j) rs.positives_.push_back(e_plus(n, i, j));
        if (kind == Kind::C) rs.positives_.push_back(e_single(n, i, 2));
    }

    for (int i = 1; i < size; ++i) rs.simples_.push_back(e_minus(n, i, i + 1));
    switch (kind) {
        case Kind::A: break;
        case Kind::B: rs.simples_.push_back(e_single(n, size)); break;
        case Kind::C: rs.simples_.push_back(e_single(n, size, 2)); break;
        case Kind::D: rs.simples_.push_back(e_plus(n, size - 1, size)); break;
    }

    for (std::size_t k = 0; k < rs.positives_.size(); ++k) rs.index_.emplace(rs.positives_[k], k);

    // Simple-root coordinates by an exact solve; the change of basis is
    // unimodular so the solution is integral.
    const std::size_t r = rs.simples_.size();
    linalg::RatMatrix basis(n, r);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i) basis(i, c) = rs.simples_[c].coords[i];
    for (const auto& root : rs.positives_) {
        std::vector<mpq_class> rhs(root.coords.begin(), root.coords.end());
        auto sol = linalg::solve(basis, rhs);
        if (!sol) throw InternalError("positive root " + to_string(root) + " outside the root lattice");
        std::vector<int> coeffs;
        for (const auto& q : *sol) {
            if (q.get_den() != 1 || q < 0)
                throw InternalError("positive root " + to_string(root) + " is not in Q+");
            coeffs.push_back(static_cast<int>(q.get_num().get_si()));
        }
        rs.simple_coords_.push_back(std::move(coeffs));
    }

    const std::size_t np = rs.positives_.size();
    rs.leq_.assign(np, std::vector<bool>(np, false));
    rs.up_.assign(np, RootSet(np));
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = 0; b < np; ++b) {
            bool le = true;
            for (std::size_t k = 0; k < r && le; ++k)
                le = rs.simple_coords_[b][k] >= rs.simple_coords_[a][k];
            rs.leq_[a][b] = le;
            if (le) rs.up_[a].set(b);
        }
    return rs;
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::require_index(const Root& r) const {
    if (r.coords.size() != dim_coords())
        throw InputError("root " + to_string(r) + " has the wrong number of coordinates");
    auto idx = index_of(r);
    if (!idx) throw InputError(to_string(r) + " is not a positive root of this system");
    return *idx;
}

bool RootSystem::is_root(const Root& r) const {
    return index_.count(r) > 0 || index_.count(-r) > 0;
}

int RootSystem::height(std::size_t idx) const {
    int h = 0;
    for (int c : simple_coords_[idx]) h += c;
    return h;
}

std::vector<std::size_t> members(const RootSet& s) {
    std::vector<std::size_t> out;
    for (auto i = s.find_first(); i != RootSet::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

std::vector<Root> roots_of(const RootSystem& rs, const std::vector<std::size_t>& idx) {
    std::vector<Root> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(rs.root(i));
    return out;
}

bool root_leq(const RootSystem& rs, const Root& a, const Root& b) {
    return rs.leq(rs.require_index(a), rs.require_index(b));
}

AdNilpotentIdeal close_upward(const RootSystem& rs, const std::vector<std::size_t>& gens) {
    AdNilpotentIdeal ideal{rs.empty_set(), {}};
    for (auto g : gens) {
        if (g >= rs.num_positive()) throw InputError("root index out of range");
        ideal.roots |= rs.up_set(g);
    }
    ideal.generators = minimal_generators(rs, ideal.roots);
    return ideal;
}

AdNilpotentIdeal close_upward(const RootSystem& rs, const std::vector<Root>& gens) {
    std::vector<std::size_t> idx;
    for (const auto& g : gens) idx.push_back(rs.require_index(g));
    return close_upward(rs, idx);
}

bool is_upward_closed(const RootSystem& rs, const RootSet& s) {
    for (auto i = s.find_first(); i != RootSet::npos; i = s.find_next(i))
        if (!rs.up_set(i).is_subset_of(s)) return false;
    return true;
}

std::vector<std::size_t> minimal_generators(const RootSystem& rs, const RootSet& roots) {
    if (!is_upward_closed(rs, roots)) throw InputError("root set is not upward closed");
    std::vector<std::size_t> gens;
    for (auto a = roots.find_first(); a != RootSet::npos; a = roots.find_next(a)) {
        bool minimal = true;
        for (auto b = roots.find_first(); b != RootSet::npos && minimal; b = roots.find_next(b))
            if (b != a && rs.leq(b, a)) minimal = false;
        if (minimal) gens.push_back(a);
    }
    return gens;
}

bool is_antichain(const RootSystem& rs, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[i] != s[j] && rs.leq(s[i], s[j])) return false;
    return true;
}

bool is_weak_antichain(const RootSystem& rs, const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && rs.is_root(rs.root(s[i]) - rs.root(s[j]))) return false;
    return true;
}

namespace {

void extend_antichains(const RootSystem& rs, std::vector<std::size_t>& chosen, const RootSet& allowed,
                       const std::function<void(const AdNilpotentIdeal&)>& visit) {
    visit(close_upward(rs, chosen));
    for (auto c = allowed.find_first(); c != RootSet::npos; c = allowed.find_next(c)) {
        RootSet next = allowed;
        // Only larger indices, and nothing comparable to c.
        for (std::size_t k = 0; k <= c; ++k) next.reset(k);
        for (auto k = next.find_first(); k != RootSet::npos; k = next.find_next(k))
            if (rs.leq(c, k) || rs.leq(k, c)) next.reset(k);
        chosen.push_back(c);
        extend_antichains(rs, chosen, next, visit);
        chosen.pop_back();
    }
}

}  // namespace

void for_each_ideal(const RootSystem& rs, const std::function<void(const AdNilpotentIdeal&)>& visit) {
    std::vector<std::size_t> chosen;
    RootSet all = rs.empty_set();
    all.set();
    extend_antichains(rs, chosen, all, visit);
}

std::vector<AdNilpotentIdeal> enumerate_ideals(const RootSystem& rs) {
    std::vector<AdNilpotentIdeal> out;
    for_each_ideal(rs, [&](const AdNilpotentIdeal& i) { out.push_back(i); });
    return out;
}

std::vector<int> ferrers(const RootSystem& rs, const AdNilpotentIdeal& ideal) {
    if (rs.kind() != Kind::A) throw InputError("Ferrers encoding is only defined for type A");
    const int n = rs.size();
    std::vector<int> starts;
    for (int i = 1; i < n; ++i) {
        int start = n + 1;
        for (int j = i + 1; j <= n; ++j)
            if (ideal.contains(*rs.index_of(e_minus(rs.dim_coords(), i, j)))) {
                start = j;
                break;
            }
        starts.push_back(start);
    }
    return starts;
}

std::string ferrers_diagram(const RootSystem& rs, const AdNilpotentIdeal& ideal) {
    const auto starts = ferrers(rs, ideal);
    const int n = rs.size();
    std::ostringstream os;
    for (int i = 1; i < n; ++i) {
        os << ' ';
        for (int j = 2; j <= n; ++j) {
            if (j <= i)
                os << ' ';
            else
                os << (j >= starts[i - 1] ? '#' : '.');
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace adnil
