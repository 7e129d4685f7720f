#include "adnil/construct.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "adnil/errors.hpp"
#include "adnil/linalg.hpp"
#include "adnil/realization.hpp"

namespace adnil {

bool PartInstance::has(int v) const {
    return std::find(domain.begin(), domain.end(), v) != domain.end();
}

namespace {

std::vector<int> values_down_to(int top, int bottom) {
    std::vector<int> d;
    for (int v = top; v >= bottom; v -= 2) d.push_back(v);
    return d;
}

}  // namespace

std::vector<PartInstance> part_instances(const OrbitLabel& label) {
    std::vector<PartInstance> out;
    const auto form = exponential_form(label.partition);
    for (const auto& [k, r] : form.pairs) {
        for (int i = 1; i <= r; ++i) {
            PartInstance inst;
            inst.value = k;
            inst.copy = i;
            inst.multiplicity = r;
            const int dual = r + 1 - i;
            if (label.kind == Kind::A) {
                inst.role = InstanceRole::Chain;
                inst.domain = values_down_to(k - 1, 1 - k);
            } else {
                inst.role = i < dual ? InstanceRole::FirstHalf
                            : i > dual ? InstanceRole::SecondHalf
                                       : InstanceRole::Middle;
                if (k % 2 == 0)
                    inst.domain = values_down_to(k - 1, 1);
                else if (inst.role == InstanceRole::FirstHalf)
                    inst.domain = values_down_to(k - 1, 0);
                else
                    inst.domain = values_down_to(k - 1, 2);  // middles fixed below
            }
            out.push_back(std::move(inst));
        }
    }
    if (label.kind == Kind::B || label.kind == Kind::D) {
        // Middles l^1 < l^2 < ...: even s also carries the value 0.
        std::vector<std::size_t> mids;
        for (std::size_t t = 0; t < out.size(); ++t)
            if (out[t].role == InstanceRole::Middle) mids.push_back(t);
        std::sort(mids.begin(), mids.end(), [&](auto a, auto b) { return out[a].value < out[b].value; });
        for (std::size_t s = 0; s < mids.size(); ++s) {
            auto& inst = out[mids[s]];
            inst.middle_order = static_cast<int>(s) + 1;
            if (inst.middle_order % 2 == 0) inst.domain.push_back(0);
        }
    }
    return out;
}

IndexAssignment::IndexAssignment(OrbitLabel label, std::vector<PartInstance> instances)
    : label_(std::move(label)), instances_(std::move(instances)) {
    for (const auto& inst : instances_) {
        pos_.emplace_back(inst.domain.size());
        n_ += static_cast<int>(inst.domain.size());
    }
}

std::optional<int> IndexAssignment::position(std::size_t inst, int value) const {
    const auto& dom = instances_.at(inst).domain;
    auto it = std::find(dom.begin(), dom.end(), value);
    if (it == dom.end()) return std::nullopt;
    return pos_[inst][static_cast<std::size_t>(it - dom.begin())];
}

int IndexAssignment::at(std::size_t inst, int value) const {
    auto p = position(inst, value);
    if (!p) {
        std::ostringstream os;
        os << "no position for value " << value << " of part " << instances_.at(inst).value << "_"
           << instances_.at(inst).copy;
        throw InternalError(os.str());
    }
    return *p;
}

void IndexAssignment::assign(std::size_t inst, int value, int pos) {
    const auto& dom = instances_.at(inst).domain;
    auto it = std::find(dom.begin(), dom.end(), value);
    if (it == dom.end()) throw InputError("value outside the instance's domain");
    pos_[inst][static_cast<std::size_t>(it - dom.begin())] = pos;
}

std::optional<std::pair<std::size_t, int>> IndexAssignment::owner(int pos) const {
    for (std::size_t t = 0; t < instances_.size(); ++t)
        for (std::size_t k = 0; k < pos_[t].size(); ++k)
            if (pos_[t][k] == pos) return std::make_pair(t, instances_[t].domain[k]);
    return std::nullopt;
}

std::optional<std::size_t> IndexAssignment::find(int value, int copy) const {
    for (std::size_t t = 0; t < instances_.size(); ++t)
        if (instances_[t].value == value && instances_[t].copy == copy) return t;
    return std::nullopt;
}

std::size_t IndexAssignment::dual(std::size_t inst) const {
    const auto& p = instances_.at(inst);
    return *find(p.value, p.dual_copy());
}

std::vector<std::size_t> IndexAssignment::middles() const {
    std::vector<std::size_t> mids;
    for (std::size_t t = 0; t < instances_.size(); ++t)
        if (instances_[t].role == InstanceRole::Middle) mids.push_back(t);
    std::sort(mids.begin(), mids.end(),
              [&](auto a, auto b) { return instances_[a].value < instances_[b].value; });
    return mids;
}

std::vector<int> IndexAssignment::sequence() const {
    std::vector<int> h(static_cast<std::size_t>(n_), 0);
    for (std::size_t t = 0; t < instances_.size(); ++t)
        for (std::size_t k = 0; k < pos_[t].size(); ++k)
            if (pos_[t][k] && *pos_[t][k] >= 1 && *pos_[t][k] <= n_)
                h[static_cast<std::size_t>(*pos_[t][k] - 1)] = instances_[t].domain[k];
    return h;
}

namespace {

int max_value(const std::vector<PartInstance>& insts) {
    int m = 0;
    for (const auto& i : insts)
        if (!i.domain.empty()) m = std::max(m, i.domain.front());
    return m;
}

int min_value(const std::vector<PartInstance>& insts) {
    int m = 0;
    for (const auto& i : insts)
        if (!i.domain.empty()) m = std::min(m, i.domain.back());
    return m;
}

}  // namespace

IndexAssignment index_assignment(const OrbitLabel& label) {
    IndexAssignment a(label, part_instances(label));
    const auto& insts = a.instances();
    const auto mids = a.middles();
    int next = 1;
    for (int v = max_value(insts); v >= min_value(insts); --v) {
        std::vector<std::size_t> order;
        if (label.kind == Kind::A) {
            for (std::size_t t = 0; t < insts.size(); ++t)
                if (insts[t].has(v)) order.push_back(t);
        } else {
            // Pairs nest around the middles: outer pairs first, larger parts
            // outside smaller ones, middles in the centre by increasing value.
            std::vector<std::size_t> seconds;
            for (std::size_t t = 0; t < insts.size(); ++t)
                if (insts[t].role == InstanceRole::FirstHalf && insts[t].has(v)) order.push_back(t);
            for (auto t : mids)
                if (insts[t].has(v)) order.push_back(t);
            for (std::size_t t = insts.size(); t-- > 0;)
                if (insts[t].role == InstanceRole::FirstHalf) {
                    const auto d = a.dual(t);
                    if (insts[d].has(v)) seconds.push_back(d);
                }
            order.insert(order.end(), seconds.begin(), seconds.end());
        }
        for (auto t : order) a.assign(t, v, next++);
    }
    if (next != a.n() + 1) throw InternalError("index assignment did not fill [n]");
    const int expected = label.kind == Kind::A ? label.size : label.size;
    if (a.n() != expected) throw InternalError("part domains do not total n for " + to_string(label));
    return a;
}

IndexAssignment assignment_from_slots(const OrbitLabel& label,
                                      const std::vector<std::pair<std::size_t, int>>& slots) {
    IndexAssignment a(label, part_instances(label));
    if (static_cast<int>(slots.size()) != a.n()) throw InputError("slot list must have exactly n entries");
    std::set<std::pair<std::size_t, int>> seen;
    for (std::size_t p = 0; p < slots.size(); ++p) {
        const auto& [inst, value] = slots[p];
        if (inst >= a.instances().size()) throw InputError("slot refers to an unknown part instance");
        if (!a.instances()[inst].has(value)) throw InputError("slot value outside the part's domain");
        if (!seen.insert(slots[p]).second) throw InputError("slot listed twice");
        a.assign(inst, value, static_cast<int>(p) + 1);
    }
    return a;
}

bool AssignmentReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

const PropertyCheck* AssignmentReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

class Checker {
public:
    explicit Checker(const IndexAssignment& a) : a_(a) {}

    std::string tag(std::size_t t) const {
        const auto& p = a_.instances()[t];
        std::ostringstream os;
        os << p.value << "_" << p.copy;
        return os.str();
    }

    std::optional<int> pos(std::size_t t, int v) const { return a_.position(t, v); }

    // Values present in every listed instance's domain.
    std::vector<int> shared(std::initializer_list<std::size_t> ts) const {
        std::vector<int> out;
        const auto& first = a_.instances()[*ts.begin()].domain;
        for (int v : first) {
            bool all = true;
            for (auto t : ts) all = all && a_.instances()[t].has(v);
            if (all) out.push_back(v);
        }
        return out;
    }

    PropertyCheck bijection() const {
        PropertyCheck c{"P1 one-to-one, disjoint images covering [n]", true, {}};
        std::vector<int> used(static_cast<std::size_t>(a_.n()) + 1, 0);
        for (std::size_t t = 0; t < a_.instances().size(); ++t)
            for (int v : a_.instances()[t].domain) {
                auto p = pos(t, v);
                if (!p || *p < 1 || *p > a_.n()) {
                    c.pass = false;
                    c.detail = "value " + std::to_string(v) + " of " + tag(t) + " has no valid position";
                    return c;
                }
                if (used[static_cast<std::size_t>(*p)]++) {
                    c.pass = false;
                    c.detail = "position " + std::to_string(*p) + " used twice";
                    return c;
                }
            }
        return c;
    }

    PropertyCheck descending() const {
        PropertyCheck c{"P2 larger values at smaller positions", true, {}};
        const auto h = a_.sequence();
        for (std::size_t i = 1; i < h.size(); ++i)
            if (h[i] > h[i - 1]) {
                c.pass = false;
                c.detail = "value " + std::to_string(h[i]) + " at position " + std::to_string(i + 1) +
                           " follows smaller value " + std::to_string(h[i - 1]);
                return c;
            }
        return c;
    }

    const IndexAssignment& a_;
};

void fail(PropertyCheck& c, const std::string& why) {
    if (c.pass) {
        c.pass = false;
        c.detail = why;
    }
}

bool is_first(const PartInstance& p) { return p.role == InstanceRole::FirstHalf; }
bool is_middle(const PartInstance& p) { return p.role == InstanceRole::Middle; }

}  // namespace

AssignmentReport verify_assignment(const OrbitLabel& label, const IndexAssignment& a) {
    AssignmentReport report;
    const auto expect = part_instances(label);
    PropertyCheck shape{"shape matches label", true, {}};
    if (!(a.label() == label) || a.instances().size() != expect.size()) {
        fail(shape, "assignment built for a different label");
    } else {
        for (std::size_t t = 0; t < expect.size(); ++t)
            if (a.instances()[t].domain != expect[t].domain || a.instances()[t].value != expect[t].value)
                fail(shape, "part instance domains differ from the label's");
    }
    report.checks.push_back(shape);
    if (!shape.pass) return report;

    Checker ck(a);
    report.checks.push_back(ck.bijection());
    if (!report.checks.back().pass) return report;
    report.checks.push_back(ck.descending());

    const auto& insts = a.instances();
    const std::size_t np = insts.size();

    if (label.kind == Kind::A) {
        PropertyCheck p3{"P3 relative order of two parts is the same at every shared value", true, {}};
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = i + 1; j < np; ++j) {
                int sign = 0;
                for (int v : ck.shared({i, j})) {
                    const int s = *ck.pos(i, v) > *ck.pos(j, v) ? 1 : -1;
                    if (sign != 0 && s != sign)
                        fail(p3, ck.tag(i) + " and " + ck.tag(j) + " swap order at value " + std::to_string(v));
                    sign = s;
                }
            }
        report.checks.push_back(p3);
        return report;
    }

    PropertyCheck p3{"P3 equal parts keep copy order", true, {}};
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            if (insts[i].value != insts[j].value || insts[i].copy >= insts[j].copy) continue;
            for (int v : ck.shared({i, j}))
                if (*ck.pos(i, v) >= *ck.pos(j, v))
                    fail(p3, ck.tag(i) + " not before " + ck.tag(j) + " at value " + std::to_string(v));
        }
    report.checks.push_back(p3);

    PropertyCheck p4{"P4 dual pairs nest", true, {}};
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            if (i == j || !is_first(insts[i]) || !is_first(insts[j])) continue;
            const auto di = a.dual(i), dj = a.dual(j);
            for (int m : ck.shared({i, j, di, dj})) {
                if (m <= 0) continue;
                const int ki = *ck.pos(i, m), kd = *ck.pos(di, m), lj = *ck.pos(j, m), ld = *ck.pos(dj, m);
                const bool outer_l = lj < ki && ki < kd && kd < ld;
                const bool outer_k = ki < lj && lj < ld && ld < kd;
                if (!outer_l && !outer_k)
                    fail(p4, "pairs of " + ck.tag(i) + " and " + ck.tag(j) + " interleave at value " +
                                 std::to_string(m));
            }
        }
    report.checks.push_back(p4);

    PropertyCheck p5{"P5 order at 0 follows order at 2", true, {}};
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            if (i == j || !is_first(insts[i]) || !is_first(insts[j])) continue;
            auto i2 = ck.pos(i, 2), j2 = ck.pos(j, 2), i0 = ck.pos(i, 0), j0 = ck.pos(j, 0);
            if (!i2 || !j2 || !i0 || !j0) continue;
            if (*i2 < *j2 && !(*i0 < *j0))
                fail(p5, ck.tag(i) + " precedes " + ck.tag(j) + " at 2 but not at 0");
        }
    report.checks.push_back(p5);

    if (label.kind == Kind::C) {
        PropertyCheck p6{"P6 even middles sit inside even pairs", true, {}};
        PropertyCheck p7{"P7 even middles increase with the part", true, {}};
        for (std::size_t c = 0; c < np; ++c) {
            if (!is_middle(insts[c]) || insts[c].value % 2 != 0) continue;
            for (std::size_t j = 0; j < np; ++j) {
                if (is_first(insts[j]) && insts[j].value % 2 == 0) {
                    const auto d = a.dual(j);
                    for (int m : ck.shared({c, j, d}))
                        if (!(*ck.pos(j, m) < *ck.pos(c, m) && *ck.pos(c, m) < *ck.pos(d, m)))
                            fail(p6, ck.tag(c) + " outside the pair of " + ck.tag(j) + " at value " +
                                         std::to_string(m));
                }
                if (is_middle(insts[j]) && insts[j].value % 2 == 0 && insts[c].value < insts[j].value)
                    for (int m : ck.shared({c, j}))
                        if (*ck.pos(c, m) >= *ck.pos(j, m))
                            fail(p7, ck.tag(c) + " not before " + ck.tag(j) + " at value " + std::to_string(m));
            }
        }
        report.checks.push_back(p6);
        report.checks.push_back(p7);
    } else {
        PropertyCheck p6{"P6 odd middles sit inside odd pairs", true, {}};
        PropertyCheck p7{"P7 odd middles increase with the part", true, {}};
        for (std::size_t l = 0; l < np; ++l) {
            if (!is_middle(insts[l])) continue;
            for (std::size_t k = 0; k < np; ++k) {
                if (is_first(insts[k]) && insts[k].value % 2 == 1) {
                    const auto d = a.dual(k);
                    for (int m : ck.shared({k, l})) {
                        const int pk = *ck.pos(k, m), pl = *ck.pos(l, m);
                        if (m == 0) {
                            if (!(pk < pl)) fail(p6, ck.tag(k) + " not before " + ck.tag(l) + " at value 0");
                            continue;
                        }
                        auto pd = ck.pos(d, m);
                        if (!pd) continue;
                        if (!(pk < pl && pl < *pd))
                            fail(p6, ck.tag(l) + " outside the pair of " + ck.tag(k) + " at value " +
                                         std::to_string(m));
                    }
                }
                if (is_middle(insts[k]) && insts[k].value < insts[l].value)
                    for (int m : ck.shared({k, l}))
                        if (*ck.pos(k, m) >= *ck.pos(l, m))
                            fail(p7, ck.tag(k) + " not before " + ck.tag(l) + " at value " + std::to_string(m));
            }
        }
        report.checks.push_back(p6);
        report.checks.push_back(p7);
    }
    return report;
}

namespace {

class ChunkBuilder {
public:
    ChunkBuilder(const IndexAssignment& a) : a_(a), n_(static_cast<std::size_t>(a.n())) {}

    int pos(std::size_t t, int v) const { return a_.at(t, v); }

    // e_{σ(v)} − e_{σ(v−2)} for v = top, top−2, ... while v−2 ≥ bottom.
    void chain(std::vector<Root>& out, std::size_t t, int bottom) const {
        const auto& dom = a_.instances()[t].domain;
        if (dom.empty()) return;
        for (int v = dom.front(); v - 2 >= bottom; v -= 2) out.push_back(e_minus(n_, pos(t, v), pos(t, v - 2)));
    }

    Root plus(int p, int q) const { return e_plus(n_, p, q); }
    Root minus(int p, int q) const { return e_minus(n_, p, q); }
    Root single(int p, int mult) const { return e_single(n_, p, mult); }

private:
    const IndexAssignment& a_;
    std::size_t n_;
};

}  // namespace

GeneratorSet generator_set(const OrbitLabel& label, const IndexAssignment& a) {
    GeneratorSet gs;
    ChunkBuilder cb(a);
    const auto& insts = a.instances();
    const auto mids = a.middles();

    for (std::size_t t = 0; t < insts.size(); ++t) {
        const auto& p = insts[t];
        std::vector<Root> chunk;
        const int k = p.value;
        if (label.kind == Kind::A) {
            cb.chain(chunk, t, 1 - k);
        } else if (k % 2 == 0) {
            cb.chain(chunk, t, 1);
            if (p.role == InstanceRole::FirstHalf)
                chunk.push_back(cb.plus(cb.pos(t, 1), cb.pos(a.dual(t), 1)));
            else if (p.role == InstanceRole::Middle)  // type C only
                chunk.push_back(cb.single(cb.pos(t, 1), 2));
        } else if (p.role == InstanceRole::FirstHalf) {
            cb.chain(chunk, t, 0);
        } else if (p.role == InstanceRole::SecondHalf) {
            cb.chain(chunk, t, 2);
            if (p.has(2)) chunk.push_back(cb.plus(cb.pos(t, 2), cb.pos(a.dual(t), 0)));
        } else if (label.kind == Kind::B) {
            // Odd middle in type B.
            cb.chain(chunk, t, 2);
            if (p.has(2)) {
                if (p.has(0)) {
                    chunk.push_back(cb.plus(cb.pos(t, 2), cb.pos(t, 0)));
                    chunk.push_back(cb.minus(cb.pos(t, 2), cb.pos(t, 0)));
                } else {
                    chunk.push_back(cb.single(cb.pos(t, 2), 1));
                }
            }
        } else {
            // Odd middle in type D: l^s pairs with l^{s+1} for odd s. The
            // upper part takes both signs at its own 0, the lower one only
            // the sum with its partner's 0.
            cb.chain(chunk, t, 2);
            if (p.has(2)) {
                if (p.middle_order % 2 == 1) {
                    const auto partner = mids.at(static_cast<std::size_t>(p.middle_order));
                    chunk.push_back(cb.plus(cb.pos(t, 2), cb.pos(partner, 0)));
                } else {
                    chunk.push_back(cb.plus(cb.pos(t, 2), cb.pos(t, 0)));
                    chunk.push_back(cb.minus(cb.pos(t, 2), cb.pos(t, 0)));
                }
            }
        }
        gs.chunks.push_back(std::move(chunk));
    }

    if (label.variant == Variant::II) {
        // The pair holding position n at value 1 takes the outer-automorphism
        // image: the sign of e_n flips in both chunks.
        const int n = a.n();
        auto own = a.owner(n);
        if (!own || own->second != 1) throw InternalError("very even label without value 1 at position n");
        const std::size_t ki = own->first;
        const std::size_t kj = a.dual(ki);
        for (std::size_t t = 0; t < gs.chunks.size(); ++t) {
            for (auto& r : gs.chunks[t]) {
                if (r.coords.back() == 0) continue;
                if (t != ki && t != kj) throw InternalError("e_n appears outside the flipped pair");
                r.coords.back() = -r.coords.back();
            }
        }
    }

    std::set<Root> seen;
    for (const auto& chunk : gs.chunks)
        for (const auto& r : chunk) {
            if (!seen.insert(r).second) throw InternalError("generator " + to_string(r) + " produced twice");
            gs.all_roots.push_back(r);
        }
    return gs;
}

Construction construct(const RootSystem& rs, const OrbitLabel& label, const IndexAssignment& assignment) {
    if (rs.kind() != label.kind || rs.size() != label.size)
        throw InputError("root system does not match label " + to_string(label));
    auto gens = generator_set(label, assignment);
    std::vector<std::size_t> idx;
    for (const auto& r : gens.all_roots) idx.push_back(rs.require_index(r));
    auto ideal = close_upward(rs, idx);
    return Construction{label, dynkin_element(label), assignment, std::move(gens), std::move(idx), std::move(ideal)};
}

Construction construct(const RootSystem& rs, const OrbitLabel& label) {
    return construct(rs, label, index_assignment(label));
}

AdNilpotentIdeal minimal_ideal(const OrbitLabel& label) {
    const auto rs = RootSystem::build(label.kind, label.size);
    return construct(rs, label).ideal;
}

GradedSplit split_graded(const RootSystem& rs, const DynkinElement& H, const std::vector<std::size_t>& c) {
    const auto ideal = close_upward(rs, c);
    const std::set<std::size_t> cset(c.begin(), c.end());
    GradedSplit s;
    for (std::size_t k = 0; k < rs.num_positive(); ++k) {
        if (H.evaluate(rs.root(k)) != 2) continue;
        if (cset.count(k))
            s.in_c.push_back(k);
        else if (ideal.contains(k))
            s.plus.push_back(k);
        else
            s.minus.push_back(k);
    }
    return s;
}

Root iota(const RootSystem& rs, const IndexAssignment& a, const Root& root) {
    if (rs.kind() != Kind::A) throw InputError("the involution is defined for type A only");
    if (root.coords.size() != rs.dim_coords()) throw InputError("root has the wrong number of coordinates");
    int p = 0, q = 0;
    for (std::size_t i = 0; i < root.coords.size(); ++i) {
        if (root.coords[i] == 1 && p == 0)
            p = static_cast<int>(i) + 1;
        else if (root.coords[i] == -1 && q == 0)
            q = static_cast<int>(i) + 1;
        else if (root.coords[i] != 0)
            throw InputError(to_string(root) + " is not of the form e_i - e_j");
    }
    if (p == 0 || q == 0) throw InputError(to_string(root) + " is not of the form e_i - e_j");
    const auto op = a.owner(p), oq = a.owner(q);
    if (!op || !oq) throw InputError("positions outside the assignment");
    const auto [i, m] = *op;
    const auto [j, l] = *oq;
    if (m - l != 2) throw InputError(to_string(root) + " is not in g_{H,2}");
    return e_minus(rs.dim_coords(), a.at(j, 2 - m), a.at(i, -m));
}

std::vector<int> coroot(const RootSystem& rs, const Root& root) {
    (void)rs;
    int norm = 0;
    for (int c : root.coords) norm += c * c;
    std::vector<int> out;
    for (int c : root.coords) {
        if ((2 * c) % norm != 0) throw InternalError("non-integral coroot");
        out.push_back(2 * c / norm);
    }
    return out;
}

namespace {

TripleOutcome solve_in_graded_piece(const RootSystem& rs, const DynkinElement& H, const std::vector<std::size_t>& c) {
    const auto x = sum_of_roots(rs, c);
    const auto target = cartan_matrix(rs, H);
    std::vector<std::size_t> g2;
    for (std::size_t k = 0; k < rs.num_positive(); ++k)
        if (H.evaluate(rs.root(k)) == 2) g2.push_back(k);
    const std::size_t cells = target.rows() * target.cols();
    linalg::RatMatrix sys(cells, g2.size());
    for (std::size_t col = 0; col < g2.size(); ++col) {
        const auto b = linalg::bracket(x, negative_root_matrix(rs, rs.root(g2[col])));
        for (std::size_t k = 0; k < cells; ++k) sys(k, col) = b.entries()[k];
    }
    std::vector<mpq_class> rhs(target.entries().begin(), target.entries().end());
    auto sol = linalg::solve(sys, rhs);
    if (!sol) return NoTriple{"no Y in g_{H,-2} with [X, Y] = H"};
    TripleData t{H, c, {}, {}};
    for (std::size_t col = 0; col < g2.size(); ++col)
        if ((*sol)[col] != 0) {
            t.y_roots.push_back(g2[col]);
            t.y_coefficients.push_back((*sol)[col]);
        }
    return t;
}

}  // namespace

TripleOutcome standard_triple(const RootSystem& rs, const DynkinElement& H, const std::vector<std::size_t>& c) {
    if (!is_weak_antichain(rs, c)) {
        if (rs.kind() == Kind::B) return NoTriple{"generator set has two roots whose difference is a root"};
        return solve_in_graded_piece(rs, H, c);
    }
    const std::size_t n = rs.dim_coords();
    linalg::RatMatrix sys(n, c.size());
    for (std::size_t col = 0; col < c.size(); ++col) {
        const auto cr = coroot(rs, rs.root(c[col]));
        for (std::size_t i = 0; i < n; ++i) sys(i, col) = cr[i];
    }
    const auto h = H.effective();
    std::vector<mpq_class> rhs(h.begin(), h.end());
    auto sol = linalg::solve(sys, rhs);
    if (!sol) {
        if (rs.kind() == Kind::B) return NoTriple{"H is not in the span of the generator coroots"};
        throw InternalError("H is not in the span of the generator coroots");
    }
    return TripleData{H, c, c, std::move(*sol)};
}

TripleOutcome standard_triple(const RootSystem& rs, const Construction& cons) {
    return standard_triple(rs, cons.H, cons.generator_idx);
}

}  // namespace adnil
