#include "adnil/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adnil/construct.hpp"
#include "adnil/dynkin.hpp"
#include "adnil/errors.hpp"
#include "adnil/oracle.hpp"

namespace adnil::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t default_seed = 20240611;
constexpr int table_guard = 12;

ordered_json coords(const Root& r) { return r.coords; }

ordered_json root_list(const std::vector<Root>& roots) {
    ordered_json a = ordered_json::array();
    for (const auto& r : roots) a.push_back(coords(r));
    return a;
}

std::string join_roots(const std::vector<Root>& roots) {
    std::string s;
    for (const auto& r : roots) s += (s.empty() ? "" : ", ") + to_string(r);
    return s;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string bracketed(const Partition& p) { return "[" + to_string(p) + "]"; }

std::string label_cell(const OrbitLabel& l) {
    return l.variant ? bracketed(l.partition) + " " + to_string(*l.variant) : bracketed(l.partition);
}

OrbitLabel parse_label(const CommandOptions& o) {
    std::optional<Variant> v;
    if (o.variant) v = parse_variant(*o.variant);
    return make_label(parse_kind(o.type), o.size, Partition::parse(o.partition), v);
}

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_mismatch;
    }
}

}  // namespace

std::uint64_t resolve_seed(const CommandOptions& opts) {
    if (opts.seed) return *opts.seed;
    if (const char* env = std::getenv("ADNIL_SEED")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string("ADNIL_SEED is not an unsigned integer: '") + env + "'");
    }
    return default_seed;
}

int cmd_ideal(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto label = parse_label(opts);
        const auto rs = RootSystem::build(label.kind, label.size);
        const auto cons = construct(rs, label);
        const int m = lower_bound_m(rs, label);
        const auto members = roots_of(rs, adnil::members(cons.ideal.roots));
        if (opts.format == Format::Json) {
            ordered_json j;
            j["type"] = std::string(1, kind_letter(label.kind));
            j["size"] = label.size;
            j["partition"] = label.partition.parts();
            j["variant"] = label.variant ? ordered_json(to_string(*label.variant)) : ordered_json(nullptr);
            j["h"] = cons.H.effective();
            j["m"] = m;
            j["dim"] = cons.ideal.dim();
            j["generators"] = root_list(cons.generators.all_roots);
            j["roots"] = root_list(members);
            out << j.dump(2) << "\n";
            return exit_ok;
        }
        out << "orbit:      " << to_string(label) << "\n";
        out << "h:          " << join_ints(cons.H.effective()) << "\n";
        out << "generators: " << join_roots(cons.generators.all_roots) << "\n";
        out << "dim:        " << cons.ideal.dim() << "\n";
        out << "m:          " << m << "\n";
        out << "roots:      " << join_roots(members) << "\n";
        if (label.kind == Kind::A) out << "ferrers:\n" << ferrers_diagram(rs, cons.ideal);
        return exit_ok;
    });
}

int cmd_table(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto kind = parse_kind(opts.type);
        if (opts.size > table_guard)
            throw InputError("table is limited to size " + std::to_string(table_guard));
        const auto rs = RootSystem::build(kind, opts.size);
        ordered_json rows = ordered_json::array();
        std::ostringstream text;
        text << std::left << std::setw(24) << "orbit" << std::setw(6) << "m" << std::setw(6) << "dim" << "match\n";
        for (const auto& label : orbit_labels(kind, opts.size)) {
            const int m = lower_bound_m(rs, label);
            const int dim = static_cast<int>(construct(rs, label).ideal.dim());
            ordered_json row;
            row["partition"] = label.partition.parts();
            row["variant"] = label.variant ? ordered_json(to_string(*label.variant)) : ordered_json(nullptr);
            row["m"] = m;
            row["dim"] = dim;
            row["match"] = m == dim;
            rows.push_back(row);
            text << std::setw(24) << label_cell(label) << std::setw(6) << m << std::setw(6) << dim
                 << (m == dim ? "yes" : "NO") << "\n";
        }
        if (opts.format == Format::Json)
            out << rows.dump(2) << "\n";
        else
            out << text.str();
        return exit_ok;
    });
}

int cmd_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto kind = parse_kind(opts.type);
        const auto rs = RootSystem::build(kind, opts.size);
        oracle::GenericityOptions g{resolve_seed(opts), opts.trials};
        const auto table = oracle::min_dims_by_orbit(kind, opts.size, g, opts.threads);

        bool all_ok = true;
        ordered_json rows = ordered_json::array();
        std::ostringstream text;
        text << "ideals enumerated: " << table.ideals << "\n";
        text << std::left << std::setw(24) << "orbit" << std::setw(6) << "m" << std::setw(8) << "oracle"
             << std::setw(8) << "ideal" << std::setw(24) << "ideal orbit" << "status\n";
        std::size_t labelled = 0;
        for (const auto& label : orbit_labels(kind, opts.size)) {
            const int m = lower_bound_m(rs, label);
            const auto cons = construct(rs, label);
            const int dim = static_cast<int>(cons.ideal.dim());
            oracle::GenericityOptions gi = g;
            gi.seed = g.seed ^ (0x9e3779b97f4a7c15ULL * (++labelled));
            const auto orbit = oracle::associated_orbit(rs, cons.ideal, gi);
            const auto it = table.minima.find(label.partition);
            const int oracle_min = it == table.minima.end() ? -1 : it->second.min_dim;
            const bool ok = oracle_min == m && dim == m && orbit == label.partition;
            all_ok = all_ok && ok;
            ordered_json row;
            row["partition"] = label.partition.parts();
            row["variant"] = label.variant ? ordered_json(to_string(*label.variant)) : ordered_json(nullptr);
            row["m"] = m;
            row["oracle_min"] = oracle_min;
            row["dim"] = dim;
            row["orbit"] = orbit.parts();
            row["ok"] = ok;
            rows.push_back(row);
            text << std::setw(24) << label_cell(label) << std::setw(6) << m << std::setw(8) << oracle_min
                 << std::setw(8) << dim << std::setw(24) << bracketed(orbit) << (ok ? "ok" : "MISMATCH") << "\n";
        }
        // Every orbit the enumeration meets must be a labelled orbit.
        for (const auto& [p, entry] : table.minima) {
            bool known = false;
            for (const auto& label : orbit_labels(kind, opts.size)) known = known || label.partition == p;
            if (!known) {
                all_ok = false;
                text << "unlabelled orbit " << bracketed(p) << " (min dim " << entry.min_dim << ")\n";
            }
        }
        if (opts.format == Format::Json) {
            ordered_json j;
            j["type"] = std::string(1, kind_letter(kind));
            j["size"] = opts.size;
            j["seed"] = g.seed;
            j["ideals"] = table.ideals;
            j["orbits"] = rows;
            j["ok"] = all_ok;
            out << j.dump(2) << "\n";
        } else {
            out << text.str() << (all_ok ? "verification passed\n" : "verification FAILED\n");
        }
        return all_ok ? exit_ok : exit_mismatch;
    });
}

int cmd_count(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rs = RootSystem::build(parse_kind(opts.type), opts.size);
        if (rs.num_positive() > oracle::max_enumerable_positive)
            throw InputError("refusing to enumerate " + std::to_string(rs.num_positive()) + " positive roots");
        std::size_t count = 0;
        for_each_ideal(rs, [&](const AdNilpotentIdeal&) { ++count; });
        if (opts.format == Format::Json) {
            ordered_json j;
            j["type"] = opts.type;
            j["size"] = opts.size;
            j["ideals"] = count;
            out << j.dump(2) << "\n";
        } else {
            out << count << "\n";
        }
        return exit_ok;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal ad-nilpotent ideals for nilpotent orbits of classical Lie algebras"};
    app.require_subcommand(1);

    CommandOptions opts;
    std::string format = "text";
    std::uint64_t seed = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("-t,--type", opts.type, "Lie type: A, B, C or D")->required()
            ->check(CLI::IsMember({"A", "B", "C", "D", "a", "b", "c", "d"}));
        sub->add_option("-n,--size", opts.size, "matrix size n for A (sl_n), rank n for B, C, D")->required();
        sub->add_option("-f,--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* ideal = app.add_subcommand("ideal", "construct the minimal ideal of one orbit");
    common(ideal);
    ideal->add_option("-p,--partition", opts.partition, "partition, e.g. 4,2")->required();
    ideal->add_option("--variant", opts.variant, "I or II for very even type D partitions");

    auto* table = app.add_subcommand("table", "m and constructed dimension for every orbit");
    common(table);

    auto* verify = app.add_subcommand("verify", "compare against exhaustive enumeration");
    common(verify);
    auto* seed_opt = verify->add_option("--seed", seed, "seed for generic coefficients (else ADNIL_SEED)");
    verify->add_option("--trials", opts.trials, "random trials per ideal")->check(CLI::PositiveNumber);
    verify->add_option("-j,--threads", opts.threads, "worker threads (0 = all cores)");

    auto* count = app.add_subcommand("count", "number of ad-nilpotent ideals");
    common(count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? exit_ok : exit_input;
    }
    if (seed_opt->count() > 0) opts.seed = seed;
    opts.format = format == "json" ? Format::Json : Format::Text;
    for (auto& c : opts.type) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    if (ideal->parsed()) return cmd_ideal(opts, out, err);
    if (table->parsed()) return cmd_table(opts, out, err);
    if (verify->parsed()) return cmd_verify(opts, out, err);
    return cmd_count(opts, out, err);
}

}  // namespace adnil::cli
