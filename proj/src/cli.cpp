#include "polya/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "polya/enumapps.hpp"
#include "polya/errors.hpp"
#include "polya/formulas.hpp"
#include "polya/graded.hpp"
#include "polya/kunneth.hpp"
#include "polya/perm.hpp"

namespace polya {

namespace {

// ---- generic JSON access with ParseError diagnostics ---------------------

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ParseError("job document: " + where + ": " + what);
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) bad(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(where, "missing field '" + key + "'");
    return *it;
}

long long require_int(const Json& v, const std::string& where, long long lo, long long hi) {
    if (!v.is_number_integer()) bad(where, "expected an integer");
    long long x = v.get<long long>();
    if (x < lo || x > hi)
        bad(where, "value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    return x;
}

std::string require_string(const Json& v, const std::string& where) {
    if (!v.is_string()) bad(where, "expected a string");
    return v.get<std::string>();
}

void reject_unknown(const Json& obj, const std::vector<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            bad(where, "unknown field '" + it.key() + "'");
}

// ---- group specs ----------------------------------------------------------

const std::vector<std::string> kGroupKinds = {"symmetric", "alternating", "cyclic",
                                              "dihedral",  "trivial",     "generators"};

Json normalize_group(const Json& g, const std::string& where) {
    std::string kind = require_string(require_field(g, "kind", where), where + ".kind");
    if (std::find(kGroupKinds.begin(), kGroupKinds.end(), kind) == kGroupKinds.end())
        bad(where + ".kind", "unknown group kind '" + kind + "'");
    long long n = require_int(require_field(g, "n", where), where + ".n", 1, 16);
    Json out;
    out["kind"] = kind;
    out["n"] = n;
    if (kind == "generators") {
        reject_unknown(g, {"kind", "n", "generators"}, where);
        const Json& gens = require_field(g, "generators", where);
        if (!gens.is_array()) bad(where + ".generators", "expected an array");
        Json canon = Json::array();
        for (const auto& item : gens) {
            std::string text = require_string(item, where + ".generators[]");
            canon.push_back(Permutation::parse(text, static_cast<int>(n)).str());
        }
        out["generators"] = canon;
    } else {
        reject_unknown(g, {"kind", "n"}, where);
    }
    return out;
}

PermGroup build_group(const Json& g, const Settings& s) {
    std::string kind = g.at("kind").get<std::string>();
    int n = g.at("n").get<int>();
    if (kind == "generators") {
        std::vector<Permutation> gens;
        for (const auto& item : g.at("generators"))
            gens.push_back(Permutation::parse(item.get<std::string>(), n));
        return PermGroup::closure(gens, n, s.group_cap);
    }
    GroupKind k = GroupKind::Trivial;
    if (kind == "symmetric") k = GroupKind::Symmetric;
    else if (kind == "alternating") k = GroupKind::Alternating;
    else if (kind == "cyclic") k = GroupKind::Cyclic;
    else if (kind == "dihedral") k = GroupKind::Dihedral;
    return PermGroup::named(k, n, s.group_cap);
}

// ---- graded data blocks ----------------------------------------------------

Json normalize_hodge(const Json& h, const std::string& where) {
    if (!h.is_object()) bad(where, "expected an object of \"p,q\" keys");
    HodgeDiamond diamond;
    for (auto it = h.begin(); it != h.end(); ++it) {
        const std::string& key = it.key();
        auto comma = key.find(',');
        if (comma == std::string::npos) bad(where, "key '" + key + "' is not of the form p,q");
        int p = 0, q = 0;
        try {
            p = std::stoi(key.substr(0, comma));
            q = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            bad(where, "key '" + key + "' is not of the form p,q");
        }
        if (p < 0 || q < 0) bad(where, "negative Hodge index in '" + key + "'");
        long long v = require_int(*it, where + "." + key, 0, 1'000'000);
        if (v > 0) diamond[{p, q}] += static_cast<unsigned>(v);
    }
    Json out;
    for (const auto& [pq, v] : diamond)
        out[std::to_string(pq.first) + "," + std::to_string(pq.second)] = v;
    return out;
}

HodgeDiamond build_hodge(const Json& h) {
    HodgeDiamond diamond;
    for (auto it = h.begin(); it != h.end(); ++it) {
        const std::string& key = it.key();
        auto comma = key.find(',');
        diamond[{std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1))}] =
            it->get<unsigned>();
    }
    return diamond;
}

Json normalize_data(const Json& d, const std::string& where, bool allow_map) {
    if (!d.is_object()) bad(where, "expected an object");
    Json out;
    if (d.contains("betti")) {
        reject_unknown(d, {"betti"}, where);
        const Json& b = d.at("betti");
        if (!b.is_array()) bad(where + ".betti", "expected an array");
        Json arr = Json::array();
        for (const auto& v : b) arr.push_back(require_int(v, where + ".betti[]", 0, 1'000'000));
        out["betti"] = arr;
    } else if (d.contains("hodge")) {
        reject_unknown(d, {"hodge"}, where);
        out["hodge"] = normalize_hodge(d.at("hodge"), where + ".hodge");
    } else if (d.contains("map") && allow_map) {
        reject_unknown(d, {"map"}, where);
        const Json& m = d.at("map");
        reject_unknown(m, {"vars", "blocks"}, where + ".map");
        std::vector<std::string> vars;
        if (m.contains("vars")) {
            if (!m.at("vars").is_array()) bad(where + ".map.vars", "expected an array");
            for (const auto& v : m.at("vars"))
                vars.push_back(require_string(v, where + ".map.vars[]"));
        }
        const Json& blocks = require_field(m, "blocks", where + ".map");
        if (!blocks.is_array()) bad(where + ".map.blocks", "expected an array");
        Json canon_blocks = Json::array();
        for (const auto& block : blocks) {
            if (!block.is_array()) bad(where + ".map.blocks[]", "expected a matrix");
            Json canon_rows = Json::array();
            std::size_t dim = block.size();
            for (const auto& row : block) {
                if (!row.is_array() || row.size() != dim)
                    bad(where + ".map.blocks[]", "matrix is not square");
                Json canon_row = Json::array();
                for (const auto& entry : row) {
                    std::string text = require_string(entry, where + ".map.blocks[][]");
                    canon_row.push_back(MultiPoly::parse(text, vars).str());
                }
                canon_rows.push_back(canon_row);
            }
            canon_blocks.push_back(canon_rows);
        }
        Json mm;
        Json jvars = Json::array();
        for (const auto& v : vars) jvars.push_back(v);
        mm["vars"] = jvars;
        mm["blocks"] = canon_blocks;
        out["map"] = mm;
    } else {
        bad(where, allow_map ? "expected one of 'betti', 'hodge', 'map'"
                             : "expected one of 'betti', 'hodge'");
    }
    return out;
}

GradedMap build_map(const Json& d) {
    if (d.contains("betti")) {
        std::vector<unsigned> betti;
        for (const auto& v : d.at("betti")) betti.push_back(v.get<unsigned>());
        return GradedMap::from_betti(betti);
    }
    if (d.contains("hodge")) return GradedMap::from_hodge(build_hodge(d.at("hodge")));
    const Json& m = d.at("map");
    std::vector<std::string> vars;
    for (const auto& v : m.at("vars")) vars.push_back(v.get<std::string>());
    std::vector<unsigned> dims;
    std::vector<SquareMatrix> blocks;
    for (const auto& block : m.at("blocks")) {
        std::size_t dim = block.size();
        dims.push_back(static_cast<unsigned>(dim));
        SquareMatrix b(dim, vars);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                b.set(i, j, MultiPoly::parse(block[i][j].get<std::string>(), vars));
        blocks.push_back(std::move(b));
    }
    return GradedMap(GradedSpace(dims), std::move(blocks), vars);
}

// ---- count blocks -----------------------------------------------------------

Json normalize_counts(const Json& c, const std::string& where, unsigned needed,
                      const Settings& s) {
    if (!c.is_object()) bad(where, "expected an object");
    Json out;
    long long q = 0;
    if (c.contains("q")) q = require_int(c.at("q"), where + ".q", 0, 1'000'000);
    out["q"] = q;
    bool has_equations = c.contains("equations") || c.contains("vars");
    if (has_equations) {
        reject_unknown(c, {"q", "vars", "equations", "values"}, where);
        std::vector<std::string> vars;
        const Json& jv = require_field(c, "vars", where);
        if (!jv.is_array()) bad(where + ".vars", "expected an array");
        for (const auto& v : jv) vars.push_back(require_string(v, where + ".vars[]"));
        const Json& je = require_field(c, "equations", where);
        if (!je.is_array()) bad(where + ".equations", "expected an array");
        std::vector<MultiPoly> eqs;
        Json canon_eqs = Json::array();
        for (const auto& e : je) {
            MultiPoly p = MultiPoly::parse(require_string(e, where + ".equations[]"), vars);
            canon_eqs.push_back(p.str());
            eqs.push_back(std::move(p));
        }
        Json jvars = Json::array();
        for (const auto& v : vars) jvars.push_back(v);
        out["vars"] = jvars;
        out["equations"] = canon_eqs;
        if (c.contains("values")) {
            Json arr = Json::array();
            for (const auto& v : c.at("values"))
                arr.push_back(require_int(v, where + ".values[]", 0, (1ll << 62)));
            out["values"] = arr;
        } else {
            CountVector counts = brute_force_affine_counts(vars, eqs, q,
                                                           static_cast<int>(needed),
                                                           s.enum_budget);
            Json arr = Json::array();
            for (long long v : counts.values) arr.push_back(v);
            out["values"] = arr;
        }
    } else {
        reject_unknown(c, {"q", "values"}, where);
        const Json& jv = require_field(c, "values", where);
        if (!jv.is_array()) bad(where + ".values", "expected an array");
        Json arr = Json::array();
        for (const auto& v : jv) arr.push_back(require_int(v, where + ".values[]", 0, (1ll << 62)));
        out["values"] = arr;
    }
    if (out.at("values").size() < needed)
        bad(where + ".values", "need at least " + std::to_string(needed) + " counts");
    return out;
}

CountVector build_counts(const Json& c) {
    CountVector out;
    out.q = c.at("q").get<long long>();
    for (const auto& v : c.at("values")) out.values.push_back(v.get<long long>());
    return out;
}

// ---- seeded instances for oracle-check --------------------------------------

Permutation random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(img[static_cast<std::size_t>(i)], img[j]);
    }
    return Permutation(std::move(img));
}

GradedMap random_graded_map(std::mt19937_64& rng, const std::vector<unsigned>& max_dims) {
    std::vector<unsigned> dims;
    for (unsigned cap : max_dims)
        dims.push_back(static_cast<unsigned>(rng() % static_cast<std::uint64_t>(cap + 1)));
    GradedSpace space(dims);
    std::vector<SquareMatrix> blocks;
    for (int i = 0; i <= space.top_degree(); ++i) {
        SquareMatrix b(space.dim(i), {});
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t cidx = 0; cidx < b.dim(); ++cidx) {
                long num = static_cast<long>(rng() % 19) - 9;
                long den = 1 + static_cast<long>(rng() % 9);
                b.set(r, cidx, MultiPoly::constant(Rational(num, den), {}));
            }
        blocks.push_back(std::move(b));
    }
    return GradedMap(space, std::move(blocks), {});
}

// ---- command runners ---------------------------------------------------------

Settings settings_of(const Json& job) {
    Settings s;
    s.trunc = job.at("trunc").get<unsigned>();
    s.group_cap = job.at("group_cap").get<std::uint64_t>();
    s.oracle_cap = job.at("oracle_cap").get<std::uint64_t>();
    s.enum_budget = job.at("enum_budget").get<std::uint64_t>();
    return s;
}

std::vector<std::string> series_strings(const TruncatedSeries& s) {
    return s.coefficient_strings();
}

MultiPoly specialize(const MultiPoly& p, const std::string& var, const Rational& value) {
    if (std::find(p.vars().begin(), p.vars().end(), var) == p.vars().end()) return p;
    std::map<std::string, MultiPoly> subst = {
        {var, MultiPoly::constant(value, p.vars())}};
    return p.substitute(subst, p.vars());
}

Json run_cycle_index(const Json& job, const Settings& s) {
    Json out;
    out["cycle_index"] = cycle_index(build_group(job.at("group"), s)).str();
    return out;
}

Json run_quotient_series(const Json& job, const Settings& s) {
    GradedMap phi = build_map(job.at("data"));
    std::string family = job.at("family").get<std::string>();
    bool has_u = job.contains("specialize_u");
    Rational u_value = has_u ? Rational::parse(job.at("specialize_u").get<std::string>())
                             : Rational(0);
    auto emit_series = [&](const TruncatedSeries& series) {
        Json arr = Json::array();
        for (unsigned n = 0; n <= series.order(); ++n) {
            MultiPoly c = series.coefficient(n);
            if (has_u) c = specialize(c, kLefschetzVar, u_value);
            arr.push_back(c.str());
        }
        return arr;
    };
    Json out;
    if (family == "symmetric") {
        RationalGF gf = sym_generating_function(phi, s.trunc);
        MultiPoly num = gf.numerator, den = gf.denominator;
        if (has_u) {
            num = specialize(num, kLefschetzVar, u_value);
            den = specialize(den, kLefschetzVar, u_value);
        }
        out["numerator"] = num.str();
        out["denominator"] = den.str();
        out["series"] = emit_series(gf.expansion);
    } else {
        out["series"] = emit_series(alt_generating_function(phi, s.trunc));
    }
    return out;
}

Json run_point_count(const Json& job, const Settings& s) {
    PermGroup g = build_group(job.at("group"), s);
    Json out;
    out["count"] = quotient_point_count(g, build_counts(job.at("counts"))).get_str();
    return out;
}

Json run_zeta(const Json& job, const Settings& s, bool alternating) {
    CountVector counts = build_counts(job.at("counts"));
    TruncatedSeries series = alternating ? alt_zeta_from_counts(counts, s.trunc)
                                         : zeta_from_counts(counts, s.trunc);
    Json out;
    out["series"] = series_strings(series);
    return out;
}

Json run_polya(const Json& job, const Settings& s) {
    PermGroup g = build_group(job.at("group"), s);
    long long colors = job.at("colors").get<long long>();
    Json out;
    out["count"] = polya_count(g, colors).get_str();
    if (job.at("weight_poly").get<bool>()) {
        if (colors < 1) bad("polya.weight_poly", "weights need at least one color");
        out["weight_poly"] = polya_weight_poly(g, static_cast<int>(colors)).str();
    }
    return out;
}

Json run_hodge(const Json& job, const Settings& s) {
    PermGroup g = build_group(job.at("group"), s);
    Json out;
    out["polynomial"] = invariant_lefschetz_formula(g, build_map(job.at("data"))).str();
    return out;
}

Json run_discriminant_census(const Json& job, const Settings& s) {
    int n = job.at("n").get<int>();
    long long q = job.at("q").get<long long>();
    DiscriminantCensus census = discriminant_census(n, q, s.enum_budget);
    Json out;
    out["discriminant"] = discriminant_poly(n).str();
    out["zero"] = census.zero;
    out["qr"] = census.qr;
    out["qnr"] = census.qnr;
    out["double_cover_total"] = census.double_cover_total;
    return out;
}

Json run_oracle_check(const Json& job, const Settings& s) {
    std::uint64_t seed = job.at("seed").get<std::uint64_t>();
    int n_max = job.at("n_max").get<int>();
    int maps_per_group = job.at("maps_per_group").get<int>();
    std::vector<unsigned> max_dims;
    for (const auto& v : job.at("max_dims")) max_dims.push_back(v.get<unsigned>());

    std::mt19937_64 rng(seed);
    Json instances = Json::array();
    int passed = 0, total = 0;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<std::pair<std::string, PermGroup>> groups;
        groups.emplace_back("symmetric", PermGroup::named(GroupKind::Symmetric, n, s.group_cap));
        groups.emplace_back("alternating",
                            PermGroup::named(GroupKind::Alternating, n, s.group_cap));
        groups.emplace_back("cyclic", PermGroup::named(GroupKind::Cyclic, n, s.group_cap));
        if (n >= 3)
            groups.emplace_back("dihedral",
                                PermGroup::named(GroupKind::Dihedral, n, s.group_cap));
        groups.emplace_back("trivial", PermGroup::named(GroupKind::Trivial, n, s.group_cap));
        for (int k = 0; k < 2; ++k) {
            std::vector<Permutation> gens;
            int count = 1 + static_cast<int>(rng() % 2);
            std::string label = "generated";
            for (int i = 0; i < count; ++i) {
                gens.push_back(random_permutation(rng, n));
                label += gens.back().str();
            }
            groups.emplace_back(label, PermGroup::closure(gens, n, s.group_cap));
        }
        for (const auto& [label, group] : groups) {
            for (int k = 0; k < maps_per_group; ++k) {
                GradedMap phi = random_graded_map(rng, max_dims);
                bool ok = invariant_lefschetz_formula(group, phi) ==
                          invariant_lefschetz_oracle(group, phi, static_cast<unsigned>(n),
                                                     s.oracle_cap);
                Json rec;
                rec["n"] = n;
                rec["group"] = label;
                rec["instance"] = k;
                rec["ok"] = ok;
                instances.push_back(rec);
                ++total;
                if (ok) ++passed;
            }
        }
    }
    Json out;
    out["instances"] = instances;
    out["passed"] = passed;
    out["total"] = total;
    out["summary"] = (passed == total ? std::string("PASS ") : std::string("FAIL ")) +
                     std::to_string(passed) + "/" + std::to_string(total);
    return out;
}

}  // namespace

Settings settings_from_env(Settings base) {
    auto read = [](const char* name, std::uint64_t& slot) {
        const char* v = std::getenv(name);
        if (v == nullptr || *v == '\0') return;
        char* end = nullptr;
        unsigned long long parsed = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0')
            throw ParseError(std::string(name) + ": not an unsigned integer: '" + v + "'");
        slot = parsed;
    };
    std::uint64_t trunc = base.trunc;
    read("POLYA_TRUNC", trunc);
    if (trunc > 1000) throw ParseError("POLYA_TRUNC: unreasonably large truncation order");
    base.trunc = static_cast<unsigned>(trunc);
    read("POLYA_GROUP_CAP", base.group_cap);
    read("POLYA_ORACLE_CAP", base.oracle_cap);
    read("POLYA_ENUM_BUDGET", base.enum_budget);
    return base;
}

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands = {
        "cycle-index", "quotient-series", "point-count",        "zeta",        "alt-zeta",
        "polya",       "hodge",           "discriminant-census", "oracle-check"};
    return commands;
}

Json normalize_job(const Json& job, const Settings& fallback) {
    if (!job.is_object()) bad("root", "expected an object");
    std::string schema = job.contains("schema")
                             ? require_string(job.at("schema"), "schema")
                             : std::string("polya/1");
    if (schema != "polya/1") bad("schema", "unsupported schema '" + schema + "'");
    std::string command = require_string(require_field(job, "command", "root"), "command");
    const auto& commands = known_commands();
    if (std::find(commands.begin(), commands.end(), command) == commands.end())
        bad("command", "unknown command '" + command + "'");

    Settings s = fallback;
    if (job.contains("trunc"))
        s.trunc = static_cast<unsigned>(require_int(job.at("trunc"), "trunc", 0, 1000));
    if (job.contains("group_cap"))
        s.group_cap = static_cast<std::uint64_t>(
            require_int(job.at("group_cap"), "group_cap", 1, (1ll << 62)));
    if (job.contains("oracle_cap"))
        s.oracle_cap = static_cast<std::uint64_t>(
            require_int(job.at("oracle_cap"), "oracle_cap", 1, (1ll << 62)));
    if (job.contains("enum_budget"))
        s.enum_budget = static_cast<std::uint64_t>(
            require_int(job.at("enum_budget"), "enum_budget", 1, (1ll << 62)));

    std::vector<std::string> allowed = {"schema", "command", "trunc", "group_cap",
                                        "oracle_cap", "enum_budget"};
    Json out;
    out["schema"] = "polya/1";
    out["command"] = command;

    if (command == "cycle-index") {
        allowed.push_back("group");
        out["group"] = normalize_group(require_field(job, "group", command), "group");
    } else if (command == "quotient-series") {
        allowed.insert(allowed.end(), {"family", "data", "specialize_u"});
        std::string family = require_string(require_field(job, "family", command), "family");
        if (family != "symmetric" && family != "alternating")
            bad("family", "expected 'symmetric' or 'alternating'");
        out["family"] = family;
        out["data"] = normalize_data(require_field(job, "data", command), "data", true);
        if (job.contains("specialize_u"))
            out["specialize_u"] =
                Rational::parse(require_string(job.at("specialize_u"), "specialize_u")).str();
    } else if (command == "point-count") {
        allowed.insert(allowed.end(), {"group", "counts"});
        Json group = normalize_group(require_field(job, "group", command), "group");
        out["group"] = group;
        out["counts"] = normalize_counts(require_field(job, "counts", command), "counts",
                                         group.at("n").get<unsigned>(), s);
    } else if (command == "zeta" || command == "alt-zeta") {
        allowed.push_back("counts");
        out["counts"] =
            normalize_counts(require_field(job, "counts", command), "counts", s.trunc, s);
    } else if (command == "polya") {
        allowed.insert(allowed.end(), {"group", "colors", "weight_poly"});
        out["group"] = normalize_group(require_field(job, "group", command), "group");
        out["colors"] = require_int(require_field(job, "colors", command), "colors", 0, 1'000'000);
        bool weights = false;
        if (job.contains("weight_poly")) {
            if (!job.at("weight_poly").is_boolean()) bad("weight_poly", "expected a boolean");
            weights = job.at("weight_poly").get<bool>();
        }
        out["weight_poly"] = weights;
    } else if (command == "hodge") {
        allowed.insert(allowed.end(), {"group", "data"});
        out["group"] = normalize_group(require_field(job, "group", command), "group");
        out["data"] = normalize_data(require_field(job, "data", command), "data", true);
    } else if (command == "discriminant-census") {
        allowed.insert(allowed.end(), {"n", "q"});
        out["n"] = require_int(require_field(job, "n", command), "n", 2, 16);
        out["q"] = require_int(require_field(job, "q", command), "q", 3, 1'000'000);
    } else if (command == "oracle-check") {
        allowed.insert(allowed.end(), {"seed", "n_max", "max_dims", "maps_per_group"});
        out["seed"] = require_int(require_field(job, "seed", command), "seed", 0, (1ll << 62));
        out["n_max"] = require_int(require_field(job, "n_max", command), "n_max", 2, 6);
        Json dims = Json::array();
        const Json& jd = require_field(job, "max_dims", command);
        if (!jd.is_array() || jd.empty()) bad("max_dims", "expected a nonempty array");
        for (const auto& v : jd) dims.push_back(require_int(v, "max_dims[]", 0, 8));
        out["max_dims"] = dims;
        out["maps_per_group"] =
            job.contains("maps_per_group")
                ? require_int(job.at("maps_per_group"), "maps_per_group", 1, 100)
                : 3;
    }

    reject_unknown(job, allowed, "root");
    out["trunc"] = s.trunc;
    out["group_cap"] = s.group_cap;
    out["oracle_cap"] = s.oracle_cap;
    out["enum_budget"] = s.enum_budget;
    return out;
}

Json run_job(const Json& job) {
    Settings s = settings_of(job);
    std::string command = job.at("command").get<std::string>();
    Json output;
    if (command == "cycle-index") output = run_cycle_index(job, s);
    else if (command == "quotient-series") output = run_quotient_series(job, s);
    else if (command == "point-count") output = run_point_count(job, s);
    else if (command == "zeta") output = run_zeta(job, s, false);
    else if (command == "alt-zeta") output = run_zeta(job, s, true);
    else if (command == "polya") output = run_polya(job, s);
    else if (command == "hodge") output = run_hodge(job, s);
    else if (command == "discriminant-census") output = run_discriminant_census(job, s);
    else if (command == "oracle-check") output = run_oracle_check(job, s);
    else bad("command", "unknown command '" + command + "'");

    Json result;
    result["schema"] = "polya/1";
    result["input"] = job;
    result["output"] = output;
    return result;
}

int result_exit_code(const Json& result) {
    const Json& output = result.at("output");
    if (output.contains("passed") && output.contains("total") &&
        output.at("passed") != output.at("total"))
        return 3;
    return 0;
}

}  // namespace polya
