#include "cyclohodge/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cyclohodge/arith.hpp"
#include "cyclohodge/characters.hpp"
#include "cyclohodge/fourier.hpp"
#include "cyclohodge/galmod.hpp"
#include "cyclohodge/hodge.hpp"

namespace cyclohodge {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "cyclohodge 0.1.0";

json cyclo_json(const CycloElement& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
    return json{{"modulus", x.modulus()}, {"coeffs", coeffs}};
}

json config_json(const RunConfig& c) {
    json j;
    j["subcommand"] = c.subcommand;
    if (c.p) j["p"] = c.p;
    if (c.r) j["r"] = c.r;
    if (c.n) j["n"] = c.n;
    if (c.q) j["q"] = c.q;
    if (c.p_max) j["p_max"] = c.p_max;
    if (c.r_max) j["r_max"] = c.r_max;
    if (c.n_max) j["n_max"] = c.n_max;
    j["format"] = c.format;
    j["jobs"] = c.jobs;
    j["seed"] = c.seed;
    if (c.assume_large_galois) j["assume_large_galois"] = true;
    if (c.odd_only) j["odd_only"] = true;
    return j;
}

void append_identity_report(std::vector<CheckRecord>& out, const IdentityReport& rep) {
    for (const auto& c : rep.checks)
        out.push_back({c.name, c.witness, c.ok ? "pass" : "fail", c.ok ? "" : c.witness, 0.0});
}

// Runs fn(0..count-1) on `jobs` threads; each fn writes only its own slot.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned nthreads = std::min<std::size_t>(jobs, count);
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

std::uint64_t pow_u64(std::uint64_t p, unsigned r) {
    std::uint64_t q = 1;
    while (r--) q *= p;
    return q;
}

std::string character_value_string(const DirichletCharacter& chi, std::uint64_t a) {
    auto k = chi.value_exponent(a);
    if (!k) return "0";
    if (*k == 0) return "1";
    if (2 * *k == chi.order()) return "-1";
    return "z" + std::to_string(chi.order()) + "^" + std::to_string(*k);
}

struct TableRow {
    std::uint64_t p;
    unsigned r;
    std::uint64_t n;
    std::uint64_t q;
    std::vector<unsigned> level_dims;
    unsigned tower_dim = 0;
    unsigned predicted = 0;
    unsigned ambient_dim = 0;
    bool exotic_gap = false;
    unsigned subvariety_bound = 0;
    std::uint64_t jacobian_dim = 0;
    bool ok = true;
    std::string witness;
};

TableRow make_table_row(std::uint64_t p, unsigned r, std::uint64_t n) {
    TableRow row;
    row.p = p;
    row.r = r;
    row.n = n;
    row.q = pow_u64(p, r);
    if (row.q == 2) {
        // V_Q is zero at q = 2; report the zero level explicitly.
        row.level_dims = {0};
        row.jacobian_dim = jacobian_dim(n, 2);
        return row;
    }
    try {
        CenterReport rep = center_report(n, p, r);
        row.level_dims = rep.level_dims;
        row.tower_dim = rep.tower_dim;
        row.predicted = rep.predicted;
        row.ambient_dim = rep.ambient_dim;
        row.exotic_gap = rep.exotic_gap;
        row.subvariety_bound = rep.subvariety_bound;
        row.jacobian_dim = rep.jacobian_dim;
    } catch (const std::exception& e) {
        // worker threads must not leak exceptions; report instead
        row.ok = false;
        row.witness = e.what();
    }
    return row;
}

json table_row_json(const TableRow& row) {
    json j;
    j["p"] = row.p;
    j["r"] = row.r;
    j["n"] = row.n;
    j["q"] = row.q;
    j["level_dims"] = row.level_dims;
    j["tower_dim"] = row.tower_dim;
    j["predicted"] = row.predicted;
    j["ambient_dim"] = row.ambient_dim;
    j["exotic_gap"] = row.exotic_gap;
    j["subvariety_bound"] = row.subvariety_bound;
    j["jacobian_dim"] = row.jacobian_dim;
    return j;
}

std::string join_dims(const std::vector<unsigned>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(dims[i]);
    }
    return s;
}

// ---- subcommand handlers fill checks + payload ----

struct HandlerResult {
    json payload;                       // subcommand-specific JSON
    std::vector<std::string> csv_rows;  // rows for --format csv (header first)
};

HandlerResult handle_center(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.p || !cfg.r || !cfg.n) throw std::invalid_argument("center: need --p, --r, --n");
    HandlerResult out;
    try {
        CenterReport rep = center_report(cfg.n, cfg.p, cfg.r, cfg.assume_large_galois);
        json j;
        j["p"] = rep.p;
        j["r"] = rep.r;
        j["n"] = rep.n;
        j["q"] = pow_u64(rep.p, rep.r);
        j["assume_large_galois"] = rep.assume_large_galois;
        j["level_dims"] = rep.level_dims;
        j["tower_dim"] = rep.tower_dim;
        j["predicted"] = rep.predicted;
        j["ambient_dim"] = rep.ambient_dim;
        j["exotic_gap"] = rep.exotic_gap;
        j["subvariety_bound"] = rep.subvariety_bound;
        j["jacobian_dim"] = rep.jacobian_dim;
        j["interpretation"] = rep.assume_large_galois
            ? "center dimension equals tower_dim"
            : "center dimension >= tower_dim (unconditional lower bound; "
              "large-Galois hypothesis not asserted)";
        j["scope_notes"] = json{{"hodge_group", "dimension only"},
                                {"mumford_tate_group", "out of scope"},
                                {"norm_torus", "dimension only: phi(q)/2"},
                                {"polarization_forms", "out of scope"},
                                {"period_lattice", "out of scope"}};
        out.payload["center"] = j;
        checks.push_back({"center.theorems",
                          "p=" + std::to_string(cfg.p) + " r=" + std::to_string(cfg.r) +
                              " n=" + std::to_string(cfg.n),
                          "pass", "", 0.0});
    } catch (const theorem_violation& e) {
        checks.push_back({"center.theorems",
                          "p=" + std::to_string(cfg.p) + " r=" + std::to_string(cfg.r) +
                              " n=" + std::to_string(cfg.n),
                          "fail", e.what(), 0.0});
    }
    return out;
}

HandlerResult handle_table(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.p_max || !cfg.r_max || !cfg.n_max)
        throw std::invalid_argument("table: need --p-max, --r-max, --n-max");
    struct Point { std::uint64_t p; unsigned r; std::uint64_t n; };
    std::vector<Point> points;
    for (std::uint64_t p = 2; p <= cfg.p_max; ++p) {
        if (!is_prime(p)) continue;
        for (unsigned r = 1; r <= cfg.r_max; ++r) {
            for (std::uint64_t n = 2; n <= cfg.n_max; ++n)
                if (n % p != 0) points.push_back({p, r, n});
        }
    }
    std::vector<TableRow> rows(points.size());
    parallel_for(points.size(), cfg.jobs, [&](std::size_t i) {
        rows[i] = make_table_row(points[i].p, points[i].r, points[i].n);
    });

    HandlerResult out;
    json jrows = json::array();
    out.csv_rows.push_back(
        "p,r,n,q,level_dims,tower_dim,predicted,ambient_dim,exotic_gap,subvariety_bound,"
        "jacobian_dim");
    for (const auto& row : rows) {
        jrows.push_back(table_row_json(row));
        std::ostringstream line;
        line << row.p << ',' << row.r << ',' << row.n << ',' << row.q << ',' << join_dims(row.level_dims)
             << ',' << row.tower_dim << ',' << row.predicted << ',' << row.ambient_dim << ','
             << (row.exotic_gap ? "true" : "false") << ',' << row.subvariety_bound << ','
             << row.jacobian_dim;
        out.csv_rows.push_back(line.str());
        std::string params = "p=" + std::to_string(row.p) + " r=" + std::to_string(row.r) +
                             " n=" + std::to_string(row.n);
        checks.push_back({"table.row", params, row.ok ? "pass" : "fail", row.witness, 0.0});
    }
    out.payload["rows"] = jrows;
    return out;
}

HandlerResult handle_verify_fourier(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.p || !cfg.r || !cfg.n_max)
        throw std::invalid_argument("verify-fourier: need --p, --r, --n-max");
    const std::uint64_t q = pow_u64(cfg.p, cfg.r);
    if (q <= 2) throw std::invalid_argument("verify-fourier: q must exceed 2");
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= cfg.n_max; ++n)
        if (n % cfg.p != 0) ns.push_back(n);

    std::vector<std::vector<CheckRecord>> per_n(ns.size());
    parallel_for(ns.size(), cfg.jobs, [&](std::size_t i) {
        const std::uint64_t n = ns[i];
        auto& recs = per_n[i];
        try {
            append_identity_report(recs, verify_coefficient_identity(n, q));
            append_identity_report(recs, verify_nonvanishing(n, q));
            auto pr = factor_prime_power(q);
            auto group = std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));
            for (const auto& chi : all_characters(group)) {
                if (!chi.is_odd() || chi.is_primitive()) continue;
                append_identity_report(recs, verify_imprimitive_reduction(chi, n));
            }
        } catch (const std::exception& e) {
            recs.push_back({"verify-fourier", "n=" + std::to_string(n), "fail", e.what(), 0.0});
        }
    });
    for (auto& recs : per_n)
        checks.insert(checks.end(), recs.begin(), recs.end());

    HandlerResult out;
    out.payload["params"] =
        json{{"p", cfg.p}, {"r", cfg.r}, {"q", q}, {"n_max", cfg.n_max}};
    return out;
}

HandlerResult handle_verify_tower(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.p || !cfg.r || !cfg.n) throw std::invalid_argument("verify-tower: need --p, --r, --n");
    if (cfg.n % cfg.p == 0) throw std::invalid_argument("verify-tower: p divides n");
    TowerFunction tower(cfg.n, cfg.p, cfg.r);
    append_identity_report(checks, tower_check(tower));

    json levels = json::array(), ranks = json::array();
    unsigned ambient = 0;
    unsigned top_rank = 0;
    for (unsigned j = 1; j <= cfg.r; ++j) {
        std::uint64_t qj = pow_u64(cfg.p, j);
        unsigned rank = translates_rank(tower.level(j));
        levels.push_back(qj);
        ranks.push_back(rank);
        ambient += odd_space_dim(qj);
        top_rank = rank;
        bool ok = rank == odd_space_dim(qj);
        checks.push_back({"tower.rank",
                          "q=" + std::to_string(qj) + " n=" + std::to_string(cfg.n),
                          ok ? "pass" : "fail",
                          ok ? "" : "rank " + std::to_string(rank) + " != " +
                                        std::to_string(odd_space_dim(qj)),
                          0.0});
    }
    HandlerResult out;
    out.payload["levels"] = levels;
    out.payload["ranks"] = ranks;
    out.payload["tower_dim"] = top_rank;
    out.payload["ambient_dim"] = ambient;
    out.payload["exotic_gap"] = ambient > top_rank;
    return out;
}

HandlerResult handle_classnum(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.p_max) throw std::invalid_argument("classnum: need --p-max");
    const std::uint64_t n = cfg.n ? cfg.n : 2;
    HandlerResult out;
    json rows = json::array();
    out.csv_rows.push_back("p,h_p,n");
    for (std::uint64_t p = 7; p <= cfg.p_max; ++p) {
        if (!is_prime(p) || p % 4 != 3) continue;
        unsigned hp = class_number_bqf(p);
        rows.push_back(json{{"p", p}, {"h_p", hp}, {"n", n}});
        out.csv_rows.push_back(std::to_string(p) + "," + std::to_string(hp) + "," +
                               std::to_string(n));
        if (n % p == 0) {
            checks.push_back({"class.identity", "p=" + std::to_string(p), "skipped",
                              "p divides n", 0.0});
            continue;
        }
        append_identity_report(checks, verify_class_identity(p, n));
    }
    out.payload["rows"] = rows;
    return out;
}

HandlerResult handle_characters(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.q) throw std::invalid_argument("characters: need --q");
    auto pr = factor_prime_power(cfg.q);
    if (!pr) throw std::invalid_argument("characters: q must be a prime power");
    auto group = std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));

    HandlerResult out;
    json jchars = json::array();
    std::string header = "character,order,conductor,odd";
    for (auto a : group->elements()) header += ",a=" + std::to_string(a);
    out.csv_rows.push_back(header);
    for (const auto& chi : all_characters(group)) {
        if (cfg.odd_only && !chi.is_odd()) continue;
        json values = json::array();
        std::ostringstream line;
        line << chi.label() << ',' << chi.order() << ',' << chi.conductor() << ','
             << (chi.is_odd() ? "true" : "false");
        for (auto a : group->elements()) {
            std::string v = character_value_string(chi, a);
            values.push_back(json{{"a", a}, {"value", v}});
            line << ',' << v;
        }
        jchars.push_back(json{{"label", chi.label()},
                              {"exponents", chi.exponents()},
                              {"order", chi.order()},
                              {"conductor", chi.conductor()},
                              {"odd", chi.is_odd()},
                              {"values", values}});
        out.csv_rows.push_back(line.str());
    }
    out.payload["q"] = cfg.q;
    out.payload["characters"] = jchars;
    (void)checks;
    return out;
}

HandlerResult handle_gauss(const RunConfig& cfg, std::vector<CheckRecord>& checks) {
    if (!cfg.q) throw std::invalid_argument("gauss: need --q");
    auto pr = factor_prime_power(cfg.q);
    if (!pr) throw std::invalid_argument("gauss: q must be a prime power");
    auto group = std::make_shared<ResidueGroup>(ResidueGroup::build(pr->first, pr->second));

    HandlerResult out;
    json jsums = json::array();
    out.csv_rows.push_back("character,order,conductor,primitive,norm_check");
    for (const auto& chi : all_characters(group)) {
        GaussSumRecord rec = gauss_sum(chi);
        jsums.push_back(json{{"label", chi.label()},
                             {"order", chi.order()},
                             {"conductor", chi.conductor()},
                             {"primitive", chi.is_primitive()},
                             {"value", cyclo_json(rec.value)},
                             {"norm_check", rec.norm_check.to_string()}});
        out.csv_rows.push_back(chi.label() + "," + std::to_string(chi.order()) + "," +
                               std::to_string(chi.conductor()) + "," +
                               (chi.is_primitive() ? "true" : "false") + "," +
                               rec.norm_check.to_string());
        if (chi.is_primitive()) {
            bool ok = rec.norm_check == Rational(static_cast<long>(cfg.q));
            checks.push_back({"gauss.norm", chi.label(), ok ? "pass" : "fail",
                              ok ? "" : "norm " + rec.norm_check.to_string(), 0.0});
        } else {
            checks.push_back({"gauss.norm", chi.label(), "skipped", "imprimitive", 0.0});
        }
    }
    out.payload["q"] = cfg.q;
    out.payload["gauss_sums"] = jsums;
    return out;
}

}  // namespace

VerificationReport run(const RunConfig& config) {
    if (config.format != "json" && config.format != "csv" && config.format != "text")
        throw std::invalid_argument("format must be json, csv or text");
    if (config.jobs < 1) throw std::invalid_argument("jobs must be positive");

    VerificationReport report;
    report.config = config;
    report.version = kVersion;

    const auto started = std::chrono::steady_clock::now();
    HandlerResult hr;
    if (config.subcommand == "center") hr = handle_center(config, report.checks);
    else if (config.subcommand == "table") hr = handle_table(config, report.checks);
    else if (config.subcommand == "verify-fourier") hr = handle_verify_fourier(config, report.checks);
    else if (config.subcommand == "verify-tower") hr = handle_verify_tower(config, report.checks);
    else if (config.subcommand == "classnum") hr = handle_classnum(config, report.checks);
    else if (config.subcommand == "characters") hr = handle_characters(config, report.checks);
    else if (config.subcommand == "gauss") hr = handle_gauss(config, report.checks);
    else throw std::invalid_argument("unknown subcommand '" + config.subcommand + "'");
    const double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();

    for (const auto& c : report.checks) {
        if (c.status == "pass") ++report.n_pass;
        else if (c.status == "fail") ++report.n_fail;
        else ++report.n_skip;
    }
    report.exit_code = report.n_fail == 0 ? 0 : 1;

    json checks = json::array();
    json witnesses = json::array();
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["params"] = c.params;
        jc["status"] = c.status;
        if (!c.witness.empty()) jc["witness"] = c.witness;
        checks.push_back(jc);
        if (c.status == "fail") witnesses.push_back(c.name + " " + c.params + ": " + c.witness);
    }

    json j;
    j["version"] = kVersion;
    j["config"] = config_json(config);
    for (auto& [key, value] : hr.payload.items()) j[key] = value;
    j["checks"] = checks;
    j["witnesses"] = witnesses;
    j["summary"] = json{{"pass", report.n_pass}, {"fail", report.n_fail}, {"skipped", report.n_skip}};
    // floats are confined to numeric_* fields, with their precision recorded
    if (config.timings)
        j["numeric_timings"] = json{{"wall_ms", total_ms}, {"precision_bits", 53}};

    if (config.format == "json") {
        report.output = j.dump(2) + "\n";
    } else if (config.format == "csv") {
        std::ostringstream os;
        if (!hr.csv_rows.empty()) {
            for (const auto& line : hr.csv_rows) os << line << "\n";
        } else {
            os << "name,params,status,witness\n";
            for (const auto& c : report.checks)
                os << c.name << ',' << c.params << ',' << c.status << ',' << c.witness << "\n";
        }
        os << "# summary pass=" << report.n_pass << " fail=" << report.n_fail
           << " skipped=" << report.n_skip << "\n";
        report.output = os.str();
    } else {
        std::ostringstream os;
        os << kVersion << " " << config.subcommand << "\n";
        for (const auto& c : report.checks) {
            os << "  [" << c.status << "] " << c.name << " " << c.params;
            if (!c.witness.empty()) os << "  (" << c.witness << ")";
            os << "\n";
        }
        os << "summary: pass=" << report.n_pass << " fail=" << report.n_fail
           << " skipped=" << report.n_skip << "\n";
        report.output = os.str();
    }
    return report;
}

}  // namespace cyclohodge
