// Command-line surface for the PG(3,q) X-ray transform toolkit: census
// checks, DRQ enumeration, transforms, and admissibility decisions, with
// machine-readable reports.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <thread>

#include "pg3xray/admissibility.hpp"
#include "pg3xray/json_io.hpp"
#include "pg3xray/rng.hpp"

using namespace pg3xray;

namespace {

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass;
};

struct Report {
    std::string command;
    json field;
    std::vector<CheckRecord> checks;
    json extra = json::object();

    void add(const std::string& name, const mpz_class& expected,
             const mpz_class& actual) {
        checks.push_back({name, expected.get_str(), actual.get_str(),
                          expected == actual});
    }
    void add(const std::string& name, int64_t expected, int64_t actual) {
        add(name, mpz_class((long)expected), mpz_class((long)actual));
    }
    void add_bool(const std::string& name, bool pass) {
        checks.push_back({name, "true", pass ? "true" : "false", pass});
    }
    void note(const std::string& name, const std::string& value) {
        checks.push_back({name, value, value, true});
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    int emit(const std::string& format, double wall_ms) const {
        if (format == "table") {
            std::cout << "command: " << command << "\n";
            for (const auto& c : checks)
                std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name
                          << "  expected=" << c.expected
                          << "  actual=" << c.actual << "\n";
            std::cout << "wall_time_ms: " << wall_ms << "\n";
        } else {
            json j;
            j["command"] = command;
            j["field"] = field;
            j["checks"] = json::array();
            for (const auto& c : checks)
                j["checks"].push_back({{"name", c.name},
                                       {"expected", c.expected},
                                       {"actual", c.actual},
                                       {"pass", c.pass}});
            for (auto& [k, v] : extra.items()) j[k] = v;
            j["wall_time_ms"] = wall_ms;
            j["pass"] = all_pass();
            std::cout << j.dump(2) << "\n";
        }
        return all_pass() ? 0 : 1;
    }
};

struct FieldOpts {
    int q = 0, p = 0, k = 0;

    Field resolve() const {
        if (q > 0) {
            // factor a prime power
            for (int base = 2; base <= q; ++base) {
                if (!is_prime(base) || q % base != 0) continue;
                int deg = 0, rest = q;
                while (rest % base == 0) {
                    rest /= base;
                    ++deg;
                }
                if (rest != 1) break;
                return Field::make(base, deg);
            }
            throw NotPrime("--q must be a prime power");
        }
        if (p > 0) return Field::make(p, k > 0 ? k : 1);
        throw Error("a field is required: --q N or --p P [--k K]");
    }
};

void add_field_opts(CLI::App* cmd, FieldOpts& fo) {
    cmd->add_option("--q", fo.q, "field order (prime power)");
    cmd->add_option("--p", fo.p, "prime characteristic");
    cmd->add_option("--k", fo.k, "extension degree");
}

void write_or_print(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) throw Error("cannot open output file: " + out);
        f << j.dump(2) << "\n";
    }
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error("cannot open input file: " + path);
    return json::parse(f);
}

// ---- verify subchecks ------------------------------------------------

void verify_triads(const Geometry& g, Report& r) {
    const int64_t q = g.q();
    auto c = g.incidence_counts();
    r.add("lines_per_point", q * q + q + 1, c.per_point);
    r.add("points_per_line", q + 1, c.per_line);
    r.add("skew_per_line", q * q * q * q, c.skew_per_line);

    int64_t expected_ext = q * (q + 1) * (q - 1) * (q - 1);
    int checked = 0;
    for (int a = 0; a < g.num_lines() && checked < 10; ++a)
        for (int b = a + 1; b < g.num_lines() && checked < 10; ++b) {
            if (g.relation(a, b) != Relation::Skew) continue;
            r.add("triad_extensions[" + std::to_string(a) + "," +
                      std::to_string(b) + "]",
                  expected_ext, count_triad_extensions(g, a, b));
            ++checked;
        }
}

void verify_drq_count(const Geometry& g, int threads, Report& r) {
    int64_t count = 0;
    std::vector<int64_t> per_thread(std::max(threads, 1), 0);
    enumerate_drqs(
        g, [&](int t, const Drq&) { ++per_thread[t]; }, threads);
    for (int64_t c : per_thread) count += c;
    r.add("drq_count", drq_count_formula(g.q()), count);
}

void verify_cavalieri(const Geometry& g, int threads, Report& r,
                      const std::string& emit_matrix) {
    IntMatrix formula = cavalieri_from_formula(g);
    IntMatrix from_drqs = cavalieri_from_drqs(g, threads);
    r.add_bool("cavalieri_entrywise_equal", formula == from_drqs);
    if (!emit_matrix.empty()) {
        json rows = json::array();
        for (int i = 0; i < formula.rows; ++i) {
            json row = json::array();
            for (int j = 0; j < formula.cols; ++j)
                row.push_back(formula.at(i, j).get_str());
            rows.push_back(row);
        }
        write_or_print({{"matrix", rows}}, emit_matrix);
    }
}

void verify_projection(const Geometry& g, Report& r) {
    IntMatrix b = cavalieri_from_formula(g);
    auto pr = verify_scaled_projection(g, b);
    const auto e = CavalieriEntries::for_q(g.q());
    r.add("v", e.v, pr.v);
    r.add("c_equal", e.v * e.b_equal, pr.c_equal);
    r.add("c_meet", e.v * e.b_meet, pr.c_meet);
    r.add("c_skew", e.v * e.b_skew, pr.c_skew);
}

void verify_rank(const Geometry& g, bool elimination, Report& r) {
    const int64_t q = g.q();
    IntMatrix b = cavalieri_from_formula(g);
    auto rr = cavalieri_rank(g, b, elimination);
    r.add("rank_trace", q * q * q * q + q * q, rr.trace_rank);
    if (rr.elim_rank)
        r.add("rank_elimination", q * q * q * q + q * q, *rr.elim_rank);
}

void verify_span(const Geometry& g, int threads, Report& r) {
    auto drqs = enumerate_drqs(g, threads);
    auto sk = drq_span_equals_dual_kernel(g, drqs);
    const int64_t q = g.q();
    r.add("drq_span_dim", q * q * q * q + q * q, sk.span_dim);
    r.add("dual_kernel_dim", q * q * q * q + q * q, sk.kernel_dim);
    r.add("drq_vectors_annihilated", sk.total_drqs, sk.annihilated);
}

void verify_remark1(const Geometry& g, int threads, Report& r) {
    auto drqs = enumerate_drqs(g, threads);
    auto pr = drqs_through_point(g, drqs);
    const int64_t q = g.q();
    // 2 * (DRQs per point) = q^2 * v
    r.add("two_times_drqs_per_point", mpz_class(q) * q * pr.v,
          mpz_class(2) * pr.per_point);
    r.note("drqs_per_point", std::to_string(pr.per_point));
    r.note("v", pr.v.get_str());
}

void verify_remark2(const Geometry& g, Report& r) {
    auto sp = incidence_gram_spectrum(g);
    const int64_t q = g.q();
    r.add("gram_ev_constants", (q + 1) * (q * q + q + 1),
          sp.ev_constants);
    r.add("gram_mult_constants", 1, sp.mult_constants);
    r.add("gram_mult_projection", g.num_points() - 1, sp.mult_projection);
    r.add("gram_mult_zero", g.num_lines() - g.num_points(), sp.mult_zero);
    r.note("remark2_rank_claim",
           "computed projection multiplicity is P-1, not L-1");
}

void verify_theorem2(const Geometry& g, int threads, int samples,
                     uint64_t seed, Report& r) {
    auto drqs = enumerate_drqs(g, threads);
    auto basis = drq_span_basis(g, drqs);
    int64_t agree = 0, admissible = 0;
    bool nullities_ok = true;
    for (int i = 0; i < samples; ++i) {
        LineComplex L = random_complex(g, seed + (uint64_t)i);
        auto rank_verdict = is_admissible(g, L);
        auto support = supports_drq_combination(g, basis, L);
        if (rank_verdict.admissible == !support.combination.has_value()) ++agree;
        if (rank_verdict.admissible) ++admissible;
        if (support.nullity != g.num_points() - rank_verdict.rank)
            nullities_ok = false;
    }
    r.add("theorem2_agreement", samples, agree);
    r.add_bool("nullities_match", nullities_ok);
    r.note("admissible_fraction",
           std::to_string(admissible) + "/" + std::to_string(samples));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact X-ray transform toolkit for PG(3,q)"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (results independent of N)");

    // counts
    FieldOpts counts_field;
    auto* counts = app.add_subcommand("counts", "point/line/DRQ census");
    add_field_opts(counts, counts_field);

    // verify
    FieldOpts verify_field;
    auto* verify = app.add_subcommand("verify", "run lemma-level checks");
    add_field_opts(verify, verify_field);
    std::string lemma;
    bool all = false;
    verify->add_option("--lemma", lemma,
                       "triads|drq-count|cavalieri|projection|rank|span|"
                       "remark1|remark2|theorem2");
    verify->add_flag("--all", all, "run every check");
    bool skip_elim = false;
    verify->add_flag("--skip-elimination", skip_elim,
                     "rank check via trace only");
    int t2_samples = 100;
    verify->add_option("--samples", t2_samples, "theorem2 sample count");
    uint64_t verify_seed = 0;
    verify->add_option("--seed", verify_seed, "theorem2 base seed");
    std::string emit_matrix;
    verify->add_option("--emit-matrix", emit_matrix,
                       "write the Cavalieri matrix (dense JSON) here");

    // drq enumerate / fit
    auto* drq_cmd = app.add_subcommand("drq", "DRQ operations");
    drq_cmd->require_subcommand(1);
    FieldOpts drq_field;
    auto* drq_enum = drq_cmd->add_subcommand("enumerate", "list all DRQs");
    add_field_opts(drq_enum, drq_field);
    std::string drq_out;
    drq_enum->add_option("--out", drq_out, "output file");
    auto* drq_fit = drq_cmd->add_subcommand("fit", "quadratic form of a DRQ");
    FieldOpts fit_field;
    add_field_opts(drq_fit, fit_field);
    int64_t fit_index = 0;
    drq_fit->add_option("--index", fit_index, "DRQ index in canonical order");

    // transform forward/dual/invert
    auto* tf = app.add_subcommand("transform", "apply the transform");
    tf->require_subcommand(1);
    FieldOpts tf_field;
    std::string tf_in, tf_out, tf_complex;
    auto* tf_fwd = tf->add_subcommand("forward", "xray of a point function");
    add_field_opts(tf_fwd, tf_field);
    tf_fwd->add_option("--in", tf_in, "point function JSON")->required();
    tf_fwd->add_option("--out", tf_out, "output file");
    tf_fwd->add_option("--complex", tf_complex, "restrict to a complex file");
    auto* tf_dual = tf->add_subcommand("dual", "dual xray of a line function");
    add_field_opts(tf_dual, tf_field);
    tf_dual->add_option("--in", tf_in, "line function JSON")->required();
    tf_dual->add_option("--out", tf_out, "output file");
    auto* tf_inv = tf->add_subcommand("invert", "invert over the full line set");
    add_field_opts(tf_inv, tf_field);
    tf_inv->add_option("--in", tf_in, "line function JSON")->required();
    tf_inv->add_option("--out", tf_out, "output file");

    // admissible check/search/sample/embed-drq
    auto* adm = app.add_subcommand("admissible", "line complex admissibility");
    adm->require_subcommand(1);
    FieldOpts adm_field;
    std::string adm_complex, adm_out;
    uint64_t adm_seed = 0;
    int adm_count = 100;
    auto* adm_check = adm->add_subcommand("check", "decide admissibility");
    add_field_opts(adm_check, adm_field);
    adm_check->add_option("--complex", adm_complex, "complex file")->required();
    auto* adm_search = adm->add_subcommand("search", "greedy admissible complex");
    add_field_opts(adm_search, adm_field);
    adm_search->add_option("--seed", adm_seed, "shuffle seed");
    adm_search->add_option("--out", adm_out, "output file");
    auto* adm_sample = adm->add_subcommand("sample", "admissibility statistics");
    add_field_opts(adm_sample, adm_field);
    adm_sample->add_option("--seed", adm_seed, "base seed");
    adm_sample->add_option("--count", adm_count, "number of samples");
    auto* adm_embed = adm->add_subcommand("embed-drq",
                                          "complex containing a full DRQ");
    add_field_opts(adm_embed, adm_field);
    int64_t embed_index = 0;
    adm_embed->add_option("--index", embed_index, "DRQ index");
    adm_embed->add_option("--seed", adm_seed, "padding seed");
    adm_embed->add_option("--out", adm_out, "output file");

    // geometry dump
    auto* geom = app.add_subcommand("geometry", "geometry operations");
    geom->require_subcommand(1);
    auto* geom_dump = geom->add_subcommand("dump", "canonical geometry dump");
    FieldOpts geom_field;
    add_field_opts(geom_dump, geom_field);
    std::string geom_out;
    geom_dump->add_option("--out", geom_out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (threads < 1) threads = 1;
    const auto start = std::chrono::steady_clock::now();
    auto wall_ms = [&] {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    try {
        if (counts->parsed()) {
            Field f = counts_field.resolve();
            Geometry g = Geometry::build(f);
            const int64_t q = g.q();
            Report r{"counts", field_to_json(f)};
            r.add("points", q * q * q + q * q + q + 1, g.num_points());
            r.add("lines", (q * q + 1) * (q * q + q + 1), g.num_lines());
            verify_triads(g, r);
            if (q <= 3) {
                verify_drq_count(g, threads, r);
            } else {
                r.note("drq_count_formula",
                       std::to_string(drq_count_formula(q)));
            }
            return r.emit(format, wall_ms());
        }

        if (verify->parsed()) {
            Field f = verify_field.resolve();
            Geometry g = Geometry::build(f);
            Report r{"verify", field_to_json(f)};
            if (!all && lemma.empty())
                throw Error("verify needs --lemma or --all");
            auto want = [&](const char* name) {
                return all || lemma == name;
            };
            if (want("triads")) verify_triads(g, r);
            if (want("drq-count")) verify_drq_count(g, threads, r);
            if (want("cavalieri")) verify_cavalieri(g, threads, r, emit_matrix);
            if (want("projection")) verify_projection(g, r);
            if (want("rank")) verify_rank(g, !skip_elim, r);
            if (want("span")) verify_span(g, threads, r);
            if (want("remark1")) verify_remark1(g, threads, r);
            if (want("remark2")) verify_remark2(g, r);
            if (want("theorem2"))
                verify_theorem2(g, threads, t2_samples, verify_seed, r);
            if (r.checks.empty()) throw Error("unknown --lemma value: " + lemma);
            return r.emit(format, wall_ms());
        }

        if (drq_enum->parsed()) {
            Field f = drq_field.resolve();
            Geometry g = Geometry::build(f, 5);
            auto drqs = enumerate_drqs(g, threads);
            json arr = json::array();
            for (const auto& d : drqs) arr.push_back(drq_to_json(d));
            write_or_print({{"field", field_to_json(f)},
                            {"count", drqs.size()},
                            {"count_formula", drq_count_formula(g.q())},
                            {"drqs", arr}},
                           drq_out);
            return drqs.size() == (size_t)drq_count_formula(g.q()) ? 0 : 1;
        }

        if (drq_fit->parsed()) {
            Field f = fit_field.resolve();
            Geometry g = Geometry::build(f, 5);
            auto drqs = enumerate_drqs(g, threads);
            if (fit_index < 0 || fit_index >= (int64_t)drqs.size())
                throw Error("--index out of range");
            auto form = quadric_fit(g, drqs[fit_index]);
            json j = {{"field", field_to_json(f)},
                      {"index", fit_index},
                      {"drq", drq_to_json(drqs[fit_index])},
                      {"form", form},
                      {"monomials",
                       {"x0^2", "x0x1", "x0x2", "x0x3", "x1^2", "x1x2",
                        "x1x3", "x2^2", "x2x3", "x3^2"}}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (tf_fwd->parsed() || tf_dual->parsed() || tf_inv->parsed()) {
            Field f = tf_field.resolve();
            Geometry g = Geometry::build(f);
            json in = load_json(tf_in);
            if (tf_fwd->parsed()) {
                PointFunction pf = point_function_from_json(in);
                LineFunction out;
                if (tf_complex.empty()) {
                    out = xray_full(g, pf);
                } else {
                    LineComplex L = complex_from_json(g, load_json(tf_complex));
                    out = xray(g, pf, L.lines);
                }
                write_or_print(line_function_to_json(out), tf_out);
            } else if (tf_dual->parsed()) {
                PointFunction out = dual_xray(g, line_function_from_json(in));
                write_or_print(point_function_to_json(out), tf_out);
            } else {
                PointFunction out = bolker_invert(g, line_function_from_json(in));
                write_or_print(point_function_to_json(out), tf_out);
            }
            return 0;
        }

        if (adm_check->parsed()) {
            Field f = adm_field.resolve();
            Geometry g = Geometry::build(f);
            LineComplex L = complex_from_json(g, load_json(adm_complex));
            auto v = is_admissible(g, L);
            json j = verdict_to_json(v);
            j["field"] = field_to_json(f);
            std::cout << j.dump(2) << "\n";
            return v.admissible ? 0 : 1;
        }

        if (adm_search->parsed()) {
            Field f = adm_field.resolve();
            Geometry g = Geometry::build(f);
            LineComplex L = search_admissible(g, adm_seed);
            auto v = is_admissible(g, L);
            json j = complex_to_json(g, L);
            j["seed"] = adm_seed;
            j["rng"] = Rng::name();
            j["admissible"] = v.admissible;
            write_or_print(j, adm_out);
            return v.admissible ? 0 : 1;
        }

        if (adm_sample->parsed()) {
            Field f = adm_field.resolve();
            Geometry g = Geometry::build(f);
            int64_t admissible = 0;
            for (int i = 0; i < adm_count; ++i)
                if (is_admissible(g, random_complex(g, adm_seed + (uint64_t)i))
                        .admissible)
                    ++admissible;
            json j = {{"field", field_to_json(f)},
                      {"rng", Rng::name()},
                      {"seed", adm_seed},
                      {"samples", adm_count},
                      {"admissible", admissible},
                      {"wall_time_ms", wall_ms()}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (adm_embed->parsed()) {
            Field f = adm_field.resolve();
            Geometry g = Geometry::build(f, 5);
            auto drqs = enumerate_drqs(g, threads);
            if (embed_index < 0 || embed_index >= (int64_t)drqs.size())
                throw Error("--index out of range");
            LineComplex L = embed_drq_complex(g, drqs[embed_index], adm_seed);
            json j = complex_to_json(g, L);
            j["drq"] = drq_to_json(drqs[embed_index]);
            write_or_print(j, adm_out);
            return 0;
        }

        if (geom_dump->parsed()) {
            Field f = geom_field.resolve();
            Geometry g = Geometry::build(f);
            write_or_print(geometry_to_json(g), geom_out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
