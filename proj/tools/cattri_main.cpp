// cattri: exact combinatorics engine over the Catalan triangle.
//
// Subcommands:
//   compute     evaluate one object (tables, sequences, sums, path counts)
//   verify      run identity/divisibility sweeps from the claim catalog
//   oeis-check  compare generated sequences against bundled b-file snapshots
//
// Exit codes: 0 success / all claims pass, 1 a sweep or snapshot check
// found a mismatch, 2 usage or I/O error. Output is JSON lines by
// default; --format csv switches to CSV with a header row.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cattri/combinatorics.hpp"
#include "cattri/lattice.hpp"
#include "cattri/msum.hpp"
#include "cattri/oeis.hpp"
#include "cattri/records.hpp"
#include "cattri/verify.hpp"

namespace {

using namespace cattri;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long require_param(const std::optional<long>& v, const char* flag) {
    if (!v) throw usage_error(std::string("missing required option ") + flag);
    return *v;
}

void emit(const table_record& t, const std::string& format) {
    if (format == "csv")
        std::cout << to_csv(t);
    else
        std::cout << to_json_line(t) << "\n";
}

void emit(const sequence_record& s, const std::string& format) {
    if (format == "csv")
        std::cout << to_csv(s);
    else
        std::cout << to_json_line(s) << "\n";
}

void emit(const std::vector<verification_report>& reports,
          const std::string& format) {
    if (format == "csv") {
        std::cout << report_csv_header();
        for (const auto& r : reports) std::cout << to_csv_row(r);
    } else {
        for (const auto& r : reports) std::cout << to_json_line(r) << "\n";
    }
}

table_record value_table(const std::string& name, const Int& value) {
    return {name, {"value"}, {{to_decimal(value)}}};
}

kernel parse_kernel(const std::string& name, long a) {
    if (name == "S") return kernel_s();
    if (name == "Q") return kernel_q(a);
    if (name == "S1") return kernel_s1();
    if (name == "S2") return kernel_s2();
    throw usage_error("unknown kernel " + name + " (expected S, Q, S1, or S2)");
}

// A sequence object renders either as a single value (--n) or as the
// prefix 0..n_max (--n-max).
void emit_sequence_object(const std::string& name, const std::function<Int(long)>& f,
                          const std::optional<long>& n,
                          const std::optional<long>& n_max,
                          const std::string& format) {
    if (n && n_max) throw usage_error("give either --n or --n-max, not both");
    if (n) {
        emit(value_table(name, f(*n)), format);
        return;
    }
    if (!n_max) throw usage_error("missing required option --n or --n-max");
    sequence_record s;
    s.name = name;
    for (long i = 0; i <= *n_max; ++i)
        s.entries.emplace_back(std::to_string(i), to_decimal(f(i)));
    emit(s, format);
}

int cmd_compute(const std::string& object, const std::string& format,
                const std::optional<long>& rows, const std::optional<long>& n,
                const std::optional<long>& n_max, const std::optional<long>& m,
                const std::optional<long>& j, const std::optional<long>& t,
                const std::optional<long>& a, const std::optional<long>& l,
                const std::string& kernel_name, const std::optional<long>& x,
                const std::optional<long>& y, const std::string& side,
                bool diagonal, long cap) {
    if (object == "triangle") {
        long r = require_param(rows, "--rows");
        auto tri = catalan_triangle(r);
        table_record rec;
        rec.name = "triangle";
        for (long c = 0; c <= r; ++c) rec.columns.push_back("c" + std::to_string(c));
        for (const auto& row : tri) {
            std::vector<std::string> cells;
            for (const auto& v : row) cells.push_back(to_decimal(v));
            rec.rows.push_back(std::move(cells));
        }
        emit(rec, format);
        return 0;
    }
    if (object == "catalan") {
        emit_sequence_object("catalan", [](long i) { return catalan(i); }, n, n_max,
                             format);
        return 0;
    }
    if (object == "fuss3") {
        emit_sequence_object("fuss3", [](long i) { return fuss_catalan3(i); }, n,
                             n_max, format);
        return 0;
    }
    if (object == "central") {
        emit_sequence_object("central", [](long i) { return central_binomial(i); },
                             n, n_max, format);
        return 0;
    }
    if (object == "tnum") {
        emit(value_table("tnum", t_number(require_param(n, "--n"),
                                          require_param(j, "--j"))),
             format);
        return 0;
    }
    if (object == "ssum") {
        emit(value_table("ssum",
                         direct_sum_s(require_param(n, "--n"), m.value_or(1))),
             format);
        return 0;
    }
    if (object == "msum") {
        msum_query q;
        q.f = parse_kernel(kernel_name, a.value_or(0));
        q.n = require_param(n, "--n");
        q.j = j.value_or(0);
        q.t = t.value_or(0);
        emit(value_table("msum", msum(q)), format);
        return 0;
    }
    if (object == "schr") {
        emit(value_table("schr",
                         count_schroeder(require_param(n, "--n"),
                                         require_param(m, "--m"), j.value_or(0),
                                         l.value_or(2))),
             format);
        return 0;
    }
    if (object == "schr-closed") {
        emit(value_table("schr-closed",
                         schr_closed_form(require_param(n, "--n"),
                                          require_param(m, "--m"), j.value_or(0),
                                          l.value_or(2))),
             format);
        return 0;
    }
    if (object == "schr-total") {
        emit(value_table("schr-total",
                         schr_total(require_param(n, "--n"),
                                    require_param(m, "--m"), l.value_or(2))),
             format);
        return 0;
    }
    if (object == "paths") {
        path_problem p;
        p.x = require_param(x, "--x");
        p.y = require_param(y, "--y");
        p.slope = l.value_or(1);
        p.boundary = side == "below" ? boundary_kind::at_most_inverse_slope
                                     : boundary_kind::at_least_slope;
        p.diag = diagonal;
        if (j) p.east_steps = *j;
        table_record rec;
        rec.name = "paths";
        rec.columns = {"path"};
        for (auto& s : enumerate_paths(p, cap)) rec.rows.push_back({std::move(s)});
        emit(rec, format);
        return 0;
    }
    throw usage_error(
        "unknown compute object " + object +
        " (expected triangle, catalan, fuss3, central, tnum, ssum, msum, schr, "
        "schr-closed, schr-total, or paths)");
}

int cmd_verify(const std::vector<std::string>& claims, const sweep_options& opt,
               const std::string& format) {
    std::vector<std::string> ids;
    if (claims.size() == 1 && claims[0] == "all") {
        ids = claim_ids();
    } else {
        for (const auto& c : claims) {
            if (!is_claim_id(c))
                throw usage_error("unknown claim id " + c +
                                  " (run with --seed-manifest to list claims)");
            ids.push_back(c);
        }
    }
    auto reports = run_claims(ids, opt);
    emit(reports, format);
    for (const auto& r : reports)
        if (!r.pass()) return 1;
    return 0;
}

int cmd_oeis_check(const std::string& id, long n_max, std::string data_dir,
                   const std::string& format) {
    const std::function<Int(long)>* generator = nullptr;
    for (const auto& [known, gen] : oeis_generators())
        if (known == id) generator = &gen;
    if (!generator)
        throw usage_error("unknown sequence " + id +
                          " (expected A000108, A001764, or A000984)");

    if (data_dir.empty()) {
        if (const char* env = std::getenv("CATTRI_DATA_DIR")) data_dir = env;
        if (data_dir.empty()) data_dir = "data";
    }
    auto snapshot = load_bfile(data_dir + "/" + id + ".bfile", id);
    auto result = check_sequence(snapshot, *generator, n_max);

    verification_report r;
    r.claim = id;
    r.description = "generated sequence agrees with the bundled snapshot";
    r.ranges = {{"index", "0.." + std::to_string(n_max)}};
    r.instances = result.compared;
    for (const auto& mm : result.mismatches)
        r.counterexamples.push_back({{{"index", std::to_string(mm.index)}},
                                     mm.snapshot_value,
                                     mm.computed_value});
    if (result.truncated)
        r.note = "snapshot shorter than requested range; compared the available prefix";
    emit(std::vector<verification_report>{r}, format);
    return r.pass() ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{
        "cattri: exact Catalan-triangle combinatorics, weighted alternating "
        "sums, lattice-path counting, and identity verification"};
    app.require_subcommand(0, 1);
    bool seed_manifest = false;
    app.add_flag("--seed-manifest", seed_manifest,
                 "print the claim catalog (id, statement, default ranges) as "
                 "JSON lines and exit");

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate one object");
    std::string object, format = "json", kernel_name = "S", side = "above";
    std::optional<long> rows, n, n_max, m, j, t, a, l, x, y;
    bool diagonal = true;
    long cap = 4096;
    compute->add_option("object", object,
                        "one of triangle, catalan, fuss3, central, tnum, ssum, "
                        "msum, schr, schr-closed, schr-total, paths")
        ->required();
    compute->add_option("--rows", rows, "triangle: highest row");
    compute->add_option("--n", n, "primary index");
    compute->add_option("--n-max", n_max, "sequence objects: emit indices 0..n-max");
    compute->add_option("--m", m, "weight exponent or target height");
    compute->add_option("--j", j, "column / east-step statistic");
    compute->add_option("--t", t, "msum weight level");
    compute->add_option("--a", a, "Q kernel weight parameter");
    compute->add_option("--l", l, "boundary slope");
    compute->add_option("--kernel", kernel_name, "msum kernel: S, Q, S1, or S2");
    compute->add_option("--x", x, "paths: target x");
    compute->add_option("--y", y, "paths: target y");
    compute->add_option("--side", side, "paths: above = stay on/above y=l*x, below = stay on/below y=x/l")
        ->check(CLI::IsMember({"above", "below"}));
    compute->add_flag("--diag,!--no-diag", diagonal,
                      "paths: allow the (1,1) step (default on)");
    compute->add_option("--cap", cap, "paths: refuse listings larger than this");
    compute->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run claim sweeps");
    std::vector<std::string> claims;
    std::string vformat = "json";
    std::optional<long> v_n_max, v_m_max, v_t_max, v_a_max, v_l, v_j;
    verify->add_option("claims", claims, "claim ids, or \"all\"")->required();
    verify->add_option("--n-max", v_n_max, "override the claim's n range");
    verify->add_option("--m-max", v_m_max,
                       "override the m range (path claims: rows above m = l*n)");
    verify->add_option("--t-max", v_t_max, "override the t range");
    verify->add_option("--a-max", v_a_max, "override the a range");
    verify->add_option("--l", v_l, "pin the path-claim slope set to one value");
    verify->add_option("--j", v_j, "pin swept j to one value");
    verify->add_option("--format", vformat, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // oeis-check
    auto* oeis = app.add_subcommand(
        "oeis-check", "compare a generated sequence against its bundled snapshot");
    std::string sequence_id, data_dir;
    std::string oformat = "json";
    long o_n_max = 100;
    oeis->add_option("sequence", sequence_id, "A000108, A001764, or A000984")
        ->required();
    oeis->add_option("--n-max", o_n_max, "highest index to compare (default 100)");
    oeis->add_option("--data-dir", data_dir,
                     "snapshot directory (default: $CATTRI_DATA_DIR, then ./data)");
    oeis->add_option("--format", oformat, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (seed_manifest) {
        for (const auto& c : claim_catalog()) {
            ordered_json line;
            line["kind"] = "claim";
            line["id"] = c.id;
            line["statement"] = c.statement;
            line["defaults"] = ordered_json::object();
            for (const auto& [k, v] : c.defaults) line["defaults"][k] = v;
            std::cout << line.dump() << "\n";
        }
        return 0;
    }

    if (compute->parsed())
        return cmd_compute(object, format, rows, n, n_max, m, j, t, a, l,
                           kernel_name, x, y, side, diagonal, cap);
    if (verify->parsed()) {
        sweep_options opt;
        opt.n_max = v_n_max;
        opt.m_max = v_m_max;
        opt.t_max = v_t_max;
        opt.a_max = v_a_max;
        opt.l = v_l;
        opt.j = v_j;
        return cmd_verify(claims, opt, vformat);
    }
    if (oeis->parsed()) return cmd_oeis_check(sequence_id, o_n_max, data_dir, oformat);

    std::cerr << app.help();
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const usage_error& e) {
        std::cerr << "cattri: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cattri: " << e.what() << "\n";
        return 2;
    }
}
