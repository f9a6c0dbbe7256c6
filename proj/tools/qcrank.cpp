// Command-line frontend: one subcommand per pipeline stage so a failing
// verification can be bisected. Exit codes: 0 success / proven, 1
// mathematical failure (named counterexample), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcrank/crank_gf.hpp"
#include "qcrank/json_io.hpp"
#include "qcrank/modular_cert.hpp"
#include "qcrank/partition_oracle.hpp"
#include "qcrank/qseries.hpp"

namespace {

using namespace qcrank;

constexpr int kExitProven = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_int_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

struct Output {
    std::string format = "human";
    std::string path;  // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw CLI::ValidationError("cannot open output file " + path);
        file << text;
    }

    void emit_json(const Json& j) const { emit(j.dump(2) + "\n"); }
};

void add_output_flags(CLI::App* cmd, Output& out, std::vector<std::string> formats) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
    cmd->add_option("--out", out.path, "Write the report to a file instead of stdout");
}

std::string join(const std::vector<long>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// ---------------------------------------------------------------- verify

int run_verify(long t, long nmax, unsigned jobs, const Output& out) {
    const VerificationReport report = verify_theorem(t, nmax, jobs);
    if (out.format == "json") {
        out.emit_json(report_json(report));
    } else {
        std::ostringstream os;
        os << "t = " << report.t << ", direct check bound n <= " << report.direct_check_bound
           << "\n";
        os << "explained classes:   {" << join(report.explained, ", ") << "}\n";
        os << "published classes:   {" << join(report.theorem_list, ", ") << "}\n";
        os << "vanishing, no crank: {" << join(report.unexplained_vanishing, ", ") << "}\n";
        for (const auto& cert : report.certificates)
            os << "certificate beta=" << cert.tuple.beta << ": "
               << (cert.proven ? "proven" : "FAILED: " + cert.failure)
               << " (nu = " << to_fraction(cert.nu) << ", floor " << cert.nu_floor << ")\n";
        os << "theorem match: " << (report.theorem_match ? "yes" : "NO") << "\n";
        out.emit(os.str());
    }
    const bool ok = report.theorem_match && report.all_certificates_proven();
    if (!ok && out.format != "json") {
        for (const auto& cert : report.certificates)
            if (!cert.proven) std::cerr << "certificate failure: " << cert.failure << "\n";
    }
    return ok ? kExitProven : kExitMathFailure;
}

// ---------------------------------------------------------------- certify

int run_certify(const RaduTuple& tuple, const AVector& a, const Output& out) {
    const Certificate cert = certify(tuple, a);
    if (out.format == "json") {
        out.emit_json(certificate_json(cert));
    } else {
        std::ostringstream os;
        os << "tuple (" << tuple.alpha << ", " << tuple.level() << ", " << tuple.N << ", ("
           << join(tuple.r.exponents(), ",") << "), " << tuple.beta << ")\n";
        os << "orbit {" << join(cert.orbit, ", ") << "}, beta_min " << cert.beta_min << "\n";
        os << "nu = " << to_fraction(cert.nu) << ", floor " << cert.nu_floor << "\n";
        os << "verdict: " << (cert.proven ? "proven" : "failed — " + cert.failure) << "\n";
        out.emit(os.str());
    }
    return cert.proven ? kExitProven : kExitMathFailure;
}

// ---------------------------------------------------------------- orbit / cusps

int run_orbit(const RaduTuple& tuple, const Output& out) {
    const auto orb = orbit(tuple);
    if (out.format == "json") {
        Json j;
        j["tuple"] = tuple_json(tuple);
        Json arr = Json::array();
        for (long b : orb) arr.push_back(std::to_string(b));
        j["orbit"] = arr;
        out.emit_json(j);
    } else if (out.format == "tsv") {
        std::string s;
        for (long b : orb) s += std::to_string(b) + "\n";
        out.emit(s);
    } else {
        out.emit("P(" + std::to_string(tuple.beta) + ") = {" + join(orb, ", ") + "}\n");
    }
    return kExitProven;
}

int run_cusps(long N, const Output& out) {
    const auto cusps = cusp_representatives(N);
    const auto reps = coset_reps(N);
    if (out.format == "json") {
        Json j;
        j["N"] = std::to_string(N);
        j["index"] = std::to_string(index_gamma0(N));
        j["cusp_count"] = std::to_string(cusp_count(N));
        Json cu = Json::array();
        for (const auto& c : cusps)
            cu.push_back(std::to_string(c.a) + "/" + std::to_string(c.c));
        j["cusps"] = cu;
        Json rp = Json::array();
        for (const auto& m : reps)
            rp.push_back(Json::array({std::to_string(m.a), std::to_string(m.b),
                                      std::to_string(m.c), std::to_string(m.d)}));
        j["reps"] = rp;
        out.emit_json(j);
    } else if (out.format == "tsv") {
        std::string s;
        for (const auto& m : reps)
            s += std::to_string(m.a) + "\t" + std::to_string(m.b) + "\t" + std::to_string(m.c) +
                 "\t" + std::to_string(m.d) + "\n";
        out.emit(s);
    } else {
        std::ostringstream os;
        os << "[Gamma : Gamma_0(" << N << ")] = " << index_gamma0(N) << ", " << cusp_count(N)
           << " cusp classes\n";
        for (std::size_t i = 0; i < reps.size(); ++i) {
            os << "cusp " << cusps[i].a << "/" << cusps[i].c << "  ->  (" << reps[i].a << " "
               << reps[i].b << "; " << reps[i].c << " " << reps[i].d << ")\n";
        }
        out.emit(os.str());
    }
    return kExitProven;
}

// ---------------------------------------------------------------- reduce / scan

int run_reduce(long t, std::size_t precision, const Output& out) {
    const ReductionResult red = reduce_mod_phi3(t, precision);
    if (out.format == "json") {
        out.emit_json(reduction_json(red));
    } else {
        std::ostringstream os;
        os << "level " << red.spec.level() << ", r = (" << join(red.spec.exponents(), ",")
           << "), j = " << red.j << ", verified to q^" << red.verified_to - 1 << "\n";
        out.emit(os.str());
    }
    return kExitProven;
}

int run_scan(long t, long modulus, long alpha, long nmax, const Output& out) {
    const auto classes = scan(t, modulus, alpha, nmax);
    if (out.format == "json") {
        Json j;
        j["t"] = std::to_string(t);
        j["modulus"] = std::to_string(modulus);
        j["alpha"] = std::to_string(alpha);
        j["n_max"] = std::to_string(nmax);
        Json arr = Json::array();
        for (long b : classes) arr.push_back(std::to_string(b));
        j["vanishing"] = arr;
        out.emit_json(j);
    } else if (out.format == "tsv") {
        std::string s;
        for (long b : classes) s += std::to_string(b) + "\n";
        out.emit(s);
    } else {
        out.emit("vanishing mod " + std::to_string(modulus) + " through n <= " +
                 std::to_string(nmax) + ": {" + join(classes, ", ") + "}\n");
    }
    return kExitProven;
}

// ---------------------------------------------------------------- oracle / dump

int run_oracle(const std::string& table, long t, long nmax, unsigned jobs, const Output& out) {
    std::string s;
    if (table == "tcore") {
        for (long n = 0; n <= nmax; ++n)
            s += std::to_string(n) + "\t" + std::to_string(count_t_core(n, t)) + "\n";
    } else {
        const CrankTable tab = crank_table(nmax, jobs);
        for (long n = 0; n <= nmax; ++n)
            for (const auto& [m, count] : tab.row(n))
                s += std::to_string(m) + "\t" + std::to_string(n) + "\t" + std::to_string(count) +
                     "\n";
    }
    out.emit(s);
    return kExitProven;
}

int run_dump(const std::string& series, long t, long ell, std::size_t precision,
             const std::optional<std::pair<long, std::vector<long>>>& eta, const Output& out) {
    std::string s;
    if (series == "tcore") {
        const auto f = build_tcore_gf(t, precision);
        for (std::size_t i = 0; i < f.precision(); ++i)
            s += std::to_string(i) + "\t" + f[i].get_str() + "\n";
    } else if (series == "crank") {
        const auto f = build_crank_gf(ell, precision);
        for (std::size_t i = 0; i < f.precision(); ++i)
            s += std::to_string(i) + "\t" + f[i].to_string() + "\n";
    } else if (series == "ct") {
        const auto f = build_tcore_crank_gf(t, precision);
        for (std::size_t i = 0; i < f.precision(); ++i)
            s += std::to_string(i) + "\t" + f[i].to_string() + "\n";
    } else {  // eta
        if (!eta) throw CLI::ValidationError("dump --series eta needs --M and --r");
        const auto f = eta_product(EtaQuotientSpec(eta->first, eta->second), precision);
        for (std::size_t i = 0; i < f.precision(); ++i)
            s += std::to_string(i) + "\t" + f[i].get_str() + "\n";
    }
    out.emit(s);
    return kExitProven;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for t-core partition crank congruences"};
    app.require_subcommand(1);

    // shared option storage
    long t = 0, alpha = 0, M = 0, N = 0, beta = -1, nmax = -1, modulus = 3, ell = 0;
    std::size_t precision = 0;
    unsigned jobs = 0;
    std::string r_text, a_text, table = "tcore", series;
    Output out;

    auto* verify = app.add_subcommand("verify", "End-to-end theorem verification for one t");
    verify->add_option("--t", t, "t-core parameter (5, 7, 11, 17 or 19)")->required();
    verify->add_option("--nmax", nmax, "direct-check bound (default 30)");
    verify->add_option("--jobs", jobs, "worker threads (0 = auto)");
    add_output_flags(verify, out, {"human", "json"});

    auto* certify_cmd = app.add_subcommand("certify", "Run the coefficient-vanishing lemma");
    certify_cmd->add_option("--alpha", alpha)->required();
    certify_cmd->add_option("--M", M)->required();
    certify_cmd->add_option("--N", N)->required();
    certify_cmd->add_option("--r", r_text, "exponents by ascending divisor of M")->required();
    certify_cmd->add_option("--beta", beta)->required();
    certify_cmd->add_option("--a", a_text, "exponents by ascending divisor of N")->required();
    add_output_flags(certify_cmd, out, {"human", "json"});

    auto* orbit_cmd = app.add_subcommand("orbit", "Square-class orbit of a residue");
    orbit_cmd->add_option("--alpha", alpha)->required();
    orbit_cmd->add_option("--M", M)->required();
    orbit_cmd->add_option("--r", r_text)->required();
    orbit_cmd->add_option("--beta", beta)->required();
    add_output_flags(orbit_cmd, out, {"human", "json", "tsv"});

    auto* cusps_cmd = app.add_subcommand("cusps", "Cusps and double-coset reps of Gamma_0(N)");
    cusps_cmd->add_option("--N", N)->required();
    add_output_flags(cusps_cmd, out, {"human", "json", "tsv"});

    auto* reduce_cmd = app.add_subcommand("reduce", "Mod-Phi_3 eta-quotient reduction of C^(t)");
    reduce_cmd->add_option("--t", t)->required();
    reduce_cmd->add_option("--precision", precision, "verification precision (default 201)");
    add_output_flags(reduce_cmd, out, {"human", "json"});

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force tables (TSV)");
    oracle_cmd->add_option("--table", table)->check(CLI::IsMember({"tcore", "crank"}));
    oracle_cmd->add_option("--t", t, "t for the tcore table");
    oracle_cmd->add_option("--nmax", nmax)->required();
    oracle_cmd->add_option("--jobs", jobs);
    add_output_flags(oracle_cmd, out, {"tsv"});

    auto* scan_cmd = app.add_subcommand("scan", "Vanishing progressions of t-core counts");
    scan_cmd->add_option("--t", t)->required();
    scan_cmd->add_option("--modulus", modulus);
    scan_cmd->add_option("--alpha", alpha)->required();
    scan_cmd->add_option("--nmax", nmax, "scan depth (default 50)");
    add_output_flags(scan_cmd, out, {"human", "json", "tsv"});

    auto* dump_cmd = app.add_subcommand("dump", "Coefficient dump, one line per index (TSV)");
    dump_cmd->add_option("--series", series)
        ->check(CLI::IsMember({"tcore", "crank", "ct", "eta"}))
        ->required();
    dump_cmd->add_option("--t", t);
    dump_cmd->add_option("--ell", ell, "cyclotomic order for --series crank");
    dump_cmd->add_option("--M", M, "eta level for --series eta");
    dump_cmd->add_option("--r", r_text, "eta exponents for --series eta");
    dump_cmd->add_option("--precision", precision)->required();
    add_output_flags(dump_cmd, out, {"tsv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(t, nmax < 0 ? 30 : nmax, jobs, out);
        if (certify_cmd->parsed() || orbit_cmd->parsed()) {
            EtaQuotientSpec spec(M, parse_int_list(r_text, "--r"));
            if (beta < 0 || beta >= alpha)
                throw CLI::ValidationError("--beta must lie in [0, alpha)");
            RaduTuple tuple{alpha, std::move(spec), N, beta};
            if (orbit_cmd->parsed()) return run_orbit(tuple, out);
            return run_certify(tuple, AVector(N, parse_int_list(a_text, "--a")), out);
        }
        if (cusps_cmd->parsed()) return run_cusps(N, out);
        if (reduce_cmd->parsed()) return run_reduce(t, precision == 0 ? 201 : precision, out);
        if (oracle_cmd->parsed()) {
            if (table == "tcore" && t < 2)
                throw CLI::ValidationError("oracle --table tcore needs --t >= 2");
            return run_oracle(table, t, nmax, jobs, out);
        }
        if (scan_cmd->parsed()) return run_scan(t, modulus, alpha, nmax < 0 ? 50 : nmax, out);
        if (dump_cmd->parsed()) {
            std::optional<std::pair<long, std::vector<long>>> eta;
            if (series == "eta") eta = {M, parse_int_list(r_text, "--r")};
            if (series == "crank" && ell == 0)
                throw CLI::ValidationError("dump --series crank needs --ell");
            return run_dump(series, t, ell, precision, eta, out);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitUsage;
}
