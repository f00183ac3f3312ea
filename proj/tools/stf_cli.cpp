#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stf/endo.hpp"
#include "stf/scan.hpp"
#include "stf/sieve.hpp"
#include "stf/stgroup.hpp"

using namespace stf;

namespace {

// counts accept plain integers or the 2^k shorthand
u64 parse_count(const std::string& s) {
    try {
        if (s.rfind("2^", 0) == 0) {
            size_t used = 0;
            int k = std::stoi(s.substr(2), &used);
            if (used != s.size() - 2 || k < 0 || k > 62)
                throw std::invalid_argument("exponent out of range");
            return u64(1) << k;
        }
        size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("trailing characters");
        return (u64)v;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse count '" + s + "' (use an integer or 2^k)");
    }
}

std::pair<i64, i64> parse_rational(const std::string& s) {
    try {
        size_t slash = s.find('/');
        size_t used = 0;
        i64 num = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            throw std::invalid_argument("bad numerator");
        i64 den = 1;
        if (slash != std::string::npos) {
            den = std::stoll(s.substr(slash + 1), &used);
            if (used != s.size() - slash - 1) throw std::invalid_argument("bad denominator");
        }
        return {num, den};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational '" + s + "' (use n or n/d)");
    }
}

Family parse_family(const std::string& s) {
    if (s == "c1") return Family::C1;
    if (s == "c2") return Family::C2;
    throw std::invalid_argument("unknown family '" + s + "' (use c1 or c2)");
}

SplitField parse_filter(const std::string& s) {
    for (SplitField f : {SplitField::Q, SplitField::QiSqrt2C4, SplitField::QiSqrt3C3,
                         SplitField::Qi4rtMinus3})
        if (s == split_field_name(f)) return f;
    throw std::invalid_argument("unknown filter '" + s +
                                "' (use q, qi-sqrt2-c4, qi-sqrt3-c3 or qi-4rt-minus3)");
}

STGroup parse_group(const std::string& s) {
    auto b = builtin_by_name(s);
    if (!b) {
        std::string names;
        for (BuiltinGroup g : all_builtin_groups()) {
            if (!names.empty()) names += ", ";
            names += builtin_group_name(g);
        }
        throw std::invalid_argument("unknown group '" + s + "' (known: " + names + ")");
    }
    return builtin_group(*b);
}

CharCoeff parse_coeff(const std::string& s) {
    if (s == "a1") return CharCoeff::A1;
    if (s == "a2") return CharCoeff::A2;
    if (s == "a3") return CharCoeff::A3;
    throw std::invalid_argument("unknown coefficient '" + s + "' (use a1, a2 or a3)");
}

SqrtAlgo parse_sqrt_algo(const std::string& s) {
    if (s == "ts") return SqrtAlgo::TonelliShanks;
    if (s == "cipolla") return SqrtAlgo::Cipolla;
    throw std::invalid_argument("unknown sqrt strategy '" + s + "' (use ts or cipolla)");
}

std::string moments_csv(const std::vector<double>& values, int n_max) {
    std::string out = "n,Mn\n";
    char buf[64];
    for (int n = 1; n <= n_max; ++n) {
        double v = values[(size_t)n];
        if (std::fabs(v) < 1e-9) v = 0; // quadrature noise on exact zeros
        std::snprintf(buf, sizeof buf, "%d,%.12g\n", n, v);
        out += buf;
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::string endotype_csv(const std::vector<LatticeRow>& rows) { return lattice_csv(rows); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius trace statistics and Sato-Tate group reports for the\n"
                 "hyperelliptic families y^2 = x^8 + c and y^2 = x^7 - c x"};
    app.require_subcommand(1);

    std::string family_str = "c1", c_str = "1";
    std::string limit_str = "2^22", chunk_str = "2^20", filter_str = "q";
    std::string group_str, coeff_str = "a1", sqrt_str = "ts", out_stem;
    std::vector<std::string> subgroup_words;
    bool lattice = false;
    u64 prime = 0, seed = 0;
    int bins = 120, threads = 0, n_max = 8, quad_points = 256;

    CLI::App* trace_cmd = app.add_subcommand("trace", "Frobenius trace at one prime");
    trace_cmd->add_option("--family", family_str, "curve family: c1 (y^2 = x^8 + c) or c2 (y^2 = x^7 - c x)")
        ->required();
    trace_cmd->add_option("--c", c_str, "curve parameter c, integer or n/d");
    trace_cmd->add_option("--p", prime, "prime of good reduction")->required();

    CLI::App* scan_cmd = app.add_subcommand("scan", "trace statistics over all good primes <= limit");
    scan_cmd->add_option("--family", family_str, "curve family: c1 or c2")->required();
    scan_cmd->add_option("--c", c_str, "curve parameter c, integer or n/d");
    scan_cmd->add_option("--limit", limit_str, "prime bound, integer or 2^k [default 2^22]");
    scan_cmd->add_option("--filter", filter_str,
                         "prime filter by complete splitting: q, qi-sqrt2-c4, qi-sqrt3-c3, qi-4rt-minus3");
    scan_cmd->add_option("--bins", bins, "histogram bin count over [-6, 6] [default 120]");
    scan_cmd->add_option("--threads", threads, "worker threads, 0 = OpenMP default (OMP_NUM_THREADS)");
    scan_cmd->add_option("--chunk-width", chunk_str, "prime chunk width, integer or 2^k [default 2^20]");
    scan_cmd->add_option("--sqrt-algo", sqrt_str, "modular square root strategy: ts or cipolla");
    scan_cmd->add_option("--seed", seed, "seed for the randomized square-root strategy");
    scan_cmd->add_option("--out", out_stem, "write <stem>.moments.csv and <stem>.hist.csv");

    CLI::App* mom_cmd = app.add_subcommand("st-moments", "theoretical Haar moments of a built-in group");
    mom_cmd->add_option("--group", group_str, "built-in group name (see components --help)")->required();
    mom_cmd->add_option("--coeff", coeff_str, "characteristic polynomial coefficient: a1, a2 or a3");
    mom_cmd->add_option("--nmax", n_max, "highest moment order [default 8]");
    mom_cmd->add_option("--quad-points", quad_points,
                        "quadrature points per torus angle, must exceed 3*nmax [default 256]");
    mom_cmd->add_option("--out", out_stem, "write <stem>.moments.csv instead of printing");

    CLI::App* comp_cmd = app.add_subcommand("components", "component group profile of a built-in group");
    {
        std::string names;
        for (BuiltinGroup g : all_builtin_groups()) {
            if (!names.empty()) names += ", ";
            names += builtin_group_name(g);
        }
        comp_cmd->add_option("--group", group_str, "one of: " + names)->required();
    }

    CLI::App* endo_cmd = app.add_subcommand(
        "endotype", "real endomorphism algebra fixed by a subgroup of the y^2 = x^7 - c x component group");
    endo_cmd->add_option("--subgroup", subgroup_words,
                         "generator words in r, s, t (repeat the flag for several generators)");
    endo_cmd->add_flag("--lattice", lattice, "report every subgroup in the standard lattice");
    endo_cmd->add_option("--out", out_stem, "write <stem>.endotype.csv instead of printing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // validation errors exit 2
    }

    try {
        if (trace_cmd->parsed()) {
            auto [num, den] = parse_rational(c_str);
            CurveFamily fam = make_family(parse_family(family_str), num, den);
            if (!is_prime_u64(prime) || !good_prime(fam, prime))
                throw std::invalid_argument("p = " + std::to_string(prime) +
                                            " is not a good prime for this curve");
            i64 t = trace(fam, PrimeField(prime));
            double a1 = t == 0 ? 0.0 : -(double)t / std::sqrt((double)prime);
            std::printf("%llu,%lld,%.12g\n", (unsigned long long)prime, (long long)t, a1);
        } else if (scan_cmd->parsed()) {
            auto [num, den] = parse_rational(c_str);
            CurveFamily fam = make_family(parse_family(family_str), num, den);
            ScanConfig cfg;
            cfg.limit = parse_count(limit_str);
            cfg.field = parse_filter(filter_str);
            if (bins <= 0) throw std::invalid_argument("--bins must be positive");
            if (threads < 0) throw std::invalid_argument("--threads must be nonnegative");
            cfg.bins = bins;
            cfg.threads = threads;
            cfg.chunk_width = parse_count(chunk_str);
            cfg.trace.algo = parse_sqrt_algo(sqrt_str);
            cfg.trace.seed = seed;
            auto t0 = std::chrono::steady_clock::now();
            ScanReport rep = scan(fam, cfg);
            double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!out_stem.empty()) emit_csv(rep, out_stem);
            std::printf("family=%s c=%lld/%lld filter=%s limit=%llu count=%llu "
                        "M2=%.6f M4=%.6f zero_fraction=%.6f elapsed=%.2fs\n",
                        rep.family.c_str(), (long long)rep.c_num, (long long)rep.c_den,
                        rep.filter.c_str(), (unsigned long long)rep.limit,
                        (unsigned long long)rep.acc.count, rep.acc.moment(2), rep.acc.moment(4),
                        rep.acc.zero_fraction(), elapsed);
        } else if (mom_cmd->parsed()) {
            STGroup group = parse_group(group_str);
            if (n_max < 1) throw std::invalid_argument("--nmax must be at least 1");
            if (quad_points <= 3 * n_max)
                throw std::invalid_argument("--quad-points must exceed 3*nmax");
            MomentSequence ms = haar_moments(group, parse_coeff(coeff_str), n_max, quad_points);
            std::string csv = moments_csv(ms.values, n_max);
            if (out_stem.empty())
                std::fputs(csv.c_str(), stdout);
            else
                write_file(out_stem + ".moments.csv", csv);
        } else if (comp_cmd->parsed()) {
            STGroup group = parse_group(group_str);
            ComponentProfile p = component_group_profile(group);
            std::string orders;
            for (int o : p.element_orders) {
                if (!orders.empty()) orders += ';';
                orders += std::to_string(o);
            }
            std::printf("group,components,abelian,element_orders\n%s,%d,%s,%s\n",
                        group.name.c_str(), p.order, p.abelian ? "yes" : "no", orders.c_str());
        } else if (endo_cmd->parsed()) {
            if (lattice == !subgroup_words.empty())
                throw std::invalid_argument("pass either --subgroup words or --lattice");
            std::vector<LatticeRow> rows;
            if (lattice) {
                rows = lattice_report();
            } else {
                LatticeRow row;
                for (const std::string& w : subgroup_words) {
                    if (!row.subgroup.empty()) row.subgroup += ';';
                    row.subgroup += w;
                }
                row.order = subgroup_order(subgroup_words);
                row.algebra = fixed_subalgebra(subgroup_words);
                rows.push_back(std::move(row));
            }
            std::string csv = endotype_csv(rows);
            if (out_stem.empty())
                std::fputs(csv.c_str(), stdout);
            else
                write_file(out_stem + ".endotype.csv", csv);
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
