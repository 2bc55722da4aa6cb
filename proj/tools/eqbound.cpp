// eqbound: bounds on equiangular lines and spherical two-distance sets.
// Exit codes: 0 success, 1 verification or regression failure, 2 usage error.

#include "eqlines/analysis.hpp"
#include "eqlines/bounds.hpp"
#include "eqlines/kernels.hpp"
#include "eqlines/reference.hpp"
#include "eqlines/twodist.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace eqlines;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_fraction(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string("invalid ") + what + " '" + text + "': expected an integer, p/q or decimal");
    }
}

std::pair<long long, long long> parse_range(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            long long v = std::stoll(text);
            return {v, v};
        }
        long long lo = std::stoll(text.substr(0, colon)), hi = std::stoll(text.substr(colon + 1));
        if (hi < lo) throw std::invalid_argument("empty");
        return {lo, hi};
    } catch (const std::exception&) {
        throw UsageError("invalid range '" + text + "': expected lo:hi");
    }
}

std::vector<Rational> parse_alpha_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_fraction(item, "alpha"));
    if (out.empty()) throw UsageError("empty alpha list");
    return out;
}

// Six significant digits, fixed across platforms.
std::string sig6(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", static_cast<double>(v));
    return buf;
}

int cmd_bound(long long n, const std::string& alpha_text, bool use_sdp, bool json_out, const TableSettings& ts) {
    Rational alpha = parse_fraction(alpha_text, "alpha");
    if (n < 1) throw UsageError("--n must be positive");
    if (alpha.sign() <= 0 || alpha >= Rational(1)) throw UsageError("--alpha must lie in (0, 1)");
    std::optional<long double> sdp;
    SdpSolution sol;
    if (use_sdp) {
        sol = solve_cell({static_cast<int>(n), alpha}, ts).solution;
        if (sol.status == SolveStatus::optimal && !sol.box_active) sdp = sol.upper_bound;
    }
    BoundResult r = best_bound(n, alpha, sdp);
    if (json_out) {
        json j{{"n", n},
               {"alpha", alpha.str()},
               {"value", r.value.str()},
               {"line_bound", r.line_bound().get_str()},
               {"method", to_string(r.method)}};
        if (r.certificate) {
            j["certificate"] = {{"a", r.certificate->a.str()},
                                {"t", r.certificate->t.str()},
                                {"bound_on_A", r.certificate->bound_on_A.str()},
                                {"final_bound", r.certificate->final_bound.str()},
                                {"steps", r.certificate->checked}};
        }
        if (use_sdp)
            j["sdp"] = {{"upper_bound", sig6(sol.upper_bound)}, {"status", to_string(sol.status)}, {"message", sol.message}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "n = " << n << ", alpha = " << alpha << "\n"
              << "bound: " << r.line_bound().get_str() << " (" << to_string(r.method) << ", value " << r.value << ")\n";
    if (r.certificate)
        std::cout << "certificate: a = " << r.certificate->a << ", t = " << r.certificate->t << ", A <= "
                  << r.certificate->bound_on_A << ", " << r.certificate->checked.size() << " exact steps checked\n";
    if (use_sdp)
        std::cout << "sdp: " << sig6(sol.upper_bound) << " [" << to_string(sol.status) << "] " << sol.message << "\n";
    return 0;
}

int cmd_verify(const std::string& range, bool symbolic_only, bool with_symbolic, const std::string& fault, int jobs,
               bool json_out) {
    Rational perturbation = fault.empty() ? Rational(0) : parse_fraction(fault, "fault");
    bool ok = true;
    json j = json::object();
    if (!symbolic_only) {
        auto [lo, hi] = parse_range(range);
        if (lo < 3) throw UsageError("--odd-range must start at 3 or above");
        auto results = verify_odd_range(lo, hi, jobs, perturbation);
        json arr = json::array();
        for (const auto& r : results) {
            ok = ok && r.ok;
            if (json_out) {
                json e{{"m", r.m}, {"ok", r.ok}};
                if (r.ok) e["t"] = r.certificate->t.str(), e["final_bound"] = r.certificate->final_bound.str();
                else e["failed_step"] = r.failed_step, e["detail"] = r.detail;
                arr.push_back(e);
            } else if (r.ok) {
                std::cout << "a = 1/" << r.m << ": pass (t = " << r.certificate->t << ", bound "
                          << r.certificate->final_bound << ")\n";
            } else {
                std::cout << "a = 1/" << r.m << ": FAIL at " << r.failed_step << ": " << r.detail << "\n";
            }
        }
        j["chains"] = arr;
    }
    if (symbolic_only || with_symbolic) {
        bool sym = false;
        std::string detail;
        try {
            sym = verify_proof_chain_symbolic(perturbation);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        ok = ok && sym;
        if (json_out) j["symbolic"] = {{"ok", sym}, {"detail", detail}};
        else std::cout << "symbolic chain in Q(a): " << (sym ? "pass" : "FAIL " + detail) << "\n";
    }
    if (json_out) {
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_gtable(const std::string& range, const std::string& ref, bool json_out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 2) throw UsageError("--range must start at 2 or above");
    auto path = ref.empty() ? default_data_dir() / "m_bounds.csv" : std::filesystem::path(ref);
    auto rows = g_table(lo, hi, m_bound_map(load_reference(path)));
    std::set<long long> got, expected;
    for (const auto& r : rows)
        if (!r.tight) got.insert(r.n);
    for (long long k = 2;; ++k) {
        long long n = (2 * k + 1) * (2 * k + 1) - 3;
        if (n > hi) break;
        if (n >= lo) expected.insert(n);
    }
    std::vector<long long> extra, missing;
    std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(), std::back_inserter(missing));
    bool match = extra.empty() && missing.empty();
    if (json_out) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"g_upper", r.g_upper}, {"lower", r.lower}, {"tight", r.tight}});
        std::cout << json{{"rows", arr}, {"exceptions", got}, {"unexpected", extra}, {"missing", missing}, {"match", match}}.dump(2)
                  << "\n";
    } else {
        std::cout << "n,g_upper,lower,tight\n";
        for (const auto& r : rows) std::cout << r.n << ',' << r.g_upper << ',' << r.lower << ',' << (r.tight ? 1 : 0) << '\n';
        auto list = [](const auto& v) {
            std::string s;
            for (long long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
            return s.empty() ? std::string("none") : s;
        };
        std::cout << "# exceptions: " << list(got) << "\n# expected (2k+1)^2-3: " << list(expected)
                  << "\n# unexpected: " << list(extra) << "\n# missing: " << list(missing) << "\n";
    }
    return match ? 0 : 1;
}

int cmd_sdp_table(const std::string& range, const std::string& alphas, const TableSettings& ts, double tol, int jobs,
                  const std::string& ref, bool json_out) {
    auto [lo, hi] = parse_range(range);
    if (lo < 3) throw UsageError("--range must start at 3 or above");
    auto alpha_list = parse_alpha_list(alphas);
    for (const auto& a : alpha_list)
        if (a.sign() <= 0 || a >= Rational(1)) throw UsageError("alpha " + a.str() + " outside (0, 1)");
    auto path = ref.empty() ? default_data_dir() / "table3.csv" : std::filesystem::path(ref);
    std::optional<ReferenceTable> table;
    if (std::filesystem::exists(path)) table = load_reference(path);

    std::vector<CellSpec> cells;
    for (long long n = lo; n <= hi; ++n)
        for (const auto& a : alpha_list) cells.push_back({static_cast<int>(n), a});
    auto results = solve_cells(cells, ts, jobs);

    bool any_flag = false;
    json arr = json::array();
    std::map<long long, long double> row_max;
    if (!json_out) std::cout << "n,alpha,upper_bound,status,seconds,reference,rel_dev,flag\n";
    for (const auto& r : results) {
        const auto& s = r.solution;
        bool solved = r.error.empty() && s.status == SolveStatus::optimal && !s.box_active;
        std::optional<Rational> refv = table ? table->find(r.cell.n, r.cell.alpha) : std::nullopt;
        std::string status = r.error.empty() ? to_string(s.status) : "error";
        if (r.error.empty() && s.box_active) status += "+box";
        std::string dev, flag;
        if (solved) {
            auto& mx = row_max.try_emplace(r.cell.n, 0.0L).first->second;
            mx = std::max(mx, s.upper_bound);
        }
        if (refv) {
            long double rv = refv->to_long_double();
            long double d = (s.upper_bound - rv) / rv;
            dev = sig6(d);
            if (!solved || std::fabs(static_cast<double>(d)) > tol) flag = "FLAG";
        } else if (!solved) {
            flag = "FLAG";
        }
        any_flag = any_flag || !flag.empty();
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
        if (json_out) {
            json e{{"n", r.cell.n}, {"alpha", r.cell.alpha.str()}, {"upper_bound", sig6(s.upper_bound)}, {"status", status},
                   {"seconds", secs}, {"flag", !flag.empty()}, {"message", r.error.empty() ? s.message : r.error}};
            if (refv) e["reference"] = sig6(refv->to_long_double()), e["rel_dev"] = dev;
            arr.push_back(e);
        } else {
            std::cout << r.cell.n << ',' << r.cell.alpha << ',' << sig6(s.upper_bound) << ',' << status << ',' << secs
                      << ',' << (refv ? sig6(refv->to_long_double()) : "") << ',' << dev << ',' << flag << '\n';
        }
    }
    if (json_out) {
        json rows = json::array();
        for (auto [n, m] : row_max) rows.push_back({{"n", n}, {"max", sig6(m)}, {"gerzon", gerzon_bound(n)}});
        std::cout << json{{"cells", arr}, {"rows", rows}, {"flagged", any_flag}}.dump(2) << "\n";
    } else {
        std::cout << "# n,max,n(n+1)/2\n";
        for (auto [n, m] : row_max) std::cout << "# " << n << ',' << sig6(m) << ',' << gerzon_bound(n) << '\n';
    }
    // Flagged cells are reported, not fatal: the table is a comparison, not a proof.
    return 0;
}

int cmd_lift(const std::string& a_text, const std::string& b_text, int n, bool json_out) {
    TwoDistanceSet s;
    LiftParameters lp;
    if (n > 0) {
        s = simplex_pairs_construction(n);
        lp = lift_parameters(s.a, s.b);
    } else {
        if (a_text.empty() || b_text.empty()) throw UsageError("lift needs --a and --b, or --n");
        lp = lift_parameters(parse_fraction(a_text, "a"), parse_fraction(b_text, "b"));
    }
    json j{{"R2", lp.r2.str()}, {"cos_theta", lp.cos_theta.str()}, {"R", sig6(std::sqrt(lp.r2.to_double()))}};
    if (n > 0) {
        LiftResult lr = lift(s);
        double c = lr.cos_theta.to_double();
        CheckReport rep = check_points(lr.lifted, {c, -c});
        j["a"] = s.a.str(), j["b"] = s.b.str(), j["dim"] = lr.dim, j["size"] = lr.lifted.size();
        j["norm_error"] = sig6(rep.norm_error), j["product_error"] = sig6(rep.product_error);
    }
    if (json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "R^2 = " << lp.r2 << ", cos(theta) = " << lp.cos_theta << ", R = " << j["R"].get<std::string>() << "\n";
        if (n > 0)
            std::cout << "lifted " << j["size"] << " vectors into dimension " << j["dim"] << "; max norm error "
                      << j["norm_error"].get<std::string>() << ", max product error "
                      << j["product_error"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_construct(int n, bool points, bool json_out) {
    TwoDistanceSet s = simplex_pairs_construction(n);
    CheckReport rep = check_points(s.points, {s.a.to_double(), s.b.to_double()});
    if (json_out) {
        json j{{"n", n},           {"size", s.points.size()},        {"a", s.a.str()},
               {"b", s.b.str()},   {"distinct_products", rep.distinct_products.size()},
               {"norm_error", sig6(rep.norm_error)}, {"product_error", sig6(rep.product_error)}};
        if (points) j["points"] = s.points;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "dimension " << n << ": " << s.points.size() << " unit vectors, products a = " << s.a << ", b = " << s.b
              << "\n"
              << "distinct products " << rep.distinct_products.size() << ", max norm error " << sig6(rep.norm_error)
              << ", max product error " << sig6(rep.product_error) << "\n";
    if (points)
        for (const auto& p : s.points) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", p[i]);
                std::cout << (i ? "," : "") << buf;
            }
            std::cout << "\n";
        }
    return 0;
}

int cmd_crossover(long long k_max, bool json_out) {
    Crossover c = crossover_k();
    bool ok = true;
    json rows = json::array();
    if (!json_out) std::cout << "k,n_a,case_a,n_b,case_b,a_below_b\n";
    for (long long k = 1; k <= k_max; ++k) {
        CaseBounds cb = case_bounds(k);
        ok = ok && cb.case_a == case_a_expanded(k) && cb.case_b == case_b_expanded(k);
        bool below = cb.case_a < cb.case_b;
        if (json_out)
            rows.push_back({{"k", k}, {"n_a", cb.n_a}, {"case_a", cb.case_a.str()}, {"n_b", cb.n_b},
                            {"case_b", cb.case_b.str()}, {"a_below_b", below}});
        else
            std::cout << k << ',' << cb.n_a << ',' << cb.case_a << ',' << cb.n_b << ',' << cb.case_b << ',' << below << '\n';
    }
    bool covered = true;
    for (const auto& f : bracket_facts(2, 50)) covered = covered && f.covered;
    ok = ok && covered;
    if (json_out) {
        std::cout << json{{"cases", rows}, {"crossover_k", c.k}, {"crossover_n", c.n}, {"brackets_2_50_covered", covered},
                          {"ok", ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "# crossover: k = " << c.k << ", n = " << c.n << "\n"
                  << "# main theorem at a = 2k+1 covers [(2k+1)^2-2, (2k+3)^2-3] for k = 2..50: "
                  << (covered ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on equiangular lines and spherical two-distance sets"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json_out = false;
    app.add_flag("--json", json_out, "JSON output");

    TableSettings ts;
    auto add_truncation = [&](CLI::App* sub) {
        sub->add_option("--k3", ts.k3, "linear Gegenbauer constraints k = 1..K3")->capture_default_str();
        sub->add_option("--k4", ts.k4, "matrix constraints k = 0..K4")->capture_default_str();
        sub->add_option("--block-d", ts.d, "matrix blocks are (d+1) x (d+1)")->capture_default_str();
    };

    long long n = 0;
    std::string alpha, range, ref, fault, alphas = "1/5,1/7,1/9,1/11,1/13,1/15,1/17,1/19,1/21,1/23,1/25,1/27";
    int jobs = 0;
    double tol = 0.01;

    auto* bound = app.add_subcommand("bound", "best available bound on M_alpha(n)");
    bound->add_option("--n", n, "dimension")->required();
    bound->add_option("--alpha", alpha, "cosine of the angle, e.g. 1/5")->required();
    bool use_sdp = false;
    bound->add_flag("--sdp", use_sdp, "also solve the three-point relaxation numerically");
    add_truncation(bound);

    auto* verify = app.add_subcommand("verify", "replay the multiplier certificate exactly");
    range = "3:101";
    verify->add_option("--odd-range,--range", range, "odd m in lo:hi, a = 1/m")->capture_default_str();
    bool symbolic = false, with_symbolic = false;
    verify->add_flag("--symbolic", symbolic, "only the identities in Q(a)");
    verify->add_flag("--with-symbolic", with_symbolic, "also run the identities in Q(a)");
    verify->add_option("--inject-fault", fault, "add this rational to the multiplier t (must fail)");
    verify->add_option("--jobs", jobs, "worker threads (0 = all)");

    auto* gtable = app.add_subcommand("gtable", "upper bounds on g(n) from an M-bound table");
    std::string grange = "7:417";
    gtable->add_option("--range", grange, "lo:hi")->capture_default_str();
    gtable->add_option("--ref", ref, "M-bound CSV (default: shipped m_bounds.csv)");

    auto* sdp = app.add_subcommand("sdp-table", "solve the three-point relaxation on a grid");
    std::string srange = "401:401";
    sdp->add_option("--range", srange, "dimensions lo:hi")->capture_default_str();
    sdp->add_option("--alpha", alphas, "comma-separated cosines")->capture_default_str();
    sdp->add_option("--tol", tol, "relative deviation from the reference that flags a cell")->capture_default_str();
    sdp->add_option("--jobs", jobs, "worker threads (0 = all)");
    sdp->add_option("--ref", ref, "reference CSV (default: shipped table3.csv)");
    add_truncation(sdp);

    auto* lift_cmd = app.add_subcommand("lift", "lift a two-distance set with a + b < 0 one dimension up");
    std::string a_text, b_text;
    int lift_n = 0;
    lift_cmd->add_option("--a", a_text, "first inner product");
    lift_cmd->add_option("--b", b_text, "second inner product");
    lift_cmd->add_option("--n", lift_n, "lift the simplex-pairs set of this dimension instead");

    auto* construct = app.add_subcommand("construct", "simplex-pairs two-distance set");
    int cn = 0;
    bool points = false;
    construct->add_option("--n", cn, "dimension")->required();
    construct->add_flag("--points", points, "print coordinates");

    auto* crossover = app.add_subcommand("analyze-crossover", "King-Tang case A/B comparison and bracket coverage");
    long long k_max = 12;
    crossover->add_option("--k-max", k_max, "last k in the case table")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bound) return cmd_bound(n, alpha, use_sdp, json_out, ts);
        if (*verify) return cmd_verify(range, symbolic, with_symbolic, fault, jobs, json_out);
        if (*gtable) return cmd_gtable(grange, ref, json_out);
        if (*sdp) return cmd_sdp_table(srange, alphas, ts, tol, jobs, ref, json_out);
        if (*lift_cmd) return cmd_lift(a_text, b_text, lift_n, json_out);
        if (*construct) return cmd_construct(cn, points, json_out);
        if (*crossover) return cmd_crossover(k_max, json_out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
