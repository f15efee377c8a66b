#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dfreq/derangement_set.hpp"
#include "dfreq/frequency.hpp"
#include "dfreq/graph.hpp"
#include "dfreq/oracle.hpp"
#include "dfreq/perm.hpp"

namespace dfreq::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    bool json = false;
    bool force = false;
    int jobs = 1;
    std::optional<std::uint64_t> seed;
};

/// Raised for anything that maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Vertex>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string set_text(const std::vector<Vertex>& v) {
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    return "{" + join(sorted, ",") + "}";
}

std::string tuple_text(const std::vector<int>& v) { return "(" + join(v, ",") + ")"; }

Json rate_json(const DyadicRate& r) { return Json{{"fraction", r.fraction()}, {"decimal", r.decimal()}}; }

std::string parse_error_text(const ParseError& e, const std::string& source) {
    std::ostringstream os;
    os << source << ": ";
    if (e.line() > 0) os << "line " << e.line() << ", ";
    os << "column " << e.column() << ": " << e.what();
    return os.str();
}

Derangement read_derangement(const std::string& text, int n) {
    Permutation p = [&] {
        try {
            return parse_cycle_form(text, n);
        } catch (const ParseError& e) {
            throw InputError(parse_error_text(e, "cycle notation \"" + text + "\""));
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    try {
        return as_derangement(std::move(p));
    } catch (const FixedPointError& e) {
        throw InputError("\"" + text + "\" fixes vertex " + std::to_string(e.vertex()) + " of {1.." +
                         std::to_string(n) + "}; a derangement must move every vertex");
    }
}

OrderedGraph read_graph(const std::string& path) {
    try {
        return load_graph_file(path);
    } catch (const ParseError& e) {
        throw InputError(parse_error_text(e, path));
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

void check_n(int n) {
    if (n < 1) throw InputError("n must be positive");
}

// Each command returns its exit code and fills `doc` (JSON mode) or writes
// to `out` directly (text mode).
struct Context {
    Globals g;
    std::ostream& out;
    Json doc;
};

int cmd_member(Context& ctx, const std::string& graph_file, const std::string& cycles) {
    const OrderedGraph g = read_graph(graph_file);
    const Derangement w = read_derangement(cycles, g.vertex_count());
    const MembershipReport rep = check_membership(g, w);

    if (ctx.g.json) {
        Json fails = Json::array();
        for (const auto& f : rep.failures) {
            auto rho = f.rho;
            std::sort(rho.begin(), rho.end());
            fails.push_back({{"t", f.t}, {"lambda", f.lambda}, {"rho", rho}});
        }
        ctx.doc = {{"command", "member"},
                   {"inputs", {{"graph", graph_file}, {"n", g.vertex_count()}, {"w", standard_cycle_form(w)}}},
                   {"results", {{"member", rep.member}, {"failures", fails}}}};
    } else {
        ctx.out << "w = " << standard_cycle_form(w) << (rep.member ? " is" : " is not") << " in D(G)\n";
        for (const auto& f : rep.failures) {
            auto rho = f.rho;
            std::sort(rho.begin(), rho.end());
            ctx.out << "  t=" << f.t << ": lambda=" << f.lambda << ", rho=" << set_text(f.rho) << "; " << f.lambda
                    << " is not adjacent to " << join(rho, ", ") << "\n";
        }
    }
    return rep.member ? kOk : kFalse;
}

int cmd_dset(Context& ctx, const std::string& graph_file) {
    const OrderedGraph g = read_graph(graph_file);
    const int limit = ctx.g.force ? kMaxGraphVertices : kDefaultDerangementSetLimit;
    std::vector<Derangement> d;
    try {
        d = derangement_set(g, limit);
    } catch (const std::length_error& e) {
        throw InputError(std::string(e.what()) + (ctx.g.force ? "" : "; pass --force to override"));
    }
    if (ctx.g.json) {
        Json members = Json::array();
        for (const auto& w : d) members.push_back(standard_cycle_form(w));
        ctx.doc = {{"command", "dset"},
                   {"inputs", {{"graph", graph_file}, {"n", g.vertex_count()}}},
                   {"results", {{"size", d.size()}, {"members", members}}}};
    } else {
        ctx.out << "|D(G)| = " << d.size() << "\n";
        for (const auto& w : d) ctx.out << standard_cycle_form(w) << "\n";
    }
    return kOk;
}

Json freq_results(const Derangement& w) {
    const ThetaProfile th = theta(w);
    return Json{{"frequency", frequency(w).str()},
                {"rate", rate_json(rate(w))},
                {"theta", th.sizes},
                {"cycles", th.k},
                {"non_min_count", non_min_elements(w).size()}};
}

int cmd_freq(Context& ctx, const std::string& cycles, int n) {
    check_n(n);
    const Derangement w = read_derangement(cycles, n);
    if (ctx.g.json) {
        ctx.doc = {{"command", "freq"},
                   {"inputs", {{"w", standard_cycle_form(w)}, {"n", n}}},
                   {"results", freq_results(w)}};
    } else {
        const DyadicRate r = rate(w);
        ctx.out << "w = " << standard_cycle_form(w) << "  (n = " << n << ")\n"
                << "f(w) = " << frequency(w).str() << "\n"
                << "r(w) = " << r.fraction() << " = " << r.decimal() << "\n"
                << "theta(w) = " << tuple_text(theta(w).sizes) << "\n"
                << "|U(w)| = " << non_min_elements(w).size() << "\n";
    }
    return kOk;
}

int cmd_rate(Context& ctx, const std::string& cycles, int n) {
    check_n(n);
    const Derangement w = read_derangement(cycles, n);
    const DyadicRate r = rate(w);
    if (ctx.g.json) {
        ctx.doc = {{"command", "rate"},
                   {"inputs", {{"w", standard_cycle_form(w)}, {"n", n}}},
                   {"results", {{"rate", rate_json(r)}}}};
    } else {
        ctx.out << "r(" << standard_cycle_form(w) << ") = " << r.fraction() << " = " << r.decimal() << "\n";
    }
    return kOk;
}

int cmd_theta(Context& ctx, const std::string& cycles, int n) {
    check_n(n);
    const Derangement w = read_derangement(cycles, n);
    const ThetaProfile th = theta(w);
    const NonMinSet u = non_min_elements(w);
    if (ctx.g.json) {
        ctx.doc = {{"command", "theta"},
                   {"inputs", {{"w", standard_cycle_form(w)}, {"n", n}}},
                   {"results", {{"theta", th.sizes}, {"cycles", th.k}, {"non_min", u.elements}}}};
    } else {
        ctx.out << "theta(" << standard_cycle_form(w) << ") = " << tuple_text(th.sizes) << "\n"
                << "cycles k = " << th.k << "\n"
                << "U(w) = " << set_text(u.elements) << "\n";
    }
    return kOk;
}

int cmd_compare(Context& ctx, const std::string& c1, const std::string& c2, int n) {
    check_n(n);
    const Derangement w1 = read_derangement(c1, n);
    const Derangement w2 = read_derangement(c2, n);
    const ThetaProfile t1 = theta(w1);
    const ThetaProfile t2 = theta(w2);
    if (t1.k != t2.k)
        throw InputError("w1 has " + std::to_string(t1.k) + " cycles and w2 has " + std::to_string(t2.k) +
                         "; theta profiles are only ordered within D^k(V), derangements with the same number of cycles");
    const ThetaOrder order = compare_theta(t1, t2);
    const ExactCount f1 = frequency(w1);
    const ExactCount f2 = frequency(w2);
    const DyadicRate r1 = rate(w1);
    const DyadicRate r2 = rate(w2);

    bool violation = false;
    if (order == ThetaOrder::LessOrEqual || order == ThetaOrder::Equal) violation |= f1 > f2 || r1 > r2;
    if (order == ThetaOrder::GreaterOrEqual || order == ThetaOrder::Equal) violation |= f1 < f2 || r1 < r2;

    if (ctx.g.json) {
        ctx.doc = {{"command", "compare"},
                   {"inputs", {{"w1", standard_cycle_form(w1)}, {"w2", standard_cycle_form(w2)}, {"n", n}}},
                   {"results",
                    {{"theta1", t1.sizes},
                     {"theta2", t2.sizes},
                     {"order", std::string(to_string(order))},
                     {"frequency1", f1.str()},
                     {"frequency2", f2.str()},
                     {"rate1", rate_json(r1)},
                     {"rate2", rate_json(r2)},
                     {"monotonicity_violation", violation}}}};
    } else {
        ctx.out << "theta(w1) = " << tuple_text(t1.sizes) << "   w1 = " << standard_cycle_form(w1) << "\n"
                << "theta(w2) = " << tuple_text(t2.sizes) << "   w2 = " << standard_cycle_form(w2) << "\n"
                << "order: " << to_string(order) << "\n"
                << "f(w1) = " << f1.str() << ", f(w2) = " << f2.str() << "\n"
                << "r(w1) = " << r1.decimal() << ", r(w2) = " << r2.decimal() << "\n";
        if (violation) ctx.out << "INTERNAL ERROR: frequency ordering contradicts the theta ordering\n";
    }
    return violation ? kFalse : kOk;
}

int cmd_extremal(Context& ctx, int n) {
    if (n < 2) throw InputError("extremal derangements need n >= 2");
    const Derangement lo = min_rate_derangement(n);
    const Derangement hi = max_rate_derangement(n);
    const std::vector<int> single_cycle{n};
    const DyadicRate lo_closed = decreasing_arrangement_rate(n - 1);
    const DyadicRate hi_closed = increasing_arrangement_rate(single_cycle);
    const bool agree = lo_closed == rate(lo) && hi_closed == rate(hi);

    auto entry = [](const Derangement& w, const DyadicRate& closed) {
        return Json{{"w", standard_cycle_form(w)},
                    {"frequency", frequency(w).str()},
                    {"rate", rate_json(rate(w))},
                    {"closed_form_rate", rate_json(closed)}};
    };
    if (ctx.g.json) {
        ctx.doc = {{"command", "extremal"},
                   {"inputs", {{"n", n}}},
                   {"results", {{"min", entry(lo, lo_closed)}, {"max", entry(hi, hi_closed)}, {"closed_forms_agree", agree}}}};
    } else {
        ctx.out << "least frequent: " << standard_cycle_form(lo) << "  f = " << frequency(lo).str()
                << "  r = " << rate(lo).fraction() << " = " << rate(lo).decimal() << "\n"
                << "most frequent:  " << standard_cycle_form(hi) << "  f = " << frequency(hi).str()
                << "  r = " << rate(hi).fraction() << " = " << rate(hi).decimal() << "\n"
                << "closed forms " << (agree ? "agree" : "DISAGREE") << "\n";
    }
    return agree ? kOk : kFalse;
}

std::vector<Derangement> spot_list(int n) {
    std::vector<Derangement> out{min_rate_derangement(n), max_rate_derangement(n)};
    if (n == 7) {
        for (const char* c : {"(13472)(56)", "(13427)(56)", "(1234)(567)"}) out.push_back(parse_derangement(c, 7));
    }
    // First and last derangement in lexicographic one-line order.
    if (n <= 9) {
        const auto all = enumerate_derangements(n);
        out.push_back(all.front());
        out.push_back(all.back());
    }
    std::vector<Derangement> uniq;
    for (auto& w : out)
        if (std::find(uniq.begin(), uniq.end(), w) == uniq.end()) uniq.push_back(std::move(w));
    return uniq;
}

int cmd_verify(Context& ctx, int n, bool full, bool spot) {
    if (n < 2) throw InputError("verify needs n >= 2");
    if (full && spot) throw InputError("--full and --spot are mutually exclusive");
    if (!full && !spot) full = n <= kSweepDefaultLimit;
    if (full && n > kSweepDefaultLimit && !(ctx.g.force && n <= kSweepDefaultLimit + 1))
        throw InputError("--full sweeps are limited to n <= " + std::to_string(kSweepDefaultLimit) +
                         " (n = 6 with --force)");
    if (!full && n > kOracleDefaultLimit && !ctx.g.force)
        throw InputError("oracle runs are limited to n <= " + std::to_string(kOracleDefaultLimit) + " without --force");
    if (n > kMaxGraphVertices) throw InputError("graph enumeration supports n <= " + std::to_string(kMaxGraphVertices));

    const std::vector<Derangement> ws = full ? enumerate_derangements(n) : spot_list(n);
    const OracleOptions opts{ctx.g.jobs, true};

    Json rows = Json::array();
    std::size_t passed = 0;
    for (const auto& w : ws) {
        const ExactCount formula = frequency(w);
        const ExactCount enumerated = oracle_frequency(w, opts).count;
        const ExactCount constructive = oracle_frequency_constructive(w).count;
        const bool ok = formula == enumerated && enumerated == constructive;
        passed += ok ? 1 : 0;
        if (ctx.g.json) {
            rows.push_back({{"w", standard_cycle_form(w)},
                            {"formula", formula.str()},
                            {"enumeration", enumerated.str()},
                            {"constructive", constructive.str()},
                            {"pass", ok}});
        } else {
            ctx.out << (ok ? "PASS " : "FAIL ") << standard_cycle_form(w) << "  formula=" << formula.str()
                    << " enumeration=" << enumerated.str() << " constructive=" << constructive.str() << "\n";
        }
    }

    std::optional<bool> dc_ok;
    ExactCount lhs = 0;
    ExactCount rhs = 0;
    if (n <= kSweepDefaultLimit || (ctx.g.force && n <= kSweepDefaultLimit + 1)) {
        lhs = sum_over_graphs(n, opts);
        rhs = sum_of_frequencies(n);
        dc_ok = lhs == rhs;
    }
    const bool all_ok = passed == ws.size() && dc_ok.value_or(true);

    if (ctx.g.json) {
        Json dc = dc_ok ? Json{{"sum_over_graphs", lhs.str()}, {"sum_of_frequencies", rhs.str()}, {"pass", *dc_ok}}
                        : Json(nullptr);
        ctx.doc = {{"command", "verify"},
                   {"inputs", {{"n", n}, {"mode", full ? "full" : "spot"}}},
                   {"results",
                    {{"derangements", rows},
                     {"passed", passed},
                     {"total", ws.size()},
                     {"double_counting", dc},
                     {"pass", all_ok}}}};
    } else {
        ctx.out << passed << "/" << ws.size() << " pass\n";
        if (dc_ok)
            ctx.out << "double counting: sum_G |D(G)| = " << lhs.str() << ", sum_w f(w) = " << rhs.str() << "  "
                    << (*dc_ok ? "PASS" : "FAIL") << "\n";
        else
            ctx.out << "double counting: skipped (n > " << kSweepDefaultLimit << ")\n";
    }
    return all_ok ? kOk : kFalse;
}

int cmd_sample(Context& ctx, const std::string& cycles, int n, std::uint64_t trials) {
    check_n(n);
    if (!ctx.g.seed) throw InputError("sample needs --seed; sampling is only run with an explicit seed");
    if (trials == 0) throw InputError("--trials must be positive");
    const Derangement w = read_derangement(cycles, n);
    if (n > kMaxGraphVertices) throw InputError("sampling supports n <= " + std::to_string(kMaxGraphVertices));
    const MonteCarloEstimate est = sample_rate(w, trials, *ctx.g.seed, ctx.g.jobs);
    const DyadicRate exact = rate(w);

    std::ostringstream estimate;
    estimate.precision(10);
    estimate << est.estimate();
    if (ctx.g.json) {
        ctx.doc = {{"command", "sample"},
                   {"inputs", {{"w", standard_cycle_form(w)}, {"n", n}, {"trials", trials}, {"seed", *ctx.g.seed}}},
                   {"results",
                    {{"hits", est.hits},
                     {"estimate", std::to_string(est.hits) + "/" + std::to_string(est.trials)},
                     {"estimate_decimal", estimate.str()},
                     {"exact_rate", rate_json(exact)}}}};
    } else {
        ctx.out << "w = " << standard_cycle_form(w) << "  trials = " << trials << "  seed = " << *ctx.g.seed << "\n"
                << "hits = " << est.hits << "  estimate = " << estimate.str() << "\n"
                << "exact r(w) = " << exact.fraction() << " = " << exact.decimal() << "\n";
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derangement sets of ordered graphs: membership, frequency and rate, oracle checks", "dfreq"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx{{}, out, {}};
    app.add_flag("--json", ctx.g.json, "Emit JSON");
    app.add_flag("--force", ctx.g.force, "Lift default enumeration limits");
    app.add_option("--jobs", ctx.g.jobs, "Worker threads for enumeration and sampling")->check(CLI::PositiveNumber);
    app.add_option("--seed", ctx.g.seed, "Seed for sampling commands");

    std::string graph_file, cycles, cycles2;
    int n = 0;
    bool full = false, spot = false;
    std::uint64_t trials = 1000000;
    std::function<int()> action;

    auto* member = app.add_subcommand("member", "Test whether w is in D(G)");
    member->add_option("graph", graph_file, "Graph file")->required();
    member->add_option("cycles", cycles, "Permutation in cycle notation")->required();
    member->callback([&] { action = [&] { return cmd_member(ctx, graph_file, cycles); }; });

    auto* dset = app.add_subcommand("dset", "List D(G)");
    dset->add_option("graph", graph_file, "Graph file")->required();
    dset->callback([&] { action = [&] { return cmd_dset(ctx, graph_file); }; });

    auto add_w = [&](CLI::App* sub) {
        sub->add_option("cycles", cycles, "Derangement in cycle notation")->required();
        sub->add_option("-n,--n", n, "Ground set size")->required();
    };
    auto* freq = app.add_subcommand("freq", "Frequency, rate and theta of w");
    add_w(freq);
    freq->callback([&] { action = [&] { return cmd_freq(ctx, cycles, n); }; });

    auto* rate_cmd = app.add_subcommand("rate", "Rate of w");
    add_w(rate_cmd);
    rate_cmd->callback([&] { action = [&] { return cmd_rate(ctx, cycles, n); }; });

    auto* theta_cmd = app.add_subcommand("theta", "Theta profile of w");
    add_w(theta_cmd);
    theta_cmd->callback([&] { action = [&] { return cmd_theta(ctx, cycles, n); }; });

    auto* compare = app.add_subcommand("compare", "Compare theta profiles and frequencies");
    compare->add_option("w1", cycles, "First derangement")->required();
    compare->add_option("w2", cycles2, "Second derangement")->required();
    compare->add_option("-n,--n", n, "Ground set size")->required();
    compare->callback([&] { action = [&] { return cmd_compare(ctx, cycles, cycles2, n); }; });

    auto* extremal = app.add_subcommand("extremal", "Least and most frequent derangements");
    extremal->add_option("-n,--n", n, "Ground set size")->required();
    extremal->callback([&] { action = [&] { return cmd_extremal(ctx, n); }; });

    auto* verify = app.add_subcommand("verify", "Check the closed form against both oracles");
    verify->add_option("-n,--n", n, "Ground set size")->required();
    verify->add_flag("--full", full, "All derangements of {1..n}");
    verify->add_flag("--spot", spot, "Designated spot-check list");
    verify->callback([&] { action = [&] { return cmd_verify(ctx, n, full, spot); }; });

    auto* sample = app.add_subcommand("sample", "Monte-Carlo estimate of r(w)");
    add_w(sample);
    sample->add_option("--trials", trials, "Number of random graphs");
    sample->callback([&] { action = [&] { return cmd_sample(ctx, cycles, n, trials); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        const int code = action();
        if (ctx.g.json) out << ctx.doc.dump(2) << "\n";
        return code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
    }
    return kInputError;
}

}  // namespace dfreq::cli
