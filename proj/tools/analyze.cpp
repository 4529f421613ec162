#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dla/oracle.hpp"
#include "dla/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dla::ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int run_verify(const dla::Analysis& a, size_t max_states) {
    auto r = dla::enumerate_reachable(a.domain, a.problem, max_states);
    std::cout << "verify: " << r.worlds.size() << " reachable states"
              << (r.complete ? "" : " (truncated; checks cover the visited prefix)")
              << "\n";
    bool ok = true;
    auto sound = dla::check_projection_soundness(a.spaces, r);
    if (!sound.holds) {
        ok = false;
        std::cout << "verify: projection soundness FAILED: " << sound.detail
                  << "\n";
    } else {
        std::cout << "verify: projection soundness ok\n";
    }
    std::vector<dla::Space> prop_subs;
    for (const auto& s : a.subspaces)
        if (s.is_property_space()) prop_subs.push_back(s);
    auto sub_sound = dla::check_projection_soundness(prop_subs, r);
    if (!sub_sound.holds) {
        ok = false;
        std::cout << "verify: sub-space projection soundness FAILED: "
                  << sub_sound.detail << "\n";
    }
    size_t held = 0;
    for (const auto& inv : a.invariants) {
        auto c = dla::check_invariant(inv, r, a.types, a.problem.objects);
        if (c.holds) {
            ++held;
        } else {
            ok = false;
            std::cout << "verify: invariant FAILED: "
                      << dla::render(*inv.formula, a.types) << "\n";
        }
    }
    std::cout << "verify: " << held << "/" << a.invariants.size()
              << " invariants hold\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type and state invariant analysis for untyped STRIPS domains"};
    app.fallthrough();
    std::string domain_path, problem_path, format = "text", dump;
    bool verify = false, timings = false;
    size_t max_states = 200000;
    app.add_option("--domain", domain_path, "Domain file (PDDL)")->required();
    app.add_option("--problem", problem_path, "Problem file (PDDL)")->required();
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verify", verify,
                 "Check every reported invariant against the reachable states");
    app.add_option("--dump", dump, "Dump intermediate structures")
        ->check(CLI::IsMember({"rules", "spaces"}));
    app.add_option("--max-states", max_states,
                   "Reachability bound used by --verify");
    app.add_flag("--timings", timings, "Print per-phase wall time");
    CLI::App* sub = app.add_subcommand(
        "verify", "Analyse, then check the results against reachability");
    CLI11_PARSE(app, argc, argv);
    if (sub->parsed()) verify = true;

    try {
        auto t0 = Clock::now();
        dla::DomainModel d = dla::parse_domain(slurp(domain_path));
        dla::ProblemModel p = dla::parse_problem(slurp(problem_path));
        double parse_ms = ms_since(t0);

        auto t1 = Clock::now();
        dla::Analysis a = dla::analyze(d, p);
        double analysis_ms = ms_since(t1);

        auto t2 = Clock::now();
        if (dump == "rules")
            std::cout << dla::render_rules_dump(a);
        else if (dump == "spaces")
            std::cout << dla::render_spaces_dump(a);
        else if (format == "json")
            std::cout << dla::render_json(a);
        else
            std::cout << dla::render_text(a);
        int rc = verify ? run_verify(a, max_states) : 0;
        double output_ms = ms_since(t2);

        if (timings) {
            std::cerr.setf(std::ios::fixed);
            std::cerr.precision(2);
            std::cerr << "Parse time: " << parse_ms << " ms\n"
                      << "Analysis time: " << analysis_ms << " ms\n"
                      << "Output time: " << output_ms << " ms\n";
        }
        return rc;
    } catch (const dla::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
