#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dodson/csv.hpp"
#include "dodson/errors.hpp"
#include "dodson/solutions.hpp"
#include "dodson/special_functions.hpp"
#include "dodson/version.hpp"
#include "figures.hpp"
#include "verify/verify.hpp"

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct EvalArgs {
    std::string function;
    std::optional<double> nu;
    std::optional<double> alpha;
    double z = 0.0;
};

struct SolutionArgs {
    double nu = 1.0;
    double beta = 1.0;
    double d0 = 1.0;
    double t = 1.0;
    double xmin = -5.0;
    double xmax = 5.0;
    std::size_t nx = 501;
    std::string out;
};

int cmd_eval(const EvalArgs& a) {
    double v;
    if (a.function == "ml") {
        if (!a.nu) throw dodson::InvalidArgument("eval ml needs --nu");
        v = dodson::mittag_leffler(dodson::OperatorOrder(*a.nu), a.z);
    } else if (a.function == "mwright") {
        if (!a.alpha) throw dodson::InvalidArgument("eval mwright needs --alpha");
        v = dodson::m_wright(dodson::WrightIndex(*a.alpha), a.z);
    } else {
        v = dodson::airy_ai(a.z);
    }
    std::printf("%.15g\n", v);
    return 0;
}

int cmd_solution(const SolutionArgs& a) {
    if (a.nx < 2) throw dodson::InvalidArgument("--nx must be >= 2");
    if (!(a.xmin < a.xmax)) throw dodson::InvalidArgument("--xmin must be below --xmax");
    const auto p = dodson::fundamental_profile(dodson::OperatorOrder(a.nu), dodson::DodsonClock(a.beta, a.d0),
                                               dodson::linspace(a.xmin, a.xmax, a.nx), a.t);
    dodson::CsvTable::from_profile(p).write_file(a.out);
    return 0;
}

int cmd_figure(int which, const std::string& out) {
    dodson::tools::figure_table(which).write_file(out);
    return 0;
}

int cmd_verify(const std::string& suite) {
    bool ok = true;
    auto run = [&](std::string_view name) {
        const auto r = dodson::verify::run_suite(name);
        dodson::verify::print(std::cout, r);
        ok = ok && r.passed();
    };
    if (suite == "all")
        for (auto name : dodson::verify::suite_names()) run(name);
    else
        run(suite);
    std::cout << (ok ? "ALL PASS" : "SOME CHECKS FAILED") << '\n';
    return ok ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fractional Dodson diffusion: special functions, solutions and checks", "dodson"};
    app.set_version_flag("--version", std::string(dodson::kVersion));
    app.require_subcommand(1);

    EvalArgs eval;
    auto* ev = app.add_subcommand("eval", "Evaluate a special function");
    ev->add_option("function", eval.function, "ml, mwright or airy")
        ->required()
        ->check(CLI::IsMember({"ml", "mwright", "airy"}));
    ev->add_option("--nu", eval.nu, "Mittag-Leffler order, 0 < nu <= 1");
    ev->add_option("--alpha", eval.alpha, "M-Wright index, 0 <= alpha < 1");
    ev->add_option("--z", eval.z, "Argument")->required();

    SolutionArgs sol;
    auto* so = app.add_subcommand("solution", "Write the fundamental solution on a grid as CSV");
    so->add_option("--nu", sol.nu, "Order, 0 < nu <= 1")->required();
    so->add_option("--beta", sol.beta, "Diffusivity decay rate")->capture_default_str();
    so->add_option("--d0", sol.d0, "Initial diffusivity")->capture_default_str();
    so->add_option("--t", sol.t, "Time")->required();
    so->add_option("--xmin", sol.xmin)->capture_default_str();
    so->add_option("--xmax", sol.xmax)->capture_default_str();
    so->add_option("--nx", sol.nx)->capture_default_str();
    so->add_option("--out", sol.out, "Output CSV path")->required();

    int which = 0;
    std::string figure_out;
    auto* fi = app.add_subcommand("figure", "Write the data of figure 1, 2 or 3 as CSV");
    fi->add_option("which", which)->required()->check(CLI::IsMember({1, 2, 3}));
    fi->add_option("--out", figure_out, "Output CSV path")->required();

    std::string suite;
    std::vector<std::string> suites{"all"};
    for (auto s : dodson::verify::suite_names()) suites.emplace_back(s);
    auto* ve = app.add_subcommand("verify", "Run a verification suite");
    ve->add_option("suite", suite)->required()->check(CLI::IsMember(suites));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*ev) return cmd_eval(eval);
        if (*so) return cmd_solution(sol);
        if (*fi) return cmd_figure(which, figure_out);
        return cmd_verify(suite);
    } catch (const dodson::IoError& e) {
        std::cerr << "dodson: " << e.what() << '\n';
        return kExitIo;
    } catch (const dodson::InvalidOrder& e) {
        std::cerr << "dodson: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const dodson::InvalidArgument& e) {
        std::cerr << "dodson: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const dodson::PoleError& e) {
        std::cerr << "dodson: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "dodson: " << e.what() << '\n';
        return kExitFailed;
    }
}
