// Batch front end: parse a function spec, run scans / identity checks /
// Mellin tabulation / recovery, and emit CSV or JSON.
//
// Exit status 0 means every requested check passed, so the tool can gate CI.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "unckit/beurling.hpp"
#include "unckit/mellin.hpp"
#include "unckit/recover.hpp"
#include "unckit/spec_io.hpp"

namespace {

using namespace unckit;
using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string input_path;
    double tol = 1e-8;
    std::vector<double> schedule = default_schedule();
    std::string out_path;
    std::string format = "csv";
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open input file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file: " + cfg.out_path);
    }
    out << text;
}

int threads_from_env() {
    const char* v = std::getenv("UNCERTAINTY_KIT_THREADS");
    if (!v) return 1;
    const int n = std::atoi(v);
    return n > 0 ? n : 1;
}

struct Check {
    std::string name;
    double residual;
    double threshold;
    bool skipped = false;

    bool passed() const { return skipped || residual <= threshold; }
};

json check_to_json(const Check& c) {
    json j;
    j["name"] = c.name;
    j["residual"] = c.residual;
    j["threshold"] = c.threshold;
    j["status"] = c.skipped ? "skipped" : (c.passed() ? "pass" : "fail");
    return j;
}

int cmd_scan(const RunConfig& cfg) {
    const GaussPoly f = parse_function_spec(read_file(cfg.input_path));
    const ScanResult r =
        scan_growth(f, cfg.schedule, cfg.tol, threads_from_env());

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "lambda,I,err_estimate\n";
        for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
            out << format_double(r.lambdas[i]) << ',' << format_double(r.values[i])
                << ',' << format_double(r.errs[i]) << '\n';
        }
        if (r.diverged_at) {
            out << "# diverged_at=" << format_double(*r.diverged_at) << '\n';
        } else {
            out << "# N_hat=" << format_double(*r.exponent)
                << " residual=" << format_double(r.residual) << '\n';
        }
        write_output(cfg, out.str());
    } else {
        json doc;
        doc["command"] = "scan";
        doc["input"] = cfg.input_path;
        json rows = json::array();
        for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
            rows.push_back({{"lambda", r.lambdas[i]},
                            {"I", r.values[i]},
                            {"err_estimate", r.errs[i]}});
        }
        doc["results"] = rows;
        doc["checks"] = json::array();
        if (r.diverged_at) {
            doc["diverged_at"] = *r.diverged_at;
            doc["exit_reason"] = "divergence detected";
        } else {
            doc["N_hat"] = *r.exponent;
            doc["residual"] = r.residual;
            doc["exit_reason"] = "ok";
        }
        write_output(cfg, doc.dump(2) + "\n");
    }
    return r.diverged_at ? 3 : 0;
}

int cmd_verify(const RunConfig& cfg) {
    const GaussPoly f = parse_function_spec(read_file(cfg.input_path));
    std::vector<Check> checks;

    // Reflection F(1/l) = |l| F(l) on a log-spaced lambda grid.
    {
        double worst = 0.0;
        for (int i = 0; i < 30; ++i) {
            const double l = 0.1 * std::pow(100.0, i / 29.0);
            worst = std::max(worst, reflection_residual(f, l));
        }
        checks.push_back({"reflection", worst, 1e-10});
    }

    const bool single_width = f.terms().size() == 1;
    auto [even, odd] = parity_parts(f);
    std::vector<std::pair<int, GaussPoly>> parts;
    if (!even.empty()) parts.emplace_back(0, even);
    if (!odd.empty()) parts.emplace_back(1, odd);

    std::vector<double> t_grid;
    for (int i = 0; i <= 20; ++i) t_grid.push_back(0.5 * i);

    for (const auto& [k, part] : parts) {
        const std::string tag = (k == 0) ? "even" : "odd";
        if (!single_width) {
            checks.push_back({"product_identity_" + tag, 0.0, 1e-9, true});
            checks.push_back({"theta_product_" + tag, 0.0, 1e-8, true});
            continue;
        }
        checks.push_back(
            {"product_identity_" + tag, verify_product_identity(part, t_grid),
             1e-9});
        const ThetaFit tp = theta_product_poly(part, k, real_grid(-3.0, 3.0, 61));
        checks.push_back({"theta_product_" + tag, tp.residual, 1e-8});
        double worst_hat = 0.0;
        for (double t : t_grid) {
            worst_hat =
                std::max(worst_hat, theta_hat_relation(part, k, Complex(0.0, t)));
        }
        checks.push_back({"theta_hat_" + tag, worst_hat, 1e-9});
    }

    bool all_pass = true;
    for (const Check& c : checks) all_pass = all_pass && c.passed();

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "check,residual,threshold,status\n";
        for (const Check& c : checks) {
            out << c.name << ',' << format_double(c.residual) << ','
                << format_double(c.threshold) << ','
                << (c.skipped ? "skipped" : (c.passed() ? "pass" : "fail"))
                << '\n';
        }
        write_output(cfg, out.str());
    } else {
        json doc;
        doc["command"] = "verify";
        doc["input"] = cfg.input_path;
        doc["results"] = json::array();
        doc["checks"] = json::array();
        for (const Check& c : checks) doc["checks"].push_back(check_to_json(c));
        doc["exit_reason"] = all_pass ? "ok" : "check failed";
        write_output(cfg, doc.dump(2) + "\n");
    }
    return all_pass ? 0 : 1;
}

int cmd_mellin(const RunConfig& cfg) {
    const GaussPoly f = parse_function_spec(read_file(cfg.input_path));
    struct Row {
        double t;
        int k;
        Complex m, th;
    };
    std::vector<Row> rows;
    for (int k = 0; k <= 1; ++k) {
        for (int i = 0; i <= 20; ++i) {
            const double t = 0.5 * i;
            const Complex z(0.0, t);
            rows.push_back(
                {t, k, mellin_gausspoly_closed(f, k, z), theta(f, k, z)});
        }
    }
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "t,k,M_re,M_im,Theta_re,Theta_im\n";
        for (const Row& r : rows) {
            out << format_double(r.t) << ',' << r.k << ','
                << format_double(r.m.real()) << ',' << format_double(r.m.imag())
                << ',' << format_double(r.th.real()) << ','
                << format_double(r.th.imag()) << '\n';
        }
        write_output(cfg, out.str());
    } else {
        json doc;
        doc["command"] = "mellin";
        doc["input"] = cfg.input_path;
        json jr = json::array();
        for (const Row& r : rows) {
            jr.push_back({{"t", r.t},
                          {"k", r.k},
                          {"M", {r.m.real(), r.m.imag()}},
                          {"Theta", {r.th.real(), r.th.imag()}}});
        }
        doc["results"] = jr;
        doc["checks"] = json::array();
        doc["exit_reason"] = "ok";
        write_output(cfg, doc.dump(2) + "\n");
    }
    return 0;
}

int cmd_recover(const RunConfig& cfg) {
    const GaussPoly f = parse_function_spec(read_file(cfg.input_path));
    // Sample the parsed model on a symmetric grid scaled to its width,
    // then run the recovery pipeline on the samples alone.
    const double span = 8.0 / std::sqrt(f.min_width());
    std::vector<double> xs, ys;
    for (int i = 0; i < 257; ++i) {
        const double x = -span + 2.0 * span * i / 256.0;
        xs.push_back(x);
        ys.push_back(f.eval_real(x));
    }
    const SampledFn samples(xs, ys);
    const double a = fit_gaussian_width(samples);
    const std::vector<double> coeffs = recover_polynomial(samples, a);

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "quantity,value\n";
        out << "width," << format_double(a) << '\n';
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            out << "c" << j << ',' << format_double(coeffs[j]) << '\n';
        }
        write_output(cfg, out.str());
    } else {
        json doc;
        doc["command"] = "recover";
        doc["input"] = cfg.input_path;
        doc["results"] = {{"width", a}, {"coeffs", coeffs}};
        doc["checks"] = json::array();
        doc["exit_reason"] = "ok";
        write_output(cfg, doc.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical toolkit for the gaussian uncertainty integral"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string schedule_arg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input_path, "function spec (JSON)")
            ->required();
        sub->add_option("--tol", cfg.tol, "quadrature tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--schedule", schedule_arg,
                        "comma-separated lambda list");
        sub->add_option("--out", cfg.out_path, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    add_common(app.add_subcommand("scan", "I(lambda) scan and growth exponent"));
    add_common(app.add_subcommand("verify", "identity check suite"));
    add_common(app.add_subcommand("mellin", "tabulate M^k and Theta^k"));
    add_common(app.add_subcommand("recover", "fit width and polynomial"));

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (!schedule_arg.empty()) {
            cfg.schedule.clear();
            std::stringstream ss(schedule_arg);
            std::string item;
            while (std::getline(ss, item, ',')) {
                cfg.schedule.push_back(std::stod(item));
            }
        }
        for (std::size_t i = 0; i < cfg.schedule.size(); ++i) {
            if (cfg.schedule[i] >= 1.0 ||
                (i > 0 && cfg.schedule[i] <= cfg.schedule[i - 1])) {
                throw ValidationError(
                    "schedule must strictly increase and stay below 1");
            }
        }

        if (cfg.command == "scan") return cmd_scan(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "mellin") return cmd_mellin(cfg);
        return cmd_recover(cfg);
    } catch (const std::exception& e) {
        nlohmann::json err;
        err["command"] = cfg.command;
        err["input"] = cfg.input_path;
        err["error"] = e.what();
        err["exit_reason"] = "error";
        std::cerr << err.dump() << std::endl;
        return 2;
    }
}
