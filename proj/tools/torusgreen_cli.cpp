// Command-line front end: point evaluation of the special functions and
// potentials, the two asymptotic scans, the sup search, the verification
// suite, and SVG plots of the scans.
//
// Exit codes: 0 success, 1 verification failures, 2 usage or domain errors,
// 3 file IO errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <torusgreen/torusgreen.hpp>

namespace tg = torusgreen;

namespace {

struct eval_options {
    std::string fn;
    std::string tau_text;
    std::string z_text;
    std::string w_text;
    std::string u_text;
    CLI::Option* z_opt = nullptr;
    CLI::Option* w_opt = nullptr;
    CLI::Option* u_opt = nullptr;
    int max_terms = 200;
    double term_tol = 1e-16;
};

tg::series_control make_control(int max_terms, double term_tol)
{
    tg::series_control ctrl;
    ctrl.max_terms = max_terms;
    ctrl.term_tolerance = term_tol;
    validate(ctrl);
    return ctrl;
}

tg::complex parse_flag_complex(const std::string& text, const char* flag)
{
    try {
        return tg::parse_complex_literal(text);
    } catch (const tg::parse_error& e) {
        throw tg::parse_error(std::string(flag) + ": " + e.what());
    }
}

void require_for_fn(const CLI::Option* opt, const char* flag, const std::string& fn)
{
    if (opt == nullptr || opt->count() == 0)
        throw tg::parse_error("eval --fn " + fn + " requires " + flag);
}

std::string run_eval(const eval_options& opt)
{
    const tg::series_control ctrl = make_control(opt.max_terms, opt.term_tol);
    const tg::complex tau = parse_flag_complex(opt.tau_text, "--tau");
    const std::string& fn = opt.fn;

    if (fn == "theta1" || fn == "theta1-series") {
        require_for_fn(opt.z_opt, "--z", fn);
        const tg::complex z = parse_flag_complex(opt.z_text, "--z");
        const tg::nome n = tg::nome_from_tau(tau);
        const tg::complex v = fn == "theta1" ? tg::theta1(z, n, ctrl) : tg::theta1_series(z, n, ctrl);
        return tg::format_complex(v);
    }
    if (fn == "theta1-prime")
        return tg::format_complex(tg::theta1_prime_at_zero(tg::nome_from_tau(tau), ctrl));
    if (fn == "eta")
        return tg::format_complex(tg::dedekind_eta(tau, ctrl));

    const tg::torus t = tg::torus_from_tau(tau);
    if (fn == "green") {
        require_for_fn(opt.z_opt, "--z", fn);
        require_for_fn(opt.w_opt, "--w", fn);
        const tg::complex z = parse_flag_complex(opt.z_text, "--z");
        const tg::complex w = parse_flag_complex(opt.w_text, "--w");
        return tg::format_double(tg::arakelov_green(t, z, w, ctrl));
    }
    if (fn == "metric-torus")
        return tg::format_double(tg::arakelov_metric_torus(t, ctrl));
    if (fn == "bergman-torus")
        return tg::format_double(tg::bergman_density_torus(t));
    if (fn == "suita-torus")
        return tg::format_double(tg::suita_ratio_torus(t, ctrl));

    // the remaining functions live on the punctured torus
    require_for_fn(opt.u_opt, "--u", fn);
    const tg::complex u = parse_flag_complex(opt.u_text, "--u");
    const tg::punctured_torus pt = tg::make_punctured_torus(t, u);
    if (fn == "evans") {
        require_for_fn(opt.w_opt, "--w", fn);
        require_for_fn(opt.z_opt, "--z", fn);
        const tg::complex w = parse_flag_complex(opt.w_text, "--w");
        const tg::complex z = parse_flag_complex(opt.z_text, "--z");
        return tg::format_double(tg::evans_selberg(pt, w, z, ctrl));
    }
    if (fn == "metric-fundamental") {
        require_for_fn(opt.w_opt, "--w", fn);
        const tg::complex w = parse_flag_complex(opt.w_text, "--w");
        return tg::format_double(tg::fundamental_metric(pt, w, ctrl));
    }
    if (fn == "bergman-punctured")
        return tg::format_double(tg::bergman_density_punctured(pt));
    if (fn == "suita-punctured") {
        require_for_fn(opt.w_opt, "--w", fn);
        const tg::complex w = parse_flag_complex(opt.w_text, "--w");
        return tg::format_double(tg::suita_ratio_punctured(pt, w, ctrl));
    }
    throw tg::parse_error("eval: unknown --fn " + fn);
}

void emit(const std::string& content, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << content;
    else
        tg::write_text_file_atomic(out_path, content);
}

std::vector<double> parse_values_or_range(const std::string& text)
{
    if (text.find(':') != std::string::npos)
        return tg::parse_range(text);
    return tg::parse_double_list(text);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Potential theory on complex tori: theta functions, Green potentials, "
                 "conformal metrics, asymptotic scans, and a verification suite."};
    app.require_subcommand(1);

    // eval
    eval_options ev;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate one function at a point");
    eval->add_option("--fn", ev.fn, "Function to evaluate")
        ->required()
        ->check(CLI::IsMember({"theta1", "theta1-series", "theta1-prime", "eta", "green", "evans",
                               "metric-torus", "metric-fundamental", "bergman-torus",
                               "bergman-punctured", "suita-torus", "suita-punctured"}));
    eval->add_option("--tau", ev.tau_text, "Modulus, e.g. 0.3+1.2i (Im tau >= 0.05)")->required();
    ev.z_opt = eval->add_option("--z", ev.z_text, "Evaluation point");
    ev.w_opt = eval->add_option("--w", ev.w_text, "Pole / metric point");
    ev.u_opt = eval->add_option("--u", ev.u_text, "Puncture");
    eval->add_option("--max-terms", ev.max_terms, "Series term cap")->capture_default_str();
    eval->add_option("--term-tol", ev.term_tol, "Series truncation tolerance")->capture_default_str();

    // scan-puncture
    std::string sp_tau, sp_u, sp_direction = "1";
    std::string sp_radii = "0.1,0.01,0.001,0.0001";
    std::string sp_format = "csv", sp_out;
    int sp_max_terms = 200;
    double sp_term_tol = 1e-16;
    CLI::App* scan_p = app.add_subcommand(
        "scan-puncture", "Approach the puncture along a ray and tabulate metric and ratio");
    scan_p->add_option("--tau", sp_tau, "Modulus")->required();
    scan_p->add_option("--u", sp_u, "Puncture")->required();
    scan_p->add_option("--direction", sp_direction, "Unit approach direction")->capture_default_str();
    scan_p->add_option("--radii", sp_radii, "Comma list, strictly decreasing")->capture_default_str();
    scan_p->add_option("--format", sp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scan_p->add_option("--out", sp_out, "Output file (stdout when omitted)");
    scan_p->add_option("--max-terms", sp_max_terms, "Series term cap")->capture_default_str();
    scan_p->add_option("--term-tol", sp_term_tol, "Series truncation tolerance")->capture_default_str();

    // scan-degeneration
    std::string sd_u, sd_w, sd_imtau = "1:40:1";
    std::string sd_format = "csv", sd_out;
    int sd_max_terms = 200;
    double sd_term_tol = 1e-16;
    CLI::App* scan_d = app.add_subcommand(
        "scan-degeneration", "Send tau = i t up the imaginary axis and tabulate both ratios");
    scan_d->add_option("--u", sd_u, "Puncture")->required();
    scan_d->add_option("--w", sd_w, "Metric point")->required();
    scan_d->add_option("--im-tau", sd_imtau, "start:stop:step range or comma list, increasing")
        ->capture_default_str();
    scan_d->add_option("--format", sd_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    scan_d->add_option("--out", sd_out, "Output file (stdout when omitted)");
    scan_d->add_option("--max-terms", sd_max_terms, "Series term cap")->capture_default_str();
    scan_d->add_option("--term-tol", sd_term_tol, "Series truncation tolerance")->capture_default_str();

    // sup-green
    std::string sg_tau;
    int sg_grid = 256, sg_rounds = 3, sg_factor = 8;
    double sg_exclusion = 0.0;
    CLI::App* supg = app.add_subcommand("sup-green", "Locate the maximum of the Green function");
    supg->add_option("--tau", sg_tau, "Modulus")->required();
    supg->add_option("--grid", sg_grid, "Coarse grid resolution")->capture_default_str();
    supg->add_option("--rounds", sg_rounds, "Refinement rounds")->capture_default_str();
    supg->add_option("--factor", sg_factor, "Refinement subdivision factor")->capture_default_str();
    supg->add_option("--exclusion", sg_exclusion, "Torus radius to skip around the pole")
        ->capture_default_str();

    // verify
    std::uint64_t vf_seed = 42;
    std::vector<std::string> vf_taus;
    std::string vf_format = "json", vf_out;
    int vf_max_terms = 200;
    double vf_term_tol = 1e-16;
    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--seed", vf_seed, "Sampler seed")->capture_default_str();
    verify->add_option("--tau", vf_taus,
                       "Modulus, repeatable (default: 0+1i, 0+2i, 0.3+1.2i)");
    verify->add_option("--format", vf_format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    verify->add_option("--out", vf_out, "Output file (stdout when omitted)");
    verify->add_option("--max-terms", vf_max_terms, "Series term cap")->capture_default_str();
    verify->add_option("--term-tol", vf_term_tol, "Series truncation tolerance")->capture_default_str();

    // plot
    std::string pl_scan, pl_column, pl_out;
    std::string pl_tau, pl_u, pl_w, pl_direction = "1";
    std::string pl_radii = "0.1,0.01,0.001,0.0001", pl_imtau = "1:40:1";
    bool pl_log_x = false, pl_log_y = false;
    CLI::App* plot = app.add_subcommand("plot", "Render one scan column as an SVG line chart");
    plot->add_option("--scan", pl_scan, "Which scan to run")
        ->required()
        ->check(CLI::IsMember({"puncture", "degeneration"}));
    plot->add_option("--column", pl_column, "Column to plot on the y axis")->required();
    plot->add_option("--out", pl_out, "SVG output file")->required();
    plot->add_option("--tau", pl_tau, "Modulus (puncture scan)");
    plot->add_option("--u", pl_u, "Puncture");
    plot->add_option("--w", pl_w, "Metric point (degeneration scan)");
    plot->add_option("--direction", pl_direction, "Approach direction (puncture scan)")
        ->capture_default_str();
    plot->add_option("--radii", pl_radii, "Radii for the puncture scan")->capture_default_str();
    plot->add_option("--im-tau", pl_imtau, "Im tau values for the degeneration scan")
        ->capture_default_str();
    plot->add_flag("--log-x", pl_log_x, "Log-scale the x axis");
    plot->add_flag("--log-y", pl_log_y, "Log-scale the y axis");

    try {
        app.parse(argc, argv);

        if (eval->parsed()) {
            std::cout << run_eval(ev) << "\n";
            return 0;
        }

        if (scan_p->parsed()) {
            const tg::series_control ctrl = make_control(sp_max_terms, sp_term_tol);
            const tg::torus t = tg::torus_from_tau(parse_flag_complex(sp_tau, "--tau"));
            const tg::punctured_torus pt =
                tg::make_punctured_torus(t, parse_flag_complex(sp_u, "--u"));
            const tg::complex dir = parse_flag_complex(sp_direction, "--direction");
            const std::vector<double> radii = tg::parse_double_list(sp_radii);
            const auto rows = tg::asymptotic_scan_puncture(pt, dir, radii, ctrl);
            emit(sp_format == "csv" ? tg::puncture_scan_to_csv(rows)
                                    : tg::puncture_scan_to_json(rows),
                 sp_out);
            return 0;
        }

        if (scan_d->parsed()) {
            const tg::series_control ctrl = make_control(sd_max_terms, sd_term_tol);
            const tg::complex u = parse_flag_complex(sd_u, "--u");
            const tg::complex w = parse_flag_complex(sd_w, "--w");
            const std::vector<double> ts = parse_values_or_range(sd_imtau);
            const auto rows = tg::degeneration_scan(u, w, ts, ctrl);
            emit(sd_format == "csv" ? tg::degeneration_scan_to_csv(rows)
                                    : tg::degeneration_scan_to_json(rows),
                 sd_out);
            return 0;
        }

        if (supg->parsed()) {
            const tg::complex tau = parse_flag_complex(sg_tau, "--tau");
            const tg::torus t = tg::torus_from_tau(tau);
            tg::sup_search_config cfg;
            cfg.coarse_grid = sg_grid;
            cfg.refinement_rounds = sg_rounds;
            cfg.refinement_factor = sg_factor;
            cfg.pole_exclusion_radius = sg_exclusion;
            const tg::sup_green_result r = tg::sup_green(t, cfg);
            std::string out = "{\n";
            out += "  \"tau\": \"" + tg::json_escape(tg::format_complex(tau)) + "\",\n";
            out += "  \"grid\": " + std::to_string(sg_grid) + ",\n";
            out += "  \"rounds\": " + std::to_string(sg_rounds) + ",\n";
            out += "  \"factor\": " + std::to_string(sg_factor) + ",\n";
            out += "  \"sup\": " + tg::json_number(r.value) + ",\n";
            out += "  \"argmax\": \"" + tg::json_escape(tg::format_complex(r.argmax)) + "\",\n";
            out += "  \"argmax_re\": " + tg::json_number(r.argmax.real()) + ",\n";
            out += "  \"argmax_im\": " + tg::json_number(r.argmax.imag()) + "\n";
            out += "}\n";
            std::cout << out;
            return 0;
        }

        if (verify->parsed()) {
            const tg::series_control ctrl = make_control(vf_max_terms, vf_term_tol);
            std::vector<std::string> tau_texts = vf_taus;
            if (tau_texts.empty())
                tau_texts = {"0+1i", "0+2i", "0.3+1.2i"};
            std::vector<tg::complex> moduli;
            moduli.reserve(tau_texts.size());
            for (const std::string& s : tau_texts)
                moduli.push_back(parse_flag_complex(s, "--tau"));
            const auto reports = tg::run_full_suite(vf_seed, moduli, ctrl);
            bool all = true;
            for (const auto& r : reports) {
                std::cerr << (r.passed ? "PASS " : "FAIL ") << r.check_name << " (max residual "
                          << tg::format_double(r.max_residual) << ", tolerance "
                          << tg::format_double(r.tolerance) << ")\n";
                all = all && r.passed;
            }
            emit(vf_format == "json" ? tg::verify_output_to_json(vf_seed, moduli, reports)
                                     : tg::reports_to_csv(reports),
                 vf_out);
            return all ? 0 : 1;
        }

        if (plot->parsed()) {
            std::vector<double> xs, ys;
            std::string x_label;
            if (pl_scan == "puncture") {
                if (pl_tau.empty())
                    throw tg::parse_error("plot --scan puncture requires --tau");
                if (pl_u.empty())
                    throw tg::parse_error("plot --scan puncture requires --u");
                const tg::torus t = tg::torus_from_tau(parse_flag_complex(pl_tau, "--tau"));
                const tg::punctured_torus pt =
                    tg::make_punctured_torus(t, parse_flag_complex(pl_u, "--u"));
                const auto rows = tg::asymptotic_scan_puncture(
                    pt, parse_flag_complex(pl_direction, "--direction"),
                    tg::parse_double_list(pl_radii), {});
                x_label = "radius";
                for (const auto& r : rows) {
                    xs.push_back(r.radius);
                    if (pl_column == "k")
                        ys.push_back(r.sample.k);
                    else if (pl_column == "c_fund")
                        ys.push_back(r.sample.c);
                    else if (pl_column == "c_times_r")
                        ys.push_back(r.c_times_radius);
                    else if (pl_column == "ratio")
                        ys.push_back(r.sample.ratio);
                    else if (pl_column == "ratio_normalized")
                        ys.push_back(r.ratio_normalized);
                    else
                        throw tg::parse_error(
                            "plot: unknown puncture-scan column " + pl_column
                            + " (expected k, c_fund, c_times_r, ratio, or ratio_normalized)");
                }
            } else {
                if (pl_u.empty())
                    throw tg::parse_error("plot --scan degeneration requires --u");
                if (pl_w.empty())
                    throw tg::parse_error("plot --scan degeneration requires --w");
                const auto rows = tg::degeneration_scan(parse_flag_complex(pl_u, "--u"),
                                                        parse_flag_complex(pl_w, "--w"),
                                                        parse_values_or_range(pl_imtau), {});
                x_label = "im_tau";
                for (const auto& r : rows) {
                    xs.push_back(r.im_tau);
                    if (pl_column == "ratio_punctured")
                        ys.push_back(r.sample.ratio);
                    else if (pl_column == "ratio_torus")
                        ys.push_back(r.ratio_torus);
                    else if (pl_column == "c_fund")
                        ys.push_back(r.sample.c);
                    else if (pl_column == "c_limit")
                        ys.push_back(r.c_limit);
                    else
                        throw tg::parse_error(
                            "plot: unknown degeneration-scan column " + pl_column
                            + " (expected ratio_punctured, ratio_torus, c_fund, or c_limit)");
                }
            }
            const std::string svg = tg::svg_line_chart(xs, ys, pl_column + " vs " + x_label,
                                                       x_label, pl_column, pl_log_x, pl_log_y);
            tg::write_text_file_atomic(pl_out, svg);
            return 0;
        }

        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tg::io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const tg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
