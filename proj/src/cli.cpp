#include "sl4zeta/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sl4zeta/counting.hpp"
#include "sl4zeta/km_ring.hpp"
#include "sl4zeta/spectrum.hpp"
#include "sl4zeta/verify.hpp"
#include "sl4zeta/zeta.hpp"

namespace sl4 {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

AngleLaw parse_angle_law(const std::string& s) {
    if (s == "weyl") return AngleLaw::weyl_measure();
    if (s == "uniform") return AngleLaw::uniform();
    if (s.rfind("fixed:", 0) == 0) {
        std::string rest = s.substr(6);
        long long p1, q1, p2, q2;
        if (std::sscanf(rest.c_str(), "%lld/%lld,%lld/%lld", &p1, &q1, &p2, &q2) != 4)
            throw CLI::ValidationError("--angles", "fixed law must be fixed:p/q,p/q (units of pi)");
        return AngleLaw::fixed(Angle::rational(p1, q1), Angle::rational(p2, q2));
    }
    throw CLI::ValidationError("--angles", "expected weyl, uniform or fixed:p/q,p/q");
}

VirtualRep parse_sigma(const std::string& s) {
    if (s == "triv") return VirtualRep::of(KMType::triv());
    if (s == "tilde") return sigma_tilde();
    if (s.rfind("wedge-nbar:", 0) == 0) {
        int q = std::stoi(s.substr(11));
        return wedge_nbar(q);
    }
    throw CLI::ValidationError("--sigma", "expected triv, tilde or wedge-nbar:q");
}

// "re0:re1:step" with optional ",im".
std::vector<Cplx> parse_s_grid(const std::string& s) {
    double re0, re1, step, im = 0.0;
    std::string head = s;
    auto comma = s.find(',');
    if (comma != std::string::npos) {
        head = s.substr(0, comma);
        im = std::stod(s.substr(comma + 1));
    }
    if (std::sscanf(head.c_str(), "%lf:%lf:%lf", &re0, &re1, &step) != 3 || step <= 0.0)
        throw CLI::ValidationError("--grid", "expected re0:re1:step[,im] with step > 0");
    std::vector<Cplx> out;
    for (double re = re0; re <= re1 + 1e-12; re += step) out.emplace_back(re, im);
    if (out.empty()) throw CLI::ValidationError("--grid", "empty grid");
    return out;
}

// "x0:x1:n" log-spaced.
std::vector<double> parse_x_grid(const std::string& s) {
    double x0, x1;
    int n;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &x0, &x1, &n) != 3 || n < 1 || !(x0 > 1.0) ||
        !(x1 > x0))
        throw CLI::ValidationError("--grid", "expected x0:x1:n with 1 < x0 < x1, n >= 1");
    std::vector<double> out;
    if (n == 1) {
        out.push_back(x1);
        return out;
    }
    double l0 = std::log(x0), l1 = std::log(x1);
    for (int i = 0; i < n; ++i) out.push_back(std::exp(l0 + (l1 - l0) * i / (n - 1)));
    return out;
}

// Semicolon-separated boxes "t0,t1,p0,p1" in units of pi, or "full".
Window parse_window(const std::string& s, double margin) {
    if (s == "full") return full_torus_window(margin);
    std::vector<WindowBox> boxes;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, ';')) {
        WindowBox b{};
        if (std::sscanf(part.c_str(), "%lf,%lf,%lf,%lf", &b.t0, &b.t1, &b.p0, &b.p1) != 4)
            throw CLI::ValidationError("--window", "box must be t0,t1,p0,p1 in units of pi");
        boxes.push_back(b);
    }
    if (boxes.empty()) throw CLI::ValidationError("--window", "no boxes given");
    return make_window(boxes, margin);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << content;
}

}  // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"synthetic length-spectrum zeta and prime-geodesic counting toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a synthetic primitive-geodesic spectrum");
    double g_xmax = 1e4;
    std::uint64_t g_seed = 1;
    double g_constant = 2.0;
    std::string g_angles = "weyl", g_out;
    gen->add_option("--xmax", g_xmax, "largest primitive norm")->required();
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--constant", g_constant, "target main-term constant");
    gen->add_option("--angles", g_angles, "weyl | uniform | fixed:p/q,p/q");
    gen->add_option("--out", g_out, "output JSONL path")->required();

    // zeta
    auto* zeta = app.add_subcommand("zeta", "evaluate log Z on an s-grid");
    std::string z_spectrum, z_sigma = "triv", z_grid = "2:4:0.25", z_out;
    double z_lmax = 30.0;
    bool z_check = false;
    int z_threads = 0;
    zeta->add_option("--spectrum", z_spectrum, "spectrum JSONL path")->required();
    zeta->add_option("--sigma", z_sigma, "triv | tilde | wedge-nbar:q");
    zeta->add_option("--grid", z_grid, "re0:re1:step[,im]");
    zeta->add_option("--lmax", z_lmax, "truncation length L_max");
    zeta->add_option("--threads", z_threads, "worker threads (0 = ZETA_THREADS or 1)");
    zeta->add_flag("--check-factorization", z_check, "also compute the factorization residual");
    zeta->add_option("--out", z_out, "output CSV path")->required();

    // count
    auto* count = app.add_subcommand("count", "counting-function table over an x-grid");
    std::string c_spectrum, c_window = "full", c_grid = "100:1000000:13", c_out;
    double c_margin = 0.02;
    count->add_option("--spectrum", c_spectrum, "spectrum JSONL path")->required();
    count->add_option("--window", c_window, "full or boxes t0,t1,p0,p1;... (units of pi)");
    count->add_option("--margin", c_margin, "bump margin in radians");
    count->add_option("--grid", c_grid, "x0:x1:n, log-spaced");
    count->add_option("--out", c_out, "output CSV path")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the conformance suite");

    // fit
    auto* fit = app.add_subcommand("fit", "fit a main-term model to a count-table column");
    std::string f_table, f_model = "x", f_column = "psi", f_out;
    fit->add_option("--table", f_table, "count-table CSV path")->required();
    fit->add_option("--model", f_model, "x | xlog | li");
    fit->add_option("--column", f_column, "table column to fit");
    fit->add_option("--out", f_out, "optional output path for the JSON report");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            Spectrum sp = generate_pnt_like(g_xmax, g_seed, g_constant, parse_angle_law(g_angles));
            save(sp, g_out);
            std::cout << "wrote " << sp.classes.size() << " classes to " << g_out << "\n";
            return 0;
        }
        if (zeta->parsed()) {
            Spectrum sp = load(z_spectrum);
            VirtualRep sigma = parse_sigma(z_sigma);
            TruncationConfig cfg;
            cfg.L_max = z_lmax;
            std::ostringstream os;
            os << "s_re,s_im,logZ_re,logZ_im,residual_abs\n";
            double max_res = 0.0;
            for (Cplx s : parse_s_grid(z_grid)) {
                Cplx z = log_selberg(sp, sigma, s, cfg, z_threads);
                double res = 0.0;
                if (z_check) {
                    res = std::abs(factorization_residual(sp, sigma, s, cfg, z_threads));
                    max_res = std::max(max_res, res);
                }
                os << fmt17(s.real()) << ',' << fmt17(s.imag()) << ',' << fmt17(z.real()) << ','
                   << fmt17(z.imag()) << ',' << fmt17(res) << '\n';
            }
            write_file(z_out, os.str());
            if (z_check) std::cout << "max |factorization residual| = " << fmt17(max_res) << "\n";
            return 0;
        }
        if (count->parsed()) {
            Spectrum sp = load(c_spectrum);
            Window w = parse_window(c_window, c_margin);
            CountTable t = count_table(sp, w, parse_x_grid(c_grid));
            write_file(c_out, count_table_csv(t));
            return 0;
        }
        if (verify->parsed()) {
            auto items = run_verify_suite();
            int failed = 0;
            for (const auto& it : items) {
                std::cout << (it.pass ? "PASS" : "FAIL") << "  " << it.name << " — " << it.detail
                          << "\n";
                if (!it.pass) ++failed;
            }
            std::cout << (failed == 0 ? "all items passed" : "some items failed") << "\n";
            return failed == 0 ? 0 : 2;
        }
        if (fit->parsed()) {
            std::ifstream f(f_table);
            if (!f) throw std::runtime_error("cannot open table " + f_table);
            std::string header;
            std::getline(f, header);
            std::vector<std::string> cols;
            std::istringstream hs(header);
            std::string c;
            while (std::getline(hs, c, ',')) cols.push_back(c);
            int xcol = -1, ycol = -1;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (cols[i] == "x") xcol = static_cast<int>(i);
                if (cols[i] == f_column) ycol = static_cast<int>(i);
            }
            if (xcol < 0 || ycol < 0)
                throw std::runtime_error("table lacks columns 'x' and '" + f_column + "'");
            std::vector<double> xs, ys;
            std::string line;
            while (std::getline(f, line)) {
                if (line.empty()) continue;
                std::istringstream ls(line);
                std::string cell;
                std::vector<double> row;
                while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
                xs.push_back(row[static_cast<std::size_t>(xcol)]);
                ys.push_back(row[static_cast<std::size_t>(ycol)]);
            }
            FitModel model = f_model == "x"      ? FitModel::CX
                             : f_model == "xlog" ? FitModel::CXOverLogX
                             : f_model == "li"   ? FitModel::CLi
                                                 : throw std::runtime_error(
                                                       "unknown model '" + f_model + "'");
            FitReport r = fit_main_term(xs, ys, model);
            std::string json = fit_report_json(r);
            if (!f_out.empty()) write_file(f_out, json + "\n");
            std::cout << json << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace sl4
