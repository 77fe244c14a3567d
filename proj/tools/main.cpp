#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "simplexity/bounds.hpp"
#include "simplexity/dissection.hpp"
#include "simplexity/enumeration.hpp"
#include "simplexity/geometry.hpp"
#include "simplexity/io.hpp"
#include "simplexity/rational.hpp"
#include "simplexity/weight_lp.hpp"

namespace {

using namespace simplexity;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string folded_to_string(const FoldedProfile& folded) {
    std::string s = "{";
    for (std::size_t i = 0; i < folded.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(folded[i]);
    }
    return s + "}";
}

std::string vertices_to_string(const Simplex01& s) {
    std::string out;
    for (const std::string& v : s.vertex_strings()) {
        if (!out.empty()) out += ' ';
        out += v;
    }
    return out;
}

std::string rationals_to_string(const std::vector<Rational>& values) {
    std::string out;
    for (const Rational& v : values) {
        if (!out.empty()) out += ' ';
        out += to_fraction_string(v);
    }
    return out;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty())
        std::cout << text;
    else
        io::write_text_file(output_path, text);
}

struct Options {
    int n = 0;
    int threads = 0;
    bool long_running = false;
    std::string format = "text";
    std::string output;
    std::string classes_path;
    std::string dissection_path;
    int axis = 0;  // 0 means "use the file's axis"
    bool all_checks = false;
};

void reject_csv(const Options& opt) {
    if (opt.format == "csv")
        throw std::invalid_argument("csv format is only available for the bounds subcommand");
}

int cmd_enumerate(const Options& opt) {
    const EnumerationSummary summary = enumerate_classes(opt.n, opt.threads, opt.long_running);
    const io::Json file = io::class_file_to_json(summary);
    if (!opt.output.empty()) io::write_text_file(opt.output, io::dumps(file));
    if (opt.format == "json") {
        std::cout << io::dumps(file);
        return 0;
    }
    std::cout << "n = " << summary.n << "\n"
              << "subsets scanned = " << summary.total_subsets << "\n"
              << "degenerate = " << summary.degenerate << "\n"
              << "non-degenerate = " << summary.nondegenerate << "\n"
              << "classes = " << summary.classes.size() << "\n"
              << "rho = " << summary.rho << "\n"
              << "max volume = " << to_fraction_string(summary.max_volume) << "\n";
    for (const ConstraintClass& cls : summary.classes)
        std::cout << "class volume=" << to_fraction_string(cls.volume)
                  << " folded=" << folded_to_string(cls.folded) << " count=" << cls.count
                  << " witness=" << vertices_to_string(cls.witness) << "\n";
    if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
    return 0;
}

int cmd_rho(const Options& opt) {
    const std::int64_t r = rho(opt.n, opt.threads, opt.long_running);
    const Rational bound = euclidean_lower_bound_exact(opt.n, r);
    if (opt.format == "json") {
        io::Json j;
        j["n"] = opt.n;
        j["rho"] = r;
        j["euclidean_bound"] = to_fraction_string(bound);
        const std::string text = io::dumps(j);
        emit(text, opt.output);
        if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
        return 0;
    }
    std::string text = "n = " + std::to_string(opt.n) + "\nrho = " + std::to_string(r) +
                       "\neuclidean bound n!/rho = " + to_fraction_string(bound) + "\n";
    emit(text, opt.output);
    return 0;
}

int cmd_bounds(const Options& opt) {
    const std::vector<BoundsRow> rows = bounds_table(opt.n);
    std::string text;
    if (opt.format == "csv") {
        text = bounds_table_csv(rows);
    } else if (opt.format == "json") {
        io::Json arr = io::Json::array();
        for (const BoundsRow& row : rows) {
            io::Json j;
            j["n"] = row.n;
            j["E"] = row.E;
            j["F"] = row.F;
            j["H_lower"] = row.H_lower;
            j["rho_bound"] = row.rho_bound;
            if (row.known_dis)
                j["known_dis"] = *row.known_dis;
            else
                j["known_dis"] = nullptr;
            arr.push_back(std::move(j));
        }
        text = io::dumps(arr);
    } else {
        text = "n\tE\tF\tH_lower\trho_bound\tknown_dis\n";
        for (const BoundsRow& row : rows) {
            text += std::to_string(row.n) + '\t' + fmt_double(row.E) + '\t' + fmt_double(row.F) +
                    '\t' + fmt_double(row.H_lower) + '\t' + fmt_double(row.rho_bound) + '\t';
            text += row.known_dis ? std::to_string(*row.known_dis) : std::string("-");
            text += '\n';
        }
    }
    emit(text, opt.output);
    if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
    return 0;
}

std::pair<std::vector<ConstraintClass>, int> obtain_classes(const Options& opt) {
    if (!opt.classes_path.empty()) {
        io::ClassFile file = io::load_class_file(opt.classes_path);
        if (file.n != opt.n)
            throw std::runtime_error("class file " + opt.classes_path + " holds n = " +
                                     std::to_string(file.n) + ", requested n = " +
                                     std::to_string(opt.n));
        return {std::move(file.classes), file.n};
    }
    EnumerationSummary summary = enumerate_classes(opt.n, opt.threads, opt.long_running);
    return {std::move(summary.classes), summary.n};
}

int cmd_lp(const Options& opt) {
    reject_csv(opt);
    const auto [classes, n] = obtain_classes(opt);
    const LPProblem problem = build_lp(classes, n);
    const LPSolution sol = solve_lp(problem);
    const io::Json result = io::lp_result_to_json(n, sol, classes);
    if (!opt.output.empty()) io::write_text_file(opt.output, io::dumps(result));
    if (opt.format == "json") {
        std::cout << io::dumps(result);
        return 0;
    }
    std::cout << "n = " << n << "\n"
              << "classes = " << classes.size() << "\n"
              << "g_star = " << to_fraction_string(sol.g_star) << "\n"
              << "bound = " << to_fraction_string(sol.bound) << "\n"
              << "alpha = " << rationals_to_string(sol.alpha_star.exact) << "\n";
    for (std::size_t idx : sol.tight_classes)
        std::cout << "tight class volume=" << to_fraction_string(classes[idx].volume)
                  << " folded=" << folded_to_string(classes[idx].folded) << "\n";
    if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
    return 0;
}

int cmd_weights(const Options& opt) {
    reject_csv(opt);
    const auto [classes, n] = obtain_classes(opt);
    const WeightVector alpha = analytic_weights(n);
    const AnalyticBoundReport report = verify_analytic_bound(n, classes);
    const HFunctionAnalysis h = h_function_analysis(n);

    double sum = 0;
    for (double a : alpha.analytic) sum += a;

    if (opt.format == "json") {
        io::Json j;
        j["n"] = n;
        j["alpha"] = alpha.analytic;
        j["alpha_sum"] = sum;
        io::Json hj;
        hj["t_max"] = h.t_max;
        hj["h_max"] = h.h_max;
        hj["local_max_confirmed"] = h.local_max_confirmed;
        j["h"] = std::move(hj);
        io::Json v;
        v["max_weighted_volume"] = report.max_weighted_volume;
        v["threshold"] = report.threshold;
        v["tolerance"] = report.tolerance;
        v["all_within"] = report.all_within;
        v["implied_bound"] = report.implied_bound;
        j["verification"] = std::move(v);
        const std::string text = io::dumps(j);
        emit(text, opt.output);
        if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
        return report.all_within ? 0 : 1;
    }

    std::string text = "n = " + std::to_string(n) + "\nalpha =";
    for (double a : alpha.analytic) text += ' ' + fmt_double(a);
    text += "\nalpha sum = " + fmt_double(sum) + "\nh(t): t_max = " + fmt_double(h.t_max) +
            ", h_max = " + fmt_double(h.h_max) +
            (h.local_max_confirmed ? " (local max confirmed)" : " (local max NOT confirmed)") +
            "\nmax weighted volume = " + fmt_double(report.max_weighted_volume) +
            "\nthreshold (n+1)^((1-n)/2) = " + fmt_double(report.threshold) +
            "\nall classes within tolerance = " + (report.all_within ? "yes" : "no") +
            "\nimplied bound F(n) = " + fmt_double(report.implied_bound) + "\n";
    emit(text, opt.output);
    return report.all_within ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    reject_csv(opt);
    const Dissection d = io::load_dissection(opt.dissection_path);
    const int axis = opt.axis == 0 ? d.axis : opt.axis;
    if (axis < 1 || axis > d.n) throw std::invalid_argument("axis out of range");
    const VerificationReport report = verify_partition(d, opt.threads);

    bool checks_ok = report.partition_ok;
    std::optional<BernsteinCoefficients> bernstein;
    std::vector<std::pair<Rational, Rational>> section;
    bool section_ok = true;
    if (opt.all_checks) {
        checks_ok = checks_ok && report.class_volumes_ok && report.proposition_ok;
        bernstein = bernstein_coefficients(d, axis);
        std::set<Rational> points{Rational(0), make_rational(1, 4), make_rational(1, 2),
                                  make_rational(3, 4), Rational(1)};
        for (int k = 0; k <= d.n; ++k) points.insert(make_rational(k, d.n));
        for (const Rational& t : points) {
            const Rational value = section_polynomial_eval(d, axis, t);
            if (value != 1) section_ok = false;
            section.emplace_back(t, value);
        }
        checks_ok = checks_ok && section_ok;
    }

    if (opt.format == "json") {
        io::Json j = io::report_to_json(report);
        j["axis"] = axis;
        if (opt.all_checks) {
            io::Json c = io::Json::array();
            for (const Rational& v : bernstein->c) c.push_back(to_fraction_string(v));
            j["bernstein"] = std::move(c);
            io::Json sec = io::Json::array();
            for (const auto& [t, value] : section) {
                io::Json entry;
                entry["t"] = to_fraction_string(t);
                entry["value"] = to_fraction_string(value);
                sec.push_back(std::move(entry));
            }
            j["section"] = std::move(sec);
            j["section_ok"] = section_ok;
        }
        j["checks_ok"] = checks_ok;
        const std::string text = io::dumps(j);
        emit(text, opt.output);
        if (!opt.output.empty()) std::cout << "wrote " << opt.output << "\n";
        return checks_ok ? 0 : 1;
    }

    std::string text = "file = " + opt.dissection_path + "\nn = " + std::to_string(d.n) +
                       ", simplices = " + std::to_string(d.simplices.size()) + ", axis = " +
                       std::to_string(axis) + "\nvolume sum = " +
                       to_fraction_string(report.volume_sum) + "\n";
    if (report.overlap) {
        text += "overlap: simplices " + std::to_string(report.overlap->first) + " and " +
                std::to_string(report.overlap->second) + " share interior point (" +
                rationals_to_string(report.overlap->point) + ")\n";
    } else {
        text += "overlap: none\n";
    }
    text += std::string("partition_ok = ") + (report.partition_ok ? "true" : "false") + "\n";
    for (const ClassVolumeVector& cv : report.class_volumes)
        text += "V(i) axis " + std::to_string(cv.axis) + ": " + rationals_to_string(cv.V) + "\n";
    text += std::string("class_volumes_ok = ") + (report.class_volumes_ok ? "true" : "false") +
            "\n";
    for (std::size_t k = 0; k < report.proposition.sums.size(); ++k)
        text += "V_{k,m} k=" + std::to_string(k + 1) + ": " +
                rationals_to_string(report.proposition.sums[k]) + "\n";
    text += std::string("proposition_ok = ") + (report.proposition_ok ? "true" : "false") + "\n";
    if (opt.all_checks) {
        text += "bernstein c (axis " + std::to_string(axis) + ") = " +
                rationals_to_string(bernstein->c) + "\n";
        for (const auto& [t, value] : section)
            text += "S(" + to_fraction_string(t) + ") = " + to_fraction_string(value) + "\n";
        text += std::string("section_ok = ") + (section_ok ? "true" : "false") + "\n";
    }
    text += std::string(checks_ok ? "all checks passed" : "verification FAILED") + "\n";
    emit(text, opt.output);
    return checks_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lower-bound toolkit for cube dissections"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_n) {
        if (with_n) sub->add_option("-n", opt.n, "cube dimension")->required();
        sub->add_option("--threads", opt.threads, "worker thread budget (0 = hardware)")
            ->envname("SIMPLEXITY_THREADS");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("-o,--output", opt.output, "write the result to this file");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate 0/1-simplex constraint classes");
    add_common(enumerate, true);
    enumerate->add_flag("--long-running", opt.long_running, "allow n = 6");

    CLI::App* rho_cmd = app.add_subcommand("rho", "maximal 0/1 determinant and n!/rho bound");
    add_common(rho_cmd, true);
    rho_cmd->add_flag("--long-running", opt.long_running, "allow n = 6");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form lower bounds table");
    add_common(bounds_cmd, true);

    CLI::App* lp_cmd = app.add_subcommand("lp", "solve the exact min-max weight LP");
    add_common(lp_cmd, true);
    lp_cmd->add_option("--classes", opt.classes_path, "class file from enumerate");
    lp_cmd->add_flag("--long-running", opt.long_running, "allow n = 6");

    CLI::App* weights_cmd = app.add_subcommand("weights", "analytic weights and the bound they imply");
    add_common(weights_cmd, true);
    weights_cmd->add_option("--classes", opt.classes_path, "class file from enumerate");
    weights_cmd->add_flag("--long-running", opt.long_running, "allow n = 6");

    CLI::App* verify_cmd = app.add_subcommand("verify", "verify a dissection file");
    verify_cmd->add_option("file", opt.dissection_path, "dissection JSON file")->required();
    add_common(verify_cmd, false);
    verify_cmd->add_option("--axis", opt.axis, "axis for the slice invariants (default: file)");
    verify_cmd->add_flag("--all-checks", opt.all_checks, "run every invariant check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(opt);
        if (rho_cmd->parsed()) return cmd_rho(opt);
        if (bounds_cmd->parsed()) return cmd_bounds(opt);
        if (lp_cmd->parsed()) return cmd_lp(opt);
        if (weights_cmd->parsed()) return cmd_weights(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
