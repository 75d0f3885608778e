#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rgc/cli.hpp"
#include "rgc/errors.hpp"

namespace rgc::cli {

namespace {

std::vector<int> parse_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos)
        throw UsageError("range must look like A..B");
    int a = 0, b = 0;
    try {
        a = std::stoi(spec.substr(0, dots));
        b = std::stoi(spec.substr(dots + 2));
    } catch (const std::exception&) {
        throw UsageError("range bounds must be integers: " + spec);
    }
    if (b < a) throw UsageError("empty range: " + spec);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(b - a) + 1);
    for (int n = a; n <= b; ++n) out.push_back(n);
    return out;
}

void canonicalize(CliRequest& req) {
    std::sort(req.ns.begin(), req.ns.end());
    req.ns.erase(std::unique(req.ns.begin(), req.ns.end()), req.ns.end());
    std::sort(req.methods.begin(), req.methods.end(),
              [](Method a, Method b) { return static_cast<int>(a) < static_cast<int>(b); });
    req.methods.erase(std::unique(req.methods.begin(), req.methods.end()), req.methods.end());
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "markdown") return Format::markdown;
    throw UsageError("unknown format '" + name + "'");
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
    std::vector<Method> out;
    for (const std::string& group : names) {
        std::size_t start = 0;
        while (start <= group.size()) {
            std::size_t comma = group.find(',', start);
            std::string name = group.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!name.empty()) {
                auto m = method_from_name(name);
                if (!m) throw UsageError("unknown method '" + name + "'");
                out.push_back(*m);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return out;
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Maclaurin coefficients of the reciprocal Gamma function"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "markdown";
    int digits = 10;
    app.add_option("--format", format_name, "csv | json | markdown")->capture_default_str();
    app.add_option("--digits", digits, "significant digits in rendered values")
        ->capture_default_str();

    // shared method-config flags
    std::string radius_spec = "auto";
    int nodes = 0;
    std::string phase = "bornemann";
    double quad_tol = 1e-10;
    double quad_step = 0.05;
    double w_tol = 1e-13;
    auto add_config_flags = [&](CLI::App* cmd) {
        cmd->add_option("--radius", radius_spec, "Cauchy contour radius or 'auto'");
        cmd->add_option("--nodes", nodes, "fixed Cauchy node count (>= 16); 0 = auto");
        cmd->add_option("--phase-variant", phase, "bornemann | hayman");
        cmd->add_option("--quad-tol", quad_tol, "quadrature relative tolerance");
        cmd->add_option("--quad-step", quad_step, "coarsest quadrature step");
        cmd->add_option("--w-tol", w_tol, "Lambert W residual tolerance");
    };

    std::vector<int> single_ns;
    std::string range_spec;
    std::vector<std::string> method_names;
    bool parallel = false;

    CLI::App* compute = app.add_subcommand("compute", "evaluate coefficients");
    compute->add_option("-n", single_ns, "coefficient index (repeatable)");
    compute->add_option("--range", range_spec, "index range A..B");
    compute->add_option("--method,--methods", method_names, "estimation method(s)");
    compute->add_flag("--parallel", parallel, "evaluate indices concurrently");
    add_config_flags(compute);

    int which = 0;
    CLI::App* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("--which", which, "1 or 2")->required();
    add_config_flags(table);

    std::string against;
    CLI::App* compare = app.add_subcommand("compare", "compare methods or fixtures");
    compare->add_option("-n", single_ns, "coefficient index (repeatable)");
    compare->add_option("--range", range_spec, "index range A..B");
    compare->add_option("--method,--methods", method_names, "estimation method(s)");
    compare->add_option("--against", against, "reference method name or 'exact'")->required();
    compare->add_flag("--parallel", parallel, "evaluate indices concurrently");
    add_config_flags(compare);

    int bn_max = -1;
    CLI::App* bn = app.add_subcommand("bn", "companion sequence b_0..b_max");
    bn->add_option("--max", bn_max, "largest index (<= 39)")->required();
    add_config_flags(bn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 1;
    }

    try {
        CliRequest req;
        req.format = parse_format(format_name);
        if (digits < 1 || digits > 17) throw UsageError("--digits must lie in [1, 17]");
        req.digits = digits;
        req.parallel = parallel;
        req.config.quad_rel_tol = quad_tol;
        req.config.quad_step = quad_step;
        req.config.w_tol = w_tol;
        if (nodes != 0) req.config.contour_nodes = nodes;
        if (radius_spec != "auto") {
            try {
                req.config.contour_radius = std::stod(radius_spec);
            } catch (const std::exception&) {
                throw UsageError("--radius must be a number or 'auto'");
            }
        }
        auto pv = phase_variant_from_name(phase);
        if (!pv) throw UsageError("--phase-variant must be bornemann or hayman");
        req.config.phase_variant = *pv;

        req.ns = single_ns;
        if (!range_spec.empty()) {
            std::vector<int> r = parse_range(range_spec);
            req.ns.insert(req.ns.end(), r.begin(), r.end());
        }
        req.methods = parse_methods(method_names);
        canonicalize(req);

        Report rep;
        if (compute->parsed()) {
            req.command = CliRequest::Command::compute;
            rep = run_compute(req);
        } else if (table->parsed()) {
            req.command = CliRequest::Command::table;
            req.which_table = which;
            rep = run_table(req);
        } else if (compare->parsed()) {
            req.command = CliRequest::Command::compare;
            req.against = against;
            rep = run_compare(req);
        } else {
            req.command = CliRequest::Command::bn;
            req.bn_max = bn_max;
            rep = run_bn(req);
        }
        render(rep, req.format, req.digits, out);
        return rep.had_row_errors ? 2 : 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const NotFoundError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace rgc::cli
