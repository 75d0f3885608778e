#include "rgc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rgc/dd.hpp"

#include "rgc/errors.hpp"
#include "rgc/reference.hpp"

namespace rgc::cli {

namespace {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string error_marker(const Error& e) {
    if (dynamic_cast<const DegeneratePhaseError*>(&e)) return "ERROR(degenerate-phase)";
    if (dynamic_cast<const QuadratureError*>(&e)) return "ERROR(quadrature)";
    if (dynamic_cast<const SaddleRejectedError*>(&e)) return "ERROR(saddle-rejected)";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "ERROR(convergence)";
    if (dynamic_cast<const PoleError*>(&e)) return "ERROR(pole)";
    if (dynamic_cast<const OverflowError*>(&e)) return "ERROR(overflow)";
    if (dynamic_cast<const NotFoundError*>(&e)) return "ERROR(not-found)";
    if (dynamic_cast<const DomainError*>(&e)) return "ERROR(domain)";
    return "ERROR(failed)";
}

}  // namespace

Cell Cell::of_text(std::string s) {
    Cell c;
    c.kind = Kind::text;
    c.text = std::move(s);
    return c;
}
Cell Cell::of_int(long long v) {
    Cell c;
    c.kind = Kind::integer;
    c.integer = v;
    return c;
}
Cell Cell::of_number(double v) {
    Cell c;
    c.kind = Kind::number;
    c.number = v;
    return c;
}
Cell Cell::of_scaled(const ScaledReal& v) {
    Cell c;
    c.kind = Kind::scaled;
    c.scaled = v;
    return c;
}
Cell Cell::of_bool(bool v) {
    Cell c;
    c.kind = Kind::boolean;
    c.boolean = v;
    return c;
}
Cell Cell::of_error(std::string marker) {
    Cell c;
    c.kind = Kind::error;
    c.text = std::move(marker);
    return c;
}

CoefficientEstimate evaluate(Method m, int n, const MethodConfig& cfg) {
    switch (m) {
        case Method::bourguet: {
            std::vector<double> a = bourguet_sequence(n);
            CoefficientEstimate est;
            est.n = n;
            est.method = Method::bourguet;
            est.value = scaled_from_double(a.back());
            return est;
        }
        case Method::cauchy: return cauchy_coefficient(n, cfg);
        case Method::integral: return integral_coefficient(n, cfg);
        case Method::saddle: return saddle_coefficient(n, cfg);
        case Method::hayman: return hayman_coefficient(n, cfg);
        case Method::rough: return rough_coefficient(n);
    }
    throw UsageError("evaluate: unknown method");
}

namespace {

struct Outcome {
    bool ok = false;
    CoefficientEstimate est;
    std::string marker;
};

Outcome evaluate_guarded(Method m, int n, const MethodConfig& cfg) {
    Outcome o;
    try {
        o.est = evaluate(m, n, cfg);
        o.ok = true;
    } catch (const Error& e) {
        o.marker = error_marker(e);
    }
    return o;
}

std::vector<Outcome> evaluate_batch(const std::vector<std::pair<Method, int>>& tasks,
                                    const MethodConfig& cfg, bool parallel) {
    std::vector<Outcome> out(tasks.size());
    if (parallel) {
        std::vector<std::future<Outcome>> futs;
        futs.reserve(tasks.size());
        for (const auto& [m, n] : tasks)
            futs.push_back(std::async(std::launch::async,
                                      [m = m, n = n, &cfg] { return evaluate_guarded(m, n, cfg); }));
        for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            out[i] = evaluate_guarded(tasks[i].first, tasks[i].second, cfg);
    }
    return out;
}

void append_estimate_cells(std::vector<Cell>& row, const CoefficientEstimate& est) {
    row.push_back(Cell::of_scaled(est.value));
    row.push_back(Cell::of_int(est.value.sign));
    row.push_back(Cell::of_number(est.value.mantissa));
    row.push_back(Cell::of_int(est.value.exponent));
    row.push_back(Cell::of_number(est.diagnostics.residual));
    row.push_back(Cell::of_int(est.diagnostics.nodes));
    row.push_back(Cell::of_number(est.diagnostics.estimated_error));
}

void append_error_cells(std::vector<Cell>& row, const std::string& marker, int count) {
    row.push_back(Cell::of_error(marker));
    for (int i = 1; i < count; ++i) row.push_back(Cell::of_text(""));
}

}  // namespace

Report run_compute(const CliRequest& req) {
    if (req.methods.empty()) throw UsageError("compute: at least one method required");
    if (req.ns.empty()) throw UsageError("compute: no indices requested");
    Report rep;
    rep.title = "compute";
    rep.columns = {"n",        "method", "value", "sign",           "mantissa",
                   "exponent", "residual", "nodes", "estimated_error"};
    std::vector<std::pair<Method, int>> tasks;
    for (int n : req.ns)
        for (Method m : req.methods) tasks.emplace_back(m, n);
    std::vector<Outcome> results = evaluate_batch(tasks, req.config, req.parallel);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        std::vector<Cell> row;
        row.push_back(Cell::of_int(tasks[i].second));
        row.push_back(Cell::of_text(method_name(tasks[i].first)));
        if (results[i].ok) {
            append_estimate_cells(row, results[i].est);
        } else {
            append_error_cells(row, results[i].marker, 7);
            rep.had_row_errors = true;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Report run_table(const CliRequest& req) {
    if (req.which_table != 1 && req.which_table != 2)
        throw UsageError("table: --which must be 1 or 2");
    SourceTable want = req.which_table == 1 ? SourceTable::table1 : SourceTable::table2;
    Report rep;
    rep.title = "table" + std::to_string(req.which_table);
    rep.columns = {"n",      "exact",           "theorem",        "hayman",
                   "rel_err_theorem", "rel_err_hayman"};
    for (const ReferenceRecord& rec : reference_table()) {
        if (rec.source != want) continue;
        std::vector<Cell> row;
        row.push_back(Cell::of_int(rec.n));
        row.push_back(Cell::of_scaled(rec.exact));
        Outcome th = evaluate_guarded(Method::saddle, rec.n, req.config);
        Outcome hy = evaluate_guarded(Method::hayman, rec.n, req.config);
        if (th.ok)
            row.push_back(Cell::of_scaled(th.est.value));
        else {
            row.push_back(Cell::of_error(th.marker));
            rep.had_row_errors = true;
        }
        if (hy.ok)
            row.push_back(Cell::of_scaled(hy.est.value));
        else {
            row.push_back(Cell::of_error(hy.marker));
            rep.had_row_errors = true;
        }
        row.push_back(th.ok ? Cell::of_number(scaled_relative_error(th.est.value, rec.exact))
                            : Cell::of_text(""));
        row.push_back(hy.ok ? Cell::of_number(scaled_relative_error(hy.est.value, rec.exact))
                            : Cell::of_text(""));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Report run_compare(const CliRequest& req) {
    if (req.methods.empty()) throw UsageError("compare: at least one method required");
    if (req.ns.empty()) throw UsageError("compare: no indices requested");
    if (!req.against) throw UsageError("compare: --against required (method name or 'exact')");

    bool fixture_mode = *req.against == "exact";
    std::optional<Method> against_method;
    if (!fixture_mode) {
        against_method = method_from_name(*req.against);
        if (!against_method)
            throw UsageError("compare: unknown --against '" + *req.against + "'");
    }
    if (fixture_mode) {
        std::string missing;
        for (int n : req.ns)
            if (!reference_contains(n)) missing += (missing.empty() ? "" : ", ") + std::to_string(n);
        if (!missing.empty())
            throw NotFoundError("compare: no reference rows for n = " + missing);
    }

    Report rep;
    rep.title = "compare";
    rep.columns = {"n", "method", "value", "against", "against_value",
                   "relative_difference", "sign_agreement"};

    std::vector<std::pair<Method, int>> tasks;
    for (int n : req.ns)
        for (Method m : req.methods) tasks.emplace_back(m, n);
    std::vector<Outcome> results = evaluate_batch(tasks, req.config, req.parallel);

    std::vector<Outcome> baseline(req.ns.size());
    if (!fixture_mode) {
        std::vector<std::pair<Method, int>> btasks;
        for (int n : req.ns) btasks.emplace_back(*against_method, n);
        baseline = evaluate_batch(btasks, req.config, req.parallel);
    }

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        int n = tasks[i].second;
        std::vector<Cell> row;
        row.push_back(Cell::of_int(n));
        row.push_back(Cell::of_text(method_name(tasks[i].first)));

        ScaledReal ref;
        bool ref_ok = true;
        std::string ref_marker;
        if (fixture_mode) {
            ref = reference_lookup(n).exact;
        } else {
            const Outcome& b = baseline[i / req.methods.size()];
            if (b.ok)
                ref = b.est.value;
            else {
                ref_ok = false;
                ref_marker = b.marker;
            }
        }

        if (results[i].ok)
            row.push_back(Cell::of_scaled(results[i].est.value));
        else
            row.push_back(Cell::of_error(results[i].marker));
        row.push_back(Cell::of_text(*req.against));
        if (ref_ok)
            row.push_back(Cell::of_scaled(ref));
        else
            row.push_back(Cell::of_error(ref_marker));

        if (results[i].ok && ref_ok) {
            row.push_back(Cell::of_number(scaled_relative_error(results[i].est.value, ref)));
            row.push_back(Cell::of_bool(results[i].est.value.sign == ref.sign));
        } else {
            row.push_back(Cell::of_text(""));
            row.push_back(Cell::of_text(""));
            rep.had_row_errors = true;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

Report run_bn(const CliRequest& req) {
    if (req.bn_max < 0 || req.bn_max > 39)
        throw UsageError("bn: --max must lie in [0, 39] (the a_n source is capped at n = 40)");
    std::vector<double> a;
    a.reserve(static_cast<std::size_t>(req.bn_max) + 1);
    for (int n = 1; n <= req.bn_max + 1; ++n)
        a.push_back(scaled_to_native(integral_coefficient(n, req.config).value));
    // run the recursion in compensated arithmetic: once |a_{k+1}| falls
    // below one ulp of the (non-decaying) b values, plain doubles cannot
    // satisfy the defining relation at all, let alone to display precision
    std::vector<DD> b(static_cast<std::size_t>(req.bn_max) + 1);
    b[0] = DD{1.0};
    for (int k = 1; k <= req.bn_max; ++k)
        b[static_cast<std::size_t>(k)] =
            dd_sub(DD{a[static_cast<std::size_t>(k)]}, b[static_cast<std::size_t>(k - 1)]);

    Report rep;
    rep.title = "bn";
    rep.columns = {"k", "b_k", "verification"};
    for (int k = 0; k <= req.bn_max; ++k) {
        std::vector<Cell> row;
        row.push_back(Cell::of_int(k));
        row.push_back(Cell::of_scaled(scaled_from_double(b[static_cast<std::size_t>(k)].value())));
        double verification = 0.0;
        if (k >= 1) {
            DD recon = dd_add(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k - 1)]);
            verification = dd_sub(recon, DD{a[static_cast<std::size_t>(k)]}).value();
            // quantize at display precision: dust far below the displayed
            // digits of a_{k+1} reads as an exact reconstruction
            double display_ulp = std::fabs(a[static_cast<std::size_t>(k)]) *
                                 std::pow(10.0, -req.digits);
            if (std::fabs(verification) < display_ulp) verification = 0.0;
        }
        row.push_back(Cell::of_number(verification));
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

// ---------------------------------------------------------------------
// rendering

namespace {

std::string cell_string(const Cell& c, int digits) {
    switch (c.kind) {
        case Cell::Kind::text: return c.text;
        case Cell::Kind::integer: return std::to_string(c.integer);
        case Cell::Kind::number: return format_double(c.number, digits);
        case Cell::Kind::scaled: return format_scaled(c.scaled, digits);
        case Cell::Kind::boolean: return c.boolean ? "true" : "false";
        case Cell::Kind::error: return c.text;
    }
    return {};
}

void render_csv(const Report& rep, int digits, std::ostream& out) {
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        out << rep.columns[i] << (i + 1 < rep.columns.size() ? "," : "\n");
    for (const auto& row : rep.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            out << cell_string(row[i], digits) << (i + 1 < row.size() ? "," : "\n");
}

void render_json(const Report& rep, int digits, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["report"] = rep.title;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : rep.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size() && i < rep.columns.size(); ++i) {
            const Cell& c = row[i];
            switch (c.kind) {
                case Cell::Kind::text: obj[rep.columns[i]] = c.text; break;
                case Cell::Kind::integer: obj[rep.columns[i]] = c.integer; break;
                case Cell::Kind::number: obj[rep.columns[i]] = c.number; break;
                case Cell::Kind::scaled:
                    obj[rep.columns[i]] = {{"sign", c.scaled.sign},
                                           {"mantissa", c.scaled.mantissa},
                                           {"exponent", c.scaled.exponent}};
                    break;
                case Cell::Kind::boolean: obj[rep.columns[i]] = c.boolean; break;
                case Cell::Kind::error: obj[rep.columns[i]] = {{"error", c.text}}; break;
            }
        }
        doc["rows"].push_back(std::move(obj));
    }
    (void)digits;
    out << doc.dump(2) << '\n';
}

void render_markdown(const Report& rep, int digits, std::ostream& out) {
    out << "| ";
    for (std::size_t i = 0; i < rep.columns.size(); ++i)
        out << rep.columns[i] << (i + 1 < rep.columns.size() ? " | " : " |\n");
    out << "|";
    for (std::size_t i = 0; i < rep.columns.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : rep.rows) {
        out << "| ";
        for (std::size_t i = 0; i < row.size(); ++i)
            out << cell_string(row[i], digits) << (i + 1 < row.size() ? " | " : " |\n");
    }
}

}  // namespace

void render(const Report& rep, Format format, int digits, std::ostream& out) {
    switch (format) {
        case Format::csv: render_csv(rep, digits, out); break;
        case Format::json: render_json(rep, digits, out); break;
        case Format::markdown: render_markdown(rep, digits, out); break;
    }
}

}  // namespace rgc::cli
