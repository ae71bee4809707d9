#include "auxzeta/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace auxzeta {

namespace {

using nlohmann::ordered_json;

ordered_json number(double x) {
    if (!std::isfinite(x))
        return nullptr;
    return x;
}

ordered_json certificate_json(const Certificate &c) {
    ordered_json j;
    j["n"] = c.n;
    j["method"] = to_string(c.method);
    j["re_I_n"] = number(c.re_I_n);
    j["lower_bound_used"] = number(c.lower_bound_used);
    j["verified"] = c.verified;
    j["failure"] = c.failure;
    return j;
}

ordered_json decomposition_json(const DecompositionReport &d) {
    ordered_json j;
    j["n"] = d.n;
    j["A_direct"] = number(d.A_direct);
    j["A_error"] = number(d.A_error);
    j["B_direct"] = number(d.B_direct);
    j["B_error"] = number(d.B_error);
    j["C_direct"] = number(d.C_direct);
    j["C_error"] = number(d.C_error);
    j["re_I_direct"] = number(d.re_I_direct);
    j["im_I_direct"] = number(d.I_n.imag());
    j["I_error"] = number(d.I_error);
    j["converged"] = d.converged;
    return j;
}

ordered_json bounds_json(const BoundReport &b) {
    ordered_json j;
    j["n"] = b.n;
    j["A_lower"] = number(b.A_lower);
    j["B_upper"] = number(b.B_upper);
    j["C_upper"] = number(b.C_upper);
    j["margin_lower"] = number(b.margin_lower);
    j["lemma_applies"] = b.lemma_applies;
    return j;
}

void write_csv(std::ostream &os, const std::vector<SweepRecord> &records) {
    const auto &cols = table_columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const SweepRecord &rec : records) {
        const std::vector<double> row = table_row(rec);
        os << rec.n;
        for (std::size_t i = 1; i < row.size(); ++i)
            os << ',' << format_number(row[i]);
        os << '\n';
    }
}

void write_text(std::ostream &os, const std::vector<SweepRecord> &records) {
    const auto &cols = table_columns();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6s", cols[0].c_str());
    os << buf;
    for (std::size_t i = 1; i < cols.size(); ++i) {
        std::snprintf(buf, sizeof buf, " %20s", cols[i].c_str());
        os << buf;
    }
    os << '\n';
    for (const SweepRecord &rec : records) {
        const std::vector<double> row = table_row(rec);
        std::snprintf(buf, sizeof buf, "%6d", rec.n);
        os << buf;
        for (std::size_t i = 1; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, " %20.12e", row[i]);
            os << buf;
        }
        os << '\n';
    }
}

} // namespace

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    if (name == "text")
        return TableFormat::text;
    throw std::invalid_argument("format must be one of csv, json, text");
}

std::string format_number(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const std::vector<std::string> &table_columns() {
    static const std::vector<std::string> cols = {
        "n",        "re_I",     "im_I",    "abs_I_sqrt_n", "asymptotic_ratio",
        "A_direct", "B_direct", "C_direct", "A_lower",     "B_upper",
        "C_upper",  "margin",   "rprime_log_modulus",      "rprime_argument"};
    return cols;
}

std::vector<double> table_row(const SweepRecord &rec) {
    const DecompositionReport &d = rec.decomposition;
    const BoundReport &b = rec.bounds;
    return {static_cast<double>(rec.n),
            d.I_n.real(),
            d.I_n.imag(),
            std::abs(d.I_n) * std::sqrt(static_cast<double>(rec.n)),
            rec.asymptotic_ratio,
            d.A_direct,
            d.B_direct,
            d.C_direct,
            b.A_lower,
            b.B_upper,
            b.C_upper,
            b.margin_lower,
            rec.rprime.log_modulus,
            rec.rprime.argument};
}

ordered_json table_json(const std::vector<SweepRecord> &records) {
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "table";
    doc["columns"] = table_columns();
    ordered_json rows = ordered_json::array();
    const auto &cols = table_columns();
    for (const SweepRecord &rec : records) {
        const std::vector<double> row = table_row(rec);
        ordered_json r;
        r["n"] = rec.n;
        for (std::size_t i = 1; i < cols.size(); ++i)
            r[cols[i]] = number(row[i]);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

void write_table(std::ostream &os, const std::vector<SweepRecord> &records, TableFormat format) {
    switch (format) {
    case TableFormat::csv:
        write_csv(os, records);
        return;
    case TableFormat::json:
        os << dump_json(table_json(records));
        return;
    case TableFormat::text:
        write_text(os, records);
        return;
    }
}

ordered_json certify_json(int n_start, int n_end, const std::vector<SweepRecord> &records,
                          const LemmaConstants &lemma) {
    ordered_json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "certify";
    doc["n_start"] = n_start;
    doc["n_end"] = n_end;
    doc["all_verified"] = all_verified(records);

    ordered_json k;
    k["constant_A"] = number(lemma.constant_A);
    k["sinh_envelope_constant"] = number(lemma.sinh_constant);
    k["b_gaussian_integral"] = number(lemma.b_gaussian);
    k["b_first_piece_integral"] = number(lemma.b_first_piece);
    k["c_gaussian_integral"] = number(lemma.c_integral);
    k["converged"] = lemma.converged;
    doc["lemma_constants"] = std::move(k);

    ordered_json results = ordered_json::array();
    for (const SweepRecord &rec : records) {
        ordered_json r;
        r["n"] = rec.n;
        r["certificate"] = certificate_json(rec.certificate);
        r["decomposition"] = decomposition_json(rec.decomposition);
        r["bounds"] = bounds_json(rec.bounds);
        ordered_json rp;
        rp["log_modulus"] = number(rec.rprime.log_modulus);
        rp["argument"] = number(rec.rprime.argument);
        r["rprime"] = std::move(rp);
        r["error"] = rec.error;
        results.push_back(std::move(r));
    }
    doc["results"] = std::move(results);
    return doc;
}

std::string dump_json(const ordered_json &doc) { return doc.dump(2) + "\n"; }

} // namespace auxzeta
