#include "tforge/serialization.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

namespace tforge {

std::optional<OutputFormat> output_format_from_name(std::string_view name) {
    if (name == "plain") return OutputFormat::Plain;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string entry_text(const Rational& value) { return to_text(value); }

std::string entry_text(const Polynomial& value) { return value.to_text(); }

namespace {

nlohmann::json entry_json(const Rational& value) { return to_text(value); }

nlohmann::json entry_json(const Polynomial& value) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& c : value.coefficients()) coeffs.push_back(to_text(c));
    return coeffs;
}

template <Ring R>
std::vector<std::vector<std::string>> text_table(const Triangle<R>& t) {
    std::vector<std::vector<std::string>> table;
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const R& value : row) cells.push_back(entry_text(value));
        table.push_back(std::move(cells));
    }
    return table;
}

std::string render_table_plain(const std::vector<std::vector<std::string>>& table) {
    std::size_t columns = 0;
    for (const auto& row : table) columns = std::max(columns, row.size());
    std::vector<std::size_t> width(columns, 0);
    for (const auto& row : table)
        for (std::size_t m = 0; m < row.size(); ++m)
            width[m] = std::max(width[m], row[m].size());
    std::string out;
    for (const auto& row : table) {
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (m > 0) out += ' ';
            out.append(width[m] - row[m].size(), ' ');
            out += row[m];
        }
        out += '\n';
    }
    return out;
}

std::string render_table_csv(const std::vector<std::vector<std::string>>& table) {
    std::string out;
    for (const auto& row : table) {
        for (std::size_t m = 0; m < row.size(); ++m) {
            if (m > 0) out += ',';
            out += row[m];
        }
        out += '\n';
    }
    return out;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

nlohmann::json triangle_json(std::string_view name, const AnyTriangle& triangle) {
    nlohmann::json out;
    out["name"] = std::string(name);
    nlohmann::json rows = nlohmann::json::array();
    std::visit(
        [&](const auto& t) {
            for (const auto& row : t.rows) {
                nlohmann::json cells = nlohmann::json::array();
                for (const auto& value : row) cells.push_back(entry_json(value));
                rows.push_back(std::move(cells));
            }
        },
        triangle);
    out["ring"] =
        std::holds_alternative<Triangle<Polynomial>>(triangle) ? "polynomial" : "rational";
    out["rows"] = std::move(rows);
    return out;
}

std::string render_triangle(std::string_view name, const AnyTriangle& triangle,
                            OutputFormat format) {
    if (format == OutputFormat::Json) return triangle_json(name, triangle).dump() + "\n";
    const auto table = std::visit([](const auto& t) { return text_table(t); }, triangle);
    return format == OutputFormat::Plain ? render_table_plain(table) : render_table_csv(table);
}

std::string render_sequence(std::string_view name, int first_index,
                            const std::vector<Rational>& terms, OutputFormat format) {
    switch (format) {
        case OutputFormat::Plain: {
            std::string out;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                if (i > 0) out += ' ';
                out += to_text(terms[i]);
            }
            out += '\n';
            return out;
        }
        case OutputFormat::Csv: {
            std::string out;
            for (std::size_t i = 0; i < terms.size(); ++i) {
                out += std::to_string(first_index + static_cast<int>(i));
                out += ',';
                out += to_text(terms[i]);
                out += '\n';
            }
            return out;
        }
        case OutputFormat::Json: {
            nlohmann::json out;
            out["name"] = std::string(name);
            out["start"] = first_index;
            nlohmann::json values = nlohmann::json::array();
            for (const Rational& term : terms) values.push_back(to_text(term));
            out["terms"] = std::move(values);
            return out.dump() + "\n";
        }
    }
    return {};
}

nlohmann::json report_json(const VerifyReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const CheckRecord& rec : report.records) {
        nlohmann::json item;
        item["name"] = rec.name;
        item["params"] = rec.params;
        item["expected"] = rec.expected;
        item["actual"] = rec.actual;
        item["pass"] = rec.pass;
        item["elapsed_s"] = rec.elapsed_s;
        out.push_back(std::move(item));
    }
    return out;
}

std::string render_report(const VerifyReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) return report_json(report).dump() + "\n";
    if (format == OutputFormat::Csv) {
        std::string out = "name,params,pass,expected,actual,elapsed_s\n";
        for (const CheckRecord& rec : report.records) {
            std::ostringstream line;
            line << csv_quote(rec.name) << ',' << csv_quote(rec.params) << ','
                 << (rec.pass ? "pass" : "fail") << ',' << csv_quote(rec.expected) << ','
                 << csv_quote(rec.actual) << ',' << rec.elapsed_s << '\n';
            out += line.str();
        }
        return out;
    }
    std::size_t name_width = 0;
    for (const CheckRecord& rec : report.records)
        name_width = std::max(name_width, rec.name.size());
    std::string out;
    std::size_t failures = 0;
    for (const CheckRecord& rec : report.records) {
        std::ostringstream line;
        line << (rec.pass ? "PASS  " : "FAIL  ") << rec.name;
        line << std::string(name_width - rec.name.size(), ' ');
        line << "  [" << rec.params << "]";
        line.precision(3);
        line << "  (" << std::fixed << rec.elapsed_s << "s)";
        if (!rec.pass) {
            line << "\n      expected: " << rec.expected;
            line << "\n      actual:   " << rec.actual;
            ++failures;
        }
        out += line.str();
        out += '\n';
    }
    std::ostringstream tail;
    if (failures == 0)
        tail << "all " << report.records.size() << " checks passed\n";
    else
        tail << failures << " of " << report.records.size() << " checks failed\n";
    out += tail.str();
    return out;
}

}  // namespace tforge
