#include "econokit/csv.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "econokit/error.hpp"

namespace econokit {

namespace {

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

double parse_value(const std::string& token, std::size_t line_no) {
    double v = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || p != end) {
        throw Error("csv line " + std::to_string(line_no) + ": cannot parse value '" + token +
                    "'");
    }
    if (!std::isfinite(v)) {
        throw Error("csv line " + std::to_string(line_no) + ": non-finite value");
    }
    return v;
}

}  // namespace

Series read_series_csv(std::istream& in, const std::string& name, bool locale_comma) {
    std::string line;
    if (!std::getline(in, line)) throw Error("csv: empty input");
    if (strip(line) != "date,value") {
        throw Error("csv: expected header 'date,value', got '" + strip(line) + "'");
    }

    std::vector<std::pair<QuarterIndex, double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = strip(line);
        if (t.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = t.find(',', pos);
            if (comma == std::string::npos) {
                fields.push_back(t.substr(pos));
                break;
            }
            fields.push_back(t.substr(pos, comma - pos));
            pos = comma + 1;
        }
        std::string value_token;
        if (fields.size() == 2) {
            value_token = fields[1];
        } else if (fields.size() == 3 && locale_comma) {
            value_token = fields[1] + "." + fields[2];
        } else if (fields.size() == 3) {
            throw Error("csv line " + std::to_string(line_no) +
                        ": decimal comma detected ('" + fields[1] + "," + fields[2] +
                        "'); re-export with decimal points or pass --locale-comma");
        } else {
            throw Error("csv line " + std::to_string(line_no) + ": expected 'date,value'");
        }
        const auto date = QuarterIndex::try_parse(strip(fields[0]));
        if (!date) {
            throw Error("csv line " + std::to_string(line_no) + ": bad date token '" +
                        strip(fields[0]) + "' (expected YYYYQn)");
        }
        rows.emplace_back(*date, parse_value(strip(value_token), line_no));
    }
    if (rows.empty()) throw Error("csv: no data rows");
    return Series::from_rows(name.empty() ? "series" : name, rows);
}

Series read_series_csv_file(const std::string& path, std::string name, bool locale_comma) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    if (name.empty()) name = std::filesystem::path(path).stem().string();
    try {
        return read_series_csv(in, name, locale_comma);
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void write_series_csv(const Series& s, std::ostream& out) {
    out << "date,value\n";
    for (std::size_t t = 0; t < s.size(); ++t) {
        out << s.start().advanced(static_cast<int>(t)).to_csv() << ','
            << format_double(s.values()[t]) << '\n';
    }
}

}  // namespace econokit
