#include "quantfam/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace quantfam {

namespace {

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct CsvReader {
    std::ifstream in;
    std::vector<std::string> header;
    int line_no = 0;

    explicit CsvReader(const std::string& path) : in(path) {
        if (!in) throw IoError("cannot open '" + path + "'");
        std::string line;
        if (!std::getline(in, line)) throw IoError("'" + path + "' is empty (header required)");
        ++line_no;
        for (auto& h : split_row(line)) header.push_back(strip(h));
    }

    int column_index(const std::string& name, const std::string& path) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw IoError("column '" + name + "' not found in '" + path + "'");
    }

    bool next_row(std::vector<std::string>& fields) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (strip(line).empty()) continue;
            fields = split_row(line);
            return true;
        }
        return false;
    }
};

bool parse_double(const std::string& s, double& out) {
    const std::string t = strip(s);
    if (t.empty()) return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

}  // namespace

CsvColumn read_csv_column(const std::string& path, const std::string& column,
                          const CsvReadOptions& options) {
    CsvReader reader(path);
    const int ci = reader.column_index(column, path);

    CsvColumn out;
    std::vector<std::string> fields;
    while (reader.next_row(fields)) {
        if (ci >= static_cast<int>(fields.size())) {
            if (options.skip_bad_rows) {
                ++out.skipped_rows;
                continue;
            }
            throw IoError(path + ":" + std::to_string(reader.line_no) + ": missing column '" +
                          column + "'");
        }
        double v;
        if (!parse_double(fields[static_cast<std::size_t>(ci)], v)) {
            if (options.skip_bad_rows) {
                ++out.skipped_rows;
                continue;
            }
            throw IoError(path + ":" + std::to_string(reader.line_no) +
                          ": non-numeric value '" + strip(fields[static_cast<std::size_t>(ci)]) +
                          "' in column '" + column + "'");
        }
        out.values.push_back(v);
    }
    return out;
}

std::map<std::string, std::vector<double>> read_csv_grouped(const std::string& path,
                                                            const std::string& column,
                                                            const std::string& group_column,
                                                            const CsvReadOptions& options) {
    CsvReader reader(path);
    const int ci = reader.column_index(column, path);
    const int gi = reader.column_index(group_column, path);

    std::map<std::string, std::vector<double>> out;
    std::vector<std::string> fields;
    while (reader.next_row(fields)) {
        if (ci >= static_cast<int>(fields.size()) || gi >= static_cast<int>(fields.size())) {
            if (options.skip_bad_rows) continue;
            throw IoError(path + ":" + std::to_string(reader.line_no) + ": short row");
        }
        double v;
        if (!parse_double(fields[static_cast<std::size_t>(ci)], v)) {
            if (options.skip_bad_rows) continue;
            throw IoError(path + ":" + std::to_string(reader.line_no) + ": non-numeric value");
        }
        out[strip(fields[static_cast<std::size_t>(gi)])].push_back(v);
    }
    return out;
}

void write_sample_csv(const std::string& path, const SamplePayload& payload) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "x\n";
    char buf[48];
    for (double v : payload.values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out << buf;
    }
}

void write_sample_sidecar(const std::string& path, const SamplePayload& payload) {
    nlohmann::json j;
    j["seed"] = payload.seed;
    j["n"] = payload.values.size();
    j["spec"] = nlohmann::json::parse(to_json(payload.spec));
    if (!payload.source.empty()) j["source"] = payload.source;
    write_text_file(path, j.dump(2) + "\n");
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace quantfam
