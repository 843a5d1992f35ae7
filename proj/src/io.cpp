#include "heatconv/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace heatconv {

namespace {

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

ResultRecord record_from_point(const NeutralPoint& pt) {
    ResultRecord rec;
    rec.n_rate = pt.n_rate;
    rec.a_sq = pt.a * pt.a;
    rec.method = pt.method;
    rec.rayleigh = pt.rayleigh;
    if (!pt.ok) rec.note = pt.error;
    return rec;
}

}  // namespace

std::string format_sig9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

double round_sig9(double v) { return std::strtod(format_sig9(v).c_str(), nullptr); }

std::vector<ResultRecord> records_from_points(const std::vector<NeutralPoint>& pts) {
    std::vector<ResultRecord> out;
    out.reserve(pts.size());
    for (const NeutralPoint& pt : pts) out.push_back(record_from_point(pt));
    return out;
}

std::vector<ResultRecord> records_from_table1(const Table1Report& report) {
    std::vector<ResultRecord> out;
    for (size_t i = 0; i < report.rows.size(); ++i) {
        const Table1Row& row = report.rows[i];
        for (const Table1Cell& cell : report.cells[i]) {
            ResultRecord rec;
            rec.n_rate = row.n_rate;
            rec.a_sq = row.a_sq;
            rec.method = cell.method;
            rec.order = cell.order;
            rec.rayleigh = cell.computed;
            rec.paper_value = cell.paper;
            if (cell.paper && cell.ok)
                rec.rel_deviation = (cell.computed - *cell.paper) / *cell.paper;
            if (!cell.ok) rec.note = cell.error;
            out.push_back(rec);
        }
    }
    return out;
}

std::string to_csv(const std::vector<ResultRecord>& records) {
    std::ostringstream os;
    os << "N,a2,method,K_or_resolution,rayleigh,paper_value,rel_deviation\n";
    for (const ResultRecord& rec : records) {
        os << format_sig9(rec.n_rate) << ',' << format_sig9(rec.a_sq) << ','
           << csv_quote(rec.method) << ',' << rec.order << ','
           << format_sig9(rec.rayleigh) << ','
           << (rec.paper_value ? format_sig9(*rec.paper_value) : "") << ','
           << (rec.rel_deviation ? format_sig9(*rec.rel_deviation) : "") << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const std::vector<ResultRecord>& records,
                       const std::string& command, const std::string& summary) {
    nlohmann::json doc;
    doc["meta"] = {{"command", command}, {"summary", summary}, {"tool", "heatconv"}};
    doc["results"] = nlohmann::json::array();
    for (const ResultRecord& rec : records) {
        nlohmann::json item = {
            {"N", round_sig9(rec.n_rate)},
            {"a2", round_sig9(rec.a_sq)},
            {"method", rec.method},
            {"K_or_resolution", rec.order},
            {"rayleigh", round_sig9(rec.rayleigh)},
        };
        if (rec.paper_value) {
            item["paper_value"] = round_sig9(*rec.paper_value);
        }
        if (rec.rel_deviation) {
            item["rel_deviation"] = round_sig9(*rec.rel_deviation);
        }
        if (!rec.note.empty()) item["note"] = rec.note;
        doc["results"].push_back(std::move(item));
    }
    return doc;
}

std::vector<ResultRecord> records_from_json(const nlohmann::json& doc) {
    std::vector<ResultRecord> out;
    for (const nlohmann::json& item : doc.at("results")) {
        ResultRecord rec;
        rec.n_rate = item.at("N").get<double>();
        rec.a_sq = item.at("a2").get<double>();
        rec.method = item.at("method").get<std::string>();
        rec.order = item.at("K_or_resolution").get<int>();
        rec.rayleigh = item.at("rayleigh").get<double>();
        if (item.contains("paper_value")) rec.paper_value = item["paper_value"].get<double>();
        if (item.contains("rel_deviation"))
            rec.rel_deviation = item["rel_deviation"].get<double>();
        if (item.contains("note")) rec.note = item["note"].get<std::string>();
        out.push_back(std::move(rec));
    }
    return out;
}

std::string to_plot_data(const std::vector<NeutralPoint>& points) {
    if (points.empty()) throw std::domain_error("to_plot_data: no points");
    std::ostringstream os;
    os << "# a N Ra method\n";
    double prev_n = points.front().n_rate;
    for (const NeutralPoint& pt : points) {
        if (pt.n_rate != prev_n) {
            os << '\n';  // block separator between N slices
            prev_n = pt.n_rate;
        }
        os << format_sig9(pt.a) << ' ' << format_sig9(pt.n_rate) << ' '
           << format_sig9(pt.rayleigh) << ' ' << pt.method << '\n';
    }
    return os.str();
}

void atomic_write(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("atomic_write: cannot open " + tmp.string());
        os << contents;
        os.flush();
        if (!os) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("atomic_write: write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw IoError("atomic_write: rename failed for " + path + ": " +
                                 ec.message());
    }
}

}  // namespace heatconv
