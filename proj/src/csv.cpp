#include "linecurve/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linecurve {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

std::string points_csv(const std::vector<IntPoint>& points) {
    std::string out = "x,y\n";
    for (const auto& p : points) {
        out += format_int(p.x);
        out += ',';
        out += format_int(p.y);
        out += '\n';
    }
    return out;
}

std::string lines_csv(const std::vector<IntLine>& lines) {
    std::string out = "a,b\n";
    for (const auto& l : lines) {
        out += format_int(l.a);
        out += ',';
        out += format_int(l.b);
        out += '\n';
    }
    return out;
}

std::string curves_csv(const std::vector<CurveTranslate>& curves) {
    std::string out = "family,u,v,branch\n";
    for (const auto& c : curves) {
        out += to_string(c.family);
        out += ',';
        out += format_double(c.offset.x);
        out += ',';
        out += format_double(c.offset.y);
        out += ',';
        out += std::to_string(c.branch);
        out += '\n';
    }
    return out;
}

namespace {

[[noreturn]] void bad_row(std::size_t lineno, const std::string& line, const char* why) {
    std::ostringstream msg;
    msg << "CSV row " << lineno << " malformed (" << why << "): " << line;
    throw csv_parse_error(msg.str());
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::int64_t parse_i64(const std::string& s, std::size_t lineno, const std::string& line) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || end == s.c_str() || *end != '\0')
        bad_row(lineno, line, "expected integer");
    return v;
}

double parse_f64(const std::string& s, std::size_t lineno, const std::string& line) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (errno == ERANGE || end == s.c_str() || *end != '\0')
        bad_row(lineno, line, "expected number");
    return v;
}

// Two comma-separated fields; empty/comment/header rows return false.
bool row_fields(const std::string& line, std::size_t lineno, std::string& f0,
                std::string& f1, const char* header) {
    if (line.empty() || line[0] == '#') return false;
    if (line == header) return false;
    auto comma = line.find(',');
    if (comma == std::string::npos) bad_row(lineno, line, "expected two fields");
    f0 = line.substr(0, comma);
    f1 = line.substr(comma + 1);
    if (f1.find(',') != std::string::npos) bad_row(lineno, line, "expected two fields");
    return true;
}

} // namespace

std::vector<IntPoint> parse_points_csv(const std::string& text) {
    std::vector<IntPoint> out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string f0, f1;
        if (!row_fields(lines[i], i + 1, f0, f1, "x,y")) continue;
        out.push_back({parse_i64(f0, i + 1, lines[i]), parse_i64(f1, i + 1, lines[i])});
    }
    return out;
}

std::vector<IntLine> parse_lines_csv(const std::string& text) {
    std::vector<IntLine> out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string f0, f1;
        if (!row_fields(lines[i], i + 1, f0, f1, "a,b")) continue;
        out.push_back({parse_i64(f0, i + 1, lines[i]), parse_i64(f1, i + 1, lines[i])});
    }
    return out;
}

std::vector<Vec2> parse_xy_csv(const std::string& text) {
    std::vector<Vec2> out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string f0, f1;
        if (!row_fields(lines[i], i + 1, f0, f1, "x,y")) continue;
        out.push_back({parse_f64(f0, i + 1, lines[i]), parse_f64(f1, i + 1, lines[i])});
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace linecurve
