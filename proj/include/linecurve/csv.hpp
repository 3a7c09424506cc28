#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecurve/arrangement.hpp"
#include "linecurve/vec.hpp"

namespace linecurve {

// Malformed CSV input; carries the 1-based row number in the message.
class csv_parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Lossless number formatting: integers without a decimal point, reals
// with 17 significant digits.
std::string format_double(double v);
std::string format_int(std::int64_t v);

// points.csv: header "x,y", integer rows. lines.csv: header "a,b".
// curves.csv: header "family,u,v,branch".
std::string points_csv(const std::vector<IntPoint>& points);
std::string lines_csv(const std::vector<IntLine>& lines);
std::string curves_csv(const std::vector<CurveTranslate>& curves);

std::vector<IntPoint> parse_points_csv(const std::string& text);
std::vector<IntLine> parse_lines_csv(const std::string& text);

// Real-valued "x,y" rows (comment lines starting with '#' are skipped);
// malformed rows are reported with their 1-based line number.
std::vector<Vec2> parse_xy_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace linecurve
