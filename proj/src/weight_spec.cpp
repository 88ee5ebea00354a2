#include "angspace/weight_spec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "angspace/errors.hpp"

namespace angspace {

namespace {

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Parses a real from text[begin, end) after trimming blanks; `base` is added
/// to reported positions.
double real_at(std::string_view text, std::size_t base) {
    std::size_t b = 0, e = text.size();
    while (b < e && blank(text[b])) ++b;
    while (e > b && blank(text[e - 1])) --e;
    if (b == e) throw ParseError(base + b, "expected a number");
    const char* first = text.data() + b;
    const char* last = text.data() + e;
    if (*first == '+') ++first;
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec == std::errc::result_out_of_range) throw ParseError(base + b, "number out of range");
    if (res.ec != std::errc()) throw ParseError(base + b, "expected a number");
    if (res.ptr != last)
        throw ParseError(base + static_cast<std::size_t>(res.ptr - text.data()), "unexpected character");
    if (std::isnan(v)) throw ParseError(base + b, "NaN is not allowed");
    return v;
}

Vec2 vec_at(std::string_view text, std::size_t base) {
    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError(base + text.size(), "expected ',' between coordinates");
    const double a = real_at(text.substr(0, comma), base);
    const double b = real_at(text.substr(comma + 1), base + comma + 1);
    if (!std::isfinite(a) || !std::isfinite(b)) throw ParseError(base, "coordinates must be finite");
    return {a, b};
}

template <class F>
Weight with_position(std::size_t pos, F&& make) {
    try {
        return make();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Io) throw;
        throw ParseError(pos, e.what());
    }
}

}  // namespace

double parse_real(std::string_view text) { return real_at(text, 0); }

Vec2 parse_vec2(std::string_view text) { return vec_at(text, 0); }

std::vector<Vec2> read_sphere_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Io, "cannot open sphere file '" + path + "'");
    std::vector<Vec2> pts;
    std::string line;
    std::size_t offset = 0;
    bool first = true;
    while (std::getline(in, line)) {
        const std::size_t here = offset;
        offset += line.size() + 1;
        std::size_t b = 0;
        while (b < line.size() && blank(line[b])) ++b;
        if (b == line.size() || line[b] == '#') continue;
        if (first && line.compare(b, 5, "x1,x2") == 0) {
            first = false;
            continue;
        }
        first = false;
        pts.push_back(vec_at(line, here));
    }
    return pts;
}

Weight parse_weight(std::string_view spec) {
    const std::size_t colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::size_t arg = colon == std::string_view::npos ? spec.size() : colon + 1;
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(arg);

    if (head == "axis" || head == "hyperbola") {
        if (colon != std::string_view::npos) throw ParseError(colon, "'" + std::string(head) + "' takes no parameter");
        return head == "axis" ? Weight::axis_seminorm() : Weight::hyperbola();
    }
    if (head == "lp" || head == "polygon" || head == "sphere-file") {
        if (colon == std::string_view::npos) throw ParseError(spec.size(), "expected ':' and a parameter");
        if (head == "sphere-file") {
            if (rest.empty()) throw ParseError(arg, "expected a file path");
            const std::string path(rest);
            return with_position(arg, [&] { return Weight::custom_sphere(read_sphere_file(path), std::string(spec)); });
        }
        const double v = real_at(rest, arg);
        if (head == "lp") return with_position(arg, [&] { return Weight::holder(v); });
        return with_position(arg, [&] { return Weight::polygon(v); });
    }
    throw ParseError(0, "unknown weight '" + std::string(head) + "' (expected lp, polygon, axis, hyperbola, sphere-file)");
}

}  // namespace angspace
