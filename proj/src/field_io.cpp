#include "qst/field_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace qst {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& name, int line, std::string_view token) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        parse_fail(name, line, "cannot parse number '" + std::string(token) + "'");
    return value;
}

// PGM header tokens are separated by whitespace; '#' starts a comment that
// runs to end of line.
std::string next_pgm_token(std::istream& in, const std::string& name) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) parse_fail(name, 0, "unexpected end of PGM data");
    return tok;
}

int parse_pgm_int(std::istream& in, const std::string& name, const char* what) {
    const std::string tok = next_pgm_token(in, name);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        parse_fail(name, 0, std::string("bad PGM ") + what + " '" + tok + "'");
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double: to_chars failed");
    return std::string(buf, ptr);
}

FieldFormat format_from_path(const std::filesystem::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".pgm" || ext == ".pnm") return FieldFormat::Pgm;
    return FieldFormat::Csv;
}

Field parse_csv(std::istream& in, const std::string& name) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            std::string_view token(line.data() + start,
                                   (comma == std::string::npos ? line.size() : comma) - start);
            // tolerate surrounding blanks
            while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
            row.push_back(parse_double(name, line_no, token));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            parse_fail(name, line_no,
                       "row has " + std::to_string(row.size()) + " values, expected " +
                           std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) parse_fail(name, line_no, "empty CSV");

    const std::size_t cols = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * cols);
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());

    if (cols == 1) return Field::signal(std::move(flat));
    return Field::image(static_cast<int>(rows.size()), static_cast<int>(cols), std::move(flat));
}

Field parse_pgm(std::istream& in, const std::string& name) {
    const std::string magic = next_pgm_token(in, name);
    if (magic != "P2" && magic != "P5")
        parse_fail(name, 1, "unsupported PGM magic '" + magic + "' (want P2 or P5)");
    const int width = parse_pgm_int(in, name, "width");
    const int height = parse_pgm_int(in, name, "height");
    const int maxval = parse_pgm_int(in, name, "maxval");
    if (width <= 0 || height <= 0) parse_fail(name, 0, "non-positive PGM dimensions");
    if (maxval < 1 || maxval > 255)
        parse_fail(name, 0, "unsupported PGM maxval " + std::to_string(maxval));

    const std::size_t n = static_cast<std::size_t>(width) * height;
    std::vector<double> values;
    values.reserve(n);
    if (magic == "P2") {
        for (std::size_t i = 0; i < n; ++i) {
            const int v = parse_pgm_int(in, name, "sample");
            if (v > maxval)
                parse_fail(name, 0, "sample " + std::to_string(v) + " exceeds maxval");
            values.push_back(static_cast<double>(v));
        }
    } else {
        // the tokenizer consumed the single whitespace byte after maxval;
        // raw samples start immediately
        std::vector<unsigned char> raw(n);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            parse_fail(name, 0, "truncated P5 payload at byte offset " +
                                    std::to_string(in.gcount()));
        for (unsigned char b : raw) {
            if (b > maxval)
                parse_fail(name, 0, "sample " + std::to_string(int(b)) + " exceeds maxval");
            values.push_back(static_cast<double>(b));
        }
    }
    return Field::image(height, width, std::move(values));
}

void write_csv(const Field& field, std::ostream& out) {
    field.require_valid();
    if (field.kind == FieldKind::Signal1D) {
        for (double v : field.values) out << format_double(v) << '\n';
        return;
    }
    for (int r = 0; r < field.height; ++r) {
        for (int c = 0; c < field.width; ++c) {
            if (c) out << ',';
            out << format_double(field.at(r, c));
        }
        out << '\n';
    }
}

void write_pgm(const Field& field, std::ostream& out) {
    field.require_valid();
    out << "P2\n" << field.width << ' ' << field.height << "\n255\n";
    // PGM ASCII lines stay under 70 characters
    int line_len = 0;
    const int total = field.size();
    for (int k = 0; k < total; ++k) {
        const int v = static_cast<int>(std::round(std::clamp(field.values[k], 0.0, 255.0)));
        const std::string tok = std::to_string(v);
        if (line_len != 0 && line_len + 1 + static_cast<int>(tok.size()) > 66) {
            out << '\n';
            line_len = 0;
        }
        if (line_len != 0) {
            out << ' ';
            ++line_len;
        }
        out << tok;
        line_len += static_cast<int>(tok.size());
    }
    out << '\n';
}

Field load_field(const std::filesystem::path& path, FieldFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return format == FieldFormat::Pgm ? parse_pgm(in, path.filename().string())
                                      : parse_csv(in, path.filename().string());
}

Field load_field(const std::filesystem::path& path) {
    return load_field(path, format_from_path(path));
}

void save_field(const Field& field, const std::filesystem::path& path, FieldFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    if (format == FieldFormat::Pgm)
        write_pgm(field, out);
    else
        write_csv(field, out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void save_field(const Field& field, const std::filesystem::path& path) {
    save_field(field, path, format_from_path(path));
}

}  // namespace qst
