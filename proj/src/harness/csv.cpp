#include "paramres/harness/csv.hpp"

#include "paramres/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace paramres::harness {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_text_atomic(const std::filesystem::path &path,
                       const std::string &content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out)
            throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw IoError("rename to " + path.string() + " failed: " +
                      ec.message());
}

void write_csv(const std::filesystem::path &path,
               const std::vector<std::string> &header,
               const std::vector<const std::vector<double> *> &columns) {
    if (header.size() != columns.size() || columns.empty())
        throw ValidationError("write_csv: header/column mismatch");
    const std::size_t rows = columns.front()->size();
    for (const auto *col : columns)
        if (col->size() != rows)
            throw ValidationError("write_csv: ragged columns");

    std::string body;
    body.reserve(rows * columns.size() * 12 + 64);
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c)
            body += ',';
        body += header[c];
    }
    body += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c)
                body += ',';
            body += format_double((*columns[c])[r]);
        }
        body += '\n';
    }
    write_text_atomic(path, body);
}

} // namespace paramres::harness
