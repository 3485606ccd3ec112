#pragma once

// OEIS b-file reader: one "index value" pair per line, decimal integers of
// arbitrary magnitude, '#' comment lines and blank lines ignored, indices
// strictly increasing.

#include "motzkin/numeric.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace motzkin {

struct bfile_error : std::runtime_error {
    bfile_error(std::string source, long line_number, const std::string& message)
        : std::runtime_error(source + (line_number > 0 ? ":" + std::to_string(line_number) : "") +
                             ": " + message),
          source_name(std::move(source)),
          line(line_number) {}

    std::string source_name;
    long line = 0;
};

struct BFileEntry {
    long index = 0;
    Integer value;
};

struct BFile {
    std::string source_name;
    std::vector<BFileEntry> entries;
};

namespace detail {

inline bool is_decimal_integer(const std::string& token) {
    std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
    if (i == token.size()) return false;
    for (; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    }
    return true;
}

}  // namespace detail

inline BFile parse_bfile(std::istream& in, std::string source_name) {
    BFile bf;
    bf.source_name = std::move(source_name);
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        std::string index_token;
        if (!(fields >> index_token) || index_token[0] == '#') continue;

        std::string value_token, extra;
        if (!(fields >> value_token)) {
            throw bfile_error(bf.source_name, line_number, "expected \"index value\"");
        }
        if (fields >> extra) {
            throw bfile_error(bf.source_name, line_number, "trailing content after value");
        }
        if (!detail::is_decimal_integer(index_token) || !detail::is_decimal_integer(value_token)) {
            throw bfile_error(bf.source_name, line_number, "malformed integer");
        }

        BFileEntry entry;
        try {
            entry.index = std::stol(index_token);
        } catch (const std::out_of_range&) {
            throw bfile_error(bf.source_name, line_number, "index out of range");
        }
        entry.value = Integer(value_token);
        if (!bf.entries.empty() && entry.index <= bf.entries.back().index) {
            throw bfile_error(bf.source_name, line_number, "indices must be strictly increasing");
        }
        bf.entries.push_back(std::move(entry));
    }
    return bf;
}

inline BFile load_bfile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw bfile_error(path.string(), 0, "cannot open file");
    }
    return parse_bfile(in, path.filename().string());
}

}  // namespace motzkin
