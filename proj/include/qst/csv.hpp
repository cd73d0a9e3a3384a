#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qst::csv {

// Shortest decimal form that parses back to the same double.
std::string format(double value);

double parse_double(std::string_view field);

std::vector<std::string_view> split(std::string_view line, char sep = ',');

template <typename Range>
std::string join(const Range& values) {
    std::string out;
    bool first = true;
    for (double v : values) {
        if (!first) out += ',';
        out += format(v);
        first = false;
    }
    return out;
}

// Writes to a sibling temporary and renames over the destination.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace qst::csv
