#include "clusterability/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace clusterability::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_label(std::string_view s, std::size_t& out) {
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return in;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Dataset parse_dataset_csv(std::istream& in) {
    std::vector<double> coords;
    std::size_t dim = 0;
    std::size_t line_no = 0;
    bool first_data_row = true;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (!parse_double(fields[j], row[j])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first_data_row && coords.empty() && line_no == 1) {
                continue;  // header
            }
            throw std::runtime_error("dataset CSV line " + std::to_string(line_no) +
                                     ": non-numeric field");
        }
        if (first_data_row) {
            dim = row.size();
            first_data_row = false;
        } else if (row.size() != dim) {
            throw std::runtime_error("dataset CSV line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(dim) + " columns");
        }
        coords.insert(coords.end(), row.begin(), row.end());
    }
    if (coords.empty()) {
        throw std::runtime_error("dataset CSV contains no points");
    }
    return Dataset(dim, std::move(coords));
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_dataset_csv(in);
}

std::string dataset_to_csv(const Dataset& data) {
    std::string out;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto p = data.point(i);
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (j) out += ',';
            out += format_double(p[j]);
        }
        out += '\n';
    }
    return out;
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& data) {
    write_file_atomic(path, dataset_to_csv(data));
}

Partition parse_partition_csv(std::istream& in) {
    std::vector<std::size_t> labels;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto field = trim(line);
        if (field.empty()) continue;
        std::size_t label = 0;
        if (!parse_label(field, label)) {
            if (labels.empty() && line_no == 1) continue;  // header
            throw std::runtime_error("partition CSV line " + std::to_string(line_no) +
                                     ": expected a non-negative integer label");
        }
        labels.push_back(label);
    }
    return Partition::from_labels(std::move(labels));
}

Partition read_partition_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_partition_csv(in);
}

std::string partition_to_csv(const Partition& partition) {
    std::string out;
    for (std::size_t l : partition.labels()) {
        out += std::to_string(l);
        out += '\n';
    }
    return out;
}

void write_partition_csv(const std::filesystem::path& path, const Partition& partition) {
    write_file_atomic(path, partition_to_csv(partition));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace clusterability::io
