#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "clusterability/dataset.hpp"

namespace clusterability::io {

/// Round-trip exact decimal form of a double (%.17g).
std::string format_double(double v);

/// One point per row, `dim` numeric comma-separated columns, optional header row.
Dataset parse_dataset_csv(std::istream& in);
Dataset read_dataset_csv(const std::filesystem::path& path);
std::string dataset_to_csv(const Dataset& data);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& data);

/// Single column of non-negative integer labels aligned with dataset rows; optional header.
Partition parse_partition_csv(std::istream& in);
Partition read_partition_csv(const std::filesystem::path& path);
std::string partition_to_csv(const Partition& partition);
void write_partition_csv(const std::filesystem::path& path, const Partition& partition);

/// Writes to a sibling temp file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace clusterability::io
