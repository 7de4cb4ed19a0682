#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alleyflow/flow.hpp"
#include "alleyflow/graph.hpp"
#include "alleyflow/trajectory.hpp"

namespace alleyflow {

struct IoError : Error {
  using Error::Error;
};
// Header problems (missing/extra columns) vs. per-row value problems; both
// messages carry the 1-based row number.
struct CsvSchemaError : Error {
  using Error::Error;
};
struct CsvValueError : Error {
  using Error::Error;
};

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Nodes CSV: header `id,x,y`. Links CSV: header `from,to,one_way` with
// one_way in {0,1}. UTF-8, comma-separated, '#' comment lines ignored.
std::vector<Node> parse_nodes_csv(std::string_view text);
std::vector<Link> parse_links_csv(std::string_view text);
std::string nodes_csv(std::span<const Node> nodes);
std::string links_csv(std::span<const Link> links);

// Reads both files, parses, and builds the graph; build errors are
// rethrown with the offending file and row named.
WalkwayGraph load_venue(const std::filesystem::path& nodes_path,
                        const std::filesystem::path& links_path);

// Matrix table: header `id,<node ids...>`, one labeled row per node, +inf
// rendered as the literal token `inf`. Doubles are printed with shortest
// round-trip precision so re-parsing reproduces the matrix bit-for-bit.
std::string matrix_csv(const Matrix<double>& m, std::span<const std::string> ids);
std::string matrix_csv(const Matrix<std::int64_t>& m, std::span<const std::string> ids);

struct NamedMatrix {
  std::vector<std::string> ids;
  Matrix<double> values;
};
NamedMatrix parse_matrix_csv(std::string_view text);

std::string distance_matrix_csv(const WalkwayGraph& graph);

// NTXY CSV: header `n,t,x,y`.
std::vector<NtxyRecord> parse_ntxy_csv(std::string_view text);
std::string ntxy_csv(std::span<const NtxyRecord> records);

// `from,to,total,category,threshold_low,threshold_mid,threshold_high`.
std::string categories_csv(const CategorizedAlleys& categorized, const WalkwayGraph& graph);

// Traceability line prepended to file exports:
// `# alleyflow <version> <label> digest=fnv1a:<16 hex>` over the body bytes.
std::string export_header(std::string_view label, std::string_view body);

std::uint64_t fnv1a64(std::string_view bytes);

// Shortest round-trip decimal form; +inf prints as `inf`.
std::string format_double(double v);

}  // namespace alleyflow
