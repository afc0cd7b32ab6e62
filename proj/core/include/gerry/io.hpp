#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "gerry/instance.hpp"
#include "gerry/reductions.hpp"

namespace gerry {

// Instance text format:
//   colors <c1> <c2> ...
//   target <c>
//   k <int>
//   [mode disconnected]
//   v <id> <color> <weight>     (ids 0..n-1, all v lines before e lines)
//   e <id1> <id2>
// '#' starts a comment.

[[nodiscard]] Instance parse_instance(std::string_view text);
[[nodiscard]] std::string write_instance(const Instance& inst);

// Partition text format: one block per line, whitespace-separated ids.
[[nodiscard]] Partition parse_partition(std::string_view text);
[[nodiscard]] std::string write_partition(const Partition& part);

// Source graph format for the path reduction:
//   n <vertex count>
//   e <u> <v>
[[nodiscard]] SimpleGraph parse_graph(std::string_view text);
[[nodiscard]] std::string write_graph(const SimpleGraph& g);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gerry
