#pragma once

#include <iosfwd>
#include <utility>

#include "hpd/types.hpp"
#include "hpd/verify.hpp"

namespace hpd {

// Decomposition file layout, version HPD1:
//
//   HPD1 q=<q> m=<m> n=<count>
//   <v0> <v1> ... <vm>        (n lines, lowercase hex labels)
//
// Every line is newline-terminated with single spaces and no trailing
// whitespace, so a file re-emitted after parsing is byte-identical.
struct DecompositionHeader {
  int q = 0;
  int m = 0;
  std::uint64_t n = 0;
};

void write_header(std::ostream& os, const DecompositionHeader& h);
void write_path_line(std::ostream& os, const PathEmbedding& p);
void write_decomposition(std::ostream& os, const Decomposition& d);

// Throws InvalidParameter on any deviation from the format.
[[nodiscard]] DecompositionHeader read_header(std::istream& is);

// Reads exactly h.n path lines and requires EOF afterwards. The sink sees
// a reused buffer.
void read_paths(std::istream& is, const DecompositionHeader& h,
                const std::function<void(const PathEmbedding&)>& sink);

[[nodiscard]] std::pair<DecompositionHeader, std::vector<PathEmbedding>> read_decomposition(
    std::istream& is);

// Streaming check of a decomposition file against Q_q.
[[nodiscard]] Report verify_decomposition_file(std::istream& is,
                                               std::uint64_t max_edges = kDefaultMaxEdges);

}  // namespace hpd
