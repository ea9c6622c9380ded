#include "hpd/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace hpd {

namespace {

void append_hex(std::string& out, Vertex v) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  out.append(buf, end);
}

[[noreturn]] void bad_format(const std::string& what) {
  throw InvalidParameter("decomposition file: " + what);
}

// Strict lowercase hex in the canonical (shortest) spelling, so parsing
// and re-emitting any accepted file reproduces it byte for byte.
Vertex parse_label(const char* begin, const char* end) {
  if (begin == end || end - begin > 16) bad_format("bad vertex label");
  if (end - begin > 1 && *begin == '0') bad_format("bad vertex label");
  Vertex v = 0;
  for (const char* p = begin; p != end; ++p) {
    const char c = *p;
    int digit;
    if (c >= '0' && c <= '9') digit = c - '0';
    else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
    else bad_format("bad vertex label");
    v = (v << 4) | static_cast<Vertex>(digit);
  }
  return v;
}

}  // namespace

void write_header(std::ostream& os, const DecompositionHeader& h) {
  os << "HPD1 q=" << h.q << " m=" << h.m << " n=" << h.n << '\n';
}

void write_path_line(std::ostream& os, const PathEmbedding& p) {
  std::string line;
  line.reserve(p.verts.size() * 9);
  for (std::size_t i = 0; i < p.verts.size(); ++i) {
    if (i) line.push_back(' ');
    append_hex(line, p.verts[i]);
  }
  line.push_back('\n');
  os.write(line.data(), static_cast<std::streamsize>(line.size()));
}

void write_decomposition(std::ostream& os, const Decomposition& d) {
  write_header(os, DecompositionHeader{d.dim(), d.path_len(), d.path_count()});
  d.for_each([&os](const PathEmbedding& p) { write_path_line(os, p); });
}

DecompositionHeader read_header(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) bad_format("missing header");
  DecompositionHeader h;
  int consumed = 0;
  long long q = 0, m = 0;
  unsigned long long n = 0;
  if (std::sscanf(line.c_str(), "HPD1 q=%lld m=%lld n=%llu%n", &q, &m, &n, &consumed) != 3 ||
      consumed != static_cast<int>(line.size()))
    bad_format("bad header: " + line);
  if (q < 1 || q > kMaxPointwiseDim || m < 1 || m > q) bad_format("header out of range");
  h.q = static_cast<int>(q);
  h.m = static_cast<int>(m);
  h.n = n;
  return h;
}

void read_paths(std::istream& is, const DecompositionHeader& h,
                const std::function<void(const PathEmbedding&)>& sink) {
  PathEmbedding buf;
  buf.q = h.q;
  buf.verts.resize(h.m + 1);
  std::string line;
  for (std::uint64_t i = 0; i < h.n; ++i) {
    if (!std::getline(is, line)) bad_format("expected " + std::to_string(h.n) + " paths");
    const char* p = line.data();
    const char* end = p + line.size();
    for (int field = 0; field <= h.m; ++field) {
      if (field) {
        if (p == end || *p != ' ') bad_format("expected " + std::to_string(h.m + 1) +
                                              " labels per line");
        ++p;
      }
      const char* tok = p;
      while (p != end && *p != ' ') ++p;
      const Vertex v = parse_label(tok, p);
      if ((v >> h.q) != 0) bad_format("vertex label out of range");  // q <= 63
      buf.verts[field] = v;
    }
    if (p != end) bad_format("trailing characters on a path line");
    sink(buf);
  }
  if (is.peek() != std::char_traits<char>::eof()) bad_format("trailing data after the last path");
}

std::pair<DecompositionHeader, std::vector<PathEmbedding>> read_decomposition(std::istream& is) {
  const DecompositionHeader h = read_header(is);
  std::vector<PathEmbedding> paths;
  paths.reserve(h.n);
  read_paths(is, h, [&](const PathEmbedding& p) { paths.push_back(p); });
  return {h, std::move(paths)};
}

Report verify_decomposition_file(std::istream& is, std::uint64_t max_edges) {
  const DecompositionHeader h = read_header(is);
  PartitionChecker checker(h.q, max_edges);
  read_paths(is, h, [&](const PathEmbedding& p) { checker.add_path(p, h.m); });
  return checker.finish();
}

}  // namespace hpd
