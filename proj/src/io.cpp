// Copyright 2026 The fastrg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fastrg/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

constexpr double kMaxDenseCells = 1e8;
constexpr std::uint64_t kMaxExpandedEdges = 200000000;

[[noreturn]] void parse_fail(const std::string& name, std::size_t line,
                             const std::string& msg) {
  throw Error(Errc::parse_error,
              name + ":" + std::to_string(line) + ": " + msg);
}

void strip_cr(std::string& s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
}

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

Matrix read_dense_csv(std::istream& in, const std::string& name) {
  std::vector<double> values;
  std::size_t n_rows = 0;
  std::size_t width = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank(line)) continue;
    std::size_t start = 0;
    std::size_t col = 0;
    while (true) {
      ++col;
      const std::size_t comma = line.find(',', start);
      const std::string cell = trim(
          comma == std::string::npos ? line.substr(start)
                                     : line.substr(start, comma - start));
      char* end = nullptr;
      const double v = cell.empty() ? 0.0 : std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        parse_fail(name, lineno,
                   "column " + std::to_string(col) + ": cannot parse '" +
                       cell + "' as a number");
      }
      values.push_back(v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (width == 0) {
      width = col;
    } else if (col != width) {
      parse_fail(name, lineno,
                 "row has " + std::to_string(col) + " columns, expected " +
                     std::to_string(width));
    }
    ++n_rows;
  }
  if (n_rows == 0) {
    throw Error(Errc::empty_matrix, name + ": no rows");
  }
  return Matrix(n_rows, width, std::move(values));
}

struct MmBanner {
  bool coordinate = false;
  bool symmetric = false;
  std::string field;
};

MmBanner read_mm_banner(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) {
    parse_fail(name, 1, "empty file");
  }
  strip_cr(line);
  std::istringstream banner(line);
  std::string tag, object, fmt, field, symmetry;
  banner >> tag >> object >> fmt >> field >> symmetry;
  if (tag != "%%MatrixMarket") {
    parse_fail(name, 1, "missing %%MatrixMarket banner");
  }
  if (to_lower(object) != "matrix") {
    parse_fail(name, 1, "unsupported object '" + object + "'");
  }
  MmBanner out;
  fmt = to_lower(fmt);
  if (fmt == "coordinate") {
    out.coordinate = true;
  } else if (fmt != "array") {
    parse_fail(name, 1, "unsupported format '" + fmt + "'");
  }
  out.field = to_lower(field);
  if (out.field != "real" && out.field != "integer") {
    parse_fail(name, 1,
               "unsupported field '" + field + "' (need real or integer)");
  }
  symmetry = to_lower(symmetry);
  if (symmetry == "symmetric") {
    out.symmetric = true;
  } else if (symmetry != "general") {
    parse_fail(name, 1, "unsupported symmetry '" + symmetry + "'");
  }
  return out;
}

// Next content line, past % comments and blanks. Returns false at EOF.
bool next_content_line(std::istream& in, std::string& line,
                       std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank(line) || line[0] == '%') continue;
    return true;
  }
  return false;
}

Matrix read_matrix_market_dense(std::istream& in, const std::string& name) {
  const MmBanner banner = read_mm_banner(in, name);
  std::size_t lineno = 1;
  std::string line;
  if (!next_content_line(in, line, lineno)) {
    parse_fail(name, lineno, "missing size line");
  }
  std::istringstream dims(line);
  std::size_t rows = 0, cols = 0;
  std::uint64_t nnz = 0;
  if (banner.coordinate ? !(dims >> rows >> cols >> nnz)
                        : !(dims >> rows >> cols)) {
    parse_fail(name, lineno, "cannot parse size line '" + line + "'");
  }
  if (rows == 0 || cols == 0) {
    throw Error(Errc::empty_matrix, name + ": zero-extent matrix");
  }
  if (static_cast<double>(rows) * static_cast<double>(cols) > kMaxDenseCells) {
    throw Error(Errc::too_large,
                name + ": dense read limited to 1e8 cells, got " +
                    std::to_string(rows) + " x " + std::to_string(cols));
  }
  if (banner.symmetric && rows != cols) {
    parse_fail(name, lineno, "symmetric matrix must be square");
  }

  Matrix out(rows, cols, 0.0);
  if (banner.coordinate) {
    for (std::uint64_t e = 0; e < nnz; ++e) {
      if (!next_content_line(in, line, lineno)) {
        parse_fail(name, lineno,
                   "expected " + std::to_string(nnz) + " entries, got " +
                       std::to_string(e));
      }
      std::istringstream entry(line);
      std::size_t i = 0, j = 0;
      double v = 0.0;
      if (!(entry >> i >> j >> v)) {
        parse_fail(name, lineno, "cannot parse entry '" + line + "'");
      }
      if (i < 1 || i > rows || j < 1 || j > cols) {
        parse_fail(name, lineno, "entry index out of range");
      }
      out(i - 1, j - 1) = v;
      if (banner.symmetric && i != j) {
        out(j - 1, i - 1) = v;
      }
    }
  } else {
    if (banner.symmetric) {
      parse_fail(name, lineno, "array symmetric matrices are not supported");
    }
    // Array format lists all cells in column-major order.
    std::vector<double> cells;
    cells.reserve(rows * cols);
    while (cells.size() < rows * cols) {
      if (!next_content_line(in, line, lineno)) {
        parse_fail(name, lineno,
                   "expected " + std::to_string(rows * cols) +
                       " values, got " + std::to_string(cells.size()));
      }
      std::istringstream vals(line);
      double v = 0.0;
      while (vals >> v) cells.push_back(v);
      if (!vals.eof()) {
        parse_fail(name, lineno, "cannot parse value line '" + line + "'");
      }
    }
    for (std::size_t t = 0; t < cells.size(); ++t) {
      out(t % rows, t / rows) = cells[t];
    }
  }
  return out;
}

std::vector<std::pair<Edge, std::uint64_t>> aggregate(
    const std::vector<Edge>& edges) {
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Edge, std::uint64_t>> runs;
  for (const Edge& e : sorted) {
    if (!runs.empty() && runs.back().first == e) {
      ++runs.back().second;
    } else {
      runs.emplace_back(e, 1);
    }
  }
  return runs;
}

void append_expanded(EdgeList& el, Edge e, std::uint64_t mult,
                     const std::string& name, std::size_t lineno) {
  if (mult == 0) {
    parse_fail(name, lineno, "multiplicity must be >= 1");
  }
  if (el.edges.size() + mult > kMaxExpandedEdges) {
    throw Error(Errc::too_large,
                name + ": expanded edge count exceeds " +
                    std::to_string(kMaxExpandedEdges));
  }
  if (e.src >= el.n || e.dst >= el.d) {
    parse_fail(name, lineno, "node index out of range");
  }
  if (!el.directed && e.dst < e.src) {
    std::swap(e.src, e.dst);
  }
  el.edges.insert(el.edges.end(), mult, e);
}

void write_tsv(const EdgeList& el, std::ostream& out) {
  out << "# fastrg n=" << el.n << " d=" << el.d
      << " directed=" << (el.directed ? 1 : 0) << "\n";
  for (const auto& [e, mult] : aggregate(el.edges)) {
    out << e.src << '\t' << e.dst << '\t' << mult << '\n';
  }
}

EdgeList read_tsv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line)) {
    parse_fail(name, 1, "missing header line");
  }
  strip_cr(line);
  unsigned long long n = 0, d = 0;
  int directed = -1;
  if (std::sscanf(line.c_str(), "# fastrg n=%llu d=%llu directed=%d", &n, &d,
                  &directed) != 3 ||
      (directed != 0 && directed != 1)) {
    parse_fail(name, 1,
               "bad header, expected '# fastrg n=<n> d=<d> directed=<0|1>'");
  }
  EdgeList el;
  el.n = static_cast<std::size_t>(n);
  el.d = static_cast<std::size_t>(d);
  el.directed = directed == 1;

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank(line)) continue;
    std::istringstream row(line);
    unsigned long long i = 0, j = 0, mult = 0;
    std::string extra;
    if (!(row >> i >> j >> mult) || (row >> extra)) {
      parse_fail(name, lineno, "expected 'i<TAB>j<TAB>multiplicity'");
    }
    append_expanded(el,
                    Edge{static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j)},
                    mult, name, lineno);
  }
  return el;
}

void write_mm_edges(const EdgeList& el, std::ostream& out) {
  const auto runs = aggregate(el.edges);
  out << "%%MatrixMarket matrix coordinate integer "
      << (el.directed ? "general" : "symmetric") << "\n";
  out << el.n << ' ' << el.d << ' ' << runs.size() << "\n";
  for (const auto& [e, mult] : runs) {
    if (el.directed) {
      out << e.src + 1 << ' ' << e.dst + 1 << ' ' << mult << '\n';
    } else {
      // Symmetric Matrix Market stores the lower triangle: row >= column.
      out << e.dst + 1 << ' ' << e.src + 1 << ' ' << mult << '\n';
    }
  }
}

EdgeList read_mm_edges(std::istream& in, const std::string& name) {
  const MmBanner banner = read_mm_banner(in, name);
  if (!banner.coordinate) {
    parse_fail(name, 1, "edge lists must use the coordinate format");
  }
  std::size_t lineno = 1;
  std::string line;
  if (!next_content_line(in, line, lineno)) {
    parse_fail(name, lineno, "missing size line");
  }
  std::istringstream dims(line);
  std::size_t n = 0, d = 0;
  std::uint64_t nnz = 0;
  if (!(dims >> n >> d >> nnz)) {
    parse_fail(name, lineno, "cannot parse size line '" + line + "'");
  }
  if (banner.symmetric && n != d) {
    parse_fail(name, lineno, "symmetric edge list must be square");
  }
  EdgeList el;
  el.n = n;
  el.d = d;
  el.directed = !banner.symmetric;
  for (std::uint64_t t = 0; t < nnz; ++t) {
    if (!next_content_line(in, line, lineno)) {
      parse_fail(name, lineno,
                 "expected " + std::to_string(nnz) + " entries, got " +
                     std::to_string(t));
    }
    std::istringstream entry(line);
    unsigned long long i = 0, j = 0, mult = 0;
    std::string extra;
    if (!(entry >> i >> j >> mult) || (entry >> extra)) {
      parse_fail(name, lineno, "cannot parse entry '" + line + "'");
    }
    if (i < 1 || j < 1) {
      parse_fail(name, lineno, "entries are 1-based");
    }
    append_expanded(el,
                    Edge{static_cast<std::uint32_t>(i - 1),
                         static_cast<std::uint32_t>(j - 1)},
                    mult, name, lineno);
  }
  return el;
}

}  // namespace

Matrix read_factor_matrix(std::istream& in, MatrixFormat format,
                          const std::string& name) {
  switch (format) {
    case MatrixFormat::dense_csv:
      return read_dense_csv(in, name);
    case MatrixFormat::matrix_market:
      return read_matrix_market_dense(in, name);
  }
  throw Error(Errc::parse_error, "unknown matrix format");
}

Matrix read_factor_matrix(const std::string& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
  }
  return read_factor_matrix(in, format, path);
}

void write_edge_list(const EdgeList& edges, std::ostream& out,
                     EdgeListFormat format) {
  switch (format) {
    case EdgeListFormat::tsv:
      write_tsv(edges, out);
      break;
    case EdgeListFormat::matrix_market_coordinate:
      write_mm_edges(edges, out);
      break;
  }
  if (!out) {
    throw Error(Errc::io_error, "write failed");
  }
}

void write_edge_list(const EdgeList& edges, const std::string& path,
                     EdgeListFormat format) {
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  }
  write_edge_list(edges, out, format);
  out.flush();
  if (!out) {
    throw Error(Errc::io_error, "write to '" + path + "' failed");
  }
}

EdgeList read_edge_list(std::istream& in, EdgeListFormat format,
                        const std::string& name) {
  switch (format) {
    case EdgeListFormat::tsv:
      return read_tsv(in, name);
    case EdgeListFormat::matrix_market_coordinate:
      return read_mm_edges(in, name);
  }
  throw Error(Errc::parse_error, "unknown edge list format");
}

EdgeList read_edge_list(const std::string& path, EdgeListFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
  }
  return read_edge_list(in, format, path);
}

}  // namespace fastrg
