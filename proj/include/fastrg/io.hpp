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

#ifndef FASTRG_IO_HPP_
#define FASTRG_IO_HPP_

#include <iosfwd>
#include <string>

#include "fastrg/edge_list.hpp"
#include "fastrg/matrix.hpp"

namespace fastrg {

enum class MatrixFormat {
  dense_csv,      // one row per line, comma-separated values
  matrix_market,  // coordinate or array, real or integer
};

enum class EdgeListFormat {
  tsv,                       // 0-based "i<TAB>j<TAB>multiplicity" rows
  matrix_market_coordinate,  // 1-based, symmetric qualifier when undirected
};

// Dense matrix from a file. Sign and finiteness checks stay with validate;
// parsing problems raise Error{ParseError} naming line and column, and an
// unreadable path raises Error{IoError}.
Matrix read_factor_matrix(const std::string& path, MatrixFormat format);
Matrix read_factor_matrix(std::istream& in, MatrixFormat format,
                          const std::string& name);

// TSV: one-line header "# fastrg n=<n> d=<d> directed=<0|1>", then one
// lexicographically sorted row per distinct pair. Matrix Market: standard
// coordinate integer format; undirected lists get the symmetric qualifier
// and lower-triangle (row >= column) entries. Throws Error{IoError}.
void write_edge_list(const EdgeList& edges, const std::string& path,
                     EdgeListFormat format);
void write_edge_list(const EdgeList& edges, std::ostream& out,
                     EdgeListFormat format);

// Inverse of write_edge_list: multiplicities expand back into duplicate
// entries, so the multiset of edges round-trips exactly.
EdgeList read_edge_list(const std::string& path, EdgeListFormat format);
EdgeList read_edge_list(std::istream& in, EdgeListFormat format,
                        const std::string& name);

}  // namespace fastrg

#endif  // FASTRG_IO_HPP_
