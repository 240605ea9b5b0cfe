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

#ifndef FASTRG_EDGE_LIST_HPP_
#define FASTRG_EDGE_LIST_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fastrg {

struct Edge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  }
};

// Coordinate-form multigraph: duplicates encode multiplicity. Sources live
// in [0, n), targets in [0, d). Undirected lists store each edge with
// src <= dst and have directed == false.
struct EdgeList {
  std::size_t n = 0;
  std::size_t d = 0;
  bool directed = true;
  std::vector<Edge> edges;

  friend bool operator==(const EdgeList&, const EdgeList&) = default;
};

}  // namespace fastrg

#endif  // FASTRG_EDGE_LIST_HPP_
