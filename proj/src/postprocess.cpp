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

#include "fastrg/postprocess.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fastrg/error.hpp"

namespace fastrg {

namespace {

void require_square(const EdgeList& edges, const char* what) {
  if (edges.n != edges.d) {
    throw Error(Errc::not_square, std::string(what) +
                                      " requires a square edge list (n = d)");
  }
}

}  // namespace

EdgeList symmetrize(const EdgeList& edges) {
  require_square(edges, "symmetrize");
  EdgeList out = edges;
  out.directed = false;
  for (Edge& e : out.edges) {
    if (e.dst < e.src) std::swap(e.src, e.dst);
  }
  return out;
}

EdgeList threshold(const EdgeList& edges) {
  EdgeList out = edges;
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()),
                  out.edges.end());
  return out;
}

EdgeList strip_self_loops(const EdgeList& edges) {
  require_square(edges, "strip_self_loops");
  EdgeList out = edges;
  std::erase_if(out.edges, [](const Edge& e) { return e.src == e.dst; });
  return out;
}

}  // namespace fastrg
