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

#ifndef FASTRG_POSTPROCESS_HPP_
#define FASTRG_POSTPROCESS_HPP_

#include "fastrg/edge_list.hpp"

namespace fastrg {

// Replaces each edge (i, j) by (min, max) and clears the directed flag.
// Multiplicity and edge order are preserved. Throws Error{NotSquare}.
EdgeList symmetrize(const EdgeList& edges);

// Collapses duplicate pairs to multiplicity 1 and sorts lexicographically.
// Idempotent.
EdgeList threshold(const EdgeList& edges);

// Deletes all (i, i) edges. This thins the total count, so it is NOT
// distribution-equal to the loopless sampling mode, which conditions each
// edge on I != J instead. Throws Error{NotSquare}.
EdgeList strip_self_loops(const EdgeList& edges);

}  // namespace fastrg

#endif  // FASTRG_POSTPROCESS_HPP_
