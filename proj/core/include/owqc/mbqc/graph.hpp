// Copyright 2026 The owqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "owqc/ops.hpp"
#include "owqc/state.hpp"

namespace owqc::mbqc {

struct Edge {
    int j;
    int k;
};

/// Undirected simple graph on vertices 1..n. Each vertex is one physical qubit.
class Graph {
public:
    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints outside 1..vertex_count.
    Graph(int vertex_count, std::vector<Edge> edges);

    /// Star on {1,2,3,4} centered at 2, edges (1,2),(2,3),(4,2).
    static Graph star();

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

private:
    int vertex_count_;
    std::vector<Edge> edges_;
};

enum class PhaseConvention {
    literal,      // |0><0|_j (x) sigma_z + |1><1|_j (x) I
    standard_cz,  // |0><0|_j (x) I + |1><1|_j (x) sigma_z
};

/// S^(jk) = |0><0|_j (x) sigma_z^(k) + |1><1|_j (x) I^(k). Note the -1 sits on
/// |0>_j|1>_k, which is sigma_z^(k) CZ, not the textbook CZ.
QOperator controlled_phase(int j, int k);

/// The same operator assembled from the textbook CZ and a local sigma_z on k.
QOperator controlled_phase_from_cz(int j, int k);

/// Product of controlled-phase gates over the edges, on vertex_count qubits.
QOperator build_entangler(const Graph& graph, PhaseConvention convention = PhaseConvention::literal);

/// Applies the entangler to the product of one single-qubit input per vertex.
StateVector prepare_graph_state(std::span<const StateVector> inputs, const Graph& graph = Graph::star(),
                                PhaseConvention convention = PhaseConvention::literal);

/// (|+>|0>|->|+> + |->|1>|+>|->)/sqrt(2), written out directly.
StateVector star_graph_state();

/// Generators S X_j S^dagger of the graph state stabilizer, one per vertex.
std::vector<QOperator> graph_stabilizers(const Graph& graph,
                                         PhaseConvention convention = PhaseConvention::literal);

}  // namespace owqc::mbqc
