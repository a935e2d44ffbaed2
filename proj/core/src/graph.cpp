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

#include "owqc/mbqc/graph.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace owqc::mbqc {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 1 || vertex_count_ > kMaxQubits) {
        throw std::invalid_argument("Graph: vertex count outside [1, 10]");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.j < 1 || e.j > vertex_count_ || e.k < 1 || e.k > vertex_count_) {
            throw std::invalid_argument("Graph: edge (" + std::to_string(e.j) + "," + std::to_string(e.k) +
                                        ") has an endpoint outside the vertex set");
        }
        if (e.j == e.k) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(e.j));
        for (std::size_t p = 0; p < i; ++p) {
            const Edge& f = edges_[p];
            if ((f.j == e.j && f.k == e.k) || (f.j == e.k && f.k == e.j)) {
                throw std::invalid_argument("Graph: duplicate edge (" + std::to_string(e.j) + "," +
                                            std::to_string(e.k) + ")");
            }
        }
    }
}

Graph Graph::star() { return Graph(4, {{1, 2}, {2, 3}, {4, 2}}); }

QOperator controlled_phase(int j, int k) {
    if (j == k) throw std::invalid_argument("controlled_phase: j and k must differ");
    Matrix m = Matrix::Identity(4, 4);
    m(1, 1) = -1.0;  // |0>_j |1>_k
    return QOperator::unitary(std::move(m), {j, k});
}

QOperator controlled_phase_from_cz(int j, int k) {
    if (j == k) throw std::invalid_argument("controlled_phase_from_cz: j and k must differ");
    const std::array<QOperator, 2> steps{gates::cz(1, 2), gates::z(2)};
    return QOperator::unitary(compose(steps, 2).matrix(), {j, k});
}

QOperator build_entangler(const Graph& graph, PhaseConvention convention) {
    std::vector<QOperator> steps;
    steps.reserve(graph.edges().size());
    // S = S^(e1) S^(e2) ... : the last edge acts first.
    for (auto it = graph.edges().rbegin(); it != graph.edges().rend(); ++it) {
        steps.push_back(convention == PhaseConvention::literal ? controlled_phase(it->j, it->k)
                                                               : gates::cz(it->j, it->k));
    }
    return compose(steps, graph.vertex_count());
}

StateVector prepare_graph_state(std::span<const StateVector> inputs, const Graph& graph,
                                PhaseConvention convention) {
    if (static_cast<int>(inputs.size()) != graph.vertex_count()) {
        throw std::invalid_argument("prepare_graph_state: need one input per vertex");
    }
    for (const StateVector& in : inputs) {
        if (in.num_qubits() != 1) throw std::invalid_argument("prepare_graph_state: inputs must be single-qubit");
        if (std::abs(in.amplitudes().norm() - 1.0) > kExactTol) {
            throw std::invalid_argument("prepare_graph_state: input is not normalized");
        }
    }
    return apply_unitary(StateVector::product(inputs), build_entangler(graph, convention));
}

StateVector star_graph_state() {
    const StateVector p = StateVector::plus();
    const StateVector m = StateVector::minus();
    const StateVector z0 = StateVector::zero();
    const StateVector z1 = StateVector::one();
    const std::array<StateVector, 4> first{p, z0, m, p};
    const std::array<StateVector, 4> second{m, z1, p, m};
    const Vector sum = StateVector::product(first).amplitudes() + StateVector::product(second).amplitudes();
    return StateVector::normalized(4, sum);
}

std::vector<QOperator> graph_stabilizers(const Graph& graph, PhaseConvention convention) {
    const int n = graph.vertex_count();
    const QOperator s = build_entangler(graph, convention);
    std::vector<QOperator> out;
    for (int v = 1; v <= n; ++v) {
        const Matrix xv = embed_operator(gates::x(v), n).matrix();
        out.emplace_back(s.matrix() * xv * s.matrix().adjoint(), QOperator::identity(n).qubits(),
                         QOperator::Check::unitary);
    }
    return out;
}

}  // namespace owqc::mbqc
