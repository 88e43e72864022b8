/*
 * Copyright 2026 The sapzf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Certified value of xi(G) for graphs whose components have at most 7 vertices.
// Upper bound: xi <= floor-Z. Lower bounds, tried in order:
//   ZsapZero  Z_SAP(G) = 0, so every matrix in S(G) has the SAP and xi = M = Z
//   Tree      xi = 2 unless G is a path, then 1
//   VcBound   M - Z_vc <= xi
//   Hadwiger  xi(K_p) = p - 1 for a K_p minor
//   T3Family  xi >= 3 for a graph with a minor from the T3 family
// M = Z is only used on at most 7 vertices or on trees.

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"
#include "sapzf/minor.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sapzf {

/// M(G) = Z(G); throws GuardError unless G has at most 7 vertices or is a tree.
int m_small(const Graph& g, const Limits& limits = default_limits);

/// Six pairwise non-isomorphic graphs; a graph on <= 7 vertices has xi >= 3 iff it has one as a minor.
class T3Family {
public:
    /// Reads edge-list blocks; throws ConfigError if the file is missing or the data is
    /// not 6 pairwise non-isomorphic graphs.
    static T3Family load(const std::string& path);
    /// The data file installed with the library.
    static T3Family load_default();
    static std::string default_path();

    explicit T3Family(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
    const std::vector<Graph>& graphs() const { return graphs_; }

private:
    std::vector<Graph> graphs_;
};

struct T3Minor {
    int index = 0; ///< position within the family
    MinorModel model;
};

/// First family member that is a minor of G.
std::optional<T3Minor> t3_minor(const Graph& g, const T3Family& family, const Limits& limits = default_limits);

enum class XiCase { ZsapZero, Tree, VcBound, Hadwiger, T3Family, ComponentMax, Unresolved };

std::string_view xi_case_name(XiCase c);

struct XiCertificate {
    std::string graph6; ///< of the input graph as given, not canonicalized
    XiCase kase = XiCase::Unresolved;
    int value = -1;        ///< -1 when unresolved
    int lower = 0;         ///< best certified lower bound
    int upper = 0;         ///< floor-Z
    VertexSet upper_set;   ///< floor-Z forcing set of size `upper`
    int m = 0;             ///< M(G) = Z(G)
    VertexSet z_set;       ///< Z forcing set of size m
    std::optional<int> zvc;
    VertexSet zvc_set;
    std::optional<MinorModel> clique_model; ///< K_p model, Hadwiger case
    std::optional<T3Minor> t3;
    std::vector<XiCertificate> components; ///< ComponentMax only

    bool resolved() const { return kase != XiCase::Unresolved; }
};

/// Runs the case list; an unresolved graph yields kase == Unresolved rather than an error.
/// Throws GuardError when a component has more than 7 vertices.
XiCertificate certify_xi(const Graph& g, const T3Family& family, const Limits& limits = default_limits);

/// certify_xi, throwing UnresolvedError when no case applies.
XiCertificate xi(const Graph& g, const T3Family& family, const Limits& limits = default_limits);

/// Record {graph6, xi, case, lower_witness, upper_witness} as a JSON object.
std::string certificate_json(const XiCertificate& c);

/// M(G) through cut-vertex reduction: for a cut vertex v with branches G_1..G_h (each
/// a component of G - v together with v),
///   mr(G) = sum mr(G_i - v) + min(2, sum (mr(G_i) - mr(G_i - v))),
/// with M = Z on pieces of at most 7 vertices. nullopt if some piece on more than 7
/// vertices has no cut vertex.
std::optional<int> max_nullity_by_cut_vertices(const Graph& g, const Limits& limits = default_limits);

struct T3Derivation {
    std::vector<Graph> members;
    /// Candidates on more than 7 vertices (floor-Z >= 3, avoiding earlier members) for
    /// which neither xi >= 3 nor M < 3 could be certified. Reported, never added.
    std::vector<Graph> uncertified;
};

/// Recomputes the family. Orders <= 7: minor-minimal graphs whose certified lower bound
/// (M if Z_SAP = 0, M - Z_vc, eta - 1) is >= 3. Orders 8..max_n: connected graphs avoiding
/// the members found so far with floor-Z >= 3, certified the same way with M from
/// max_nullity_by_cut_vertices, minimal within their order.
T3Derivation derive_t3_family(int max_n = 9, const Limits& limits = default_limits);

} // namespace sapzf
