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

// Exact rational linear algebra for SAP verification. A symmetric A in S(G) has the
// Strong Arnold Property iff the SAP matrix Psi has full column rank: Psi has one row per
// ordered pair (i,k) and one column per non-edge e, with Psi[(i,k), e] = a_{i,other(e,k)}
// when k is an endpoint of e and 0 otherwise.

#include "sapzf/graph.hpp"
#include "sapzf/limits.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sapzf {

/// Dense matrix of exact rationals; entries are kept canonical (lowest terms).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    /// Builds from integer rows; all rows must have equal length.
    static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const mpq_class& operator()(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, const mpq_class& value);
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    std::vector<mpq_class> row(int r) const;

    bool operator==(const RationalMatrix& o) const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Writes "n" then one line per row of "p/q" or integer entries.
std::string to_matrix_text(const RationalMatrix& a);
/// Reads the format of to_matrix_text. Throws ParseError (line number) on malformed
/// input and DomainError on an asymmetric matrix.
RationalMatrix read_matrix(std::istream& in);
RationalMatrix parse_matrix(const std::string& text);

/// Throws PatternError unless A is n x n, symmetric, and a_{ij} != 0 exactly on edges (i != j).
void check_pattern(const Graph& g, const RationalMatrix& a);

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
int rank(const RationalMatrix& m);
inline int nullity(const RationalMatrix& m) { return m.cols() - rank(m); }
/// Exact determinant of a square matrix; throws DomainError otherwise.
mpq_class determinant(const RationalMatrix& m);

struct SapMatrix {
    Graph host;
    std::vector<NonEdge> nonedge_order;
    RationalMatrix psi;

    /// Row of (i,k): (i,k) < (j,h) iff k < h, or k == h and i < j.
    int row_index(Vertex i, Vertex k) const { return k * host.order() + i; }
};

/// Psi for A in S(G). `order` must list every non-edge exactly once; empty means lexicographic.
SapMatrix build_sap_matrix(const Graph& g, const RationalMatrix& a, std::span<const NonEdge> order = {});

/// Nonzero entries as "row_i row_k nonedge_j nonedge_h value" lines, 1-based labels.
std::string psi_triples(const SapMatrix& s);

bool has_sap(const Graph& g, const RationalMatrix& a);

enum class PatternFamily { S, S_ell, S_plus };

std::string_view family_name(PatternFamily f);
/// Accepts "S", "S_ell"/"Sl"/"ell", "S_plus"/"S+"/"plus".
std::optional<PatternFamily> parse_family(std::string_view text);

/// Seeded sample: edge entries are nonzero integers in [-10,10], the diagonal lies in
/// [-10,10]. S_ell keeps the diagonal nonzero exactly at non-isolated vertices. S_plus
/// adds c*I with c the largest absolute row sum, making A diagonally dominant.
RationalMatrix sample_matrix(const Graph& g, PatternFamily family, std::uint64_t seed);

/// True when `a` matches the zero pattern of G and the family's extra conditions. PSD is
/// certified through a rational LDL^T factorization.
bool in_family(const Graph& g, const RationalMatrix& a, PatternFamily family);
bool is_positive_semidefinite(const RationalMatrix& a);

/// Cyclic two-diagonal matrix with a_t at (t,t) and (t,t+1 mod n).
RationalMatrix odd_cycle_matrix(std::span<const mpq_class> a);
/// Determinant of odd_cycle_matrix(a); DomainError unless n is odd, n >= 3 and all a_t != 0.
mpq_class odd_cycle_det(std::span<const mpq_class> a);

struct PerturbationWitness {
    mpq_class x;
    RationalMatrix perturbed;
    int doublings = 0;
};

/// Smallest x in 1, 2, 4, ... with has_sap(G, A + x D_B); x = 0 when B is empty and A
/// already has the SAP. Throws CapError after `limits.perturbation_doublings` tries.
PerturbationWitness perturbation_witness(const Graph& g, const RationalMatrix& a, VertexSet b,
                                         const Limits& limits = default_limits);

} // namespace sapzf
