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
#include "sapzf/exact_linalg.hpp"

#include "sapzf/error.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <random>
#include <set>
#include <sstream>

namespace sapzf {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
{
    if (rows < 0 || cols < 0) throw DomainError("RationalMatrix: negative dimension");
}

RationalMatrix RationalMatrix::identity(int n)
{
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw DomainError("from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void RationalMatrix::set(int r, int c, const mpq_class& value)
{
    auto& slot = data_[index(r, c)];
    slot = value;
    slot.canonicalize();
}

bool RationalMatrix::is_symmetric() const
{
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<mpq_class> RationalMatrix::row(int r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
            data_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + static_cast<std::size_t>(cols_))};
}

bool RationalMatrix::operator==(const RationalMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string to_matrix_text(const RationalMatrix& a)
{
    std::ostringstream out;
    out << a.rows() << '\n';
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

namespace {

mpq_class parse_rational(const std::string& token, std::size_t line)
{
    const auto slash = token.find('/');
    auto integer = [&](const std::string& s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (start == s.size()) throw ParseError("matrix: malformed entry '" + token + "'", line);
        for (std::size_t t = start; t < s.size(); ++t)
            if (!std::isdigit(static_cast<unsigned char>(s[t])))
                throw ParseError("matrix: malformed entry '" + token + "'", line);
        return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
    };
    if (slash == std::string::npos) return mpq_class(integer(token));
    mpz_class num = integer(token.substr(0, slash));
    const std::string den_text = token.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("matrix: signed denominator in '" + token + "'", line);
    mpz_class den = integer(den_text);
    if (den == 0) throw ParseError("matrix: zero denominator in '" + token + "'", line);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

RationalMatrix read_matrix(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError("matrix: missing dimension line", line_no);
    std::istringstream head(line);
    long n = -1;
    std::string extra;
    if (!(head >> n) || n < 0 || (head >> extra)) throw ParseError("matrix: bad dimension line", line_no);
    RationalMatrix a(static_cast<int>(n), static_cast<int>(n));
    for (int i = 0; i < n; ++i) {
        if (!next_line()) throw ParseError("matrix: expected " + std::to_string(n) + " rows", line_no);
        std::istringstream row(line);
        std::string token;
        int j = 0;
        while (row >> token) {
            if (j >= n) throw ParseError("matrix: too many entries in row", line_no);
            a.set(i, j++, parse_rational(token, line_no));
        }
        if (j != n) throw ParseError("matrix: too few entries in row", line_no);
    }
    if (next_line()) throw ParseError("matrix: trailing content", line_no);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i))
                throw DomainError("matrix: not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return a;
}

RationalMatrix parse_matrix(const std::string& text)
{
    std::istringstream in(text);
    return read_matrix(in);
}

void check_pattern(const Graph& g, const RationalMatrix& a)
{
    const int n = g.order();
    if (a.rows() != n || a.cols() != n)
        throw PatternError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                               " but the graph has " + std::to_string(n) + " vertices",
                           a.rows() - 1, a.cols() - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (a(i, j) != a(j, i)) throw PatternError("matrix is not symmetric", i, j);
            const bool zero = a(i, j) == 0;
            if (g.has_edge(i, j) && zero) throw PatternError("zero entry on an edge", i, j);
            if (!g.has_edge(i, j) && !zero) throw PatternError("nonzero entry on a non-edge", i, j);
        }
}

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. `scale[r]` receives the factor.
IntMatrix to_integer_rows(const RationalMatrix& m, std::vector<mpz_class>* scale)
{
    IntMatrix out(static_cast<std::size_t>(m.rows()), std::vector<mpz_class>(static_cast<std::size_t>(m.cols())));
    if (scale) scale->assign(static_cast<std::size_t>(m.rows()), 1);
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (int c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        if (scale) (*scale)[r] = l;
    }
    return out;
}

struct BareissResult {
    int rank = 0;
    bool swapped_odd = false;
    mpz_class last_pivot = 1;
};

// In-place fraction-free elimination; pivots on the first nonzero entry of each column.
BareissResult bareiss(IntMatrix& m, int cols)
{
    BareissResult res;
    const int rows = static_cast<int>(m.size());
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            res.swapped_odd = !res.swapped_odd;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                m[i][j] = m[i][j] * m[r][c] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    res.rank = r;
    res.last_pivot = prev;
    return res;
}

} // namespace

int rank(const RationalMatrix& m)
{
    auto ints = to_integer_rows(m, nullptr);
    return bareiss(ints, m.cols()).rank;
}

mpq_class determinant(const RationalMatrix& m)
{
    if (!m.is_square()) throw DomainError("determinant: matrix is not square");
    const int n = m.rows();
    if (n == 0) return 1;
    std::vector<mpz_class> scale;
    auto ints = to_integer_rows(m, &scale);
    auto res = bareiss(ints, n);
    if (res.rank < n) return 0;
    // the last Bareiss pivot is the determinant of the row-permuted integer matrix
    mpq_class det(res.last_pivot);
    if (res.swapped_odd) det = -det;
    mpz_class denom = 1;
    for (const auto& s : scale) denom *= s;
    det /= denom;
    det.canonicalize();
    return det;
}

SapMatrix build_sap_matrix(const Graph& g, const RationalMatrix& a, std::span<const NonEdge> order)
{
    check_pattern(g, a);
    const int n = g.order();
    SapMatrix s{g, {}, {}};
    const auto all = g.non_edges();
    if (order.empty()) {
        s.nonedge_order = all;
    } else {
        s.nonedge_order.assign(order.begin(), order.end());
        std::set<NonEdge> given(order.begin(), order.end());
        if (given.size() != order.size() || given != std::set<NonEdge>(all.begin(), all.end()))
            throw DomainError("build_sap_matrix: order is not a permutation of the non-edges");
    }
    const int m = static_cast<int>(s.nonedge_order.size());
    s.psi = RationalMatrix(n * n, m);
    for (int col = 0; col < m; ++col) {
        const NonEdge e = s.nonedge_order[col];
        for (Vertex k : {e.a, e.b}) {
            const Vertex other = e.other(k);
            for (Vertex i = 0; i < n; ++i)
                if (a(i, other) != 0) s.psi.set(s.row_index(i, k), col, a(i, other));
        }
    }
    return s;
}

std::string psi_triples(const SapMatrix& s)
{
    std::ostringstream out;
    const int n = s.host.order();
    for (Vertex k = 0; k < n; ++k)
        for (Vertex i = 0; i < n; ++i)
            for (int col = 0; col < s.psi.cols(); ++col) {
                const auto& v = s.psi(s.row_index(i, k), col);
                if (v == 0) continue;
                const NonEdge e = s.nonedge_order[col];
                out << i + 1 << ' ' << k + 1 << ' ' << e.a + 1 << ' ' << e.b + 1 << ' ' << v.get_str() << '\n';
            }
    return out.str();
}

bool has_sap(const Graph& g, const RationalMatrix& a)
{
    const auto s = build_sap_matrix(g, a);
    return rank(s.psi) == s.psi.cols();
}

std::string_view family_name(PatternFamily f)
{
    switch (f) {
    case PatternFamily::S: return "S";
    case PatternFamily::S_ell: return "S_ell";
    case PatternFamily::S_plus: return "S_plus";
    }
    return "?";
}

std::optional<PatternFamily> parse_family(std::string_view text)
{
    std::string t;
    for (char c : text) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "s") return PatternFamily::S;
    if (t == "s_ell" || t == "sl" || t == "s_l" || t == "ell") return PatternFamily::S_ell;
    if (t == "s_plus" || t == "s+" || t == "splus" || t == "plus") return PatternFamily::S_plus;
    return std::nullopt;
}

RationalMatrix sample_matrix(const Graph& g, PatternFamily family, std::uint64_t seed)
{
    const int n = g.order();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> any(-10, 10);
    std::uniform_int_distribution<int> magnitude(1, 10);
    std::bernoulli_distribution negative(0.5);
    auto nonzero = [&] { return negative(rng) ? -magnitude(rng) : magnitude(rng); };

    RationalMatrix a(n, n);
    for (auto [u, v] : g.edges()) {
        const int x = nonzero();
        a.set(u, v, x);
        a.set(v, u, x);
    }
    const VertexSet isolated = g.isolated_vertices();
    for (Vertex i = 0; i < n; ++i) {
        if (family == PatternFamily::S_ell)
            a.set(i, i, isolated.contains(i) ? 0 : nonzero());
        else
            a.set(i, i, any(rng));
    }
    if (family == PatternFamily::S_plus) {
        mpq_class c = 0;
        for (int i = 0; i < n; ++i) {
            mpq_class row_sum = 0;
            for (int j = 0; j < n; ++j) row_sum += abs(a(i, j));
            c = std::max(c, row_sum);
        }
        for (int i = 0; i < n; ++i) a.set(i, i, a(i, i) + c);
    }
    return a;
}

bool is_positive_semidefinite(const RationalMatrix& a)
{
    if (!a.is_symmetric()) return false;
    const int n = a.rows();
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[i] = a.row(i);
    for (int k = 0; k < n; ++k) {
        if (m[k][k] < 0) return false;
        if (m[k][k] == 0) {
            // a zero pivot of a PSD matrix has a zero row
            for (int j = k + 1; j < n; ++j)
                if (m[k][j] != 0) return false;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const mpq_class f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return true;
}

bool in_family(const Graph& g, const RationalMatrix& a, PatternFamily family)
{
    try {
        check_pattern(g, a);
    } catch (const PatternError&) {
        return false;
    }
    if (family == PatternFamily::S_ell) {
        const VertexSet isolated = g.isolated_vertices();
        for (Vertex i = 0; i < g.order(); ++i)
            if ((a(i, i) == 0) != isolated.contains(i)) return false;
    }
    if (family == PatternFamily::S_plus) return is_positive_semidefinite(a);
    return true;
}

RationalMatrix odd_cycle_matrix(std::span<const mpq_class> a)
{
    const int n = static_cast<int>(a.size());
    RationalMatrix m(n, n);
    // column t holds a_{t+1} (0-based a[t+1]) on the diagonal and a[t] just below it, cyclically
    for (int t = 0; t < n; ++t) {
        m.set(t, t, a[(t + 1) % n]);
        m.set((t + 1) % n, t, m((t + 1) % n, t) + a[t]);
    }
    return m;
}

mpq_class odd_cycle_det(std::span<const mpq_class> a)
{
    const auto n = a.size();
    if (n < 3 || n % 2 == 0) throw DomainError("odd_cycle_det: n must be odd and at least 3");
    for (const auto& x : a)
        if (x == 0) throw DomainError("odd_cycle_det: entries must be nonzero");
    return determinant(odd_cycle_matrix(a));
}

PerturbationWitness perturbation_witness(const Graph& g, const RationalMatrix& a, VertexSet b, const Limits& limits)
{
    check_pattern(g, a);
    if (b.empty()) {
        if (!has_sap(g, a)) throw DomainError("perturbation_witness: B is empty and A lacks the SAP");
        return {0, a, 0};
    }
    mpq_class x = 1;
    for (int d = 0; d < limits.perturbation_doublings; ++d, x *= 2) {
        RationalMatrix p = a;
        for (auto v : b)
            if (v < g.order()) p.set(v, v, a(v, v) + x);
        if (has_sap(g, p)) return {x, std::move(p), d};
    }
    throw CapError("perturbation_witness doublings", limits.perturbation_doublings, limits.perturbation_doublings);
}

} // namespace sapzf
