#pragma once

// Exact linear algebra over the rationals. GMP's mpq_class keeps every value
// in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ilink/errors.hpp"

namespace ilink {

using Rat = mpq_class;
using Point = std::vector<Rat>;

/// "num/den", always with an explicit denominator.
inline std::string format_rat(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" (q != 0) or a bare integer "p"; the result is reduced.
inline Rat parse_rat(std::string_view text) {
    auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw InvalidArgument("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    Rat r(mpz_class(n, 10), d);
    r.canonicalize();
    return r;
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class v = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Rank of the homogenized matrix [1 | p] over the given points; equals
/// (affine dimension of their span) + 1.
inline std::size_t affine_rank(std::span<const Point> points) {
    if (points.empty()) throw InvalidArgument("affine_rank: empty point list");
    const std::size_t d = points.front().size();
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != d) throw InvalidArgument("affine_rank: mixed dimensions");
        mpz_class scale = 1;
        for (const auto& x : p) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> row;
        row.reserve(d + 1);
        row.push_back(scale);
        for (const auto& x : p) row.push_back(x.get_num() * (scale / x.get_den()));
        rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
}

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
    SolveStatus status = SolveStatus::Inconsistent;
    std::vector<Rat> x;
};

/// Solve A x = b exactly by Gauss-Jordan elimination. A is square or tall.
inline LinearSolution solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && sgn(a[p][col]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        const Rat inv = 1 / a[rank][col];
        for (std::size_t c = col; c < cols; ++c) a[rank][c] *= inv;
        b[rank] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || sgn(a[r][col]) == 0) continue;
            const Rat f = a[r][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (sgn(b[r]) != 0) return {SolveStatus::Inconsistent, {}};
    if (rank < cols) return {SolveStatus::Underdetermined, {}};
    LinearSolution out{SolveStatus::Unique, std::vector<Rat>(cols)};
    for (std::size_t r = 0; r < rank; ++r) out.x[pivot_col[r]] = b[r];
    return out;
}

}  // namespace ilink
