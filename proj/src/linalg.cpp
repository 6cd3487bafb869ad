#include "infhecke/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace infhecke::linalg {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

struct Echelon {
    IntMatrix m;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
};

IntMatrix clearDenominators(const RatMatrix& rows, std::size_t cols) {
    IntMatrix out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        assert(row.size() == cols);
        mpz_class l(1);
        for (const auto& v : row)
            if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<mpz_class> irow(cols);
        for (std::size_t j = 0; j < cols; ++j)
            irow[j] = row[j].get_num() * (l / row[j].get_den());
        out.push_back(std::move(irow));
    }
    return out;
}

// One-step Bareiss: entries stay determinants of submatrices of the input,
// so every division is exact.
Echelon bareiss(IntMatrix a, std::size_t cols) {
    Echelon ech;
    const std::size_t rows = a.size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pr = r;
        while (pr < rows && a[pr][col] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(a[r], a[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class num = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ech.pivots.emplace_back(r, col);
        ++r;
    }
    ech.m = std::move(a);
    return ech;
}

}  // namespace

std::vector<std::vector<Rational>> rowReduce(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    std::vector<std::size_t> pivotCols;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t pr = r;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        Rational inv = rows[r][col];
        for (auto& v : rows[r]) v /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rational factor = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        pivotCols.push_back(col);
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<std::vector<Rational>> kernelBasis(const RatMatrix& rows, std::size_t cols) {
    Echelon ech = bareiss(clearDenominators(rows, cols), cols);

    std::vector<bool> isPivot(cols, false);
    for (auto [pr, pc] : ech.pivots) isPivot[pc] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (isPivot[fc]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fc] = 1;
        for (auto it = ech.pivots.rbegin(); it != ech.pivots.rend(); ++it) {
            auto [pr, pc] = *it;
            Rational sum(0);
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (v[j] != 0) sum += Rational(ech.m[pr][j]) * v[j];
            v[pc] = -sum / Rational(ech.m[pr][pc]);
        }
        basis.push_back(std::move(v));
    }
    return rowReduce(std::move(basis));
}

std::size_t rank(const RatMatrix& rows, std::size_t cols) {
    return bareiss(clearDenominators(rows, cols), cols).pivots.size();
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
    assert(a.size() == b.size());
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<std::vector<Rational>> aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    aug = rowReduce(std::move(aug));

    std::vector<Rational> x(cols, Rational(0));
    for (const auto& row : aug) {
        std::size_t pc = 0;
        while (pc < cols + 1 && row[pc] == 0) ++pc;
        if (pc == cols) return std::nullopt;  // 0 = nonzero
        if (pc == cols + 1) continue;
        // RREF with free vars pinned to zero: pivot value = rhs.
        x[pc] = row[cols];
    }
    // Verify (free variables pinned to zero must still satisfy every row).
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != 0 && x[j] != 0) s += a[i][j] * x[j];
        if (s != b[i]) return std::nullopt;
    }
    return x;
}

}  // namespace infhecke::linalg
