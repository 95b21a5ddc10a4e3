#include "coarsekit/smith.hpp"

#include "coarsekit/errors.hpp"

namespace coarsekit {

namespace {

// Diagonalize M in place by unimodular row and column operations; row
// operations are mirrored on *aug when present, so membership questions
// survive the reduction. Returns the number of nonzero diagonal entries.
int snf_reduce(IntMatrix& M, std::vector<Int>* aug) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(M[0].size());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != cols)
            fail(ErrorCode::internal, "smith_normal_form: ragged matrix");

    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        std::swap(M[static_cast<size_t>(a)], M[static_cast<size_t>(b)]);
        if (aug) std::swap((*aug)[static_cast<size_t>(a)], (*aug)[static_cast<size_t>(b)]);
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i)
            std::swap(M[static_cast<size_t>(i)][static_cast<size_t>(a)],
                      M[static_cast<size_t>(i)][static_cast<size_t>(b)]);
    };
    auto add_row = [&](int dst, int src, const Int& q) {
        // row_dst += q * row_src
        for (int j = 0; j < cols; ++j)
            M[static_cast<size_t>(dst)][static_cast<size_t>(j)] +=
                q * M[static_cast<size_t>(src)][static_cast<size_t>(j)];
        if (aug) (*aug)[static_cast<size_t>(dst)] += q * (*aug)[static_cast<size_t>(src)];
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i)
            M[static_cast<size_t>(i)][static_cast<size_t>(dst)] +=
                q * M[static_cast<size_t>(i)][static_cast<size_t>(src)];
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j)
            M[static_cast<size_t>(r)][static_cast<size_t>(j)] *= -1;
        if (aug) (*aug)[static_cast<size_t>(r)] *= -1;
    };

    int t = 0;
    while (t < rows && t < cols) {
        // Smallest-magnitude nonzero pivot in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& v = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v == 0) continue;
                if (pi < 0 || abs(v) < abs(M[static_cast<size_t>(pi)][static_cast<size_t>(pj)])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        if (M[static_cast<size_t>(t)][static_cast<size_t>(t)] < 0) negate_row(t);

        const Int pivot = M[static_cast<size_t>(t)][static_cast<size_t>(t)];
        bool restart = false;
        for (int i = t + 1; i < rows && !restart; ++i) {
            const Int& v = M[static_cast<size_t>(i)][static_cast<size_t>(t)];
            if (v == 0) continue;
            add_row(i, t, -(v / pivot));
            if (M[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) restart = true;
        }
        if (restart) continue; // a remainder smaller than the pivot appeared
        for (int j = t + 1; j < cols && !restart; ++j) {
            const Int& v = M[static_cast<size_t>(t)][static_cast<size_t>(j)];
            if (v == 0) continue;
            add_col(j, t, -(v / pivot));
            if (M[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) restart = true;
        }
        if (restart) continue;

        // Enforce the divisibility chain: fold a non-multiple into row t.
        bool fixed = false;
        for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols && !fixed; ++j)
                if (M[static_cast<size_t>(i)][static_cast<size_t>(j)] % pivot != 0) {
                    add_row(t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;
        ++t;
    }
    return t;
}

} // namespace

SmithResult smith_normal_form(IntMatrix M) {
    int rank = snf_reduce(M, nullptr);
    SmithResult out;
    out.rank = rank;
    out.divisors.reserve(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i)
        out.divisors.push_back(M[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    return out;
}

bool in_column_image(const IntMatrix& M, const std::vector<Int>& g) {
    if (M.size() != g.size())
        fail(ErrorCode::internal, "in_column_image: dimension mismatch");
    IntMatrix A = M;
    std::vector<Int> b = g;
    int rank = snf_reduce(A, &b);
    const int rows = static_cast<int>(A.size());
    for (int i = 0; i < rank; ++i)
        if (b[static_cast<size_t>(i)] % A[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
            return false;
    for (int i = rank; i < rows; ++i)
        if (b[static_cast<size_t>(i)] != 0) return false;
    return true;
}

} // namespace coarsekit
