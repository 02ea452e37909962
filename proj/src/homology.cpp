#include "polar/homology.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <optional>
#include <unordered_map>

namespace polar {

namespace {

// Gaussian elimination over Z with Euclidean column reduction; the rank
// over Z equals the rank over Q.  Returns nullopt if entries threaten to
// leave the 64-bit safe range.
std::optional<int> rankInt64(std::vector<std::vector<long long>> a) {
    constexpr long long kLimit = 1LL << 60;
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            size_t pivot = rows;
            for (size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 && (pivot == rows || std::llabs(a[i][c]) < std::llabs(a[pivot][c])))
                    pivot = i;
            if (pivot == rows) break;  // column clear, next column
            std::swap(a[r], a[pivot]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                long long q = a[i][c] / a[r][c];
                if (q != 0) {
                    for (size_t j = c; j < cols; ++j) {
                        __int128 v = static_cast<__int128>(a[i][j]) -
                                     static_cast<__int128>(q) * a[r][j];
                        if (v > kLimit || v < -kLimit) return std::nullopt;
                        a[i][j] = static_cast<long long>(v);
                    }
                }
                if (a[i][c] != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    return static_cast<int>(r);
}

int rankBig(const std::vector<std::vector<long long>>& input) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> a(input.size());
    for (size_t i = 0; i < input.size(); ++i)
        a[i].assign(input[i].begin(), input[i].end());

    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            cpp_int f = a[i][c], p = a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * p - a[r][j] * f;
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank_exact(const std::vector<std::vector<long long>>& matrix) {
    if (auto r = rankInt64(matrix)) return *r;
    return rankBig(matrix);
}

std::vector<int> reduced_homology(const std::vector<uint64_t>& faces) {
    if (faces.empty()) return {};

    int topDim = -1;
    for (uint64_t f : faces) topDim = std::max(topDim, std::popcount(f) - 1);

    // cells grouped by dimension; dimension of mask f is popcount(f) - 1
    std::vector<std::vector<uint64_t>> cells(static_cast<size_t>(topDim) + 2);
    for (uint64_t f : faces) cells[static_cast<size_t>(std::popcount(f))].push_back(f);
    std::vector<std::unordered_map<uint64_t, int>> index(cells.size());
    for (size_t k = 0; k < cells.size(); ++k) {
        std::sort(cells[k].begin(), cells[k].end());
        for (size_t i = 0; i < cells[k].size(); ++i) index[k][cells[k][i]] = static_cast<int>(i);
    }

    // rank of each boundary map C_k -> C_{k-1} (slot k+1), including the
    // augmentation C_0 -> C_{-1}
    std::vector<int> boundaryRank(cells.size() + 1, 0);
    for (size_t k = 1; k < cells.size(); ++k) {
        if (cells[k].empty() || cells[k - 1].empty()) continue;
        std::vector<std::vector<long long>> mat(
            cells[k].size(), std::vector<long long>(cells[k - 1].size(), 0));
        for (size_t i = 0; i < cells[k].size(); ++i) {
            uint64_t f = cells[k][i];
            int sign = 1, pos = 0;
            for (uint64_t s = f; s; s &= s - 1, ++pos) {
                uint64_t sub = f & ~(s & -s);
                mat[i][static_cast<size_t>(index[k - 1].at(sub))] = (pos % 2 == 0) ? 1 : -1;
            }
            (void)sign;
        }
        boundaryRank[k] = rank_exact(mat);
    }

    std::vector<int> h(cells.size());
    for (size_t k = 0; k < cells.size(); ++k) {
        int dimC = static_cast<int>(cells[k].size());
        int rkOut = boundaryRank[k];  // C_k -> C_{k-1}
        int rkIn = k + 1 < boundaryRank.size() ? boundaryRank[k + 1] : 0;
        h[k] = dimC - rkOut - rkIn;
    }
    return h;
}

}  // namespace polar
