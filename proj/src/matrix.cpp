#include "nbt/matrix.hpp"

namespace nbt {

size_t rank_mod_p(std::vector<i64> a, size_t rows, size_t cols, i64 p) {
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv * cols + col] % p == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        i64 pinv = inverse_mod(a[rank * cols + col], p);
        for (size_t j = col; j < cols; ++j) a[rank * cols + j] = (a[rank * cols + j] % p + p) * pinv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            i64 f = ((a[i * cols + col] % p) + p) % p;
            if (!f) continue;
            for (size_t j = col; j < cols; ++j)
                a[i * cols + j] = ((a[i * cols + j] - f * a[rank * cols + j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace nbt
