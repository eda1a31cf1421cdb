#include "vw/kernels.hpp"

#include <omp.h>

namespace vw::kernels {

std::uint64_t checked_block_size(int rank, long r, std::uint64_t budget)
{
    std::uint64_t size = 1;
    for (int i = 0; i < rank; ++i) {
        if (size > budget / static_cast<std::uint64_t>(r))
            throw BudgetExceeded("enumerating " + std::to_string(r) + "^" + std::to_string(rank) +
                                 " vectors exceeds the budget of " + std::to_string(budget));
        size *= static_cast<std::uint64_t>(r);
    }
    return size;
}

std::vector<std::uint64_t> tally_serial(const Gram& gram, std::span<const long> c, long r)
{
    const std::size_t n = gram.size();
    const long two_r = 2 * r;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(r * two_r), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= static_cast<std::uint64_t>(r);

    std::vector<long> w(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t a = 0; a < n; ++a) {
            w[a] = static_cast<long>(rest % static_cast<std::uint64_t>(r));
            rest /= static_cast<std::uint64_t>(r);
        }
        long square = 0, pairing = 0;
        for (std::size_t a = 0; a < n; ++a) {
            pairing += c[a] * w[a];
            for (std::size_t b = 0; b < n; ++b)
                square += gram[a][b] * w[a] * w[b];
        }
        long m = mod_floor(pairing, r);
        long k = mod_floor(square, two_r);
        ++counts[static_cast<std::size_t>(m * two_r + k)];
    }
    return counts;
}

std::vector<std::uint64_t> tally_parallel(const Gram& gram, std::span<const long> c, long r)
{
    const std::size_t n = gram.size();
    const long two_r = 2 * r;
    const std::size_t bins = static_cast<std::size_t>(r * two_r);
    const std::size_t last = n - 1;
    std::uint64_t prefixes = 1;
    for (std::size_t i = 0; i < last; ++i)
        prefixes *= static_cast<std::uint64_t>(r);

    const long g_last = gram[last][last];
    const long c_last = c[last];
    const int threads = omp_get_max_threads();
    std::vector<std::vector<std::uint64_t>> local(static_cast<std::size_t>(threads),
                                                  std::vector<std::uint64_t>(bins, 0));

#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t>& hist = local[static_cast<std::size_t>(omp_get_thread_num())];
        std::vector<long> w(n, 0);
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(prefixes); ++idx) {
            std::uint64_t rest = static_cast<std::uint64_t>(idx);
            for (std::size_t a = 0; a < last; ++a) {
                w[a] = static_cast<long>(rest % static_cast<std::uint64_t>(r));
                rest /= static_cast<std::uint64_t>(r);
            }
            long square = 0, pairing = 0, cross = 0;
            for (std::size_t a = 0; a < last; ++a) {
                if (w[a] == 0)
                    continue;
                pairing += c[a] * w[a];
                cross += gram[last][a] * w[a];
                for (std::size_t b = 0; b < last; ++b)
                    square += gram[a][b] * w[a] * w[b];
            }
            // (w + t e_last)^2 = w^2 + 2 t (G w)_last + t^2 G_last,last
            for (long t = 0; t < r; ++t) {
                long m = mod_floor(pairing + t * c_last, r);
                long k = mod_floor(square + 2 * t * cross + t * t * g_last, two_r);
                ++hist[static_cast<std::size_t>(m * two_r + k)];
            }
        }
    }

    std::vector<std::uint64_t> counts(bins, 0);
    for (const auto& hist : local)
        for (std::size_t i = 0; i < bins; ++i)
            counts[i] += hist[i];
    return counts;
}

} // namespace vw::kernels
