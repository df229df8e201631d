/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <bit>
#include <cstring>
#include <thread>
#include <tuple>

#include "sigmacode/codes.hpp"
#include "sigmacode/error.hpp"

namespace sigmacode {

namespace {

constexpr std::uint64_t kBlock = 128;
constexpr std::uint64_t kLow7 = 0x7F7F7F7F7F7F7F7FULL;
constexpr std::uint64_t kHigh = 0x8080808080808080ULL;

// Number of nonzero bytes in x.
inline unsigned nonzero_bytes(std::uint64_t x) noexcept {
    return static_cast<unsigned>(std::popcount((((x & kLow7) + kLow7) | x) & kHigh));
}

struct Best {
    std::uint32_t d;
    std::uint64_t i;
    std::uint64_t j;
    std::uint64_t pairs = 0;
    bool better(std::uint32_t dd, std::uint64_t ii, std::uint64_t jj) const noexcept {
        return std::tie(dd, ii, jj) < std::tie(d, i, j);
    }
};

}  // namespace

DistanceResult min_distance(const SigmaCode& code, const DistanceOptions& opts) {
    const std::uint64_t m = code.size();
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "minimum distance needs at least two codewords");
    const std::size_t lanes = (code.n + 7) / 8;
    std::vector<std::uint64_t> packed(m * lanes, 0);
    for (std::uint64_t r = 0; r < m; ++r) std::memcpy(&packed[r * lanes], code.row(r).data(), code.n);

    const std::uint64_t nblocks = (m + kBlock - 1) / kBlock;
    const unsigned workers = std::max(1u, opts.workers);
    const bool early = !opts.exact_profile;
    std::vector<Best> best(workers, Best{code.n + 1, m, m});

    auto run = [&](unsigned w) {
        Best& b = best[w];
        std::uint64_t task = 0;
        for (std::uint64_t bi = 0; bi < nblocks; ++bi) {
            for (std::uint64_t bj = bi; bj < nblocks; ++bj, ++task) {
                if (task % workers != w) continue;
                const std::uint64_t iend = std::min(m, (bi + 1) * kBlock);
                const std::uint64_t jend = std::min(m, (bj + 1) * kBlock);
                for (std::uint64_t i = bi * kBlock; i < iend; ++i) {
                    const std::uint64_t* a = &packed[i * lanes];
                    for (std::uint64_t j = bi == bj ? i + 1 : bj * kBlock; j < jend; ++j) {
                        const std::uint64_t* c = &packed[j * lanes];
                        std::uint32_t d = 0;
                        for (std::size_t l = 0; l < lanes; ++l) {
                            d += nonzero_bytes(a[l] ^ c[l]);
                            if (early && d > b.d) break;
                        }
                        ++b.pairs;
                        if (d <= b.d && b.better(d, i, j)) {
                            b.d = d;
                            b.i = i;
                            b.j = j;
                        }
                    }
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    Best out = best[0];
    std::uint64_t pairs = 0;
    for (const Best& b : best) {
        pairs += b.pairs;
        if (out.better(b.d, b.i, b.j)) out = b;
    }
    return {out.d, out.i, out.j, pairs};
}

}  // namespace sigmacode
