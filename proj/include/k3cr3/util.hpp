#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace k3cr3 {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Smith normal form invariants (non-negative, each dividing the next) of an
// integer matrix. Row/column reduction with smallest-pivot selection; the
// divisibility pass re-runs when a trailing entry breaks the chain.
template <typename T>
std::vector<T> smith_invariants(std::vector<std::vector<T>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<T> out;
    std::size_t r = 0;
    while (r < m && r < n) {
        std::size_t pi = r, pj = r;
        bool found = false;
        for (std::size_t i = r; i < m; ++i)
            for (std::size_t j = r; j < n; ++j)
                if (a[i][j] != 0 &&
                    (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i; pj = j; found = true;
                }
        if (!found) break;
        std::swap(a[r], a[pi]);
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][r], a[i][pj]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][r] == 0) continue;
                T q = a[i][r] / a[r][r];
                for (std::size_t k = 0; k < n; ++k) a[i][k] -= q * a[r][k];
                if (a[i][r] != 0) { std::swap(a[r], a[i]); dirty = true; }
            }
            for (std::size_t j = r + 1; j < n; ++j) {
                if (a[r][j] == 0) continue;
                T q = a[r][j] / a[r][r];
                for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][r];
                if (a[r][j] != 0) {
                    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][r], a[i][j]);
                    dirty = true;
                }
            }
        }
        // a[r][r] must divide the rest of the block
        bool restart = false;
        for (std::size_t i = r + 1; i < m && !restart; ++i)
            for (std::size_t j = r + 1; j < n && !restart; ++j)
                if (a[i][j] % a[r][r] != 0) {
                    for (std::size_t k = 0; k < n; ++k) a[r][k] += a[i][k];
                    restart = true;
                }
        if (restart) continue;
        out.push_back(abs(a[r][r]));
        ++r;
    }
    return out;
}

// Thread budget: hardware concurrency capped by the K3CR3_THREADS env var.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("K3CR3_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Runs fn(i) for i in [0, n) on up to thread_budget() threads. Callers own
// determinism: results must be written to pre-sized slots indexed by i.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_budget();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace k3cr3
