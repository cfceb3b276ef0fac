#include "k3cr3/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace k3cr3 {

int partition_size(const Partition& lam) {
    return std::accumulate(lam.begin(), lam.end(), 0);
}

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    std::vector<Partition> out;
    if (max_part < 0 || max_part > n) max_part = n;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int mx) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int part = std::min(mx, rem); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

namespace {

struct SkewCell { int row, col; };

// Backtracking count of LR fillings. Cells are visited in reverse reading
// order (rows top to bottom, right to left within a row) so the lattice
// condition can be maintained incrementally.
long long count_lr_tableaux(const Partition& lambda, const Partition& nu, const Partition& mu) {
    const int rows = static_cast<int>(mu.size());
    Partition lam = lambda;
    lam.resize(rows, 0);

    std::vector<SkewCell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = mu[r] - 1; c >= lam[r]; --c) cells.push_back({r, c});

    const int letters = static_cast<int>(nu.size());
    std::vector<int> remaining(nu.begin(), nu.end());
    std::vector<int> placed(letters + 2, 0);
    // grid[r][c] = letter or 0
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(mu[r], 0);

    long long count = 0;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[i];
        const int right = (c + 1 < mu[r]) ? grid[r][c + 1] : 0;
        // the cell above is inside mu whenever r > 0; it constrains v only if
        // it belongs to the skew shape (cells of lambda are unfilled)
        const bool has_above = r > 0 && c >= lam[r - 1];
        const int above = has_above ? grid[r - 1][c] : 0;
        for (int v = 1; v <= letters; ++v) {
            if (remaining[v - 1] == 0) continue;
            if (v > 1 && placed[v] + 1 > placed[v - 1]) continue;  // lattice word
            if (right != 0 && v > right) continue;                 // weak rows
            if (has_above && v <= above) continue;                 // strict cols
            grid[r][c] = v;
            --remaining[v - 1];
            ++placed[v];
            self(self, i + 1);
            grid[r][c] = 0;
            ++remaining[v - 1];
            --placed[v];
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
    if (partition_size(mu) != partition_size(lambda) + partition_size(nu)) return 0;
    if (!diagram_contains(mu, lambda) || !diagram_contains(mu, nu)) return 0;
    if (lambda.empty()) return mu == nu ? 1 : 0;
    if (nu.empty()) return mu == lambda ? 1 : 0;

    using Key = std::tuple<Partition, Partition, Partition>;
    static std::map<Key, long long> memo;
    static std::mutex memo_mutex;
    Key key{lambda, nu, mu};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long value = count_lr_tableaux(lambda, nu, mu);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), value);
    return value;
}

bool extension_exists(const AbelianGroup& sub, const AbelianGroup& quot,
                      const AbelianGroup& total) {
    std::set<long long> primes;
    for (const auto& [p, lam] : sub.prime_parts) primes.insert(p);
    for (const auto& [p, lam] : quot.prime_parts) primes.insert(p);
    for (const auto& [p, lam] : total.prime_parts) primes.insert(p);
    for (long long p : primes) {
        Partition lam, nu, mu;
        if (auto it = sub.prime_parts.find(p); it != sub.prime_parts.end()) lam = it->second;
        if (auto it = quot.prime_parts.find(p); it != quot.prime_parts.end()) nu = it->second;
        if (auto it = total.prime_parts.find(p); it != total.prime_parts.end()) mu = it->second;
        if (lr_coefficient(lam, nu, mu) == 0) return false;
    }
    return true;
}

std::set<AbelianGroup> enumerate_extensions(const AbelianGroup& sub, const AbelianGroup& quot) {
    std::set<long long> primes;
    for (const auto& [p, lam] : sub.prime_parts) primes.insert(p);
    for (const auto& [p, lam] : quot.prime_parts) primes.insert(p);

    std::set<AbelianGroup> out{trivial_group()};
    for (long long p : primes) {
        Partition lam, nu;
        if (auto it = sub.prime_parts.find(p); it != sub.prime_parts.end()) lam = it->second;
        if (auto it = quot.prime_parts.find(p); it != quot.prime_parts.end()) nu = it->second;
        const int total_size = partition_size(lam) + partition_size(nu);
        const int max_len = static_cast<int>(lam.size() + nu.size());
        std::vector<Partition> types;
        for (const Partition& mu : partitions_of(total_size, max_len))
            if (diagram_contains(mu, lam) && diagram_contains(mu, nu) &&
                lr_coefficient(lam, nu, mu) > 0)
                types.push_back(mu);
        std::set<AbelianGroup> next;
        for (const AbelianGroup& g : out)
            for (const Partition& mu : types) {
                AbelianGroup g2 = g;
                if (!mu.empty()) g2.prime_parts[p] = mu;
                next.insert(std::move(g2));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace k3cr3
