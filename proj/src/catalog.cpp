#include "k3cr3/catalog.hpp"

#include "k3cr3/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace k3cr3 {

bool cr1_members(const AbelianGroup& g) {
    if (g.rank() <= 1) return true;
    return g == canonicalize({2, 2});
}

bool cr2_members(const AbelianGroup& g) {
    if (g.rank() <= 2) return true;  // Z/n x Z/m
    Partition t2;
    if (auto it = g.prime_parts.find(2); it != g.prime_parts.end()) t2 = it->second;
    bool odd_cyclic = true;
    for (const auto& [p, lam] : g.prime_parts)
        if (p != 2 && lam.size() > 1) odd_cyclic = false;
    // Z/2n x (Z/2)^2
    if (odd_cyclic && t2.size() == 3 && t2[1] == 1 && t2[2] == 1) return true;
    bool only2 = g.prime_parts.size() == 1 && g.prime_parts.count(2);
    if (only2 && t2 == Partition{2, 2, 1}) return true;      // (Z/4)^2 x Z/2
    if (only2 && t2 == Partition{1, 1, 1, 1}) return true;   // (Z/2)^4
    if (g.prime_parts.size() == 1 && g.prime_parts.count(3) &&
        g.prime_parts.at(3) == Partition{1, 1, 1})
        return true;                                         // (Z/3)^3
    return false;
}

const std::vector<AbelianGroup>& nikulin_symplectic() {
    static const std::vector<AbelianGroup> list = [] {
        std::vector<AbelianGroup> v;
        for (long long n = 2; n <= 8; ++n) v.push_back(cyclic_group(n));
        v.push_back(canonicalize({2, 6}));
        v.push_back(canonicalize({3, 3}));
        v.push_back(canonicalize({4, 4}));
        v.push_back(canonicalize({2, 4}));
        v.push_back(canonicalize({2, 2}));
        v.push_back(canonicalize({2, 2, 2}));
        v.push_back(canonicalize({2, 2, 2, 2}));
        std::sort(v.begin(), v.end());
        return v;
    }();
    return list;
}

const std::vector<AbelianGroup>& maximal_k3_groups() {
    static const std::vector<AbelianGroup> list = {
        canonicalize({4, 4, 4}),
        canonicalize({6, 6, 2}),
        canonicalize({6, 3, 3}),
        canonicalize({8, 4, 2}),
        canonicalize({2, 2, 2, 2, 2}),
        canonicalize({4, 2, 2, 2}),
        canonicalize({12, 6}),
        canonicalize({60}),
        canonicalize({10, 5}),
        canonicalize({12, 4}),
        canonicalize({12, 2, 2}),
        canonicalize({18, 3}),
        canonicalize({15, 3}),
        canonicalize({42}),
        canonicalize({30, 2}),
        canonicalize({28, 2}),
        canonicalize({24, 2}),
        canonicalize({20, 2}),
        canonicalize({18, 2}),
        canonicalize({16, 2}),
    };
    return list;
}

bool k3_admissible(const AbelianGroup& g) {
    for (const AbelianGroup& m : maximal_k3_groups())
        if (embeds_in(g, m)) return true;
    return false;
}

const std::vector<AbelianGroup>& k3_subgroup_classes() {
    static const std::vector<AbelianGroup> classes = [] {
        std::vector<AbelianGroup> out;
        long long max_order = 0;
        for (const AbelianGroup& m : maximal_k3_groups())
            max_order = std::max(max_order, m.order());
        // enumerate all classes of order dividing some maximal order
        for (long long n = 1; n <= max_order; ++n) {
            bool divides_some = false;
            for (const AbelianGroup& m : maximal_k3_groups())
                if (m.order() % n == 0) { divides_some = true; break; }
            if (!divides_some) continue;
            // all abelian groups of order n
            AbelianGroup shape = canonicalize({n});
            std::vector<AbelianGroup> of_order{trivial_group()};
            for (const auto& [p, lam] : shape.prime_parts) {
                int e = 0;
                for (int x : lam) e += x;
                std::vector<AbelianGroup> next;
                for (const Partition& pt : partitions_of(e))
                    for (const AbelianGroup& base : of_order) {
                        AbelianGroup g = base;
                        g.prime_parts[p] = pt;
                        next.push_back(std::move(g));
                    }
                of_order = std::move(next);
            }
            for (const AbelianGroup& g : of_order)
                if (k3_admissible(g)) out.push_back(g);
        }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return classes;
}

namespace {

Lattice L(std::vector<std::vector<long long>> rows) { return make_lattice(std::move(rows)); }

}  // namespace

const std::vector<Lattice>& invariant_gram_options_z4_z2_3() {
    static const std::vector<Lattice> mats = {
        L({{0, 4}, {4, 0}}),
        L({{0, 2}, {2, 0}}),
        L({{0, 0, 2}, {0, -8, 0}, {2, 0, 0}}),
        L({{0, 0, 0, 2}, {0, -4, 0, 0}, {0, 0, -4, 0}, {2, 0, 0, 0}}),
        L({{0, 0, 0, 0, 0, 2},
           {0, -4, -2, 2, 2, 0},
           {0, -2, -4, 2, 2, 0},
           {0, 2, 2, -4, 0, 0},
           {0, 2, 2, 0, -4, 0},
           {2, 0, 0, 0, 0, 0}}),
        L({{0, -2, -2, 2, -2, 0},
           {-2, -4, -2, 0, -2, -2},
           {-2, -2, -4, 0, 0, 0},
           {2, 0, 0, 0, 0, 0},
           {-2, -2, 0, 0, -4, 0},
           {0, -2, 0, 0, 0, -4}}),
        L({{0, 0, 0, 2, 0, 0},
           {0, -4, -2, 0, -2, -2},
           {0, -2, -4, 0, 0, 0},
           {2, 0, 0, 0, 0, 0},
           {0, -2, 0, 0, -4, 0},
           {0, -2, 0, 0, 0, -4}}),
        L({{0, 0, 2, 0, 0, 0},
           {0, -4, 0, -2, -6, 2},
           {2, 0, 0, 0, 0, 0},
           {0, -2, 0, -4, -6, 2},
           {0, -6, 0, -6, -20, 8},
           {0, 2, 0, 2, 8, -4}}),
        L({{0, -2, 2, -4, -4, 2},
           {-2, -4, 0, -4, -6, 2},
           {2, 0, 0, 0, 0, 0},
           {-4, -4, 0, -8, -8, 4},
           {-4, -6, 0, -8, -12, 4},
           {2, 2, 0, 4, 4, -4}}),
        L({{0, 0, -2, -4, -2, -6},
           {0, -8, -2, -20, -14, -26},
           {-2, -2, -4, -8, -4, -12},
           {-4, -20, -8, -60, -40, -78},
           {-2, -14, -4, -40, -28, -52},
           {-6, -26, -12, -78, -52, -104}}),
    };
    return mats;
}

const std::vector<Lattice>& invariant_gram_options_z2_5() {
    static const std::vector<Lattice> mats = {
        L({{8}}),
        L({{0, 2}, {2, 0}}),
        L({{0, 4}, {4, 0}}),
        L({{0, -2}, {-2, 0}}),
        L({{0, 0, 2}, {0, -8, 0}, {2, 0, 0}}),
        L({{0, 0, 0, 2}, {0, -4, 0, 0}, {0, 0, -4, 0}, {2, 0, 0, 0}}),
        L({{0, 0, 0, 0, 2},
           {0, -4, -2, -2, 0},
           {0, -2, -4, -2, 0},
           {0, -2, -2, -4, 0},
           {2, 0, 0, 0, 0}}),
        L({{-4, -4, 0, -2, -2},
           {-4, -8, 0, 0, 0},
           {0, 0, 0, -2, 0},
           {-2, 0, -2, -4, 0},
           {-2, 0, 0, 0, -4}}),
        L({{-4, 2, -4, -6, 2},
           {2, 0, 0, 0, 0},
           {-4, 0, -4, -2, 0},
           {-6, 0, -2, -12, 6},
           {2, 0, 0, 6, -4}}),
        L({{-52, -10, -20, -38, -28},
           {-10, -4, -4, -6, -4},
           {-20, -4, -8, -14, -10},
           {-38, -6, -14, -28, -20},
           {-28, -4, -10, -20, -16}}),
        L({{-4, 0, -2, -4, 0},
           {0, 0, 0, 0, 2},
           {-2, 0, -4, 0, 0},
           {-4, 0, 0, -8, 0},
           {0, 2, 0, 0, 0}}),
        L({{0, 0, 2, 0, 0},
           {0, -4, 0, -4, -2},
           {2, 0, 0, 0, 0},
           {0, -4, 0, -12, -6},
           {0, -2, 0, -6, -4}}),
        L({{0, 2, 2, -2, 0},
           {2, 4, 4, -2, -2},
           {2, 4, 0, 0, 0},
           {-2, -2, 0, -4, 0},
           {0, -2, 0, 0, -4}}),
        L({{-4, -4, -2, -2, 0},
           {-4, -8, 0, 0, 0},
           {-2, 0, -4, 0, 0},
           {-2, 0, 0, -4, 2},
           {0, 0, 0, 2, -4}}),
    };
    return mats;
}

const std::vector<CatalogEntry>& exceptional_six() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({canonicalize({4, 4, 4}), canonicalize({4, 4}), 4, 1, 1,
                     {L({{4}})}, false});
        v.push_back({canonicalize({6, 6, 2}), canonicalize({6, 2}), 6, 1, 1,
                     {L({{2}})}, false});
        v.push_back({canonicalize({6, 3, 3}), canonicalize({3, 3}), 6, 2, 2,
                     {L({{0, 3}, {3, 0}})}, false});
        v.push_back({canonicalize({8, 4, 2}), canonicalize({4, 2}), 8, 2, 2,
                     {L({{0, 2}, {2, 0}})}, false});
        v.push_back({canonicalize({2, 2, 2, 2, 2}), canonicalize({2, 2, 2, 2, 2}), 2, 1, 5,
                     invariant_gram_options_z2_5(), true});
        v.push_back({canonicalize({4, 2, 2, 2}), canonicalize({2, 2, 2}), 4, 2, 6,
                     invariant_gram_options_z4_z2_3(), false});
        return v;
    }();
    return entries;
}

int symplectic_fixed_count(int order) {
    switch (order) {
        case 2: return 8;
        case 3: return 6;
        case 4: return 4;
        case 5: return 4;
        case 6: return 2;
        case 7: return 3;
        case 8: return 2;
        default: throw std::invalid_argument("symplectic order must be in 2..8");
    }
}

AbelianGroup DuValType::pi1ab() const {
    switch (kind) {
        case DuValKind::A: return cyclic_group(n + 1);
        case DuValKind::D: return n % 2 == 0 ? canonicalize({2, 2}) : cyclic_group(2);
        case DuValKind::E:
            if (n == 6) return cyclic_group(3);
            if (n == 7) return cyclic_group(2);
            return trivial_group();  // E8
    }
    throw std::logic_error("bad du Val kind");
}

std::string DuValType::str() const {
    const char* k = kind == DuValKind::A ? "A" : kind == DuValKind::D ? "D" : "E";
    return std::string(k) + std::to_string(n);
}

DuValType make_du_val(DuValKind kind, int n) {
    bool ok = (kind == DuValKind::A && n >= 1) || (kind == DuValKind::D && n >= 4) ||
              (kind == DuValKind::E && n >= 6 && n <= 8);
    if (!ok) throw std::invalid_argument("bad du Val subscript");
    return DuValType{kind, n};
}

namespace {

nlohmann::json gram_to_json(const Lattice& l) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : l.gram) rows.push_back(row);
    return rows;
}

}  // namespace

nlohmann::json catalog_json() {
    nlohmann::json j;
    j["cr2_families"] = nlohmann::json::array({
        {{"id", 1}, {"form", "Z/n x Z/m"}},
        {{"id", 2}, {"form", "Z/2n x (Z/2)^2"}},
        {{"id", 3}, {"form", "(Z/4)^2 x Z/2"}},
        {{"id", 4}, {"form", "(Z/3)^3"}},
        {{"id", 5}, {"form", "(Z/2)^4"}},
    });
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const AbelianGroup& g : nikulin_symplectic()) arr.push_back(g.str());
        j["nikulin"] = arr;
    }
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const AbelianGroup& g : maximal_k3_groups()) arr.push_back(g.str());
        j["maximal_k3"] = arr;
    }
    {
        nlohmann::json arr = nlohmann::json::array();
        for (const CatalogEntry& e : exceptional_six()) {
            nlohmann::json row;
            row["group"] = e.group.str();
            row["symplectic_part"] = e.symplectic_part.str();
            row["m"] = e.nonsymplectic_order;
            row["rank_min"] = e.rank_min;
            row["rank_max"] = e.rank_max;
            row["order_identity_relaxed"] = e.order_identity_relaxed;
            nlohmann::json mats = nlohmann::json::array();
            for (const Lattice& l : e.gram_options) mats.push_back(gram_to_json(l));
            row["gram_options"] = mats;
            arr.push_back(row);
        }
        j["exceptional_six"] = arr;
    }
    j["du_val"] = nlohmann::json::array({
        {{"family", "A_n"}, {"curve_count", "n"}, {"pi1ab", "Z/(n+1)"}},
        {{"family", "D_n even"}, {"curve_count", "n"}, {"pi1ab", "2,2"}},
        {{"family", "D_n odd"}, {"curve_count", "n"}, {"pi1ab", "2"}},
        {{"family", "E6"}, {"curve_count", "6"}, {"pi1ab", "3"}},
        {{"family", "E7"}, {"curve_count", "7"}, {"pi1ab", "2"}},
        {{"family", "E8"}, {"curve_count", "8"}, {"pi1ab", "1"}},
    });
    {
        nlohmann::json fc;
        for (int o = 2; o <= 8; ++o) fc[std::to_string(o)] = symplectic_fixed_count(o);
        j["fixed_counts"] = fc;
    }
    return j;
}

}  // namespace k3cr3
