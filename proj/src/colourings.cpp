#include "rrlab/colourings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_total(const Colouring& c) {
    if (c.colours.size() != c.copies.copies.size())
        fail("colouring has " + std::to_string(c.colours.size()) + " colours for " +
             std::to_string(c.copies.copies.size()) + " copies");
}

void combinations(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
    if (r > n || r < 0) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

bool is_k_bounded(const Colouring& c, int k) {
    if (k < 1) fail("bound k must be at least 1");
    require_total(c);
    std::map<int, int> count;
    for (int col : c.colours)
        if (++count[col] > k) return false;
    return true;
}

std::vector<DeltaSystem> maximal_delta_systems(const CopySet& cs) {
    int csize = static_cast<int>(cs.pattern.vertices().size());
    if (csize < 1) fail("pattern must have at least one vertex");
    const auto& hv = cs.host.vertices();
    int n = static_cast<int>(hv.size());

    std::vector<DeltaSystem> out;
    combinations(n, csize - 1, [&](const std::vector<int>& idx) {
        std::vector<std::string> kernel;
        for (int i : idx) kernel.push_back(hv[i]);
        DeltaSystem sys;
        sys.kernel = kernel;
        for (const auto& copy : cs.copies)
            if (std::includes(copy.begin(), copy.end(), kernel.begin(), kernel.end()))
                sys.members.push_back(copy);
        if (sys.members.size() >= 2) out.push_back(std::move(sys));
    });
    // combinations emit kernels in index order over sorted vertices: sorted
    return out;
}

DeltaCheck is_k_delta(const Colouring& c, int k) {
    if (k < 1) fail("bound k must be at least 1");
    require_total(c);

    std::map<std::vector<std::string>, int> index_of;
    for (std::size_t i = 0; i < c.copies.copies.size(); ++i)
        index_of[c.copies.copies[i]] = static_cast<int>(i);

    for (const DeltaSystem& sys : maximal_delta_systems(c.copies)) {
        std::map<int, std::vector<std::vector<std::string>>> by_colour;
        for (const auto& member : sys.members)
            by_colour[c.colours[static_cast<std::size_t>(index_of.at(member))]]
                .push_back(member);
        for (auto& [colour, members] : by_colour)
            if (static_cast<int>(members.size()) >= k + 1) {
                DeltaSystem witness;
                witness.kernel = sys.kernel;
                witness.members.assign(members.begin(), members.begin() + k + 1);
                return {false, witness};
            }
    }
    return {true, std::nullopt};
}

std::optional<std::vector<std::string>>
rainbow_copy_search(const SimpleBinaryStructure& B, const Colouring& c) {
    require_total(c);
    CopySet bcopies = enumerate_copies(c.copies.host, B);
    for (const auto& bcopy : bcopies.copies) {
        std::set<int> seen;
        bool injective = true;
        for (std::size_t i = 0; i < c.copies.copies.size(); ++i) {
            if (!std::includes(bcopy.begin(), bcopy.end(), c.copies.copies[i].begin(),
                               c.copies.copies[i].end()))
                continue;
            if (!seen.insert(c.colours[i]).second) { injective = false; break; }
        }
        if (injective) return bcopy;
    }
    return std::nullopt;
}

Colouring reduce_colouring(const Colouring& c, int k) {
    if (k < 2) fail("reduction needs k at least 2");
    require_total(c);
    if (DeltaCheck in = is_k_delta(c, k + 1); !in.ok)
        fail("input colouring is not " + std::to_string(k + 1) + "-delta");

    std::map<std::vector<std::string>, int> index_of;
    for (std::size_t i = 0; i < c.copies.copies.size(); ++i)
        index_of[c.copies.copies[i]] = static_cast<int>(i);

    std::vector<DeltaSystem> systems = maximal_delta_systems(c.copies);

    // Per colour, grow the set of recoloured indices system by system: a
    // system with k+1 members of that colour must end up holding a chosen
    // index; reuse one if present, otherwise take its least such member.
    std::set<int> chosen_all;
    std::set<int> colours_present(c.colours.begin(), c.colours.end());
    for (int colour : colours_present) {
        std::set<int> chosen;
        for (const DeltaSystem& sys : systems) {
            std::vector<int> members;
            for (const auto& m : sys.members)
                if (c.colours[static_cast<std::size_t>(index_of.at(m))] == colour)
                    members.push_back(index_of.at(m));
            if (static_cast<int>(members.size()) <= k) continue;
            std::sort(members.begin(), members.end());
            bool has_chosen = std::any_of(members.begin(), members.end(),
                                          [&](int n) { return chosen.count(n); });
            if (!has_chosen) chosen.insert(members.front());
        }
        chosen_all.insert(chosen.begin(), chosen.end());
    }

    int max_colour = 0;
    for (int col : c.colours) max_colour = std::max(max_colour, col);

    Colouring out = c;
    for (int n : chosen_all)
        out.colours[static_cast<std::size_t>(n)] = max_colour + 1 + n;
    return out;
}

} // namespace rrlab
