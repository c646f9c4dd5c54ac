#include "rrlab/arrows.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <string>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    return (a >= kSaturated - b) ? kSaturated : a + b;
}

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturated / b) return kSaturated;
    return a * b;
}

// Number of set partitions of n elements with every block of size <= k
// (saturating). A lower bound for the delta-mode stream, exact for bounded.
std::int64_t bounded_partition_count(int n, int k) {
    std::vector<std::int64_t> bell(static_cast<std::size_t>(n) + 1, 0);
    bell[0] = 1;
    for (int t = 1; t <= n; ++t) {
        // place element t in a block of size s together with s-1 of the
        // remaining t-1 elements
        std::int64_t total = 0, choose = 1; // C(t-1, s-1)
        for (int s = 1; s <= std::min(k, t); ++s) {
            total = sat_add(total, sat_mul(choose, bell[static_cast<std::size_t>(t - s)]));
            choose = sat_mul(choose, t - s);
            choose /= s; // exact: running binomial
            if (choose >= kSaturated) choose = kSaturated;
        }
        bell[static_cast<std::size_t>(t)] = total;
    }
    return bell[static_cast<std::size_t>(n)];
}

// Streams canonical colourings (block indices in first-use order) in
// lexicographic order, pruning blocks that exceed the bound (bounded mode) or
// acquire k+1 members sharing a kernel (delta mode).
class ColouringStream {
public:
    ColouringStream(const CopySet& cs, int k, ColouringMode mode)
        : n_(static_cast<int>(cs.copies.size())), k_(k), mode_(mode) {
        if (mode_ == ColouringMode::Delta) {
            std::map<std::vector<std::string>, int> index_of;
            for (std::size_t i = 0; i < cs.copies.size(); ++i)
                index_of[cs.copies[i]] = static_cast<int>(i);
            auto systems = maximal_delta_systems(cs);
            system_count_ = static_cast<int>(systems.size());
            systems_of_.resize(static_cast<std::size_t>(n_));
            for (int s = 0; s < system_count_; ++s)
                for (const auto& member : systems[static_cast<std::size_t>(s)].members)
                    systems_of_[static_cast<std::size_t>(index_of.at(member))].push_back(s);
        }
        block_size_.assign(static_cast<std::size_t>(n_) + 1, 0);
        sys_count_.assign(static_cast<std::size_t>(n_ + 1) *
                              static_cast<std::size_t>(std::max(system_count_, 1)),
                          0);
        a_.assign(static_cast<std::size_t>(n_), 0);
        max_block_.assign(static_cast<std::size_t>(n_), 0);
    }

    // Fills out with the next colouring; false when exhausted.
    bool next(std::vector<int>& out) {
        if (n_ == 0) {
            if (emitted_empty_) return false;
            emitted_empty_ = true;
            out.clear();
            return true;
        }
        bool ok = started_ ? advance() : fill_from(0);
        started_ = true;
        if (ok) out = a_;
        return ok;
    }

private:
    bool feasible(int i, int v) const {
        if (mode_ == ColouringMode::Bounded)
            return block_size_[static_cast<std::size_t>(v)] < k_;
        for (int s : systems_of_[static_cast<std::size_t>(i)])
            if (sys_count_[static_cast<std::size_t>(v) *
                               static_cast<std::size_t>(system_count_) +
                           static_cast<std::size_t>(s)] >= k_)
                return false;
        return true;
    }

    void assign(int i, int v) {
        a_[static_cast<std::size_t>(i)] = v;
        max_block_[static_cast<std::size_t>(i)] =
            std::max(i == 0 ? -1 : max_block_[static_cast<std::size_t>(i) - 1], v);
        ++block_size_[static_cast<std::size_t>(v)];
        if (mode_ == ColouringMode::Delta)
            for (int s : systems_of_[static_cast<std::size_t>(i)])
                ++sys_count_[static_cast<std::size_t>(v) *
                                 static_cast<std::size_t>(system_count_) +
                             static_cast<std::size_t>(s)];
    }

    void unassign(int i) {
        int v = a_[static_cast<std::size_t>(i)];
        --block_size_[static_cast<std::size_t>(v)];
        if (mode_ == ColouringMode::Delta)
            for (int s : systems_of_[static_cast<std::size_t>(i)])
                --sys_count_[static_cast<std::size_t>(v) *
                                 static_cast<std::size_t>(system_count_) +
                             static_cast<std::size_t>(s)];
    }

    // A fresh block is always allowed (k >= 1), so greedy completion succeeds.
    bool fill_from(int i) {
        for (; i < n_; ++i) {
            int lim = (i == 0 ? -1 : max_block_[static_cast<std::size_t>(i) - 1]) + 1;
            for (int v = 0; v <= lim; ++v)
                if (feasible(i, v)) { assign(i, v); break; }
        }
        return true;
    }

    bool advance() {
        for (int i = n_ - 1; i >= 0; --i) {
            int v = a_[static_cast<std::size_t>(i)];
            unassign(i);
            int lim = (i == 0 ? -1 : max_block_[static_cast<std::size_t>(i) - 1]) + 1;
            for (int w = v + 1; w <= lim; ++w)
                if (feasible(i, w)) {
                    assign(i, w);
                    return fill_from(i + 1);
                }
        }
        return false;
    }

    int n_, k_;
    ColouringMode mode_;
    int system_count_ = 0;
    std::vector<std::vector<int>> systems_of_;
    std::vector<int> block_size_;
    std::vector<int> sys_count_;
    std::vector<int> a_;
    std::vector<int> max_block_;
    bool started_ = false;
    bool emitted_empty_ = false;
};

[[noreturn]] void throw_budget(std::int64_t budget) {
    throw BudgetExceeded("colouring stream exceeds the budget of " +
                         std::to_string(budget) +
                         " (raise --budget or RRLAB_BUDGET)");
}

} // namespace

std::int64_t default_budget() {
    if (const char* env = std::getenv("RRLAB_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        fail("RRLAB_BUDGET must be a positive integer");
    }
    return 10'000'000;
}

std::vector<std::vector<int>> enumerate_colourings_canonical(const CopySet& cs, int k,
                                                             ColouringMode mode,
                                                             std::int64_t budget) {
    if (k < 1) fail("bound k must be at least 1");
    if (budget <= 0) budget = default_budget();
    if (bounded_partition_count(static_cast<int>(cs.copies.size()), k) > budget)
        throw_budget(budget);

    std::vector<std::vector<int>> out;
    ColouringStream stream(cs, k, mode);
    std::vector<int> c;
    while (stream.next(c)) {
        if (static_cast<std::int64_t>(out.size()) >= budget) throw_budget(budget);
        out.push_back(c);
    }
    return out;
}

namespace {

// Index of the first copy of B whose contained pattern copies get pairwise
// distinct colours, else -1.
int first_rainbow(const std::vector<std::vector<int>>& contained,
                  const std::vector<int>& colours, std::vector<char>& seen) {
    for (std::size_t bi = 0; bi < contained.size(); ++bi) {
        bool injective = true;
        std::vector<int> marked;
        for (int ci : contained[bi]) {
            int col = colours[static_cast<std::size_t>(ci)];
            if (seen[static_cast<std::size_t>(col)]) { injective = false; break; }
            seen[static_cast<std::size_t>(col)] = 1;
            marked.push_back(col);
        }
        for (int col : marked) seen[static_cast<std::size_t>(col)] = 0;
        if (injective) return static_cast<int>(bi);
    }
    return -1;
}

} // namespace

ArrowCertificate verify_arrow(const ArrowQuery& q) {
    if (q.k < 1) fail("bound k must be at least 1");
    if (q.A.n() != q.B.n() || q.A.m() != q.B.m() || q.A.n() != q.C.n() ||
        q.A.m() != q.C.m())
        fail("A, B, C must share (n, m)");

    auto t0 = std::chrono::steady_clock::now();
    std::int64_t budget = q.budget > 0 ? q.budget : default_budget();
    int workers = std::max(1, q.workers);

    CopySet copies_C = enumerate_copies(q.A, q.C);
    CopySet copies_B = enumerate_copies(q.A, q.B);
    int nc = static_cast<int>(copies_C.copies.size());

    std::vector<std::vector<int>> contained(copies_B.copies.size());
    for (std::size_t bi = 0; bi < copies_B.copies.size(); ++bi)
        for (int ci = 0; ci < nc; ++ci)
            if (std::includes(copies_B.copies[bi].begin(), copies_B.copies[bi].end(),
                              copies_C.copies[static_cast<std::size_t>(ci)].begin(),
                              copies_C.copies[static_cast<std::size_t>(ci)].end()))
                contained[bi].push_back(ci);

    if (bounded_partition_count(nc, q.k) > budget) throw_budget(budget);

    ArrowCertificate cert;
    ColouringStream stream(copies_C, q.k, q.mode);
    std::int64_t examined = 0;
    bool exhausted = false;

    auto finish_fail = [&](std::vector<int> colours, std::int64_t index) {
        cert.holds = false;
        cert.witnesses.clear();
        cert.counterexample = Colouring{copies_C, std::move(colours)};
        cert.stats.colourings = index;
    };

    while (!exhausted && !cert.counterexample) {
        std::vector<std::vector<int>> batch;
        std::vector<int> c;
        while (static_cast<std::int64_t>(batch.size()) < 4096 * workers &&
               examined + static_cast<std::int64_t>(batch.size()) < budget) {
            if (!stream.next(c)) { exhausted = true; break; }
            batch.push_back(c);
        }
        if (batch.empty()) break;

        std::vector<std::vector<int>> results(static_cast<std::size_t>(workers));
        std::vector<std::future<void>> futs;
        std::size_t chunk = (batch.size() + static_cast<std::size_t>(workers) - 1) /
                            static_cast<std::size_t>(workers);
        for (int w = 0; w < workers; ++w) {
            std::size_t lo = std::min(batch.size(), static_cast<std::size_t>(w) * chunk);
            std::size_t hi = std::min(batch.size(), lo + chunk);
            futs.push_back(std::async(std::launch::async, [&, lo, hi, w]() {
                std::vector<char> seen(static_cast<std::size_t>(std::max(nc, 1)), 0);
                for (std::size_t i = lo; i < hi; ++i)
                    results[static_cast<std::size_t>(w)].push_back(
                        first_rainbow(contained, batch[i], seen));
            }));
        }
        for (auto& f : futs) f.get();

        std::size_t pos = 0;
        for (int w = 0; w < workers && !cert.counterexample; ++w)
            for (int r : results[static_cast<std::size_t>(w)]) {
                ++examined;
                if (r < 0) {
                    finish_fail(batch[pos], examined);
                    break;
                }
                cert.witnesses.push_back(copies_B.copies[static_cast<std::size_t>(r)]);
                ++pos;
            }

        // Only a fully passing run may hit the budget boundary; needing one
        // more colouring there is a hard error, never a silent truncation.
        if (!cert.counterexample && !exhausted && examined >= budget) {
            if (stream.next(c)) throw_budget(budget);
            exhausted = true;
        }
    }

    if (!cert.counterexample) {
        cert.holds = true;
        cert.stats.colourings = examined;
    }
    cert.stats.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return cert;
}

std::optional<std::pair<int, ArrowCertificate>>
min_host_search(const SimpleBinaryStructure& B, const SimpleBinaryStructure& C, int k,
                ColouringMode mode,
                const std::function<SimpleBinaryStructure(int)>& host_family, int limit,
                std::int64_t budget, int workers,
                const std::function<void(int, const ArrowCertificate&)>& on_result) {
    for (int i = 1; i <= limit; ++i) {
        ArrowQuery q{host_family(i), B, C, k, mode, budget, workers};
        ArrowCertificate cert = verify_arrow(q);
        if (on_result) on_result(i, cert);
        if (cert.holds) return std::make_pair(i, std::move(cert));
    }
    return std::nullopt;
}

} // namespace rrlab
