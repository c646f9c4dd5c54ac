#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rrlab/arrows.hpp"
#include "rrlab/colourings.hpp"
#include "rrlab/encoding.hpp"
#include "rrlab/sequences.hpp"
#include "rrlab/structures.hpp"
#include "rrlab/triples.hpp"

using namespace rrlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

SimpleBinaryStructure path3() {
    return oracle::graph22({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

SimpleBinaryStructure path4() {
    return oracle::graph22({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

SimpleBinaryStructure two_edges() {
    return oracle::graph22({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
}

SimpleBinaryStructure star3() {
    return oracle::graph22({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"a", "d"}});
}

SimpleBinaryStructure triangle_pendant() {
    return oracle::graph22({"a", "b", "c", "d"},
                           {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}});
}

SimpleBinaryStructure k5_minus_two_edges() {
    return oracle::graph22({"a", "b", "c", "d", "e"},
                           {{"a", "c"},
                            {"a", "d"},
                            {"a", "e"},
                            {"b", "c"},
                            {"b", "d"},
                            {"b", "e"},
                            {"c", "e"},
                            {"d", "e"}});
}

std::vector<std::pair<SimpleBinaryStructure, SimpleBinaryStructure>> delta_battery() {
    std::vector<SimpleBinaryStructure> hosts = {
        complete_graph(1), complete_graph(2),  complete_graph(3),
        complete_graph(4), complete_graph(5),  edgeless_graph(3),
        path3(),           path4(),            two_edges(),
        star3(),           triangle_pendant(), k5_minus_two_edges(),
    };
    std::vector<std::pair<SimpleBinaryStructure, SimpleBinaryStructure>> out;
    for (const auto& host : hosts) {
        out.emplace_back(host, complete_graph(1));
        out.emplace_back(host, complete_graph(2));
    }
    return out;
}

// 1. Strongly similar sequence sets decode to isomorphic structures under the
// similarity bijection, across every signature matching the alphabet.
bool similar_sets_decode_isomorphically() {
    auto t0 = Clock::now();
    int done = 0;
    std::uint64_t seed = 1;
    while (done < 200) {
        for (int d : {2, 3, 4}) {
            if (done >= 200) break;
            SeqSet R = oracle::DiagonalSetGen(seed, d, 2 + static_cast<int>(seed % 2))();
            oracle::SimilarPair pair = oracle::remap_pair(seed, R, 6);
            auto f = strong_similarity_map(pair.R, pair.S);
            if (!f) return false;
            for (auto [n, m] : oracle::signatures_for_alphabet(d)) {
                SimpleBinaryStructure a = decode(pair.R, EncodingParams(n, m), false);
                SimpleBinaryStructure b = decode(pair.S, EncodingParams(n, m), false);
                if (!validate(a).ok() || !validate(b).ok()) return false;
                std::map<std::string, std::string> g;
                for (const auto& [x, y] : *f) g[x.label()] = y.label();
                if (!oracle::label_bijection_ok(a, b, g)) return false;
            }
            ++done;
            ++seed;
        }
    }
    return seconds_since(t0) < 10.0;
}

// 2. The diagonalization of every full domain of depth <= 4 lands on a
// strongly diagonal set and preserves level implication, passing numbers and
// the lexicographic order on all tuples.
bool diagonalization_is_strongly_diagonal() {
    auto t0 = Clock::now();
    for (int d : {2, 3})
        for (int depth = 0; depth <= 4; ++depth) {
            DiagonalizationMap dm = strong_diagonalization(d, depth);
            std::map<Seq, Seq> f = dm.table();
            SeqSet domain = full_tree(d, depth);
            std::vector<Seq> images;
            for (const auto& [x, y] : f) images.push_back(y);
            if (!classify_set(SeqSet(d, std::move(images))).strongly_diagonal)
                return false;
            for (MapProperty prop :
                 {MapProperty::LevelImp, MapProperty::Pnp, MapProperty::Lexico})
                if (!check_map_property(f, domain, prop).ok) return false;
        }
    return seconds_since(t0) < 60.0;
}

bool is_delta_family(const SeqSet& x0, const SeqSet& x1, const SeqSet& x2) {
    if (x0 == x1 || x1 == x2 || x0 == x2) return false;
    SeqSet kernel = set_intersection(set_intersection(x0, x1), x2);
    for (const SeqSet* a : {&x0, &x1, &x2}) {
        if (a->size() != kernel.size() + 1) return false;
        if (set_intersection(*a, kernel).size() != kernel.size()) return false;
    }
    return set_intersection(x0, x1) == kernel && set_intersection(x1, x2) == kernel &&
           set_intersection(x0, x2) == kernel;
}

// 3. Every stretched triple family consists of three pairwise equivalent
// triples whose X parts form a kernel family and whose Y parts coincide.
bool stretched_triples_keep_their_class() {
    int done = 0;
    for (std::uint64_t seed = 1; done < 100 && seed < 200; ++seed) {
        int shape_size = 1 + static_cast<int>(seed % 3);
        oracle::SplitAmbient split = oracle::split_ambient(seed, 2, shape_size);
        std::vector<Triple> triples;
        try {
            triples = enumerate_triples(split.ambient, split.shape);
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (const Triple& t : triples) {
            int needed = 0;
            for (const Seq& z : t.B) needed = std::max(needed, z.length() + 1);
            auto vars = stretch_variants(t, strong_diagonalization(2, needed));
            for (const Triple& v : vars) {
                validate_triple(v);
                if (!triple_equiv(t, v) || !triple_equiv(v, t)) return false;
            }
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!triple_equiv(vars[static_cast<std::size_t>(i)],
                                      vars[static_cast<std::size_t>(j)]))
                        return false;
            if (!is_delta_family(vars[0].X, vars[1].X, vars[2].X)) return false;
            if (!(vars[0].Y == vars[1].Y && vars[1].Y == vars[2].Y)) return false;
            ++done;
        }
    }
    return done >= 100;
}

// 4. Recolouring every canonical colouring that tolerates k+1 repetitions
// yields one tolerating k, exhaustively over the small-host battery.
bool recolouring_tightens_the_bound() {
    long cases = 0;
    for (const auto& [host, pattern] : delta_battery()) {
        CopySet cs = enumerate_copies(host, pattern);
        int n = static_cast<int>(cs.copies.size());
        if (n == 0 || n > 8) continue;
        auto partitions = enumerate_colourings_canonical(cs, n, ColouringMode::Bounded);
        for (int k = 2; k <= 3; ++k)
            for (const auto& p : partitions) {
                Colouring c{cs, p};
                if (!is_k_delta(c, k + 1).ok) continue;
                if (!is_k_delta(reduce_colouring(c, k), k).ok) return false;
                ++cases;
            }
    }
    return cases > 0;
}

// 5. Minimal complete hosts for vertex colourings match k(|B|-1)+1.
bool minimal_hosts_match_pigeonhole() {
    auto t0 = Clock::now();
    auto family = [](int i) { return complete_graph(i); };
    for (int k = 1; k <= 3; ++k)
        for (int b = 1; b <= 3; ++b) {
            auto r = min_host_search(complete_graph(b), complete_graph(1), k,
                                     ColouringMode::Bounded, family, 8);
            if (!r || r->first != oracle::pigeonhole_min_host(k, b)) return false;
        }
    return seconds_since(t0) < 60.0;
}

// 6. Canonical-partition certification agrees with enumerating every colour
// function on all instances with at most 5 pattern copies.
bool canonical_verdicts_match_naive() {
    std::vector<std::tuple<SimpleBinaryStructure, SimpleBinaryStructure,
                           SimpleBinaryStructure>>
        instances;
    instances.emplace_back(complete_graph(2), complete_graph(2), complete_graph(1));
    instances.emplace_back(complete_graph(3), complete_graph(2), complete_graph(1));
    instances.emplace_back(complete_graph(3), complete_graph(3), complete_graph(1));
    instances.emplace_back(complete_graph(4), complete_graph(3), complete_graph(1));
    instances.emplace_back(complete_graph(5), complete_graph(3), complete_graph(1));
    instances.emplace_back(complete_graph(3), complete_graph(3), complete_graph(2));
    instances.emplace_back(complete_graph(4), complete_graph(4), complete_graph(1));
    instances.emplace_back(path3(), complete_graph(2), complete_graph(2));
    instances.emplace_back(path3(), path3(), complete_graph(2));
    instances.emplace_back(path4(), path3(), complete_graph(2));
    instances.emplace_back(path4(), path4(), complete_graph(2));
    instances.emplace_back(two_edges(), complete_graph(2), complete_graph(1));
    instances.emplace_back(two_edges(), complete_graph(2), complete_graph(2));
    instances.emplace_back(two_edges(), two_edges(), complete_graph(2));
    instances.emplace_back(star3(), path3(), complete_graph(2));
    instances.emplace_back(triangle_pendant(), complete_graph(3), complete_graph(2));

    for (const auto& [A, B, C] : instances) {
        if (enumerate_copies(A, C).copies.size() > 5) return false;
        for (int k = 1; k <= 3; ++k)
            for (ColouringMode mode : {ColouringMode::Bounded, ColouringMode::Delta})
                if (verify_arrow(ArrowQuery{A, B, C, k, mode}).holds !=
                    oracle::naive_arrow(A, B, C, k, mode))
                    return false;
    }
    return true;
}

// 7. Colourings that repeat no colour more than k times never contain a
// monochromatic family of k+1 copies over a shared kernel.
bool bounded_implies_delta() {
    SimpleBinaryStructure vertex10(1, 0, {"p"}, {});
    SimpleBinaryStructure arc(1, 0, {"p", "q"}, {{"p", "q", {LabelKind::Dir, 0, "p"}}});

    int checked = 0;
    for (std::uint64_t seed = 1; checked < 1000; ++seed) {
        int k = 1 + static_cast<int>(seed % 3);
        SimpleBinaryStructure host = (seed % 2 == 0) ? generate_random(2, 2, 5, seed)
                                                     : generate_random(1, 0, 5, seed);
        SimpleBinaryStructure pattern =
            (seed % 2 == 0)
                ? (seed % 4 == 0 ? complete_graph(1) : complete_graph(2))
                : (seed % 4 == 1 ? vertex10 : arc);
        CopySet cs = enumerate_copies(host, pattern);
        Colouring c = oracle::random_bounded_colouring(seed, cs, k);
        if (!is_k_bounded(c, k)) return false;
        if (!is_k_delta(c, k).ok) return false;
        ++checked;
    }
    return true;
}

// 8. Kernel-family extraction agrees with brute-force subset enumeration.
bool delta_systems_match_bruteforce() {
    std::vector<std::pair<SimpleBinaryStructure, SimpleBinaryStructure>> pairs;
    for (const auto& [host, pattern] : delta_battery()) pairs.emplace_back(host, pattern);
    SimpleBinaryStructure arc(1, 0, {"p", "q"}, {{"p", "q", {LabelKind::Dir, 0, "p"}}});
    for (std::uint64_t seed : {3ull, 5ull})
        pairs.emplace_back(generate_random(1, 0, 4, seed), arc);
    for (std::uint64_t seed : {9ull, 10ull})
        pairs.emplace_back(generate_random(2, 2, 4, seed), complete_graph(2));

    for (const auto& [host, pattern] : pairs) {
        CopySet cs = enumerate_copies(host, pattern);
        if (cs.copies.size() > 6) continue;
        auto fast = maximal_delta_systems(cs);
        auto brute = oracle::brute_maximal_delta_systems(cs);
        if (fast.size() != brute.size()) return false;
        for (std::size_t i = 0; i < fast.size(); ++i)
            if (fast[i].kernel != brute[i].kernel ||
                fast[i].members != brute[i].members)
                return false;
    }
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*fn)();
    };
    const Criterion criteria[] = {
        {"similar sequence sets decode to isomorphic structures",
         similar_sets_decode_isomorphically},
        {"diagonalization images are strongly diagonal and property-preserving",
         diagonalization_is_strongly_diagonal},
        {"stretched triples stay equivalent with kernel-family X parts",
         stretched_triples_keep_their_class},
        {"recolouring tightens the repetition bound on every admissible colouring",
         recolouring_tightens_the_bound},
        {"minimal complete hosts match the pigeonhole count",
         minimal_hosts_match_pigeonhole},
        {"canonical-partition verdicts equal all-functions verdicts",
         canonical_verdicts_match_naive},
        {"bounded colourings satisfy the kernel-family condition",
         bounded_implies_delta},
        {"maximal kernel families match subset enumeration",
         delta_systems_match_bruteforce},
    };

    int failures = 0;
    int index = 1;
    for (const Criterion& c : criteria) {
        bool ok = false;
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            std::cerr << "criterion " << index << " threw: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << c.name << "\n";
        if (!ok) ++failures;
        ++index;
    }
    return failures == 0 ? 0 : 1;
}
