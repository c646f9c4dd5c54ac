#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "rrlab/structures.hpp"

using namespace rrlab;

namespace {

bool violates(const ValidationReport& r, Rule rule) {
    for (const RuleViolation& v : r.violations)
        if (v.rule == rule) return true;
    return false;
}

std::vector<std::string> rename_all(const std::vector<std::string>& vs,
                                    const std::map<std::string, std::string>& f) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(f.at(v));
    return out;
}

SimpleBinaryStructure renamed(const SimpleBinaryStructure& s,
                              const std::map<std::string, std::string>& f) {
    std::vector<Edge> edges;
    for (const Edge& e : s.edges()) {
        EdgeLabel l = e.label;
        if (l.kind == LabelKind::Dir) l.head = f.at(l.head);
        edges.push_back({f.at(e.u), f.at(e.v), l});
    }
    return SimpleBinaryStructure(s.n(), s.m(), rename_all(s.vertices(), f), std::move(edges));
}

bool same_structure(const SimpleBinaryStructure& a, const SimpleBinaryStructure& b) {
    if (a.n() != b.n() || a.m() != b.m() || a.vertices() != b.vertices()) return false;
    for (std::size_t i = 0; i < a.vertices().size(); ++i)
        for (std::size_t j = i + 1; j < a.vertices().size(); ++j)
            if (a.label_of(a.vertices()[i], a.vertices()[j]) !=
                b.label_of(a.vertices()[i], a.vertices()[j]))
                return false;
    return true;
}

bool bijection_preserves_labels(const SimpleBinaryStructure& a,
                                const SimpleBinaryStructure& b,
                                const std::map<std::string, std::string>& f) {
    for (std::size_t i = 0; i < a.vertices().size(); ++i)
        for (std::size_t j = i + 1; j < a.vertices().size(); ++j) {
            auto la = a.label_of(a.vertices()[i], a.vertices()[j]);
            auto lb = b.label_of(f.at(a.vertices()[i]), f.at(a.vertices()[j]));
            if (la.has_value() != lb.has_value()) return false;
            if (!la) continue;
            if (la->kind != lb->kind || la->index != lb->index) return false;
            if (la->kind == LabelKind::Dir && f.at(la->head) != lb->head) return false;
        }
    return true;
}

} // namespace

TEST_CASE("validate on pinned examples") {
    CHECK(validate(complete_graph(3)).ok());

    SimpleBinaryStructure bad_index(1, 0, {"a", "b"}, {{"a", "b", {LabelKind::Sym, 0, ""}}});
    ValidationReport r1 = validate(bad_index);
    CHECK(!r1.ok());
    CHECK(violates(r1, Rule::IndexRange));

    SimpleBinaryStructure missing(2, 1, {"a", "b"}, {});
    ValidationReport r2 = validate(missing);
    CHECK(!r2.ok());
    CHECK(violates(r2, Rule::Totality));
}

TEST_CASE("validate flags each rule") {
    SimpleBinaryStructure m_too_big(1, 2, {}, {});
    CHECK(violates(validate(m_too_big), Rule::SymmetryNumber));

    SimpleBinaryStructure unknown(2, 2, {"a"}, {{"a", "z", {LabelKind::Sym, 0, ""}}});
    CHECK(violates(validate(unknown), Rule::UnknownVertex));

    SimpleBinaryStructure loop(2, 2, {"a", "b"},
                               {{"a", "a", {LabelKind::Sym, 0, ""}},
                                {"a", "b", {LabelKind::Sym, 0, ""}}});
    CHECK(violates(validate(loop), Rule::Irreflexive));

    SimpleBinaryStructure wrong_head(1, 0, {"a", "b", "c"},
                                     {{"a", "b", {LabelKind::Dir, 0, "c"}},
                                      {"a", "c", {LabelKind::Dir, 0, "a"}},
                                      {"b", "c", {LabelKind::Dir, 0, "b"}}});
    CHECK(violates(validate(wrong_head), Rule::HeadNotEndpoint));

    SimpleBinaryStructure dup(2, 2, {"a", "b"},
                              {{"a", "b", {LabelKind::Sym, 0, ""}},
                               {"b", "a", {LabelKind::Sym, 1, ""}}});
    CHECK(violates(validate(dup), Rule::DuplicateLabel));

    SimpleBinaryStructure dir_range(2, 1, {"a", "b"}, {{"a", "b", {LabelKind::Dir, 0, "a"}}});
    CHECK(violates(validate(dir_range), Rule::IndexRange));

    CHECK(rule_name(Rule::Totality) == "totality");
}

TEST_CASE("induced substructures") {
    SimpleBinaryStructure k3 = complete_graph(3);
    SimpleBinaryStructure sub = induced(k3, {k3.vertices()[0], k3.vertices()[1]});
    CHECK(sub.vertices().size() == 2);
    REQUIRE(sub.edges().size() == 1);
    CHECK(sub.edges()[0].label == EdgeLabel{LabelKind::Sym, 1, ""});
    CHECK(isomorphic(sub, complete_graph(2)).has_value());

    CHECK(induced(k3, {}).vertices().empty());
    CHECK(isomorphic(induced(k3, k3.vertices()), k3).has_value());
    CHECK_THROWS_AS(induced(k3, {"nope"}), std::invalid_argument);

    std::mt19937_64 g(5);
    for (int t = 0; t < 30; ++t) {
        SimpleBinaryStructure s = generate_random(2, 1, 5, g());
        std::vector<std::string> big(s.vertices().begin(), s.vertices().begin() + 4);
        std::vector<std::string> small(big.begin(), big.begin() + 2);
        SimpleBinaryStructure once = induced(s, small);
        SimpleBinaryStructure twice = induced(induced(s, big), small);
        CHECK(same_structure(once, twice));
    }
}

TEST_CASE("isomorphic on pinned examples") {
    SimpleBinaryStructure k2 = complete_graph(2);
    auto id = isomorphic(k2, k2);
    REQUIRE(id.has_value());
    for (const auto& v : k2.vertices()) CHECK(id->at(v) == v);

    SimpleBinaryStructure ab(1, 0, {"a", "b"}, {{"a", "b", {LabelKind::Dir, 0, "b"}}});
    SimpleBinaryStructure ba(1, 0, {"a", "b"}, {{"a", "b", {LabelKind::Dir, 0, "a"}}});
    auto swap = isomorphic(ab, ba);
    REQUIRE(swap.has_value());
    CHECK(swap->at("a") == "b");
    CHECK(swap->at("b") == "a");

    SimpleBinaryStructure edge = complete_graph(2);
    SimpleBinaryStructure nonedge = edgeless_graph(2);
    CHECK(!isomorphic(edge, nonedge).has_value());
    CHECK(!isomorphic(complete_graph(2), complete_graph(3)).has_value());
    CHECK(!isomorphic(complete_graph(2), SimpleBinaryStructure(1, 1, {"a", "b"},
                                                               {{"a", "b", {LabelKind::Sym, 0, ""}}}))
               .has_value());
}

TEST_CASE("isomorphic is an equivalence and returns label-preserving bijections") {
    std::mt19937_64 g(77);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + static_cast<int>(g() % 2);
        int m = static_cast<int>(g() % static_cast<std::uint64_t>(n + 1));
        SimpleBinaryStructure a = generate_random(n, m, 4, g());
        CHECK(isomorphic(a, a).has_value()); // reflexive

        std::map<std::string, std::string> f{{"v0", "w2"}, {"v1", "w0"}, {"v2", "w3"},
                                             {"v3", "w1"}};
        SimpleBinaryStructure b = renamed(a, f);
        auto fwd = isomorphic(a, b);
        auto bwd = isomorphic(b, a);
        REQUIRE(fwd.has_value()); // symmetric
        REQUIRE(bwd.has_value());
        CHECK(bijection_preserves_labels(a, b, *fwd));
        CHECK(bijection_preserves_labels(b, a, *bwd));

        SimpleBinaryStructure c = renamed(b, {{"w0", "x0"}, {"w1", "x1"}, {"w2", "x2"},
                                              {"w3", "x3"}});
        if (isomorphic(a, b) && isomorphic(b, c)) CHECK(isomorphic(a, c).has_value());
    }
}

TEST_CASE("enumerate_copies on pinned examples") {
    CopySet c1 = enumerate_copies(complete_graph(3), complete_graph(2));
    CHECK(c1.copies.size() == 3);

    CopySet c2 = enumerate_copies(complete_graph(3), complete_graph(1));
    CHECK(c2.copies.size() == 3);

    SimpleBinaryStructure path = oracle::graph22({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CopySet c3 = enumerate_copies(path, complete_graph(2));
    REQUIRE(c3.copies.size() == 2);
    CHECK(c3.copies[0] == std::vector<std::string>{"a", "b"});
    CHECK(c3.copies[1] == std::vector<std::string>{"b", "c"});

    CHECK_THROWS_AS(enumerate_copies(complete_graph(3),
                                     SimpleBinaryStructure(1, 1, {"a"}, {})),
                    std::invalid_argument);
}

TEST_CASE("enumerate_copies equals subset filtering on small random hosts") {
    std::mt19937_64 g(1234);
    for (int t = 0; t < 25; ++t) {
        int n = 1 + static_cast<int>(g() % 2);
        int m = static_cast<int>(g() % static_cast<std::uint64_t>(n + 1));
        if (n + (n - m) == 1) m = n; // keep at least two labels
        int hv = 4 + static_cast<int>(g() % 3);
        int pv = 1 + static_cast<int>(g() % 3);
        SimpleBinaryStructure host = generate_random(n, m, hv, g());
        SimpleBinaryStructure pattern = generate_random(n, m, pv, g());

        CopySet got = enumerate_copies(host, pattern);
        std::vector<std::vector<std::string>> want;
        std::vector<bool> mask(static_cast<std::size_t>(hv), false);
        std::fill(mask.end() - pv, mask.end(), true);
        do {
            std::vector<std::string> subset;
            for (int i = 0; i < hv; ++i)
                if (mask[static_cast<std::size_t>(i)])
                    subset.push_back(host.vertices()[static_cast<std::size_t>(i)]);
            if (isomorphic(induced(host, subset), pattern).has_value())
                want.push_back(subset);
        } while (std::next_permutation(mask.begin(), mask.end()));
        std::sort(want.begin(), want.end());
        CHECK(got.copies == want);
        CHECK(std::is_sorted(got.copies.begin(), got.copies.end()));
    }
}

TEST_CASE("generate_random honours its contract") {
    SimpleBinaryStructure empty = generate_random(2, 2, 0, 9);
    CHECK(empty.vertices().empty());
    CHECK(empty.edges().empty());

    SimpleBinaryStructure a = generate_random(2, 2, 5, 42);
    SimpleBinaryStructure b = generate_random(2, 2, 5, 42);
    CHECK(a.vertices() == b.vertices());
    REQUIRE(a.edges().size() == b.edges().size());
    for (std::size_t i = 0; i < a.edges().size(); ++i) {
        CHECK(a.edges()[i].u == b.edges()[i].u);
        CHECK(a.edges()[i].v == b.edges()[i].v);
        CHECK(a.edges()[i].label == b.edges()[i].label);
    }
    CHECK(validate(a).ok());

    SimpleBinaryStructure t = generate_random(1, 0, 4, 7);
    CHECK(validate(t).ok());
    CHECK(t.edges().size() == 6);
    for (const Edge& e : t.edges()) CHECK(e.label.kind == LabelKind::Dir);

    CHECK_THROWS_AS(generate_random(1, 2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_random(0, 0, 3, 0), std::invalid_argument);
}

TEST_CASE("complete and edgeless graphs") {
    SimpleBinaryStructure k4 = complete_graph(4);
    CHECK(k4.n() == 2);
    CHECK(k4.m() == 2);
    CHECK(k4.vertices().size() == 4);
    CHECK(validate(k4).ok());
    for (const Edge& e : k4.edges()) CHECK(e.label == EdgeLabel{LabelKind::Sym, 1, ""});

    SimpleBinaryStructure e3 = edgeless_graph(3);
    CHECK(validate(e3).ok());
    for (const Edge& e : e3.edges()) CHECK(e.label == EdgeLabel{LabelKind::Sym, 0, ""});
    CHECK(!isomorphic(complete_graph(3), e3).has_value());
}
