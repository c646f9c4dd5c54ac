#include "rrlab/structures.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string pair_text(const std::string& u, const std::string& v) {
    return "{" + u + "," + v + "}";
}

// Label code relative to the ordered endpoints (x, y): kind, index, and for
// oriented labels which endpoint is the head (2 = sym, 3 = head elsewhere).
std::tuple<int, int, int> label_code(const Edge& e, const std::string& x,
                                     const std::string& y) {
    int side = 2;
    if (e.label.kind == LabelKind::Dir)
        side = (e.label.head == x) ? 0 : (e.label.head == y) ? 1 : 3;
    return {e.label.kind == LabelKind::Sym ? 0 : 1, e.label.index, side};
}

std::vector<std::tuple<int, int, int>> pair_codes(const SimpleBinaryStructure& s,
                                                  const std::string& x,
                                                  const std::string& y) {
    std::vector<std::tuple<int, int, int>> out;
    for (const Edge& e : s.edges())
        if ((e.u == x && e.v == y) || (e.u == y && e.v == x))
            out.push_back(label_code(e, x, y));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SimpleBinaryStructure::SimpleBinaryStructure(int n, int m,
                                             std::vector<std::string> vertices,
                                             std::vector<Edge> edges)
    : n_(n), m_(m), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (Edge& e : edges_)
        if (e.v < e.u) std::swap(e.u, e.v);
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        auto ka = std::tie(a.u, a.v);
        auto kb = std::tie(b.u, b.v);
        if (ka != kb) return ka < kb;
        return label_code(a, a.u, a.v) < label_code(b, b.u, b.v);
    });
}

bool SimpleBinaryStructure::has_vertex(const std::string& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<EdgeLabel> SimpleBinaryStructure::label_of(const std::string& u,
                                                         const std::string& v) const {
    const std::string& a = std::min(u, v);
    const std::string& b = std::max(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::tie(a, b),
                               [](const Edge& e, const auto& key) {
                                   return std::tie(e.u, e.v) < key;
                               });
    if (it == edges_.end() || it->u != a || it->v != b) return std::nullopt;
    return it->label;
}

std::string rule_name(Rule r) {
    switch (r) {
    case Rule::SymmetryNumber: return "symmetry-number";
    case Rule::UnknownVertex: return "unknown-vertex";
    case Rule::Irreflexive: return "irreflexive";
    case Rule::IndexRange: return "index-range";
    case Rule::HeadNotEndpoint: return "head-not-endpoint";
    case Rule::DuplicateLabel: return "duplicate-label";
    case Rule::Totality: return "totality";
    }
    return "?";
}

ValidationReport validate(const SimpleBinaryStructure& s) {
    ValidationReport rep;
    auto add = [&](Rule r, const std::string& d) { rep.violations.push_back({r, d}); };

    if (s.m() < 0 || s.m() > s.n())
        add(Rule::SymmetryNumber,
            "m=" + std::to_string(s.m()) + " not in [0, n=" + std::to_string(s.n()) + "]");

    std::set<std::pair<std::string, std::string>> seen;
    for (const Edge& e : s.edges()) {
        if (!s.has_vertex(e.u)) add(Rule::UnknownVertex, e.u + " in " + pair_text(e.u, e.v));
        if (!s.has_vertex(e.v)) add(Rule::UnknownVertex, e.v + " in " + pair_text(e.u, e.v));
        if (e.u == e.v) add(Rule::Irreflexive, pair_text(e.u, e.v));
        if (e.label.kind == LabelKind::Sym) {
            if (e.label.index < 0 || e.label.index >= s.m())
                add(Rule::IndexRange, "sym(" + std::to_string(e.label.index) + ") on " +
                                          pair_text(e.u, e.v));
        } else {
            if (e.label.index < s.m() || e.label.index >= s.n())
                add(Rule::IndexRange, "dir(" + std::to_string(e.label.index) + ") on " +
                                          pair_text(e.u, e.v));
            if (e.label.head != e.u && e.label.head != e.v)
                add(Rule::HeadNotEndpoint, e.label.head + " on " + pair_text(e.u, e.v));
        }
        if (e.u != e.v && !seen.insert({e.u, e.v}).second)
            add(Rule::DuplicateLabel, pair_text(e.u, e.v));
    }

    const auto& vs = s.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!seen.count({vs[i], vs[j]}))
                add(Rule::Totality, pair_text(vs[i], vs[j]) + " unlabelled");
    return rep;
}

SimpleBinaryStructure induced(const SimpleBinaryStructure& s,
                              const std::vector<std::string>& subset) {
    std::set<std::string> keep(subset.begin(), subset.end());
    for (const std::string& v : subset)
        if (!s.has_vertex(v)) fail("unknown vertex " + v);
    std::vector<Edge> edges;
    for (const Edge& e : s.edges())
        if (keep.count(e.u) && keep.count(e.v)) edges.push_back(e);
    return SimpleBinaryStructure(s.n(), s.m(),
                                 std::vector<std::string>(keep.begin(), keep.end()),
                                 std::move(edges));
}

namespace {

// Backtracking search for label-preserving injections of the pattern into the
// host, pattern vertices in most-constrained-first order. Used both for full
// isomorphism (lex-least bijection) and copy enumeration (all images).
struct Matcher {
    const SimpleBinaryStructure& pat;
    const SimpleBinaryStructure& host;
    std::vector<std::string> order;        // pattern vertices, search order
    std::vector<std::string> assigned;     // parallel images
    std::vector<bool> used;                // host vertex taken, by index

    Matcher(const SimpleBinaryStructure& p, const SimpleBinaryStructure& h)
        : pat(p), host(h), used(h.vertices().size(), false) {
        order = pat.vertices();
        std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
            int da = 0, db = 0;
            for (const Edge& e : pat.edges()) {
                if (e.u == a || e.v == a) ++da;
                if (e.u == b || e.v == b) ++db;
            }
            if (da != db) return da > db;
            return a < b;
        });
    }

    bool consistent(const std::string& p, const std::string& cand) const {
        if (pair_codes(pat, p, p) != pair_codes(host, cand, cand)) return false;
        for (std::size_t i = 0; i < assigned.size(); ++i)
            if (pair_codes(pat, p, order[i]) != pair_codes(host, cand, assigned[i]))
                return false;
        return true;
    }

    // Visit every full assignment; fn returns true to stop the search.
    template <typename Fn> bool search(Fn&& fn) {
        if (assigned.size() == order.size()) return fn();
        const std::string& p = order[assigned.size()];
        const auto& hv = host.vertices();
        for (std::size_t c = 0; c < hv.size(); ++c) {
            if (used[c] || !consistent(p, hv[c])) continue;
            used[c] = true;
            assigned.push_back(hv[c]);
            if (search(fn)) return true;
            assigned.pop_back();
            used[c] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::map<std::string, std::string>>
isomorphic(const SimpleBinaryStructure& a, const SimpleBinaryStructure& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    if (a.vertices().size() != b.vertices().size()) return std::nullopt;

    // Lex-least bijection: map a's vertices in order, trying b's in order.
    std::map<std::string, std::string> f;
    std::vector<bool> used(b.vertices().size(), false);
    std::vector<std::string> image;

    auto consistent = [&](const std::string& p, const std::string& cand) {
        if (pair_codes(a, p, p) != pair_codes(b, cand, cand)) return false;
        for (std::size_t i = 0; i < image.size(); ++i)
            if (pair_codes(a, p, a.vertices()[i]) != pair_codes(b, cand, image[i]))
                return false;
        return true;
    };

    std::function<bool()> go = [&]() -> bool {
        if (image.size() == a.vertices().size()) return true;
        const std::string& p = a.vertices()[image.size()];
        for (std::size_t c = 0; c < b.vertices().size(); ++c) {
            if (used[c] || !consistent(p, b.vertices()[c])) continue;
            used[c] = true;
            image.push_back(b.vertices()[c]);
            if (go()) return true;
            image.pop_back();
            used[c] = false;
        }
        return false;
    };
    if (!go()) return std::nullopt;
    for (std::size_t i = 0; i < image.size(); ++i) f[a.vertices()[i]] = image[i];
    return f;
}

CopySet enumerate_copies(const SimpleBinaryStructure& host,
                         const SimpleBinaryStructure& pattern) {
    if (host.n() != pattern.n() || host.m() != pattern.m())
        fail("host and pattern disagree on (n, m)");
    std::set<std::vector<std::string>> found;
    Matcher mt(pattern, host);
    mt.search([&]() {
        std::vector<std::string> img = mt.assigned;
        std::sort(img.begin(), img.end());
        found.insert(std::move(img));
        return false;
    });
    CopySet cs{host, pattern, {found.begin(), found.end()}};
    return cs;
}

SimpleBinaryStructure generate_random(int n, int m, int vertex_count,
                                      std::uint64_t seed) {
    if (m < 0 || m > n || m + 2 * (n - m) < 1)
        fail("invalid relation counts (n=" + std::to_string(n) +
             ", m=" + std::to_string(m) + ")");
    if (vertex_count < 0) fail("negative vertex count");

    int width = 1;
    for (int t = vertex_count - 1; t >= 10; t /= 10) ++width;
    std::vector<std::string> names;
    for (int i = 0; i < vertex_count; ++i) {
        std::string d = std::to_string(i);
        names.push_back("v" + std::string(width - d.size(), '0') + d);
    }

    std::mt19937_64 gen(seed);
    int labels = m + 2 * (n - m);
    std::vector<Edge> edges;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j) {
            int r = static_cast<int>(gen() % static_cast<std::uint64_t>(labels));
            EdgeLabel lab;
            if (r < m) {
                lab = {LabelKind::Sym, r, ""};
            } else {
                int q = r - m;
                lab = {LabelKind::Dir, m + q / 2, q % 2 == 0 ? names[j] : names[i]};
            }
            edges.push_back({names[i], names[j], lab});
        }
    return SimpleBinaryStructure(n, m, std::move(names), std::move(edges));
}

namespace {

SimpleBinaryStructure uniform_graph(int vertex_count, int label_index) {
    if (vertex_count < 0) fail("negative vertex count");
    int width = 1;
    for (int t = vertex_count - 1; t >= 10; t /= 10) ++width;
    std::vector<std::string> names;
    for (int i = 0; i < vertex_count; ++i) {
        std::string d = std::to_string(i);
        names.push_back("v" + std::string(width - d.size(), '0') + d);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j)
            edges.push_back({names[i], names[j], {LabelKind::Sym, label_index, ""}});
    return SimpleBinaryStructure(2, 2, std::move(names), std::move(edges));
}

} // namespace

SimpleBinaryStructure complete_graph(int vertex_count) {
    return uniform_graph(vertex_count, 1);
}

SimpleBinaryStructure edgeless_graph(int vertex_count) {
    return uniform_graph(vertex_count, 0);
}

} // namespace rrlab
