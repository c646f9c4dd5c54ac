#include "rrlab/encoding.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

EncodingParams::EncodingParams(int n_, int m_) : n(n_), m(m_) {
    if (m < 0 || m > n) fail("symmetry number m must lie in [0, n]");
    if (alphabet() < 2)
        fail("alphabet m + 2(n - m) = " + std::to_string(alphabet()) +
             " is below 2; use the direct constructions for degenerate signatures");
}

SimpleBinaryStructure decode(const SeqSet& S, const EncodingParams& p,
                             bool strict_index) {
    if (S.alphabet() != p.alphabet())
        fail("sequence alphabet " + std::to_string(S.alphabet()) +
             " does not match m + 2(n - m) = " + std::to_string(p.alphabet()));

    std::vector<std::string> vertices;
    for (const Seq& s : S) vertices.push_back(s.label());

    std::vector<Edge> edges;
    const auto& elems = S.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const Seq* x = &elems[i]; // shorter (elements are in shortlex order)
            const Seq* y = &elems[j];
            EdgeLabel lab;
            if (x->length() == y->length()) {
                bool xy = prec(*x, *y);
                const Seq& later = xy ? *y : *x;
                if (p.m > 0)
                    lab = {LabelKind::Sym, 0, ""};
                else
                    lab = {LabelKind::Dir, 0, later.label()};
            } else {
                int q = passing_number(*y, *x);
                if (q < p.m) {
                    lab = {LabelKind::Sym, q, ""};
                } else {
                    int e = q - p.m;
                    int idx;
                    if (strict_index) {
                        int num = (e % 2 == 0) ? q : q - 1;
                        if (num % 2 != 0)
                            fail("strict index (m + " + std::to_string(num) +
                                 "/2) is fractional for passing number " +
                                 std::to_string(q) + " at pair {" + x->label() + "," +
                                 y->label() + "}");
                        idx = p.m + num / 2;
                        if (idx < p.m || idx >= p.n)
                            fail("strict index " + std::to_string(idx) +
                                 " escapes [m, n) for passing number " +
                                 std::to_string(q) + " at pair {" + x->label() + "," +
                                 y->label() + "}");
                    } else {
                        idx = p.m + (e % 2 == 0 ? e : e - 1) / 2;
                    }
                    lab = {LabelKind::Dir, idx,
                           (e % 2 == 0) ? y->label() : x->label()};
                }
            }
            edges.push_back({x->label(), y->label(), lab});
        }
    return SimpleBinaryStructure(p.n, p.m, std::move(vertices), std::move(edges));
}

std::optional<Seq> extension_witness(const SeqSet& V,
                                     const std::map<Seq, int>& assignment,
                                     int max_length) {
    if (V.size() == 0) return std::nullopt;
    int longest = 0;
    for (const Seq& v : V) longest = std::max(longest, v.length());
    for (const auto& [x, digit] : assignment) {
        if (!V.contains(x)) fail("constrained sequence " + x.label() + " is outside V");
        if (x.length() >= longest)
            fail("constrained sequence " + x.label() +
                 " is not shorter than the longest element of V");
        if (digit < 0 || digit >= V.alphabet())
            fail("assigned digit " + std::to_string(digit) + " for " + x.label() +
                 " is outside the alphabet");
    }

    std::vector<Seq> cands(V.begin(), V.end());
    std::stable_sort(cands.begin(), cands.end(), [](const Seq& a, const Seq& b) {
        return a.length() > b.length();
    });
    for (const Seq& y : cands) {
        if (y.length() > max_length) continue;
        bool ok = true;
        for (const auto& [x, digit] : assignment)
            if (y.length() <= x.length() || y[x.length()] != digit) { ok = false; break; }
        if (ok) return y;
    }
    return std::nullopt;
}

} // namespace rrlab
