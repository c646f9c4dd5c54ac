#include "rrlab/triples.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

bool triple_less(const Triple& a, const Triple& b) {
    if (set_less(a.B, b.B)) return true;
    if (set_less(b.B, a.B)) return false;
    if (set_less(a.X, b.X)) return true;
    if (set_less(b.X, a.X)) return false;
    return set_less(a.Y, b.Y);
}

void validate_triple(const Triple& t) {
    if (t.B.alphabet() != t.X.alphabet() || t.B.alphabet() != t.Y.alphabet())
        fail("triple parts use different alphabets");
    if (!(set_union(t.X, t.Y) == t.B)) fail("B is not X ∪ Y");
    if (t.X == t.Y) fail("X and Y coincide");
    if (!strongly_similar(t.X, t.Y)) fail("X and Y are not strongly similar");
    if (!classify_set(t.B).strongly_diagonal) fail("B is not strongly diagonal");
    SeqSet core = set_intersection(t.X, t.Y);
    const Seq* longest = nullptr;
    for (const Seq& z : t.B)
        if (!core.contains(z) && (!longest || longest->length() < z.length()))
            longest = &z;
    if (!longest) fail("X and Y coincide");
    if (!t.X.contains(*longest))
        fail("the longest element outside X ∩ Y lies in Y, not X");
}

Seq pivot_element(const Triple& t) {
    SeqSet core = set_intersection(t.X, t.Y);
    const Seq* longest = nullptr;
    for (const Seq& z : t.B)
        if (!core.contains(z) && (!longest || longest->length() < z.length()))
            longest = &z;
    if (!longest) fail("X and Y coincide");
    return *longest;
}

Seq stretch_element(const Seq& z, const Seq& x) {
    if (z.alphabet() != x.alphabet()) fail("alphabet mismatch");
    if (z.length() < x.length()) return z;
    if (z.length() == x.length()) {
        if (z == x) fail("the pivot itself is not stretched");
        fail("cannot stretch " + z.label() + ": same length as the pivot " + x.label());
    }
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(z.length()) + 1);
    for (int i = 0; i <= x.length(); ++i) digits.push_back(z[i]);
    for (int i = x.length(); i < z.length(); ++i) digits.push_back(z[i]);
    return Seq(z.alphabet(), std::move(digits));
}

std::vector<Triple> enumerate_triples(const SeqSet& ambient, const SeqSet& shape) {
    if (!classify_set(ambient).strongly_diagonal)
        fail("ambient set is not strongly diagonal");
    std::vector<SeqSet> copies = similar_subsets(ambient, shape);

    std::vector<Triple> out;
    for (const SeqSet& X : copies)
        for (const SeqSet& Y : copies) {
            if (X == Y) continue;
            Triple t{set_union(X, Y), X, Y};
            SeqSet core = set_intersection(X, Y);
            const Seq* longest = nullptr;
            for (const Seq& z : t.B)
                if (!core.contains(z) && (!longest || longest->length() < z.length()))
                    longest = &z;
            if (!longest || !X.contains(*longest)) continue;
            out.push_back(std::move(t));
        }
    std::sort(out.begin(), out.end(), triple_less);
    return out;
}

bool triple_equiv(const Triple& a, const Triple& b) {
    auto f = strong_similarity_map(a.B, b.B);
    if (!f) return false;
    std::vector<Seq> xi, yi;
    for (const Seq& s : a.X) xi.push_back(f->at(s));
    for (const Seq& s : a.Y) yi.push_back(f->at(s));
    return SeqSet(a.B.alphabet(), std::move(xi)) == b.X &&
           SeqSet(a.B.alphabet(), std::move(yi)) == b.Y;
}

std::array<Triple, 3> stretch_variants(const Triple& t, const DiagonalizationMap& diag) {
    validate_triple(t);
    Seq x = pivot_element(t);

    int needed = 0;
    for (const Seq& z : t.B) needed = std::max(needed, z.length() + 1);
    if (needed > diag.depth())
        fail("stretched sequences of length up to " + std::to_string(needed) +
             " exceed the diagonalization depth " + std::to_string(diag.depth()));

    std::vector<Seq> stretched_rest, stretched_x_side, stretched_y;
    for (const Seq& z : t.B)
        if (!(z == x)) stretched_rest.push_back(stretch_element(z, x));
    for (const Seq& z : t.X)
        if (!(z == x)) stretched_x_side.push_back(stretch_element(z, x));
    for (const Seq& z : t.Y) stretched_y.push_back(stretch_element(z, x));

    std::array<Seq, 3> pivots{x.append(0), x.append(1), x};
    std::array<Triple, 3> out{Triple{SeqSet(t.B.alphabet()), SeqSet(t.B.alphabet()),
                                     SeqSet(t.B.alphabet())},
                              Triple{SeqSet(t.B.alphabet()), SeqSet(t.B.alphabet()),
                                     SeqSet(t.B.alphabet())},
                              Triple{SeqSet(t.B.alphabet()), SeqSet(t.B.alphabet()),
                                     SeqSet(t.B.alphabet())}};
    for (int j = 0; j < 3; ++j) {
        std::vector<Seq> bj = stretched_rest, xj = stretched_x_side;
        bj.push_back(pivots[static_cast<std::size_t>(j)]);
        xj.push_back(pivots[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(j)] =
            Triple{diag.apply(SeqSet(t.B.alphabet(), std::move(bj))),
                   diag.apply(SeqSet(t.B.alphabet(), std::move(xj))),
                   diag.apply(SeqSet(t.B.alphabet(), stretched_y))};
    }
    return out;
}

std::vector<Triple> class_representatives(const std::vector<Triple>& triples) {
    std::vector<Triple> reps;
    std::vector<std::vector<Triple>> classes;
    for (const Triple& t : triples) {
        bool placed = false;
        for (auto& cls : classes)
            if (triple_equiv(cls.front(), t)) {
                cls.push_back(t);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({t});
    }
    for (auto& cls : classes) {
        const Triple* best = nullptr;
        for (const Triple& t : cls) {
            if (!best) { best = &t; continue; }
            auto lp = levels(t.B), lb = levels(best->B);
            if (lp < lb || (lp == lb && triple_less(t, *best))) best = &t;
        }
        reps.push_back(*best);
    }
    std::sort(reps.begin(), reps.end(), triple_less);
    return reps;
}

std::vector<SignatureEntry>
signature(const SeqSet& B, const std::vector<Triple>& representatives,
          const std::map<SeqSet, int, SeqSetLess>& colour_of) {
    std::vector<SignatureEntry> out;
    for (const Triple& rep : representatives) {
        auto f = strong_similarity_map(rep.B, B);
        if (!f) { out.push_back(SignatureEntry::Absent); continue; }
        std::vector<Seq> xi, yi;
        for (const Seq& s : rep.X) xi.push_back(f->at(s));
        for (const Seq& s : rep.Y) yi.push_back(f->at(s));
        SeqSet X(B.alphabet(), std::move(xi)), Y(B.alphabet(), std::move(yi));
        auto cx = colour_of.find(X);
        auto cy = colour_of.find(Y);
        if (cx == colour_of.end() || cy == colour_of.end())
            fail("colouring does not cover a copy required by the signature");
        out.push_back(cx->second == cy->second ? SignatureEntry::Eq : SignatureEntry::Neq);
    }
    return out;
}

} // namespace rrlab
