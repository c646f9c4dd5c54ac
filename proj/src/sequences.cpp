#include "rrlab/sequences.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rrlab {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_same_alphabet(const Seq& x, const Seq& y) {
    if (x.alphabet() != y.alphabet())
        fail("alphabet mismatch: " + std::to_string(x.alphabet()) + " vs " +
             std::to_string(y.alphabet()));
}

// Pairwise meet lengths for an indexed set; meet(i, i) has length |s_i|.
struct MeetTable {
    int n = 0;
    std::vector<int> len; // n*n

    explicit MeetTable(const std::vector<Seq>& elems) {
        n = static_cast<int>(elems.size());
        len.assign(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < n; ++i) {
            at(i, i) = elems[static_cast<std::size_t>(i)].length();
            for (int j = i + 1; j < n; ++j) {
                const auto& a = elems[static_cast<std::size_t>(i)].entries();
                const auto& b = elems[static_cast<std::size_t>(j)].entries();
                int m = 0;
                int lim = static_cast<int>(std::min(a.size(), b.size()));
                while (m < lim && a[static_cast<std::size_t>(m)] == b[static_cast<std::size_t>(m)]) ++m;
                at(i, j) = m;
                at(j, i) = m;
            }
        }
    }

    int& at(int i, int j) { return len[static_cast<std::size_t>(i) * n + j]; }
    int at(int i, int j) const { return len[static_cast<std::size_t>(i) * n + j]; }

    // meet(i, j) is a prefix of element k?
    bool meet_prefix_of(int i, int j, int k, const std::vector<Seq>& elems) const {
        int m = at(i, j);
        if (m > elems[static_cast<std::size_t>(k)].length()) return false;
        return at(i, k) >= m || at(j, k) >= m;
    }
};

} // namespace

Seq::Seq(int alphabet, std::vector<int> entries)
    : alphabet_(alphabet), entries_(std::move(entries)) {
    if (alphabet_ < 2) fail("sequence alphabet must be at least 2");
    for (int d : entries_)
        if (d < 0 || d >= alphabet_)
            fail("digit " + std::to_string(d) + " out of range for alphabet " +
                 std::to_string(alphabet_));
}

bool Seq::prefix_of(const Seq& other) const {
    if (length() > other.length()) return false;
    return std::equal(entries_.begin(), entries_.end(), other.entries_.begin());
}

Seq Seq::prefix(int len) const {
    if (len < 0 || len > length()) fail("prefix length out of range");
    return Seq(alphabet_, std::vector<int>(entries_.begin(), entries_.begin() + len));
}

Seq Seq::append(int digit) const {
    std::vector<int> e = entries_;
    e.push_back(digit);
    return Seq(alphabet_, std::move(e));
}

std::string Seq::label() const {
    if (entries_.empty()) return "()";
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    return out.str();
}

bool operator<(const Seq& a, const Seq& b) {
    if (a.alphabet() != b.alphabet()) return a.alphabet() < b.alphabet();
    if (a.length() != b.length()) return a.length() < b.length();
    return a.entries() < b.entries();
}

Seq meet(const Seq& x, const Seq& y) {
    require_same_alphabet(x, y);
    int lim = std::min(x.length(), y.length());
    int m = 0;
    while (m < lim && x[m] == y[m]) ++m;
    return x.prefix(m);
}

int passing_number(const Seq& y, const Seq& x) {
    require_same_alphabet(x, y);
    if (y.length() <= x.length())
        fail("passing number needs |x| < |y|, got |x|=" + std::to_string(x.length()) +
             " |y|=" + std::to_string(y.length()));
    return y[x.length()];
}

bool prec(const Seq& x, const Seq& y) {
    require_same_alphabet(x, y);
    if (x.prefix_of(y) || y.prefix_of(x))
        fail("sequences are comparable; the order applies to incomparable pairs only");
    int m = meet(x, y).length();
    return x[m] < y[m];
}

SeqSet::SeqSet(int alphabet) : alphabet_(alphabet) {
    if (alphabet_ < 2) fail("sequence alphabet must be at least 2");
}

SeqSet::SeqSet(int alphabet, std::vector<Seq> elements)
    : alphabet_(alphabet), elements_(std::move(elements)) {
    if (alphabet_ < 2) fail("sequence alphabet must be at least 2");
    for (const Seq& s : elements_)
        if (s.alphabet() != alphabet_) fail("set element has a different alphabet");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool SeqSet::contains(const Seq& s) const {
    return std::binary_search(elements_.begin(), elements_.end(), s);
}

SeqSet SeqSet::with(const Seq& s) const {
    std::vector<Seq> e = elements_;
    e.push_back(s);
    return SeqSet(alphabet_, std::move(e));
}

bool set_less(const SeqSet& a, const SeqSet& b) {
    if (a.alphabet() != b.alphabet()) return a.alphabet() < b.alphabet();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SeqSet set_union(const SeqSet& a, const SeqSet& b) {
    if (a.alphabet() != b.alphabet()) fail("set union across alphabets");
    std::vector<Seq> e = a.elements();
    e.insert(e.end(), b.begin(), b.end());
    return SeqSet(a.alphabet(), std::move(e));
}

SeqSet set_intersection(const SeqSet& a, const SeqSet& b) {
    if (a.alphabet() != b.alphabet()) fail("set intersection across alphabets");
    std::vector<Seq> e;
    for (const Seq& s : a)
        if (b.contains(s)) e.push_back(s);
    return SeqSet(a.alphabet(), std::move(e));
}

SeqSet set_difference(const SeqSet& a, const SeqSet& b) {
    if (a.alphabet() != b.alphabet()) fail("set difference across alphabets");
    std::vector<Seq> e;
    for (const Seq& s : a)
        if (!b.contains(s)) e.push_back(s);
    return SeqSet(a.alphabet(), std::move(e));
}

std::vector<int> levels(const SeqSet& S) {
    std::set<int> ls;
    for (const Seq& s : S) ls.insert(s.length());
    return std::vector<int>(ls.begin(), ls.end());
}

SeqSet closure(const SeqSet& S) {
    std::vector<Seq> e;
    const auto& elems = S.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        e.push_back(elems[i]);
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            e.push_back(meet(elems[i], elems[j]));
    }
    return SeqSet(S.alphabet(), std::move(e));
}

int set_degree(const Seq& x, const SeqSet& S) {
    int deg = 0;
    for (const Seq& y : S) {
        if (y.length() <= x.length() || !x.prefix_of(y)) continue;
        bool immediate = true;
        for (const Seq& z : S) {
            if (z.length() <= x.length() || z.length() >= y.length()) continue;
            if (x.prefix_of(z) && z.prefix_of(y)) { immediate = false; break; }
        }
        if (immediate) ++deg;
    }
    return deg;
}

SeqSet full_tree(int alphabet, int depth) {
    if (alphabet < 2) fail("sequence alphabet must be at least 2");
    if (depth < 0) fail("tree depth must be nonnegative");
    std::vector<Seq> out;
    std::vector<Seq> level{Seq(alphabet, {})};
    out.push_back(level.front());
    for (int g = 0; g < depth; ++g) {
        std::vector<Seq> next;
        for (const Seq& s : level)
            for (int d = 0; d < alphabet; ++d) next.push_back(s.append(d));
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return SeqSet(alphabet, std::move(out));
}

SetClassification classify_set(const SeqSet& S) {
    SetClassification r;
    r.closure = closure(S);
    r.levels = levels(S);

    const auto& elems = S.elements();
    int n = S.size();
    MeetTable mt(elems);

    r.transversal = true;
    for (int i = 0; i + 1 < n; ++i)
        if (elems[static_cast<std::size_t>(i)].length() ==
            elems[static_cast<std::size_t>(i) + 1].length())
            r.transversal = false; // shortlex order puts equal lengths side by side

    r.antichain = true;
    for (int i = 0; i < n && r.antichain; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mt.at(i, j) == std::min(mt.at(i, i), mt.at(j, j))) { r.antichain = false; break; }

    r.closed_by_levels = true;
    for (const Seq& t : S) {
        for (int l : r.levels) {
            if (l >= t.length()) break;
            if (!S.contains(t.prefix(l))) { r.closed_by_levels = false; break; }
        }
        if (!r.closed_by_levels) break;
    }

    // Diagonal: antichain, closure transversal, closure degrees at most two.
    bool closure_transversal = true;
    {
        const auto& ce = r.closure.elements();
        for (std::size_t i = 0; i + 1 < ce.size(); ++i)
            if (ce[i].length() == ce[i + 1].length()) { closure_transversal = false; break; }
    }
    r.diagonal = r.antichain && closure_transversal;
    if (r.diagonal)
        for (const Seq& v : r.closure)
            if (set_degree(v, r.closure) > 2) { r.diagonal = false; break; }

    r.strongly_diagonal = r.diagonal;
    if (r.strongly_diagonal) {
        for (int i = 0; i < n && r.strongly_diagonal; ++i) {
            for (int j = 0; j < n && r.strongly_diagonal; ++j) {
                if (i == j) continue;
                int m = mt.at(i, j);
                // branching digits stay binary
                if (elems[static_cast<std::size_t>(i)][m] > 1) { r.strongly_diagonal = false; break; }
                // foreign passes read zero at this meet level
                for (int k = 0; k < n; ++k) {
                    if (elems[static_cast<std::size_t>(k)].length() <= m) continue;
                    if (mt.meet_prefix_of(i, j, k, elems)) continue;
                    if (elems[static_cast<std::size_t>(k)][m] != 0) {
                        r.strongly_diagonal = false;
                        break;
                    }
                }
            }
        }
    }
    return r;
}

PropertyCheck check_map_property(const std::map<Seq, Seq>& f, const SeqSet& R,
                                 MapProperty prop) {
    const auto& dom = R.elements();
    int n = R.size();
    std::vector<Seq> img;
    img.reserve(dom.size());
    for (const Seq& x : dom) {
        auto it = f.find(x);
        if (it == f.end()) fail("element " + x.label() + " is outside the domain of the map");
        img.push_back(it->second);
    }

    MeetTable dm(dom), im(img);
    PropertyCheck res;
    auto witness2 = [&](int a, int b) {
        res.ok = false;
        res.witness = {dom[static_cast<std::size_t>(a)], dom[static_cast<std::size_t>(b)]};
    };
    auto witness3 = [&](int a, int b, int c) {
        res.ok = false;
        res.witness = {dom[static_cast<std::size_t>(a)], dom[static_cast<std::size_t>(b)],
                       dom[static_cast<std::size_t>(c)]};
    };
    auto witness4 = [&](int a, int b, int c, int d) {
        res.ok = false;
        res.witness = {dom[static_cast<std::size_t>(a)], dom[static_cast<std::size_t>(b)],
                       dom[static_cast<std::size_t>(c)], dom[static_cast<std::size_t>(d)]};
    };

    switch (prop) {
    case MapProperty::Order:
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int u = z; u < n; ++u) {
                        bool d = dm.meet_prefix_of(x, y, z, dom) &&
                                 dm.at(x, y) <= dm.at(z, u);
                        // meet(x,y) extends into meet(z,u): prefix of one endpoint
                        // and short enough
                        bool i = im.meet_prefix_of(x, y, z, img) &&
                                 im.at(x, y) <= im.at(z, u);
                        if (d != i) { witness4(x, y, z, u); return res; }
                    }
        break;
    case MapProperty::Level:
    case MapProperty::LevelImp:
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    for (int u = z; u < n; ++u) {
                        bool d = dm.at(x, y) < dm.at(z, u);
                        bool i = im.at(x, y) < im.at(z, u);
                        bool bad = (prop == MapProperty::Level) ? (d != i) : (d && !i);
                        if (bad) { witness4(x, y, z, u); return res; }
                    }
        break;
    case MapProperty::Pnp:
        for (int x = 0; x < n; ++x)
            for (int z = 0; z < n; ++z) {
                if (dom[static_cast<std::size_t>(z)].length() <=
                    dom[static_cast<std::size_t>(x)].length())
                    continue;
                int p = dom[static_cast<std::size_t>(x)].length();
                int q = img[static_cast<std::size_t>(x)].length();
                if (img[static_cast<std::size_t>(z)].length() <= q ||
                    dom[static_cast<std::size_t>(z)][p] != img[static_cast<std::size_t>(z)][q]) {
                    witness2(x, z);
                    return res;
                }
            }
        break;
    case MapProperty::PnpStrong:
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    int p = dm.at(x, y);
                    if (dom[static_cast<std::size_t>(z)].length() <= p) continue;
                    int q = im.at(x, y);
                    if (img[static_cast<std::size_t>(z)].length() <= q ||
                        dom[static_cast<std::size_t>(z)][p] != img[static_cast<std::size_t>(z)][q]) {
                        witness3(x, y, z);
                        return res;
                    }
                }
        break;
    case MapProperty::Lexico:
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                int m = dm.at(x, y);
                if (m == dm.at(x, x) || m == dm.at(y, y)) continue; // comparable
                if (dom[static_cast<std::size_t>(x)][m] >= dom[static_cast<std::size_t>(y)][m])
                    continue;
                int mi = im.at(x, y);
                bool incomparable = mi < im.at(x, x) && mi < im.at(y, y);
                if (!incomparable ||
                    img[static_cast<std::size_t>(x)][mi] >= img[static_cast<std::size_t>(y)][mi]) {
                    witness2(x, y);
                    return res;
                }
            }
        break;
    }
    return res;
}

std::optional<std::map<Seq, Seq>> strong_similarity_map(const SeqSet& R, const SeqSet& S) {
    if (R.alphabet() != S.alphabet()) return std::nullopt;
    if (R.size() != S.size()) return std::nullopt;
    int n = R.size();
    // Same lengths must pair with same lengths and length order is preserved,
    // so the length-group profile must agree and the shortlex pairing is the
    // only candidate.
    for (int i = 0; i + 1 < n; ++i) {
        bool re = R[i].length() == R[i + 1].length();
        bool se = S[i].length() == S[i + 1].length();
        if (re != se) return std::nullopt;
    }
    std::map<Seq, Seq> f;
    for (int i = 0; i < n; ++i) f[R[i]] = S[i];
    for (MapProperty p : {MapProperty::Order, MapProperty::Level, MapProperty::PnpStrong})
        if (!check_map_property(f, R, p).ok) return std::nullopt;
    return f;
}

bool strongly_similar(const SeqSet& R, const SeqSet& S) {
    return strong_similarity_map(R, S).has_value();
}

std::vector<SeqSet> similar_subsets(const SeqSet& T, const SeqSet& F) {
    std::vector<SeqSet> out;
    int n = T.size(), k = F.size();
    if (k > n || k == 0) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<Seq> pick;
        pick.reserve(static_cast<std::size_t>(k));
        for (int i : idx) pick.push_back(T[i]);
        SeqSet cand(T.alphabet(), std::move(pick));
        if (strongly_similar(F, cand)) out.push_back(std::move(cand));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

bool is_strong_subtree(const SeqSet& S, const SeqSet& T, int level_count) {
    if (S.alphabet() != T.alphabet()) fail("subtree test across alphabets");
    for (std::size_t i = 0; i < T.elements().size(); ++i)
        for (std::size_t j = i + 1; j < T.elements().size(); ++j)
            if (!T.contains(meet(T.elements()[i], T.elements()[j])))
                fail("ambient tree is not meet closed");
    {
        auto ls = levels(T);
        for (const Seq& t : T)
            for (int l : ls) {
                if (l >= t.length()) break;
                if (!T.contains(t.prefix(l))) fail("ambient tree is not closed by levels");
            }
    }

    for (const Seq& s : S)
        if (!T.contains(s)) return false;
    if (static_cast<int>(levels(S).size()) != level_count) return false;

    SetClassification c = classify_set(S);
    if (!c.closed_by_levels) return false;
    for (std::size_t i = 0; i < S.elements().size(); ++i)
        for (std::size_t j = i + 1; j < S.elements().size(); ++j)
            if (!S.contains(meet(S.elements()[i], S.elements()[j]))) return false;

    for (const Seq& s : S) {
        int ds = set_degree(s, S);
        if (ds != 0 && ds != set_degree(s, T)) return false;
    }
    return true;
}

DiagonalizationMap::DiagonalizationMap(int alphabet, int depth)
    : alphabet_(alphabet), depth_(depth) {
    if (alphabet_ < 2) fail("sequence alphabet must be at least 2");
    if (depth_ < 0) fail("diagonalization depth must be nonnegative");
    node_count_.resize(static_cast<std::size_t>(depth_) + 1);
    join_count_.resize(static_cast<std::size_t>(depth_) + 1);
    slab_start_.resize(static_cast<std::size_t>(depth_) + 2);
    std::int64_t nodes = 1;
    slab_start_[0] = 0;
    for (int g = 0; g <= depth_; ++g) {
        node_count_[static_cast<std::size_t>(g)] = nodes;
        std::int64_t joins = (g < depth_) ? nodes * alphabet_ : 0;
        join_count_[static_cast<std::size_t>(g)] = joins;
        slab_start_[static_cast<std::size_t>(g) + 1] =
            slab_start_[static_cast<std::size_t>(g)] + joins + nodes;
        if (slab_start_[static_cast<std::size_t>(g) + 1] > (std::int64_t{1} << 42))
            fail("diagonalization depth too large to realize");
        if (g < depth_) nodes *= alphabet_;
    }
}

std::int64_t DiagonalizationMap::image_length(const Seq& z) const {
    if (z.alphabet() != alphabet_) fail("sequence alphabet does not match the map");
    if (z.length() > depth_)
        fail("sequence of length " + std::to_string(z.length()) +
             " is outside the domain (depth " + std::to_string(depth_) + ")");
    int g = z.length();
    std::int64_t rank = 0;
    for (int i = 0; i < g; ++i) rank = rank * alphabet_ + z[i];
    return slab_start_[static_cast<std::size_t>(g)] + join_count_[static_cast<std::size_t>(g)] +
           rank;
}

int DiagonalizationMap::digit_at(const Seq& z, std::int64_t pos) const {
    // Locate the level owning this slot.
    int g = 0;
    while (slab_start_[static_cast<std::size_t>(g) + 1] <= pos) ++g;
    std::int64_t off = pos - slab_start_[static_cast<std::size_t>(g)];
    // Rank of the length-g prefix of z.
    std::int64_t zrank = 0;
    for (int i = 0; i < g; ++i) zrank = zrank * alphabet_ + z[i];

    if (off >= join_count_[static_cast<std::size_t>(g)]) {
        // Endpoint slot of some image at this level: carries the passing digit
        // of every strictly longer domain sequence, zero otherwise.
        return (g < z.length()) ? z[g] : 0;
    }

    std::int64_t node = off / alphabet_;
    int slot = static_cast<int>(off % alphabet_);
    if (node != zrank) return 0; // branch point of a foreign subtree
    if (slot == 0) {
        // The node's own image splits off the rest of its subtree here.
        return (z.length() == g) ? 0 : 1;
    }
    if (z.length() == g) return 0;
    int k = alphabet_ - slot; // join gathering child bundles 0..k
    int c = z[g];
    if (c > k) return 0; // z branched away at an earlier join
    return (c == k) ? 1 : 0;
}

Seq DiagonalizationMap::apply(const Seq& z) const {
    std::int64_t len = image_length(z);
    if (len > 50'000'000)
        throw std::length_error("diagonalization image too long to materialize");
    std::vector<int> digits(static_cast<std::size_t>(len));
    for (std::int64_t p = 0; p < len; ++p)
        digits[static_cast<std::size_t>(p)] = digit_at(z, p);
    return Seq(alphabet_, std::move(digits));
}

SeqSet DiagonalizationMap::apply(const SeqSet& S) const {
    std::vector<Seq> out;
    out.reserve(static_cast<std::size_t>(S.size()));
    for (const Seq& s : S) out.push_back(apply(s));
    return SeqSet(alphabet_, std::move(out));
}

std::map<Seq, Seq> DiagonalizationMap::table() const {
    std::int64_t total = slab_start_[static_cast<std::size_t>(depth_) + 1];
    if (total > 2'000'000)
        throw std::length_error("diagonalization domain too large to materialize");
    std::map<Seq, Seq> t;
    for (const Seq& z : full_tree(alphabet_, depth_)) t[z] = apply(z);
    return t;
}

DiagonalizationMap strong_diagonalization(int alphabet, int depth) {
    return DiagonalizationMap(alphabet, depth);
}

} // namespace rrlab
