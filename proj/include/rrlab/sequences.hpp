#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rrlab {

// A finite sequence of digits drawn from {0, ..., alphabet-1}.
class Seq {
public:
    Seq() = default;
    Seq(int alphabet, std::vector<int> entries);

    int alphabet() const { return alphabet_; }
    int length() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    bool prefix_of(const Seq& other) const;
    Seq prefix(int len) const;
    Seq append(int digit) const;

    // Text form used in files and as vertex identifiers: "0,1" and "()" for the
    // empty sequence.
    std::string label() const;

    friend bool operator==(const Seq&, const Seq&) = default;

private:
    int alphabet_ = 2;
    std::vector<int> entries_;
};

// Shortlex: by length, then entrywise. Alphabet is compared first so that mixed
// containers stay well ordered.
bool operator<(const Seq&, const Seq&);

// Longest common prefix.
Seq meet(const Seq& x, const Seq& y);

// The digit y(|x|); requires |x| < |y|.
int passing_number(const Seq& y, const Seq& x);

// Order on incomparable sequences: x before y iff x(|meet|) < y(|meet|).
bool prec(const Seq& x, const Seq& y);

// A finite set of sequences over one alphabet, kept shortlex sorted and
// duplicate free.
class SeqSet {
public:
    SeqSet() = default;
    explicit SeqSet(int alphabet);
    SeqSet(int alphabet, std::vector<Seq> elements);

    int alphabet() const { return alphabet_; }
    int size() const { return static_cast<int>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    const std::vector<Seq>& elements() const { return elements_; }
    const Seq& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
    bool contains(const Seq& s) const;
    SeqSet with(const Seq& s) const;

    std::vector<Seq>::const_iterator begin() const { return elements_.begin(); }
    std::vector<Seq>::const_iterator end() const { return elements_.end(); }

    friend bool operator==(const SeqSet&, const SeqSet&) = default;

private:
    int alphabet_ = 2;
    std::vector<Seq> elements_;
};

bool set_less(const SeqSet& a, const SeqSet& b);

struct SeqSetLess {
    bool operator()(const SeqSet& a, const SeqSet& b) const { return set_less(a, b); }
};

SeqSet set_union(const SeqSet& a, const SeqSet& b);
SeqSet set_intersection(const SeqSet& a, const SeqSet& b);
SeqSet set_difference(const SeqSet& a, const SeqSet& b);

// Sorted list of lengths occurring in S.
std::vector<int> levels(const SeqSet& S);

// All pairwise meets of S; contains S itself since meet(x, x) = x.
SeqSet closure(const SeqSet& S);

// Number of immediate successors of x inside S: elements y with x a proper
// prefix of y and nothing of S strictly between.
int set_degree(const Seq& x, const SeqSet& S);

// Every sequence of length <= depth over the alphabet.
SeqSet full_tree(int alphabet, int depth);

struct SetClassification {
    SeqSet closure;
    std::vector<int> levels;
    bool transversal = false;       // no two elements of S share a length
    bool antichain = false;         // no element is a prefix of another
    bool closed_by_levels = false;  // prefixes of members at member lengths are members
    bool diagonal = false;          // antichain, transversal closure, closure degrees <= 2
    bool strongly_diagonal = false; // diagonal with zero passing at foreign meet
                                    // levels and branching digits in {0, 1}
};

SetClassification classify_set(const SeqSet& S);

enum class MapProperty {
    Order,    // meet(x,y) extends-order is preserved both ways
    Level,    // strict order of meet lengths preserved both ways
    LevelImp, // strict order of meet lengths preserved forward only
    Pnp,      // |z| > |x| implies z(|x|) = f(z)(|f(x)|)
    PnpStrong,// |z| > |meet(x,y)| implies z(|meet|) = f(z)(|meet of images|)
    Lexico,   // x before y implies f(x) before f(y)
};

struct PropertyCheck {
    bool ok = true;
    std::vector<Seq> witness; // violating tuple when ok is false
};

// Evaluates the property for every tuple drawn from R (repetition allowed).
// Every element of R must lie in the domain of f.
PropertyCheck check_map_property(const std::map<Seq, Seq>& f, const SeqSet& R,
                                 MapProperty prop);

// The unique bijection R -> S satisfying Order, Level and PnpStrong, if it
// exists. Candidates are forced: lengths must correspond in order and ties are
// resolved by the lexicographic order, so we pair shortlex ranks and verify.
std::optional<std::map<Seq, Seq>> strong_similarity_map(const SeqSet& R, const SeqSet& S);

bool strongly_similar(const SeqSet& R, const SeqSet& S);

// All subsets of T strongly similar to F, canonically ordered.
std::vector<SeqSet> similar_subsets(const SeqSet& T, const SeqSet& F);

// Membership test for the n-level strong subtrees of T. T itself must be meet
// closed and closed by levels; throws otherwise.
bool is_strong_subtree(const SeqSet& S, const SeqSet& T, int level_count);

// Injection of the sequences of length <= depth into a strongly diagonal set,
// preserving LevelImp, Pnp and Lexico. Values are computed on demand from a
// fixed event layout, so images can be requested without materializing the
// whole (exponentially large) table.
//
// Layout: domain nodes are processed level by level. Each internal domain node
// v contributes one timeline slot per binary branch point of its image (one
// "leaf join" where the image of v itself splits off, then joins separating
// the child subtrees), and every domain node contributes one slot holding the
// endpoint of its image. Within the level of v all branch slots precede all
// endpoint slots; this makes the images of two domain sequences diverge
// exactly at the slot of their planned branch point.
class DiagonalizationMap {
public:
    DiagonalizationMap(int alphabet, int depth);

    int alphabet() const { return alphabet_; }
    int depth() const { return depth_; }

    // Length of the image of z without building it.
    std::int64_t image_length(const Seq& z) const;

    Seq apply(const Seq& z) const;
    SeqSet apply(const SeqSet& S) const;

    // Materialized domain -> image table; only sensible for small depths.
    std::map<Seq, Seq> table() const;

private:
    int digit_at(const Seq& z, std::int64_t pos) const;

    int alphabet_ = 2;
    int depth_ = 0;
    std::vector<std::int64_t> node_count_; // alphabet^g for g <= depth
    std::vector<std::int64_t> slab_start_; // first timeline slot of each level
    std::vector<std::int64_t> join_count_; // branch slots inside each level
};

DiagonalizationMap strong_diagonalization(int alphabet, int depth);

} // namespace rrlab
