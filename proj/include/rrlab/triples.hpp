#pragma once

#include <array>
#include <map>
#include <vector>

#include "rrlab/sequences.hpp"

namespace rrlab {

// Two overlapping copies X, Y of a common shape inside B = X ∪ Y, oriented so
// that the longest sequence outside X ∩ Y lies in X.
struct Triple {
    SeqSet B, X, Y;
};

bool triple_less(const Triple& a, const Triple& b);

// Throws unless B = X ∪ Y, X ≠ Y, X and Y are strongly similar, B is
// strongly diagonal, and the pivot rule holds.
void validate_triple(const Triple& t);

// Longest element of B outside X ∩ Y.
Seq pivot_element(const Triple& t);

// z unchanged when shorter than x; its digit at position |x| duplicated when
// longer. Equal length (z ≠ x) is an error.
Seq stretch_element(const Seq& z, const Seq& x);

// All triples with X, Y drawn from the subsets of the ambient strongly
// similar to the shape, sorted by (B, X, Y).
std::vector<Triple> enumerate_triples(const SeqSet& ambient, const SeqSet& shape);

// B's strongly similar and the unique similarity carries X to X and Y to Y.
bool triple_equiv(const Triple& a, const Triple& b);

// Replace the pivot x by x⌢0, x⌢1, x itself while stretching everything
// longer, then push through the diagonalization. The results are equivalent
// to t, share one Y, and their X's form a kernel family.
std::array<Triple, 3> stretch_variants(const Triple& t, const DiagonalizationMap& diag);

// One representative per equivalence class: least level profile of B, then
// least (B, X, Y).
std::vector<Triple> class_representatives(const std::vector<Triple>& triples);

enum class SignatureEntry { Eq, Neq, Absent };

// Per class: Absent when B is not strongly similar to the representative's B;
// otherwise the unique similarity forces the (X, Y) pair realizing the class
// inside B, and the entry compares their colours.
std::vector<SignatureEntry>
signature(const SeqSet& B, const std::vector<Triple>& representatives,
          const std::map<SeqSet, int, SeqSetLess>& colour_of);

} // namespace rrlab
