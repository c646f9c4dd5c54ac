#pragma once

#include <map>
#include <optional>

#include "rrlab/sequences.hpp"
#include "rrlab/structures.hpp"

namespace rrlab {

// Relation counts for the sequence decoding; the tree alphabet is
// m + 2(n - m): one digit per symmetric label, two per oriented one.
struct EncodingParams {
    int n, m;

    EncodingParams(int n_, int m_);
    int alphabet() const { return m + 2 * (n - m); }
};

// Read a sequence set as a structure: vertices are the sequences, the label
// of a pair comes from the passing number of the longer at the shorter.
// Passing number q: q < m gives sym(q); otherwise q - m even gives
// dir(m + (q-m)/2) headed at the longer, odd gives dir(m + (q-m-1)/2) headed
// at the shorter. Same-length pairs with x before y: sym(0) when m > 0,
// dir(0) headed at y when m = 0.
//
// strict_index replaces the oriented indices by the uncorrected forms
// m + q/2 and m + (q-1)/2 and errors whenever those are fractional or
// outside [m, n).
SimpleBinaryStructure decode(const SeqSet& S, const EncodingParams& p,
                             bool strict_index = false);

// First y in V (longest first, then shortlex) with |y| <= max_length,
// |y| > |x| and y(|x|) = assignment(x) for every constrained x.
std::optional<Seq> extension_witness(const SeqSet& V,
                                     const std::map<Seq, int>& assignment,
                                     int max_length);

} // namespace rrlab
