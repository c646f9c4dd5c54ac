#pragma once

#include <optional>
#include <vector>

#include "rrlab/structures.hpp"

namespace rrlab {

// Colour per copy, parallel to copies.copies.
struct Colouring {
    CopySet copies;
    std::vector<int> colours;
};

// Family of copies sharing a kernel, each member exceeding it by one vertex.
struct DeltaSystem {
    std::vector<std::vector<std::string>> members; // >= 2, sorted
    std::vector<std::string> kernel;
};

bool is_k_bounded(const Colouring& c, int k);

// One system per (|pattern|-1)-subset of host vertices contained in at least
// two copies; sorted by kernel.
std::vector<DeltaSystem> maximal_delta_systems(const CopySet& cs);

struct DeltaCheck {
    bool ok = true;
    std::optional<DeltaSystem> witness; // monochromatic (k+1)-member system
};

DeltaCheck is_k_delta(const Colouring& c, int k);

// First copy of B in the colouring's host on which the colouring of the
// pattern copies inside is injective.
std::optional<std::vector<std::string>>
rainbow_copy_search(const SimpleBinaryStructure& B, const Colouring& c);

// Recolour just enough copies with fresh colours that every kernel family
// with k+1 same-coloured members loses one of them. The input must tolerate
// k+1 repetitions (no k+2 monochromatic family); the output tolerates k.
Colouring reduce_colouring(const Colouring& c, int k);

} // namespace rrlab
