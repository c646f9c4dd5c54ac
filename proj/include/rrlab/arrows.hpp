#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rrlab/colourings.hpp"
#include "rrlab/structures.hpp"

namespace rrlab {

enum class ColouringMode { Bounded, Delta };

struct ArrowQuery {
    SimpleBinaryStructure A, B, C;
    int k = 1;
    ColouringMode mode = ColouringMode::Bounded;
    std::int64_t budget = 0; // 0: default_budget()
    int workers = 1;
};

struct ArrowStats {
    std::int64_t colourings = 0;
    std::int64_t ms = 0;
};

struct ArrowCertificate {
    bool holds = false;
    // Per canonical colouring, the vertex set of the first rainbow B-copy.
    std::vector<std::vector<std::string>> witnesses;
    std::optional<Colouring> counterexample;
    ArrowStats stats;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// 10^7 colourings, or the RRLAB_BUDGET environment override.
std::int64_t default_budget();

// One colouring per colour-renaming class, as block indices in first-use
// order: bounded mode keeps classes with at most k copies per colour, delta
// mode those where no colour holds k+1 copies sharing a kernel.
std::vector<std::vector<int>> enumerate_colourings_canonical(const CopySet& cs, int k,
                                                             ColouringMode mode,
                                                             std::int64_t budget = 0);

ArrowCertificate verify_arrow(const ArrowQuery& q);

// Least index in [1, limit] whose generated host makes the arrow hold;
// on_result sees every attempted index with its certificate.
std::optional<std::pair<int, ArrowCertificate>>
min_host_search(const SimpleBinaryStructure& B, const SimpleBinaryStructure& C, int k,
                ColouringMode mode,
                const std::function<SimpleBinaryStructure(int)>& host_family, int limit,
                std::int64_t budget = 0, int workers = 1,
                const std::function<void(int, const ArrowCertificate&)>& on_result = {});

} // namespace rrlab
