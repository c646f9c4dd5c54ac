#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rrlab {

enum class LabelKind { Sym, Dir };

// Label on an unordered vertex pair: sym(i) with i below the symmetry
// number, or dir(i, head) with i in [m, n) and head one of the endpoints.
struct EdgeLabel {
    LabelKind kind = LabelKind::Sym;
    int index = 0;
    std::string head; // Dir only

    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct Edge {
    std::string u, v;
    EdgeLabel label;
};

// Finite structure with n binary relation symbols of which the first m are
// symmetric and the rest oriented. Construction normalizes order but keeps
// whatever labelling it is given; validate() reports rule violations.
class SimpleBinaryStructure {
public:
    SimpleBinaryStructure(int n, int m, std::vector<std::string> vertices,
                          std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return m_; }
    int label_count() const { return m_ + 2 * (n_ - m_); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_vertex(const std::string& v) const;

    // Label on the unordered pair {u, v}; absent if the pair is unlabelled.
    std::optional<EdgeLabel> label_of(const std::string& u, const std::string& v) const;

private:
    int n_, m_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

enum class Rule {
    SymmetryNumber, // 0 <= m <= n
    UnknownVertex,  // edge endpoint or head outside the vertex set
    Irreflexive,    // no label on (v, v)
    IndexRange,     // sym index below m; dir index in [m, n)
    HeadNotEndpoint,
    DuplicateLabel, // at most one label per unordered pair
    Totality,       // every unordered pair of distinct vertices labelled
};

std::string rule_name(Rule r);

struct RuleViolation {
    Rule rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<RuleViolation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const SimpleBinaryStructure& s);

SimpleBinaryStructure induced(const SimpleBinaryStructure& s,
                              const std::vector<std::string>& subset);

// Lexicographically least label-preserving bijection, or absence.
std::optional<std::map<std::string, std::string>>
isomorphic(const SimpleBinaryStructure& a, const SimpleBinaryStructure& b);

struct CopySet {
    SimpleBinaryStructure host;
    SimpleBinaryStructure pattern;
    std::vector<std::vector<std::string>> copies; // each sorted; list sorted
};

CopySet enumerate_copies(const SimpleBinaryStructure& host,
                         const SimpleBinaryStructure& pattern);

SimpleBinaryStructure generate_random(int n, int m, int vertex_count,
                                      std::uint64_t seed);

// Graphs in the two-symmetric-labels signature: sym(1) edges, sym(0) non-edges.
SimpleBinaryStructure complete_graph(int vertex_count);
SimpleBinaryStructure edgeless_graph(int vertex_count);

} // namespace rrlab
