#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrlab/arrows.hpp"
#include "rrlab/colourings.hpp"
#include "rrlab/sequences.hpp"
#include "rrlab/structures.hpp"
#include "rrlab/triples.hpp"

namespace rrlab {

// Malformed input; the message carries the byte offset, line or JSON path.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Writers emit canonical text: sorted keys, two-space indent, one trailing
// newline, so identical values always serialize to identical bytes.
std::string write_structure_json(const SimpleBinaryStructure& s);
SimpleBinaryStructure read_structure_json(const std::string& text);

std::string write_seqset_text(const SeqSet& S);
SeqSet read_seqset_text(const std::string& text);

struct RawColouring {
    std::vector<std::vector<std::string>> copies;
    std::vector<int> colours;
};

std::string write_colouring_json(const Colouring& c);
RawColouring read_colouring_json(const std::string& text);

// Checks the listed copies are exactly the canonical copy enumeration.
Colouring bind_colouring(const RawColouring& raw, const SimpleBinaryStructure& host,
                         const SimpleBinaryStructure& pattern);

std::string write_triple_json(const Triple& t);
Triple read_triple_json(const std::string& text, int alphabet);

std::string write_certificate_json(const ArrowCertificate& cert);
std::string write_classification_json(const SetClassification& c);
std::string write_seqset_list_json(const std::vector<SeqSet>& sets);
std::string write_variants_json(const std::array<Triple, 3>& variants);
std::string write_copy_json(const std::optional<std::vector<std::string>>& copy);
std::string write_min_host_json(const std::optional<std::pair<int, ArrowCertificate>>& r);

} // namespace rrlab
