#include "rrlab/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace rrlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw ParseError(msg); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) bad(where + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(where + ": missing key \"" + key + "\"");
    return *it;
}

void expect_keys(const json& obj, std::vector<std::string> keys, const std::string& where) {
    if (!obj.is_object()) bad(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            bad(where + ": unknown key \"" + it.key() + "\"");
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where + ": expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where + ": expected a string");
    return j.get<std::string>();
}

json structure_value(const SimpleBinaryStructure& s) {
    json edges = json::array();
    for (const Edge& e : s.edges()) {
        json lab;
        lab["kind"] = e.label.kind == LabelKind::Sym ? "sym" : "dir";
        lab["i"] = e.label.index;
        if (e.label.kind == LabelKind::Dir) lab["head"] = e.label.head;
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"label", lab}});
    }
    return json{{"n", s.n()}, {"m", s.m()}, {"vertices", s.vertices()}, {"edges", edges}};
}

json colouring_value(const Colouring& c) {
    return json{{"copies", c.copies.copies}, {"colours", c.colours}};
}

json seqset_value(const SeqSet& S) {
    json out = json::array();
    for (const Seq& s : S) out.push_back(s.label());
    return out;
}

Seq parse_seq_label(const std::string& text, int alphabet, const std::string& where) {
    if (text == "()") return Seq(alphabet, {});
    if (text.empty()) bad(where + ": empty sequence text (use \"()\")");
    std::vector<int> digits;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = text.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos);
        if (piece.empty() ||
            piece.find_first_not_of("0123456789") != std::string::npos)
            bad(where + ": bad digit \"" + piece + "\"");
        digits.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    try {
        return Seq(alphabet, std::move(digits));
    } catch (const std::invalid_argument& e) {
        bad(where + ": " + e.what());
    }
}

} // namespace

std::string write_structure_json(const SimpleBinaryStructure& s) {
    return dump(structure_value(s));
}

SimpleBinaryStructure read_structure_json(const std::string& text) {
    json j = parse(text);
    expect_keys(j, {"n", "m", "vertices", "edges"}, "structure");
    int n = as_int(field(j, "n", "structure"), "n");
    int m = as_int(field(j, "m", "structure"), "m");

    const json& jv = field(j, "vertices", "structure");
    if (!jv.is_array()) bad("vertices: expected an array");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < jv.size(); ++i)
        vertices.push_back(as_string(jv[i], "vertices[" + std::to_string(i) + "]"));

    const json& je = field(j, "edges", "structure");
    if (!je.is_array()) bad("edges: expected an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < je.size(); ++i) {
        std::string where = "edges[" + std::to_string(i) + "]";
        const json& e = je[i];
        expect_keys(e, {"u", "v", "label"}, where);
        Edge edge;
        edge.u = as_string(field(e, "u", where), where + ".u");
        edge.v = as_string(field(e, "v", where), where + ".v");
        const json& lab = field(e, "label", where);
        expect_keys(lab, {"kind", "i", "head"}, where + ".label");
        std::string kind = as_string(field(lab, "kind", where + ".label"), where + ".label.kind");
        edge.label.index = as_int(field(lab, "i", where + ".label"), where + ".label.i");
        if (kind == "sym") {
            edge.label.kind = LabelKind::Sym;
            if (lab.contains("head")) bad(where + ".label: sym labels carry no head");
        } else if (kind == "dir") {
            edge.label.kind = LabelKind::Dir;
            edge.label.head =
                as_string(field(lab, "head", where + ".label"), where + ".label.head");
        } else {
            bad(where + ".label.kind: expected \"sym\" or \"dir\"");
        }
        edges.push_back(std::move(edge));
    }
    return SimpleBinaryStructure(n, m, std::move(vertices), std::move(edges));
}

std::string write_seqset_text(const SeqSet& S) {
    std::ostringstream out;
    out << "d=" << S.alphabet() << "\n";
    for (const Seq& s : S) out << s.label() << "\n";
    return out.str();
}

SeqSet read_seqset_text(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty() || lines[0].rfind("d=", 0) != 0)
        bad("line 1: expected header \"d=<alphabet>\"");
    std::string dtext = lines[0].substr(2);
    if (dtext.empty() || dtext.find_first_not_of("0123456789") != std::string::npos)
        bad("line 1: bad alphabet \"" + dtext + "\"");
    int alphabet = std::stoi(dtext);
    if (alphabet < 2) bad("line 1: alphabet must be at least 2");

    std::vector<Seq> elems;
    SeqSet seen(alphabet);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string where = "line " + std::to_string(i + 1);
        if (lines[i].empty()) bad(where + ": empty line");
        Seq s = parse_seq_label(lines[i], alphabet, where);
        if (seen.contains(s)) bad(where + ": duplicate sequence " + s.label());
        seen = seen.with(s);
        elems.push_back(std::move(s));
    }
    return SeqSet(alphabet, std::move(elems));
}

std::string write_colouring_json(const Colouring& c) {
    return dump(colouring_value(c));
}

RawColouring read_colouring_json(const std::string& text) {
    json j = parse(text);
    expect_keys(j, {"copies", "colours"}, "colouring");
    RawColouring raw;
    const json& jc = field(j, "copies", "colouring");
    if (!jc.is_array()) bad("copies: expected an array");
    for (std::size_t i = 0; i < jc.size(); ++i) {
        std::string where = "copies[" + std::to_string(i) + "]";
        if (!jc[i].is_array()) bad(where + ": expected an array");
        std::vector<std::string> copy;
        for (std::size_t v = 0; v < jc[i].size(); ++v)
            copy.push_back(as_string(jc[i][v], where + "[" + std::to_string(v) + "]"));
        raw.copies.push_back(std::move(copy));
    }
    const json& jl = field(j, "colours", "colouring");
    if (!jl.is_array()) bad("colours: expected an array");
    for (std::size_t i = 0; i < jl.size(); ++i)
        raw.colours.push_back(as_int(jl[i], "colours[" + std::to_string(i) + "]"));
    if (raw.copies.size() != raw.colours.size())
        bad("colouring: copies and colours differ in length");
    return raw;
}

Colouring bind_colouring(const RawColouring& raw, const SimpleBinaryStructure& host,
                         const SimpleBinaryStructure& pattern) {
    CopySet cs = enumerate_copies(host, pattern);
    if (raw.copies != cs.copies)
        bad("colouring: copies do not match the canonical copy enumeration (" +
            std::to_string(raw.copies.size()) + " listed, " +
            std::to_string(cs.copies.size()) + " expected)");
    return Colouring{std::move(cs), raw.colours};
}

std::string write_triple_json(const Triple& t) {
    return dump(json{{"B", seqset_value(t.B)},
                     {"X", seqset_value(t.X)},
                     {"Y", seqset_value(t.Y)}});
}

Triple read_triple_json(const std::string& text, int alphabet) {
    json j = parse(text);
    expect_keys(j, {"B", "X", "Y"}, "triple");
    auto read_set = [&](const std::string& key) {
        const json& arr = field(j, key, "triple");
        if (!arr.is_array()) bad(key + ": expected an array");
        std::vector<Seq> elems;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string where = key + "[" + std::to_string(i) + "]";
            elems.push_back(
                parse_seq_label(as_string(arr[i], where), alphabet, where));
        }
        return SeqSet(alphabet, std::move(elems));
    };
    return Triple{read_set("B"), read_set("X"), read_set("Y")};
}

std::string write_certificate_json(const ArrowCertificate& cert) {
    json j;
    j["verdict"] = cert.holds ? "holds" : "fails";
    j["witnesses"] = cert.witnesses;
    if (cert.counterexample) j["counterexample"] = colouring_value(*cert.counterexample);
    j["stats"] = json{{"colourings", cert.stats.colourings}, {"ms", cert.stats.ms}};
    return dump(j);
}

std::string write_classification_json(const SetClassification& c) {
    json j;
    j["antichain"] = c.antichain;
    j["closed_by_levels"] = c.closed_by_levels;
    j["closure"] = seqset_value(c.closure);
    j["diagonal"] = c.diagonal;
    j["levels"] = c.levels;
    j["strongly_diagonal"] = c.strongly_diagonal;
    j["transversal"] = c.transversal;
    return dump(j);
}

std::string write_seqset_list_json(const std::vector<SeqSet>& sets) {
    json j = json::array();
    for (const SeqSet& s : sets) j.push_back(seqset_value(s));
    return dump(j);
}

std::string write_variants_json(const std::array<Triple, 3>& variants) {
    json arr = json::array();
    for (const Triple& t : variants)
        arr.push_back(json{{"B", seqset_value(t.B)},
                           {"X", seqset_value(t.X)},
                           {"Y", seqset_value(t.Y)}});
    return dump(json{{"variants", arr}});
}

std::string write_copy_json(const std::optional<std::vector<std::string>>& copy) {
    json j;
    j["copy"] = copy ? json(*copy) : json(nullptr);
    return dump(j);
}

std::string write_min_host_json(const std::optional<std::pair<int, ArrowCertificate>>& r) {
    json j;
    if (r) {
        j["index"] = r->first;
        const ArrowCertificate& cert = r->second;
        json c;
        c["verdict"] = cert.holds ? "holds" : "fails";
        c["witnesses"] = cert.witnesses;
        c["stats"] = json{{"colourings", cert.stats.colourings}, {"ms", cert.stats.ms}};
        j["certificate"] = c;
    } else {
        j["index"] = nullptr;
    }
    return dump(j);
}

} // namespace rrlab
