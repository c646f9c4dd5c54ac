#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rrlab/arrows.hpp"
#include "rrlab/colourings.hpp"
#include "rrlab/encoding.hpp"
#include "rrlab/io.hpp"
#include "rrlab/sequences.hpp"
#include "rrlab/structures.hpp"
#include "rrlab/triples.hpp"

namespace {

using namespace rrlab;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

SimpleBinaryStructure load_structure(const std::string& path) {
    SimpleBinaryStructure s = read_structure_json(slurp(path));
    ValidationReport rep = validate(s);
    if (!rep.ok()) {
        std::string msg = path + ": invalid structure:";
        for (const RuleViolation& v : rep.violations)
            msg += "\n  " + rule_name(v.rule) + ": " + v.detail;
        throw ParseError(msg);
    }
    return s;
}

ColouringMode parse_mode(const std::string& mode) {
    return mode == "delta" ? ColouringMode::Delta : ColouringMode::Bounded;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow colouring laboratory for finite binary structures"};
    app.require_subcommand(1);
    int code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded random structure");
    int gen_n = 2, gen_m = 2, gen_count = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "relation count")->required();
    gen->add_option("--m", gen_m, "symmetric relation count")->required();
    gen->add_option("--count", gen_count, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->callback([&] {
        emit(write_structure_json(generate_random(gen_n, gen_m, gen_count, gen_seed)),
             gen_out);
    });

    // decode
    auto* dec = app.add_subcommand("decode", "read a sequence set as a structure");
    std::string dec_seqs, dec_out;
    int dec_n = 0, dec_m = 0;
    bool dec_strict = false;
    dec->add_option("--seqs", dec_seqs, "sequence set file")->required();
    dec->add_option("--n", dec_n, "relation count")->required();
    dec->add_option("--m", dec_m, "symmetric relation count")->required();
    dec->add_flag("--strict-paper-formula", dec_strict,
                  "use the uncorrected oriented-label index formula; pairs where "
                  "it is fractional or out of range become errors");
    dec->add_option("--out", dec_out, "output path (default stdout)");
    dec->callback([&] {
        SeqSet S = read_seqset_text(slurp(dec_seqs));
        emit(write_structure_json(decode(S, EncodingParams(dec_n, dec_m), dec_strict)),
             dec_out);
    });

    // classify
    auto* cls = app.add_subcommand("classify", "report the set predicates of a sequence set");
    std::string cls_seqs, cls_out;
    cls->add_option("--seqs", cls_seqs, "sequence set file")->required();
    cls->add_option("--out", cls_out, "output path (default stdout)");
    cls->callback([&] {
        emit(write_classification_json(classify_set(read_seqset_text(slurp(cls_seqs)))),
             cls_out);
    });

    // sims
    auto* sims = app.add_subcommand("sims", "list subsets strongly similar to a pattern");
    std::string sims_seqs, sims_pattern, sims_out;
    sims->add_option("--seqs", sims_seqs, "ambient sequence set file")->required();
    sims->add_option("--pattern", sims_pattern, "pattern sequence set file")->required();
    sims->add_option("--out", sims_out, "output path (default stdout)");
    sims->callback([&] {
        SeqSet T = read_seqset_text(slurp(sims_seqs));
        SeqSet F = read_seqset_text(slurp(sims_pattern));
        if (T.alphabet() != F.alphabet())
            throw ParseError("ambient and pattern use different alphabets");
        emit(write_seqset_list_json(similar_subsets(T, F)), sims_out);
    });

    // stretch
    auto* str = app.add_subcommand("stretch", "produce the three stretched variants of a triple");
    std::string str_triple, str_out;
    int str_d = 2;
    str->add_option("--triple", str_triple, "triple file")->required();
    str->add_option("--d", str_d, "sequence alphabet")->required();
    str->add_option("--out", str_out, "output path (default stdout)");
    str->callback([&] {
        Triple t = read_triple_json(slurp(str_triple), str_d);
        int depth = 1;
        for (const Seq& z : t.B) depth = std::max(depth, z.length() + 1);
        emit(write_variants_json(stretch_variants(t, strong_diagonalization(str_d, depth))),
             str_out);
    });

    // reduce
    auto* red = app.add_subcommand("reduce", "recolour so no kernel family repeats a colour k+1 times");
    std::string red_host, red_pattern, red_colouring, red_out;
    int red_k = 2;
    red->add_option("--host", red_host, "host structure file")->required();
    red->add_option("--C", red_pattern, "pattern structure file")->required();
    red->add_option("--colouring", red_colouring, "colouring file")->required();
    red->add_option("--k", red_k, "target repetition bound")->required();
    red->add_option("--out", red_out, "output path (default stdout)");
    red->callback([&] {
        Colouring c = bind_colouring(read_colouring_json(slurp(red_colouring)),
                                     load_structure(red_host), load_structure(red_pattern));
        emit(write_colouring_json(reduce_colouring(c, red_k)), red_out);
    });

    // rainbow
    auto* rb = app.add_subcommand("rainbow", "find a copy of B coloured injectively");
    std::string rb_host, rb_b, rb_pattern, rb_colouring, rb_out;
    rb->add_option("--host", rb_host, "host structure file")->required();
    rb->add_option("--B", rb_b, "sought structure file")->required();
    rb->add_option("--C", rb_pattern, "pattern structure file")->required();
    rb->add_option("--colouring", rb_colouring, "colouring file")->required();
    rb->add_option("--out", rb_out, "output path (default stdout)");
    rb->callback([&] {
        Colouring c = bind_colouring(read_colouring_json(slurp(rb_colouring)),
                                     load_structure(rb_host), load_structure(rb_pattern));
        auto copy = rainbow_copy_search(load_structure(rb_b), c);
        emit(write_copy_json(copy), rb_out);
        code = copy ? 0 : 1;
    });

    // arrow
    auto* arw = app.add_subcommand("arrow", "certify a rainbow arrow over all canonical colourings");
    std::string arw_a, arw_b, arw_c, arw_mode = "bounded", arw_out, arw_csv;
    int arw_k = 1, arw_workers = 1;
    std::int64_t arw_budget = 0;
    arw->add_option("--A", arw_a, "host structure file")->required();
    arw->add_option("--B", arw_b, "sought structure file")->required();
    arw->add_option("--C", arw_c, "pattern structure file")->required();
    arw->add_option("--k", arw_k, "repetition bound")->required();
    arw->add_option("--mode", arw_mode, "colouring family")
        ->check(CLI::IsMember({"bounded", "delta"}));
    arw->add_option("--workers", arw_workers, "parallel workers");
    arw->add_option("--budget", arw_budget, "max colourings examined");
    arw->add_option("--csv", arw_csv, "stats CSV path");
    arw->add_option("--out", arw_out, "output path (default stdout)");
    arw->callback([&] {
        ArrowQuery q{load_structure(arw_a), load_structure(arw_b), load_structure(arw_c),
                     arw_k, parse_mode(arw_mode), arw_budget, arw_workers};
        ArrowCertificate cert = verify_arrow(q);
        emit(write_certificate_json(cert), arw_out);
        if (!arw_csv.empty())
            emit("verdict,colourings,ms\n" + std::string(cert.holds ? "holds" : "fails") +
                     "," + std::to_string(cert.stats.colourings) + "," +
                     std::to_string(cert.stats.ms) + "\n",
                 arw_csv);
        code = cert.holds ? 0 : 1;
    });

    // min-host
    auto* mh = app.add_subcommand("min-host", "least host in a family certifying the arrow");
    std::string mh_family = "complete", mh_b, mh_c, mh_mode = "bounded", mh_out, mh_csv;
    int mh_k = 1, mh_limit = 1, mh_workers = 1, mh_n = 2, mh_m = 2;
    std::uint64_t mh_seed = 0;
    std::int64_t mh_budget = 0;
    mh->add_option("--family", mh_family, "host family")
        ->check(CLI::IsMember({"complete", "edgeless", "random"}));
    mh->add_option("--B", mh_b, "sought structure file")->required();
    mh->add_option("--C", mh_c, "pattern structure file")->required();
    mh->add_option("--k", mh_k, "repetition bound")->required();
    mh->add_option("--mode", mh_mode, "colouring family")
        ->check(CLI::IsMember({"bounded", "delta"}));
    mh->add_option("--limit", mh_limit, "largest family index tried")->required();
    mh->add_option("--n", mh_n, "relation count (random family)");
    mh->add_option("--m", mh_m, "symmetric relation count (random family)");
    mh->add_option("--seed", mh_seed, "random seed (random family)");
    mh->add_option("--workers", mh_workers, "parallel workers");
    mh->add_option("--budget", mh_budget, "max colourings examined per host");
    mh->add_option("--csv", mh_csv, "stats CSV path");
    mh->add_option("--out", mh_out, "output path (default stdout)");
    mh->callback([&] {
        std::function<SimpleBinaryStructure(int)> family;
        if (mh_family == "complete")
            family = [](int i) { return complete_graph(i); };
        else if (mh_family == "edgeless")
            family = [](int i) { return edgeless_graph(i); };
        else
            family = [&](int i) {
                return generate_random(mh_n, mh_m, i, mh_seed + static_cast<std::uint64_t>(i));
            };
        std::string rows = "index,verdict,colourings,ms\n";
        auto result = min_host_search(
            load_structure(mh_b), load_structure(mh_c), mh_k, parse_mode(mh_mode), family,
            mh_limit, mh_budget, mh_workers, [&](int i, const ArrowCertificate& cert) {
                rows += std::to_string(i) + "," + (cert.holds ? "holds" : "fails") + "," +
                        std::to_string(cert.stats.colourings) + "," +
                        std::to_string(cert.stats.ms) + "\n";
            });
        emit(write_min_host_json(result), mh_out);
        if (!mh_csv.empty()) emit(rows, mh_csv);
        code = result ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
