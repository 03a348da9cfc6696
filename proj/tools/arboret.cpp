#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arboret/arboret.hpp"

namespace {

using namespace arboret;

constexpr int EXIT_USAGE = 2;
constexpr int EXIT_CORRUPT = 3;

void write_text_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

std::string first_tree_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) {
            auto a = line.find_first_not_of(" \t\r");
            auto b = line.find_last_not_of(" \t\r");
            return line.substr(a, b - a + 1);
        }
    }
    throw ParseError("no tree found in input", 0);
}

struct GenerateArgs {
    std::string model;
    std::string dist;
    int n = 0;
    double p = 0.0;
    long count = 1;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_generate(const GenerateArgs& a) {
    std::string text;
    auto need_n = [&] {
        if (a.n < 1) throw std::invalid_argument("--n is required and must be >= 1");
    };
    if (a.model == "uniform-ordered") {
        need_n();
        for (long i = 0; i < a.count; ++i) {
            Rng rng(a.seed, static_cast<std::uint64_t>(i));
            text += to_paren(sample_uniform_ordered(a.n, rng)) + "\n";
        }
    } else if (a.model == "uniform-labeled") {
        need_n();
        for (long i = 0; i < a.count; ++i) {
            Rng rng(a.seed, static_cast<std::uint64_t>(i));
            if (i > 0) text += "\n";
            text += edge_list_text(sample_uniform_labeled(a.n, rng));
        }
    } else if (a.model == "sgt") {
        if (a.dist.empty()) throw std::invalid_argument("--dist is required for sgt");
        ChildrenDistribution dist = load_dist_arg(a.dist);
        for (long i = 0; i < a.count; ++i) {
            Rng rng(a.seed, static_cast<std::uint64_t>(i));
            auto t = sample_sgt(dist, rng);
            if (!t) throw std::domain_error("sampled tree exceeded the node cap");
            text += to_paren(*t) + "\n";
        }
    } else if (a.model == "cgw") {
        if (a.dist.empty()) throw std::invalid_argument("--dist is required for cgw");
        need_n();
        ChildrenDistribution dist = load_dist_arg(a.dist);
        if (!cgw_feasible(dist, a.n))
            throw std::domain_error("no tree on " + std::to_string(a.n) +
                                    " nodes has positive probability under this distribution");
        for (long i = 0; i < a.count; ++i) {
            Rng rng(a.seed, static_cast<std::uint64_t>(i));
            auto t = sample_cgw(dist, a.n, rng);
            if (!t) throw std::domain_error("conditioned sampling exhausted its retries");
            text += to_paren(*t) + "\n";
        }
    } else if (a.model == "er-spanning") {
        need_n();
        if (!(a.p > 0.0) || a.p > 1.0)
            throw std::invalid_argument("--p must lie in (0, 1] for er-spanning");
        for (long i = 0; i < a.count; ++i) {
            Rng rng(a.seed, static_cast<std::uint64_t>(i));
            auto t = sample_er_spanning(a.n, a.p, rng);
            if (!t)
                throw std::domain_error("no connected graph sampled; raise p or retry budget");
            if (i > 0) text += "\n";
            text += edge_list_text(*t);
        }
    } else {
        throw std::invalid_argument("unknown model " + a.model);
    }
    write_text_out(a.out, text);
    return 0;
}

int cmd_encode(const std::string& codec, const std::string& in, const std::string& out, int K) {
    std::string text = read_text_file(in);
    CodecFrame frame;
    if (codec == "pc" || codec == "td" || codec == "treeexplorer") {
        OrderedTree t = parse_paren(first_tree_line(text));
        CodecId id = codec == "pc"   ? CodecId::pc
                     : codec == "td" ? CodecId::td_ternary
                                     : CodecId::treeexplorer;
        frame = encode_tree(t, id);
    } else if (codec == "sgt-lzw") {
        OrderedTree t = parse_paren(first_tree_line(text));
        int maxc = 0;
        for (int c : t.child_counts()) maxc = std::max(maxc, c);
        int bound = K > 0 ? K : std::max(2, maxc + 1);
        frame = compress_sgt(t, bound);
    } else if (codec == "er-lz78") {
        frame = compress_er_tree(parse_edge_list(text));
    } else {
        throw std::invalid_argument("unknown codec " + codec);
    }
    write_binary_file(out, frame.pack());
    return 0;
}

int cmd_decode(const std::string& in, const std::string& out) {
    CodecFrame frame = CodecFrame::unpack(read_binary_file(in));
    std::string text;
    switch (frame.codec) {
        case CodecId::pc:
        case CodecId::td_ternary:
        case CodecId::treeexplorer:
            text = to_paren(decode_tree(frame)) + "\n";
            break;
        case CodecId::sgt_lzw:
            text = to_paren(decompress_sgt_frame(frame)) + "\n";
            break;
        case CodecId::er_lz78:
            text = edge_list_text(decompress_er_frame(frame));
            break;
        default:
            throw FrameError("accounting-only codec has no decoder");
    }
    write_text_out(out, text);
    return 0;
}

int cmd_entropy(const std::string& model, const std::string& dist_arg, int n, double p) {
    EntropyReport r;
    auto need_n = [&] {
        if (n < 1) throw std::invalid_argument("--n is required and must be >= 1");
    };
    if (model == "uniform-ordered") {
        need_n();
        r = uniform_ordered_entropy(n);
    } else if (model == "uniform-unordered") {
        need_n();
        r = uniform_unordered_entropy(n);
    } else if (model == "uniform-labeled") {
        need_n();
        r.model = "uniform-labeled";
        r.params = {{"n", static_cast<double>(n)}};
        r.exact = labeled_entropy(n, false);
        r.bound_kind = BoundKind::exact;
        r.extras = {{"rooted", labeled_entropy(n, true)}};
    } else if (model == "sgt") {
        if (dist_arg.empty()) throw std::invalid_argument("--dist is required for sgt");
        ChildrenDistribution dist = load_dist_arg(dist_arg);
        r.model = "sgt";
        r.params = {{"p0", dist.p0()}, {"mean_children", dist.mean()}};
        r.exact = sgt_entropy(dist);
        r.bound_kind = BoundKind::exact;
        r.extras = {{"expected_nodes", sgt_expected_nodes(dist)},
                    {"children_entropy", dist.entropy_bits()}};
    } else if (model == "cgw") {
        if (dist_arg.empty()) throw std::invalid_argument("--dist is required for cgw");
        need_n();
        ChildrenDistribution dist = load_dist_arg(dist_arg);
        r.model = "cgw";
        r.params = {{"n", static_cast<double>(n)}};
        r.bound = cgw_bound_first(dist, n);
        r.bound_kind = BoundKind::upper;
        r.extras = {{"zero", cgw_bound_zero(dist, n)}, {"first", cgw_bound_first(dist, n)}};
    } else if (model == "er") {
        need_n();
        r.model = "er";
        r.params = {{"n", static_cast<double>(n)}, {"p", p}};
        r.bound = er_tree_upper(n, p);
        r.bound_kind = BoundKind::upper;
        r.extras = {{"graph_entropy", er_graph_entropy(n, p)},
                    {"expected_spanning_log2", expected_spanning_log2(n, p)}};
    } else if (model == "giant") {
        need_n();
        r.model = "giant";
        r.params = {{"n", static_cast<double>(n)}};
        r.bound = giant_threshold_upper(n);
        r.bound_kind = BoundKind::upper;
    } else {
        throw std::invalid_argument("unknown model " + model);
    }
    std::cout << entropy_report_to_json(r).dump(2) << "\n";
    return 0;
}

struct ExperimentArgs {
    std::string figure;
    std::vector<int> ns;
    std::vector<double> ps;
    int n_max = 14;
    int n = 100;
    long trials = 1000;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_experiment(const ExperimentArgs& a) {
    if (a.trials < 1) throw std::invalid_argument("--trials must be >= 1");
    std::string csv;
    if (a.figure == "uniform") {
        csv = experiment_uniform(a.n_max);
    } else if (a.figure == "newick") {
        csv = experiment_newick(a.n_max);
    } else if (a.figure == "adjlist") {
        std::vector<int> ns = a.ns;
        if (ns.empty())
            ns = {2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256, 384, 512, 768, 1024};
        csv = experiment_adjlist(ns);
    } else if (a.figure == "er-sweep") {
        std::vector<double> ps = a.ps;
        if (ps.empty())
            for (int i = 1; i <= 99; ++i) ps.push_back(i / 100.0);
        csv = experiment_er_sweep(a.n, ps);
    } else if (a.figure == "giant") {
        std::vector<int> ns = a.ns;
        if (ns.empty()) ns = {10, 18, 32, 56, 100, 178, 316, 562, 1000, 1778, 3162, 5623, 10000};
        csv = experiment_giant(ns);
    } else if (a.figure == "redundancy") {
        std::vector<int> ns = a.ns;
        if (ns.empty()) ns = {50, 500, 5000};
        csv = experiment_redundancy(ns, a.trials, a.seed);
    } else {
        throw std::invalid_argument("unknown figure " + a.figure);
    }
    write_text_out(a.out, csv);
    return 0;
}

int cmd_selftest() {
    Rng rng(12345, 0);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(40));
        OrderedTree t = sample_uniform_ordered(n, rng);
        if (!(pc_ternary_decode(pc_ternary(t)) == t)) return 1;
        if (!(td_decode(td_encode(t)) == t)) return 1;
        if (pc_encode(pc_decode(pc_encode(t))) != pc_encode(t)) return 1;
        if (!(decode_tree(CodecFrame::unpack(encode_tree(t, CodecId::td_ternary).pack())) == t))
            return 1;
        if (!(newick_parse(newick_emit(t)) == t)) return 1;
    }
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(80));
        LabeledTree t = sample_uniform_labeled(n, rng);
        LabeledTree back = decompress_er_frame(CodecFrame::unpack(compress_er_tree(t).pack()));
        if (back.edges() != t.edges()) return 1;
        if (!(prufer_decode(prufer_encode(t), n).edges() == t.edges())) return 1;
    }
    std::cout << "selftest ok\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random tree sources, structural codecs, and entropy reports"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "sample trees from a model");
    g->add_option("--model", gen.model, "uniform-ordered | uniform-labeled | sgt | cgw | er-spanning")
        ->required();
    g->add_option("--dist", gen.dist, "children distribution: inline {0:.5,2:.5} or JSON file");
    g->add_option("--n", gen.n, "node count");
    g->add_option("--p", gen.p, "edge probability");
    g->add_option("--count", gen.count, "number of trees");
    g->add_option("--seed", gen.seed, "rng seed");
    g->add_option("--out", gen.out, "output path (default stdout)");

    std::string enc_codec, enc_in, enc_out;
    int enc_K = 0;
    auto* e = app.add_subcommand("encode", "encode a tree file into a codec frame");
    e->add_option("--codec", enc_codec, "pc | td | treeexplorer | sgt-lzw | er-lz78")->required();
    e->add_option("--in", enc_in, "tree file (parenthesis line or edge list)")->required();
    e->add_option("--out", enc_out, "frame file")->required();
    e->add_option("--K", enc_K, "alphabet bound for sgt-lzw");

    std::string dec_in, dec_out;
    auto* d = app.add_subcommand("decode", "decode a codec frame back to text");
    d->add_option("--in", dec_in, "frame file")->required();
    d->add_option("--out", dec_out, "output path (default stdout)");

    std::string ent_model, ent_dist;
    int ent_n = 0;
    double ent_p = 0.5;
    auto* h = app.add_subcommand("entropy", "entropy report as JSON");
    h->add_option("--model", ent_model,
                  "uniform-ordered | uniform-unordered | uniform-labeled | sgt | cgw | er | giant")
        ->required();
    h->add_option("--dist", ent_dist, "children distribution");
    h->add_option("--n", ent_n, "node count");
    h->add_option("--p", ent_p, "edge probability");

    ExperimentArgs ex;
    auto* x = app.add_subcommand("experiment", "reproduce a figure as CSV");
    x->add_option("--figure", ex.figure,
                  "uniform | adjlist | newick | er-sweep | giant | redundancy")
        ->required();
    x->add_option("--n", ex.ns, "n values (repeatable)");
    x->add_option("--p", ex.ps, "p values (repeatable)");
    x->add_option("--n-max", ex.n_max, "largest n for exhaustive figures");
    x->add_option("--sweep-n", ex.n, "fixed n for er-sweep");
    x->add_option("--trials", ex.trials, "Monte Carlo trials per point");
    x->add_option("--seed", ex.seed, "rng seed");
    x->add_option("--out", ex.out, "output path (default stdout)");

    auto* s = app.add_subcommand("selftest", "quick internal consistency battery");
    (void)s;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        if (g->parsed()) return cmd_generate(gen);
        if (e->parsed()) return cmd_encode(enc_codec, enc_in, enc_out, enc_K);
        if (d->parsed()) return cmd_decode(dec_in, dec_out);
        if (h->parsed()) return cmd_entropy(ent_model, ent_dist, ent_n, ent_p);
        if (x->parsed()) return cmd_experiment(ex);
        if (s->parsed()) return cmd_selftest();
    } catch (const FrameError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_CORRUPT;
    } catch (const DecodeError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_CORRUPT;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << " (offset " << err.offset() << ")\n";
        return EXIT_USAGE;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return EXIT_USAGE;
    }
    return 0;
}
