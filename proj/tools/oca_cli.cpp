#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "oca/bounds.hpp"
#include "oca/constructions.hpp"
#include "oca/covering_code.hpp"
#include "oca/gf.hpp"
#include "oca/oracle.hpp"
#include "oca/ordered_array.hpp"

namespace {

struct Options {
    std::string rule, kind, input, code_input, output, format = "text";
    int t = 0, m = 0, s = 0, v = 0, q = 0, R = 0, j = 0, k = 0;
    int cap = 6, table = 0, depth = 6;
    unsigned seed = 0;
    int threads = 1;
    bool trace = false;
    std::string file;  // positional for verify
};

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

oca::OrderedArray load_array(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return oca::read_array(in);
}

oca::CoveringCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return oca::read_code(in);
}

int run_construct(const Options& opt) {
    using namespace oca;
    std::ofstream file;
    std::ostream& os = open_output(opt.output, file);

    const std::string& r = opt.rule;
    if (r == "ooa-rs") {
        write_array(os, ooa_rs(FieldSpec(opt.v), opt.t, opt.m));
    } else if (r == "kleitman-spencer") {
        write_array(os, kleitman_spencer_ca(opt.m));
    } else if (r == "bush") {
        write_array(os, bush_ca(FieldSpec(opt.v), opt.m));
    } else if (r == "tj") {
        write_array(os, build_tj(opt.v, opt.s, opt.j));
    } else if (r == "corollary2") {
        write_array(os, corollary2_array(opt.t, opt.v));
    } else if (r == "t1-example") {
        write_array(os, corollary2_array(3, 2));
    } else if (r == "eq4") {
        write_array(os, fuse(ooa_rs(FieldSpec(opt.v + 1), 2, opt.m)));
    } else if (r == "constant") {
        write_array(os, constant_rows_oca(opt.v, opt.m, opt.s));
    } else if (r == "strength2-from-ca") {
        write_array(os, strength2_from_ca(load_array(opt.input)));
    } else if (r == "chain-extend") {
        write_array(os, chain_extend(load_array(opt.input)));
    } else if (r == "chain-project") {
        write_array(os, chain_project(load_array(opt.input)));
    } else if (r == "block-project") {
        write_array(os, block_project(load_array(opt.input)));
    } else if (r == "fuse") {
        write_array(os, fuse(load_array(opt.input)));
    } else if (r == "derive-block") {
        write_array(os, derive_block(load_array(opt.input)));
    } else if (r == "derive-depth") {
        write_array(os, derive_depth(load_array(opt.input)));
    } else if (r == "zero-ideal") {
        write_code(os, zero_ideal_code(opt.q, opt.m, opt.s, opt.R));
    } else if (r == "code-odd") {
        write_code(os, code_odd(opt.q, opt.s, opt.k, opt.j));
    } else if (r == "code-even") {
        write_code(os, code_even(opt.q, opt.s, opt.k));
    } else if (r == "constant-code") {
        write_code(os, constant_code(opt.q, opt.m, opt.s, opt.t));
    } else if (r == "extend-block") {
        write_code(os, extend_block(load_code(opt.code_input.empty() ? opt.input
                                                                     : opt.code_input)));
    } else if (r == "product") {
        write_code(os, product_code(load_array(opt.input), load_code(opt.code_input)));
    } else if (r == "greedy") {
        write_code(os, greedy_covering(opt.q, opt.m, opt.s, opt.R, opt.seed));
    } else {
        std::cerr << "unknown rule: " << r << '\n';
        return 2;
    }
    return 0;
}

int run_verify(const Options& opt) {
    using namespace oca;
    if (opt.kind == "code") {
        CoveringCode code = load_code(opt.file);
        code.validate();
        CoverReport report = verify_covering(code);
        if (report.pass) {
            std::cout << "PASS code q=" << code.q << " m=" << code.poset.m
                      << " s=" << code.poset.s << " R=" << code.radius
                      << " size=" << code.words.size() << '\n';
            return 0;
        }
        std::cout << "FAIL " << report.uncovered.size() << " uncovered word(s); first:";
        for (uint8_t x : report.uncovered.front()) std::cout << ' ' << int(x);
        std::cout << '\n';
        return 1;
    }
    OrderedArray a = load_array(opt.file);
    VerificationReport report = opt.kind == "ca" ? verify_ca(a) : verify_oca(a);
    if (report.pass) {
        std::cout << "PASS " << opt.kind << " N=" << a.rows() << " t=" << a.t
                  << " m=" << a.poset.m << " s=" << a.poset.s << " v=" << a.v
                  << (report.exact ? " exact" : "") << '\n';
        return 0;
    }
    const Violation& viol = report.violations.front();
    std::cout << "FAIL " << report.violations.size() << " violation(s); first: columns {";
    for (size_t i = 0; i < viol.columns.size(); ++i)
        std::cout << (i ? "," : "") << viol.columns[i];
    std::cout << "} tuple (";
    for (size_t i = 0; i < viol.tuple.size(); ++i)
        std::cout << (i ? "," : "") << int(viol.tuple[i]);
    std::cout << ") covered " << viol.count << " time(s)\n";
    return 1;
}

int run_bound(const Options& opt) {
    using namespace oca;
    if (opt.table == 2) {
        std::cout << "v q vq m s R old(tag) new(tag)\n";
        for (const Table2Row& row : emit_table2())
            std::cout << row.v << ' ' << row.q << ' ' << row.v * row.q << ' ' << row.m
                      << ' ' << row.s << ' ' << row.R << ' ' << row.old_value << '('
                      << row.old_tag << ") " << row.new_value << '(' << row.new_tag
                      << ")\n";
        return 0;
    }
    if (opt.table == 3) {
        std::cout << "q m s R prior new tag\n";
        for (const Table3Row& row : emit_table3())
            std::cout << row.q << ' ' << row.m << ' ' << row.s << ' ' << row.R << ' '
                      << row.prior << ' ' << row.new_value << ' ' << row.tag << '\n';
        return 0;
    }
    BoundRecord record = opt.kind == "k"
                             ? best_k_upper(opt.q, opt.m, opt.s, opt.R, opt.depth)
                             : best_ocan_upper(opt.t, opt.m, opt.s, opt.v, opt.depth);
    std::cout << record.params_string() << " <= " << record.value << " via " << record.rule
              << (record.constructive ? "" : " (non-constructive)") << '\n';
    if (opt.trace) std::cout << "trace: " << record.trace_string() << '\n';
    return 0;
}

int run_oracle(const Options& opt) {
    using namespace oca;
    ExactCoverResult result = exact_min_covering(opt.q, opt.m, opt.s, opt.R, opt.cap);
    if (result.found) {
        std::cout << "K(" << opt.q << ',' << opt.m << ',' << opt.s << ',' << opt.R
                  << ") = " << result.value << '\n';
        if (result.witness) write_code(std::cout, *result.witness);
    } else {
        std::cout << "K(" << opt.q << ',' << opt.m << ',' << opt.s << ',' << opt.R
                  << ") > " << result.value << " (cap reached)\n";
    }
    return 0;
}

int run_sphere(const Options& opt) {
    oca::SphereProfile profile = oca::sphere_profile(opt.q, opt.m, opt.s, opt.R);
    std::cout << "V_" << opt.q << "(" << opt.m << ',' << opt.s << ',' << opt.R
              << ") = " << profile.volume << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered covering arrays and NRT covering codes"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    app.add_option("--threads", opt.threads, "thread cap")->capture_default_str();

    auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("-t,--strength", opt.t, "strength t");
        cmd->add_option("-m,--blocks", opt.m, "number of blocks m");
        cmd->add_option("-s,--chain", opt.s, "chain length s");
        cmd->add_option("-v,--alphabet", opt.v, "array alphabet v");
        cmd->add_option("-q,--code-alphabet", opt.q, "code alphabet q");
        cmd->add_option("-R,--radius", opt.R, "covering radius R");
        cmd->add_option("-j", opt.j, "gadget / corollary parameter j");
        cmd->add_option("-k", opt.k, "half block count k");
    };

    CLI::App* construct = app.add_subcommand("construct", "build an array or code");
    construct->add_option("--rule", opt.rule, "construction name")->required();
    add_params(construct);
    construct->add_option("-i,--input", opt.input, "input array/code file");
    construct->add_option("--code", opt.code_input, "input code file (product)");
    construct->add_option("-o,--output", opt.output, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "verify an array or code file");
    verify->add_option("--kind", opt.kind, "oca|ca|code")->required();
    verify->add_option("file", opt.file, "input file")->required();

    CLI::App* bound = app.add_subcommand("bound", "derive an upper bound");
    bound->add_option("--kind", opt.kind, "ocan|k");
    add_params(bound);
    bound->add_flag("--trace", opt.trace, "print the full rule trace");
    bound->add_option("--emit-table", opt.table, "reproduce table 2 or 3");
    bound->add_option("--depth", opt.depth, "rule search depth")->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    CLI::App* exact = oracle->add_subcommand("exact-k", "exact minimum covering size");
    add_params(exact);
    exact->add_option("--cap", opt.cap, "largest code size to try")->capture_default_str();

    CLI::App* sphere = app.add_subcommand("sphere", "NRT ball volume");
    add_params(sphere);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (verify->parsed()) return run_verify(opt);
        if (bound->parsed()) return run_bound(opt);
        if (oracle->parsed()) {
            if (!exact->parsed()) {
                std::cerr << "oracle requires the exact-k subcommand\n";
                return 2;
            }
            return run_oracle(opt);
        }
        if (sphere->parsed()) return run_sphere(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
