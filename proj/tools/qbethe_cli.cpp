#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbethe/fseries.hpp"
#include "qbethe/json_io.hpp"
#include "qbethe/spectrum.hpp"

using namespace qbethe;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
    std::string type_label = "A1";
    int node = 1;
    std::string base = "a";
    int qexp = 0;
    int depth = 5;
    std::string format = "json";
};

SpectralPoint point(const CommonOpts& o) { return SpectralPoint(o.base, o.qexp); }

void print_qchar(const QChar& chi, const std::string& format) {
    if (format == "text")
        std::cout << chi.to_string() << "\n";
    else
        std::cout << to_json(chi).dump(2) << "\n";
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return Partition(parts);
}

ChainSpec load_chain(const std::string& path, int fallback_length) {
    if (path.empty()) return ChainSpec::default_a1(fallback_length);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open chain file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return ChainSpec::from_json_string(buf.str());
}

int run_qchar(const std::string& ctor, const CommonOpts& o, const std::string& lambda_text,
              int string_size, int rank_override, int which) {
    RootData rd(o.type_label);
    SpectralPoint a = point(o);
    int n = rank_override > 0 ? rank_override : rd.rank();

    if (ctor == "eval") {
        print_qchar(eval_module_char_slN(parse_partition(lambda_text), a, n, rd), o.format);
    } else if (ctor == "verma") {
        print_qchar(parabolic_verma_char_slN(o.node, a, n, o.depth, rd), o.format);
    } else if (ctor == "mplus") {
        print_qchar(mplus_char(o.node, a, rd, o.depth), o.format);
    } else if (ctor == "mminus") {
        print_qchar(mminus_char(o.node, a, n, o.depth, rd), o.format);
    } else if (ctor == "nplus") {
        print_qchar(nplus_char(o.node, a, rd, o.depth), o.format);
    } else if (ctor == "barchi") {
        QChar chi = barchi(o.node, rd, o.depth);
        json j = to_json(chi);
        j["proved"] = barchi_is_proved(rd);
        if (o.format == "text")
            std::cout << chi.to_string() << "\nproved: " << (barchi_is_proved(rd) ? "yes" : "no")
                      << "\n";
        else
            std::cout << j.dump(2) << "\n";
    } else if (ctor == "top") {
        print_qchar(fundamental_top_terms(o.node, a, rd), o.format);
    } else if (ctor == "string") {
        if (string_size < 1)
            print_qchar(sl2_string_char_infinite(a, SpectralPoint(o.base + "'", 0), o.depth, rd),
                        o.format);
        else
            print_qchar(sl2_string_char(a.shifted(-2 * (string_size - 1)), a, rd), o.format);
    } else if (ctor == "lift") {
        LiftChar lift = which > 0 ? sl3_example(a, which, o.depth, rd)
                                  : slN_string_lift(o.node, a, string_size, n, o.depth, rd);
        json j = to_json(lift.chi);
        j["finiteness"] = lift.finiteness;
        if (o.format == "text")
            std::cout << lift.chi.to_string() << "\nfiniteness: " << lift.finiteness << "\n";
        else
            std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "unknown constructor '" << ctor << "'\n";
        return kExitBadInput;
    }
    return kExitOk;
}

int run_verify_tq(const CommonOpts& o, int node_or_all) {
    RootData rd(o.type_label);
    json out = json::array();
    bool all_equal = true;
    int lo = node_or_all > 0 ? node_or_all : 1;
    int hi = node_or_all > 0 ? node_or_all : rd.rank();
    for (int i = lo; i <= hi; ++i) {
        TQReport rep = verify_tq_identity(rd, i, point(o), o.depth);
        all_equal = all_equal && rep.exact_equal;
        out.push_back(to_json(rep));
    }
    if (o.format == "text") {
        for (const auto& r : out)
            std::cout << r["type"].get<std::string>() << " node " << r["i"] << " depth "
                      << r["depth"] << ": "
                      << (r["exact_equal"].get<bool>() ? "exact" : "MISMATCH")
                      << (r["conjectural_barchi"].get<bool>() ? " (conjectural barchi)" : "")
                      << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return all_equal ? kExitOk : kExitCheckFailed;
}

int run_verify_f(const std::string& chain_path, const CommonOpts& o, int order) {
    RootData rd(o.type_label);
    ChainSpec chain = load_chain(chain_path, 3);
    double err = verify_f_identity(chain, rd, o.node, order);
    bool pass = err < 1e-10;
    json j{{"type", o.type_label}, {"i", o.node}, {"order", order}, {"max_error", err},
           {"pass", pass}};
    if (o.format == "text")
        std::cout << "f-identity max coefficient error " << err << (pass ? " (pass)" : " (FAIL)")
                  << "\n";
    else
        std::cout << j.dump(2) << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

int run_verify_dominance(const std::string& monomial_json, const CommonOpts& o) {
    RootData rd(o.type_label);
    LMonomial m = lmonomial_from_json(json::parse(monomial_json));
    DominanceResult res = is_dominant(m, rd);
    if (o.format == "text")
        std::cout << (res.dominant ? "dominant" : "not dominant") << "\n";
    else
        std::cout << to_json(res, rd).dump(2) << "\n";
    return kExitOk;
}

int run_verify_spectrum(const std::string& chain_path, int length, const std::string& format) {
    ChainSpec chain = load_chain(chain_path, length);
    SpectrumReport rep = spectrum_report(chain);
    if (format == "text")
        std::cout << rep.to_text();
    else
        std::cout << rep.to_json_string() << "\n";
    return rep.all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-character computations and the twisted XXZ Bethe pipeline"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string ctor, lambda_text = "1", chain_path, monomial_json, verb;
    int string_size = 1, rank_override = 0, which = 0, node_or_all = 0, order = 6, length = 4;

    CLI::App* qchar = app.add_subcommand("qchar", "compute a closed-form q-character");
    qchar->add_option("constructor", ctor,
                      "one of eval|verma|mplus|mminus|nplus|barchi|top|string|lift")
        ->required();
    qchar->add_option("--type", opts.type_label, "Lie type label, e.g. A2")->capture_default_str();
    qchar->add_option("--i", opts.node, "node index")->capture_default_str();
    qchar->add_option("--base", opts.base, "spectral base symbol")->capture_default_str();
    qchar->add_option("--qexp", opts.qexp, "q-power of the spectral point")->capture_default_str();
    qchar->add_option("--depth", opts.depth, "truncation depth")->capture_default_str();
    qchar->add_option("--lambda", lambda_text, "partition, comma separated (eval)")
        ->capture_default_str();
    qchar->add_option("--s", string_size, "string size (string, lift); 0 = infinite string")
        ->capture_default_str();
    qchar->add_option("--n", rank_override, "ambient rank override (eval, verma, lift)");
    qchar->add_option("--which", which, "sl3 example selector 1|2 (lift)");
    qchar->add_option("--format", opts.format, "json|text")->capture_default_str();

    CLI::App* verify = app.add_subcommand("verify", "run an identity or pipeline check");
    verify->add_option("check", verb, "one of tq|f-identity|dominance|spectrum")->required();
    verify->add_option("--type", opts.type_label)->capture_default_str();
    verify->add_option("--i", node_or_all, "node (default: all nodes)");
    verify->add_option("--depth", opts.depth)->capture_default_str();
    verify->add_option("--base", opts.base)->capture_default_str();
    verify->add_option("--qexp", opts.qexp)->capture_default_str();
    verify->add_option("--order", order, "series order (f-identity)")->capture_default_str();
    verify->add_option("--chain", chain_path, "chain spec JSON file");
    verify->add_option("--length", length, "default chain length (spectrum)")
        ->capture_default_str();
    verify->add_option("--monomial", monomial_json, "monomial JSON (dominance)");
    verify->add_option("--format", opts.format, "json|text")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (qchar->parsed())
            return run_qchar(ctor, opts, lambda_text, string_size, rank_override, which);
        if (verb == "tq") return run_verify_tq(opts, node_or_all);
        if (verb == "f-identity") {
            if (node_or_all > 0) opts.node = node_or_all;
            return run_verify_f(chain_path, opts, order);
        }
        if (verb == "dominance") {
            if (monomial_json.empty()) {
                std::cerr << "verify dominance requires --monomial\n";
                return kExitBadInput;
            }
            return run_verify_dominance(monomial_json, opts);
        }
        if (verb == "spectrum") return run_verify_spectrum(chain_path, length, opts.format);
        std::cerr << "unknown check '" << verb << "'\n";
        return kExitBadInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
