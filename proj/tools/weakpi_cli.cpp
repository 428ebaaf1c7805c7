// weakpi: command-line front end.
//
// Inputs are read from the file given as the last argument, or from stdin.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "weakpi/weakpi.hpp"
#include "weakpi/selftest/criteria.hpp"

namespace {

using namespace weakpi;
using io::json;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void print_array(const TwoRowArray& s, bool as_json) {
    if (as_json)
        std::cout << io::array_to_json(s).dump() << "\n";
    else
        std::cout << io::format_array_text(s);
}

void print_tableau(const Tableau& t, bool as_json) {
    if (as_json)
        std::cout << io::tableau_to_json(t).dump() << "\n";
    else
        std::cout << io::format_tableau_text(t);
}

struct Options {
    std::string input;
    bool as_json = false;
    std::string to = "dtableau";
    std::string content, shape, convention = "english";
    bool normal = false;
    int k = 2, maxdeg = 8;
    std::string method = "cd";
    int max_m = 4;
    std::string identity = "c3";
    int samples = 100, generators = 12;
    std::uint64_t seed = 1;
};

int run_convert(const Options& o) {
    const std::string text = slurp(o.input);
    if (o.to == "dtableau") {
        const auto s = io::read_array(text);
        if (!is_c_array(s)) throw argument_error("input is not a c-array (try `normalize` first)");
        print_tableau(carray_to_dtableau(s), o.as_json);
    } else {
        const auto t = io::read_tableau(text);
        if (!is_d_tableau(t)) throw argument_error("input is not a d-tableau");
        print_array(dtableau_to_carray(t), o.as_json);
    }
    return 0;
}

int run_normalize(const Options& o) {
    const auto n = normalize(io::read_array(slurp(o.input)));
    if (o.as_json) {
        json j{{"sign", n.sign()}};
        if (!n.is_zero()) j["array"] = io::array_to_json(n.array());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << n.sign() << "\n";
        if (!n.is_zero()) std::cout << io::format_array_text(n.array());
    }
    return 0;
}

int run_classify(const Options& o) {
    const auto c = classify(io::read_array(slurp(o.input)));
    if (o.as_json)
        std::cout << json{{"class", to_string(c)}}.dump() << "\n";
    else
        std::cout << to_string(c) << "\n";
    return 0;
}

int run_straighten(const Options& o) {
    const auto l = straighten(io::read_array(slurp(o.input)));
    if (o.as_json) {
        std::cout << io::lincomb_to_json(l).dump(2) << "\n";
    } else {
        for (const auto& [s, c] : l.terms()) std::cout << to_fraction_string(c) << "  " << io::one_line(s) << "\n";
    }
    return 0;
}

int run_enumerate(const Options& o) {
    if (o.normal) {
        if (o.content.empty()) throw argument_error("--normal needs --content");
        for (const auto& s : enumerate_normal(io::parse_content(o.content))) {
            if (o.as_json)
                std::cout << io::array_to_json(s).dump() << "\n";
            else
                std::cout << io::one_line(s) << "\n";
        }
        return 0;
    }
    if (o.shape.empty() || o.content.empty()) throw argument_error("enumerate needs --shape and --content, or --content with --normal");
    const Convention conv = o.convention == "french" ? Convention::french : Convention::english;
    for (const auto& t : enumerate_ssyt(io::parse_shape(o.shape), io::parse_content(o.content), conv)) {
        if (o.as_json)
            std::cout << io::tableau_to_json(t).dump() << "\n";
        else
            std::cout << io::one_line(t) << "\n";
    }
    return 0;
}

int run_dims(const Options& o) {
    if (o.content.empty()) throw argument_error("dims needs --content");
    std::cout << dimension(io::parse_content(o.content)).get_str() << "\n";
    return 0;
}

int run_hilbert(const Options& o) {
    if (o.maxdeg > 8)
        std::cerr << "warning: --maxdeg " << o.maxdeg << " above 8 can be slow for --method tableaux\n";
    SymPoly h = o.method == "tableaux" ? hilbert_by_tableaux(o.k, o.maxdeg)
                : o.method == "dims"   ? hilbert_by_dimensions(o.k, o.maxdeg)
                                       : carini_drensky(o.k, o.maxdeg);
    std::cout << h.to_string() << "\n";
    return 0;
}

int run_codim(const Options& o) {
    const auto g = gamma_coefficients(o.max_m);
    if (o.as_json) {
        json j = json::array();
        for (const auto& c : g) j.push_back(to_string(c));
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& c : g) std::cout << to_string(c) << "\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    const Candidate f = o.identity == "p" ? identity_p()
                        : o.identity == "commutator" ? commutator_x1_x2()
                                                     : identity_c3();
    std::cout << "# identity " << f.name << ", samples " << o.samples << ", generators " << o.generators
              << ", seed " << o.seed << "\n";
    const auto r = verify_weak_identity(f, o.samples, o.generators, o.seed);
    if (r.holds) {
        std::cout << "vanished on " << r.samples_run << " samples\n";
        return 0;
    }
    std::cout << "nonzero at sample " << r.samples_run << "\n";
    for (std::size_t i = 0; i < r.counterexample.size(); ++i)
        std::cout << "x" << i + 1 << " = " << r.counterexample[i].to_string() << "\n";
    std::cout << "value = " << r.value->to_string() << "\n";
    return 1;
}

int run_selftest() {
    int failed = 0;
    for (const auto& run : selftest::all_criteria()) {
        const auto r = run();
        std::cout << selftest::format_result(r) << std::endl;
        if (!r.passed) ++failed;
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-row arrays, d-tableaux and weak identities of M_{1,1}(E)"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "input file (default: stdin)");
        sub->add_flag("--json", o.as_json, "JSON output");
    };

    auto* convert = app.add_subcommand("convert", "c-array <-> d-tableau");
    convert->add_option("--to", o.to, "target form")->check(CLI::IsMember({"dtableau", "carray"}));
    input(convert);
    auto* norm = app.add_subcommand("normalize", "signed normal form of a raw array");
    input(norm);
    auto* cls = app.add_subcommand("classify", "raw, c-array or normal");
    input(cls);
    auto* str = app.add_subcommand("straighten", "express an array in normal c-arrays");
    input(str);

    auto* en = app.add_subcommand("enumerate", "list normal c-arrays or semistandard tableaux");
    en->add_option("--content", o.content, "content, e.g. 1,1,2");
    en->add_flag("--normal", o.normal, "list normal c-arrays of the content");
    en->add_option("--shape", o.shape, "shape, e.g. 2,2");
    en->add_option("--convention", o.convention)->check(CLI::IsMember({"english", "french"}));
    en->add_flag("--json", o.as_json, "JSON output");

    auto* dims = app.add_subcommand("dims", "dimension of a multihomogeneous component");
    dims->add_option("--content", o.content, "content, e.g. 1,1,1,1")->required();

    auto* hil = app.add_subcommand("hilbert", "truncated Hilbert series");
    hil->add_option("--k", o.k, "number of variables")->check(CLI::Range(1, 8));
    hil->add_option("--maxdeg", o.maxdeg, "truncation degree")->check(CLI::NonNegativeNumber);
    hil->add_option("--method", o.method)->check(CLI::IsMember({"cd", "tableaux", "dims"}));

    auto* cod = app.add_subcommand("codim", "coefficients of the codimension series");
    cod->add_option("--max-m", o.max_m, "largest m; prints z^0..z^{2m}")->check(CLI::NonNegativeNumber);
    cod->add_flag("--json", o.as_json, "JSON output");

    auto* ver = app.add_subcommand("verify", "random check of a weak identity of M_{1,1}(E)");
    ver->add_option("--identity", o.identity)->check(CLI::IsMember({"c3", "p", "commutator"}));
    ver->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    ver->add_option("--generators", o.generators)->check(CLI::Range(1, 63));
    ver->add_option("--seed", o.seed);

    auto* self = app.add_subcommand("selftest", "run the acceptance checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }

    try {
        if (convert->parsed()) return run_convert(o);
        if (norm->parsed()) return run_normalize(o);
        if (cls->parsed()) return run_classify(o);
        if (str->parsed()) return run_straighten(o);
        if (en->parsed()) return run_enumerate(o);
        if (dims->parsed()) return run_dims(o);
        if (hil->parsed()) return run_hilbert(o);
        if (cod->parsed()) return run_codim(o);
        if (ver->parsed()) return run_verify(o);
        if (self->parsed()) return run_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
