// Command-line front end.  Exit codes: 0 = success / true, 1 = false / none,
// 2 = error.  Complexes are read and written in the line-oriented document
// format; `-o -` (the default) writes to stdout.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "iotacalc/iotacalc.hpp"

namespace {

using namespace iotacalc;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

ComplexDocument load(const std::string& path) { return deserialize(read_file(path)); }

IotaKComplex load_uv(const std::string& path) {
    auto doc = load(path);
    if (!std::holds_alternative<IotaKComplex>(doc))
        throw std::runtime_error(path + ": expected an F2[U,V] complex");
    return std::get<IotaKComplex>(std::move(doc));
}

IotaComplex load_u(const std::string& path) {
    auto doc = load(path);
    if (!std::holds_alternative<IotaComplex>(doc))
        throw std::runtime_error(path + ": expected an F2[U] complex");
    return std::get<IotaComplex>(std::move(doc));
}

SearchOptions options_from_env() {
    SearchOptions opts;
    if (const char* w = std::getenv("IOTACALC_WORKERS")) {
        int n = std::atoi(w);
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (n >= 1) opts.workers = std::min(n, hw > 0 ? hw : 1);
    }
    return opts;
}

std::vector<SignedCnTerm> parse_terms(const std::string& text) {
    std::vector<SignedCnTerm> terms;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) throw std::runtime_error("empty term in '" + text + "'");
        size_t used = 0;
        int v = std::stoi(cur, &used);
        if (used != cur.size()) throw std::runtime_error("bad term '" + cur + "'");
        terms.push_back(SignedCnTerm{v > 0 ? +1 : -1, std::abs(v)});
    }
    return terms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for involutive knot-Floer-style complexes over F2"};
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string in_a, in_b, params_text, terms_text;
    std::vector<int> seq;
    int p = 0, q = 0, n = 0;
    bool knot = false, almost = false, full_check = false;
    int max_steps = 3, max_weight = 0;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "output file ('-' = stdout)");
    };

    auto* torus = app.add_subcommand("torus-cfk", "staircase complex of a torus knot");
    torus->add_option("P", p)->required();
    torus->add_option("Q", q)->required();
    add_out(torus);

    auto* stair = app.add_subcommand("staircase", "staircase complex from a symmetric sequence");
    stair->add_option("STEPS", seq, "symmetric positive step sequence")->required();
    add_out(stair);

    auto* box = app.add_subcommand("box", "five-generator box complex");
    box->add_option("N", n)->required();
    add_out(box);

    auto* tensor = app.add_subcommand("tensor", "tensor product of two complexes");
    tensor->add_option("A", in_a)->required();
    tensor->add_option("B", in_b)->required();
    tensor->add_flag("--knot", knot, "tensor over F2[U,V] with the knot involution formula");
    add_out(tensor);

    auto* dualc = app.add_subcommand("dual", "dual complex");
    dualc->add_option("A", in_a)->required();
    add_out(dualc);

    auto* a0 = app.add_subcommand("a0", "Alexander-grading-zero subcomplex over F2[U]");
    a0->add_option("A", in_a)->required();
    add_out(a0);

    auto* reduce = app.add_subcommand("reduce", "cancel constant differentials, carrying iota");
    reduce->add_option("A", in_a)->required();
    add_out(reduce);

    auto* verify = app.add_subcommand("verify", "check the involution relations");
    verify->add_option("A", in_a)->required();
    verify->add_flag("--almost", almost, "check mod U (F2[U] complexes only)");

    auto* equiv = app.add_subcommand("equiv", "two-sided local-map search");
    equiv->add_option("A", in_a)->required();
    equiv->add_option("B", in_b)->required();
    equiv->add_flag("--almost", almost, "mod-U local equivalence (F2[U] complexes only)");

    auto* srep = app.add_subcommand("standard-rep", "bounded standard-representative search");
    srep->add_option("A", in_a)->required();
    srep->add_option("--max-steps", max_steps, "bound on the number of steps m")->required();
    srep->add_option("--max-weight", max_weight, "bound on |b_i|")->required();

    auto* sum = app.add_subcommand("sum-params", "standard parameters of a sum of C(n) classes");
    sum->add_option("TERMS", terms_text, "comma-separated signed n values, e.g. 3,-2")->required();

    auto* sf = app.add_subcommand("sf-check", "Seifert-fibered-image membership");
    sf->add_option("PARAMS", params_text, "standard parameters, e.g. +,-1,+,-2")->required();

    auto* yn = app.add_subcommand("yn", "pipeline: E_n -> standard parameters -> SF verdict");
    yn->add_option("N", n)->required();
    yn->add_flag("--full-check", full_check, "also certify the box reduction at the UV level");
    yn->add_option("--max-steps", max_steps, "search bound on m (default 3)");
    yn->add_option("--max-weight", max_weight, "search bound on |b_i| (default N)");

    CLI11_PARSE(app, argc, argv);
    SearchOptions opts = options_from_env();

    try {
        if (torus->parsed()) {
            auto k = staircase(torus_alexander(p, q));
            write_output(out_path, serialize(k));
            return kTrue;
        }
        if (stair->parsed()) {
            auto k = staircase(seq);
            write_output(out_path, serialize(k));
            return kTrue;
        }
        if (box->parsed()) {
            auto k = box_complex(n);
            for (auto& note : k.notes) std::cerr << "warning: " << note << "\n";
            write_output(out_path, serialize(k));
            return kTrue;
        }
        if (tensor->parsed()) {
            auto da = load(in_a);
            auto db = load(in_b);
            if (knot) {
                if (!std::holds_alternative<IotaKComplex>(da) ||
                    !std::holds_alternative<IotaKComplex>(db))
                    throw std::runtime_error("--knot tensor needs two F2[U,V] complexes");
                write_output(out_path, serialize(tensor_iota_k(std::get<IotaKComplex>(da),
                                                               std::get<IotaKComplex>(db))));
            } else {
                if (!std::holds_alternative<IotaComplex>(da) ||
                    !std::holds_alternative<IotaComplex>(db))
                    throw std::runtime_error(
                        "tensor needs two F2[U] complexes (use --knot over F2[U,V])");
                write_output(out_path, serialize(tensor_iota(std::get<IotaComplex>(da),
                                                             std::get<IotaComplex>(db))));
            }
            return kTrue;
        }
        if (dualc->parsed()) {
            auto doc = load(in_a);
            if (std::holds_alternative<IotaKComplex>(doc))
                write_output(out_path, serialize(dual(std::get<IotaKComplex>(doc))));
            else
                write_output(out_path, serialize(dual(std::get<IotaComplex>(doc))));
            return kTrue;
        }
        if (a0->parsed()) {
            write_output(out_path, serialize(a0_subcomplex(load_uv(in_a))));
            return kTrue;
        }
        if (reduce->parsed()) {
            auto doc = load(in_a);
            if (std::holds_alternative<IotaKComplex>(doc)) {
                auto& k = std::get<IotaKComplex>(doc);
                auto red = cancel_reduce(k.cx, {CarriedUVMat{k.iota, true}});
                write_output(out_path, serialize(IotaKComplex{red.cx, red.carried[0].mat, {}}));
            } else {
                auto& c = std::get<IotaComplex>(doc);
                auto red = cancel_reduce(c.cx, {c.iota});
                write_output(out_path, serialize(IotaComplex{red.cx, red.carried[0]}));
            }
            return kTrue;
        }
        if (verify->parsed()) {
            auto doc = load(in_a);
            if (std::holds_alternative<IotaKComplex>(doc)) {
                if (almost)
                    throw std::runtime_error("--almost applies to F2[U] complexes only");
                auto r = verify_involution(std::get<IotaKComplex>(doc));
                std::cout << (r.passed ? "verified" : "failed: " + r.reason) << "\n";
                return r.passed ? kTrue : kFalse;
            }
            auto r = verify_involution(std::get<IotaComplex>(doc),
                                       almost ? Mode::almost : Mode::strict);
            std::cout << (r.passed ? "verified" : "failed: " + r.reason) << "\n";
            return r.passed ? kTrue : kFalse;
        }
        if (equiv->parsed()) {
            auto da = load(in_a);
            auto db = load(in_b);
            if (std::holds_alternative<IotaKComplex>(da) &&
                std::holds_alternative<IotaKComplex>(db)) {
                if (almost) throw std::runtime_error("--almost applies to F2[U] complexes only");
                auto r = is_iota_k_equivalent(std::get<IotaKComplex>(da),
                                              std::get<IotaKComplex>(db));
                if (r.equivalent)
                    std::cout << "equivalent (shifts " << r.forward->shift << ", "
                              << r.backward->shift << ")\n";
                else
                    std::cout << "not equivalent\n";
                return r.equivalent ? kTrue : kFalse;
            }
            if (std::holds_alternative<IotaComplex>(da) &&
                std::holds_alternative<IotaComplex>(db)) {
                auto r = is_equivalent(std::get<IotaComplex>(da), std::get<IotaComplex>(db),
                                       almost ? Mode::almost : Mode::strict, opts);
                if (r.equivalent)
                    std::cout << "equivalent (shifts " << r.forward->shift << ", "
                              << r.backward->shift << ")\n";
                else
                    std::cout << "not equivalent\n";
                return r.equivalent ? kTrue : kFalse;
            }
            throw std::runtime_error("equiv needs two complexes over the same ring");
        }
        if (srep->parsed()) {
            auto c = load_u(in_a);
            auto rep = standard_rep_search(c, SearchBounds{max_steps, max_weight}, opts);
            if (!rep) {
                std::cout << "not-found\n";
                return kFalse;
            }
            std::cout << to_string(*rep) << "\n";
            return kTrue;
        }
        if (sum->parsed()) {
            std::cout << to_string(simplified_sum_params(parse_terms(terms_text))) << "\n";
            return kTrue;
        }
        if (sf->parsed()) {
            bool member = sf_member(parse_params(params_text));
            std::cout << (member ? "true" : "false") << "\n";
            return member ? kTrue : kFalse;
        }
        if (yn->parsed()) {
            SearchBounds bounds{max_steps, max_weight > 0 ? max_weight : n};
            auto r = run_yn_pipeline(n, bounds, full_check, opts);
            if (!r.found) {
                std::cout << "not-found: raise --max-steps / --max-weight\n";
                return kFalse;
            }
            std::cout << "params: " << to_string(r.params) << "\n";
            std::cout << "sf: " << (r.sf ? "true" : "false") << "\n";
            if (r.full_check)
                std::cout << "full-check: "
                          << (r.full_check->certificates_ok ? "certified" : "FAILED") << "\n";
            if (r.full_check && !r.full_check->certificates_ok) return kFalse;
            return kTrue;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
