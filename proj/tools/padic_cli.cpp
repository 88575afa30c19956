#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "padic/arith.hpp"
#include "padic/charpoly.hpp"
#include "padic/frobenius.hpp"
#include "padic/io.hpp"
#include "padic/newton.hpp"
#include "padic/selftest.hpp"
#include "padic/semilinear.hpp"

namespace {

using namespace padic;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Usage, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

UnramElement load_element(const std::string& path) {
    return element_from_document(parse_document(read_input(path)));
}

std::vector<mpz_class> parse_coeff_list(const std::string& list) {
    std::vector<mpz_class> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(item, 10);
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::Parse, "bad decimal coefficient: " + item);
        }
    }
    return out;
}

void emit_element(const UnramElement& e) {
    std::cout << serialize_document(document_from_element(e)) << "\n";
}

template <typename T>
std::vector<T> parse_uint_list(const std::string& list) {
    std::vector<T> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<T>(std::stoull(item)));
    return out;
}

struct BenchSpec {
    std::string p_list = "5";
    std::string n_list = "2,4";
    std::string N_list = "1,2,4";
    unsigned reps = 5;
    std::uint64_t seed = 1;
    std::string ops = "mul,inv,frob,minpoly,teich";
};

std::int64_t time_median_ns(unsigned reps, const std::function<void()>& fn) {
    std::vector<std::int64_t> samples;
    samples.reserve(reps);
    for (unsigned i = 0; i < reps; ++i) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto stop = std::chrono::steady_clock::now();
        samples.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

void run_bench(const BenchSpec& spec) {
    std::vector<mpz_class> ps;
    {
        std::stringstream ss(spec.p_list);
        std::string item;
        while (std::getline(ss, item, ',')) ps.emplace_back(item, 10);
    }
    auto ns = parse_uint_list<unsigned>(spec.n_list);
    auto Ns = parse_uint_list<unsigned>(spec.N_list);
    std::vector<std::string> ops;
    {
        std::stringstream ss(spec.ops);
        std::string item;
        while (std::getline(ss, item, ',')) ops.push_back(item);
    }

    std::cout << "op,p,n,N,reps,median_ns,seed\n";
    for (const auto& p : ps) {
        for (unsigned n : ns) {
            // One phi per (p, n), shared across precisions.
            CtxPtr base = find_irreducible_context(p, n, 1, spec.seed);
            for (unsigned N : Ns) {
                CtxPtr ctx = N == 1 ? base
                                    : RingContext::create(
                                          p, n, N, DensePoly(base->phi().coeffs(),
                                                             Modulus::make(p, N)));
                UnramElement a = random_element(ctx, spec.seed + N);
                UnramElement b = random_element(ctx, spec.seed + N + 1);
                for (const auto& op : ops) {
                    std::function<void()> fn;
                    if (op == "mul") {
                        fn = [&] { mul(a, b); };
                    } else if (op == "inv") {
                        UnramElement u = element_valuation(a) == 0 ? a : add(a, one_element(ctx));
                        fn = [&, u] { inv(u); };
                    } else if (op == "frob") {
                        fn = [&] { frob_element(a, 1); };
                    } else if (op == "minpoly") {
                        fn = [&] { minimal_polynomial(a); };
                    } else if (op == "trace") {
                        fn = [&] { trace(a); };
                    } else if (op == "norm") {
                        fn = [&] { norm(a); };
                    } else if (op == "norm-res") {
                        fn = [&] { norm_resultant(a); };
                    } else if (op == "teich") {
                        fn = [&] { teichmuller_lift(a); };
                    } else {
                        fail(ErrorCode::Usage, "unknown bench op: " + op);
                    }
                    std::int64_t median = time_median_ns(spec.reps, fn);
                    std::cout << op << "," << p.get_str() << "," << n << "," << N << ","
                              << spec.reps << "," << median << "," << spec.seed << "\n";
                }
            }
        }
    }
}

int dispatch(CLI::App& app, int argc, char** argv);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-precision unramified p-adic arithmetic"};
    try {
        return dispatch(app, argc, argv);
    } catch (const Error& e) {
        std::cerr << "{\"code\":\"" << error_code_name(e.code()) << "\",\"message\":\""
                  << e.what() << "\"}\n";
        switch (e.code()) {
            case ErrorCode::Usage: return 1;
            case ErrorCode::Parse: return 3;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "{\"code\":\"Internal\",\"message\":\"" << e.what() << "\"}\n";
        return 2;
    }
}

namespace {

int dispatch(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);

    std::string input = "-", input2, alpha_path, beta_path, gamma_path, fcoeffs;
    long k = 1;
    BenchSpec bench;

    auto* ctx_check = app.add_subcommand("ctx-check", "validate a context document");
    ctx_check->add_option("input", input, "document path or -");

    auto* add_cmd = app.add_subcommand("add", "add two elements");
    add_cmd->add_option("lhs", input)->required();
    add_cmd->add_option("rhs", input2)->required();
    auto* mul_cmd = app.add_subcommand("mul", "multiply two elements");
    mul_cmd->add_option("lhs", input)->required();
    mul_cmd->add_option("rhs", input2)->required();
    auto* inv_cmd = app.add_subcommand("inv", "invert a unit");
    inv_cmd->add_option("input", input);
    auto* frob_cmd = app.add_subcommand("frob", "apply sigma^k");
    frob_cmd->add_option("input", input);
    frob_cmd->add_option("--k", k, "Frobenius power");
    auto* solve_cmd = app.add_subcommand("solve-as", "solve alpha*sigma(X)+beta*X+gamma=0");
    solve_cmd->add_option("--alpha", alpha_path)->required();
    solve_cmd->add_option("--beta", beta_path)->required();
    solve_cmd->add_option("--gamma", gamma_path)->required();
    auto* newton_cmd = app.add_subcommand("newton-lift", "lift a simple root of f");
    newton_cmd->add_option("input", input, "element document with the starting point y0");
    newton_cmd->add_option("--f", fcoeffs, "comma-separated coefficients of f, low to high")
        ->required();
    auto* teich_cmd = app.add_subcommand("teich", "Teichmueller lift");
    teich_cmd->add_option("input", input);
    auto* minpoly_cmd = app.add_subcommand("minpoly", "minimal polynomial over Z_p");
    minpoly_cmd->add_option("input", input);
    auto* trace_cmd = app.add_subcommand("trace", "trace over Z_p");
    trace_cmd->add_option("input", input);
    auto* norm_cmd = app.add_subcommand("norm", "norm over Z_p");
    norm_cmd->add_option("input", input);
    auto* normres_cmd = app.add_subcommand("norm-res", "norm via resultant");
    normres_cmd->add_option("input", input);
    auto* teichmod_cmd = app.add_subcommand("teichmod", "Teichmueller modulus of a context");
    teichmod_cmd->add_option("input", input);
    auto* bench_cmd = app.add_subcommand("bench", "benchmark grid, CSV output");
    bench_cmd->add_option("--p-list", bench.p_list);
    bench_cmd->add_option("--n-list", bench.n_list);
    bench_cmd->add_option("--N-list", bench.N_list);
    bench_cmd->add_option("--reps", bench.reps);
    bench_cmd->add_option("--seed", bench.seed);
    bench_cmd->add_option("--ops", bench.ops);
    auto* selftest_cmd = app.add_subcommand("selftest", "oracle-equivalence small grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (ctx_check->parsed()) {
        context_from_document(parse_document(read_input(input)));
        std::cout << "ok\n";
    } else if (add_cmd->parsed()) {
        emit_element(add(load_element(input), load_element(input2)));
    } else if (mul_cmd->parsed()) {
        emit_element(mul(load_element(input), load_element(input2)));
    } else if (inv_cmd->parsed()) {
        emit_element(inv(load_element(input)));
    } else if (frob_cmd->parsed()) {
        emit_element(frob_element(load_element(input), k));
    } else if (solve_cmd->parsed()) {
        emit_element(solve_artin_schreier(load_element(alpha_path), load_element(beta_path),
                                          load_element(gamma_path)));
    } else if (newton_cmd->parsed()) {
        UnramElement y0 = load_element(input);
        DensePoly f(parse_coeff_list(fcoeffs), y0.context()->modulus());
        emit_element(lift_root(scalar_problem(y0.context(), f, y0)));
    } else if (teich_cmd->parsed()) {
        emit_element(teichmuller_lift(load_element(input)));
    } else if (minpoly_cmd->parsed()) {
        std::cout << serialize_coeff_array(minimal_polynomial(load_element(input)).coeffs())
                  << "\n";
    } else if (trace_cmd->parsed()) {
        std::cout << trace(load_element(input)).str() << "\n";
    } else if (norm_cmd->parsed()) {
        std::cout << norm(load_element(input)).str() << "\n";
    } else if (normres_cmd->parsed()) {
        std::cout << norm_resultant(load_element(input)).str() << "\n";
    } else if (teichmod_cmd->parsed()) {
        CtxPtr ctx = context_from_document(parse_document(read_input(input)));
        std::cout << serialize_coeff_array(teichmuller_modulus(ctx).coeffs()) << "\n";
    } else if (bench_cmd->parsed()) {
        run_bench(bench);
    } else if (selftest_cmd->parsed()) {
        return run_selftest(std::cout) == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace
