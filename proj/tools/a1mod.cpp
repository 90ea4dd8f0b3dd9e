#include "a1mod/catalog.hpp"
#include "a1mod/io.hpp"
#include "a1mod/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace a1mod;

namespace {

struct Options
{
    std::string algebra = "A1";
    int max_degree = 48;
    int min_degree = -2;
    bool min_given = false;
    std::string format = "json";
    unsigned seed = 1;
    std::string out;
};

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

AlgebraName algebra_name(const Options& o)
{
    return o.algebra == "E1" ? AlgebraName::E1 : AlgebraName::A1;
}

void emit_text(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f)
        throw UsageError("cannot write " + o.out);
    f << text;
}

std::string render(const Options& o, const GradedModule& m, const std::string& name, const Provenance& p = {})
{
    if (o.format == "dot")
        return to_dot(m, name);
    if (o.format == "ascii")
        return to_ascii(m);
    return write_module(m, p);
}

std::string slurp(std::istream& in)
{
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/* "-" reads a module file from stdin, an existing path reads a file, anything else is a catalog key */
GradedModule load_input(const Options& o, const std::string& s)
{
    if (s == "-")
        return read_module(slurp(std::cin)).module;
    if (std::filesystem::exists(s))
        return read_module_file(s).module;
    CatalogKey key;
    try {
        key = CatalogKey::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return make(key, algebra_name(o), o.min_given ? o.min_degree : kAutoLow, o.max_degree);
}

GradedModule apply_op(const Options& o, const std::string& op, const std::vector<GradedModule>& in)
{
    size_t want = op == "tensor" ? 2 : 1;
    if (in.size() != want)
        throw UsageError(op + " takes " + std::to_string(want) + " input(s)");
    for (auto& m : in) {
        auto r = validate(m);
        if (!r.ok())
            throw std::runtime_error("input fails validation in degree " + std::to_string(r.violations[0].degree) +
                                     ": " + r.violations[0].relation);
    }
    const GradedModule& m = in[0];
    if (op == "tensor")
        return tensor(m, in[1]);
    if (op == "loops")
        return loops(m);
    if (op == "invloops")
        return inverse_loops(m);
    if (op == "localize0")
        return localize(m, 0, o.max_degree);
    if (op == "localize1")
        return localize(m, 1, o.max_degree);
    if (op == "dual")
        return dual(m);
    if (op == "reduce")
        return *reduced(m);
    throw UsageError("unknown op '" + op + "'");
}

std::string interval_string(Interval i)
{
    return std::to_string(i.lo) + ".." + std::to_string(i.hi);
}

int run_verify(const Options& o, const std::string& suite)
{
    VerifyReport r;
    try {
        r = run_suite(suite, o.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    emit_text(o, o.format == "json" ? r.to_json() : r.to_text());
    return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded modules over A(1) and E(1): catalog, functors, invariants"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--algebra", o.algebra, "A1 or E1")->check(CLI::IsMember({"A1", "E1"}));
        c->add_option("--max-degree", o.max_degree, "top of the computation window");
        c->add_option_function<int>(
            "--min-degree",
            [&](const int& v) {
                o.min_degree = v;
                o.min_given = true;
            },
            "bottom of the computation window (default -2)");
        c->add_option("--format", o.format, "json, dot or ascii")->check(CLI::IsMember({"json", "dot", "ascii"}));
        c->add_option("--seed", o.seed, "seed for randomized checks");
        c->add_option("--out", o.out, "output path (default stdout)");
    };

    std::string key;
    auto* emit = app.add_subcommand("emit", "write a catalog module");
    emit->add_option("key", key, "catalog key, e.g. P2, S^4 R, Fseq:1")->required();
    common(emit);

    std::string op;
    std::vector<std::string> inputs;
    auto* apply = app.add_subcommand("apply", "apply a functor to modules");
    apply->add_option("op", op, "tensor, loops, invloops, localize0, localize1, dual, reduce")
        ->required()
        ->check(CLI::IsMember({"tensor", "loops", "invloops", "localize0", "localize1", "dual", "reduce"}));
    apply->add_option("inputs", inputs, "catalog keys, module files, or - for stdin")->required();
    common(apply);

    std::string what;
    int k = -1, s = 1, t = 0;
    auto* analyze = app.add_subcommand("analyze", "invariants of a module");
    analyze->add_option("what", what, "margolis, split, classify or ext")
        ->required()
        ->check(CLI::IsMember({"margolis", "split", "classify", "ext"}));
    analyze->add_option("inputs", inputs, "module (ext: source then target)")->required();
    analyze->add_option("--k", k, "Margolis index (default: all)");
    analyze->add_option("--s", s, "Ext homological degree");
    analyze->add_option("--t", t, "Ext internal degree");
    common(analyze);

    int s_max = 3;
    auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("input", key, "module")->required();
    resolve->add_option("--s-max", s_max, "number of stages");
    common(resolve);

    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite, "axioms, periodicity, localization, picard, idempotents, appendix-a, hilbert, laurent, all")
        ->required();
    common(verify);
    verify->get_option("--format")->default_str("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*emit) {
            GradedModule m = load_input(o, key);
            emit_text(o, render(o, m, key));
            return 0;
        }
        if (*apply) {
            std::vector<GradedModule> in;
            for (auto& i : inputs)
                in.push_back(load_input(o, i));
            GradedModule r = apply_op(o, op, in);
            Provenance p;
            std::string joined;
            for (auto& i : inputs)
                joined += (joined.empty() ? "" : " ") + i;
            p["inputs"] = joined;
            p["op"] = op;
            p["trusted"] = interval_string(r.trusted());
            emit_text(o, render(o, r, op, p));
            return 0;
        }
        if (*analyze) {
            std::vector<GradedModule> in;
            for (auto& i : inputs)
                in.push_back(load_input(o, i));
            Json out;
            if (what == "ext") {
                if (in.size() != 2)
                    throw UsageError("ext takes a source and a target module");
                out = Json{{"s", s}, {"t", t}, {"dim", ext_dim(share(in[0]), in[1], s, t)}};
            } else {
                if (in.size() != 1)
                    throw UsageError(what + " takes one module");
                const GradedModule& m = in[0];
                int kmax = m.algebra().name == AlgebraName::A1 ? 1 : 0;
                if (what == "margolis") {
                    out = Json::array();
                    for (int q = 0; q <= kmax; ++q)
                        if (k < 0 || k == q)
                            out.push_back(to_json(margolis_homology(m, q)));
                } else if (what == "split") {
                    out = to_json(reduced_part(share(m)));
                } else {
                    out = Json::array();
                    for (int q = 0; q <= kmax; ++q)
                        if (k < 0 || k == q) {
                            auto c = try_classify_local(m, q);
                            out.push_back(c ? to_json(*c) : Json{{"k", q}, {"class", nullptr}});
                        }
                }
            }
            emit_text(o, out.dump(1) + "\n");
            return 0;
        }
        if (*resolve) {
            Resolution r = minimal_resolution(share(load_input(o, key)), s_max);
            emit_text(o, to_json(r).dump(1) + "\n");
            return 0;
        }
        if (o.format == "json" && verify->get_option("--format")->count() == 0)
            o.format = "text";
        return run_verify(o, suite);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
