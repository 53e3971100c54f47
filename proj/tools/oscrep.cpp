/// oscrep: command-line front end for the oscillator-representation library.
///
/// Subcommands cover construction (`ops show`, `slice`, `kernel`, `basis`),
/// solving (`decompose`), and auditing (`rep check`, `singular`, `audit`,
/// `identity`).  Every run echoes the parameters and degree cap it used, and
/// identical invocations produce byte-identical output.
///
/// Exit codes: 0 all checks passed (or nothing to check), 1 at least one
/// check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oscrep/flag.hpp"
#include "oscrep/linalg.hpp"
#include "oscrep/reps.hpp"
#include "oscrep/slices.hpp"
#include "oscrep/text.hpp"
#include "oscrep/verify.hpp"
#include "oscrep/weyl.hpp"

namespace {

using namespace oscrep;

struct Options {
    std::string family = "sl";
    unsigned n = 3;
    unsigned n1 = 1;
    unsigned n2 = 2;
    std::optional<long> l1;
    std::optional<long> l2;
    std::optional<long> k;
    unsigned cap = 6;
    std::uint64_t seed = 20260819;
    std::string format = "text";
    std::string out_path;
    std::string poly_text;
    std::string audit_id;
    std::string identity_id;
};

RepParams params_of(const Options& o) {
    const std::optional<Family> fam = family_from_name(o.family);
    if (!fam.has_value()) throw std::invalid_argument("unknown family: " + o.family);
    return RepParams::make(*fam, o.n, o.n1, o.n2);
}

/// Slice selection: --l1/--l2 name a bigraded slice, --k a combined-grade
/// slice (the zeroth-variable-aware variant for the odd family).
SliceKey slice_key_of(const Options& o, const RepParams& p) {
    if (o.l1.has_value() || o.l2.has_value()) {
        if (!(o.l1.has_value() && o.l2.has_value()))
            throw std::invalid_argument("a bigraded slice needs both --l1 and --l2");
        if (o.k.has_value())
            throw std::invalid_argument("pass either --l1/--l2 or --k, not both");
        return SliceKey::bigraded(*o.l1, *o.l2);
    }
    if (o.k.has_value())
        return p.has_x0() ? SliceKey::odd_total(*o.k) : SliceKey::total(*o.k);
    throw std::invalid_argument("the command needs a slice: pass --l1/--l2 or --k");
}

/// Report destination: stdout by default, a file when --out is given.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::json params_json(const RepParams& p) {
    return nlohmann::json{
        {"family", family_name(p.family)}, {"n", p.n}, {"n1", p.n1}, {"n2", p.n2}};
}

void text_header(std::ostream& os, const std::string& command, const RepParams& p,
                 const Options& o, const std::optional<SliceKey>& key = std::nullopt) {
    os << "# oscrep " << command << '\n';
    os << "# params: " << params_label(p);
    if (key.has_value()) os << "  slice=" << key->to_string();
    os << "  cap=" << o.cap << '\n';
}

nlohmann::json json_header(const std::string& command, const RepParams& p, const Options& o,
                           const std::optional<SliceKey>& key = std::nullopt) {
    nlohmann::json j{{"command", command}, {"params", params_json(p)}, {"cap", o.cap}};
    if (key.has_value()) j["slice"] = key->to_string();
    return j;
}

/// Shared emitter for the check-list commands (`rep check`, `audit`,
/// `identity`); the JSON form is the flat list of check records.
int emit_checks(const Options& o, const std::string& command, const RepParams& p,
                const CheckList& checks) {
    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        os << checks_to_json(checks).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "check,params,slice,cap,status,detail\n";
        for (const auto& it : checks)
            os << csv_field(it.check) << ',' << csv_field(it.params) << ','
               << csv_field(it.slice) << ',' << it.cap << ','
               << (it.pass ? "pass" : "fail") << ',' << csv_field(it.detail) << '\n';
    } else {
        text_header(os, command, p, o);
        std::size_t passed = 0;
        for (const auto& it : checks) {
            os << (it.pass ? "pass  " : "FAIL  ") << it.check << "  [" << it.params
               << "  slice=" << it.slice << "  cap=" << it.cap << ']';
            if (!it.detail.empty()) os << "  " << it.detail;
            os << '\n';
            if (it.pass) ++passed;
        }
        os << passed << '/' << checks.size() << " checks passed\n";
    }
    return all_pass(checks) ? 0 : 1;
}

int cmd_rep_check(const Options& o) {
    const RepParams p = params_of(o);
    CheckList checks;
    checks.push_back(check_homomorphism(p));
    const CheckList sl2 = check_sl2_identities(p);
    checks.insert(checks.end(), sl2.begin(), sl2.end());
    checks.push_back(check_equivariance(p));
    checks.push_back(check_adjointness(p, 100, 5, o.seed));
    return emit_checks(o, "rep check", p, checks);
}

int cmd_ops_show(const Options& o) {
    const RepParams p = params_of(o);
    const SpecialOperators ops = special_operators(p);
    const bool odd = p.has_x0();
    const std::vector<std::pair<std::string, const WeylOperator*>> special = {
        {odd ? "Dp" : "D", &ops.laplace},
        {odd ? "etap" : "eta", &ops.dual},
        {"flat", &ops.flat},
        {"flatp", &ops.flat_prime}};
    const std::vector<Generator> cartan = cartan_basis(p);
    const std::vector<Generator> simple = simple_positive(p);
    const std::vector<Generator> span = spanning_set(p);

    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json j = json_header("ops show", p, o);
        auto op_entry = [](const std::string& name, const WeylOperator& op) {
            return nlohmann::json{{"name", name}, {"op", to_string(op, OpStyle::Json)}};
        };
        nlohmann::json sp = nlohmann::json::array();
        for (const auto& [name, op] : special) sp.push_back(op_entry(name, *op));
        j["special"] = std::move(sp);
        auto gen_array = [&](const std::vector<Generator>& gens) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& g : gens) arr.push_back(op_entry(g.name, g.op));
            return arr;
        };
        j["cartan"] = gen_array(cartan);
        j["simple_positive"] = gen_array(simple);
        j["spanning"] = gen_array(span);
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "section,name,op,params\n";
        auto row = [&](const std::string& section, const std::string& name,
                       const WeylOperator& op) {
            os << section << ',' << csv_field(name) << ','
               << csv_field(to_string(op, OpStyle::Json)) << ','
               << csv_field(params_label(p)) << '\n';
        };
        for (const auto& [name, op] : special) row("special", name, *op);
        for (const auto& g : cartan) row("cartan", g.name, g.op);
        for (const auto& g : simple) row("simple-positive", g.name, g.op);
        for (const auto& g : span) row("spanning", g.name, g.op);
    } else {
        text_header(os, "ops show", p, o);
        for (const auto& [name, op] : special)
            os << name << " = " << to_string(*op, OpStyle::Text) << '\n';
        os << "cartan:\n";
        for (const auto& g : cartan)
            os << g.name << " = " << to_string(g.op, OpStyle::Text) << '\n';
        os << "simple positive:\n";
        for (const auto& g : simple)
            os << g.name << " = " << to_string(g.op, OpStyle::Text) << '\n';
        os << "spanning set:\n";
        for (const auto& g : span)
            os << g.name << " = " << to_string(g.op, OpStyle::Text) << '\n';
    }
    return 0;
}

/// Shared emitter for commands whose payload is a list of polynomials.
int emit_elements(const Options& o, const std::string& command, const RepParams& p,
                  const SliceKey& key, const std::vector<Polynomial>& elements,
                  const std::vector<std::pair<std::string, std::string>>& extras = {}) {
    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json j = json_header(command, p, o, key);
        j["dimension"] = elements.size();
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : elements) arr.push_back(to_string(f));
        j["elements"] = std::move(arr);
        for (const auto& [k2, v] : extras) j[k2] = v;
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "index,element,slice,params,cap\n";
        for (std::size_t i = 0; i < elements.size(); ++i)
            os << i << ',' << csv_field(to_string(elements[i])) << ','
               << csv_field(key.to_string()) << ',' << csv_field(params_label(p)) << ','
               << o.cap << '\n';
    } else {
        text_header(os, command, p, o, key);
        os << "dimension = " << elements.size() << '\n';
        for (const auto& [k2, v] : extras) os << k2 << " = " << v << '\n';
        for (const auto& f : elements) os << to_string(f) << '\n';
    }
    return 0;
}

int cmd_slice(const Options& o) {
    const RepParams p = params_of(o);
    const SliceKey key = slice_key_of(o, p);
    const SliceBasis b = slice_enumerate(p, key, o.cap);
    std::vector<Polynomial> elements;
    elements.reserve(b.monomials.size());
    for (const auto& m : b.monomials) elements.push_back(Polynomial::term(m, Scalar(1)));
    return emit_elements(o, "slice", p, key, elements);
}

int cmd_kernel(const Options& o) {
    const RepParams p = params_of(o);
    const SliceKey key = slice_key_of(o, p);
    const SliceBasis b = slice_enumerate(p, key, o.cap);
    const SubspaceBasis kb = kernel_on_slice(special_operators(p).laplace, b);
    return emit_elements(o, "kernel", p, key, kb.polynomials());
}

int cmd_basis(const Options& o) {
    const RepParams p = params_of(o);
    const SliceKey key = slice_key_of(o, p);
    HarmonicBasisResult r;
    switch (key.kind) {
        case SliceKey::Kind::Bigraded:
            if (p.has_x0())
                throw std::invalid_argument("bigraded bases need an even family");
            r = harmonic_basis_sl(p, key.l1, key.l2, o.cap);
            break;
        case SliceKey::Kind::Total:
            r = harmonic_basis_total(p, key.k, o.cap);
            break;
        case SliceKey::Kind::OddTotal:
            r = harmonic_basis_odd(p, key.k, o.cap);
            break;
    }
    const std::vector<std::pair<std::string, std::string>> extras = {
        {"seeds_considered", std::to_string(r.seeds_considered)},
        {"excluded_over_cap", std::to_string(r.excluded_over_cap)},
        {"kernel_verified", r.kernel_verified ? "yes" : "no"}};
    const int rc = emit_elements(o, "basis", p, key, r.basis.polynomials(), extras);
    return rc != 0 ? rc : (r.kernel_verified ? 0 : 1);
}

int cmd_singular(const Options& o) {
    const RepParams p = params_of(o);
    const SliceKey key = slice_key_of(o, p);
    const SingularReport r = singular_vectors(p, key, o.cap);
    bool agreement = true;
    if (r.has_catalog) {
        agreement = r.catalog_complete;
        for (const auto& v : r.vectors) agreement = agreement && v.catalog_match;
    }

    auto weight_text = [](const std::vector<Scalar>& w) {
        std::string s = "(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ',';
            s += w[i].get_str();
        }
        return s + ")";
    };

    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json j = json_header("singular", p, o, key);
        j["harmonic"] = r.harmonic;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : r.vectors) {
            nlohmann::json weight = nlohmann::json::array();
            for (const auto& c : v.weight) weight.push_back(c.get_str());
            arr.push_back(nlohmann::json{{"vector", to_string(v.vector)},
                                         {"weight", std::move(weight)},
                                         {"catalog_match", v.catalog_match}});
        }
        j["vectors"] = std::move(arr);
        j["has_catalog"] = r.has_catalog;
        j["catalog_dimension"] = r.catalog_dimension;
        j["catalog_complete"] = r.catalog_complete;
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "vector,weight,catalog_match,slice,params,cap\n";
        for (const auto& v : r.vectors)
            os << csv_field(to_string(v.vector)) << ',' << csv_field(weight_text(v.weight))
               << ',' << (v.catalog_match ? "yes" : "no") << ','
               << csv_field(key.to_string()) << ',' << csv_field(params_label(p)) << ','
               << o.cap << '\n';
    } else {
        text_header(os, "singular", p, o, key);
        os << "vectors = " << r.vectors.size() << '\n';
        for (const auto& v : r.vectors) {
            os << to_string(v.vector) << "  weight=" << weight_text(v.weight);
            if (r.has_catalog) os << "  catalog=" << (v.catalog_match ? "yes" : "no");
            os << '\n';
        }
        os << "has_catalog = " << (r.has_catalog ? "yes" : "no") << '\n';
        if (r.has_catalog) {
            os << "catalog_dimension = " << r.catalog_dimension << '\n';
            os << "catalog_complete = " << (r.catalog_complete ? "yes" : "no") << '\n';
        }
    }
    return agreement ? 0 : 1;
}

int cmd_decompose(const Options& o) {
    const RepParams p = params_of(o);
    const Polynomial f = parse_polynomial(o.poly_text);
    const DecompositionResult d = harmonic_decompose(p, f);

    Sink sink(o.out_path);
    std::ostream& os = sink.stream();
    if (o.format == "json") {
        nlohmann::json j = json_header("decompose", p, o);
        j["input"] = to_string(d.input);
        j["grading"] = d.grading;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : d.components)
            arr.push_back(nlohmann::json{{"m", c.m}, {"h", to_string(c.h)}});
        j["components"] = std::move(arr);
        os << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "input,grading,m,h,params\n";
        for (const auto& c : d.components)
            os << csv_field(to_string(d.input)) << ',' << d.grading << ',' << c.m << ','
               << csv_field(to_string(c.h)) << ',' << csv_field(params_label(p)) << '\n';
    } else {
        text_header(os, "decompose", p, o);
        os << "input = " << to_string(d.input) << '\n';
        os << "grading = " << d.grading << '\n';
        for (const auto& c : d.components)
            os << "m=" << c.m << "  h = " << to_string(c.h) << '\n';
    }
    return 0;
}

int cmd_audit(const Options& o) {
    const RepParams p = params_of(o);
    CheckList checks;
    if (o.audit_id == "thm1") {
        if (!(o.l1.has_value() && o.l2.has_value()))
            throw std::invalid_argument("audit thm1 needs --l1 and --l2");
        checks = decomposition_audit(p, SliceKey::bigraded(*o.l1, *o.l2), o.cap);
    } else if (o.audit_id == "thm2") {
        checks = decomposition_audit(p, SliceKey::total(o.k.value_or(0)), o.cap);
    } else if (o.audit_id == "thm3") {
        if (!p.has_x0())
            throw std::invalid_argument("audit thm3 needs --family so-odd");
        checks = decomposition_audit(p, SliceKey::odd_total(o.k.value_or(0)), o.cap);
    } else {
        checks = sp_zero_split_audit(p, o.cap);
    }
    return emit_checks(o, "audit " + o.audit_id, p, checks);
}

int cmd_identity(const Options& o) {
    const RepParams p = params_of(o);
    if (o.identity_id.empty()) {
        Sink sink(o.out_path);
        std::ostream& os = sink.stream();
        if (o.format == "json") {
            nlohmann::json j{{"command", "identity"}, {"suites", transition_suites()}};
            os << j.dump(2) << '\n';
        } else if (o.format == "csv") {
            os << "suite\n";
            for (const auto& s : transition_suites()) os << s << '\n';
        } else {
            os << "# oscrep identity\navailable suites:\n";
            for (const auto& s : transition_suites()) os << s << '\n';
        }
        return 0;
    }
    const CheckList checks = transition_identities(p, o.identity_id);
    return emit_checks(o, "identity " + o.identity_id, p, checks);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Exact oscillator representations of the classical Lie algebras "
                 "on polynomial spaces"};
    app.require_subcommand(1);

    app.add_option("--family", opt.family, "algebra family")
        ->check(CLI::IsMember({"sl", "so-even", "so-odd", "sp"}))
        ->capture_default_str();
    app.add_option("--n", opt.n, "matrix size parameter")->capture_default_str();
    app.add_option("--n1", opt.n1, "size of the twisted x-block")->capture_default_str();
    app.add_option("--n2", opt.n2, "size of the untwisted y-block")->capture_default_str();
    app.add_option("--l1", opt.l1, "x-side grade of a bigraded slice");
    app.add_option("--l2", opt.l2, "y-side grade of a bigraded slice");
    app.add_option("--k", opt.k, "combined grade of a total slice");
    app.add_option("--cap", opt.cap, "degree cap for truncated enumeration")
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", opt.out_path, "write output to a file instead of stdout");

    CLI::App* rep = app.add_subcommand("rep", "representation-level verification");
    rep->require_subcommand(1);
    CLI::App* rep_check = rep->add_subcommand(
        "check", "verify the defining relations, equivariance, and adjointness");
    CLI::App* ops = app.add_subcommand("ops", "operator inspection");
    ops->require_subcommand(1);
    CLI::App* ops_show =
        ops->add_subcommand("show", "print the special operators and generators");
    CLI::App* slice = app.add_subcommand("slice", "enumerate a graded slice");
    CLI::App* kernel =
        app.add_subcommand("kernel", "kernel of the Laplace operator on a slice");
    CLI::App* basis = app.add_subcommand("basis", "series-solver harmonic basis for a slice");
    CLI::App* singular = app.add_subcommand("singular", "singular vectors on a slice");
    CLI::App* decomp =
        app.add_subcommand("decompose", "split a polynomial into dual-power layers");
    decomp->add_option("poly", opt.poly_text, "polynomial to decompose")->required();
    CLI::App* audit = app.add_subcommand("audit", "run a structure audit suite");
    audit->add_option("id", opt.audit_id, "audit id")
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4"}));
    CLI::App* identity =
        app.add_subcommand("identity", "check a transition-identity suite (omit id to list)");
    identity->add_option("id", opt.identity_id, "suite id");

    for (CLI::App* sub : {rep, rep_check, ops, ops_show, slice, kernel, basis, singular,
                          decomp, audit, identity})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rep_check->parsed()) return cmd_rep_check(opt);
        if (ops_show->parsed()) return cmd_ops_show(opt);
        if (slice->parsed()) return cmd_slice(opt);
        if (kernel->parsed()) return cmd_kernel(opt);
        if (basis->parsed()) return cmd_basis(opt);
        if (singular->parsed()) return cmd_singular(opt);
        if (decomp->parsed()) return cmd_decompose(opt);
        if (audit->parsed()) return cmd_audit(opt);
        if (identity->parsed()) return cmd_identity(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
