// bsl: command-line front end for the GR(4, e) scheme toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bsl/fusion.hpp"
#include "bsl/galois_ring.hpp"
#include "bsl/hadamard.hpp"
#include "bsl/scheme.hpp"
#include "bsl/serialize.hpp"

using namespace bsl;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    int e = 3;
    int roots = 4;
    std::string constancy = "full";
    std::string format = "json";
    std::string output;
    std::uint64_t seed = 0;
    std::string phi;
    std::size_t dense_cap = kDefaultDenseCap;

    // leaf options
    bool full = false;
    std::size_t min_class = 3;
    bool class3 = false;
    long long a = 0;
    bool certify = false;
    std::string weights;
    std::vector<std::string> which;
    bool all = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A failed check: the document still gets written, then we exit with 1.
struct Outcome {
    json doc;
    std::string markdown;
    bool passed = true;
};

std::string poly_str(const std::vector<int>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const int c = coeffs[k];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || c != 1) os << c;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return first ? "0" : os.str();
}

std::vector<int> phi2_coeffs(const GaloisRing& R) {
    std::vector<int> c;
    for (int k = 0; k <= R.e(); ++k) c.push_back(static_cast<int>((R.phi2() >> k) & 1u));
    return c;
}

std::vector<int> phi4_coeffs(const GaloisRing& R) { return {R.phi4().begin(), R.phi4().end()}; }

std::string gauss_str(const GaussInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::string blocks_str(const std::vector<IndexBlock>& blocks) {
    if (blocks.empty()) return "-";
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << ",";
        os << "{";
        for (std::size_t k = 0; k < blocks[b].size(); ++k) os << (k ? "," : "") << blocks[b][k];
        os << "}";
    }
    return os.str();
}

std::string matrix_markdown(const Eigenmatrix& P) {
    std::ostringstream os;
    os << "|   |";
    for (std::size_t j = 0; j < P.size(); ++j) os << " " << j << " |";
    os << "\n|---|";
    for (std::size_t j = 0; j < P.size(); ++j) os << "---|";
    os << "\n";
    for (std::size_t i = 0; i < P.size(); ++i) {
        os << "| " << i << " |";
        for (std::size_t j = 0; j < P.size(); ++j) os << " " << gauss_str(P.at(i, j)) << " |";
        os << "\n";
    }
    return os.str();
}

std::shared_ptr<const GaloisRing> make_ring(const RunConfig& cfg) {
    std::optional<Gf2Poly> phi;
    if (!cfg.phi.empty()) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(cfg.phi, &used, 16);
            if (used != cfg.phi.size()) throw std::invalid_argument("trailing characters");
            phi = static_cast<Gf2Poly>(v);
        } catch (const std::exception&) {
            throw UsageError("--phi expects a hexadecimal coefficient mask, e.g. b for x^3 + x + 1");
        }
    }
    return GaloisRing::construct(cfg.e, phi);
}

Constancy parse_constancy(const RunConfig& cfg) {
    if (cfg.constancy == "full") return Constancy::full();
    const std::string prefix = "sample:";
    if (cfg.constancy.rfind(prefix, 0) == 0) {
        try {
            const auto m = std::stoull(cfg.constancy.substr(prefix.size()));
            if (m == 0) throw std::invalid_argument("zero");
            return Constancy::sample(m, cfg.seed);
        } catch (const std::exception&) {
        }
    }
    throw UsageError("--constancy expects full or sample:<m> with m > 0");
}

json constancy_json(const Constancy& c) {
    if (c.mode == Constancy::Mode::full) return json{{"mode", "full"}};
    return json{{"mode", "sample"}, {"samples", c.samples}, {"seed", c.seed}};
}

json base_doc(const RunConfig& cfg) { return json{{"schema", kSchemaVersion}, {"command", cfg.command}}; }

json not_constant_witness(const NotConstant& err) {
    return json{{"kind", "not_constant"},
                {"class", err.i},
                {"column", err.j},
                {"alpha1", err.alpha1.packed},
                {"alpha2", err.alpha2.packed}};
}

// Computes the eigenmatrix or fills a failure document.
std::optional<Eigenmatrix> eigenmatrix_or_fail(const DifferencePartition& part, const Constancy& c, Outcome& out) {
    try {
        return eigenmatrix(part, c);
    } catch (const NotConstant& err) {
        out.passed = false;
        out.doc["passed"] = false;
        out.doc["witness"] = not_constant_witness(err);
        out.markdown += std::string("**FAILED**: ") + err.what() + "\n";
        return std::nullopt;
    }
}

Outcome cmd_ring(const RunConfig& cfg) {
    const auto R = make_ring(cfg);
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    std::ostringstream md;
    md << "| e | b | n | phi2 | Phi4 |\n|---|---|---|---|---|\n";
    md << "| " << R->e() << " | " << R->b() << " | " << R->n() << " | " << poly_str(phi2_coeffs(*R)) << " | "
       << poly_str(phi4_coeffs(*R)) << " |\n";
    out.markdown = md.str();
    return out;
}

Outcome cmd_scheme_eigenmatrix(const RunConfig& cfg) {
    const auto R = make_ring(cfg);
    const Constancy c = parse_constancy(cfg);
    const auto part = build_partition(R);
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    out.doc["constancy"] = constancy_json(c);
    out.doc["sizes"] = part.sizes();
    out.doc["pairing"] = part.pairing();
    const auto P = eigenmatrix_or_fail(part, c, out);
    if (!P) return out;
    out.doc["P"] = to_json(*P);
    out.doc["passed"] = true;
    out.markdown = "First eigenmatrix, e = " + std::to_string(R->e()) + ", b = " + std::to_string(R->b()) +
                   ", constancy " + (c.mode == Constancy::Mode::full ? std::string("full") : cfg.constancy) +
                   "\n\n" + matrix_markdown(*P);
    return out;
}

Outcome cmd_scheme_verify(const RunConfig& cfg) {
    const auto R = make_ring(cfg);
    const Constancy c = cfg.full ? Constancy::full() : parse_constancy(cfg);
    const auto part = build_partition(R);
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    out.doc["constancy"] = constancy_json(c);
    Scheme s;
    try {
        s = verify_scheme(part);
    } catch (const NotAScheme& err) {
        out.passed = false;
        out.doc["passed"] = false;
        out.doc["witness"] = json{{"kind", "not_a_scheme"},
                                  {"i", err.i},
                                  {"j", err.j},
                                  {"k", err.k},
                                  {"element1", err.witness1.packed},
                                  {"count1", err.count1},
                                  {"element2", err.witness2.packed},
                                  {"count2", err.count2}};
        out.markdown = std::string("**FAILED**: ") + err.what() + "\n";
        return out;
    }
    out.doc["scheme"] = to_json(s);
    const auto P = eigenmatrix_or_fail(part, c, out);
    if (!P) return out;
    const std::string col = check_column_products(*P, s);
    out.passed = col.empty();
    out.doc["column_products"] = col.empty() ? json("ok") : json(col);
    out.doc["passed"] = out.passed;
    std::ostringstream md;
    md << "Scheme on GR(4," << R->e() << "), n = " << s.n << ", class " << s.d << "\n\n";
    md << "- convolution check: passed\n";
    md << "- column products: " << (col.empty() ? "passed" : col) << "\n";
    md << "- valencies:";
    for (auto v : s.valencies) md << " " << v;
    md << "\n";
    out.markdown = md.str();
    return out;
}

Outcome cmd_fusion_table(const RunConfig& cfg) {
    const auto R = make_ring(cfg);
    const Constancy c = parse_constancy(cfg);
    const auto part = build_partition(R);
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    out.doc["constancy"] = constancy_json(c);
    out.doc["min_class"] = cfg.min_class;
    const auto P = eigenmatrix_or_fail(part, c, out);
    if (!P) return out;
    const auto table = fusion_table(*P, part.pairing(), cfg.min_class);
    json rows = json::array();
    std::ostringstream md;
    md << "| # | fused relations | class | symmetric | T-invariant |\n|---|---|---|---|---|\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& f = table[r];
        const bool tinv = t_invariance(part, f.partition);
        json row = to_json(f);
        row["index"] = r + 1;
        row["t_invariant"] = tinv;
        row["below_three_classes"] = f.class_count < 3;
        rows.push_back(std::move(row));
        md << "| " << r + 1 << (f.class_count < 3 ? "*" : "") << " | " << blocks_str(f.partition.fused_blocks())
           << " | " << f.class_count << " | " << (f.symmetric ? "symmetric" : "nonsymmetric") << " | "
           << (tinv ? "yes" : "no") << " |\n";
    }
    if (cfg.min_class < 3) md << "\n\\* fewer than three classes\n";
    out.doc["count"] = table.size();
    out.doc["fusions"] = std::move(rows);
    out.doc["passed"] = true;
    out.markdown = md.str();
    return out;
}

Outcome cmd_chm_search(const RunConfig& cfg) {
    Outcome out{base_doc(cfg), {}, true};
    Eigenmatrix P;
    std::vector<std::size_t> pairing;
    std::optional<DifferencePartition> part;
    if (cfg.class3) {
        if (cfg.a < 1) throw UsageError("--class3 needs -a <positive integer>");
        P = class3_eigenmatrix(class3_case_i(cfg.a));
        pairing = {0, 2, 1, 3};
        out.doc["class3"] = json{{"a", cfg.a}};
    } else {
        const auto R = make_ring(cfg);
        part.emplace(build_partition(R));
        out.doc["ring"] = ring_summary(*R);
        const auto Pm = eigenmatrix_or_fail(*part, parse_constancy(cfg), out);
        if (!Pm) return out;
        P = *Pm;
        pairing = part->pairing();
    }
    const auto sols = search_butson(P, pairing, cfg.roots);
    out.doc["roots"] = cfg.roots;
    out.doc["scope"] = "root-of-unity verification, order " + std::to_string(cfg.roots);
    out.doc["candidates"] = butson_candidate_count(pairing, cfg.roots);
    json list = json::array();
    std::ostringstream md;
    md << "Hermitian weight vectors over roots of unity of order " << cfg.roots << " ("
       << butson_candidate_count(pairing, cfg.roots) << " candidates)\n\n| # | weights | form |";
    if (cfg.certify) md << " W conj(W)^T = nI |";
    md << "\n|---|---|---|" << (cfg.certify ? "---|" : "") << "\n";
    for (std::size_t t = 0; t < sols.size(); ++t) {
        json j = to_json(sols[t]);
        std::string cert;
        if (cfg.certify && part) {
            const bool ok = is_chm_direct(dense_weight_matrix(*part, sols[t].w, cfg.dense_cap), cfg.dense_cap);
            j["dense_check"] = ok;
            cert = ok ? "yes" : "NO";
            out.passed = out.passed && ok;
        }
        list.push_back(std::move(j));
        std::string form = form_name(sols[t].form);
        if (sols[t].form != ButsonForm::other)
            form += " (eps1=" + std::to_string(sols[t].eps1) + ", eps2=" + std::to_string(sols[t].eps2) + ")";
        md << "| " << t + 1 << " | " << sols[t].w.str() << " | " << form << " |";
        if (cfg.certify) md << " " << (cert.empty() ? "n/a" : cert) << " |";
        md << "\n";
    }
    out.doc["count"] = sols.size();
    out.doc["solutions"] = std::move(list);
    out.doc["passed"] = out.passed;
    out.markdown = md.str();
    return out;
}

// Weights are either integer exponents of zeta_N or the strings 1, i, -1, -i.
WeightVector parse_weights(const std::string& text, int roots) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error&) {
        throw UsageError("--weights must be a JSON array");
    }
    if (!arr.is_array() || arr.empty()) throw UsageError("--weights must be a non-empty JSON array");
    std::vector<long long> exps;
    for (const auto& v : arr) {
        if (v.is_number_integer()) {
            exps.push_back(v.get<long long>());
        } else if (v.is_string()) {
            if (roots % 4 != 0) throw UsageError("symbolic weights need --roots divisible by 4");
            const std::string s = v.get<std::string>();
            const long long q = roots / 4;
            if (s == "1") exps.push_back(0);
            else if (s == "i") exps.push_back(q);
            else if (s == "-1") exps.push_back(2 * q);
            else if (s == "-i") exps.push_back(3 * q);
            else throw UsageError("unknown weight '" + s + "' (use 1, i, -1, -i or an exponent)");
        } else {
            throw UsageError("weights must be integers or strings");
        }
    }
    return WeightVector(roots, std::move(exps));
}

Outcome cmd_chm_verify(const RunConfig& cfg) {
    if (cfg.weights.empty()) throw UsageError("chm verify needs --weights");
    const auto R = make_ring(cfg);
    const auto part = build_partition(R);
    const WeightVector w = parse_weights(cfg.weights, cfg.roots);
    if (w.size() != part.classes().size()) {
        throw UsageError("expected " + std::to_string(part.classes().size()) + " weights, got " +
                         std::to_string(w.size()));
    }
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    out.doc["weights"] = to_json(w);
    const auto P = eigenmatrix_or_fail(part, parse_constancy(cfg), out);
    if (!P) return out;
    const bool herm = w.is_hermitian(part.pairing());
    const auto g = gamma(*P, w);
    json gj = json::array();
    for (const auto& v : g) {
        const auto gg = v.to_gauss();
        gj.push_back(gg ? to_json(*gg) : to_json(v));
    }
    const bool by_gamma = is_chm_gamma(*P, w);
    const bool by_e = is_chm_ezero(*P, w);
    out.doc["hermitian"] = herm;
    out.doc["gamma"] = gj;
    out.doc["chm_gamma"] = by_gamma;
    out.doc["chm_ezero"] = by_e;
    std::optional<bool> direct;
    if (R->n() <= cfg.dense_cap) direct = is_chm_direct(dense_weight_matrix(part, w, cfg.dense_cap), cfg.dense_cap);
    out.doc["chm_direct"] = direct ? json(*direct) : json(nullptr);
    const auto sol = classify(w);
    out.doc["form"] = form_name(sol.form);
    out.passed = herm && by_gamma && by_e && direct.value_or(true);
    if (!out.passed) {
        json witness{{"kind", "not_hadamard"}};
        if (!herm) witness["reason"] = "weights are not hermitian";
        else if (by_gamma != by_e || (direct && *direct != by_gamma)) witness["reason"] = "checks disagree";
        const CycInt n = CycInt::from_integer(4, P->order());
        for (std::size_t k = 1; k < g.size(); ++k) {
            if (g[k] * g[k] != n) {
                witness["k"] = k;
                witness["gamma_k"] = gj[k];
                break;
            }
        }
        out.doc["witness"] = witness;
    }
    out.doc["passed"] = out.passed;
    std::ostringstream md;
    md << "Weights " << w.str() << " on GR(4," << R->e() << ")\n\n";
    md << "- hermitian: " << (herm ? "yes" : "no") << "\n";
    md << "- gamma_k^2 = n: " << (by_gamma ? "yes" : "no") << "\n";
    md << "- common zero of e_k: " << (by_e ? "yes" : "no") << "\n";
    md << "- W conj(W)^T = nI: " << (direct ? (*direct ? "yes" : "no") : "skipped (above dense cap)") << "\n";
    md << "- form: " << form_name(sol.form) << "\n";
    out.markdown = md.str();
    return out;
}

Outcome cmd_identity(const RunConfig& cfg) {
    std::vector<IdentityId> ids;
    if (cfg.all) ids = all_identity_ids();
    for (const auto& name : cfg.which) {
        try {
            ids.push_back(parse_identity_id(name));
        } catch (const std::invalid_argument& err) {
            throw UsageError(err.what());
        }
    }
    if (ids.empty()) throw UsageError("identity check needs --which <id> or --all");
    const auto R = make_ring(cfg);
    Outcome out{base_doc(cfg), {}, true};
    out.doc["ring"] = ring_summary(*R);
    const auto P = eigenmatrix_or_fail(build_partition(R), parse_constancy(cfg), out);
    if (!P) return out;
    json reports = json::array();
    std::ostringstream md;
    md << "| identity | statement | instances | result |\n|---|---|---|---|\n";
    for (auto id : ids) {
        try {
            const auto rep = verify_identity(id, &*P);
            reports.push_back(to_json(rep));
            md << "| " << rep.id << " | " << rep.statement << " | " << rep.instances << " | pass |\n";
        } catch (const IdentityFailed& err) {
            out.passed = false;
            reports.push_back(json{{"id", err.identity},
                                   {"passed", false},
                                   {"witness", json{{"instance", err.instance}, {"difference", err.difference}}}});
            md << "| " << err.identity << " | | | FAIL at " << err.instance << ": " << err.difference << " |\n";
        }
    }
    out.doc["identities"] = std::move(reports);
    out.doc["passed"] = out.passed;
    out.markdown = md.str();
    return out;
}

void emit(const RunConfig& cfg, const Outcome& out) {
    std::string text = cfg.format == "json" ? out.doc.dump(2) + "\n" : out.markdown;
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.output);
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Association schemes on GR(4, e) and their hermitian complex Hadamard matrices"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_ring) {
        if (with_ring) {
            sub->add_option("-e", cfg.e, "odd extension degree e >= 3")->capture_default_str();
            sub->add_option("--phi", cfg.phi, "primitive GF(2) polynomial as a hex coefficient mask (bit k = x^k)");
            sub->add_option("--constancy", cfg.constancy, "full or sample:<m>")->capture_default_str();
            sub->add_option("--seed", cfg.seed, "seed for sampled constancy")->capture_default_str();
        }
        sub->add_option("--format", cfg.format, "json or markdown")
            ->check(CLI::IsMember({"json", "markdown"}))
            ->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
        sub->add_option("--dense-cap", cfg.dense_cap, "largest n for dense matrix checks")->capture_default_str();
    };

    auto* ring = app.add_subcommand("ring", "Galois ring construction");
    ring->require_subcommand(1);
    auto* ring_build = ring->add_subcommand("build", "construct GR(4,e) and print its parameters");
    add_common(ring_build, true);

    auto* scheme = app.add_subcommand("scheme", "the class-6 scheme");
    scheme->require_subcommand(1);
    auto* scheme_eig = scheme->add_subcommand("eigenmatrix", "compute the first eigenmatrix");
    add_common(scheme_eig, true);
    auto* scheme_ver = scheme->add_subcommand("verify", "certify the scheme axioms by convolution");
    add_common(scheme_ver, true);
    scheme_ver->add_flag("--full", cfg.full, "full constancy check for the eigenmatrix (default)");

    auto* fusion = app.add_subcommand("fusion", "fusion schemes");
    fusion->require_subcommand(1);
    auto* fusion_tab = fusion->add_subcommand("table", "enumerate fusions by the Bannai-Muzychuk criterion");
    add_common(fusion_tab, true);
    fusion_tab->add_option("--min-class", cfg.min_class, "smallest class count to report")->capture_default_str();

    auto* chm = app.add_subcommand("chm", "hermitian complex Hadamard matrices");
    chm->require_subcommand(1);
    auto* chm_search = chm->add_subcommand("search", "exhaustive search over roots of unity");
    add_common(chm_search, true);
    chm_search->add_option("--roots", cfg.roots, "root order N (1, 2, 4, 8, 12 or 24)")->capture_default_str();
    chm_search->add_flag("--class3", cfg.class3, "search the class-3 eigenmatrix with parameter a instead");
    chm_search->add_option("-a", cfg.a, "parameter of the class-3 eigenmatrix");
    chm_search->add_flag("--certify", cfg.certify, "also check W conj(W)^T = nI for each solution");
    auto* chm_verify = chm->add_subcommand("verify", "check one weight vector");
    add_common(chm_verify, true);
    chm_verify->add_option("--roots", cfg.roots, "root order N for the weights")->capture_default_str();
    chm_verify->add_option("--weights", cfg.weights, "JSON array of exponents of zeta_N, or of 1/i/-1/-i");

    auto* identity = app.add_subcommand("identity", "polynomial identities");
    identity->require_subcommand(1);
    auto* identity_check = identity->add_subcommand("check", "check identities exactly");
    add_common(identity_check, true);
    identity_check->add_option("--which", cfg.which, "identity id: 01-7, 01-8, 01-9, class3-main, class3-spec");
    identity_check->add_flag("--all", cfg.all, "check every identity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        return app.exit(err);
    }

    try {
        Outcome out;
        if (ring_build->parsed()) {
            cfg.command = "ring build";
            out = cmd_ring(cfg);
        } else if (scheme_eig->parsed()) {
            cfg.command = "scheme eigenmatrix";
            out = cmd_scheme_eigenmatrix(cfg);
        } else if (scheme_ver->parsed()) {
            cfg.command = "scheme verify";
            out = cmd_scheme_verify(cfg);
        } else if (fusion_tab->parsed()) {
            cfg.command = "fusion table";
            out = cmd_fusion_table(cfg);
        } else if (chm_search->parsed()) {
            cfg.command = "chm search";
            out = cmd_chm_search(cfg);
        } else if (chm_verify->parsed()) {
            cfg.command = "chm verify";
            out = cmd_chm_verify(cfg);
        } else {
            cfg.command = "identity check";
            out = cmd_identity(cfg);
        }
        emit(cfg, out);
        return out.passed ? 0 : kExitFailed;
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
}
