// cartan-cli: batch front end for the class III_2 equivalence-method pipeline.
//
// Subcommands: classify | fundamentals | invariants | verify-model |
// structure-eqs, over a JSON manifold file or the built-in model, with
// deterministic JSON or human-readable text reports.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartan/crgeom.hpp"
#include "cartan/model.hpp"
#include "cartan/parser.hpp"
#include "cartan/reduction.hpp"

using json = nlohmann::json;
using namespace cartan;

namespace {

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerdict = 2;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[k] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

struct Options {
    std::string manifold_file;
    std::string builtin;
    std::string format = "text";
    std::string point;
    int stage = 0;
    bool timings = false;
};

/// Canonical serialization of the input for the report digest.
std::string manifold_digest_input(const cr::GraphedManifold& m) {
    std::ostringstream os;
    os << m.name;
    for (const auto& p : m.phi) os << '|' << p.str();
    if (m.base_point) {
        for (const auto& q : *m.base_point) os << '|' << rational_str(q);
    }
    return os.str();
}

cr::GraphedManifold load_manifold(const Options& opt) {
    if (!opt.builtin.empty()) {
        if (opt.builtin != "model")
            throw std::runtime_error("unknown builtin manifold: " + opt.builtin);
        return model::model_manifold();
    }
    if (opt.manifold_file.empty())
        throw std::runtime_error("one of --manifold or --builtin is required");

    std::ifstream in(opt.manifold_file);
    if (!in) throw std::runtime_error("cannot open " + opt.manifold_file);
    json doc = json::parse(in);

    cr::GraphedManifold m;
    m.name = doc.at("name").get<std::string>();
    const auto& phi = doc.at("phi");
    if (!phi.is_array() || phi.size() != 3)
        throw std::runtime_error("phi must be an array of 3 expression strings");
    for (int j = 0; j < 3; ++j) {
        m.phi[j] = parse_expression(phi[j].get<std::string>());
        if (m.phi[j].conj() != m.phi[j])
            throw std::runtime_error("phi" + std::to_string(j + 1) + " is not real");
    }
    if (doc.contains("base_point")) {
        const auto& bp = doc["base_point"];
        if (!bp.is_array() || bp.size() != 5)
            throw std::runtime_error("base_point must be an array of 5 rational strings");
        Point p;
        for (int k = 0; k < 5; ++k) p[k] = parse_rational(bp[k].get<std::string>());
        m.base_point = p;
    }
    if (!opt.point.empty()) {
        Point p;
        std::istringstream is(opt.point);
        std::string tok;
        for (int k = 0; k < 5; ++k) {
            if (!std::getline(is, tok, ',')) throw std::runtime_error("--point needs 5 rationals");
            p[k] = parse_rational(tok);
        }
        m.base_point = p;
    }
    return m;
}

json check_list_json(const CheckList& cl) {
    json arr = json::array();
    for (const auto& c : cl.items) {
        json item;
        item["name"] = c.name;
        item["ok"] = c.ok;
        if (!c.detail.empty()) item["detail"] = c.detail;
        arr.push_back(item);
    }
    return arr;
}

json class_report_json(const cr::ClassReport& rep) {
    json j;
    j["rank_L_Lbar_T"] = rep.rank_llt;
    j["rank_L_Lbar_T_S"] = rep.rank_llts;
    j["rank_L_Lbar_T_S_Sbar"] = rep.rank_lltss;
    j["rank_L_Lbar_T_S_R"] = rep.rank_lltsr;
    j["degeneracy_certified"] = rep.degeneracy_certified;
    j["member"] = rep.member;
    if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
    return j;
}

json fundamentals_json(const cr::Fundamentals& fun) {
    json j;
    j["A"] = fun.A.str();
    j["B"] = fun.B.str();
    j["E"] = fun.E.str();
    j["F"] = fun.F.str();
    j["G"] = fun.G.str();
    return j;
}

json torsion_json(const cr::TorsionTable& tt) {
    json j;
    j["H"] = tt.H.str();
    j["J"] = tt.J.str();
    j["K"] = tt.K.str();
    j["L"] = tt.L.str();
    j["M"] = tt.M.str();
    j["N"] = tt.N.str();
    j["O"] = tt.O.str();
    j["P"] = tt.P.str();
    j["Q"] = tt.Q.str();
    j["R"] = tt.R.str();
    j["S"] = tt.S.str();
    j["T"] = tt.T.str();
    j["pinned_slots"] = check_list_json(tt.pinned);
    return j;
}

json reduction_json(const red::ReductionResult& r) {
    json j;
    json norms;
    norms["B0"] = r.norms.B0.str();
    norms["C0"] = r.norms.C0.str();
    norms["F0"] = r.norms.F0.str();
    norms["D0"] = r.norms.D0.str();
    norms["G0"] = r.norms.G0.str();
    norms["H0"] = r.norms.H0.str();
    j["normalizations"] = norms;
    json inv;
    for (int n = 1; n <= 15; ++n) inv["I" + std::to_string(n)] = r.inv.I(n).str();
    j["invariants"] = inv;
    j["invariants_all_zero"] = r.inv.all_zero();
    j["I1_closed_form"] = r.I1_closed.str();
    json lam;
    lam["X_tau"] = r.lambda.X_tau.str();
    lam["X_sigma"] = r.lambda.X_sigma.str();
    lam["X_rho"] = r.lambda.X_rho.str();
    lam["X_zeta"] = r.lambda.X_zeta.str();
    lam["X_zetabar"] = r.lambda.X_zetabar.str();
    j["lambda_coefficients"] = lam;
    j["consistency"] = check_list_json(r.consistency);
    j["conjugation"] = check_list_json(r.conjugation);
    return j;
}

json structure_table_json(const ext::StructureTable& st) {
    json j;
    for (int k = 0; k < 5; ++k) {
        json row;
        for (int idx = 0; idx < 10; ++idx) {
            auto [a, b] = ext::pair_coords(idx);
            if (st.coeff[k][idx].is_zero()) continue;
            row[st.names[a] + "^" + st.names[b]] = st.coeff[k][idx].str();
        }
        j["d(" + st.names[k] + ")"] = row;
    }
    return j;
}

void print_check_list_text(std::ostream& os, const CheckList& cl, const std::string& indent) {
    for (const auto& c : cl.items) {
        os << indent << (c.ok ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
}

void print_structure_table_text(std::ostream& os, const ext::StructureTable& st) {
    for (int k = 0; k < 5; ++k) {
        os << "d(" << st.names[k] << ") =\n";
        bool any = false;
        for (int idx = 0; idx < 10; ++idx) {
            if (st.coeff[k][idx].is_zero()) continue;
            auto [a, b] = ext::pair_coords(idx);
            os << "    [" << st.names[a] << "^" << st.names[b] << "]  "
               << st.coeff[k][idx].str() << '\n';
            any = true;
        }
        if (!any) os << "    0\n";
    }
}

json base_report(const cr::GraphedManifold& m) {
    json j;
    j["version"] = kVersion;
    j["input"] = m.name;
    j["input_digest"] = hex64(fnv1a(manifold_digest_input(m)));
    return j;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_classify(const Options& opt) {
    cr::GraphedManifold m = load_manifold(opt);
    cr::ClassReport rep = cr::classify(m);
    json j = base_report(m);
    j["classification"] = class_report_json(rep);
    std::ostringstream os;
    os << "manifold: " << m.name << '\n'
       << "rank(L, Lbar, T)        = " << rep.rank_llt << "  (expect 3)\n"
       << "rank(L, Lbar, T, S)     = " << rep.rank_llts << "  (expect 4)\n"
       << "rank(L, Lbar, T, S, Sbar) = " << rep.rank_lltss << "  (expect 4, degeneracy "
       << (rep.degeneracy_certified ? "certified" : "NOT certified") << ")\n"
       << "rank(L, Lbar, T, S, R)  = " << rep.rank_lltsr << "  (expect 5)\n"
       << "member of class III_2: " << (rep.member ? "yes" : "no") << '\n';
    if (!rep.first_failure.empty()) os << "first failing condition: " << rep.first_failure << '\n';
    emit(opt, j, os.str());
    return rep.member ? kExitOk : kExitVerdict;
}

int cmd_fundamentals(const Options& opt) {
    cr::GraphedManifold m = load_manifold(opt);
    cr::ClassReport cls = cr::classify(m);
    json j = base_report(m);
    j["classification"] = class_report_json(cls);
    if (!cls.member) {
        emit(opt, j, "manifold is not in class III_2: " + cls.first_failure + "\n");
        return kExitVerdict;
    }
    cr::CRFrame f = cr::derived_frame(cr::cr_generator(m));
    cr::Fundamentals fun = cr::fundamentals(f);
    cr::TorsionTable tt = cr::torsion_table(f, fun);
    j["fundamentals"] = fundamentals_json(fun);
    j["torsions"] = torsion_json(tt);
    std::ostringstream os;
    os << "manifold: " << m.name << '\n'
       << "A = " << fun.A.str() << '\n'
       << "B = " << fun.B.str() << '\n'
       << "E = " << fun.E.str() << '\n'
       << "F = " << fun.F.str() << '\n'
       << "G = " << fun.G.str() << '\n'
       << "torsions:\n"
       << "  H = " << tt.H.str() << "    J = " << tt.J.str() << '\n'
       << "  K = " << tt.K.str() << "    L = " << tt.L.str() << '\n'
       << "  M = " << tt.M.str() << "    N = " << tt.N.str() << '\n'
       << "  O = " << tt.O.str() << "    P = " << tt.P.str() << '\n'
       << "  Q = " << tt.Q.str() << "    R = " << tt.R.str() << '\n'
       << "  S = " << tt.S.str() << "    T = " << tt.T.str() << '\n'
       << "pinned slots:\n";
    print_check_list_text(os, tt.pinned, "  ");
    emit(opt, j, os.str());
    return kExitOk;
}

int cmd_invariants(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    cr::GraphedManifold m = load_manifold(opt);
    cr::ClassReport cls = cr::classify(m);
    json j = base_report(m);
    j["classification"] = class_report_json(cls);
    if (!cls.member) {
        emit(opt, j, "manifold is not in class III_2: " + cls.first_failure + "\n");
        return kExitVerdict;
    }
    cr::CRFrame f = cr::derived_frame(cr::cr_generator(m));
    cr::Fundamentals fun = cr::fundamentals(f);
    cr::TorsionTable tt = cr::torsion_table(f, fun);
    red::ReductionResult r = red::run_reduction(f, fun, tt);
    j["fundamentals"] = fundamentals_json(fun);
    json red_j = reduction_json(r);
    for (auto& [k, v] : red_j.items()) j[k] = v;
    if (opt.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        j["timings"] = {{"total_ms", ms}};
    }
    std::ostringstream os;
    os << "manifold: " << m.name << '\n' << "normalizations:\n";
    os << "  B0 = " << r.norms.B0.str() << '\n'
       << "  C0 = " << r.norms.C0.str() << '\n'
       << "  F0 = " << r.norms.F0.str() << '\n'
       << "  D0 = " << r.norms.D0.str() << '\n'
       << "  G0 = " << r.norms.G0.str() << '\n'
       << "  H0 = " << r.norms.H0.str() << '\n'
       << "invariants:\n";
    for (int n = 1; n <= 15; ++n) os << "  I" << n << " = " << r.inv.I(n).str() << '\n';
    os << "all invariants zero: " << (r.inv.all_zero() ? "yes" : "no") << '\n'
       << "closed-form I1 = " << r.I1_closed.str() << '\n'
       << "Lambda coefficients:\n"
       << "  X_tau = " << r.lambda.X_tau.str() << '\n'
       << "  X_sigma = " << r.lambda.X_sigma.str() << '\n'
       << "  X_rho = " << r.lambda.X_rho.str() << '\n'
       << "  X_zeta = " << r.lambda.X_zeta.str() << '\n'
       << "  X_zetabar = " << r.lambda.X_zetabar.str() << '\n'
       << "consistency audit:\n";
    print_check_list_text(os, r.consistency, "  ");
    os << "conjugation audit:\n";
    print_check_list_text(os, r.conjugation, "  ");
    emit(opt, j, os.str());
    return kExitOk;
}

int cmd_verify_model(const Options& opt) {
    CheckList rep = model::verify_model();
    json j;
    j["version"] = kVersion;
    j["input"] = "model algebra";
    j["input_digest"] = hex64(fnv1a("aut_CR(N) bracket table"));
    j["checks"] = check_list_json(rep);
    j["all_ok"] = rep.all_ok();
    std::ostringstream os;
    os << "model Lie algebra and Cartan-connection axioms:\n";
    print_check_list_text(os, rep, "  ");
    os << (rep.all_ok() ? "all checks passed\n" : "FAILURES PRESENT\n");
    emit(opt, j, os.str());
    return rep.all_ok() ? kExitOk : kExitVerdict;
}

int cmd_structure_eqs(const Options& opt) {
    cr::GraphedManifold m = load_manifold(opt);
    cr::ClassReport cls = cr::classify(m);
    json j = base_report(m);
    if (!cls.member) {
        j["classification"] = class_report_json(cls);
        emit(opt, j, "manifold is not in class III_2: " + cls.first_failure + "\n");
        return kExitVerdict;
    }
    cr::CRFrame f = cr::derived_frame(cr::cr_generator(m));
    cr::Fundamentals fun = cr::fundamentals(f);
    ext::StructureTable st;
    if (opt.stage == 0) {
        st = ext::structure_coefficients(cr::omega0(f));
    } else if (opt.stage == 4) {
        cr::TorsionTable tt = cr::torsion_table(f, fun);
        red::ReductionResult r = red::run_reduction(f, fun, tt);
        st = ext::structure_coefficients(r.w4);
    } else {
        throw std::runtime_error("--stage must be 0 or 4");
    }
    j["stage"] = opt.stage;
    j["structure_equations"] = structure_table_json(st);
    std::ostringstream os;
    os << "manifold: " << m.name << ", coframe omega_" << opt.stage << '\n';
    print_structure_table_text(os, st);
    emit(opt, j, os.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan equivalence method for 5-dimensional CR-manifolds of class III_2"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_manifold) {
        sub->add_option("--format", opt.format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        if (with_manifold) {
            sub->add_option("--manifold", opt.manifold_file, "Manifold JSON file");
            sub->add_option("--builtin", opt.builtin, "Built-in manifold: model");
            sub->add_option("--point", opt.point, "Base point as 5 comma-separated rationals");
        }
        sub->add_flag("--timings", opt.timings, "Include timings in the report");
    };

    auto* classify = app.add_subcommand("classify", "Rank conditions for class III_2");
    add_common(classify, true);
    auto* fundamentals =
        app.add_subcommand("fundamentals", "Fundamental functions A, B, E, F, G and torsions");
    add_common(fundamentals, true);
    auto* invariants =
        app.add_subcommand("invariants", "Full normalization cascade and invariants I1..I15");
    add_common(invariants, true);
    auto* verify_model =
        app.add_subcommand("verify-model", "Model Lie algebra and Cartan-connection axioms");
    add_common(verify_model, false);
    auto* structure_eqs = app.add_subcommand("structure-eqs", "Structure equations of a coframe");
    add_common(structure_eqs, true);
    structure_eqs->add_option("--stage", opt.stage, "Coframe stage: 0 or 4");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(opt);
        if (fundamentals->parsed()) return cmd_fundamentals(opt);
        if (invariants->parsed()) return cmd_invariants(opt);
        if (verify_model->parsed()) return cmd_verify_model(opt);
        if (structure_eqs->parsed()) return cmd_structure_eqs(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
