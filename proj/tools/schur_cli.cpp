// Command line front end for the exact Schur algebra toolkit.
//
// Subcommands: build, basis, verify, straighten, constants, hecke,
// conjectures.  Every subcommand exits 0 exactly when its checks pass.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schur/json_io.hpp"
#include "schur/schur.hpp"

namespace {

using namespace schur;

void require_instance(int n, int d) {
    if (n < 2) throw CLI::ValidationError("n", "need n >= 2");
    if (d < 1) throw CLI::ValidationError("d", "need d >= 1");
    long words = 1;
    for (int i = 0; i < d; ++i) {
        words *= n;
        if (words > 256)
            throw CLI::ValidationError("instance", "tensor space too large, need n^d <= 256");
    }
    if (expected_dimension(n, d) > 1000)
        throw CLI::ValidationError("instance", "algebra too large, need dimension <= 1000");
}

RootOrder parse_order(int n, const std::string& spec) {
    if (spec == "box") return RootOrder::box(n);
    if (spec == "revbox") return RootOrder::reverse_box(n);
    const std::string prefix = "custom:";
    if (spec.rfind(prefix, 0) == 0) {
        std::vector<Root> seq;
        std::stringstream ss(spec.substr(prefix.size()));
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            auto comma = pair.find(',');
            if (comma == std::string::npos)
                throw CLI::ValidationError("--order", "custom pairs look like a,b separated by ;");
            int a = std::stoi(pair.substr(0, comma));
            int b = std::stoi(pair.substr(comma + 1));
            seq.emplace_back(a, b);
        }
        return RootOrder(n, seq);
    }
    throw CLI::ValidationError("--order", "expected box, revbox or custom:<a,b;...>");
}

void emit(const nlohmann::json& doc, const std::string& path) {
    if (path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << doc.dump(2) << "\n";
        std::cout << "wrote " << path << "\n";
    }
}

void print_report(const VerificationReport& rep) {
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "PASS " : "FAIL ") << rep.ring << " " << rep.suite << " " << c.name
                  << (c.detail.empty() || c.pass ? "" : "  [" + c.detail + "]") << "\n";
}

int cmd_build(int n, int d, const std::string& ring) {
    require_instance(n, d);
    nlohmann::json j = json_header(n, d, ring);
    bool ok = true;
    if (ring == "classical") {
        auto ctx = build_classical_context(n, d);
        ok = ctx.reconstruct_cartan();
        j["dimension"] = ctx.dimension();
        j["weights"] = ctx.weights().size();
    } else {
        auto ctx = build_quantum_context(n, d);
        ok = ctx.reconstruct_cartan();
        j["dimension"] = ctx.dimension();
        j["weights"] = ctx.weights().size();
        j["convention"] = ctx.generators().convention;
    }
    j["cartan-reconstruction"] = ok;
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_basis(int n, int d, const std::string& side, const std::string& placement,
              const std::string& order, const std::string& json_path) {
    require_instance(n, d);
    auto oE = parse_order(n, order);
    auto oF = parse_order(n, order);
    auto fam = enumerate_basis(n, d, side_from_string(side), placement_from_string(placement), oE, oF);
    auto ctx = build_classical_context(n, d);
    auto real = realize_basis(ctx, fam);
    auto chk = verify_basis(real);
    auto j = to_json(fam, "classical");
    j["rank"] = chk.rank;
    j["expected"] = chk.expected;
    j["pass"] = chk.pass;
    emit(j, json_path);
    std::cout << (chk.pass ? "PASS" : "FAIL") << " basis " << side << " " << placement << " count="
              << chk.count << " rank=" << chk.rank << " expected=" << chk.expected << "\n";
    return chk.pass ? 0 : 1;
}

int cmd_verify(int n, int d, const std::string& suite) {
    require_instance(n, d);
    bool ok = true;
    auto cctx = build_classical_context(n, d);
    auto qctx = build_quantum_context(n, d);
    if (suite == "presentation" || suite == "all") {
        auto rc = verify_presentation(cctx.generators());
        auto rq = verify_presentation(qctx.generators());
        print_report(rc);
        print_report(rq);
        ok = ok && rc.all_pass() && rq.all_pass();
    }
    if (suite == "idempotent" || suite == "all") {
        auto rc = verify_idempotent_presentation(cctx);
        auto rq = verify_idempotent_presentation(qctx);
        print_report(rc);
        print_report(rq);
        ok = ok && rc.all_pass() && rq.all_pass();
    }
    return ok ? 0 : 1;
}

template <class Ring>
int run_straighten(int n, int d, const std::string& expr) {
    auto mono = parse_monomial(expr);
    Straightener<Ring> st(n, d);
    auto res = st.straighten(mono);

    BasisFamily fam;
    fam.n = n;
    fam.d = d;
    fam.side = Side::Plus;
    fam.placement = Placement::Right;
    fam.orderE = st.orderE();
    fam.orderF = st.orderF();

    auto ctx = build_context<Ring>(n, d);
    auto direct = ctx.evaluate(mono);
    auto rebuilt = ExactOperator<Ring>::zero(ctx.dimension());
    for (const auto& [key, coeff] : res.coords) {
        BasisElement el;
        el.A = key.A;
        el.weight = key.mu;
        el.C = key.C;
        el.side = fam.side;
        el.placement = fam.placement;
        rebuilt += ctx.evaluate(element_monomial(fam, el)).scaled(coeff);
        std::cout << Ring::to_string(coeff) << "  *  "
                  << monomial_to_string(element_monomial(fam, el)) << "\n";
    }
    if (res.coords.empty()) std::cout << "0\n";
    bool match = direct == rebuilt;
    std::cout << (match ? "PASS" : "FAIL") << " straighten agrees with the matrix expansion ("
              << res.steps << " rewrite steps)\n";
    return match ? 0 : 1;
}

int cmd_straighten(int n, int d, const std::string& ring, const std::string& expr) {
    require_instance(n, d);
    if (ring == "classical") return run_straighten<ClassicalRing>(n, d, expr);
    return run_straighten<QuantumRing>(n, d, expr);
}

int cmd_constants(int n, int d, const std::string& json_path) {
    require_instance(n, d);
    auto fam = enumerate_basis(n, d, Side::Plus, Placement::Middle);
    auto cctx = build_classical_context(n, d);
    auto qctx = build_quantum_context(n, d);
    auto creal = realize_basis(cctx, fam);
    auto qreal = realize_basis(qctx, fam);
    auto cc = structure_constants(creal);
    auto qc = structure_constants(qreal);
    std::string witness;
    bool match = constants_match_at_v1(cc, qc, &witness);
    bool ok = match && cc.all_integral && qc.all_integral;

    nlohmann::json j = json_header(n, d, "both");
    j["classical"] = constants_json(n, d, cc);
    j["quantum"] = constants_json(n, d, qc);
    j["match-at-v1"] = match;
    if (!match) j["witness"] = witness;
    emit(j, json_path);
    std::cout << (ok ? "PASS" : "FAIL") << " structure constants: integral="
              << (cc.all_integral && qc.all_integral ? "yes" : "no")
              << " match-at-v1=" << (match ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
}

template <class Ring>
bool run_hecke(int d) {
    auto ctx = build_context<Ring>(d, d);
    auto h = hecke_build(ctx);
    auto rep = hecke_relation_check(ctx, h);
    print_report(rep);
    auto fam = enumerate_basis(d, d, Side::Plus, Placement::Right);
    auto chk = hecke_basis_check(ctx, fam);
    std::cout << (chk.pass ? "PASS " : "FAIL ") << ring_name(Ring::tag)
              << " hecke corner-basis count=" << chk.count << " rank=" << chk.rank
              << " expected=" << chk.expected << "\n";
    return rep.all_pass() && chk.pass;
}

int cmd_hecke(int d) {
    require_instance(d, d);
    bool ok = run_hecke<ClassicalRing>(d);
    ok = run_hecke<QuantumRing>(d) && ok;
    return ok ? 0 : 1;
}

int cmd_conjectures(int n, int d, const std::string& kind, int i0) {
    require_instance(n, d);
    bool ok = true;
    std::vector<ConjectureReport> reports;
    auto run_classical = [&](const std::string& k) {
        auto ctx = build_classical_context(n, d);
        reports.push_back(conjecture_report(ctx, k, i0));
    };
    auto run_quantum = [&](const std::string& k) {
        auto ctx = build_quantum_context(n, d);
        reports.push_back(conjecture_report(ctx, k, i0));
    };
    if (kind == "pbw" || kind == "borel" || kind == "cartan-subring") {
        run_classical(kind);
        run_quantum(kind);
    } else if (kind == "eHf") {
        run_classical(kind);
    } else if (kind == "EKF") {
        run_quantum(kind);
    } else {
        throw CLI::ValidationError("--kind", "expected pbw, eHf, EKF, cartan-subring or borel");
    }
    for (const auto& rep : reports) {
        ok = ok && rep.pass;
        std::cout << (rep.pass ? "PASS " : "FAIL ") << rep.ring << " " << rep.kind << " count="
                  << rep.count << " rank=" << rep.rank << " expected=" << rep.expected
                  << (rep.note.empty() ? "" : " " + rep.note) << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact matrix models of classical and quantized Schur algebras"};
    app.require_subcommand(1);

    int n = 2, d = 2;
    std::string ring = "classical", side = "plus", placement = "middle", order = "box";
    std::string suite = "all", expr, json_path, kind = "pbw";
    int i0 = 1;

    auto* build = app.add_subcommand("build", "construct the generators and self-check the Cartan data");
    build->add_option("n", n)->required();
    build->add_option("d", d)->required();
    build->add_option("--ring", ring)->check(CLI::IsMember({"classical", "quantum"}));

    auto* basis = app.add_subcommand("basis", "enumerate a sorted monomial basis and verify its rank");
    basis->add_option("n", n)->required();
    basis->add_option("d", d)->required();
    basis->add_option("--side", side)->check(CLI::IsMember({"plus", "minus"}));
    basis->add_option("--placement", placement)->check(CLI::IsMember({"left", "middle", "right"}));
    basis->add_option("--order", order);
    basis->add_option("--json", json_path);

    auto* verify = app.add_subcommand("verify", "check the defining relation suites");
    verify->add_option("n", n)->required();
    verify->add_option("d", d)->required();
    verify->add_option("--suite", suite)->check(CLI::IsMember({"presentation", "idempotent", "all"}));

    auto* straighten = app.add_subcommand("straighten", "rewrite a monomial into basis coordinates");
    straighten->add_option("n", n)->required();
    straighten->add_option("d", d)->required();
    straighten->add_option("--ring", ring)->check(CLI::IsMember({"classical", "quantum"}));
    straighten->add_option("--expr", expr)->required();

    auto* constants = app.add_subcommand("constants", "multiplication tables over the sorted basis");
    constants->add_option("n", n)->required();
    constants->add_option("d", d)->required();
    constants->add_option("--json", json_path);

    auto* hecke = app.add_subcommand("hecke", "corner subalgebra checks at the all-ones weight");
    hecke->add_option("d", d)->required();

    auto* conj = app.add_subcommand("conjectures", "experimental spanning-family reports");
    conj->add_option("n", n)->required();
    conj->add_option("d", d)->required();
    conj->add_option("--kind", kind);
    conj->add_option("--i0", i0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(n, d, ring);
        if (basis->parsed()) return cmd_basis(n, d, side, placement, order, json_path);
        if (verify->parsed()) return cmd_verify(n, d, suite);
        if (straighten->parsed()) return cmd_straighten(n, d, ring, expr);
        if (constants->parsed()) return cmd_constants(n, d, json_path);
        if (hecke->parsed()) return cmd_hecke(d);
        if (conj->parsed()) return cmd_conjectures(n, d, kind, i0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
