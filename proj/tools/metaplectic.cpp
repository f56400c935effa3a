// Command-line front end: exact computations in the metaplectic double covers
// of Sp(2n) and GSp(2n) over Q_p, plus the property-verification harness.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metaplectic/verify.hpp"

using namespace metaplectic;

namespace {

RatMat read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::size_t rows = j.size();
    if (rows == 0) throw std::runtime_error("empty matrix in " + path);
    std::size_t cols = j[0].size();
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = j[i][k];
            m(i, k) = cell.is_string() ? parse_rat(cell.get<std::string>())
                                       : Rat(cell.get<long>());
        }
    return m;
}

nlohmann::json matrix_json(const RatMat& m) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rat_str(m(i, k)));
        j.push_back(row);
    }
    return j;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(parse_rat(tok));
    return out;
}

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["status"] = verdict_status_name(v.status);
    j["witness"] = v.witness;
    j["orbit"] = nlohmann::json::array();
    for (const auto& [a, b] : v.orbit) j["orbit"].push_back({a.str(), b.str()});
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic in metaplectic covers of Sp/GSp over Q_p"};
    app.require_subcommand(1);

    long p = 3;
    std::string arg_a, arg_b, shift = "1";
    std::string file_a, file_b;
    int eps1 = 1, eps2 = 1;
    std::string shape_s = ";1", group_s = "T";
    std::string chi1_s = "triv", chi2_s = "triv";
    std::vector<std::string> eta_tags;
    std::vector<long> primes;
    std::string suite, json_out;
    long samples = 1000;
    std::uint64_t seed = 42;
    std::string params1, params2;

    auto add_p = [&](CLI::App* c) { c->add_option("--p", p, "prime")->required(); };

    auto* sq = app.add_subcommand("squareclass", "canonical square-class representative");
    sq->add_option("a", arg_a)->required();
    add_p(sq);

    auto* hil = app.add_subcommand("hilbert", "quadratic Hilbert symbol (a,b)_p");
    hil->add_option("a", arg_a)->required();
    hil->add_option("b", arg_b)->required();
    add_p(hil);

    auto* weil = app.add_subcommand("weil", "normalized Weil factor gamma_psi(a)");
    weil->add_option("a", arg_a)->required();
    add_p(weil);
    weil->add_option("--shift", shift, "psi_a shift class (default 1)");

    auto* xm = app.add_subcommand("xmap", "Rao x-map of an Sp matrix (JSON file)");
    xm->add_option("file", file_a)->required();
    add_p(xm);

    auto* cr = app.add_subcommand("cellrank", "Bruhat cell index of a GSp matrix");
    cr->add_option("file", file_a)->required();
    add_p(cr);

    auto* br = app.add_subcommand("bruhat", "Siegel-Bruhat factorization g = p1 tau_j p2");
    br->add_option("file", file_a)->required();
    add_p(br);

    auto* coc = app.add_subcommand("cocycle", "extension cocycle c~(g, h) with its rule tag");
    coc->add_option("fileG", file_a)->required();
    coc->add_option("fileH", file_b)->required();
    add_p(coc);

    auto* cm = app.add_subcommand("covermul", "product (g,eps1)(h,eps2) in the cover");
    cm->add_option("fileG", file_a)->required();
    cm->add_option("fileH", file_b)->required();
    cm->add_option("--eps", eps1, "sign of the first factor");
    cm->add_option("--eps2", eps2, "sign of the second factor");
    add_p(cm);

    auto* inv = app.add_subcommand("inverse", "inverse of (g, eps) in the cover");
    inv->add_option("fileG", file_a)->required();
    inv->add_option("--eps", eps1);
    add_p(inv);

    auto* cj = app.add_subcommand("conj", "conjugate (h,eps) by g (g_1 in Omega_0)");
    cj->add_option("fileG", file_a)->required();
    cj->add_option("fileH", file_b)->required();
    cj->add_option("--eps", eps1, "sign of the conjugated element");
    add_p(cj);

    auto* ci = app.add_subcommand("center-image", "image of the covered center under x");
    ci->add_option("--shape", shape_s, "Levi shape n1,..,nr;k")->required();
    add_p(ci);

    auto* zt = app.add_subcommand("zt-reps", "representatives of Z_t");
    zt->add_option("--shape", shape_s)->required();
    add_p(zt);

    auto* cmul = app.add_subcommand("center-mul", "central product with its sign");
    cmul->add_option("--shape", shape_s)->required();
    cmul->add_option("--params1", params1, "a1,..,ar,b for the first factor")->required();
    cmul->add_option("--params2", params2, "a1,..,ar,b for the second factor")->required();
    cmul->add_option("--eps", eps1);
    cmul->add_option("--eps2", eps2);
    add_p(cmul);

    auto* om = app.add_subcommand("omega-set", "extensions Omega_chi of a genuine central character");
    om->add_option("--shape", shape_s)->required();
    om->add_option("--eta", eta_tags, "character tag per central parameter (default trivial)");
    add_p(om);

    auto* tr = app.add_subcommand("torus-rep", "induced covered-torus representations");
    auto* trv = tr->add_subcommand("verify", "run the torus-representation property report");
    add_p(trv);
    trv->add_option("--seed", seed);
    trv->add_option("--samples", samples);

    auto* dg = app.add_subcommand("decide-gsp4", "principal-series reducibility for GSp(4)");
    dg->add_option("--chi1", chi1_s)->required();
    dg->add_option("--chi2", chi2_s)->required();
    add_p(dg);

    auto* ce = app.add_subcommand("counterexample", "order-4 reducible unitary construction");
    add_p(ce);

    auto* wo = app.add_subcommand("whittaker-orbits", "orbits of non-degenerate characters of N_t");
    wo->add_option("--shape", shape_s)->required();
    wo->add_option("--group", group_s, "T, T+ or T'");
    add_p(wo);

    auto* vf = app.add_subcommand("verify", "run registered invariant suites");
    vf->add_option("--suite", suite, "single suite (default: all)");
    vf->add_option("--p", primes, "primes (default 3 5 7)");
    vf->add_option("--samples", samples);
    vf->add_option("--seed", seed);
    vf->add_option("--json", json_out, "write the machine-readable report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sq) {
            PadicContext ctx(p);
            std::cout << rat_str(square_class(parse_rat(arg_a), ctx).rep()) << "\n";
        } else if (*hil) {
            PadicContext ctx(p);
            int v = hilbert_symbol(parse_rat(arg_a), parse_rat(arg_b), ctx);
            std::cout << (v > 0 ? "+1" : "-1") << "\n";
        } else if (*weil) {
            PadicContext ctx(p);
            PsiSpec psi(ctx, parse_rat(shift));
            if (p == 2)
                std::cout << FourthRoot::from_complex(weil_gauss_oracle(psi, parse_rat(arg_a))).str()
                          << "\n";
            else
                std::cout << weil_factor(psi, parse_rat(arg_a)).str() << "\n";
        } else if (*xm) {
            PadicContext ctx(p);
            GSpElement g = make_gsp(read_matrix(file_a), ctx);
            std::cout << rat_str(x_of(g.is_sp() ? g : g_one(g), ctx).rep()) << "\n";
        } else if (*cr) {
            PadicContext ctx(p);
            std::cout << cell_rank(make_gsp(read_matrix(file_a), ctx)) << "\n";
        } else if (*br) {
            PadicContext ctx(p);
            GSpElement g = make_gsp(read_matrix(file_a), ctx);
            auto f = bruhat_factor(g.is_sp() ? g : g_one(g), ctx);
            nlohmann::json j;
            j["j"] = f.j;
            j["p1"] = matrix_json(f.p1.mat());
            j["p2"] = matrix_json(f.p2.mat());
            j["tau"] = matrix_json(f.tau.mat());
            j["x_p1"] = rat_str(f.x_p1.rep());
            j["x_p2"] = rat_str(f.x_p2.rep());
            std::cout << j.dump(2) << "\n";
        } else if (*coc) {
            PadicContext ctx(p);
            GSpElement g = make_gsp(read_matrix(file_a), ctx);
            GSpElement h = make_gsp(read_matrix(file_b), ctx);
            CocycleValue v = cocycle_gsp(g, h, ctx);
            std::cout << (v.sign > 0 ? "+1" : "-1") << " " << cocycle_path_name(v.path) << "\n";
        } else if (*cm) {
            PadicContext ctx(p);
            CoverElement a{make_gsp(read_matrix(file_a), ctx), eps1};
            CoverElement b{make_gsp(read_matrix(file_b), ctx), eps2};
            CocyclePath path;
            CoverElement r = cover_mul(a, b, ctx, &path);
            nlohmann::json j;
            j["matrix"] = matrix_json(r.g.mat());
            j["eps"] = r.eps;
            j["path"] = cocycle_path_name(path);
            std::cout << j.dump(2) << "\n";
        } else if (*inv) {
            PadicContext ctx(p);
            CoverElement r = cover_inverse({make_gsp(read_matrix(file_a), ctx), eps1}, ctx);
            nlohmann::json j;
            j["matrix"] = matrix_json(r.g.mat());
            j["eps"] = r.eps;
            std::cout << j.dump(2) << "\n";
        } else if (*cj) {
            PadicContext ctx(p);
            GSpElement g = make_gsp(read_matrix(file_a), ctx);
            CoverElement h{make_gsp(read_matrix(file_b), ctx), eps1};
            CoverElement r = conj_by(g, h, ctx);
            nlohmann::json j;
            j["matrix"] = matrix_json(r.g.mat());
            j["eps"] = r.eps;
            std::cout << j.dump(2) << "\n";
        } else if (*ci) {
            PadicContext ctx(p);
            for (const auto& c : center_image(parse_shape(shape_s), ctx))
                std::cout << rat_str(c.rep()) << "\n";
        } else if (*zt) {
            PadicContext ctx(p);
            for (const auto& z : z_t_reps(parse_shape(shape_s), ctx)) {
                nlohmann::json j;
                j["a"] = nlohmann::json::array();
                for (const auto& av : z.a) j["a"].push_back(rat_str(av));
                j["b"] = rat_str(z.b);
                j["eps"] = z.eps;
                j["x"] = rat_str(x_on_center(z, ctx).rep());
                std::cout << j.dump() << "\n";
            }
        } else if (*cmul) {
            PadicContext ctx(p);
            LeviShape t = parse_shape(shape_s);
            auto mk = [&](const std::string& s, int e) {
                auto v = parse_rat_list(s);
                if (v.size() != t.parts.size() + 1)
                    throw std::runtime_error("center-mul: expected r+1 parameters");
                CentralElement c{t, {v.begin(), v.end() - 1}, v.back(), e};
                return c;
            };
            CentralElement r = center_mul(mk(params1, eps1), mk(params2, eps2), ctx);
            nlohmann::json j;
            j["a"] = nlohmann::json::array();
            for (const auto& av : r.a) j["a"].push_back(rat_str(av));
            j["b"] = rat_str(r.b);
            j["eps"] = r.eps;
            std::cout << j.dump() << "\n";
        } else if (*om) {
            PadicContext ctx(p);
            LeviShape t = parse_shape(shape_s);
            std::vector<Character> comps;
            for (std::size_t k = 0; k <= t.parts.size(); ++k)
                comps.push_back(k < eta_tags.size() ? parse_character(eta_tags[k], ctx)
                                                    : Character::trivial(ctx));
            auto os = omega_set(comps, t, PsiSpec(ctx));
            std::cout << os.size() << " extensions\n";
            for (std::size_t k = 0; k < os.size(); ++k)
                std::cout << "twist " << rat_str(os[k].twist().rep()) << "\n";
        } else if (*trv) {
            SuiteReport r = run_suite("torusreps", p, seed, samples);
            std::cout << report_text(r) << "\n";
            return r.passed() ? 0 : 1;
        } else if (*dg) {
            PadicContext ctx(p);
            PrincipalSeriesDatum d{2,
                                   {parse_character(chi1_s, ctx), parse_character(chi2_s, ctx)},
                                   PsiSpec(ctx),
                                   std::nullopt};
            std::cout << verdict_json(gsp4_reducibility(d)).dump(2) << "\n";
        } else if (*ce) {
            PadicContext ctx(p);
            auto [datum, log] = counterexample_build(ctx);
            nlohmann::json j;
            j["chi"] = log.chi.str();
            j["b"] = rat_str(log.b.rep());
            j["xi"] = log.xi.str();
            j["order_four"] = log.order_four;
            j["eta_b_unramified_quadratic"] = log.eta_b_unramified_quadratic;
            j["twist_equals_inverse"] = log.twist_equals_inverse;
            j["inducing_identity"] = log.inducing_identity;
            j["parity_constraint"] = log.parity_constraint;
            j["all_ok"] = log.all_ok();
            j["gsp4_verdict"] = verdict_json(gsp4_reducibility(datum));
            std::cout << j.dump(2) << "\n";
            return log.all_ok() ? 0 : 1;
        } else if (*wo) {
            PadicContext ctx(p);
            WhittakerOrbits w =
                whittaker_orbit_count(parse_shape(shape_s), parse_torus_group(group_s), ctx);
            std::cout << w.count << " orbits\n";
            for (const auto& r : w.reps) {
                std::cout << "rep:";
                for (const auto& c : r.coeffs) std::cout << " " << rat_str(c.rep());
                std::cout << "\n";
            }
        } else if (*vf) {
            if (primes.empty()) primes = {3, 5, 7};
            AggregateReport agg;
            if (suite.empty()) {
                agg = run_all(primes, seed, samples);
            } else {
                for (long pp : primes) agg.reports.push_back(run_suite(suite, pp, seed, samples));
                for (const auto& r : agg.reports) {
                    agg.total_checks += r.checks;
                    agg.total_failures += static_cast<long>(r.failures.size());
                }
            }
            for (const auto& r : agg.reports) std::cout << report_text(r) << "\n";
            std::cout << (agg.passed() ? "PASS" : "FAIL") << " total checks=" << agg.total_checks
                      << " failures=" << agg.total_failures << "\n";
            if (!json_out.empty()) {
                std::ofstream out(json_out);
                out << report_json(agg) << "\n";
            }
            return agg.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
