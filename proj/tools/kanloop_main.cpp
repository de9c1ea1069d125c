// Command-line interface: build Kan groups from complex descriptions,
// compute homology, validate attaching identities and realization points,
// evaluate words, classify fibre components, run the degree-two evaluation
// map, and drive energy descent.  All structured output is JSON.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kanloop/kanloop.hpp"

namespace kl = kanloop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitValidationFailure = 2;
constexpr int kExitNonConvergence = 3;

void emit(const kl::Json& j, const std::string& out, bool pretty) {
    std::string text = pretty ? j.dump(2) : j.dump();
    text += '\n';
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw kl::ParseError("cannot write " + out);
    f << text;
}

void write_text(const std::string& text, const std::string& out) {
    std::ofstream f(out);
    if (!f) throw kl::ParseError("cannot write " + out);
    f << text;
}

// Seeded based loop in G^ell with a few sine modes, endpoints exactly e.
std::vector<std::vector<kl::GroupElement>> random_based_loop(const kl::GroupSpec& spec, int ell,
                                                             int m, std::mt19937_64& rng,
                                                             double amp = 0.8) {
    std::uniform_real_distribution<double> u(-amp, amp);
    std::vector<std::vector<kl::Alg>> modes(static_cast<std::size_t>(ell));
    std::vector<std::vector<double>> coef(static_cast<std::size_t>(ell));
    for (int j = 0; j < ell; ++j)
        for (int mode = 1; mode <= 4; ++mode) {
            modes[static_cast<std::size_t>(j)].push_back(kl::random_unit_alg(spec.group, rng));
            coef[static_cast<std::size_t>(j)].push_back(u(rng));
        }
    std::vector<std::vector<kl::GroupElement>> loop(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        double t = static_cast<double>(k) / m;
        loop[static_cast<std::size_t>(k)].reserve(static_cast<std::size_t>(ell));
        for (int j = 0; j < ell; ++j) {
            kl::Alg v = kl::alg_zero();
            for (std::size_t mode = 0; mode < modes[static_cast<std::size_t>(j)].size(); ++mode)
                v = kl::alg_add(v, kl::alg_scale(coef[static_cast<std::size_t>(j)][mode] *
                                                     std::sin(M_PI * (mode + 1) * t),
                                                 modes[static_cast<std::size_t>(j)][mode]));
            loop[static_cast<std::size_t>(k)].push_back(kl::exp_alg(spec.group, v));
        }
    }
    for (int j = 0; j < ell; ++j) {
        loop[0][static_cast<std::size_t>(j)] = kl::GroupElement::identity(spec.group);
        loop[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
            kl::GroupElement::identity(spec.group);
    }
    return loop;
}

// Fibre fixture over a surface: seeded holonomies and a path from e to the
// relator value carrying the requested winding.
struct FibreFixture {
    std::vector<kl::GroupElement> w;
    std::vector<kl::GroupElement> phi;
};

FibreFixture fibre_fixture(const kl::GroupSpec& spec, int genus, int winding, int m,
                           std::mt19937_64& rng, double wiggle) {
    FibreFixture f;
    for (int j = 0; j < 2 * genus; ++j) f.w.push_back(kl::random_element(spec, rng));
    kl::GroupElement rw = kl::relator_value(f.w, spec);
    // base path: commutator product of reference geodesics, so the unwound
    // fixture sits in the trivial component
    std::vector<std::vector<kl::GroupElement>> refs;
    for (const kl::GroupElement& wj : f.w) refs.push_back(kl::geodesic_path(wj, spec, m));
    std::vector<kl::GroupElement> geo(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<kl::GroupElement> snap;
        for (const auto& u : refs) snap.push_back(u[static_cast<std::size_t>(k)]);
        geo[static_cast<std::size_t>(k)] = kl::relator_value(snap, spec);
    }
    std::vector<kl::Alg> modes;
    std::vector<double> coef;
    std::uniform_real_distribution<double> u(-wiggle, wiggle);
    for (int mode = 1; mode <= 5; ++mode) {
        modes.push_back(kl::random_unit_alg(spec.group, rng));
        coef.push_back(u(rng));
    }
    f.phi.resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        double t = static_cast<double>(k) / m;
        kl::Alg v = kl::alg_zero();
        for (std::size_t mode = 0; mode < modes.size(); ++mode)
            v = kl::alg_add(v, kl::alg_scale(coef[mode] * std::sin(M_PI * (mode + 1) * t),
                                             modes[mode]));
        kl::GroupElement g = kl::mul(geo[static_cast<std::size_t>(k)], kl::exp_alg(spec.group, v));
        if (winding != 0) {
            // winding factor: a closed loop multiplied pointwise onto the path
            bool abelian = spec.group == kl::Group::U1;
            kl::Alg axis = abelian ? kl::Alg{1, 0, 0} : kl::Alg{0, 0, 1};
            double angle = abelian ? 2 * M_PI * winding * t : M_PI * winding * t;
            g = kl::mul(kl::exp_alg(spec.group, kl::alg_scale(angle, axis)), g);
        }
        f.phi[static_cast<std::size_t>(k)] = g;
    }
    f.phi[0] = kl::GroupElement::identity(spec.group);
    f.phi[static_cast<std::size_t>(m)] = rw;
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kan loop groups: build, validate, compute, classify, flow"};
    app.require_subcommand(1);

    std::string complex_path, point_path, assign_path, word_text, gamma_text, out_path, trace_path,
        group_name = "su2", mode_name = "fix";
    int max_degree = 3, grid = 64, genus = 1, winding = 0, ell = 0, steps = 2000;
    double tol = 1e-9, step_size = 1.0, stop_grad = 1e-6, wiggle = 0.5;
    std::uint64_t seed = 1;
    bool pretty = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write JSON here instead of stdout");
        cmd->add_flag("--pretty", pretty, "indent JSON output");
        cmd->add_option("--tol", tol, "numerical tolerance");
        cmd->add_option("--seed", seed, "seed for randomized fixtures");
    };

    CLI::App* build = app.add_subcommand("build-kan", "generator and face tables of a Kan group");
    build->add_option("--complex", complex_path, "complex JSON file")->required();
    build->add_option("--max-degree", max_degree, "largest degree to tabulate");
    add_common(build);

    CLI::App* hom = app.add_subcommand("homology", "normalized homology per degree");
    hom->add_option("--complex", complex_path)->required();
    hom->add_option("--max-degree", max_degree);
    std::string dump_prefix;
    hom->add_option("--dump-matrices", dump_prefix,
                    "write the boundary matrices to <prefix>.d<k>.csv");
    add_common(hom);

    CLI::App* chk = app.add_subcommand("check-identity", "validate attaching identities");
    chk->add_option("--complex", complex_path)->required();
    add_common(chk);

    CLI::App* ev = app.add_subcommand("eval-word", "evaluate a word under an assignment");
    ev->add_option("--word", word_text)->required();
    ev->add_option("--group", group_name, "u1, su2 or so3");
    ev->add_option("--assign", assign_path, "JSON file mapping generator names to matrices")
        ->required();
    add_common(ev);

    CLI::App* cls = app.add_subcommand("classify", "component of a fibre fixture");
    cls->add_option("--group", group_name);
    cls->add_option("--genus", genus);
    cls->add_option("--winding", winding);
    cls->add_option("--grid", grid);
    add_common(cls);

    CLI::App* val = app.add_subcommand("validate-point", "check a realization point");
    val->add_option("--complex", complex_path)->required();
    val->add_option("--point", point_path, "realization point JSON file")->required();
    add_common(val);

    CLI::App* tau_cmd = app.add_subcommand("tau", "degree-two evaluation map of an attaching word");
    tau_cmd->add_option("--group", group_name);
    tau_cmd->add_option("--gamma-word", gamma_text, "word in v<j>/w<i>_<j>")->required();
    tau_cmd->add_option("--ell", ell, "number of 2-cells (default: largest index used)");
    tau_cmd->add_option("--grid", grid);
    add_common(tau_cmd);

    CLI::App* flow = app.add_subcommand("flow", "energy descent on a fibre fixture");
    flow->add_option("--group", group_name);
    flow->add_option("--genus", genus);
    flow->add_option("--winding", winding);
    flow->add_option("--grid", grid);
    flow->add_option("--steps", steps);
    flow->add_option("--step-size", step_size);
    flow->add_option("--stop-grad-norm", stop_grad);
    flow->add_option("--wiggle", wiggle, "amplitude of the fixture perturbation");
    flow->add_option("--mode", mode_name, "fix or joint");
    flow->add_option("--trace", trace_path, "write a CSV energy trace here");
    std::string out_point;
    flow->add_option("--out-point", out_point,
                     "write the final path as a surface realization point");
    add_common(flow);

    CLI::App* ifm = app.add_subcommand("intersection-form", "pairing of a 4-cell attaching word");
    ifm->add_option("--gamma-word", gamma_text)->required();
    ifm->add_option("--ell", ell);
    add_common(ifm);

    CLI11_PARSE(app, argc, argv);

    try {
        kl::GroupSpec spec{kl::group_from_name(group_name), tol};
        std::mt19937_64 rng(seed);

        if (build->parsed()) {
            kl::FreeSimplicialGroup k = kl::kan_group(kl::load_complex(complex_path), max_degree);
            kl::Json j;
            j["top_degree"] = k.top_degree();
            kl::Json degrees = kl::Json::object();
            for (int q = 0; q <= max_degree; ++q) {
                kl::Json names = kl::Json::array();
                for (const kl::GenRef& g : kl::enumerate_generators(k, q))
                    names.push_back(kl::to_string(g));
                degrees[std::to_string(q)] = {{"generators", names}, {"count", names.size()}};
            }
            j["degrees"] = degrees;
            kl::Json attach = kl::Json::object();
            for (const auto& [name, w] : k.attach) attach[name] = kl::to_string(w);
            j["attach"] = attach;
            emit(j, out_path, pretty);
        } else if (hom->parsed()) {
            kl::FreeSimplicialGroup k = kl::kan_group(kl::load_complex(complex_path));
            if (!dump_prefix.empty())
                for (int d = 1; d <= max_degree + 1; ++d)
                    write_text(kl::matrix_to_csv(kl::normalized_boundary(k, d)),
                               dump_prefix + ".d" + std::to_string(d) + ".csv");
            emit(kl::homology_to_json(kl::homology(k, max_degree)), out_path, pretty);
        } else if (chk->parsed()) {
            kl::ReducedCWComplex y = kl::load_complex(complex_path);
            std::vector<kl::Word> relators;
            for (const std::string& r : y.cells_of_dim(2)) relators.push_back(y.attach2.at(r));
            kl::Json cells = kl::Json::object();
            bool all = true;
            for (const auto& [name, id] : y.attach3) {
                bool ok = kl::validate_identity(relators, id);
                cells[name] = ok;
                all = all && ok;
            }
            emit(kl::Json{{"valid", all}, {"cells", cells}}, out_path, pretty);
            if (!all) return kExitValidationFailure;
        } else if (ev->parsed()) {
            std::ifstream in(assign_path);
            if (!in) throw kl::ParseError("cannot open " + assign_path);
            kl::Json aj;
            in >> aj;
            kl::Word w = kl::parse_word(word_text);
            std::map<std::string, kl::GroupElement> byname;
            for (const auto& [name, mat] : aj.items())
                byname[name] = kl::element_from_json(mat, spec.group);
            kl::GroupElement g = kl::eval_word(
                w,
                [&](const kl::GenRef& gen) -> const kl::GroupElement& {
                    auto it = byname.find(kl::to_string(gen));
                    if (it == byname.end())
                        throw kl::UnboundGeneratorError("no value for " + kl::to_string(gen));
                    return it->second;
                },
                spec);
            emit(kl::Json{{"matrix", kl::element_to_json(g)}}, out_path, pretty);
        } else if (cls->parsed()) {
            FibreFixture f = fibre_fixture(spec, genus, winding, grid, rng, wiggle);
            int c = kl::classify_component(f.w, f.phi, spec);
            emit(kl::Json{{"class", c}, {"group", kl::group_name(spec.group)}, {"genus", genus}},
                 out_path, pretty);
        } else if (val->parsed()) {
            kl::FreeSimplicialGroup k = kl::kan_group(kl::load_complex(complex_path));
            std::ifstream in(point_path);
            if (!in) throw kl::ParseError("cannot open " + point_path);
            kl::Json pj;
            in >> pj;
            kl::RealizationPoint p = kl::point_from_json(pj);
            spec.group = p.group;
            kl::ValidationReport rep = kl::validate_point(k, p, spec);
            emit(kl::report_to_json(rep), out_path, pretty);
            if (!rep.pass()) return kExitValidationFailure;
        } else if (tau_cmd->parsed()) {
            kl::Word gamma = kl::parse_word(gamma_text, [](const std::string&) { return 2; });
            int need = 0;
            for (const kl::Letter& l : gamma.letters()) {
                kl::GammaSymbol s = kl::parse_gamma_symbol(l.gen.base, 1 << 20);
                need = std::max({need, s.i, s.j});
            }
            if (ell == 0) ell = std::max(need, 1);
            auto phi1 = random_based_loop(spec, ell, grid, rng);
            std::vector<kl::GroupElement> samples = kl::tau(phi1, gamma, spec);
            kl::SimplexGrid g2(2, grid);
            double worst = 0;
            kl::GroupElement e = kl::GroupElement::identity(spec.group);
            kl::Json arr = kl::Json::array();
            for (std::size_t i = 0; i < g2.size(); ++i) {
                bool boundary = false;
                for (int j = 0; j <= 2; ++j) boundary = boundary || kl::on_face(g2.points[i], grid, j);
                if (boundary) worst = std::max(worst, kl::distance(e, samples[i]));
                arr.push_back(kl::element_to_json(samples[i]));
            }
            emit(kl::Json{{"grid", grid},
                          {"ell", ell},
                          {"max_boundary_violation", worst},
                          {"samples", arr}},
                 out_path, pretty);
        } else if (flow->parsed()) {
            FibreFixture f = fibre_fixture(spec, genus, winding, grid, rng, wiggle);
            kl::FlowConfig cfg;
            cfg.steps = steps;
            cfg.step_size = step_size;
            cfg.grid = grid;
            cfg.stop_grad_norm = stop_grad;
            if (mode_name == "joint")
                cfg.mode = kl::FlowConfig::Mode::Joint;
            else if (mode_name != "fix")
                throw kl::ParseError("mode must be 'fix' or 'joint'");
            kl::DescentResult r = kl::descend(f.w, f.phi, cfg, spec);
            if (!trace_path.empty()) write_text(kl::trace_to_csv(r.trace), trace_path);
            if (!out_point.empty()) {
                kl::FreeSimplicialGroup k = kl::kan_group(kl::surface(genus));
                kl::RealizationPoint p =
                    kl::make_surface_point(k, spec, r.holonomies, r.path);
                write_text(kl::point_to_json(p).dump() + "\n", out_point);
            }
            kl::Json j{{"final_energy", r.final_energy},
                       {"final_grad_norm", r.final_grad_norm},
                       {"steps_taken", r.steps_taken},
                       {"converged", r.converged},
                       {"class_before", r.class_before},
                       {"class_after", r.class_after}};
            emit(j, out_path, pretty);
            if (!r.converged) return kExitNonConvergence;
        } else if (ifm->parsed()) {
            kl::Word gamma = kl::parse_word(gamma_text, [](const std::string&) { return 2; });
            int need = 0;
            for (const kl::Letter& l : gamma.letters()) {
                kl::GammaSymbol s = kl::parse_gamma_symbol(l.gen.base, 1 << 20);
                need = std::max({need, s.i, s.j});
            }
            if (ell == 0) ell = std::max(need, 1);
            auto q = kl::intersection_form(gamma, ell);
            emit(kl::Json{{"matrix", q},
                          {"det", kl::integer_determinant(q)},
                          {"nondegenerate", kl::is_nondegenerate(q)}},
                 out_path, pretty);
        }
        return kExitOk;
    } catch (const kl::NumericError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNonConvergence;
    } catch (const kl::Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInvalidInput;
    }
}
