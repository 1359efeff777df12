// curvlab command line tool: exact curvature computations, first-order
// equivalence decisions, group-action transforms, and property-test suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvlab/gen.hpp"
#include "curvlab/io.hpp"
#include "curvlab/orbits.hpp"
#include "curvlab/verify.hpp"

namespace {

using namespace curvlab;
using curvlab::io::json;

struct LoadedSpec {
    std::string path;
    std::string bytes;
    io::FieldSpecFile spec;
};

LoadedSpec load(const std::string& path) {
    LoadedSpec l;
    l.path = path;
    l.bytes = io::read_file(path);
    l.spec = io::parse_spec(l.bytes);
    return l;
}

json input_entry(const LoadedSpec& l) {
    return json{{"path", l.path}, {"digest", io::digest(l.bytes)}};
}

std::string tuple_key(std::span<const int> idx) {
    std::string k;
    for (size_t t = 0; t < idx.size(); ++t) {
        if (t) k += ',';
        k += std::to_string(idx[t] + 1);
    }
    return k;
}

/// Emits the nonzero entries of a matrix-valued k-form. Only strictly
/// increasing base index tuples are listed; the rest follow by antisymmetry.
/// With a point, values are exact rationals; otherwise polynomial strings.
json fiber_form_blocks(const FiberForm& f, const std::optional<std::vector<Rat>>& point,
                       double* sup_norm) {
    json out = json::object();
    std::map<std::string, std::string> entries;
    std::vector<int> idx(size_t(f.degree()), 0);
    auto emit = [&](auto&& self, int k) -> void {
        if (k == f.degree()) {
            const PolyMatrix& v = f.at(std::span<const int>(idx));
            for (int i = 0; i < v.rows(); ++i)
                for (int j = 0; j < v.cols(); ++j) {
                    std::string key = tuple_key(idx);
                    if (!key.empty()) key += ":";
                    key += std::to_string(i + 1) + "," + std::to_string(j + 1);
                    if (point) {
                        Rat val = v(i, j).eval(*point);
                        if (sup_norm) {
                            double d = std::abs(to_double(val));
                            if (d > *sup_norm) *sup_norm = d;
                        }
                        if (val != 0) entries[key] = io::rat_str(val);
                    } else if (!v(i, j).is_zero()) {
                        entries[key] = poly_to_string(v(i, j));
                    }
                }
            return;
        }
        int lo = (k == 0) ? 0 : idx[k - 1] + 1;
        for (int v = lo; v < f.base_dim(); ++v) {
            idx[k] = v;
            self(self, k + 1);
        }
    };
    emit(emit, 0);
    for (const auto& [k, v] : entries) out[k] = v;
    return out;
}

json tensor_blocks(const TensorPolyField& t, const std::optional<std::vector<Rat>>& point,
                   double* sup_norm) {
    std::map<std::string, std::string> entries;
    t.for_each_index([&](std::span<const int> idx) {
        const PolyScalar& p = t.at(idx);
        if (point) {
            Rat val = p.eval(*point);
            if (sup_norm) {
                double d = std::abs(to_double(val));
                if (d > *sup_norm) *sup_norm = d;
            }
            if (val != 0) entries[tuple_key(idx)] = io::rat_str(val);
        } else if (!p.is_zero()) {
            entries[tuple_key(idx)] = poly_to_string(p);
        }
    });
    json out = json::object();
    for (const auto& [k, v] : entries) out[k] = v;
    return out;
}

json ratmat_blocks(const RatMat& a) {
    json out = json::object();
    std::map<std::string, std::string> entries;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
                    io::rat_str(a(i, j));
    for (const auto& [k, v] : entries) out[k] = v;
    return out;
}

void print_report(const json& rep, const std::string& out_path) {
    std::string text = rep.dump(2);
    text += '\n';
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw argument_error("cannot write output file: " + out_path);
        f << text;
    }
}

int cmd_curvature(const std::string& kind, const std::string& file,
                  const std::string& point_str, const std::string& out_path) {
    LoadedSpec in = load(file);
    const int m = in.spec.base_dim;
    std::optional<std::vector<Rat>> point;
    if (!point_str.empty()) point = io::parse_point(point_str, m);

    json rep;
    rep["format_version"] = io::kFormatVersion;
    rep["operation"] = json{{"command", "curvature"}, {"kind", kind}};
    if (point) {
        std::vector<std::string> ps;
        for (const Rat& c : *point) ps.push_back(io::rat_str(c));
        rep["operation"]["point"] = ps;
    }
    rep["inputs"] = json::array({input_entry(in)});
    double sup = 0.0;
    bool have_norm = point.has_value();

    if (kind == "dform") {
        TensorPolyField omega = io::spec_to_form(in.spec);
        TensorPolyField d = exterior_derivative(omega);
        rep["blocks"] = json{{"dform", tensor_blocks(d, point, &sup)}};
    } else if (kind == "yangmills") {
        ConnectionField A = io::spec_to_connection(in.spec);
        FiberForm F = yang_mills_curvature(A);
        rep["blocks"] = json{{"F", fiber_form_blocks(F, point, &sup)}};
    } else if (kind == "riemann") {
        MetricField g = io::spec_to_metric(in.spec);
        if (point) {
            PointCurvature pc = metric_curvature_at(g, *point);
            json riem = json::object();
            std::map<std::string, std::string> entries;
            for (int r = 0; r < m; ++r)
                for (int s = 0; s < m; ++s)
                    for (int mu = 0; mu < m; ++mu)
                        for (int nu = 0; nu < m; ++nu)
                            if (pc.up(r, s, mu, nu) != 0) {
                                double d = std::abs(to_double(pc.up(r, s, mu, nu)));
                                if (d > sup) sup = d;
                                entries[std::to_string(r + 1) + "," + std::to_string(s + 1) +
                                        "," + std::to_string(mu + 1) + "," +
                                        std::to_string(nu + 1)] =
                                    io::rat_str(pc.up(r, s, mu, nu));
                            }
            for (const auto& [k, v] : entries) riem[k] = v;
            rep["blocks"] = json{{"riemann", riem},
                                 {"ricci", ratmat_blocks(pc.ricci)},
                                 {"scalar", io::rat_str(pc.scalar)}};
        } else {
            CurvaturePack pack = metric_curvature(g);
            rep["blocks"] = json{{"riemann", tensor_blocks(pack.riemann, std::nullopt, nullptr)},
                                 {"ricci", tensor_blocks(pack.ricci, std::nullopt, nullptr)},
                                 {"scalar", poly_to_string(pack.scalar)}};
            have_norm = false;
        }
    } else if (kind == "weyl") {
        if (!point) throw argument_error("--kind weyl requires --point");
        MetricField g = io::spec_to_metric(in.spec);
        WeylValue w = weyl_at(g, *point);
        json lo = json::object(), up = json::object();
        std::map<std::string, std::string> elo, eup;
        for (int r = 0; r < m; ++r)
            for (int s = 0; s < m; ++s)
                for (int mu = 0; mu < m; ++mu)
                    for (int nu = 0; nu < m; ++nu) {
                        std::string key = std::to_string(r + 1) + "," + std::to_string(s + 1) +
                                          "," + std::to_string(mu + 1) + "," +
                                          std::to_string(nu + 1);
                        if (w.w_low(r, s, mu, nu) != 0)
                            elo[key] = io::rat_str(w.w_low(r, s, mu, nu));
                        if (w.w_up(r, s, mu, nu) != 0) {
                            double d = std::abs(to_double(w.w_up(r, s, mu, nu)));
                            if (d > sup) sup = d;
                            eup[key] = io::rat_str(w.w_up(r, s, mu, nu));
                        }
                    }
        for (const auto& [k, v] : elo) lo[k] = v;
        for (const auto& [k, v] : eup) up[k] = v;
        rep["blocks"] = json{{"weyl_low", lo}, {"weyl_up", up}};
    } else if (kind == "nijenhuis") {
        PolyMatrix J = io::spec_to_acs(in.spec);
        check_acs(J);
        TensorPolyField N = nijenhuis(J);
        rep["blocks"] = json{{"nijenhuis", tensor_blocks(N, point, &sup)}};
    } else if (kind == "superq" || kind == "superobstruction") {
        SuperconnectionField s = io::spec_to_super(in.spec);
        SuperCurvatureValue v = (kind == "superq") ? quillen_supercurvature(s)
                                                   : obstruction_supercurvature(s);
        auto sect = [&](const PolyMatrix& x) {
            return fiber_form_blocks(FiberForm::from_section(x, m), point, &sup);
        };
        auto one_form = [&](const std::vector<PolyMatrix>& xs) {
            FiberForm f(m, 1, xs[0].rows(), xs[0].cols());
            for (int mu = 0; mu < m; ++mu) f.at({mu}) = xs[size_t(mu)];
            return fiber_form_blocks(f, point, &sup);
        };
        rep["blocks"] = json{{"deg0_first", sect(v.deg0_first)},
                             {"deg0_second", sect(v.deg0_second)},
                             {"deg1_pm", one_form(v.deg1_pm)},
                             {"deg1_mp", one_form(v.deg1_mp)},
                             {"deg2_plus", fiber_form_blocks(v.deg2_plus, point, &sup)},
                             {"deg2_minus", fiber_form_blocks(v.deg2_minus, point, &sup)}};
        rep["blocks"]["deg0_parity"] = (v.deg0_parity == Parity::Even) ? "even" : "odd";
    } else {
        throw argument_error("unknown curvature kind: " + kind);
    }
    if (have_norm) rep["norms"] = json{{"sup_norm", sup}};
    print_report(rep, out_path);
    return 0;
}

json report_to_json(const ObstructionReport& r) {
    json side_a = json::object(), side_b = json::object();
    for (const auto& b : r.invariant_a) side_a[b.name] = ratmat_blocks(b.value);
    for (const auto& b : r.invariant_b) side_b[b.name] = ratmat_blocks(b.value);
    return json{{"case", r.case_tag},
                {"invariant_a", side_a},
                {"invariant_b", side_b},
                {"differing_blocks", r.differing},
                {"norms", json{{"sup_norm", r.sup_norm}}},
                {"verdict", r.verdict}};
}

int cmd_equivalence(const std::string& file_a, const std::string& file_b,
                    const std::string& point_str, const std::string& out_path) {
    LoadedSpec a = load(file_a), b = load(file_b);
    if (a.spec.case_tag != b.spec.case_tag)
        throw argument_error("case mismatch: " + a.spec.case_tag + " vs " + b.spec.case_tag);
    if (a.spec.base_dim != b.spec.base_dim)
        throw argument_error("base dimension mismatch");
    std::vector<Rat> point = io::parse_point(point_str, a.spec.base_dim);

    ObstructionReport r;
    if (a.spec.case_tag == "connection") {
        ConnectionField A1 = io::spec_to_connection(a.spec);
        ConnectionField A2 = io::spec_to_connection(b.spec, A1[0].rows());
        r = decide_equivalence(prolong_connection(A1, point), prolong_connection(A2, point));
    } else if (a.spec.case_tag == "acs") {
        r = decide_equivalence(prolong_acs(io::spec_to_acs(a.spec), point),
                               prolong_acs(io::spec_to_acs(b.spec), point));
    } else if (a.spec.case_tag == "superconnection") {
        r = decide_equivalence(prolong_super(io::spec_to_super(a.spec), point),
                               prolong_super(io::spec_to_super(b.spec), point));
    } else {
        throw argument_error("equivalence supports connection, acs, superconnection");
    }

    json rep;
    rep["format_version"] = io::kFormatVersion;
    std::vector<std::string> ps;
    for (const Rat& c : point) ps.push_back(io::rat_str(c));
    rep["operation"] = json{{"command", "equivalence"}, {"point", ps}};
    rep["inputs"] = json::array({input_entry(a), input_entry(b)});
    rep.update(report_to_json(r));
    print_report(rep, out_path);
    return 0;
}

/// Gauge action with an explicit, exactly-checked inverse witness.
ConnectionField gauge_transform_with_witness(const PolyMatrix& phi, const PolyMatrix& inv,
                                             const ConnectionField& A) {
    if (!(phi * inv == PolyMatrix::identity(phi.rows(), phi.num_vars())) ||
        !(inv * phi == PolyMatrix::identity(phi.rows(), phi.num_vars())))
        throw invalid_section_error("inverse witness does not invert the gauge element");
    ConnectionField out;
    for (size_t mu = 0; mu < A.size(); ++mu)
        out.push_back(inv * A[mu] * phi + inv * phi.partial(int(mu)));
    return out;
}

int cmd_transform(const std::string& by_file, const std::string& file,
                  const std::string& out_path) {
    LoadedSpec in = load(file), by = load(by_file);
    if (in.spec.base_dim != by.spec.base_dim)
        throw argument_error("base dimension mismatch between field and group element");
    io::FieldSpecFile result;

    if (in.spec.case_tag == "connection" && by.spec.case_tag == "gauge") {
        ConnectionField A = io::spec_to_connection(in.spec);
        io::GaugeElement g = io::spec_to_gauge(by.spec);
        if (g.phi_minus) throw argument_error("paired gauge element on a plain connection");
        ConnectionField out = g.inv ? gauge_transform_with_witness(g.phi, *g.inv, A)
                                    : gauge_transform(g.phi, A);
        result = io::connection_to_spec(out);
    } else if (in.spec.case_tag == "superconnection" && by.spec.case_tag == "gauge") {
        SuperconnectionField s = io::spec_to_super(in.spec);
        io::GaugeElement g = io::spec_to_gauge(by.spec);
        if (!g.phi_minus)
            throw argument_error("superconnection transform needs phi_plus/phi_minus blocks");
        result = io::super_to_spec(super_gauge_transform(g.phi, *g.phi_minus, s));
    } else if (in.spec.case_tag == "acs" && by.spec.case_tag == "diffeo") {
        PolyMatrix J = io::spec_to_acs(in.spec);
        check_acs(J);
        std::vector<PolyScalar> phi = io::spec_to_diffeo(by.spec);
        const int m = in.spec.base_dim;
        // Pullback (Dφ)⁻¹ (J∘φ) Dφ; the Jacobian must be unipotent so the
        // inverse stays polynomial.
        PolyMatrix jac(m, m, m), comp(m, m, m);
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu)
                jac(mu, nu) = phi[mu].partial(nu);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                comp(i, j) = J(i, j).substitute(phi);
        PolyMatrix pulled = jac.unipotent_inverse() * comp * jac;
        check_acs(pulled);
        result = io::acs_to_spec(pulled);
    } else {
        throw argument_error("unsupported transform pairing: " + in.spec.case_tag + " by " +
                             by.spec.case_tag);
    }
    print_report(io::spec_to_json(result), out_path);
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, int count) {
    std::vector<std::string> names;
    if (suite == "all")
        names = verify::suite_names();
    else
        names.push_back(suite);
    bool all_ok = true;
    for (const auto& name : names) {
        verify::SuiteResult res = verify::run_suite(name, seed, count);
        for (const auto& p : res.properties) {
            std::cout << "[" << name << "] " << p.name << " ... "
                      << (p.passed() ? "PASS" : "FAIL") << "\n";
            for (const auto& note : p.failure_notes) std::cout << "    " << note << "\n";
            if (!p.passed()) all_ok = false;
        }
    }
    std::cout << (all_ok ? "verify: all properties passed" : "verify: FAILURES above") << "\n";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tensor calculus: curvature, obstructions, jet equivalence"};
    app.require_subcommand(1);

    std::string kind, file, file_b, point_str, out_path, by_file;
    std::string suite = "all";
    uint64_t seed = 42;
    int count = 25;

    CLI::App* curv = app.add_subcommand("curvature", "compute a curvature-type obstruction");
    curv->add_option("--kind", kind,
                     "dform|yangmills|riemann|weyl|nijenhuis|superq|superobstruction")
        ->required();
    curv->add_option("--point", point_str, "comma-separated rational coordinates");
    curv->add_option("--output", out_path, "write report here instead of stdout");
    curv->add_option("file", file, "field spec JSON")->required();

    CLI::App* eq = app.add_subcommand("equivalence", "first-order equivalence of two fields");
    eq->add_option("--point", point_str, "base point (comma-separated rationals)")->required();
    eq->add_option("--output", out_path, "write report here instead of stdout");
    eq->add_option("a", file, "first field spec")->required();
    eq->add_option("b", file_b, "second field spec")->required();

    CLI::App* tr = app.add_subcommand("transform", "apply a group element to a field");
    tr->add_option("--by", by_file, "group element spec (gauge or diffeo)")->required();
    tr->add_option("--output", out_path, "write transformed spec here instead of stdout");
    tr->add_option("file", file, "field spec JSON")->required();

    CLI::App* ver = app.add_subcommand("verify", "run randomized property suites");
    ver->add_option("--suite", suite, "suite name or 'all'");
    ver->add_option("--seed", seed, "base RNG seed");
    ver->add_option("--count", count, "instances per property");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (curv->parsed()) return cmd_curvature(kind, file, point_str, out_path);
        if (eq->parsed()) return cmd_equivalence(file, file_b, point_str, out_path);
        if (tr->parsed()) return cmd_transform(by_file, file, out_path);
        if (ver->parsed()) return cmd_verify(suite, seed, count);
    } catch (const curvlab::degenerate_metric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const curvlab::invalid_section_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const curvlab::unsupported_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
