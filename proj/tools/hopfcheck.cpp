#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "hopfcheck/constructions.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/io.hpp"
#include "hopfcheck/structure.hpp"

using namespace hopfcheck;
using io::json;

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kTheorem = 3 };

struct Run {
    std::vector<std::string> argv;
    std::string json_path;
    std::uint64_t seed = 0;
    bool timing = false;
    json inputs = json::object();
    json results = json::object();
    json timings = json::object();

    PeterWeylOptions pw() const { return {seed, 40}; }
    StructureOptions so() const { return {pw(), {}}; }
};

std::string sha256_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

HopfStarAlgebra load(Run& run, const std::string& path)
{
    run.inputs[path] = sha256_file(path);
    return io::load_algebra(path);
}

Subspace load_ideal(Run& run, const std::string& path, const HopfStarAlgebra& h)
{
    run.inputs[path] = sha256_file(path);
    return io::ideal_from_json(io::read_json_file(path), h);
}

// Timer that records into the report only under --timing.
class Stopwatch {
public:
    Stopwatch(Run& run, std::string name) : run_(run), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
    ~Stopwatch()
    {
        if (run_.timing)
            run_.timings[name_] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    Run& run_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

const char* yes(bool b) { return b ? "yes" : "no"; }

json irreps_json(const PeterWeylData& p)
{
    json out = json::array();
    for (std::size_t l = 0; l < p.size(); ++l)
        out.push_back({{"dim", p.irreps[l].dim},
                       {"block_basis", io::subspace_to_json(p.blocks[l])},
                       {"character", io::vector_to_json(p.irreps[l].character())},
                       {"conjugate", p.conj[l]}});
    return out;
}

json normality_json(const NormalityReport& r)
{
    json mats = json::array();
    for (const auto& m : r.rep.matrices) mats.push_back(io::matrix_to_json(m));
    return {{"rep_criterion", r.rep.normal},
            {"matrices", mats},
            {"trivial_set", r.rep.trivial},
            {"left_a_normal", r.left_a_normal},
            {"right_a_normal", r.right_a_normal},
            {"coset_equality", r.coset_equality},
            {"block_sum", r.block_sum},
            {"agree", r.agree}};
}

void print_normality(const NormalityReport& r, const PeterWeylData& p)
{
    std::cout << "representation criterion: " << yes(r.rep.normal) << "\n"
              << "left a-normal:            " << yes(r.left_a_normal) << "\n"
              << "right a-normal:           " << yes(r.right_a_normal) << "\n"
              << "coset algebras equal:     " << yes(r.coset_equality) << "\n"
              << "criteria agree:           " << yes(r.agree) << "\n";
    std::cout << "S(N) = {";
    for (std::size_t i = 0; i < r.rep.trivial.size(); ++i) std::cout << (i ? ", " : "") << r.rep.trivial[i];
    std::cout << "}\n";
    for (std::size_t l = 0; l < r.rep.matrices.size(); ++l) {
        const Matrix& m = r.rep.matrices[l];
        std::cout << "  M[" << l << "] (dim " << p.irreps[l].dim << "):";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::cout << (i ? " ;" : "");
            for (std::size_t j = 0; j < m.cols(); ++j) std::cout << " " << m(i, j);
        }
        std::cout << "\n";
    }
}

int cmd_axioms(Run& run, const std::string& file)
{
    HopfStarAlgebra h = load(run, file);
    AxiomReport r;
    {
        Stopwatch sw(run, "axioms");
        r = check_axioms(h);
    }
    json list = json::array();
    for (const auto& a : r.results) {
        list.push_back({{"name", a.name}, {"passed", a.passed}, {"witness", a.witness}});
        std::cout << (a.passed ? "pass  " : "FAIL  ") << a.name;
        if (!a.passed && !a.witness.empty()) std::cout << "  (" << a.witness << ")";
        std::cout << "\n";
    }
    run.results["axioms"] = list;
    run.results["passed"] = r.all_passed();
    return r.all_passed() ? kPass : kFail;
}

int cmd_haar(Run& run, const std::string& file)
{
    HopfStarAlgebra h = load(run, file);
    Stopwatch sw(run, "haar");
    const Vector& hv = h.haar();
    std::string witness;
    bool positive = haar_positive_definite(h, &witness);
    run.results["haar"] = io::vector_to_json(hv);
    run.results["positive"] = positive;
    for (std::size_t i = 0; i < h.dim(); ++i) std::cout << "h(" << h.labels()[i] << ") = " << hv[i] << "\n";
    std::cout << "positive definite: " << yes(positive) << (positive ? "" : "  (" + witness + ")") << "\n";
    return positive ? kPass : kFail;
}

int cmd_irreps(Run& run, const std::string& file)
{
    HopfStarAlgebra h = load(run, file);
    Stopwatch sw(run, "irreps");
    PeterWeylData p = peter_weyl(h, run.pw());
    std::vector<std::string> bad = check_peter_weyl(h, p);
    run.results["irreps"] = irreps_json(p);
    run.results["fusion"] = p.fusion;
    run.results["trivial"] = p.trivial;
    run.results["violations"] = bad;
    std::cout << p.size() << " irreducible corepresentations, dims:";
    for (const auto& u : p.irreps) std::cout << " " << u.dim;
    std::cout << "\ntrivial: " << p.trivial << "\n";
    for (std::size_t l = 0; l < p.size(); ++l) {
        std::cout << "  " << l << " (x) -:";
        for (std::size_t m = 0; m < p.size(); ++m) {
            std::cout << " [";
            for (std::size_t n = 0; n < p.size(); ++n) std::cout << (n ? "," : "") << p.fusion[l][m][n];
            std::cout << "]";
        }
        std::cout << "  conjugate " << p.conj[l] << "\n";
    }
    for (const auto& b : bad) std::cout << "violation: " << b << "\n";
    return bad.empty() ? kPass : kTheorem;
}

int cmd_subgroups(Run& run, const std::string& file)
{
    HopfStarAlgebra h = load(run, file);
    Stopwatch sw(run, "subgroups");
    SubgroupLattice l = subgroup_lattice(h, run.so());
    json subs = json::array(), qs = json::array();
    std::cout << l.hopf_subalgebras.size() << " Hopf subalgebras\n";
    for (const auto& b : l.hopf_subalgebras) {
        subs.push_back({{"dim", b.space.dim()}, {"irreps", b.irreps}, {"basis", io::subspace_to_json(b.space)}});
        std::cout << "  dim " << b.space.dim() << "  irreps {";
        for (std::size_t i = 0; i < b.irreps.size(); ++i) std::cout << (i ? "," : "") << b.irreps[i];
        std::cout << "}\n";
    }
    std::cout << l.quantum_subgroups.size() << " quantum subgroups\n";
    for (std::size_t i = 0; i < l.quantum_subgroups.size(); ++i) {
        const auto& q = l.quantum_subgroups[i];
        qs.push_back({{"ideal_dim", q.ideal.dim()},
                      {"quotient_dim", q.quotient.dim()},
                      {"normal", static_cast<bool>(l.normal_flags[i])},
                      {"ideal", io::subspace_to_json(q.ideal)}});
        std::cout << "  ideal dim " << q.ideal.dim() << ", quotient dim " << q.quotient.dim()
                  << (l.normal_flags[i] ? ", normal" : "") << "\n";
    }
    run.results["hopf_subalgebras"] = subs;
    run.results["quantum_subgroups"] = qs;
    return kPass;
}

int cmd_normal(Run& run, const std::string& file, const std::string& ideal_file)
{
    HopfStarAlgebra h = load(run, file);
    Subspace ideal = load_ideal(run, ideal_file, h);
    Stopwatch sw(run, "normal");
    QuantumSubgroup q = make_subgroup(h, ideal);
    PeterWeylData p = peter_weyl(h, run.pw());
    NormalityReport r = normality_report(q, p, true);
    run.results["normality"] = normality_json(r);
    print_normality(r, p);
    if (!r.agree || !r.block_sum) return kTheorem;
    return r.normal() ? kPass : kFail;
}

int cmd_quotient(Run& run, const std::string& file, const std::string& ideal_file, const std::string& out)
{
    HopfStarAlgebra h = load(run, file);
    QuantumSubgroup q = make_subgroup(h, load_ideal(run, ideal_file, h));
    io::save_algebra(q.quotient, out);
    run.results["ideal_dim"] = q.ideal.dim();
    run.results["quotient_dim"] = q.quotient.dim();
    run.results["projection"] = io::matrix_to_json(q.proj);
    std::cout << "quotient of dim " << q.quotient.dim() << " written to " << out << "\n";
    return kPass;
}

int cmd_reconstruct(Run& run, const std::string& file, const std::string& ideal_file)
{
    HopfStarAlgebra h = load(run, file);
    QuantumSubgroup q = make_subgroup(h, load_ideal(run, ideal_file, h));
    Stopwatch sw(run, "reconstruct");
    bool normal = is_normal_coset(q);
    PhiIdentities phi = phi_map(q, comodule_splitting(q));
    run.results["normal"] = normal;
    run.results["phi"] = {{"image_in_cosets", phi.image_in_cosets}, {"counit", phi.counit}, {"splitting", phi.splitting}};
    std::cout << "normal: " << yes(normal) << "\n"
              << "phi(A) in A_{G/N}: " << yes(phi.image_in_cosets) << "\n"
              << "eps phi = eps: " << yes(phi.counit) << "\n"
              << "id - s pi = [(eps - id) phi] * id: " << yes(phi.splitting) << "\n";
    bool ok = phi.all();
    if (normal) {
        Reconstruction r = reconstruction_check(q);
        ExactSequence e = exact_sequence_check(q);
        run.results["reconstruction"] = {{"ker_pi_dim", q.ideal.dim()},
                                         {"augmented_cosets_dim", r.augmented_cosets.dim()},
                                         {"left", r.left == q.ideal},
                                         {"right", r.right == q.ideal},
                                         {"two_sided", r.two_sided == q.ideal}};
        run.results["exact_sequence"] = {{"coset_is_hopf_subalgebra", e.coset_is_hopf_subalgebra},
                                         {"reconstruction", e.reconstruction},
                                         {"dimensions", e.dimensions}};
        std::cout << "ker pi = A+ A = A A+ = A A+ A: " << yes(r.holds) << " (dim " << q.ideal.dim() << ")\n"
                  << "exact sequence: " << yes(e.holds()) << " (" << h.dim() << " = "
                  << coset_algebras(q).g_mod_n.dim() << " x " << q.quotient.dim() << ")\n";
        ok = ok && r.holds && e.holds();
    }
    return ok ? kPass : kTheorem;
}

int cmd_third_iso(Run& run, const std::string& file, const std::string& n_file, const std::string& h_file)
{
    HopfStarAlgebra g = load(run, file);
    QuantumSubgroup n = make_subgroup(g, load_ideal(run, n_file, g));
    QuantumSubgroup h = make_subgroup(g, load_ideal(run, h_file, g));
    Stopwatch sw(run, "third-iso");
    ThirdIsomorphism r = third_isomorphism_check(n, h);
    run.results["third_isomorphism"] = {{"n_normal_in_h", r.n_normal_in_h},
                                        {"image_identity", r.image_identity},
                                        {"coset_identity", r.coset_identity},
                                        {"h_normal", r.h_normal},
                                        {"quotient_normal", r.quotient_normal},
                                        {"lhs_dim", r.lhs.dim()},
                                        {"rhs_dim", r.rhs.dim()}};
    std::cout << "N normal in H: " << yes(r.n_normal_in_h) << "\n"
              << "theta(A_{G/N}) = A_{H/N}: " << yes(r.image_identity) << "\n"
              << "A_{(G/N)/(H/N)} = A_{G/H}: " << yes(r.coset_identity) << " (dims " << r.lhs.dim() << ", "
              << r.rhs.dim() << ")\n";
    if (r.h_normal) std::cout << "H/N normal in G/N: " << yes(r.quotient_normal) << "\n";
    return r.holds() ? kPass : kTheorem;
}

int cmd_props(Run& run, const std::string& file)
{
    HopfStarAlgebra g = load(run, file);
    Stopwatch sw(run, "props");
    PropertyResult f = property_F_check(g, run.so());
    PropertyResult fd = property_FD_check(g, run.so());
    InheritanceReport inh = property_inheritance_suite(g, run.so());
    auto witness = [](const PropertyResult& r) { return r.witness ? io::subspace_to_json(*r.witness) : json(); };
    run.results["property_F"] = {{"holds", f.holds}, {"witness", witness(f)}};
    run.results["property_FD"] = {{"holds", fd.holds}, {"witness", witness(fd)}};
    run.results["pullback"] = inh.pullback;
    run.results["inheritance"] = {{"checks", inh.checks}, {"failures", inh.failures}};
    std::cout << "property F:  " << yes(f.holds);
    if (f.witness) std::cout << "  (witness: Hopf subalgebra of dim " << f.witness->dim() << ")";
    std::cout << "\nproperty FD: " << yes(fd.holds);
    if (fd.witness) std::cout << "  (witness: quantum subgroup with ideal of dim " << fd.witness->dim() << ")";
    std::cout << "\npullback on coset subalgebras: " << yes(inh.pullback) << "\n";
    for (const auto& c : inh.checks) std::cout << "  inherited: " << c << "\n";
    for (const auto& c : inh.failures) std::cout << "  VIOLATED: " << c << "\n";
    return inh.ok() ? kPass : kTheorem;
}

int cmd_build_group(Run& run, bool function, const std::string& group_file, const std::string& out)
{
    run.inputs[group_file] = sha256_file(group_file);
    FiniteGroup g = io::group_from_json(io::read_json_file(group_file));
    HopfStarAlgebra h = function ? function_algebra(g) : group_algebra(g);
    io::save_algebra(h, out);
    run.results["dim"] = h.dim();
    std::cout << (function ? "function" : "group") << " algebra of dim " << h.dim() << " written to " << out << "\n";
    return kPass;
}

int cmd_build_tensor(Run& run, const std::string& left, const std::string& right, const std::string& out)
{
    HopfStarAlgebra h = tensor_product(load(run, left), load(run, right));
    io::save_algebra(h, out);
    run.results["dim"] = h.dim();
    std::cout << "tensor product of dim " << h.dim() << " written to " << out << "\n";
    return kPass;
}

int cmd_build_crossed(Run& run, const std::string& algebra, const std::string& action, const std::string& out)
{
    HopfStarAlgebra a = load(run, algebra);
    run.inputs[action] = sha256_file(action);
    GroupAction act = io::action_from_json(io::read_json_file(action));
    HopfStarAlgebra x = crossed_product(a, act);
    io::save_algebra(x, out);
    run.results["dim"] = x.dim();
    std::cout << "crossed product of dim " << x.dim() << " written to " << out << "\n";
    return kPass;
}

int cmd_build_catalog(Run& run, const std::string& dir)
{
    std::filesystem::create_directories(dir);
    json names = json::array();
    for (const auto& e : catalog()) {
        const std::string path = (std::filesystem::path(dir) / (e.name + ".hopf.json")).string();
        io::save_algebra(e.algebra, path);
        names.push_back(e.name);
        std::cout << path << "\n";
    }
    run.results["written"] = names;
    return kPass;
}

int cmd_demo_pullback(Run& run)
{
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    HopfStarAlgebra cs3 = group_algebra(s3);
    const std::size_t c = s3.index_of("(123)"), c2 = s3.mul(c, c), e = s3.identity();
    const int n = cs3.field_order();
    Scalar omega = Scalar::zeta(n, n / 3);
    Vector idem = zero_vector(6);
    idem[e] = Scalar(Rational(1, 3));
    idem[c] = omega.conj() * Scalar(Rational(1, 3));
    idem[c2] = omega * Scalar(Rational(1, 3));
    Subspace a0 = Subspace::span({cs3.basis(e), cs3.basis(c), cs3.basis(c2)}, 6);
    Subspace i0 = Subspace::span({idem}, 6);
    PullbackResult r = pullback_check(cs3, a0, i0, PullbackMode::PlainIdeal);
    bool reproduced = !r.holds && i0.dim() == 1 && r.intersection.dim() == 2;
    run.results["demo"] = "s3-pullback";
    run.results["pullback_identity"] = r.holds;
    run.results["i0_dim"] = i0.dim();
    run.results["generated_ideal_dim"] = r.generated.dim();
    run.results["intersection_dim"] = r.intersection.dim();
    run.results["a0_dim"] = a0.dim();
    run.results["expected_failure"] = true;
    run.results["reproduced"] = reproduced;
    std::cout << "A = CS3, A0 = C<(123)> (dim " << a0.dim() << "), I0 = C e_omega (dim " << i0.dim() << ")\n"
              << "I = A I0 A has dim " << r.generated.dim() << "\n"
              << "I cap A0 has dim " << r.intersection.dim() << "\n"
              << "I cap A0 = I0: " << yes(r.holds) << " (expected failure: the pullback property fails for CS3)\n";
    return reproduced ? kPass : kFail;
}

int cmd_demo_equivalence(Run& run)
{
    json rows = json::array();
    bool all_agree = true;
    for (const auto& e : catalog()) {
        Stopwatch sw(run, "equivalence " + e.name);
        PeterWeylData p = peter_weyl(e.algebra, run.pw());
        // a second gauge: conjugate every irrep by an upper unitriangular matrix
        PeterWeylData p2 = p;
        for (auto& u : p2.irreps) {
            Matrix t = Matrix::identity(u.dim);
            for (std::size_t i = 0; i < u.dim; ++i)
                for (std::size_t j = i + 1; j < u.dim; ++j) t(i, j) = Scalar(1);
            u = regauge(u, t);
        }
        std::size_t count = 0, normal = 0;
        bool agree = true, gauge = true;
        for (const auto& q : enumerate_quantum_subgroups(e.algebra, run.so())) {
            NormalityReport r = normality_report(q, p, true);
            RepCriterion r2 = is_normal_rep(q, p2);
            ++count;
            normal += r.normal();
            agree = agree && r.agree && r.block_sum;
            gauge = gauge && r2.normal == r.rep.normal && r2.trivial == r.rep.trivial;
            if (!r.agree) std::cout << "  DISAGREEMENT in " << e.name << ": " << r.describe() << "\n";
        }
        all_agree = all_agree && agree && gauge;
        rows.push_back({{"algebra", e.name}, {"subgroups", count}, {"normal", normal}, {"agree", agree}, {"gauge_independent", gauge}});
        std::cout << std::left << std::setw(16) << e.name << " subgroups " << std::setw(3) << count << " normal "
                  << std::setw(3) << normal << " agree " << yes(agree) << "  gauge-independent " << yes(gauge) << "\n";
    }
    run.results["demo"] = "equivalence-suite";
    run.results["algebras"] = rows;
    run.results["all_agree"] = all_agree;
    return all_agree ? kPass : kTheorem;
}

void emit_report(const Run& run, int code)
{
    if (run.json_path.empty()) return;
    json report = {{"command", run.argv},
                   {"inputs", run.inputs},
                   {"results", run.results},
                   {"exit_code", code},
                   {"tool", {{"name", "hopfcheck"}, {"version", kVersion}}}};
    if (run.timing) report["timing"] = run.timings;
    if (run.json_path == "-") std::cout << report.dump(2) << "\n";
    else io::write_json_file(run.json_path, report);
}

}  // namespace

int main(int argc, char** argv)
{
    Run run;
    for (int i = 0; i < argc; ++i) run.argv.emplace_back(i == 0 ? "hopfcheck" : argv[i]);

    CLI::App app{"Exact verification of normality theory for finite quantum groups"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--json", run.json_path, "write the JSON report to this path ('-' for stdout)");
    app.add_option("--seed", run.seed, "seed for the randomized splitting heuristics");
    app.add_flag("--timing", run.timing, "include timings in the JSON report");

    std::string file, ideal, out, n_ideal, h_ideal, group, left, right, action, dir = "catalog";
    std::function<int()> action_fn;

    auto* ax = app.add_subcommand("axioms", "check the Hopf *-algebra axioms");
    ax->add_option("file", file)->required();
    ax->callback([&] { action_fn = [&] { return cmd_axioms(run, file); }; });

    auto* hr = app.add_subcommand("haar", "compute the Haar functional");
    hr->add_option("file", file)->required();
    hr->callback([&] { action_fn = [&] { return cmd_haar(run, file); }; });

    auto* ir = app.add_subcommand("irreps", "Peter-Weyl decomposition and fusion rules");
    ir->add_option("file", file)->required();
    ir->callback([&] { action_fn = [&] { return cmd_irreps(run, file); }; });

    auto* sg = app.add_subcommand("subgroups", "enumerate Hopf subalgebras and quantum subgroups");
    sg->add_option("file", file)->required();
    sg->callback([&] { action_fn = [&] { return cmd_subgroups(run, file); }; });

    auto* nm = app.add_subcommand("normal", "run all four normality criteria");
    nm->add_option("file", file)->required();
    nm->add_option("--ideal", ideal)->required();
    nm->callback([&] { action_fn = [&] { return cmd_normal(run, file, ideal); }; });

    auto* qt = app.add_subcommand("quotient", "write the quotient Hopf *-algebra");
    qt->add_option("file", file)->required();
    qt->add_option("--ideal", ideal)->required();
    qt->add_option("--out", out)->required();
    qt->callback([&] { action_fn = [&] { return cmd_quotient(run, file, ideal, out); }; });

    auto* rc = app.add_subcommand("reconstruct", "reconstruction lemma and its splitting identities");
    rc->add_option("file", file)->required();
    rc->add_option("--ideal", ideal)->required();
    rc->callback([&] { action_fn = [&] { return cmd_reconstruct(run, file, ideal); }; });

    auto* ti = app.add_subcommand("third-iso", "third isomorphism theorem for N <= H");
    ti->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    ti->add_option("file", file)->required();
    ti->add_option("--n", n_ideal, "ideal of the normal subgroup N")->required();
    ti->add_option("--h", h_ideal, "ideal of the subgroup H containing N")->required();
    ti->callback([&] { action_fn = [&] { return cmd_third_iso(run, file, n_ideal, h_ideal); }; });

    auto* pr = app.add_subcommand("props", "properties F and FD, pullback and inheritance");
    pr->add_option("file", file)->required();
    pr->callback([&] { action_fn = [&] { return cmd_props(run, file); }; });

    auto* bd = app.add_subcommand("build", "construct algebras");
    bd->require_subcommand(1);
    auto* bga = bd->add_subcommand("group-algebra", "group algebra of a group file");
    bga->add_option("--group", group)->required();
    bga->add_option("--out", out)->required();
    bga->callback([&] { action_fn = [&] { return cmd_build_group(run, false, group, out); }; });
    auto* bfa = bd->add_subcommand("function-algebra", "function algebra of a group file");
    bfa->add_option("--group", group)->required();
    bfa->add_option("--out", out)->required();
    bfa->callback([&] { action_fn = [&] { return cmd_build_group(run, true, group, out); }; });
    auto* bt = bd->add_subcommand("tensor", "tensor product of two algebras");
    bt->add_option("--left", left)->required();
    bt->add_option("--right", right)->required();
    bt->add_option("--out", out)->required();
    bt->callback([&] { action_fn = [&] { return cmd_build_tensor(run, left, right, out); }; });
    auto* bc = bd->add_subcommand("crossed", "crossed product by a group action");
    bc->add_option("--algebra", file)->required();
    bc->add_option("--action", action)->required();
    bc->add_option("--out", out)->required();
    bc->callback([&] { action_fn = [&] { return cmd_build_crossed(run, file, action, out); }; });
    auto* bcat = bd->add_subcommand("catalog", "write the catalog algebras as .hopf.json files");
    bcat->add_option("--dir", dir);
    bcat->callback([&] { action_fn = [&] { return cmd_build_catalog(run, dir); }; });

    auto* demo = app.add_subcommand("demo", "reproduce named results");
    demo->require_subcommand(1);
    demo->add_subcommand("s3-pullback", "the CS3 pullback counterexample")->callback([&] {
        action_fn = [&] { return cmd_demo_pullback(run); };
    });
    demo->add_subcommand("equivalence-suite", "all normality criteria on every catalog subgroup")->callback([&] {
        action_fn = [&] { return cmd_demo_equivalence(run); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    int code = kPass;
    try {
        Stopwatch sw(run, "total");
        code = action_fn();
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        run.results["error"] = {{"kind", "TheoremViolation"}, {"message", e.what()}};
        code = kTheorem;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        run.results["error"] = {{"kind", "SchemaError"}, {"message", e.what()}};
        code = kUsage;
    } catch (const ShapeError& e) {
        std::cerr << "shape error: " << e.what() << "\n";
        run.results["error"] = {{"kind", "ShapeError"}, {"message", e.what()}};
        code = kUsage;
    } catch (const FieldMismatch& e) {
        std::cerr << "field mismatch: " << e.what() << "\n";
        run.results["error"] = {{"kind", "FieldMismatch"}, {"message", e.what()}};
        code = kUsage;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        run.results["error"] = {{"kind", "CheckFailed"}, {"message", e.what()}};
        code = kFail;
    }
    try {
        emit_report(run, code);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return code;
}
