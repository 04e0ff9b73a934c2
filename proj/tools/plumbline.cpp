// plumbline command-line front end.

#include "plumbline/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace plumbline;

namespace {

struct Options {
    std::string graph, ball, pd, kh, fixtures = default_fixture_dir();
    bool json = false, unknot = false, use_mirror = false;
    std::uint64_t budget = default_step_budget;
    int depth = 3;
    unsigned jobs = 1;
};

void emit(const ojson& o)
{
    ojson out;
    out["schema"] = schema_version;
    for (auto it = o.begin(); it != o.end(); ++it)
        if (it.key() != "schema")
            out[it.key()] = it.value();
    std::cout << out.dump(2) << '\n';
}

std::string vec_str(const CharVector& k)
{
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i)
        s += (i ? "," : "") + std::to_string(k[i]);
    return s + ")";
}

Diagram load_diagram(const Options& o)
{
    Diagram d = load_pd(o.pd, o.unknot);
    return o.use_mirror ? mirror(d) : d;
}

void print_cert(const QACertificate& c, int indent)
{
    const std::string pad(2 * indent, ' ');
    switch (c.kind) {
    case QACertificate::Kind::unknot:
        std::cout << pad << "unknot\n";
        return;
    case QACertificate::Kind::alternating:
        std::cout << pad << "alternating, " << c.diagram.size() << " crossings, det " << c.det << '\n';
        return;
    case QACertificate::Kind::resolution:
        std::cout << pad << "crossing " << c.crossing + 1 << ": det " << c.det << " = " << c.det0 << " + "
                  << c.det1 << '\n';
        print_cert(*c.child0, indent + 1);
        print_cert(*c.child1, indent + 1);
    }
}

int graph_analyze(const Options& o)
{
    const WeightedGraph g = load_graph(o.graph);
    const IntMatrix q = intersection_form(g);
    const auto bad = bad_vertices(g);
    const auto lv = lspace_verdict(g, o.budget, o.jobs);
    if (o.json) {
        ojson j;
        j["vertices"] = g.size();
        j["det"] = det_exact(q).str();
        j["h"] = lv.h.convert_to<long long>();
        j["negative_definite"] = is_negative_definite(q);
        j["bad_vertices"] = ojson::array();
        for (auto v : bad)
            j["bad_vertices"].push_back(g.ids()[v]);
        j["initial_count"] = initial_vectors(g).size();
        j["good_count"] = lv.good_count;
        j["lspace"] = lv.lspace;
        emit(j);
        return 0;
    }
    std::cout << "vertices: " << g.size() << "\n"
              << "det Q: " << det_exact(q) << "\n"
              << "|H_1|: " << lv.h << "\n"
              << "negative definite: " << (is_negative_definite(q) ? "yes" : "no") << "\n"
              << "bad vertices:";
    for (auto v : bad)
        std::cout << ' ' << g.ids()[v];
    std::cout << "\ngood initial vectors: " << lv.good_count << " of " << initial_vectors(g).size() << "\n"
              << "L-space: " << (lv.lspace ? "true" : "inconclusive") << "\n";
    return 0;
}

int graph_lspace(const Options& o)
{
    const WeightedGraph g = load_graph(o.graph);
    const auto lv = lspace_verdict(g, o.budget, o.jobs);
    if (o.json) {
        ojson j;
        j["lspace"] = lv.lspace;
        j["good_count"] = lv.good_count;
        j["h"] = lv.h.convert_to<long long>();
        j["bad_vertices"] = lv.bad_count;
        emit(j);
        return 0;
    }
    if (lv.lspace)
        std::cout << "L-space: true (" << lv.good_count << " = " << lv.h << ")\n";
    else
        std::cout << "L-space: inconclusive (" << lv.good_count << " good vectors, h = " << lv.h << ", "
                  << lv.bad_count << " bad vertices)\n";
    return 0;
}

int graph_dinv(const Options& o)
{
    const WeightedGraph g = load_graph(o.graph);
    const DInvariants d = d_invariants(g, o.budget, o.jobs);
    const bool lspace = bad_vertices(g).size() <= 1 && Integer(d.good.size()) == d.h;
    if (o.json) {
        emit(dinv_json(g, d, lspace));
        return 0;
    }
    const RatMatrix q_inv = inverse_rational(intersection_form(g));
    std::cout << "h = " << d.h << ", " << d.good.size() << " good vectors\n";
    for (const auto& c : d.classes)
        std::cout << "  " << vec_str(c.representative) << "  K^2 = " << to_string(square(q_inv, c.representative))
                  << "  d = " << to_string(*c.d_value) << '\n';
    if (d.unrepresented)
        std::cout << "  " << d.unrepresented << " spin^c structures without a good vector\n";
    return 0;
}

int blowdown_cmd(const Options& o)
{
    const WeightedGraph g = load_graph(o.graph);
    std::optional<EnhancedForm> ball;
    if (!o.ball.empty())
        ball = load_enhanced_form(o.ball, g);
    const BlowdownReport r = blowdown_report(g, ball, o.budget, o.jobs);
    if (o.json) {
        emit(blowdown_json(r));
        return 0;
    }
    std::cout << "h = " << r.h << ", L-space: " << (r.lspace ? "true" : "inconclusive")
              << ", bad vertices: " << r.bad_count << "\n";
    std::cout << "d = 0 classes (" << r.d_zero.size() << "):";
    for (const auto& k : r.d_zero)
        std::cout << ' ' << vec_str(k);
    std::cout << "\n";
    if (r.congruence)
        std::cout << "congruence: " << to_string(*r.congruence) << "\n";
    if (r.extenders) {
        std::cout << "extenders (" << r.extenders->size() << "):";
        for (const auto& k : *r.extenders)
            std::cout << ' ' << vec_str(k);
        std::cout << "\n";
    }
    std::cout << "expected t: " << (r.expected_t ? r.expected_t->str() : std::string("none")) << "\n"
              << "discrepancy: " << (r.discrepancy ? "yes" : "no") << "\n"
              << "hypotheses (negative definite, one bad vertex, L-space): "
              << (r.hypotheses_hold() ? "satisfied" : "not satisfied") << "\n";
    return 0;
}

int knot_cmd(const std::string& what, const Options& o)
{
    const Diagram d = load_diagram(o);
    ojson j;
    if (what == "det") {
        const Integer det = knot_determinant(d);
        j["det"] = det.convert_to<long long>();
        if (o.json)
            emit(j);
        else
            std::cout << det << '\n';
    } else if (what == "jones") {
        const LaurentPolynomial p = jones(d);
        j["jones"] = to_json(p);
        if (o.json)
            emit(j);
        else
            std::cout << p.str() << '\n';
    } else if (what == "signature") {
        const int s = signature_gl(d);
        j["signature"] = s;
        if (o.json)
            emit(j);
        else
            std::cout << s << '\n';
    } else {
        const auto cert = qa_certificate(d, o.depth);
        if (o.json) {
            j["depth"] = o.depth;
            j["certificate"] = cert ? to_json(*cert) : ojson(nullptr);
            if (cert)
                j["valid"] = validate_certificate(*cert).empty();
            emit(j);
        } else if (cert) {
            std::cout << "quasi-alternating certificate:\n";
            print_cert(*cert, 1);
        } else {
            std::cout << "no certificate within depth " << o.depth << " (inconclusive)\n";
        }
    }
    return 0;
}

int kh_cmd(const std::string& what, const Options& o)
{
    const KhTable t = load_table(o.kh);
    std::optional<Diagram> d;
    if (!o.pd.empty())
        d = load_diagram(o);

    int sigma = 0;
    if (d) {
        sigma = signature_gl(*d);
        if (t.sigma && *t.sigma != sigma)
            throw Error("signature from the diagram (" + std::to_string(sigma) + ") disagrees with the table (" +
                        std::to_string(*t.sigma) + ")");
    } else if (t.sigma) {
        sigma = *t.sigma;
    } else {
        throw Error("no signature: the table has none and no --pd was given");
    }

    ojson j;
    if (what == "thin") {
        const bool thin = is_hthin(t, sigma);
        const auto inf = hthin_mirror_inference(t, sigma == 0);
        j["knot"] = t.knot;
        j["sigma"] = sigma;
        j["hthin"] = thin;
        j["mirror"] = to_string(inf);
        if (o.json)
            emit(j);
        else
            std::cout << t.knot << ": H-thin " << (thin ? "true" : "false") << " (sigma " << sigma
                      << "); mirror: " << to_string(inf) << '\n';
    } else if (what == "z2") {
        Integer det;
        LaurentPolynomial jp;
        if (d) {
            det = knot_determinant(*d);
            jp = jones(*d);
        } else {
            if (!t.det || !t.jones)
                throw Error("table lacks det or jones; pass --pd");
            det = *t.det;
            jp = *t.jones;
        }
        const Integer bound = reduced_rank_bound(jp);
        const bool thin = is_hthin(t, sigma);
        const auto v = z2_lspace_verdict(det, bound, thin);
        j["knot"] = t.knot;
        j["det"] = det.convert_to<long long>();
        j["rank_bound"] = bound.convert_to<long long>();
        j["hthin"] = thin;
        j["verdict"] = to_string(v);
        if (o.json)
            emit(j);
        else
            std::cout << t.knot << ": det " << det << ", reduced rank " << bound << ", thin "
                      << (thin ? "yes" : "no") << " -> Z/2 L-space " << to_string(v) << '\n';
    } else {
        emit(to_json(mirror_table(t)));
    }
    return 0;
}

int report_cmd(const Options& o)
{
    const ojson r = paper_report(o.fixtures, o.jobs, o.budget);
    if (o.json) {
        std::cout << r.dump(2) << '\n';
        return 0;
    }
    for (const auto& c : r["cases"]) {
        const auto& p = c["plumbing"];
        const auto& b = c["blowdown"];
        const auto& k = c["knot"];
        std::cout << c["case"].get<std::string>() << " (" << k["knot"].get<std::string>() << ", "
                  << c["graph"].get<std::string>() << ")\n"
                  << "  good vectors: " << p["good_count"] << " of " << p["initial_count"]
                  << ", h = " << p["h"] << ", L-space: " << (p["lspace"].get<bool>() ? "true" : "inconclusive")
                  << "\n  d = 0 classes: " << b["d_zero"].size() << ", expected t: " << b["expected_t"];
        if (b.contains("extenders"))
            std::cout << ", extenders: " << b["extenders"].size();
        std::cout << (b["discrepancy"].get<bool>() ? " [discrepancy]" : "") << "\n"
                  << "  det " << k["det"] << ", signature " << k["signature"] << ", H-thin "
                  << k["hthin"] << ", Z/2 L-space " << k["z2_lspace"].get<std::string>() << "\n";
    }
    const auto& qa = r["quasi_alternating"];
    std::cout << qa["knot"].get<std::string>() << ": ";
    if (qa["certificate"].is_null())
        std::cout << "no certificate within depth " << qa["depth"] << "\n";
    else
        std::cout << "quasi-alternating, root dets " << qa["certificate"]["dets"].dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact L-space, d-invariant and quasi-alternating computations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "machine-readable output");
    };
    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "plumbing graph JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--budget", o.budget, "push-step budget per initial vector");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        add_common(sub);
    };

    auto* graph = app.add_subcommand("graph", "plumbing graphs");
    graph->require_subcommand(1);
    auto* g_analyze = graph->add_subcommand("analyze", "form, bad vertices, good vectors");
    auto* g_lspace = graph->add_subcommand("lspace", "L-space verdict");
    auto* g_dinv = graph->add_subcommand("dinv", "correction terms");
    for (auto* s : {g_analyze, g_lspace, g_dinv})
        add_graph(s);

    auto* blow = app.add_subcommand("blowdown", "rational blow-down eligibility");
    add_graph(blow);
    blow->add_option("--ball", o.ball, "enhanced intersection form (JSON 2-D array)")->check(CLI::ExistingFile);

    auto* knot = app.add_subcommand("knot", "knot and link diagrams");
    knot->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> knot_subs;
    for (const char* name : {"det", "jones", "signature", "qa"}) {
        auto* s = knot->add_subcommand(name, std::string(name) + " of a PD diagram");
        s->add_option("--pd", o.pd, "PD code file")->required();
        s->add_flag("--unknot", o.unknot, "treat an empty PD file as the unknot");
        s->add_flag("--mirror", o.use_mirror, "use the mirror diagram");
        add_common(s);
        knot_subs.emplace_back(name, s);
    }
    knot_subs.back().second->add_option("--depth", o.depth, "resolution depth budget");

    auto* kh = app.add_subcommand("kh", "Khovanov table data");
    kh->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> kh_subs;
    for (const char* name : {"thin", "z2", "mirror"}) {
        auto* s = kh->add_subcommand(name, std::string("Khovanov table: ") + name);
        s->add_option("--kh", o.kh, "Khovanov table JSON")->required();
        s->add_option("--pd", o.pd, "diagram supplying signature, det and Jones");
        s->add_flag("--mirror", o.use_mirror, "use the mirror of --pd");
        add_common(s);
        kh_subs.emplace_back(name, s);
    }

    auto* report = app.add_subcommand("report", "end-to-end reports");
    report->require_subcommand(1);
    auto* paper = report->add_subcommand("paper", "all bundled cases");
    paper->add_option("--fixtures", o.fixtures, "fixture directory");
    paper->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    paper->add_option("--budget", o.budget, "push-step budget per initial vector");
    add_common(paper);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (*g_analyze)
            return graph_analyze(o);
        if (*g_lspace)
            return graph_lspace(o);
        if (*g_dinv)
            return graph_dinv(o);
        if (*blow)
            return blowdown_cmd(o);
        for (const auto& [name, s] : knot_subs)
            if (*s)
                return knot_cmd(name, o);
        for (const auto& [name, s] : kh_subs)
            if (*s)
                return kh_cmd(name, o);
        if (*paper)
            return report_cmd(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
