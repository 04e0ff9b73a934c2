#include "plumbline/report.hpp"

namespace plumbline {

std::string default_fixture_dir()
{
#ifdef PLUMBLINE_FIXTURE_DIR
    return PLUMBLINE_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

ojson to_json(const CharVector& k)
{
    ojson a = ojson::array();
    for (long x : k)
        a.push_back(x);
    return a;
}

ojson to_json(const RatVector& v)
{
    ojson a = ojson::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

ojson to_json(const LaurentPolynomial& p)
{
    ojson o = ojson::object();
    const auto& terms = p.doubled_terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        o[LaurentPolynomial::exponent_string(it->first)] = it->second.convert_to<long long>();
    return o;
}

ojson to_json(const QACertificate& c)
{
    ojson o;
    o["kind"] = to_string(c.kind);
    o["crossings"] = c.diagram.size();
    o["det"] = c.det.str();
    if (c.kind == QACertificate::Kind::resolution) {
        o["crossing"] = c.crossing;
        o["dets"] = {c.det.str(), c.det0.str(), c.det1.str()};
        o["children"] = {to_json(*c.child0), to_json(*c.child1)};
    }
    return o;
}

ojson to_json(const std::vector<KhGroup>& groups)
{
    ojson a = ojson::array();
    for (const auto& g : groups) {
        ojson o;
        o["i"] = g.i;
        o["j"] = g.j;
        o["rank"] = g.rank;
        if (!g.torsion.empty())
            o["torsion"] = g.torsion;
        a.push_back(std::move(o));
    }
    return a;
}

ojson to_json(const KhTable& t)
{
    ojson o;
    o["knot"] = t.knot;
    if (t.sigma)
        o["sigma"] = *t.sigma;
    if (t.det)
        o["det"] = t.det->convert_to<long long>();
    if (t.jones)
        o["jones"] = to_json(*t.jones);
    o["groups"] = to_json(t.groups);
    if (t.reduced_groups)
        o["reduced_groups"] = to_json(*t.reduced_groups);
    if (!t.source.empty())
        o["source"] = t.source;
    return o;
}

ojson dinv_json(const WeightedGraph& g, const DInvariants& d, bool lspace)
{
    ojson o;
    o["h"] = d.h.convert_to<long long>();
    o["initial_count"] = initial_vectors(g).size();
    o["good_count"] = d.good.size();
    ojson good = ojson::array();
    for (const auto& k : d.good)
        good.push_back(to_json(k));
    o["good_vectors"] = std::move(good);
    const RatMatrix q_inv = inverse_rational(intersection_form(g));
    ojson classes = ojson::array();
    for (const auto& c : d.classes) {
        ojson e;
        e["rep"] = to_json(c.representative);
        e["square"] = to_string(square(q_inv, c.representative));
        e["d"] = to_string(*c.d_value);
        classes.push_back(std::move(e));
    }
    o["classes"] = std::move(classes);
    o["unrepresented"] = d.unrepresented;
    o["lspace"] = lspace;
    return o;
}

ojson blowdown_json(const BlowdownReport& r)
{
    ojson o;
    o["h"] = r.h.convert_to<long long>();
    o["lspace"] = r.lspace;
    o["negative_definite"] = r.negative_definite;
    o["bad_vertices"] = r.bad_count;
    o["hypotheses_hold"] = r.hypotheses_hold();
    ojson dz = ojson::array();
    for (const auto& k : r.d_zero)
        dz.push_back(to_json(k));
    o["d_zero"] = std::move(dz);
    if (r.kernel) {
        ojson ker = ojson::array();
        for (const auto& v : *r.kernel)
            ker.push_back(to_json(v));
        o["kernel"] = std::move(ker);
    }
    if (r.congruence) {
        ojson c;
        c["coefficients"] = ojson::array();
        for (const auto& x : r.congruence->coefficients)
            c["coefficients"].push_back(x.convert_to<long long>());
        c["modulus"] = r.congruence->modulus.convert_to<long long>();
        c["text"] = to_string(*r.congruence);
        o["congruence"] = std::move(c);
    }
    if (r.extenders) {
        ojson ext = ojson::array();
        for (const auto& k : *r.extenders)
            ext.push_back(to_json(k));
        o["extenders"] = std::move(ext);
    }
    if (r.expected_t)
        o["expected_t"] = r.expected_t->convert_to<long long>();
    else
        o["expected_t"] = nullptr;
    o["discrepancy"] = r.discrepancy;
    return o;
}

const std::vector<PaperCase>& paper_cases()
{
    static const std::vector<PaperCase> cases{
        {"Y1", "w1.json", "a1.json", "8_20"},
        {"Y2", "w2.json", "", "9_46"},
        {"Y3", "w3.json", "a3.json", "10_137"},
        {"Y4", "w4.json", "", "10_140"},
    };
    return cases;
}

namespace {

ojson knot_block(const std::string& dir, const std::string& knot)
{
    const Diagram d = load_pd(dir + "/" + knot + ".pd");
    const KhTable table = load_table(dir + "/" + knot + ".kh.json");
    const LaurentPolynomial j = jones(d);
    const Integer det = knot_determinant(d);
    const int sigma = signature_gl(d);
    if (table.sigma && *table.sigma != sigma)
        throw Error(knot + ": signature " + std::to_string(sigma) + " disagrees with table value " +
                    std::to_string(*table.sigma));
    const bool thin = is_hthin(table, sigma);
    const Integer bound = reduced_rank_bound(j);

    ojson o;
    o["knot"] = knot;
    o["crossings"] = d.size();
    o["det"] = det.convert_to<long long>();
    o["det_from_jones"] = j.abs_at_minus_one().convert_to<long long>();
    o["jones"] = j.str();
    o["signature"] = sigma;
    o["alternating_diagram"] = is_alternating_diagram(d);
    o["hthin"] = thin;
    o["mirror_hthin"] = to_string(hthin_mirror_inference(table, sigma == 0));
    o["reduced_rank_bound"] = bound.convert_to<long long>();
    o["z2_lspace"] = to_string(z2_lspace_verdict(det, bound, thin));
    return o;
}

} // namespace

ojson paper_report(const std::string& dir, unsigned jobs, std::uint64_t budget)
{
    ojson report;
    report["schema"] = schema_version;
    ojson cases = ojson::array();
    for (const auto& pc : paper_cases()) {
        const WeightedGraph g = load_graph(dir + "/" + pc.graph);
        std::optional<EnhancedForm> ball;
        if (!pc.ball.empty())
            ball = load_enhanced_form(dir + "/" + pc.ball, g);
        const DInvariants dinv = d_invariants(g, budget, jobs);
        const BlowdownReport bd = blowdown_report(g, ball, budget, jobs);

        ojson c;
        c["case"] = pc.name;
        c["graph"] = pc.graph;
        if (!pc.ball.empty())
            c["ball"] = pc.ball;
        c["plumbing"] = dinv_json(g, dinv, bd.lspace);
        c["blowdown"] = blowdown_json(bd);
        c["knot"] = knot_block(dir, pc.knot);
        cases.push_back(std::move(c));
    }
    report["cases"] = std::move(cases);

    // Quasi-alternating certificate for the mirror of 8_20.
    const Diagram m = mirror(load_pd(dir + "/8_20.pd"));
    ojson qa;
    qa["knot"] = "mirror 8_20";
    qa["depth"] = 3;
    if (auto cert = qa_certificate(m, 3)) {
        qa["certificate"] = to_json(*cert);
        qa["valid"] = validate_certificate(*cert).empty();
    } else {
        qa["certificate"] = nullptr;
    }
    report["quasi_alternating"] = std::move(qa);
    return report;
}

} // namespace plumbline
