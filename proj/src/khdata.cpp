#include "plumbline/khdata.hpp"
#include "plumbline/plumbing.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace plumbline {

namespace {

std::vector<KhGroup> parse_groups(const nlohmann::json& arr, const std::string& what)
{
    if (!arr.is_array())
        throw Error(what + ": expected an array");
    std::vector<KhGroup> out;
    std::set<std::pair<int, int>> seen;
    for (const auto& g : arr) {
        if (!g.is_object() || !g.contains("i") || !g.contains("j"))
            throw Error(what + ": group needs \"i\" and \"j\"");
        KhGroup k;
        k.i = g.at("i").get<int>();
        k.j = g.at("j").get<int>();
        k.rank = g.value("rank", 0);
        if (k.rank < 0)
            throw Error(what + ": negative rank at (" + std::to_string(k.i) + "," + std::to_string(k.j) + ")");
        if (g.contains("torsion"))
            k.torsion = g.at("torsion").get<std::vector<int>>();
        for (int t : k.torsion)
            if (t < 2)
                throw Error(what + ": torsion order below 2");
        std::sort(k.torsion.begin(), k.torsion.end());
        if (!seen.insert({k.i, k.j}).second)
            throw Error(what + ": duplicate entry at (" + std::to_string(k.i) + "," + std::to_string(k.j) + ")");
        out.push_back(std::move(k));
    }
    std::sort(out.begin(), out.end(), [](const KhGroup& a, const KhGroup& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return out;
}

void sort_groups(std::vector<KhGroup>& gs)
{
    std::sort(gs.begin(), gs.end(),
              [](const KhGroup& a, const KhGroup& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });
}

} // namespace

KhTable ingest_table(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("Kh table: ") + e.what());
    }
    if (!j.is_object())
        throw Error("Kh table: expected an object");
    KhTable t;
    try {
        t.knot = j.value("knot", "");
        if (j.contains("sigma"))
            t.sigma = j.at("sigma").get<int>();
        if (j.contains("det"))
            t.det = Integer(j.at("det").get<long long>());
        if (j.contains("jones")) {
            std::map<int, Integer> terms;
            for (const auto& [exp, coeff] : j.at("jones").items())
                terms[LaurentPolynomial::parse_exponent(exp)] += coeff.get<long long>();
            t.jones = LaurentPolynomial::from_doubled(terms);
        }
        t.groups = parse_groups(j.value("groups", nlohmann::json::array()), "Kh table groups");
        if (j.contains("reduced_groups"))
            t.reduced_groups = parse_groups(j.at("reduced_groups"), "Kh table reduced_groups");
        t.source = j.value("source", "");
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("Kh table: ") + e.what());
    }
    return t;
}

KhTable load_table(const std::string& path)
{
    return ingest_table(read_file(path));
}

bool is_hthin(const std::vector<KhGroup>& groups, int sigma)
{
    return std::all_of(groups.begin(), groups.end(), [&](const KhGroup& g) {
        const int diag = g.j - 2 * g.i;
        return g.trivial() || diag == sigma - 1 || diag == sigma + 1;
    });
}

bool is_hthin(const KhTable& t, int sigma)
{
    return is_hthin(t.groups, sigma);
}

std::vector<KhGroup> mirror_groups(const std::vector<KhGroup>& groups)
{
    std::map<std::pair<int, int>, KhGroup> out;
    for (const auto& g : groups) {
        if (g.rank > 0) {
            auto& m = out[{-g.i, -g.j}];
            m.i = -g.i;
            m.j = -g.j;
            m.rank += g.rank;
        }
        if (!g.torsion.empty()) {
            auto& m = out[{1 - g.i, -g.j}];
            m.i = 1 - g.i;
            m.j = -g.j;
            m.torsion.insert(m.torsion.end(), g.torsion.begin(), g.torsion.end());
            std::sort(m.torsion.begin(), m.torsion.end());
        }
    }
    std::vector<KhGroup> v;
    for (auto& [key, g] : out)
        v.push_back(std::move(g));
    sort_groups(v);
    return v;
}

KhTable mirror_table(const KhTable& t)
{
    KhTable m = t;
    m.knot = t.knot.empty() ? std::string() : "mirror " + t.knot;
    if (t.knot.rfind("mirror ", 0) == 0)
        m.knot = t.knot.substr(7);
    if (t.sigma)
        m.sigma = -*t.sigma;
    if (t.jones)
        m.jones = t.jones->inverted();
    m.groups = mirror_groups(t.groups);
    if (t.reduced_groups)
        m.reduced_groups = mirror_groups(*t.reduced_groups);
    return m;
}

const char* to_string(MirrorInference m)
{
    return m == MirrorInference::mirror_hthin ? "mirror H-thin" : "inconclusive";
}

MirrorInference hthin_mirror_inference(const KhTable& t, bool slice)
{
    if (!slice || !is_hthin(t, 0))
        return MirrorInference::inconclusive;
    for (const auto& g : t.groups)
        if (!g.torsion.empty() && g.j - 2 * g.i != -1)
            return MirrorInference::inconclusive;
    return MirrorInference::mirror_hthin;
}

Integer reduced_rank_bound(const LaurentPolynomial& j)
{
    return j.l1_norm();
}

const char* to_string(Z2Verdict v)
{
    return v == Z2Verdict::confirmed ? "confirmed" : "inconclusive";
}

Z2Verdict z2_lspace_verdict(const Integer& det, const Integer& rank_bound, bool hthin)
{
    if (det < 1)
        throw Error("z2_lspace_verdict: determinant must be positive");
    if (!hthin)
        return Z2Verdict::inconclusive;
    if (rank_bound < det)
        throw Error("inconsistent data: reduced rank " + rank_bound.str() + " below determinant " + det.str());
    return rank_bound == det ? Z2Verdict::confirmed : Z2Verdict::inconclusive;
}

LaurentPolynomial reduced_euler_characteristic(const std::vector<KhGroup>& reduced)
{
    std::map<int, Integer> doubled;
    for (const auto& g : reduced)
        doubled[g.j] += (g.i % 2 == 0) ? g.rank : -g.rank;
    return LaurentPolynomial::from_doubled(doubled);
}

} // namespace plumbline
