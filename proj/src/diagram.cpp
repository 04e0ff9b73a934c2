#include "plumbline/diagram.hpp"
#include "plumbline/plumbing.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace plumbline {

namespace {

std::size_t idx(Slot s)
{
    return 4 * s.first + static_cast<std::size_t>(s.second);
}

std::vector<Slot> build_partners(const std::vector<Crossing>& xs)
{
    std::map<int, std::vector<Slot>> where;
    for (std::size_t c = 0; c < xs.size(); ++c)
        for (int i = 0; i < 4; ++i)
            where[xs[c].arcs[i]].push_back({c, i});
    std::vector<Slot> partner(4 * xs.size());
    for (const auto& [label, slots] : where) {
        if (slots.size() != 2)
            throw DiagramError("arc " + std::to_string(label) + " occurs " + std::to_string(slots.size()) +
                               " times, expected 2");
        partner[idx(slots[0])] = slots[1];
        partner[idx(slots[1])] = slots[0];
    }
    return partner;
}

// Relabels arcs 1..2n along each component and rotates every tuple so that
// slot 0 is the incoming under-strand of the chosen orientation.
std::vector<Crossing> normalize(const std::vector<Crossing>& xs, const std::vector<Slot>& partner)
{
    const std::size_t n = xs.size();
    std::vector<char> visited(4 * n, 0);
    std::vector<int> label(4 * n, 0);
    std::vector<std::array<int, 2>> entry(n, {-1, -1}); // per parity
    int next = 0;

    auto walk = [&](Slot start) {
        Slot s = start;
        while (!visited[idx(s)]) {
            const Slot out{s.first, (s.second + 2) % 4};
            visited[idx(s)] = visited[idx(out)] = 1;
            entry[s.first][s.second % 2] = s.second;
            ++next;
            label[idx(out)] = next;
            const Slot in = partner[idx(out)];
            label[idx(in)] = next;
            s = in;
        }
    };
    // Prefer the existing orientation; strands whose every slot was outgoing
    // (possible after a smoothing) are picked up in the second pass.
    for (std::size_t c = 0; c < n; ++c)
        for (int i = 0; i < 4; ++i)
            if ((i == 0 || i == xs[c].over_in) && !visited[4 * c + i])
                walk({c, i});
    for (std::size_t c = 0; c < n; ++c)
        for (int i = 0; i < 4; ++i)
            if (!visited[4 * c + i])
                walk({c, i});

    std::vector<Crossing> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::array<int, 4> a{label[4 * c], label[4 * c + 1], label[4 * c + 2], label[4 * c + 3]};
        int over = entry[c][1];
        if (entry[c][0] == 2) {
            std::rotate(a.begin(), a.begin() + 2, a.end());
            over = (over + 2) % 4;
        }
        out[c] = {a, over};
    }
    return out;
}

struct Faces {
    std::vector<std::vector<Slot>> regions;
    std::vector<std::size_t> corner_region; // 4*crossing + corner
};

Faces faces_of(const Diagram& d)
{
    Faces f;
    const std::size_t n = d.size();
    f.corner_region.assign(4 * n, SIZE_MAX);
    for (std::size_t c = 0; c < n; ++c)
        for (int i = 0; i < 4; ++i) {
            if (f.corner_region[4 * c + i] != SIZE_MAX)
                continue;
            const std::size_t r = f.regions.size();
            f.regions.emplace_back();
            Slot s{c, i};
            while (f.corner_region[idx(s)] == SIZE_MAX) {
                f.corner_region[idx(s)] = r;
                f.regions[r].push_back(s);
                s = d.partner({s.first, (s.second + 1) % 4});
            }
        }
    return f;
}

// Traversal of every component: the list of entry slots, in order.
std::vector<std::vector<Slot>> component_walks(const Diagram& d)
{
    std::vector<std::vector<Slot>> walks;
    std::vector<char> seen(4 * d.size(), 0);
    for (std::size_t c = 0; c < d.size(); ++c)
        for (int i = 0; i < 4; ++i) {
            if (seen[4 * c + i])
                continue;
            walks.emplace_back();
            Slot s{c, i};
            while (!seen[idx(s)]) {
                const Slot out{s.first, (s.second + 2) % 4};
                seen[idx(s)] = seen[idx(out)] = 1;
                walks.back().push_back(s);
                s = d.partner(out);
            }
        }
    return walks;
}

// Removes the given crossings, joining slot pairs of each removed crossing.
Diagram splice(const Diagram& d, const std::set<std::size_t>& remove,
               const std::array<std::pair<int, int>, 2>& pairs)
{
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x)
            return x;
        return it->second = find(it->second);
    };
    std::set<int> all;
    for (std::size_t c = 0; c < d.size(); ++c) {
        const auto& x = d.crossings()[c];
        all.insert(x.arcs.begin(), x.arcs.end());
        if (!remove.count(c))
            continue;
        for (auto [p, q] : pairs) {
            const int a = find(x.arcs[p]), b = find(x.arcs[q]);
            if (a != b)
                parent[a] = b;
        }
    }
    std::vector<Crossing> keep;
    std::set<int> used;
    for (std::size_t c = 0; c < d.size(); ++c) {
        if (remove.count(c))
            continue;
        Crossing x = d.crossings()[c];
        for (auto& l : x.arcs) {
            l = find(l);
            used.insert(l);
        }
        keep.push_back(x);
    }
    std::set<int> closed;
    for (int l : all)
        if (!used.count(find(l)))
            closed.insert(find(l));
    return Diagram(std::move(keep), d.free_loops() + static_cast<int>(closed.size()));
}

constexpr std::array<std::pair<int, int>, 2> straight{{{0, 2}, {1, 3}}};

std::vector<Crossing> infer_orientation(std::vector<std::array<int, 4>> tuples)
{
    std::vector<Crossing> xs;
    for (const auto& t : tuples)
        xs.push_back({t, 0});
    const auto partner = build_partners(xs);
    const std::size_t n = xs.size();

    // Walk forward along under-strands; every over passage met on the way
    // reveals that crossing's over direction.
    std::vector<char> done(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
        if (done[start])
            continue;
        done[start] = 1;
        Slot out{start, 2};
        for (std::size_t steps = 0; steps <= 4 * n; ++steps) {
            const Slot in = partner[idx(out)];
            if (in.second == 2)
                throw DiagramError("inconsistent PD code: under-strand enters crossing " +
                                   std::to_string(in.first + 1) + " at slot 2");
            if (in.second == 0) {
                if (done[in.first])
                    break;
                done[in.first] = 1;
                out = {in.first, 2};
            } else {
                auto& x = xs[in.first];
                if (x.over_in != 0 && x.over_in != in.second)
                    throw DiagramError("inconsistent over-strand direction at crossing " +
                                       std::to_string(in.first + 1));
                x.over_in = in.second;
                out = {in.first, (in.second + 2) % 4};
            }
        }
    }
    // Components that only ever pass over: fall back to label order.
    for (auto& x : xs)
        if (x.over_in == 0) {
            const int b = x.arcs[1], dd = x.arcs[3];
            x.over_in = (b == dd + 1 || dd - b > 1) ? 3 : 1;
        }
    return xs;
}

} // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops) : free_loops_(free_loops)
{
    if (free_loops < 0)
        throw DiagramError("negative free loop count");
    for (const auto& x : crossings)
        if (x.over_in != 1 && x.over_in != 3)
            throw DiagramError("over-strand must enter at slot 1 or 3");
    if (crossings.empty() && free_loops == 0)
        throw DiagramError("empty diagram");
    auto partner = build_partners(crossings);
    crossings_ = normalize(crossings, partner);
    partner_ = build_partners(crossings_);
}

Slot Diagram::partner(Slot s) const
{
    return partner_.at(idx(s));
}

int Diagram::components() const
{
    return static_cast<int>(component_walks(*this).size()) + free_loops_;
}

int Diagram::writhe() const
{
    int w = 0;
    for (const auto& x : crossings_)
        w += x.sign();
    return w;
}

std::string Diagram::key() const
{
    std::string k;
    for (const auto& x : crossings_) {
        for (int a : x.arcs)
            k += std::to_string(a) + ',';
        k += std::to_string(x.over_in) + ';';
    }
    return k + '|' + std::to_string(free_loops_);
}

Diagram parse_pd(const std::string& text, bool empty_is_unknot)
{
    std::string body;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            body += line.substr(0, line.find('#')) + '\n';
    }

    std::vector<std::array<int, 4>> tuples;
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        if (empty_is_unknot)
            return Diagram::unknot();
        throw DiagramError("empty PD code");
    }

    if (body[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw DiagramError(std::string("PD list: ") + e.what());
        }
        for (const auto& t : j) {
            if (!t.is_array() || t.size() != 4)
                throw DiagramError("PD list: every crossing needs four labels");
            std::array<int, 4> a{};
            for (int i = 0; i < 4; ++i) {
                if (!t[i].is_number_integer())
                    throw DiagramError("PD list: non-integer label");
                a[i] = t[i].get<int>();
            }
            tuples.push_back(a);
        }
    } else {
        static const std::regex item(R"(X\s*[\(\[]([^\)\]]*)[\)\]])");
        std::string rest;
        auto pos = body.cbegin();
        for (std::sregex_iterator it(body.begin(), body.end(), item), end; it != end; ++it) {
            rest.append(pos, (*it)[0].first);
            pos = (*it)[0].second;
            std::vector<int> labels;
            std::istringstream fields((*it)[1].str());
            std::string field;
            while (std::getline(fields, field, ',')) {
                std::size_t used = 0;
                try {
                    labels.push_back(std::stoi(field, &used));
                } catch (const std::exception&) {
                    throw DiagramError("malformed crossing '" + (*it)[0].str() + "'");
                }
                if (field.find_first_not_of(" \t", used) != std::string::npos)
                    throw DiagramError("malformed crossing '" + (*it)[0].str() + "'");
            }
            if (labels.size() != 4)
                throw DiagramError("malformed crossing '" + (*it)[0].str() + "': expected four labels");
            tuples.push_back({labels[0], labels[1], labels[2], labels[3]});
        }
        rest.append(pos, body.cend());
        // Allow an enclosing PD[...] and separators, nothing else.
        const auto pd = rest.find("PD");
        if (pd != std::string::npos)
            rest.erase(pd, 2);
        if (rest.find_first_not_of(" \t\r\n,[]") != std::string::npos)
            throw DiagramError("unrecognized text in PD code");
        if (tuples.empty())
            throw DiagramError("no crossings found in PD code");
    }
    return Diagram(infer_orientation(std::move(tuples)), 0);
}

Diagram load_pd(const std::string& path, bool empty_is_unknot)
{
    return parse_pd(read_file(path), empty_is_unknot);
}

std::string to_pd(const Diagram& d)
{
    std::string out;
    for (const auto& x : d.crossings())
        out += "X(" + std::to_string(x.arcs[0]) + "," + std::to_string(x.arcs[1]) + "," +
               std::to_string(x.arcs[2]) + "," + std::to_string(x.arcs[3]) + ")\n";
    return out;
}

Diagram mirror(const Diagram& d)
{
    std::vector<Crossing> xs;
    for (const auto& x : d.crossings()) {
        Crossing m;
        for (int k = 0; k < 4; ++k)
            m.arcs[k] = x.arcs[(x.over_in + k) % 4];
        m.over_in = x.over_in == 1 ? 3 : 1;
        xs.push_back(m);
    }
    return Diagram(std::move(xs), d.free_loops());
}

Diagram resolve(const Diagram& d, std::size_t crossing, int kind)
{
    if (crossing >= d.size())
        throw DiagramError("crossing index " + std::to_string(crossing) + " out of range");
    if (kind != 0 && kind != 1)
        throw DiagramError("resolution kind must be 0 or 1");
    static constexpr std::array<std::pair<int, int>, 2> kind0{{{0, 3}, {1, 2}}};
    static constexpr std::array<std::pair<int, int>, 2> kind1{{{0, 1}, {2, 3}}};
    return splice(d, {crossing}, kind == 0 ? kind0 : kind1);
}

bool is_alternating_diagram(const Diagram& d)
{
    for (const auto& walk : component_walks(d))
        for (std::size_t k = 0; k < walk.size(); ++k)
            if (walk[k].second % 2 == walk[(k + 1) % walk.size()].second % 2)
                return false;
    return true;
}

bool is_split_diagram(const Diagram& d)
{
    const auto walks = component_walks(d);
    if (walks.size() + d.free_loops() <= 1)
        return false;
    if (d.free_loops() > 0)
        return true;
    std::vector<std::size_t> parent(walks.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::optional<std::size_t>> owner(d.size());
    for (std::size_t w = 0; w < walks.size(); ++w)
        for (auto [c, slot] : walks[w]) {
            if (owner[c])
                parent[find(*owner[c])] = find(w);
            else
                owner[c] = w;
        }
    for (std::size_t w = 1; w < walks.size(); ++w)
        if (find(w) != find(0))
            return true;
    return false;
}

bool has_nugatory_crossing(const Diagram& d)
{
    const Faces f = faces_of(d);
    for (std::size_t c = 0; c < d.size(); ++c)
        if (f.corner_region[4 * c] == f.corner_region[4 * c + 2] ||
            f.corner_region[4 * c + 1] == f.corner_region[4 * c + 3])
            return true;
    return false;
}

namespace {

std::optional<Diagram> reidemeister_one(const Diagram& d)
{
    for (std::size_t c = 0; c < d.size(); ++c) {
        const auto& a = d.crossings()[c].arcs;
        for (int i = 0; i < 4; ++i)
            if (a[i] == a[(i + 1) % 4])
                return splice(d, {c}, straight);
    }
    return std::nullopt;
}

std::optional<Diagram> reidemeister_two(const Diagram& d)
{
    for (const auto& face : faces_of(d).regions) {
        if (face.size() != 2)
            continue;
        const auto [c1, i1] = face[0];
        const auto [c2, i2] = face[1];
        if (c1 == c2)
            continue;
        // The bigon edge leaving c1 at slot i1+1 arrives at c2 slot i2; it
        // must be over (odd) or under (even) at both ends.
        if ((i1 + 1) % 2 == i2 % 2)
            return splice(d, {c1, c2}, straight);
    }
    return std::nullopt;
}

} // namespace

Diagram simplify(const Diagram& d, std::uint64_t move_budget)
{
    Diagram cur = d;
    for (std::uint64_t moves = 0; moves < move_budget; ++moves) {
        if (auto r = reidemeister_one(cur)) {
            cur = std::move(*r);
            continue;
        }
        if (auto r = reidemeister_two(cur)) {
            cur = std::move(*r);
            continue;
        }
        break;
    }
    return cur;
}

std::size_t RegionColoring::region_of(Slot corner) const
{
    return corner_region_.at(idx(corner));
}

std::size_t RegionColoring::black_count() const
{
    return static_cast<std::size_t>(std::count(color.begin(), color.end(), 1));
}

RegionColoring checkerboard(const Diagram& d, bool invert)
{
    RegionColoring rc;
    if (d.size() == 0) {
        if (d.free_loops() != 1)
            throw DiagramError("checkerboard: disconnected diagram");
        rc.regions = {{}, {}};
        rc.unbounded = 0;
        rc.color = invert ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
        return rc;
    }
    if (is_split_diagram(d))
        throw DiagramError("checkerboard: disconnected diagram");

    Faces f = faces_of(d);
    rc.regions = std::move(f.regions);
    rc.corner_region_ = std::move(f.corner_region);
    for (std::size_t r = 1; r < rc.regions.size(); ++r)
        if (rc.regions[r].size() > rc.regions[rc.unbounded].size())
            rc.unbounded = r;

    // The arc at slot i separates corners i-1 and i.
    std::vector<std::vector<std::size_t>> adj(rc.regions.size());
    for (std::size_t c = 0; c < d.size(); ++c)
        for (int i = 0; i < 4; ++i) {
            const auto a = rc.corner_region_[4 * c + (i + 3) % 4];
            const auto b = rc.corner_region_[4 * c + i];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    rc.color.assign(rc.regions.size(), -1);
    rc.color[rc.unbounded] = invert ? 1 : 0;
    std::vector<std::size_t> stack{rc.unbounded};
    while (!stack.empty()) {
        const auto r = stack.back();
        stack.pop_back();
        for (auto s : adj[r]) {
            if (rc.color[s] == -1) {
                rc.color[s] = 1 - rc.color[r];
                stack.push_back(s);
            } else if (rc.color[s] == rc.color[r]) {
                throw DiagramError("checkerboard: faces do not two-color (non-planar PD code?)");
            }
        }
    }
    if (std::find(rc.color.begin(), rc.color.end(), -1) != rc.color.end())
        throw DiagramError("checkerboard: disconnected diagram");

    for (std::size_t c = 0; c < d.size(); ++c) {
        RegionColoring::CrossingData cd;
        const bool even_black = rc.color[rc.corner_region_[4 * c]] == 1;
        const int first = even_black ? 0 : 1;
        cd.black_a = rc.corner_region_[4 * c + first];
        cd.black_b = rc.corner_region_[4 * c + first + 2];
        cd.eta = even_black ? 1 : -1;
        // corner between the two incoming strands
        const int in_in = d.crossings()[c].over_in == 1 ? 0 : 3;
        const bool in_in_black = (in_in % 2) == first;
        cd.type_two = !in_in_black;
        rc.crossings.push_back(cd);
    }
    return rc;
}

} // namespace plumbline
