#include "plumbline/charvec.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace plumbline {

namespace {

enum class State { good, dead, open };

State state_of(const WeightedGraph& g, const CharVector& k)
{
    // Dead check first: one coordinate past -m kills the branch even when
    // another vertex could still be pushed.
    for (std::size_t v = 0; v < g.size(); ++v)
        if (k[v] > -g.weight(v))
            return State::dead;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (k[v] < g.weight(v) || k[v] > -g.weight(v) - 2)
            return State::open;
    return State::good;
}

void check_vector(const WeightedGraph& g, const CharVector& k)
{
    if (k.size() != g.size())
        throw DimensionError("characteristic vector has wrong length");
    if (!is_characteristic(g, k))
        throw Error("vector is not characteristic");
}

} // namespace

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::good: return "good";
    case Verdict::dead: return "dead";
    case Verdict::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

std::vector<CharVector> initial_vectors(const WeightedGraph& g)
{
    std::vector<CharVector> out;
    if (g.size() == 0)
        return out;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.weight(v) + 2 > -g.weight(v))
            return out; // empty range
    CharVector k(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        k[v] = g.weight(v) + 2;
    for (;;) {
        out.push_back(k);
        std::size_t v = g.size();
        while (v > 0) {
            --v;
            if (k[v] + 2 <= -g.weight(v)) {
                k[v] += 2;
                break;
            }
            k[v] = g.weight(v) + 2;
            if (v == 0)
                return out;
        }
    }
}

bool is_characteristic(const WeightedGraph& g, const CharVector& k)
{
    if (k.size() != g.size())
        return false;
    for (std::size_t v = 0; v < g.size(); ++v)
        if ((k[v] - g.weight(v)) % 2 != 0)
            return false;
    return true;
}

CharVector push(const WeightedGraph& g, const CharVector& k, std::size_t v)
{
    if (v >= g.size() || k.size() != g.size())
        throw DimensionError("push: bad vertex or vector length");
    if (k[v] != -g.weight(v))
        throw Error("push: <K, " + g.ids()[v] + "> = " + std::to_string(k[v]) + ", expected " +
                    std::to_string(-g.weight(v)));
    CharVector out = k;
    out[v] += 2 * g.weight(v);
    for (auto [a, b] : g.edges()) {
        if (a == v)
            out[b] += 2;
        else if (b == v)
            out[a] += 2;
    }
    return out;
}

PathOutcome classify_path(const WeightedGraph& g, const CharVector& k0, std::uint64_t budget,
                          bool want_trace)
{
    check_vector(g, k0);
    PathOutcome result;
    // parent links for trace reconstruction: vector -> (previous, pushed vertex)
    std::map<CharVector, std::pair<CharVector, std::size_t>> parent;
    std::set<CharVector> seen;
    std::vector<CharVector> stack{k0};

    while (!stack.empty()) {
        CharVector k = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(k).second)
            continue;
        if (++result.visits > budget) {
            result.verdict = Verdict::budget_exceeded;
            return result;
        }
        const State s = state_of(g, k);
        if (s == State::dead)
            continue;
        if (s == State::good) {
            result.verdict = Verdict::good;
            if (want_trace) {
                std::vector<std::size_t> trace;
                for (CharVector cur = k; cur != k0;) {
                    const auto& p = parent.at(cur);
                    trace.push_back(p.second);
                    cur = p.first;
                }
                std::reverse(trace.begin(), trace.end());
                result.trace = std::move(trace);
            }
            result.terminal = std::move(k);
            return result;
        }
        // Push in descending order so the lowest vertex is explored first.
        for (std::size_t v = g.size(); v-- > 0;) {
            if (k[v] != -g.weight(v))
                continue;
            CharVector next = push(g, k, v);
            if (seen.count(next))
                continue;
            if (want_trace)
                parent.try_emplace(next, k, v);
            stack.push_back(std::move(next));
        }
    }
    result.verdict = Verdict::dead;
    return result;
}

std::set<Verdict> all_endpoint_verdicts(const WeightedGraph& g, const CharVector& k0,
                                        std::uint64_t budget)
{
    check_vector(g, k0);
    std::set<Verdict> verdicts;
    std::set<CharVector> seen;
    std::vector<CharVector> stack{k0};
    std::uint64_t visits = 0;
    while (!stack.empty()) {
        CharVector k = std::move(stack.back());
        stack.pop_back();
        if (!seen.insert(k).second)
            continue;
        if (++visits > budget) {
            verdicts.insert(Verdict::budget_exceeded);
            break;
        }
        const State s = state_of(g, k);
        if (s != State::open) {
            verdicts.insert(s == State::good ? Verdict::good : Verdict::dead);
            continue;
        }
        bool moved = false;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (k[v] == -g.weight(v)) {
                stack.push_back(push(g, k, v));
                moved = true;
            }
        if (!moved) // stuck below the box; cannot reach the terminal box
            verdicts.insert(Verdict::dead);
    }
    return verdicts;
}

std::vector<CharVector> good_vectors(const WeightedGraph& g, std::uint64_t budget, unsigned jobs)
{
    const auto initial = initial_vectors(g);
    std::vector<Verdict> verdicts(initial.size(), Verdict::dead);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(initial.size())));

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](unsigned worker) {
        try {
            for (std::size_t i = worker; i < initial.size(); i += jobs)
                verdicts[i] = classify_path(g, initial[i], budget).verdict;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<CharVector> good;
    for (std::size_t i = 0; i < initial.size(); ++i) {
        if (verdicts[i] == Verdict::budget_exceeded)
            throw BudgetExceeded("step budget exhausted while classifying an initial vector");
        if (verdicts[i] == Verdict::good)
            good.push_back(initial[i]);
    }
    return good;
}

Rational square(const RatMatrix& q_inverse, const CharVector& k)
{
    IntVector a(k.begin(), k.end());
    return quadratic_form(q_inverse, a);
}

Rational square(const WeightedGraph& g, const CharVector& k)
{
    return square(inverse_rational(intersection_form(g)), k);
}

bool same_spinc(const IntMatrix& q, const CharVector& a, const CharVector& b)
{
    if (a.size() != b.size() || a.size() != q.rows())
        throw DimensionError("same_spinc: length mismatch");
    IntVector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const long d = b[i] - a[i];
        if (d % 2 != 0)
            throw Error("same_spinc: difference of characteristic vectors is odd");
        diff[i] = d / 2;
    }
    return solve_integral(q, diff).has_value();
}

std::vector<SpincClass> spinc_classes(const WeightedGraph& g, const std::vector<CharVector>& vectors)
{
    const IntMatrix q = intersection_form(g);
    std::vector<SpincClass> classes;
    for (const auto& k : vectors) {
        check_vector(g, k);
        auto it = std::find_if(classes.begin(), classes.end(), [&](const SpincClass& c) {
            return same_spinc(q, c.representative, k);
        });
        if (it == classes.end())
            classes.push_back({k, {k}, std::nullopt});
        else
            it->members.push_back(k);
    }
    return classes;
}

DInvariants d_invariants(const WeightedGraph& g, std::uint64_t budget, unsigned jobs)
{
    const IntMatrix q = intersection_form(g);
    if (!is_negative_definite(q))
        throw UnsupportedGraph("intersection form is not negative definite");
    if (bad_vertices(g).size() > 2)
        throw UnsupportedGraph("more than two bad vertices");

    DInvariants out;
    out.h = h1_order(g);
    out.good = good_vectors(g, budget, jobs);
    out.classes = spinc_classes(g, out.good);
    const RatMatrix q_inv = inverse_rational(q);
    const Rational n(static_cast<long>(g.size()));
    for (auto& c : out.classes) {
        for (const auto& k : c.members) {
            const Rational d = (square(q_inv, k) + n) / 4;
            if (!c.d_value || d > *c.d_value)
                c.d_value = d;
        }
    }
    out.unrepresented = static_cast<std::size_t>(out.h - Integer(out.classes.size()));
    return out;
}

LSpaceVerdict lspace_verdict(const WeightedGraph& g, std::uint64_t budget, unsigned jobs)
{
    LSpaceVerdict out;
    out.h = h1_order(g);
    out.bad_count = bad_vertices(g).size();
    out.good_count = good_vectors(g, budget, jobs).size();
    out.lspace = out.bad_count <= 1 && Integer(out.good_count) == out.h;
    return out;
}

} // namespace plumbline
