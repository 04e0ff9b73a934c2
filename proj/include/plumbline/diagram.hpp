#pragma once

// Planar-diagram (PD) codes for knots and links.
//
// Each crossing lists four arc labels counterclockwise, starting with the
// incoming under-strand at slot 0; the under-strand leaves at slot 2. The
// over-strand runs either 1 -> 3 or 3 -> 1, recorded as over_in. Diagrams
// are kept normalized: arcs are relabelled 1..2n along an orientation of
// each component, so equal diagrams compare equal.

#include "plumbline/linalg.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plumbline {

class DiagramError : public Error {
public:
    using Error::Error;
};

struct Crossing {
    std::array<int, 4> arcs{};
    int over_in = 1; ///< slot where the over-strand enters: 1 or 3

    /// +1 for a right-handed crossing (over-strand 3 -> 1).
    int sign() const { return over_in == 3 ? 1 : -1; }
    friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// (crossing index, slot)
using Slot = std::pair<std::size_t, int>;

class Diagram {
public:
    Diagram() = default;
    /// Normalizes; throws DiagramError on inconsistent input.
    Diagram(std::vector<Crossing> crossings, int free_loops);

    static Diagram unknot() { return Diagram({}, 1); }

    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    std::size_t size() const noexcept { return crossings_.size(); }
    int free_loops() const noexcept { return free_loops_; }
    /// Link components, crossingless loops included.
    int components() const;
    int writhe() const;

    /// The other end of the arc at s.
    Slot partner(Slot s) const;

    /// Canonical text form, also used as a memo key.
    std::string key() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<Slot> partner_; // indexed by 4*crossing + slot
};

/// Accepts `X(a,b,c,d)` / `X[a,b,c,d]` items (optionally wrapped in PD[...])
/// or a JSON list of 4-tuples; `#` starts a comment. The over-strand
/// direction is inferred by walking each component along its under-strands.
/// Empty input is an error unless empty_is_unknot is set.
Diagram parse_pd(const std::string& text, bool empty_is_unknot = false);
Diagram load_pd(const std::string& path, bool empty_is_unknot = false);

/// Writes one `X(a,b,c,d)` per line.
std::string to_pd(const Diagram& d);

/// Switches every crossing.
Diagram mirror(const Diagram& d);

/// Smoothing at one crossing. Kind 0 joins slots (0,3),(1,2); kind 1 joins
/// slots (0,1),(2,3), the A-smoothing of the Kauffman bracket.
Diagram resolve(const Diagram& d, std::size_t crossing, int kind);

/// Each component alternates over/under along its length.
bool is_alternating_diagram(const Diagram& d);

/// More than one component and the components do not all hang together
/// through crossings (any crossingless loop counts as split off).
bool is_split_diagram(const Diagram& d);

/// Some face meets a crossing at two opposite corners.
bool has_nugatory_crossing(const Diagram& d);

inline constexpr std::uint64_t default_move_budget = 10'000;

/// Greedy R1 and R2 removal until none applies or the budget is spent.
Diagram simplify(const Diagram& d, std::uint64_t move_budget = default_move_budget);

/// Faces are orbits of corners; corner (X, i) sits between slots i and i+1.
struct RegionColoring {
    std::vector<std::vector<Slot>> regions;
    std::vector<int> color; ///< 1 = black, 0 = white
    std::size_t unbounded = 0;

    struct CrossingData {
        std::size_t black_a = 0, black_b = 0; ///< regions at the two black corners
        int eta = 0;          ///< +1 when the black corners are 0 and 2
        bool type_two = false;
    };
    std::vector<CrossingData> crossings;

    std::size_t region_of(Slot corner) const;
    std::size_t black_count() const;

    std::vector<std::size_t> corner_region_; // 4*crossing + corner
};

/// Two-coloring with the unbounded face (the face with most corners, lowest
/// index on ties) white, or black when invert is set. Throws DiagramError on
/// a disconnected diagram.
RegionColoring checkerboard(const Diagram& d, bool invert = false);

} // namespace plumbline
