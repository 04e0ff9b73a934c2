#pragma once

// JSON views of the library's results and the end-to-end report over the
// bundled fixtures. All output uses insertion-ordered objects and "p/q"
// rationals so that it serializes byte-for-byte reproducibly.

#include "plumbline/blowdown.hpp"
#include "plumbline/invariants.hpp"
#include "plumbline/khdata.hpp"

#include <json.hpp>

#include <string>

namespace plumbline {

using ojson = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// Compiled-in location of the bundled fixtures.
std::string default_fixture_dir();

ojson to_json(const CharVector& k);
ojson to_json(const RatVector& v);
ojson to_json(const LaurentPolynomial& p);
ojson to_json(const QACertificate& c);
ojson to_json(const std::vector<KhGroup>& groups);
ojson to_json(const KhTable& t);

/// {"h","good_vectors","classes":[{"rep","d"}],"lspace"} plus counts.
ojson dinv_json(const WeightedGraph& g, const DInvariants& d, bool lspace);
ojson blowdown_json(const BlowdownReport& r);

struct PaperCase {
    std::string name;  ///< manifold label
    std::string graph; ///< fixture file names, relative to the fixture dir
    std::string ball;  ///< empty when there is none
    std::string knot;
};

/// The four bundled plumbing/knot pairs.
const std::vector<PaperCase>& paper_cases();

/// Recomputes every case from the fixtures. The result does not depend on
/// `jobs`.
ojson paper_report(const std::string& fixture_dir, unsigned jobs = 1,
                   std::uint64_t budget = default_step_budget);

} // namespace plumbline
