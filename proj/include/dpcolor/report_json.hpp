#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dpcolor/bounds.hpp"
#include "dpcolor/counting.hpp"
#include "dpcolor/degree_search.hpp"
#include "dpcolor/labeling.hpp"

namespace dpcolor {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are numbers; larger ones are decimal strings.
Json big_to_json(const BigInt& value);
Json rational_to_json(Rational r);

Json graph_to_json(const Multigraph& g);
Json labeling_to_json(const SLabeling& l);
Json signed_graph_to_json(const SignedGraph& sg);
Json bound_to_json(const BoundValue& b);
Json count_to_json(const CountReport& r);
Json degree_result_to_json(const DegreeSearchResult& r);
Json worst_case_to_json(const WorstCaseResult& r);

/// graph6 when simple, otherwise the edge list with multiplicities.
std::string graph_label(const Multigraph& g);

void write_jsonl(std::ostream& out, const std::vector<Json>& records);

}  // namespace dpcolor
