#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cground/merge.hpp"
#include "cground/oracle.hpp"
#include "cground/postulates.hpp"
#include "cground/rule_file.hpp"

namespace cground {

using Json = nlohmann::ordered_json;

Json diagnostics_json(const std::vector<Diagnostic>& diagnostics);

/// {status, diagnostics, atoms, disjoint, agents}
Json parse_report(const ParseOutcome& outcome);

/// {coherent, cyclic, redundant, in_conflict, witnesses}
Json check_report(const HornExpression& f, const Background& b, const PreconditionReport& pre);

Json trace_json(const MergeTrace& trace, const Background& b);
Json refusal_json(const Refused& refused, const Background& b);

/// {P1: {pass, witness?}, ..., P6: {...}}
Json postulate_json(const PostulateReport& report, const Background& b);

/// {found_count, exhausted, explored, grounds}
Json oracle_json(const SearchResult& result, const Background& b);

/// Graphviz rendering, one node per pair labelled "psi ⊣ phi", parent -> child edges.
std::string dependency_dot(const DependencyGraph& graph, const Background& b);

}  // namespace cground
