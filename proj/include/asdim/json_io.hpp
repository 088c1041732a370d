#pragma once

#include <string>

#include <json.hpp>

#include "asdim/action.hpp"
#include "asdim/cover.hpp"
#include "asdim/deletion.hpp"
#include "asdim/graph.hpp"
#include "asdim/mass.hpp"
#include "asdim/nested.hpp"
#include "asdim/orientation.hpp"
#include "asdim/pipeline.hpp"
#include "asdim/theta.hpp"

namespace asdim {

using Json = nlohmann::json;

// {"vertices": n, "edges": [[u,v], ...]} with u < v.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"x": {"y": "p/q", ...}, ...} with rationals as strings.
Json mass_to_json(const MassAssignment& lambda);
MassAssignment mass_from_json(const Json& j, int vertex_count);

// {"points": n, "generators": [[perm], ...], "labels": [...]?}.
Json action_to_json(const FiniteAction& a);
FiniteAction action_from_json(const Json& j);

// {"words": [[0,-1,...], ...]}.
Json words_to_json(const std::vector<GroupWord>& words);
std::vector<GroupWord> words_from_json(const Json& j);

// {"u->v": "p/q", ...}: theta0 per directed edge, both directions present.
Json theta_to_json(const ThetaTable& t);
ThetaTable theta_from_json(const Json& j);

// {"R0": [[u,v],...], "R1": [[u,v],...], "arrows": [[x,y],...]}.
Json orientation_to_json(const OrientedPartition& p);
OrientedPartition orientation_from_json(const Json& j);

// {"r": "p/q", "Q": [[u,v],...], "Q0": [[u,v],...]}.
Json deletion_to_json(const DeletionSet& d);
DeletionSet deletion_from_json(const Json& j);

// {"r": "p/q", "blocks": [[v,...],...], "max_classes_met": k,
//  "diameter_bound": "p/q"}.
Json witness_to_json(const CoverWitness& w);
CoverWitness witness_from_json(const Json& j);

Json conditions_to_json(const ConditionsReport& rep);
Json cover_check_to_json(const CoverCheck& check);
Json pipeline_report_json(const PipelineArtifacts& art);
Json nested_report_json(const NestedReport& rep);

std::string graph_to_dot(const Graph& g);
/// Arrows as directed edges, R1 edges dashed and undirected.
std::string orientation_to_dot(const Graph& g, const OrientedPartition& p);

/// Write-temp-then-rename. Throws Error(Internal) on I/O failure.
void write_file_atomic(const std::string& path, const std::string& content);
Json load_json_file(const std::string& path);
std::string pretty(const Json& j);

}  // namespace asdim
