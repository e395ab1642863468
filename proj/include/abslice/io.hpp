#pragma once

// JSON schemas and Graphviz DOT export for every value the tool exchanges.
// Parsers throw std::invalid_argument with a short description on bad input.

#include "abslice/bingcell.hpp"
#include "abslice/grope.hpp"
#include "abslice/lambda.hpp"
#include "abslice/linkhom.hpp"
#include "abslice/modeltree.hpp"
#include "abslice/pipeline.hpp"

#include <json.hpp>

#include <string>

namespace abslice::io {

using Json = nlohmann::json;

Json integer_to_json(const word::Integer& v);
word::Integer integer_from_json(const Json& j);

Json to_json(const word::FreeWord& w);
word::FreeWord word_from_json(const Json& j);

Json to_json(const link::LinkPresentation& L);
link::LinkPresentation link_from_json(const Json& j);

Json to_json(const link::MuCertificate& c);
link::MuCertificate certificate_from_json(const Json& j);

Json to_json(const model::DecompTree& t);
model::DecompTree decomp_from_json(const Json& j);

Json to_json(const model::HandleStructure& h);
model::HandleStructure handle_structure_from_json(const Json& j);

Json to_json(const model::HandleCounts& c);

Json to_json(const cell::BingCellTree& t);
cell::BingCellTree cell_from_json(const Json& j);

cell::PlumbingPattern plumbing_from_json(const Json& j);

Json to_json(const grope::GropeTree& g);
grope::GropeTree grope_from_json(const Json& j);

Json to_json(const lambda::Choice& c);
Json to_json(const lambda::SideReport& r);
lambda::SideReport side_report_from_json(const Json& j);

Json to_json(const pipeline::Instance& inst);
pipeline::Instance instance_from_json(const Json& j);

Json to_json(const pipeline::Verdict& v);
pipeline::Verdict verdict_from_json(const Json& j);

std::string to_dot(const model::DecompTree& t);
/// Marked vertices as filled squares, unmarked as circles, handles as
/// double circles.
std::string to_dot(const cell::BingCellTree& t);
std::string to_dot(const grope::GropeTree& g);

}  // namespace abslice::io
