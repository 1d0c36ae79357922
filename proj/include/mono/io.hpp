#pragma once

#include <json.hpp>
#include <string>

#include "mono/factorization.hpp"
#include "mono/free_word.hpp"
#include "mono/induction.hpp"
#include "mono/monodromy_rep.hpp"
#include "mono/report.hpp"
#include "mono/search.hpp"
#include "mono/van_kampen.hpp"

namespace mono {

using Json = nlohmann::ordered_json;

// Text form: "s1 s2^-1 s3", bare signed integers ("1 -2 3") and bracketed
// lists ("[1, -2]") are accepted too. Parse errors carry a 1-based column.
BraidWord parse_braid_text(const std::string& text, int strand_count);
std::string braid_to_text(const BraidWord& w);

FreeWord parse_free_text(const std::string& text, int rank);
std::string free_to_text(const FreeWord& w);

Json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j, int strand_count);

Json factorization_to_json(const BraidFactorization& f);
BraidFactorization factorization_from_json(const Json& j);

Json rep_to_json(const MonodromyRep& t);
MonodromyRep rep_from_json(const Json& j);

Json system_to_json(const LinearSystemData& d);
LinearSystemData system_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);
std::string report_to_text(const ValidationReport& r);

Json presentation_to_json(const GroupPresentation& p);
std::string presentation_to_text(const GroupPresentation& p);

Json abelian_to_json(const AbelianInvariants& a);

Json script_to_json(const MoveScript& s);
MoveScript script_from_json(const Json& j, int strand_count);

Json load_json_file(const std::string& path);

}  // namespace mono
