#pragma once

#include <string>

#include <json.hpp>

#include "germkit/class_group.hpp"
#include "germkit/cyclic_quot.hpp"
#include "germkit/disproof.hpp"
#include "germkit/germ_rules.hpp"

namespace germkit {

using Json = nlohmann::ordered_json;

// Machine-readable mirrors of the main results. Rationals become "p/q" strings.
Json to_json(const TCertificate& cert);
Json chain_report(const HJChain& chain);  // quotient, reversed chain, Du Val / T
Json quot_report(const CycQuot& quot);    // chain, T certificate
Json to_json(const PrimitivityReport& r);
Json to_json(const DisproofTrace& t);
Json to_json(const SweepSummary& s);
Json to_json(const TableVerdict& v, const GermDescriptor& g);
Json to_json(const Table2Report& r);

// Plain-text renderings of the objects above; the text carries the same fields.
std::string render_chain_report(const Json& j);
std::string render_quot_report(const Json& j);
std::string render_trace(const Json& j);
std::string render_sweep(const Json& j);
std::string render_verdict(const Json& j);

}  // namespace germkit
