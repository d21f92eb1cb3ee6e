#ifndef WICKRING_JSON_IO_HPP
#define WICKRING_JSON_IO_HPP

#include <iosfwd>
#include <json.hpp>

#include "wickring/analysis.hpp"
#include "wickring/state_space.hpp"

namespace wickring {

using Json = nlohmann::ordered_json;

Json spec_to_json(const TruncationSpec& spec);
TruncationSpec spec_from_json(const Json& j);

/// Inner form: {"terms":[{"alpha":[..dense..],"re":r,"im":i}, ...]}.
Json element_to_json(const RingElement& f);
RingElement element_from_json(const Json& j, const TruncationSpec& spec);

/// Document form with a top-level truncation.
Json element_doc(const RingElement& f);
RingElement element_from_doc(const Json& j);

/// {"rows":r,"cols":c,"entries":[[..element..], ...]}.
Json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Json& j, const TruncationSpec& spec);

/// {"truncation":..,"dims":{"state":N,"input":q,"output":p},"A":..,"B":..,"C":..,"D":..}.
Json system_to_json(const StateSpaceSystem& sys);
StateSpaceSystem system_from_json(const Json& j);

/// {"truncation":..,"signal":[..matrix..]}.
Json signal_to_json(const SignalSequence& u, const TruncationSpec& spec);
SignalSequence signal_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);

/// Numeric matrix as CSV with header "row,col,re,im".
void write_csv(std::ostream& os, const ComplexMatrix& m);

} // namespace wickring

#endif
