#pragma once

#include <json.hpp>

#include "lantern/certificate.hpp"
#include "lantern/contact.hpp"
#include "lantern/graph.hpp"
#include "lantern/rewrite.hpp"

namespace lantern {

using json = nlohmann::json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both encodings are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json rat_to_json(const Rat& v);
Rat rat_from_json(const json& j);

json to_json(const FreeWord& w);
json to_json(const Twist& t);
json to_json(const TwistWord& w);
json to_json(const Factorization& f);
json to_json(const FramedDiagram& d);
json to_json(const ModelDiagram& m);
json to_json(const FormInvariants& inv);
json to_json(const W3Evidence& ev);
json to_json(const LSpaceCertificate& cert);
json to_json(const MultiGraph& g);
json to_json(const ConsistencyReport& rep);
json to_json(const ObstructionReport& rep);

FramedDiagram diagram_from_json(const json& j);
ModelDiagram model_from_json(const json& j);
HypothesisSet hypotheses_from_json(const json& j);
IntMatrix matrix_from_json(const json& j);

}  // namespace lantern
