#pragma once

#include <json.hpp>

#include "workbench/torus.hpp"

namespace workbench {

using Json = nlohmann::json;

// Root-datum schema: {"name", "rank", "simple_roots", "simple_coroots",
// "p", "f"}; q is derived as p^f.
BasedRootDatum datum_from_json(const Json& j);
Json datum_to_json(const BasedRootDatum& rd);

// Shipped presets: A1sc (alias SL2), A1ad (alias PGL2), GL2, GL3,
// A2sc (aliases A2, SL3), B2, G2. p/f default to 3/1 unless overridden.
std::vector<std::string> preset_names();
BasedRootDatum preset_datum(const std::string& name, long long p = 3,
                            long long f = 1);
// Load a preset by name or a JSON file by path; p/f <= 0 keep defaults.
BasedRootDatum load_datum(const std::string& name_or_path, long long p = 0,
                          long long f = 0);

Json element_to_json(const AffWeylElement& w, const BasedRootDatum& rd);
AffWeylElement element_from_json(const Json& j, const BasedRootDatum& rd);
Json word_to_json(const AffReducedWord& w, const AffineWeyl& weyl);

Json prop_to_json(const ProPElement& a, const BasedRootDatum& rd);
ProPElement prop_from_json(const Json& j, const BasedRootDatum& rd);

Json character_to_json(const TorusCharacter& psi);
TorusCharacter character_from_json(const Json& j, int rank);

Json torus_ring_to_json(const TorusRing& c);

}  // namespace workbench
