/*
   Copyright 2026 The sympcomp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SYMPCOMP_CERTIFY_HPP
#define SYMPCOMP_CERTIFY_HPP

#include <json.hpp>

#include "sympcomp/pipeline.hpp"

namespace sympcomp {

const char* tool_version();

// Certificates are self-contained JSON documents: the full ring descriptor
// string is embedded, every element is serialized as grammar text, and
// verification reparses and replays all identities from the file alone.

nlohmann::json word_to_json(const GroupWord& w);
GroupWord word_from_json(const nlohmann::json& j, const Ring& r, std::size_t size);

nlohmann::json matrix_to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j, const Ring& r);

nlohmann::json sp4_certificate(const UnimodRow& v, const RingMatrix& theta,
                               const SearchParams& sp,
                               const std::vector<std::string>& trace_steps = {});
nlohmann::json witt_certificate_json(const WittCertificate& cert, const SearchParams& sp);
nlohmann::json orbit_certificate(const OrbitTable& table);

/// Replays a certificate of any kind. ok == false carries the name of the
/// first failed identity in `failure`.
struct VerifyOutcome {
    bool ok = false;
    std::string failure;
};
VerifyOutcome verify_json_certificate(const nlohmann::json& j);

} // namespace sympcomp

#endif
