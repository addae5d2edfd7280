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

#include "sympcomp/certify.hpp"

#include "sympcomp/parse.hpp"

namespace sympcomp {

using nlohmann::json;

const char* tool_version() { return "sympcomp 1.0.0"; }

json word_to_json(const GroupWord& w) {
    json out = json::array();
    for (const Letter& l : w.letters)
        out.push_back(json::array({l.kind == Letter::Kind::E ? "E" : "SE", l.i, l.j,
                                   l.z.to_string()}));
    return out;
}

GroupWord word_from_json(const json& j, const Ring& r, std::size_t size) {
    GroupWord w;
    w.size = size;
    for (const json& lj : j) {
        if (!lj.is_array() || lj.size() != 4)
            throw ParseError(0, "letter must be [kind, i, j, scalar]");
        std::string kind = lj[0].get<std::string>();
        if (kind != "E" && kind != "SE") throw ParseError(0, "unknown letter kind " + kind);
        w.letters.push_back(Letter{kind == "E" ? Letter::Kind::E : Letter::Kind::SE,
                                   lj[1].get<std::size_t>(), lj[2].get<std::size_t>(),
                                   parse_element(lj[3].get<std::string>(), r)});
    }
    return w;
}

json matrix_to_json(const RingMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

RingMatrix matrix_from_json(const json& j, const Ring& r) {
    std::vector<std::vector<RingElem>> rows;
    for (const json& rj : j) {
        std::vector<RingElem> row;
        for (const json& ej : rj) row.push_back(parse_element(ej.get<std::string>(), r));
        rows.push_back(std::move(row));
    }
    return RingMatrix::from_rows(r, std::move(rows));
}

namespace {

json row_to_json(const std::vector<RingElem>& row) {
    json out = json::array();
    for (const RingElem& e : row) out.push_back(e.to_string());
    return out;
}

std::vector<RingElem> row_from_json(const json& j, const Ring& r) {
    std::vector<RingElem> out;
    for (const json& ej : j) out.push_back(parse_element(ej.get<std::string>(), r));
    return out;
}

} // namespace

json sp4_certificate(const UnimodRow& v, const RingMatrix& theta, const SearchParams& sp,
                     const std::vector<std::string>& trace_steps) {
    json out{{"kind", "sp4-completion"},
             {"ring", ring_to_string(v.ring())},
             {"row", row_to_json(v.entries)},
             {"theta", matrix_to_json(theta)},
             {"tool", tool_version()},
             {"seed", sp.seed},
             {"budget", sp.budget}};
    // an SE-word factorization pins every entry of theta, so corruption of
    // any single entry is caught by replay; omitted when factoring fails
    try {
        out["factorization"] = word_to_json(esp_factor(theta, sp));
    } catch (const Error&) {
    }
    if (!trace_steps.empty()) out["trace"] = trace_steps;
    return out;
}

json witt_certificate_json(const WittCertificate& cert, const SearchParams& sp) {
    return json{{"kind", "witt"},
                {"ring", ring_to_string(cert.left.matrix.ring())},
                {"left", matrix_to_json(cert.left.matrix)},
                {"right", matrix_to_json(cert.right.matrix)},
                {"pad", cert.m},
                {"word", word_to_json(cert.word)},
                {"tool", tool_version()},
                {"seed", sp.seed},
                {"budget", sp.budget}};
}

json orbit_certificate(const OrbitTable& table) {
    json reps = json::array();
    for (std::size_t code = 0; code < table.rep.size(); ++code)
        if (table.rep[code] == static_cast<std::int64_t>(code))
            reps.push_back(table.decode(static_cast<std::int64_t>(code)));
    return json{{"kind", "orbit-report"},
                {"ring", "ZZ/" + table.modulus.get_str()},
                {"length", table.length},
                {"generators",
                 table.generators == GeneratorSet::Elementary ? "E" : "ESp"},
                {"orbit_count", table.orbit_count},
                {"representatives", reps},
                {"tool", tool_version()},
                {"seed", 0},
                {"budget", 0}};
}

namespace {

VerifyOutcome fail(const std::string& what) { return VerifyOutcome{false, what}; }

VerifyOutcome verify_sp4(const json& j) {
    Ring r = parse_ring(j.at("ring").get<std::string>());
    std::vector<RingElem> row = row_from_json(j.at("row"), r);
    RingMatrix theta = matrix_from_json(j.at("theta"), r);
    if (theta.rows() != 4 || theta.cols() != 4 || row.size() != 4)
        return fail("shape: need a length-4 row and a 4x4 theta");
    if (congruence(psi_form(r, 2), theta) != psi_form(r, 2))
        return fail("symplectic identity theta^T psi_2 theta = psi_2");
    if (theta.row(0) != row) return fail("first-row identity e1 theta = v");
    if (j.contains("factorization")) {
        GroupWord w = word_from_json(j.at("factorization"), r, 4);
        if (eval_word(w, r) != theta)
            return fail("factorization replay eval(word) = theta");
    }
    return VerifyOutcome{true, ""};
}

VerifyOutcome verify_witt(const json& j) {
    Ring r = parse_ring(j.at("ring").get<std::string>());
    RingMatrix left = matrix_from_json(j.at("left"), r);
    RingMatrix right = matrix_from_json(j.at("right"), r);
    std::size_t m = j.at("pad").get<std::size_t>();
    WittCertificate cert{alternating_form(left), alternating_form(right), m,
                         word_from_json(j.at("word"), r, 2 * m)};
    if (!verify_certificate(cert.left, cert.right, cert))
        return fail("witt congruence replay");
    return VerifyOutcome{true, ""};
}

VerifyOutcome verify_orbit(const json& j) {
    Ring r = parse_ring(j.at("ring").get<std::string>());
    std::size_t length = j.at("length").get<std::size_t>();
    GeneratorSet gens = j.at("generators").get<std::string>() == "E"
                            ? GeneratorSet::Elementary
                            : GeneratorSet::SymplecticElementary;
    OrbitTable table = orbit_bfs(r, length, gens);
    if (table.orbit_count != j.at("orbit_count").get<std::size_t>())
        return fail("orbit count");
    json reps = json::array();
    for (std::size_t code = 0; code < table.rep.size(); ++code)
        if (table.rep[code] == static_cast<std::int64_t>(code))
            reps.push_back(table.decode(static_cast<std::int64_t>(code)));
    if (reps != j.at("representatives")) return fail("orbit representatives");
    return VerifyOutcome{true, ""};
}

} // namespace

VerifyOutcome verify_json_certificate(const json& j) {
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "sp4-completion") return verify_sp4(j);
        if (kind == "witt") return verify_witt(j);
        if (kind == "orbit-report") return verify_orbit(j);
        return fail("unknown certificate kind " + kind);
    } catch (const std::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace sympcomp
