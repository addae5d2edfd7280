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

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "sympcomp/certify.hpp"
#include "sympcomp/graded.hpp"
#include "sympcomp/parse.hpp"

namespace {

using namespace sympcomp;
using nlohmann::json;

// Exit codes: 0 success, 2 construction failure, 3 invalid input,
// 4 verification failure.
constexpr int kOk = 0, kConstruction = 2, kInvalid = 3, kVerification = 4;

unsigned long default_budget() {
    if (const char* env = std::getenv("SYMPCOMP_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

void write_atomically(const std::string& path, const json& doc) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump(2) << "\n";
        if (!out) throw std::runtime_error("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " to " + path);
}

int report_failure(int code, const std::string& error, const std::string& what) {
    std::cout << json{{"status", "failure"}, {"error", error}, {"what", what}}.dump()
              << "\n";
    return code;
}

int cmd_complete(const std::string& ring_text, const std::string& row_text,
                 const std::string& mode, const std::string& ideal_text,
                 const SearchParams& sp, const std::string& out_path) {
    Ring r;
    UnimodRow v;
    try {
        r = parse_ring(ring_text);
        v = unimod_row(parse_row(row_text, r));
    } catch (const Error& e) {
        return report_failure(kInvalid, e.code(), e.what());
    }
    try {
        RingMatrix theta;
        std::vector<std::string> steps;
        if (mode == "reduce") {
            theta = eval_word(symplectic_reduce(v, sp), r).inverse();
        } else if (mode == "trace") {
            PipelineTrace t = sp4_trace(v, sp);
            theta = t.theta;
            for (const auto& [name, ok] : t.checks)
                steps.push_back(name + (ok ? ":ok" : ":failed"));
        } else if (mode == "relative") {
            if (ideal_text.empty())
                return report_failure(kInvalid, "MissingArgument",
                                      "relative mode needs --ideal");
            theta = relative_complete(v, parse_row(ideal_text, r), sp);
        } else if (mode == "graded") {
            theta = graded_complete(v, sp);
        } else {
            return report_failure(kInvalid, "MissingArgument", "unknown mode " + mode);
        }
        json cert = sp4_certificate(v, theta, sp, steps);
        write_atomically(out_path, cert);
        std::cout << json{{"status", "ok"}, {"out", out_path}}.dump() << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_failure(kInvalid, e.code(), e.what());
    } catch (const Error& e) {
        return report_failure(kConstruction, e.code(), e.what());
    }
}

int cmd_verify(const std::string& path) {
    json doc;
    try {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        in >> doc;
    } catch (const std::exception& e) {
        return report_failure(kInvalid, "UnreadableFile", e.what());
    }
    VerifyOutcome outcome = verify_json_certificate(doc);
    if (!outcome.ok)
        return report_failure(kVerification, "VerificationFailed", outcome.failure);
    std::cout << json{{"status", "ok"}}.dump() << "\n";
    return kOk;
}

int cmd_orbit(long modulus, std::size_t length, const std::string& gens_name,
              const std::string& csv_path, const std::string& cert_path) {
    try {
        GeneratorSet gens = gens_name == "ESp" ? GeneratorSet::SymplecticElementary
                                               : GeneratorSet::Elementary;
        OrbitTable table = orbit_bfs(ring_mod(modulus), length, gens);
        if (!csv_path.empty()) {
            std::ofstream out(csv_path, std::ios::trunc);
            table.write_csv(out);
        }
        if (!cert_path.empty()) write_atomically(cert_path, orbit_certificate(table));
        std::cout << json{{"status", "ok"}, {"orbits", table.orbit_count}}.dump() << "\n";
        return kOk;
    } catch (const Error& e) {
        return report_failure(kConstruction, e.code(), e.what());
    }
}

int cmd_witt(const std::string& ring_text, const std::string& v_text,
             const std::string& w_text, const std::string& wp_text,
             const SearchParams& sp, const std::string& out_path) {
    try {
        Ring r = parse_ring(ring_text);
        UnimodRow v = unimod_row(parse_row(v_text, r));
        std::vector<RingElem> w = parse_row(w_text, r);
        WittCertificate cert;
        if (wp_text.empty())
            cert = trivialize(v, elementary_reduce(v, sp), w);
        else
            cert = change_witness(v, w, parse_row(wp_text, r), sp);
        write_atomically(out_path, witt_certificate_json(cert, sp));
        std::cout << json{{"status", "ok"}, {"out", out_path}}.dump() << "\n";
        return kOk;
    } catch (const ParseError& e) {
        return report_failure(kInvalid, e.code(), e.what());
    } catch (const NotUnimodular& e) {
        return report_failure(kInvalid, e.code(), e.what());
    } catch (const Error& e) {
        return report_failure(kConstruction, e.code(), e.what());
    }
}

// ----------------------------------------------------------------- demos

int demo_pfaffian() {
    std::mt19937_64 rng(0);
    for (const Ring& r : {ring_ZZ(), ring_mod(101)}) {
        for (int t = 0; t < 50; ++t)
            for (std::size_t n : {2u, 4u, 6u}) {
                RingMatrix m(r, n, n);
                for (std::size_t i = 0; i < n; ++i) {
                    m.at(i, i) = RingElem::zero(r);
                    for (std::size_t j = i + 1; j < n; ++j) {
                        long val = static_cast<long>(rng() % 19) - 9;
                        m.at(i, j) = RingElem::from_int(r, val);
                        m.at(j, i) = -m.at(i, j);
                    }
                }
                RingElem pf = m.pfaffian();
                if (m.det() != pf * pf) {
                    std::cout << "pfaffian: FAIL det != Pf^2\n";
                    return kConstruction;
                }
            }
    }
    for (std::size_t k = 1; k <= 4; ++k)
        if (!psi_form(ring_ZZ(), k).pfaffian().is_one()) {
            std::cout << "pfaffian: FAIL Pf(psi) != 1\n";
            return kConstruction;
        }
    std::cout << "pfaffian: ok\n";
    return kOk;
}

int demo_swan_towber_symbolic() {
    Ring poly = ring_poly(ring_QQ(), {"p", "q", "r", "a", "b", "c"});
    auto var = [&poly](const char* n) { return RingElem::variable(poly, n); };
    RingElem rel = var("p") * var("a") + var("q") * var("b") + var("r") * var("c") -
                   RingElem::one(poly);
    Ring quot = ring_quotient(poly, {rel});
    auto qv = [&quot](const char* n) { return RingElem::variable(quot, n); };
    CompletionRecord rec = swan_towber(qv("p"), qv("q"), qv("r"), qv("a"), qv("b"), qv("c"));
    RingElem residue = rec.matrix.det() - RingElem::one(quot);
    if (!residue.is_zero()) {
        std::cout << "swan-towber-symbolic: FAIL residue " << residue.to_string() << "\n";
        return kConstruction;
    }
    std::cout << "swan-towber-symbolic: ok (det - 1 normalizes to 0)\n";
    return kOk;
}

int demo_orbit(long n) {
    OrbitTable e = orbit_bfs(ring_mod(n), 4, GeneratorSet::Elementary);
    OrbitTable esp = orbit_bfs(ring_mod(n), 4, GeneratorSet::SymplecticElementary);
    if (e.rep != esp.rep) {
        std::cout << "orbit-z" << n << ": FAIL partitions differ\n";
        return kConstruction;
    }
    std::cout << "orbit-z" << n << ": ok (" << e.orbit_count
              << " orbits, E and ESp partitions agree cell-for-cell)\n";
    return kOk;
}

int cmd_demo(const std::string& name) {
    if (name == "pfaffian") return demo_pfaffian();
    if (name == "swan-towber-symbolic") return demo_swan_towber_symbolic();
    if (name == "orbit-z5") return demo_orbit(5);
    if (name == "orbit-z25") return demo_orbit(25);
    return report_failure(kInvalid, "MissingArgument", "unknown demo " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic completion of unimodular rows"};
    app.require_subcommand(1);

    SearchParams sp;
    sp.budget = default_budget();

    std::string ring_text, row_text, mode = "reduce", ideal_text, out_path = "cert.json";
    auto* complete = app.add_subcommand("complete", "complete a unimodular row");
    complete->add_option("--ring", ring_text, "ring descriptor")->required();
    complete->add_option("--row", row_text, "row literal")->required();
    complete->add_option("--mode", mode, "trace|reduce|relative|graded");
    complete->add_option("--ideal", ideal_text, "ideal generators (relative mode)");
    complete->add_option("--seed", sp.seed, "search seed");
    complete->add_option("--budget", sp.budget, "search budget");
    complete->add_option("--out", out_path, "certificate output file")->required();

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "replay a certificate file");
    verify->add_option("file", verify_path, "certificate file")->required();

    std::string demo_name;
    auto* demo = app.add_subcommand("demo", "run a demonstration suite");
    demo->add_option("name", demo_name, "suite name")->required();

    long orbit_mod = 5;
    std::size_t orbit_len = 4;
    std::string orbit_gens = "E", orbit_csv, orbit_cert;
    auto* orbit = app.add_subcommand("orbit", "enumerate orbits over ZZ/n");
    orbit->add_option("--modulus", orbit_mod, "modulus n")->required();
    orbit->add_option("--length", orbit_len, "row length");
    orbit->add_option("--gens", orbit_gens, "E|ESp");
    orbit->add_option("--csv", orbit_csv, "CSV output file");
    orbit->add_option("--out", orbit_cert, "certificate output file");

    std::string witt_v, witt_w, witt_wp, witt_out = "witt.json";
    auto* witt = app.add_subcommand("witt", "trivialize a Vaserstein form");
    witt->add_option("--ring", ring_text, "ring descriptor")->required();
    witt->add_option("--v", witt_v, "length-3 row")->required();
    witt->add_option("--w", witt_w, "witness row")->required();
    witt->add_option("--wp", witt_wp, "second witness (witness-change certificate)");
    witt->add_option("--seed", sp.seed, "search seed");
    witt->add_option("--budget", sp.budget, "search budget");
    witt->add_option("--out", witt_out, "certificate output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (complete->parsed())
            return cmd_complete(ring_text, row_text, mode, ideal_text, sp, out_path);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (demo->parsed()) return cmd_demo(demo_name);
        if (orbit->parsed())
            return cmd_orbit(orbit_mod, orbit_len, orbit_gens, orbit_csv, orbit_cert);
        if (witt->parsed())
            return cmd_witt(ring_text, witt_v, witt_w, witt_wp, sp, witt_out);
    } catch (const std::exception& e) {
        return report_failure(kConstruction, "Unexpected", e.what());
    }
    return kInvalid;
}
