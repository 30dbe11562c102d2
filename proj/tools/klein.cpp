/*
   Copyright 2026 the kleinian library authors

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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kleinian/report.hpp"

using namespace kleinian;

namespace {

// "A3", "D5", "E8", or a bare kind letter with a separate rank argument
GroupSpec parse_target(const std::string& token, int r) {
    std::string head;
    std::string digits;
    for (char c : token) {
        if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
        else head += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (!digits.empty() && r >= 0)
        throw CLI::ValidationError("target", "rank given twice: '" + token + "' and r");
    int rank = !digits.empty() ? std::stoi(digits) : r;
    if (head == "A") {
        if (rank < 1) throw CLI::ValidationError("target", "A needs a rank r >= 1");
        return {GroupKind::A, rank};
    }
    if (head == "D") {
        if (rank < 4) throw CLI::ValidationError("target", "D needs a rank r >= 4");
        return {GroupKind::D, rank};
    }
    if (head == "E") {
        if (rank == 6) return {GroupKind::E6, 0};
        if (rank == 7) return {GroupKind::E7, 0};
        if (rank == 8) return {GroupKind::E8, 0};
        throw CLI::ValidationError("target", "E needs rank 6, 7 or 8");
    }
    throw CLI::ValidationError("target", "unknown kind '" + token + "' (use A, D, E6, E7, E8)");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output path: " + path);
    out << text;
}

void print_report(const VerificationReport& rep, bool as_json, const std::string& out_path) {
    if (as_json) {
        write_output(report_to_json(rep).dump(2), out_path);
        return;
    }
    std::ostringstream os;
    os << "== " << rep.spec.name();
    if (!rep.c_literal.empty()) os << "  (c = " << rep.c_literal << ")";
    os << "  ->  " << (rep.degenerate ? "DEGENERATE" : (rep.pass() ? "PASS" : "FAIL")) << "\n";
    if (rep.degenerate) {
        os << "   parameter rejected: " << rep.degenerate_reason << "\n";
    } else {
        for (const auto& c : rep.checks)
            os << "   [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.details << "\n";
    }
    for (const auto& n : rep.notes) os << "   note: " << n << "\n";
    write_output(os.str(), out_path);
}

int exit_code_for(const VerificationReport& rep) {
    if (rep.degenerate) return 2;
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kleinian quotient singularities: exact divisor profiles on minimal "
                 "resolutions, affine diagram marks, and the McKay correspondence"};
    app.require_subcommand(1);

    // ---- verify ----
    std::string v_target;
    int v_r = -1;
    std::string v_c, v_out;
    unsigned v_seed = 1;
    bool v_json = false, v_no_probes = false;
    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    verify->add_option("target", v_target, "A, D, E6, E7, E8 (optionally with rank, e.g. D5) or 'all'")
        ->required();
    verify->add_option("r,--r", v_r, "rank for A/D kinds");
    verify->add_option("--c", v_c, "D-type parameter (exact literal, e.g. 3/2 or 1+zeta(4))");
    verify->add_option("--seed", v_seed, "seed for sampled parameters and spot checks");
    verify->add_option("--out", v_out, "write the report to a file");
    verify->add_flag("--json", v_json, "emit JSON instead of text");
    verify->add_flag("--no-probes", v_no_probes, "skip the uniqueness probes");

    // ---- probe ----
    std::string p_target, p_candidate, p_c, p_out;
    int p_r = -1;
    bool p_json = false;
    auto* probe = app.add_subcommand("probe", "test one candidate function in X, Y, Z for the "
                                              "affine-diagram property");
    probe->add_option("target", p_target, "A, D, E6, E7, E8 (optionally with rank)")->required();
    probe->add_option("r,--r", p_r, "rank for A/D kinds");
    probe->add_option("--candidate", p_candidate, "polynomial in X, Y, Z, e.g. \"(1+X)*X\"")
        ->required();
    probe->add_option("--c", p_c, "expected D-type parameter (checked against the recovered one)");
    probe->add_option("--out", p_out, "write the verdict to a file");
    probe->add_flag("--json", p_json, "emit JSON instead of text");

    // ---- export ----
    std::string e_what, e_target, e_c, e_format = "json", e_out;
    int e_r = -1;
    unsigned e_seed = 1;
    auto* exp = app.add_subcommand("export", "export diagrams, divisor profiles or McKay graphs");
    exp->add_option("what", e_what, "diagram | profile | mckay")
        ->required()
        ->check(CLI::IsMember({"diagram", "profile", "mckay"}));
    exp->add_option("target", e_target, "A, D, E6, E7, E8 (optionally with rank)")->required();
    exp->add_option("r,--r", e_r, "rank for A/D kinds");
    exp->add_option("--c", e_c, "D-type parameter for profiles");
    exp->add_option("--format", e_format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", e_out, "output path (stdout when omitted)");
    exp->add_option("--seed", e_seed, "seed (reserved for sampled parameters)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (v_target == "all") {
                auto reports = run_verify_all(v_seed, !v_no_probes);
                int worst = 0;
                std::ostringstream os;
                json all = json::array();
                for (const auto& rep : reports) {
                    if (v_json) {
                        all.push_back(report_to_json(rep));
                    } else {
                        os << (rep.degenerate ? "DEGENERATE" : (rep.pass() ? "PASS" : "FAIL"))
                           << "  " << rep.spec.name()
                           << (rep.c_literal.empty() ? "" : " (c = " + rep.c_literal + ")") << "\n";
                    }
                    worst = std::max(worst, exit_code_for(rep));
                }
                write_output(v_json ? all.dump(2) : os.str(), v_out);
                return worst;
            }
            GroupSpec spec = parse_target(v_target, v_r);
            std::optional<CycloNum> c;
            if (!v_c.empty()) {
                const CycloField& f = CycloField::get(field_order_for(spec));
                c = parse_scalar(f, v_c);
            }
            auto rep = run_verify(spec, c, !v_no_probes, v_seed);
            print_report(rep, v_json, v_out);
            return exit_code_for(rep);
        }

        if (probe->parsed()) {
            GroupSpec spec = parse_target(p_target, p_r);
            if (spec.kind == GroupKind::A && spec.r == 1) {
                std::cerr << "uniqueness tooling excludes A_1\n";
                return 1;
            }
            const CycloField& f = CycloField::get(field_order_for(spec));
            XyzPoly cand = parse_candidate(f, p_candidate);
            ProbeResult pr = uniqueness_probe(spec, cand, p_candidate);
            bool c_ok = true;
            if (!p_c.empty()) {
                CycloNum expect = parse_scalar(f, p_c);
                c_ok = pr.recovered_c && *pr.recovered_c == expect;
            }
            if (p_json) {
                json out{{"target", spec.name()},
                         {"candidate", pr.candidate},
                         {"accepted", pr.accepted},
                         {"profile_equals_reference", pr.profile_equals_reference}};
                if (!pr.reason.empty()) out["reason"] = pr.reason;
                if (pr.recovered_c) out["recovered_c"] = pr.recovered_c->to_string();
                out["profile"] = profile_to_json(pr.profile, nullptr, spec.name());
                write_output(out.dump(2), p_out);
            } else {
                std::ostringstream os;
                os << spec.name() << " candidate " << pr.candidate << ": "
                   << (pr.accepted ? "accepted (affine-diagram property holds)" : "rejected") << "\n";
                if (!pr.reason.empty()) os << "   reason: " << pr.reason << "\n";
                if (pr.accepted)
                    os << "   profile equals the reference function's: "
                       << (pr.profile_equals_reference ? "yes" : "no") << "\n";
                if (pr.recovered_c) os << "   recovered c = " << pr.recovered_c->to_string() << "\n";
                write_output(os.str(), p_out);
            }
            return (pr.accepted && c_ok) ? 0 : 1;
        }

        if (exp->parsed()) {
            GroupSpec spec = parse_target(e_target, e_r);
            std::string text;
            if (e_what == "diagram") {
                AffineDiagram d = affine_diagram(spec);
                text = (e_format == "dot") ? diagram_to_dot(d) : diagram_to_json(d).dump(2);
            } else if (e_what == "profile") {
                DivisorProfile prof;
                if (spec.kind == GroupKind::A) {
                    prof = divisor_profile_A(invariant_triple(spec).x, spec.r);
                } else if (spec.kind == GroupKind::D) {
                    const CycloField& f = CycloField::get(field_order_for(spec));
                    CycloNum c = e_c.empty() ? CycloNum::rational(f, Rational(2))
                                             : parse_scalar(f, e_c);
                    prof = divisor_profile_D(c, spec.r);
                } else {
                    prof = divisor_profile_E(spec);
                }
                if (e_format == "dot") {
                    text = profile_to_dot(prof, spec.name() + " divisor profile");
                } else {
                    auto match = match_profile(prof, affine_diagram(spec));
                    text = profile_to_json(prof, &match, spec.name()).dump(2);
                }
            } else {  // mckay
                GroupData g = build_group(spec);
                auto cd = character_data(g);
                auto mg = mckay_graph(g, cd);
                if (e_format == "dot") {
                    text = marked_graph_to_dot(to_marked_graph(mg), spec.name() + " McKay graph");
                } else {
                    text = mckay_to_json(spec, cd, mg).dump(2);
                }
            }
            write_output(text, e_out);
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "degenerate parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
