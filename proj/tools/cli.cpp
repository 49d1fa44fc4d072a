#include "cli.hpp"

#include "acceptance.hpp"

#include "longknot/band_pass_pairs.hpp"
#include "longknot/certificate.hpp"
#include "longknot/conway.hpp"
#include "longknot/gauss_code.hpp"
#include "longknot/invariants.hpp"
#include "longknot/moves.hpp"
#include "longknot/operations.hpp"
#include "longknot/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace longknot::cli {

namespace {

using Json = nlohmann::ordered_json;

/// A data problem in the inputs (bad code, unreadable file, illegal move).
struct DataFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataFailure("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inline codes first, then one code per non-comment line of each file.
std::vector<std::string> collect_codes(const std::vector<std::string>& inline_codes,
                                       const std::vector<std::string>& files) {
    std::vector<std::string> codes = inline_codes;
    for (const std::string& path : files) {
        std::istringstream in(read_file(path));
        for (std::string line; std::getline(in, line);) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
            codes.push_back(line);
        }
    }
    return codes;
}

LongGaussDiagram parse_or_fail(const std::string& code) {
    try {
        return parse_gauss_code(code);
    } catch (const std::invalid_argument& e) {
        throw DataFailure(e.what());
    }
}

Json poly_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [exponent, coefficient] : p.term_list()) {
        terms.push_back(Json::array({exponent, coefficient}));
    }
    return terms;
}

Json report_json(const std::string& code, const LongGaussDiagram& d) {
    const InvariantReport r = report(d);
    Json j;
    j["code"] = serialize(d);
    if (code != j["code"].get<std::string>()) j["input"] = code;
    j["v21"] = r.v21;
    j["v22"] = r.v22;
    j["beta"] = r.beta;
    j["w"] = poly_json(r.w);
    return j;
}

// Evaluates f on every input in parallel, keeping input order.
template <typename F>
std::vector<Json> parallel_map(const std::vector<std::string>& inputs, F f) {
    std::vector<Json> out(inputs.size());
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), inputs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) out[i] = f(inputs[i]);
        return out;
    }
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < inputs.size(); i += workers) out[i] = f(inputs[i]);
        }));
    }
    for (auto& t : tasks) t.get();
    return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

MoveKindSet parse_kinds(const std::vector<std::string>& names) {
    if (names.empty()) {
        MoveKindSet all = MoveKindSet::reidemeister();
        all.insert(MoveKind::BandPass);
        return all;
    }
    MoveKindSet kinds;
    for (const std::string& n : names) kinds.insert(parse_move_kind(n));
    return kinds;
}

Json counts_json(const CobordismCounts& c) {
    Json j;
    j["births"] = c.births;
    j["saddles"] = c.saddles;
    j["deaths"] = c.deaths;
    return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"longknot: Gauss diagram invariants, moves and certificates for long virtual knots"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::vector<std::string> codes, files;
    std::vector<std::string> kinds;
    std::string event_text, cert_path, out_path;
    bool csv = false, list = false, ribbon = false, band_pass = false, timing = false;
    int config = 0, base = 0, variant = 0;
    std::size_t extra = 0, max_arrows = 4, max_steps = 3;
    std::uint64_t seed = acceptance::default_seed;

    auto* inv = app.add_subcommand("invariants", "v21, v22, beta and w for each code");
    inv->add_option("codes", codes, "Gauss codes");
    inv->add_option("--file,-f", files, "files with one code per line ('#' comments)");
    inv->add_flag("--csv", csv, "flat CSV instead of JSON");

    auto* mv = app.add_subcommand("move", "list or apply moves");
    mv->add_option("code", codes, "Gauss code")->required()->expected(1);
    auto* list_flag = mv->add_flag("--list", list, "list legal moves");
    auto* apply_opt = mv->add_option("--apply", event_text, "move event text to apply");
    list_flag->excludes(apply_opt);
    mv->add_option("--kinds", kinds, "kinds to list (default: R-moves and BandPass)")
        ->delimiter(',');

    auto* clo = app.add_subcommand("closure", "closed diagram and planarity of each code");
    clo->add_option("codes", codes, "Gauss codes");
    clo->add_option("--file,-f", files, "input files");

    auto* cat = app.add_subcommand("concat", "concatenate codes left to right");
    cat->add_option("codes", codes, "Gauss codes")->required();

    auto* invr = app.add_subcommand("inverse", "concordance inverse of each code");
    invr->add_option("codes", codes, "Gauss codes");
    invr->add_option("--file,-f", files, "input files");

    auto* pg = app.add_subcommand("pair-gen", "band-pass test pairs (all 40 cases by default)");
    pg->add_option("--config", config, "configuration 1..5")->check(CLI::Range(1, 5));
    pg->add_option("--base", base, "base arc 1..4")->check(CLI::Range(1, 4));
    pg->add_option("--variant", variant, "move variant 1..2")->check(CLI::Range(1, 2));
    pg->add_option("--extra", extra, "extra random arrows")->check(CLI::Range(0, 32));
    pg->add_option("--seed", seed, "random seed");

    auto* cert = app.add_subcommand("certify", "ribbon certificate for K # K^-1");
    cert->add_option("code", codes, "Gauss code of K")->required()->expected(1);
    cert->add_option("--out,-o", out_path, "write the certificate file here");

    auto* ver = app.add_subcommand("verify", "check a certificate file");
    ver->add_option("certificate", cert_path, "certificate file")->required();
    ver->add_flag("--ribbon", ribbon, "also forbid births");

    auto* se = app.add_subcommand("search", "bounded Reidemeister equivalence search");
    se->add_option("codes", codes, "two Gauss codes")->required()->expected(2);
    se->add_option("--max-arrows", max_arrows, "arrow bound")->check(CLI::PositiveNumber);
    se->add_option("--max-steps", max_steps, "path length bound")->check(CLI::PositiveNumber);
    se->add_flag("--band-pass", band_pass, "allow band-pass moves");

    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    st->add_option("--seed", seed, "random seed");
    st->add_flag("--timing", timing, "show time per criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    }

    try {
        if (*inv) {
            const auto inputs = collect_codes(codes, files);
            if (inputs.empty()) throw CLI::ValidationError("invariants: no input codes");
            // Parse everything first so a bad line fails before any output.
            for (const std::string& c : inputs) parse_or_fail(c);
            const auto rows = parallel_map(
                inputs, [](const std::string& c) { return report_json(c, parse_gauss_code(c)); });
            if (csv) {
                out << "code,v21,v22,beta,w\n";
                for (const Json& r : rows) {
                    std::string w;
                    for (const auto& t : r["w"]) {
                        w += (w.empty() ? "" : " ") + std::to_string(t[0].get<int>()) + ":" +
                             std::to_string(t[1].get<long long>());
                    }
                    out << csv_field(r["code"].get<std::string>()) << ',' << r["v21"] << ','
                        << r["v22"] << ',' << r["beta"] << ',' << csv_field(w) << '\n';
                }
            } else {
                for (const Json& r : rows) emit(out, r);
            }
            return Ok;
        }
        if (*mv) {
            if (!list && event_text.empty()) {
                throw CLI::ValidationError("move: give --list or --apply");
            }
            const LongGaussDiagram d = parse_or_fail(codes.at(0));
            Json j;
            j["code"] = serialize(d);
            if (list) {
                MoveKindSet set;
                try {
                    set = parse_kinds(kinds);
                } catch (const std::invalid_argument& e) {
                    throw CLI::ValidationError(e.what());
                }
                Json moves = Json::array();
                for (const MoveEvent& m : enumerate_moves(d, set)) moves.push_back(m.to_string());
                j["moves"] = moves;
            } else {
                MoveEvent m = [&] {
                    try {
                        return MoveEvent::parse(event_text);
                    } catch (const std::invalid_argument& e) {
                        throw DataFailure(e.what());
                    }
                }();
                LongGaussDiagram result;
                try {
                    result = apply(d, m);
                } catch (const std::invalid_argument& e) {
                    throw DataFailure(e.what());
                }
                j["event"] = m.to_string();
                j["result"] = serialize(result);
            }
            emit(out, j);
            return Ok;
        }
        if (*clo || *invr) {
            const auto inputs = collect_codes(codes, files);
            if (inputs.empty()) throw CLI::ValidationError("no input codes");
            for (const std::string& c : inputs) {
                const LongGaussDiagram d = parse_or_fail(c);
                Json j;
                j["code"] = serialize(d);
                if (*clo) {
                    const ClosedGaussDiagram closed = closure(d);
                    j["closed"] = closed.canonical_code();
                    j["genus"] = carter_genus(closed);
                    j["realizable"] = is_realizable(closed);
                } else {
                    j["inverse"] = serialize(inverse(d));
                }
                emit(out, j);
            }
            return Ok;
        }
        if (*cat) {
            LongGaussDiagram acc;
            Json parts = Json::array();
            for (const std::string& c : codes) {
                const LongGaussDiagram d = parse_or_fail(c);
                parts.push_back(serialize(d));
                acc = concatenate(acc, d);
            }
            Json j;
            j["inputs"] = parts;
            j["result"] = serialize(acc);
            emit(out, j);
            return Ok;
        }
        if (*pg) {
            std::vector<ConfigCase> cases;
            for (const ConfigCase& c : all_config_cases()) {
                if ((config == 0 || c.configuration == config) && (base == 0 || c.base_arc == base) &&
                    (variant == 0 || static_cast<int>(c.variant) == variant)) {
                    cases.push_back(c);
                }
            }
            for (const ConfigCase& c : cases) {
                const BandPassPair p = generate_band_pass_pair(c, extra, seed);
                Json j;
                j["configuration"] = c.configuration;
                j["base_arc"] = c.base_arc;
                j["variant"] = static_cast<int>(c.variant);
                j["seed"] = seed;
                j["before"] = serialize(p.before);
                j["after"] = serialize(p.after);
                j["site"] = MoveEvent(p.site).to_string();
                j["before_invariants"] = report_json(serialize(p.before), p.before);
                j["after_invariants"] = report_json(serialize(p.after), p.after);
                j["before_invariants"].erase("code");
                j["after_invariants"].erase("code");
                emit(out, j);
            }
            return Ok;
        }
        if (*cert) {
            const LongGaussDiagram k = parse_or_fail(codes.at(0));
            const CobordismCertificate c = trivialize_inverse_pair(k);
            const Verdict v = verify_certificate(c, CertificateMode::Ribbon);
            if (!out_path.empty()) {
                std::ofstream file(out_path);
                if (!(file << c.to_text())) throw DataFailure("cannot write " + out_path);
            }
            Json j;
            j["code"] = serialize(k);
            j["start"] = serialize(c.start);
            j["events"] = c.events.size();
            j["counts"] = counts_json(c.counts);
            j["accepted"] = v.accepted;
            if (out_path.empty()) j["certificate"] = c.to_text();
            emit(out, j);
            return v.accepted ? Ok : VerificationFailure;
        }
        if (*ver) {
            CobordismCertificate c = [&] {
                try {
                    return CobordismCertificate::parse(read_file(cert_path));
                } catch (const std::invalid_argument& e) {
                    throw DataFailure(e.what());
                }
            }();
            const Verdict v =
                verify_certificate(c, ribbon ? CertificateMode::Ribbon : CertificateMode::Concordance);
            Json j;
            j["file"] = cert_path;
            j["mode"] = ribbon ? "ribbon" : "concordance";
            j["accepted"] = v.accepted;
            j["failing_step"] = v.failing_step ? Json(*v.failing_step) : Json(nullptr);
            j["reason"] = v.reason;
            j["counts"] = counts_json(v.counts);
            emit(out, j);
            return v.accepted ? Ok : VerificationFailure;
        }
        if (*se) {
            const LongGaussDiagram a = parse_or_fail(codes.at(0));
            const LongGaussDiagram b = parse_or_fail(codes.at(1));
            SearchOptions options;
            options.max_arrows = max_arrows;
            options.max_steps = max_steps;
            options.band_pass = band_pass;
            const SearchResult r = search_equivalence(a, b, options);
            Json j;
            j["from"] = serialize(a);
            j["to"] = serialize(b);
            j["verdict"] = r.path ? "equivalent" : "unknown";
            Json path = Json::array();
            if (r.path) {
                for (const MoveEvent& m : *r.path) path.push_back(m.to_string());
            }
            j["path"] = path;
            j["states"] = r.states_visited;
            j["truncated"] = r.truncated;
            emit(out, j);
            return Ok;
        }
        if (*st) {
            bool all = true;
            for (const auto& r : acceptance::run_all(seed)) {
                out << acceptance::format_line(r, timing) << '\n';
                all = all && r.passed;
            }
            return all ? Ok : VerificationFailure;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return UsageError;
    } catch (const DataFailure& e) {
        err << "data error: " << e.what() << "\n";
        return DataError;
    }
    return UsageError;
}

}  // namespace longknot::cli
