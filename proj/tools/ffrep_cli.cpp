// ffrep: decompose Frobenius pushforwards of one-dimensional graded
// domains, classify the summands across e, and certify finite
// F-representation type or its failure.
//
// Exit codes: 0 computation succeeded (NOT_FFRT is a successful result),
// 2 a certification check failed (Hilbert mismatch, broken certificate,
// selftest failure), 1 usage or input errors.
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ffrep/decomp.hpp"
#include "ffrep/errors.hpp"
#include "ffrep/io.hpp"
#include "ffrep/selftest.hpp"
#include "ffrep/tower.hpp"

namespace io = ffrep::io;
using namespace ffrep;

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kCertFail = 2;

struct Options {
    std::string ring_path;
    std::string tower_path;
    unsigned e = 1;
    unsigned emax = 8;
    std::size_t check_degree = 50;
    std::size_t trunc = 40;
    std::string out_path;
    std::string format = "table";
    std::uint64_t seed = 20260824;
};

void emit(const Options& opt, const io::json& report, const std::string& table) {
    if (!opt.out_path.empty()) io::write_file(opt.out_path, io::dump(report));
    if (opt.format == "json")
        std::cout << io::dump(report);
    else
        std::cout << table;
}

std::string summand_table(const std::map<unsigned, DecompositionReport>& per_e) {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "%4s %8s %6s %8s  %s\n", "e", "q", "free", "proper",
                  "proper classes (dim)");
    out += line;
    for (const auto& [e, rep] : per_e) {
        std::uint64_t free_count = 0;
        std::map<int, std::pair<std::size_t, std::uint64_t>> proper;  // id -> (dim, count)
        for (const auto& s : rep.summands) {
            if (s.kind == SummandKind::Free) {
                ++free_count;
            } else {
                auto& slot = proper[s.class_id];
                slot.first = s.space->dim();
                ++slot.second;
            }
        }
        std::string cls;
        for (const auto& [id, dc] : proper) {
            if (!cls.empty()) cls += ", ";
            cls += "#" + std::to_string(id) + "(dim " + std::to_string(dc.first) + ") x" +
                   std::to_string(dc.second);
        }
        std::snprintf(line, sizeof line, "%4u %8llu %6llu %8zu  %s\n", e,
                      static_cast<unsigned long long>(rep.q),
                      static_cast<unsigned long long>(free_count), proper.size(), cls.c_str());
        out += line;
    }
    return out;
}

std::string verdict_line(const Verdict& v) {
    switch (v.kind) {
        case VerdictKind::FFRT_CERTIFIED:
            return "verdict: FFRT_CERTIFIED (period " + std::to_string(v.period) + ", " +
                   std::to_string(v.distinct_classes) + " classes)\n";
        case VerdictKind::NOT_FFRT_CERTIFIED:
            return "verdict: NOT_FFRT_CERTIFIED (" + v.detail + ")\n";
        default:
            return "verdict: LOWER_BOUND_ONLY (" + v.detail + ")\n";
    }
}

int cmd_decompose(const Options& opt) {
    auto pres = io::load_ring_spec(opt.ring_path);
    auto ring = CurveRing::analyze(pres);
    auto rep = decompose(ring, opt.e, opt.check_degree);
    io::json report{{"ring", io::ring_spec_json(pres)},
                    {"e_range", {opt.e, opt.e}},
                    {"per_e", {io::report_json(rep)}}};
    std::map<unsigned, DecompositionReport> per_e{{opt.e, rep}};
    emit(opt, report, summand_table(per_e));
    return rep.hilbert_ok ? kOk : kCertFail;
}

int cmd_classify(const Options& opt, bool with_verdict, bool certificate_only) {
    auto pres = io::load_ring_spec(opt.ring_path);
    auto ring = CurveRing::analyze(pres);

    if (certificate_only) {
        auto cert = recurrence_certificate(ring, opt.emax);
        io::json report{{"ring", io::ring_spec_json(pres)},
                        {"certificates", {{"recurrence", io::certificate_json(cert)}}}};
        std::string table = "recurrence certificate verified through e = " +
                            std::to_string(opt.emax) + " (" +
                            std::to_string(cert.steps.size()) + " steps)\n";
        emit(opt, report, table);
        return kOk;
    }

    auto table = classify(ring, opt.emax, {}, opt.check_degree);
    io::json report = io::class_table_json(table);
    report["ring"] = io::ring_spec_json(pres);
    std::string text = summand_table(table.per_e);

    bool hilbert_ok = true;
    for (const auto& [e, rep] : table.per_e) hilbert_ok = hilbert_ok && rep.hilbert_ok;

    if (with_verdict) {
        auto v = ffrt_verdict(ring, opt.emax, table);
        report["verdict"] = io::verdict_json(v);
        text += verdict_line(v);
    }
    emit(opt, report, text);
    return hilbert_ok ? kOk : kCertFail;
}

int cmd_tower(const Options& opt) {
    auto T = io::load_tower_spec(opt.tower_path);
    auto rep = tower_summands(T, opt.e, opt.trunc);
    io::json report = io::tower_report_json(rep);
    report["tower_spec"] = io::tower_spec_json(T);
    char line[128];
    std::string text;
    std::snprintf(line, sizeof line, "tower '%s': e = %u, q = %llu, %s, hilbert %s\n",
                  T.label.c_str(), rep.e, static_cast<unsigned long long>(rep.q),
                  rep.all_free ? "all summands free" : "proper summands present",
                  rep.hilbert_ok ? "balanced" : "MISMATCH");
    text += line;
    for (const auto& [key, cnt] : rep.summands) {
        std::snprintf(line, sizeof line, "  class %2d  shift %-8s x%llu\n", key.first,
                      key.second.str().c_str(), static_cast<unsigned long long>(cnt));
        text += line;
    }
    emit(opt, report, text);
    return rep.hilbert_ok ? kOk : kCertFail;
}

int cmd_selftest(const Options& opt) {
    auto results = selftest::run_corpus();
    auto acc = selftest::run_acceptance();
    auto props = selftest::run_properties(opt.seed);
    results.insert(results.end(), acc.begin(), acc.end());
    results.insert(results.end(), props.begin(), props.end());
    int failures = selftest::report(results, std::cout);
    if (failures > 0) {
        std::cout << failures << " checks FAILED\n";
        return kCertFail;
    }
    std::cout << "all " << results.size() << " checks passed\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius pushforward decomposition for one-dimensional graded rings"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool ring, bool tower) {
        if (ring) sub->add_option("--ring", opt.ring_path, "ring spec (JSON)")->required();
        if (tower) sub->add_option("--tower", opt.tower_path, "tower spec (JSON)")->required();
        sub->add_option("--out", opt.out_path, "write the JSON report here");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* dec = app.add_subcommand("decompose", "decompose A^(1/p^e) at one e");
    add_common(dec, true, false);
    dec->add_option("--e", opt.e, "Frobenius exponent")->required();
    dec->add_option("--check-degree", opt.check_degree, "Hilbert check bound");

    auto* cls = app.add_subcommand("classify", "classes of summands across e");
    add_common(cls, true, false);
    cls->add_option("--emax", opt.emax, "largest e")->required();
    cls->add_option("--check-degree", opt.check_degree, "Hilbert check bound");

    auto* ver = app.add_subcommand("verdict", "classify plus an FFRT verdict");
    add_common(ver, true, false);
    ver->add_option("--emax", opt.emax, "largest e")->required();
    ver->add_option("--check-degree", opt.check_degree, "Hilbert check bound");

    auto* cert = app.add_subcommand("certificate", "recurrence certificate for the quartic family");
    add_common(cert, true, false);
    cert->add_option("--emax", opt.emax, "last recurrence step");

    auto* tow = app.add_subcommand("tower", "summand multiset of a tower extension");
    add_common(tow, false, true);
    tow->add_option("--e", opt.e, "Frobenius exponent")->required();
    tow->add_option("--trunc", opt.trunc, "Hilbert truncation degree");

    auto* st = app.add_subcommand("selftest", "bundled corpus + acceptance + property suites");
    st->add_option("--seed", opt.seed, "seed for the property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return cmd_decompose(opt);
        if (cls->parsed()) return cmd_classify(opt, false, false);
        if (ver->parsed()) return cmd_classify(opt, true, false);
        if (cert->parsed()) return cmd_classify(opt, false, true);
        if (tow->parsed()) return cmd_tower(opt);
        if (st->parsed()) return cmd_selftest(opt);
    } catch (const CertificateFailure& e) {
        std::cerr << "CertificateFailure: " << e.what() << "\n";
        return kCertFail;
    } catch (const Error& e) {
        // module errors surface with their type name baked into the message
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
