#include "wilfkit/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wilfkit/board.hpp"
#include "wilfkit/decomposition.hpp"
#include "wilfkit/enumeration.hpp"
#include "wilfkit/series.hpp"

namespace wilfkit::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

const std::map<std::string, CountFilter> kFilters{
    {"all", CountFilter::all},
    {"involutions", CountFilter::involutions},
    {"sum-decomposable", CountFilter::sum_decomposable},
    {"skew-decomposable", CountFilter::skew_decomposable},
    {"simple", CountFilter::simple}};

const std::map<std::string, MapDirection> kDirections{
    {"to-1234-class", MapDirection::to_1234_class},
    {"to-1324-class", MapDirection::to_1324_class}};

template <typename Map>
std::vector<std::string> keys_of(const Map& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

PatternSet parse_basis(const std::string& text) {
    if (text.empty()) return PatternSet();  // empty basis: avoid nothing
    return parse_pattern_set(text);
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty length token");
        out.push_back(std::size_t(std::stoul(tok)));
        if (next == text.size()) break;
        pos = next + 1;
    }
    return out;
}

ordered_json set_json(const PatternSet& set) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : set.members()) arr.push_back(p.str());
    return arr;
}

ordered_json rational_json(const Rational& v) {
    return ordered_json::array({numerator(v).str(), denominator(v).str()});
}

ordered_json verdict_json(const EquivalenceVerdict& v) {
    if (!v.divergence) return nullptr;
    return ordered_json{{"n", v.divergence->n},
                        {"left_count", v.divergence->left_count},
                        {"right_count", v.divergence->right_count}};
}

std::string verdict_text(const EquivalenceVerdict& v) {
    if (v.agreed()) return "agree through n=" + std::to_string(v.agrees_up_to);
    std::ostringstream os;
    os << "first divergence at n=" << v.divergence->n << ": left=" << v.divergence->left_count
       << " right=" << v.divergence->right_count;
    return os.str();
}

ordered_json board_json(const NiceBoard& board, const Filling& filling) {
    return ordered_json{{"r", board.r()},
                        {"bottom", board.bottoms()},
                        {"top", board.tops()},
                        {"row_of", filling.rows()}};
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int require_not_csv(Format fmt, std::ostream& err, const char* cmd) {
    if (fmt != Format::csv) return 0;
    err << "csv output is only available for counting commands, not for " << cmd << "\n";
    return 2;
}

int emit_count_report(const CountReport& report, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::text: {
            out << "avoiders of {" << report.basis.str() << "}";
            if (report.filter != CountFilter::all) out << " filtered to " << to_string(report.filter);
            out << "\n";
            for (std::size_t n = 1; n <= report.n_max; ++n)
                out << "n=" << n << ": " << report.at(n) << "\n";
            break;
        }
        case Format::csv: {
            out << "n,count\n";
            for (std::size_t n = 1; n <= report.n_max; ++n) out << n << "," << report.at(n) << "\n";
            break;
        }
        case Format::json: {
            ordered_json j{{"command", "count"},
                           {"patterns", set_json(report.basis)},
                           {"filter", to_string(report.filter)},
                           {"max_n", report.n_max},
                           {"counts", report.counts}};
            emit_json(out, j);
            break;
        }
    }
    return 0;
}

int run_series_sequence(const char* sub, const TruncatedSeries& s, Format fmt, std::ostream& out) {
    switch (fmt) {
        case Format::text:
            for (std::size_t k = 0; k <= s.order(); ++k) {
                out << "[x^" << k << "] = ";
                if (denominator(s.coeff(k)) == 1) out << numerator(s.coeff(k)).str();
                else out << numerator(s.coeff(k)).str() << "/" << denominator(s.coeff(k)).str();
                out << "\n";
            }
            break;
        case Format::csv: {
            const auto ints = integer_coeffs(s);  // these sequences are integral
            out << "n,count\n";
            for (std::size_t k = 0; k < ints.size(); ++k) out << k << "," << ints[k].str() << "\n";
            break;
        }
        case Format::json: {
            ordered_json coeffs = ordered_json::array();
            for (std::size_t k = 0; k <= s.order(); ++k) coeffs.push_back(rational_json(s.coeff(k)));
            emit_json(out, ordered_json{{"command", "series"},
                                        {"sub", sub},
                                        {"order", s.order()},
                                        {"coeffs", coeffs}});
            break;
        }
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"pattern-avoidance enumeration, board bijection and series toolkit"};
    app.require_subcommand(1);

    // shared option storage
    std::string patterns_text, left_text, right_text, perm_text, format_name = "text";
    std::string direction_name, left_lengths_text = "4", right_lengths_text = "4,6";
    std::size_t max_n = 9, length = 4, order = 10;
    unsigned threads = 0;
    std::uint64_t budget = kDefaultNodeBudget;
    std::string filter_name = "all";
    bool expect_equal = false, include_short = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember(keys_of(kFormats)))
            ->default_str("text");
    };
    auto add_enum_opts = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "worker threads (0 = WILFKIT_THREADS env or hardware)");
        cmd->add_option("--budget", budget, "node budget for enumeration");
    };

    CLI::App* count_cmd = app.add_subcommand("count", "count avoiders of a pattern set");
    count_cmd->add_option("--patterns", patterns_text, "pattern set, comma separated");
    count_cmd->add_option("--max-n", max_n, "largest length to count")->check(CLI::Range(1, 20));
    count_cmd->add_option("--filter", filter_name, "count only this kind of avoider")
        ->check(CLI::IsMember(keys_of(kFilters)));
    add_format(count_cmd);
    add_enum_opts(count_cmd);

    CLI::App* inv_cmd = app.add_subcommand("involutions", "count involutions avoiding a pattern set");
    inv_cmd->add_option("--patterns", patterns_text, "pattern set, comma separated");
    inv_cmd->add_option("--max-n", max_n, "largest length to count")->check(CLI::Range(1, 20));
    add_format(inv_cmd);
    add_enum_opts(inv_cmd);

    CLI::App* equiv_cmd = app.add_subcommand("equiv", "compare the counting sequences of two sets");
    equiv_cmd->add_option("--left", left_text, "left pattern set")->required();
    equiv_cmd->add_option("--right", right_text, "right pattern set")->required();
    equiv_cmd->add_option("--max-n", max_n, "probe depth")->check(CLI::Range(1, 20));
    equiv_cmd->add_flag("--expect-equal", expect_equal, "exit 1 if the sequences diverge");
    add_format(equiv_cmd);
    add_enum_opts(equiv_cmd);

    CLI::App* map_cmd = app.add_subcommand("map", "apply the board bijection to one permutation");
    map_cmd->add_option("--perm", perm_text, "input permutation")->required();
    map_cmd->add_option("--direction", direction_name, "target class")
        ->check(CLI::IsMember(keys_of(kDirections)))
        ->required();
    add_format(map_cmd);

    CLI::App* simples_cmd = app.add_subcommand("simples", "list simple permutations of a class");
    simples_cmd->add_option("--patterns", patterns_text, "pattern set, comma separated");
    simples_cmd->add_option("--length", length, "length of the simples to list")
        ->check(CLI::Range(1, 20))
        ->required();
    simples_cmd->add_flag("--include-short", include_short, "include the degenerate lengths 1 and 2");
    add_format(simples_cmd);

    CLI::App* series_cmd = app.add_subcommand("series", "exact generating function utilities");
    series_cmd->require_subcommand(1);
    CLI::App* schroeder_cmd = series_cmd->add_subcommand("schroeder", "large Schroder numbers");
    CLI::App* motzkin_cmd = series_cmd->add_subcommand("motzkin", "Motzkin numbers");
    CLI::App* verify_cmd =
        series_cmd->add_subcommand("verify-eq1", "check the defining identity of the Schroder gf");
    CLI::App* scoeffs_cmd = series_cmd->add_subcommand("s-coeffs", "bivariate simple-permutation series");
    for (CLI::App* sc : {schroeder_cmd, motzkin_cmd, verify_cmd, scoeffs_cmd}) {
        sc->add_option("--order", order, "truncation order");
        add_format(sc);
    }

    CLI::App* search_cmd = app.add_subcommand("search", "search for unbalanced Wilf equivalences");
    search_cmd->add_option("--left-lengths", left_lengths_text, "left pattern lengths, comma separated");
    search_cmd->add_option("--right-lengths", right_lengths_text,
                           "right pattern lengths, comma separated");
    search_cmd->add_option("--max-n", max_n, "probe depth")->check(CLI::Range(1, 20));
    add_format(search_cmd);
    add_enum_opts(search_cmd);

    CLI::App* egge_cmd = app.add_subcommand("egge-check", "probe the eight conjectured Schroder bases");
    egge_cmd->add_option("--max-n", max_n, "probe depth")->check(CLI::Range(1, 20));
    egge_cmd->add_flag("--expect-equal", expect_equal, "exit 1 if any sequence diverges");
    add_format(egge_cmd);
    add_enum_opts(egge_cmd);

    // subcommand-specific defaults, applied before parsing overrides them
    search_cmd->preparse_callback([&](std::size_t) { max_n = 8; });
    verify_cmd->preparse_callback([&](std::size_t) { order = 20; });
    scoeffs_cmd->preparse_callback([&](std::size_t) { order = 8; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Format fmt = kFormats.at(format_name);
    EnumOptions opts{threads, budget};

    try {
        if (count_cmd->parsed() || inv_cmd->parsed()) {
            const CountFilter filter =
                inv_cmd->parsed() ? CountFilter::involutions : kFilters.at(filter_name);
            return emit_count_report(count_sequence(max_n, parse_basis(patterns_text), filter, opts),
                                     fmt, out);
        }

        if (equiv_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "equiv")) return rc;
            const PatternSet left = parse_basis(left_text), right = parse_basis(right_text);
            const EquivalenceVerdict v = wilf_equal(max_n, left, right, opts);
            if (fmt == Format::json) {
                emit_json(out, ordered_json{{"command", "equiv"},
                                            {"left", set_json(left)},
                                            {"right", set_json(right)},
                                            {"max_n", max_n},
                                            {"agrees_up_to", v.agrees_up_to},
                                            {"divergence", verdict_json(v)}});
            } else {
                out << "left:  {" << left.str() << "}\n";
                out << "right: {" << right.str() << "}\n";
                out << verdict_text(v) << "\n";
            }
            return (expect_equal && !v.agreed()) ? 1 : 0;
        }

        if (map_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "map")) return rc;
            const Permutation input = parse_perm(perm_text);
            const MapDirection dir = kDirections.at(direction_name);
            const Permutation output = map_bijection(input, dir);
            if (output.empty()) {
                if (fmt == Format::json)
                    emit_json(out, ordered_json{{"command", "map"},
                                                {"input", input.str()},
                                                {"direction", direction_name},
                                                {"output", output.str()},
                                                {"board", nullptr}});
                else out << "input:  " << input.str() << "\noutput: " << output.str() << "\n";
                return 0;
            }
            const FrameAndBoard fb = board_of(output);
            if (fmt == Format::json) {
                emit_json(out, ordered_json{{"command", "map"},
                                            {"input", input.str()},
                                            {"direction", direction_name},
                                            {"output", output.str()},
                                            {"board", board_json(fb.board, fb.filling)}});
            } else {
                out << "input:  " << input.str() << "\n";
                out << "output: " << output.str() << "\n";
                out << "board (r=" << fb.board.r() << "):\n";
                if (fb.board.r() > 0) out << render_ascii(fb.board, fb.filling) << "\n";
            }
            return 0;
        }

        if (simples_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "simples")) return rc;
            const PatternSet basis = parse_basis(patterns_text);
            const auto simples = simples_in_class(length, basis, include_short);
            if (fmt == Format::json) {
                ordered_json arr = ordered_json::array();
                for (const auto& p : simples) arr.push_back(p.str());
                emit_json(out, ordered_json{{"command", "simples"},
                                            {"patterns", set_json(basis)},
                                            {"length", length},
                                            {"count", simples.size()},
                                            {"simples", arr}});
            } else {
                out << simples.size() << " simple avoiders of {" << basis.str() << "} at length "
                    << length << "\n";
                for (const auto& p : simples) out << p.str() << "\n";
            }
            return 0;
        }

        if (schroeder_cmd->parsed()) return run_series_sequence("schroeder", schroeder_gf(order), fmt, out);
        if (motzkin_cmd->parsed()) return run_series_sequence("motzkin", motzkin_gf(order), fmt, out);

        if (verify_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "series verify-eq1")) return rc;
            const TruncatedSeries residual = verify_functional_equation(order);
            std::size_t first_nonzero = 0;
            bool zero = true;
            for (std::size_t k = 0; k <= residual.order() && zero; ++k)
                if (residual.coeff(k) != 0) { zero = false; first_nonzero = k; }
            if (fmt == Format::json) {
                emit_json(out, ordered_json{{"command", "series"},
                                            {"sub", "verify-eq1"},
                                            {"order", order},
                                            {"residual_zero", zero},
                                            {"first_nonzero", zero ? ordered_json(nullptr)
                                                                   : ordered_json(first_nonzero)}});
            } else if (zero) {
                out << "residual = 0 through x^" << order << "\n";
            } else {
                out << "residual nonzero first at x^" << first_nonzero << "\n";
            }
            return zero ? 0 : 1;
        }

        if (scoeffs_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "series s-coeffs")) return rc;
            const BivariateSeries s = s_bivariate(order);
            if (fmt == Format::json) {
                ordered_json arr = ordered_json::array();
                for (std::size_t d = 0; d <= order; ++d)
                    for (std::size_t a = 0; a <= d; ++a) {
                        const Rational& c = s.coeff(a, d - a);
                        if (c != 0)
                            arr.push_back(ordered_json{{"u", a}, {"v", d - a}, {"value", rational_json(c)}});
                    }
                emit_json(out, ordered_json{{"command", "series"},
                                            {"sub", "s-coeffs"},
                                            {"order", order},
                                            {"coeffs", arr}});
            } else {
                for (std::size_t d = 0; d <= order; ++d)
                    for (std::size_t a = 0; a <= d; ++a) {
                        const Rational& c = s.coeff(a, d - a);
                        if (c != 0)
                            out << "[u^" << a << " v^" << d - a << "] = " << numerator(c).str()
                                << (denominator(c) == 1 ? "" : "/" + denominator(c).str()) << "\n";
                    }
            }
            return 0;
        }

        if (search_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "search")) return rc;
            const SearchReport report = search_unbalanced(parse_lengths(left_lengths_text),
                                                          parse_lengths(right_lengths_text), max_n, opts);
            if (fmt == Format::json) {
                ordered_json findings = ordered_json::array();
                for (const auto& f : report.findings) {
                    ordered_json alts = ordered_json::array();
                    for (const auto& a : f.left_alternatives) alts.push_back(set_json(a));
                    findings.push_back(ordered_json{{"left", set_json(f.left)},
                                                    {"left_alternatives", alts},
                                                    {"right", set_json(f.right)},
                                                    {"sequence", f.sequence}});
                }
                ordered_json reducible = ordered_json::array();
                for (const auto& s : report.reducible_right) reducible.push_back(set_json(s));
                emit_json(out, ordered_json{{"command", "search"},
                                            {"left_lengths", report.left_lengths},
                                            {"right_lengths", report.right_lengths},
                                            {"max_n", report.n_max},
                                            {"left_candidates", report.left_candidates},
                                            {"right_candidates", report.right_candidates},
                                            {"findings", findings},
                                            {"reducible_right", reducible},
                                            {"nodes_visited", report.nodes_visited}});
            } else {
                out << "left candidates:  " << report.left_candidates << "\n";
                out << "right candidates: " << report.right_candidates << " ("
                    << report.reducible_right.size() << " reducible)\n";
                out << report.findings.size() << " candidates survive to n=" << report.n_max << "\n";
                for (const auto& f : report.findings) {
                    out << "  {" << f.left.str() << "} ~ {" << f.right.str() << "}";
                    if (!f.left_alternatives.empty()) {
                        out << "   same counts for left";
                        for (const auto& a : f.left_alternatives) out << " {" << a.str() << "}";
                    }
                    out << "\n    counts:";
                    for (auto c : f.sequence) out << " " << c;
                    out << "\n";
                }
                out << "nodes visited: " << report.nodes_visited << "\n";
            }
            return 0;
        }

        if (egge_cmd->parsed()) {
            if (int rc = require_not_csv(fmt, err, "egge-check")) return rc;
            const auto rows = egge_check(max_n, opts);
            bool all_agree = true;
            if (fmt == Format::json) {
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) {
                    all_agree = all_agree && row.verdict.agreed();
                    arr.push_back(ordered_json{{"pattern", row.pattern.str()},
                                               {"agrees_up_to", row.verdict.agrees_up_to},
                                               {"divergence", verdict_json(row.verdict)}});
                }
                emit_json(out, ordered_json{{"command", "egge-check"}, {"max_n", max_n}, {"rows", arr}});
            } else {
                for (const auto& row : rows) {
                    all_agree = all_agree && row.verdict.agreed();
                    out << "{2143,3142," << row.pattern.str() << "} vs {2413,3142}: "
                        << verdict_text(row.verdict) << "\n";
                }
            }
            return (expect_equal && !all_agree) ? 1 : 0;
        }
    } catch (const BudgetExceededError& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }

    err << "no subcommand dispatched\n";
    return 2;
}

}  // namespace wilfkit::cli
