// Command-line front end: params, dual, construct, table, verify-fixture, search.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsc/config.hpp"
#include "dsc/construction.hpp"
#include "dsc/distance.hpp"
#include "dsc/double_code.hpp"
#include "dsc/dual.hpp"
#include "dsc/error.hpp"
#include "dsc/table.hpp"

using json = nlohmann::json;
using namespace dsc;

namespace {

enum Exit { kPass = 0, kContradiction = 1, kInputError = 2, kBudgetRefusal = 3 };

struct Common {
    std::string config;
    std::optional<double> budget_ops;
    std::optional<double> budget_secs;
    bool long_run = false;
    std::string format;
    std::optional<unsigned long long> seed;
    std::string out;
    unsigned workers = 0;
};

DistanceOptions distance_options(const Common& c, const JobConfig* job = nullptr) {
    DistanceOptions o;
    if (job && job->budget_ops) o.budget_ops = *job->budget_ops;
    if (job && job->budget_secs) o.budget_secs = *job->budget_secs;
    if (c.budget_ops) o.budget_ops = *c.budget_ops;
    if (c.budget_secs) o.budget_secs = *c.budget_secs;
    if (c.long_run) {
        o.budget_ops = std::numeric_limits<double>::infinity();
        o.budget_secs = 0;
    }
    o.workers = c.workers;
    return o;
}

std::string format_of(const Common& c, const JobConfig* job = nullptr) {
    if (!c.format.empty()) return c.format;
    if (job && job->format) return *job->format;
    return "text";
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

json witness_tokens(const GaloisField& f, const std::vector<int>& w) {
    json a = json::array();
    for (int x : w) a.push_back(f.format(x));
    return a;
}

json distance_json(const DistanceResult& d, const GaloisField& f) {
    json j;
    j["n"] = d.n;
    j["k"] = d.k;
    if (d.empty) {
        j["empty"] = true;
        return j;
    }
    j["lower"] = d.lower;
    j["upper"] = d.upper;
    j["exact"] = d.exact;
    j["level"] = d.level;
    j["work"] = d.work;
    j["stop_reason"] = d.stop_reason;
    j["witness"] = witness_tokens(f, d.witness);
    if (d.rank_reduced) j["rank_reduced"] = true;
    return j;
}

std::string distance_text(const DistanceResult& d) {
    if (d.empty) return "d undefined (no nonzero codeword)";
    std::ostringstream os;
    if (d.exact)
        os << "d = " << d.upper << " (exact";
    else
        os << d.lower << " <= d <= " << d.upper << " (" << d.stop_reason;
    os << ", " << d.work << " codewords)";
    return os.str();
}

json validation_json(const ValidationReport& rep) {
    json a = json::array();
    for (const auto& c : rep.conditions) {
        const char* kind = c.kind == ConditionKind::Generator    ? "generator"
                           : c.kind == ConditionKind::NormalForm ? "normal-form"
                           : c.kind == ConditionKind::Closure    ? "closure"
                                                                 : "derived";
        json e{{"name", c.name}, {"kind", kind}, {"ok", c.ok}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        a.push_back(e);
    }
    return a;
}

json checks_json(const std::vector<Check>& v) {
    json a = json::array();
    for (const auto& c : v) {
        json e{{"name", c.name}, {"ok", c.ok}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        a.push_back(e);
    }
    return a;
}

std::string checks_text(const std::vector<Check>& v) {
    std::ostringstream os;
    for (const auto& c : v) {
        os << "  " << (c.ok ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    return os.str();
}

std::string indent(const std::string& s) {
    std::istringstream in(s);
    std::ostringstream os;
    for (std::string line; std::getline(in, line);) os << "  " << line << '\n';
    return os.str();
}

std::string field_line(const JobConfig& job) {
    return job.field->label() + " modulus " + job.field->modulus_string() + ", theta_" + std::to_string(job.i) +
           ", (r, s) = (" + std::to_string(job.r) + ", " + std::to_string(job.s) + ")";
}

// ---- params --------------------------------------------------------------

int cmd_params(const Common& c) {
    JobConfig job = load_job(c.config);
    DoubleCodeSpec code = job.code();
    ValidationReport rep = validate(code);
    std::string fmt = format_of(c, &job);
    json doc;
    doc["config"] = json::parse(job_to_json(job));
    doc["validation"] = validation_json(rep);
    doc["valid"] = rep.valid();
    if (!rep.valid()) {
        if (fmt == "json")
            emit(c, doc.dump(2));
        else
            emit(c, field_line(job) + "\ninvalid generators:\n" + indent(rep.str()));
        return kContradiction;
    }
    DoubleCodeSpec norm = normalize_l(code);
    GrayMatrix n = job.gray_matrix();
    LinearCodeMatrix g = gray_generator(norm, n);
    int k = g.rank();
    bool closed = is_shift_closed(norm, n);
    DistanceResult d = min_distance_bz(g, distance_options(c, &job));
    Cardinality card = cardinality(norm);
    doc["normalized"] = !(norm.l_v == code.l_v && norm.l_vp == code.l_vp);
    doc["n"] = g.cols();
    doc["k"] = k;
    doc["spanning_rows"] = g.rows();
    doc["shift_closed"] = closed;
    doc["cardinality"] = {{"q", card.q}, {"code", card.code}, {"C_r", card.left}, {"C_s", card.right}};
    doc["distance"] = distance_json(d, *job.field);
    if (fmt == "json") {
        emit(c, doc.dump(2));
    } else {
        std::ostringstream os;
        if (!job.label.empty()) os << job.label << '\n';
        os << field_line(job) << '\n';
        os << "parameters [" << g.cols() << ", " << k << ", ";
        if (d.empty)
            os << "-";
        else if (d.exact)
            os << d.upper;
        else
            os << d.lower << ".." << d.upper;
        os << "]\n";
        os << "spanning rows " << g.rows() << ", rank " << k << '\n';
        os << distance_text(d) << '\n';
        os << "span closed under the double shift: " << (closed ? "yes" : "no") << '\n';
        os << "from generator degrees: |C| = q^" << card.code << ", |C_r| = q^" << card.left << ", |C_s| = q^" << card.right << '\n';
        os << "conditions:\n" << indent(rep.str());
        emit(c, os.str());
    }
    return kPass;
}

// ---- dual ----------------------------------------------------------------

int cmd_dual(const Common& c) {
    JobConfig job = load_job(c.config);
    DoubleCodeSpec code = job.code();
    ValidationReport rep = validate(code);
    std::string fmt = format_of(c, &job);
    if (!rep.valid()) {
        emit(c, fmt == "json" ? json{{"valid", false}, {"validation", validation_json(rep)}}.dump(2)
                              : "invalid generators:\n" + indent(rep.str()));
        return kContradiction;
    }
    code = normalize_l(code);
    GrayMatrix n = job.gray_matrix();
    DualData dual = compute_dual(code, n);
    int len = 2 * code.n();
    int k = gray_generator(code, n).rank();
    int k_dual = gray_generator(dual.code, n).rank();
    bool product_ok = k + dual.parity.rows() == len && k_dual == dual.parity.rows();
    bool orth = dual_orthogonal_to_shifts(code, dual);
    bool closed = rep.shift_closed();
    auto deg = degree_checks(code, dual);
    CardinalityExponents cf = cardinality_formulas(code), cr = cardinality_ranks(code, n);
    auto forms = formula_checks(code, dual);
    bool deg_ok = true;
    for (const auto& x : deg) deg_ok = deg_ok && x.ok;
    bool card_ok = cf == cr;
    // Shift orthogonality, degrees and cardinalities presuppose a shift-closed code.
    bool contradiction = !product_ok || (closed && (!orth || !deg_ok || !card_ok));

    auto card_json = [](const CardinalityExponents& e) {
        return json{{"C_r", e.c_r},       {"C_s", e.c_s},           {"dual_r", e.dual_r},
                    {"dual_s", e.dual_s}, {"C_r_perp", e.c_r_perp}, {"C_s_perp", e.c_s_perp}};
    };
    if (fmt == "json") {
        json doc;
        doc["config"] = json::parse(job_to_json(job));
        doc["n"] = len;
        doc["k"] = k;
        doc["k_dual"] = dual.parity.rows();
        doc["gamma"] = dual.gamma;
        doc["g_bar"] = {{"v", dual.g_bar.v.str()}, {"vp", dual.g_bar.vp.str()}};
        doc["l_bar"] = {{"v", dual.l_bar.v.str()}, {"vp", dual.l_bar.vp.str()}};
        doc["h_bar"] = {{"v", dual.h_bar.v.str()}, {"vp", dual.h_bar.vp.str()}};
        doc["shift_closed"] = closed;
        doc["rank_nullity"] = product_ok;
        doc["orthogonal_to_shifts"] = orth;
        doc["degree_checks"] = checks_json(deg);
        doc["cardinality_formulas"] = card_json(cf);
        doc["cardinality_ranks"] = card_json(cr);
        doc["closed_forms"] = checks_json(forms);
        emit(c, doc.dump(2));
    } else {
        std::ostringstream os;
        if (!job.label.empty()) os << job.label << '\n';
        os << field_line(job) << '\n';
        os << "primal [" << len << ", " << k << "], dual [" << len << ", " << dual.parity.rows() << "]"
           << ", gamma = " << dual.gamma << '\n';
        os << "g_bar = v*(" << dual.g_bar.v.str() << ") + v'*(" << dual.g_bar.vp.str() << ")\n";
        os << "l_bar = v*(" << dual.l_bar.v.str() << ") + v'*(" << dual.l_bar.vp.str() << ")\n";
        os << "h_bar = v*(" << dual.h_bar.v.str() << ") + v'*(" << dual.h_bar.vp.str() << ")\n";
        os << "|C| |C_perp| = q^" << 2 * len << ": " << (product_ok ? "ok" : "FAIL") << '\n';
        os << "dual rows orthogonal to all shifts of primal rows: " << (orth ? "ok" : "FAIL") << '\n';
        if (!closed) os << "note: the spanning set is not closed under the double shift\n";
        os << "degree identities:\n" << checks_text(deg);
        os << "cardinality exponents (formula / rank):\n";
        auto line = [&](const char* name, int a, int b) {
            os << "  " << (a == b ? "ok   " : "FAIL ") << name << " " << a << " / " << b << '\n';
        };
        line("|C_r|", cf.c_r, cr.c_r);
        line("|C_s|", cf.c_s, cr.c_s);
        line("|(C_perp)_r|", cf.dual_r, cr.dual_r);
        line("|(C_perp)_s|", cf.dual_s, cr.dual_s);
        line("|(C_r)_perp|", cf.c_r_perp, cr.c_r_perp);
        line("|(C_s)_perp|", cf.c_s_perp, cr.c_s_perp);
        os << "closed forms:\n" << checks_text(forms);
        emit(c, os.str());
    }
    return contradiction ? kContradiction : kPass;
}

// ---- construct -----------------------------------------------------------

int cmd_construct(const Common& c, const std::string& fixture_out) {
    JobConfig job = load_job(c.config);
    DoubleCodeSpec code = job.code();
    ValidationReport rep = validate(code);
    std::string fmt = format_of(c, &job);
    if (!rep.valid()) {
        emit(c, fmt == "json" ? json{{"valid", false}, {"validation", validation_json(rep)}}.dump(2)
                              : "invalid generators:\n" + indent(rep.str()));
        return kContradiction;
    }
    code = normalize_l(code);
    ConstructionReport r = evaluate_construction(code, job.gray_matrix(), distance_options(c, &job));
    if (!fixture_out.empty()) {
        std::ofstream f(fixture_out);
        if (!f) throw ParseError("cannot write " + fixture_out);
        f << write_fixture(r.matrix, job.label.empty() ? "construction" : job.label + " construction",
                           r.k_after);
    }
    if (fmt == "json") {
        json doc;
        doc["config"] = json::parse(job_to_json(job));
        doc["n"] = r.n;
        doc["rows"] = r.rows;
        doc["k_before"] = r.k_before;
        doc["k_after"] = r.k_after;
        doc["empty"] = r.empty;
        if (!r.empty) {
            doc["before"] = distance_json(r.before, *job.field);
            doc["after"] = distance_json(r.after, *job.field);
        }
        emit(c, doc.dump(2));
    } else {
        std::ostringstream os;
        if (!job.label.empty()) os << job.label << '\n';
        os << field_line(job) << '\n';
        if (r.empty) {
            os << "empty construction, n = " << r.n << '\n';
        } else {
            os << "plain Gray image   [" << r.n << ", " << r.k_before << "]  " << distance_text(r.before) << '\n';
            os << "construction G'    [" << r.n << ", " << r.k_after << "]  " << distance_text(r.after) << '\n';
            os << "G' is " << r.rows << " x " << r.matrix.cols() << '\n';
        }
        emit(c, os.str());
    }
    return kPass;
}

// ---- table ---------------------------------------------------------------

std::string bounds(const DistanceResult& d) {
    if (d.empty) return "-";
    if (d.exact) return std::to_string(d.upper);
    return std::to_string(d.lower) + ".." + std::to_string(d.upper);
}

bool consistent(const DistanceResult& d, int want) { return !d.empty && d.lower <= want && want <= d.upper; }

int cmd_table(const Common& c, const std::string& manifest, const std::vector<int>& select) {
    auto rows = load_manifest(manifest);
    std::string fmt = format_of(c);
    DistanceOptions opt = distance_options(c);
    std::vector<RowOutcome> outs;
    for (int idx = 0; idx < static_cast<int>(rows.size()); ++idx) {
        if (!select.empty() && std::find(select.begin(), select.end(), idx) == select.end()) continue;
        outs.push_back(evaluate_row(rows[idx], opt));
        if (fmt == "text") {
            const RowOutcome& o = outs.back();
            std::cerr << "row " << idx << " " << o.label << ": " << to_string(o.status) << '\n';
        }
    }
    int rc = kPass;
    for (const auto& o : outs)
        if (o.status == RowStatus::Contradiction || o.status == RowStatus::Invalid) rc = kContradiction;

    std::ostringstream os;
    if (fmt == "json") {
        json a = json::array();
        for (const auto& o : outs) {
            json e{{"label", o.label},         {"n", o.n},
                   {"k", o.k},                 {"expect_n", o.expect_n},
                   {"expect_k", o.expect_k},   {"expect_d", o.expect_d},
                   {"path", o.path},           {"status", to_string(o.status)},
                   {"shift_closed", o.shift_closed}};
            e["plain"] = {{"lower", o.plain.lower}, {"upper", o.plain.upper}, {"exact", o.plain.exact}};
            if (o.construction_run)
                e["construction"] = {{"lower", o.construction.lower},
                                      {"upper", o.construction.upper},
                                      {"exact", o.construction.exact}};
            a.push_back(e);
        }
        os << json{{"manifest", manifest}, {"rows", a}}.dump(2);
    } else if (fmt == "csv") {
        os << "label,n,k,expect_d,plain_d,construction_d,path,status,shift_closed\n";
        for (const auto& o : outs)
            os << '"' << o.label << "\"," << o.n << ',' << o.k << ',' << o.expect_d << ',' << bounds(o.plain) << ','
               << (o.construction_run ? bounds(o.construction) : "") << ',' << o.path << ','
               << to_string(o.status) << ',' << (o.shift_closed ? "yes" : "no") << '\n';
    } else {
        for (const auto& o : outs) {
            os << o.label << "\n  computed [" << o.n << ", " << o.k << "], plain d " << bounds(o.plain);
            if (o.construction_run) os << ", construction d " << bounds(o.construction);
            os << "\n  " << to_string(o.status);
            if (o.status != RowStatus::Invalid) os << " via " << o.path;
            if (!o.shift_closed) os << " (spanning set not shift-closed)";
            os << '\n';
        }
    }
    emit(c, os.str());
    return rc;
}

// ---- verify-fixture --------------------------------------------------------

int cmd_verify_fixture(const Common& c, const std::string& path) {
    Fixture fx = read_fixture(path);
    std::string fmt = format_of(c);
    int rank = fx.matrix.rank();
    DistanceResult d = min_distance_bz(fx.matrix, distance_options(c));
    bool rank_ok = !fx.expect_rank || *fx.expect_rank == rank;
    std::string status = "match";
    if (!rank_ok) {
        status = "contradiction";
    } else if (fx.expect_d) {
        if (!consistent(d, *fx.expect_d))
            status = "contradiction";
        else if (!d.exact)
            status = "bounded";
    }
    if (fmt == "json") {
        json doc{{"fixture", path}, {"label", fx.label}, {"rows", fx.matrix.rows()}, {"cols", fx.matrix.cols()},
                 {"rank", rank}, {"status", status}};
        if (fx.expect_rank) doc["expect_rank"] = *fx.expect_rank;
        if (fx.expect_d) doc["expect_d"] = *fx.expect_d;
        doc["distance"] = distance_json(d, *fx.matrix.field());
        emit(c, doc.dump(2));
    } else {
        std::ostringstream os;
        if (!fx.label.empty()) os << fx.label << '\n';
        os << fx.matrix.field()->label() << " modulus " << fx.matrix.field()->modulus_string() << ", "
           << fx.matrix.rows() << " x " << fx.matrix.cols() << '\n';
        os << "rank " << rank;
        if (fx.expect_rank) os << " (expected " << *fx.expect_rank << ")";
        os << '\n' << distance_text(d);
        if (fx.expect_d) os << " (expected " << *fx.expect_d << ")";
        os << '\n' << status << '\n';
        emit(c, os.str());
    }
    return status == "contradiction" ? kContradiction : kPass;
}

// ---- search --------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& s, int hi_default) {
    if (s.empty()) return {0, hi_default};
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError("bad degree range '" + s + "', expected a or a:b");
    }
}

struct SearchArgs {
    int q = 0, i = 1, r = 0, s = 0;
    std::string g_deg, h_deg;
    int samples = 1;
    int max_codes = 200;
    double divisor_budget = 1e8;
    bool construction = false;
};

int cmd_search(const Common& c, const SearchArgs& a) {
    FieldPtr f = GaloisField::from_order(a.q);
    if (a.r < 1 || a.s < 1) throw ParseError("r and s must be positive");
    auto [g_lo, g_hi] = parse_range(a.g_deg, a.r);
    auto [h_lo, h_hi] = parse_range(a.h_deg, a.s);
    std::string fmt = format_of(c);
    DivisorSearchOptions dopt;
    dopt.budget = a.divisor_budget;
    dopt.workers = c.workers;
    auto divisors = [&](int n, int lo, int hi) {
        std::vector<SkewPoly> out;
        for (int d = std::max(lo, 0); d <= std::min(hi, n); ++d) {
            if (d == n) {
                out.push_back(SkewPoly::xn_minus_one(f, a.i, n));
                continue;
            }
            auto v = right_divisors_search(n, d, f, a.i, dopt);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    };
    auto gs = divisors(a.r, g_lo, g_hi);
    auto hs = divisors(a.s, h_lo, h_hi);
    std::mt19937_64 rng(c.seed.value_or(1));
    DistanceOptions opt = distance_options(c);
    GrayMatrix n = default_n(f);
    std::map<int, int> best;  // k -> best lower bound on d
    int evaluated = 0;
    json found = json::array();
    auto pick = [&rng](const std::vector<SkewPoly>& v) -> const SkewPoly& { return v[rng() % v.size()]; };
    while (!gs.empty() && !hs.empty() && evaluated < a.max_codes) {
        DoubleCodeSpec code;
        code.field = f;
        code.i = a.i;
        code.r = a.r;
        code.s = a.s;
        code.g_v = pick(gs);
        code.g_vp = pick(gs);
        code.h_v = pick(hs);
        code.h_vp = pick(hs);
        SkewPoly q_v = cofactor(code.h_v, a.s), q_vp = cofactor(code.h_vp, a.s);
        for (int t = 0; t < a.samples && evaluated < a.max_codes; ++t) {
            code.l_v = random_closed_l(code.g_v, q_v, a.r, rng);
            code.l_vp = random_closed_l(code.g_vp, q_vp, a.r, rng);
            ++evaluated;
            LinearCodeMatrix g = a.construction ? build_construction(construction_input(code, n), a.r, a.s)
                                                : gray_generator(code, n);
            int k = g.rank();
            if (k == 0) continue;
            DistanceResult d = min_distance_bz(g, opt);
            auto it = best.find(k);
            if (it != best.end() && it->second >= d.lower) continue;
            best[k] = d.lower;
            json e{{"n", g.cols()},           {"k", k},
                   {"lower", d.lower},        {"upper", d.upper},
                   {"exact", d.exact},        {"g_v", code.g_v.str()},
                   {"g_vp", code.g_vp.str()}, {"l_v", code.l_v.str()},
                   {"l_vp", code.l_vp.str()}, {"h_v", code.h_v.str()},
                   {"h_vp", code.h_vp.str()}};
            if (fmt == "json") {
                found.push_back(e);
            } else {
                std::cout << "[" << g.cols() << ", " << k << ", " << bounds(d) << "]  g = " << code.g_v.str()
                          << " ; " << code.g_vp.str() << "  l = " << code.l_v.str() << " ; " << code.l_vp.str()
                          << "  h = " << code.h_v.str() << " ; " << code.h_vp.str() << std::endl;
            }
        }
    }
    if (fmt == "json") emit(c, json{{"evaluated", evaluated}, {"improvements", found}}.dump(2));
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double skew cyclic codes over F_q + vF_q"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub, bool with_config) {
        if (with_config) sub->add_option("--config", common.config, "job config (JSON)")->required();
        sub->add_option("--budget-ops", common.budget_ops, "distance budget in enumerated codewords");
        sub->add_option("--budget-secs", common.budget_secs, "distance wall-clock budget, 0 = none");
        sub->add_flag("--long-run", common.long_run, "remove distance budgets");
        sub->add_option("--format", common.format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--seed", common.seed, "random seed");
        sub->add_option("--out", common.out, "write the report to a file");
        sub->add_option("--workers", common.workers, "worker threads, 0 = all cores");
    };

    auto* params = app.add_subcommand("params", "validate a code and report [n, k, d]");
    add_common(params, true);
    auto* dual = app.add_subcommand("dual", "dual generators and duality checks");
    add_common(dual, true);
    auto* construct = app.add_subcommand("construct", "build G' and compare distances");
    add_common(construct, true);
    std::string fixture_out;
    construct->add_option("--fixture-out", fixture_out, "write G' in the fixture format");
    auto* table = app.add_subcommand("table", "evaluate a table manifest");
    add_common(table, false);
    std::string manifest;
    std::vector<int> select_rows;
    table->add_option("manifest", manifest, "manifest (JSON)")->required();
    table->add_option("--rows", select_rows, "evaluate only these row indices");
    auto* verify = app.add_subcommand("verify-fixture", "rank and distance of a matrix fixture");
    add_common(verify, false);
    std::string fixture_path;
    verify->add_option("fixture", fixture_path, "fixture file")->required();
    auto* search = app.add_subcommand("search", "search divisor combinations for good codes");
    add_common(search, false);
    SearchArgs sa;
    search->add_option("--q", sa.q, "field order")->required();
    search->add_option("--i", sa.i, "automorphism index");
    search->add_option("--r", sa.r, "left block length")->required();
    search->add_option("--s", sa.s, "right block length")->required();
    search->add_option("--g-degree", sa.g_deg, "degree range a:b for g_v, g_v'");
    search->add_option("--h-degree", sa.h_deg, "degree range a:b for h_v, h_v'");
    search->add_option("--samples", sa.samples, "random l choices per divisor combination");
    search->add_option("--max-codes", sa.max_codes, "stop after this many codes");
    search->add_option("--divisor-budget", sa.divisor_budget, "candidate budget per divisor search");
    search->add_flag("--construction", sa.construction, "evaluate G' instead of the plain Gray image");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kInputError;
    }

    try {
        if (*params) return cmd_params(common);
        if (*dual) return cmd_dual(common);
        if (*construct) return cmd_construct(common, fixture_out);
        if (*table) return cmd_table(common, manifest, select_rows);
        if (*verify) return cmd_verify_fixture(common, fixture_path);
        if (*search) return cmd_search(common, sa);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return kBudgetRefusal;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const SpecMismatch& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kContradiction;
    }
    return kInputError;
}
