#include "dsc/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dsc/error.hpp"

namespace dsc {

namespace {

using json = nlohmann::json;

const char* const kPolyKeys[6] = {"g_v", "g_vp", "l_v", "l_vp", "h_v", "h_vp"};

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ParseError("unknown key '" + it.key() + "' in " + where);
}

template <class T>
T need(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ParseError("missing key '" + std::string(key) + "' in " + where);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
    }
}

std::string element_token(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("field element must be a string or integer");
}

JobConfig job_from_json(const json& j) {
    reject_unknown(j,
                   {"label", "field", "i", "r", "s", "g_v", "g_vp", "l_v", "l_vp", "h_v", "h_vp", "gray",
                    "budget_ops", "budget_secs", "format"},
                   "config");
    JobConfig job;
    if (j.contains("label")) job.label = need<std::string>(j, "label", "config");
    const json& fj = j.contains("field") ? j.at("field") : throw ParseError("missing key 'field' in config");
    reject_unknown(fj, {"p", "m", "modulus", "label"}, "field");
    job.field_cfg.p = need<int>(fj, "p", "field");
    job.field_cfg.m = need<int>(fj, "m", "field");
    if (fj.contains("modulus")) job.field_cfg.modulus = need<std::vector<int>>(fj, "modulus", "field");
    if (fj.contains("label")) job.field_cfg.label = need<std::string>(fj, "label", "field");
    try {
        job.field = job.field_cfg.modulus
                        ? GaloisField::make(job.field_cfg.p, job.field_cfg.m, *job.field_cfg.modulus)
                        : GaloisField::make_default(job.field_cfg.p, job.field_cfg.m);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("field: ") + e.what());
    }
    job.field_cfg.modulus = job.field->modulus();
    job.i = need<int>(j, "i", "config");
    job.r = need<int>(j, "r", "config");
    job.s = need<int>(j, "s", "config");
    if (job.r < 1 || job.s < 1) throw ParseError("r and s must be positive");
    for (int k = 0; k < 6; ++k) job.polys[k] = need<std::string>(j, kPolyKeys[k], "config");
    if (j.contains("gray")) {
        const json& g = j.at("gray");
        if (!g.is_array() || g.size() != 4) throw ParseError("gray must list four entries n00, n01, n10, n11");
        std::array<std::string, 4> e;
        for (int k = 0; k < 4; ++k) e[k] = element_token(g[k]);
        job.gray = e;
    }
    if (j.contains("budget_ops")) job.budget_ops = need<double>(j, "budget_ops", "config");
    if (j.contains("budget_secs")) job.budget_secs = need<double>(j, "budget_secs", "config");
    if (j.contains("format")) job.format = need<std::string>(j, "format", "config");
    // Surface polynomial and Gray errors at load time.
    (void)job.code();
    (void)job.gray_matrix();
    return job;
}

json job_json(const JobConfig& job) {
    json j;
    if (!job.label.empty()) j["label"] = job.label;
    json f;
    f["p"] = job.field_cfg.p;
    f["m"] = job.field_cfg.m;
    f["modulus"] = job.field->modulus();
    f["label"] = job.field_cfg.label.empty() ? job.field->label() : job.field_cfg.label;
    j["field"] = f;
    j["i"] = job.i;
    j["r"] = job.r;
    j["s"] = job.s;
    DoubleCodeSpec c = job.code();
    const SkewPoly* ps[6] = {&c.g_v, &c.g_vp, &c.l_v, &c.l_vp, &c.h_v, &c.h_vp};
    for (int k = 0; k < 6; ++k) j[kPolyKeys[k]] = ps[k]->str();
    if (job.gray) {
        GrayMatrix n = job.gray_matrix();
        j["gray"] = {n.n00.str(), n.n01.str(), n.n10.str(), n.n11.str()};
    }
    if (job.budget_ops) j["budget_ops"] = *job.budget_ops;
    if (job.budget_secs) j["budget_secs"] = *job.budget_secs;
    if (job.format) j["format"] = *job.format;
    return j;
}

json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

DoubleCodeSpec JobConfig::code() const {
    DoubleCodeSpec c;
    c.field = field;
    c.i = i;
    c.r = r;
    c.s = s;
    SkewPoly* ps[6] = {&c.g_v, &c.g_vp, &c.l_v, &c.l_vp, &c.h_v, &c.h_vp};
    for (int k = 0; k < 6; ++k) {
        try {
            *ps[k] = parse_poly(field, i, polys[k]);
        } catch (const ParseError& e) {
            throw ParseError(std::string(kPolyKeys[k]) + ": " + e.what());
        }
    }
    return c;
}

GrayMatrix JobConfig::gray_matrix() const {
    if (!gray) return default_n(field);
    auto el = [this](const std::string& t) { return parse_element(field, t); };
    try {
        return make_gray(el((*gray)[0]), el((*gray)[1]), el((*gray)[2]), el((*gray)[3]));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("gray: ") + e.what());
    }
}

JobConfig parse_job(std::string_view json_text) { return job_from_json(parse_json_text(json_text)); }

JobConfig load_job(const std::string& path) { return parse_job(read_text_file(path)); }

std::string job_to_json(const JobConfig& job, int indent) { return job_json(job).dump(indent); }

std::vector<TableRow> parse_manifest(std::string_view json_text) {
    json j = parse_json_text(json_text);
    reject_unknown(j, {"rows", "label"}, "manifest");
    if (!j.contains("rows") || !j.at("rows").is_array()) throw ParseError("manifest needs a 'rows' array");
    std::vector<TableRow> out;
    int idx = 0;
    for (const json& row : j.at("rows")) {
        std::string where = "row " + std::to_string(idx++);
        reject_unknown(row, {"label", "config", "expect", "starred"}, where);
        TableRow t;
        if (row.contains("label")) t.label = need<std::string>(row, "label", where);
        if (!row.contains("config")) throw ParseError("missing key 'config' in " + where);
        t.job = job_from_json(row.at("config"));
        if (!row.contains("expect")) throw ParseError("missing key 'expect' in " + where);
        const json& e = row.at("expect");
        reject_unknown(e, {"n", "k", "d"}, where + " expect");
        t.n = need<int>(e, "n", where);
        t.k = need<int>(e, "k", where);
        t.d = need<int>(e, "d", where);
        if (row.contains("starred")) t.starred = need<bool>(row, "starred", where);
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<TableRow> load_manifest(const std::string& path) { return parse_manifest(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace dsc
