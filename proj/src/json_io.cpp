#include "lucasian/json_io.hpp"

namespace lucasian {

Json natural_json(const Natural& n) {
    if (fits_u64(n)) return Json(to_u64(n));
    return Json(n.get_str());
}

Natural natural_from_json(const Json& j) {
    if (j.is_number_unsigned()) return from_u64(j.get<std::uint64_t>());
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return from_u64(j.get<std::uint64_t>());
    if (j.is_string()) {
        Integer v = parse_integer(j.get<std::string>());
        if (sgn(v) >= 0) return v;
    }
    throw InvalidArgument("expected a nonnegative integer, got " + j.dump());
}

namespace {

Json sign_json(Sign s) { return std::string(sign_symbol(s)); }

Sign sign_from_json(const Json& j) {
    if (!j.is_string()) throw InvalidArgument("sign must be a string");
    auto s = parse_sign(j.get<std::string>());
    if (!s) throw InvalidArgument("bad sign " + j.dump());
    return *s;
}

Outcome outcome_from_name(const std::string& name) {
    for (Outcome o : {Outcome::Prime, Outcome::Composite, Outcome::NotApplicable}) {
        if (outcome_name(o) == name) return o;
    }
    throw InvalidArgument("bad verdict " + name);
}

Json congruence_json(const Congruence& c) { return Json{{"modulus", c.modulus}, {"residues", c.residues}}; }

Json signs_json(const std::vector<Sign>& signs) {
    Json out = Json::array();
    for (Sign s : signs) out.push_back(sign_json(s));
    return out;
}

}  // namespace

Json to_json(const VerificationReport& report) {
    Json mismatches = Json::array();
    for (const auto& mm : report.mismatches) {
        mismatches.push_back(
            {{"numerator", mm.numerator}, {"n", mm.n}, {"expected", to_int(mm.expected)}, {"got", to_int(mm.got)}});
    }
    Json j{{"target", "lemmas"},
           {"limit", report.limit},
           {"odd_values", report.odd_values},
           {"numerators", report.numerators},
           {"comparisons", report.comparisons},
           {"mismatches", mismatches},
           {"clean", report.clean()}};
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

Json to_json(const ConsistencyReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back({{"k", v.k},
                              {"m", v.m},
                              {"n", v.n},
                              {"jacobi_2_plus_b", to_int(v.plus_symbol)},
                              {"jacobi_2_minus_b", to_int(v.minus_symbol)}});
    }
    return Json{{"rule", report.rule},
                {"k_lattice", report.k_lattice},
                {"m_lattice", report.m_lattice},
                {"residue_classes", report.residue_classes},
                {"witnesses", report.witnesses},
                {"n_mod_24", report.n_mod_24},
                {"n_mod_40", report.n_mod_40},
                {"violations", violations},
                {"clean", report.clean()}};
}

Json to_json(const CrossCheckReport& report) {
    Json per_rule = Json::object();
    for (const auto& [name, t] : report.per_rule) {
        per_rule[name] = {{"cases", t.cases}, {"primes", t.primes}, {"composites", t.composites}};
    }
    Json disagreements = Json::array();
    for (const auto& d : report.disagreements) {
        Json item{{"k", natural_json(d.k)},
                  {"m", d.m},
                  {"sign", sign_json(d.sign)},
                  {"rule", d.rule},
                  {"lucasian", outcome_name(d.lucasian)},
                  {"against", d.against}};
        if (d.oracle) item["oracle"] = oracle_outcome_name(*d.oracle);
        disagreements.push_back(std::move(item));
    }
    const auto& o = report.options;
    Json j{{"mode", o.mode == CrossCheckMode::ClassRules ? "class-rules" : "generic"},
           {"m_min", o.m_min},
           {"m_max", o.m_max},
           {"signs", signs_json(o.signs)}};
    if (o.mode == CrossCheckMode::Generic) {
        j["b_max"] = o.b_max;
        j["c_max"] = o.c_max;
        j["class_comparisons"] = report.class_comparisons;
    }
    j["cases"] = report.cases;
    j["primes"] = report.primes;
    j["composites"] = report.composites;
    j["per_rule"] = per_rule;
    j["disagreements"] = disagreements;
    j["clean"] = report.clean();
    return j;
}

Json to_json(const ClassRule& rule) {
    Json branches = Json::array();
    for (const auto& br : rule.branches) {
        Json ks = Json::array();
        for (const auto& c : br.k_conditions) ks.push_back(congruence_json(c));
        branches.push_back({{"k", ks}, {"m", congruence_json(br.m_condition)}});
    }
    Json j{{"id", rule.name()}, {"sign", sign_json(rule.sign)}, {"b", rule.b}, {"c", 1}};
    j["k_divisor"] = rule.k_divisor ? Json(*rule.k_divisor) : Json(nullptr);
    j["branches"] = branches;
    return j;
}

Json rule_table_json() {
    Json out = Json::array();
    for (const ClassRule& r : rule_table()) out.push_back(to_json(r));
    return out;
}

Json to_json(const Verdict& verdict) {
    Json j{{"verdict", outcome_name(verdict.outcome)}, {"rule", verdict.rule}};
    if (verdict.params) {
        j["b"] = verdict.params->b.get_str();
        j["c"] = verdict.params->c.get_str();
    }
    if (verdict.trace) {
        j["steps"] = verdict.trace->steps;
    }
    if (verdict.witness) j["witness"] = natural_json(*verdict.witness);
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    return j;
}

Json to_json(const ResultRecord& r) {
    Json j{{"k", natural_json(r.k)},
           {"m", r.m},
           {"sign", sign_json(r.sign)},
           {"digits", r.digits},
           {"verdict", outcome_name(r.outcome)},
           {"rule", r.rule}};
    if (r.witness) j["witness"] = natural_json(*r.witness);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

ResultRecord record_from_json(const Json& j) {
    ResultRecord r;
    r.k = natural_from_json(j.at("k"));
    r.m = j.at("m").get<std::uint64_t>();
    r.sign = sign_from_json(j.at("sign"));
    r.digits = j.at("digits").get<std::size_t>();
    r.outcome = outcome_from_name(j.at("verdict").get<std::string>());
    r.rule = j.at("rule").get<std::string>();
    if (j.contains("witness")) r.witness = natural_from_json(j.at("witness"));
    if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

Json to_json(const ScanCheckpoint& c) {
    Json found = Json::array();
    for (const auto& r : c.found) found.push_back(to_json(r));
    Json cursor = nullptr;
    if (c.cursor) cursor = {{"k", natural_json(c.cursor->k)}, {"m", c.cursor->m}, {"sign", sign_json(c.cursor->sign)}};
    return Json{{"schema_version", c.schema_version},
                {"range",
                 {{"k_min", natural_json(c.range.k_min)},
                  {"k_max", natural_json(c.range.k_max)},
                  {"m_min", c.range.m_min},
                  {"m_max", c.range.m_max},
                  {"signs", signs_json(c.range.signs)}}},
                {"cursor", cursor},
                {"processed", c.processed},
                {"found", found}};
}

ScanCheckpoint checkpoint_from_json(const Json& j) {
    try {
        if (!j.is_object() || !j.contains("schema_version")) throw CheckpointError("checkpoint has no schema_version");
        const Json& version = j.at("schema_version");
        if (!version.is_number_integer() || version.get<int>() != kCheckpointSchemaVersion) {
            throw CheckpointError("unsupported checkpoint schema_version " + version.dump());
        }
        ScanCheckpoint c;
        const Json& range = j.at("range");
        c.range.k_min = natural_from_json(range.at("k_min"));
        c.range.k_max = natural_from_json(range.at("k_max"));
        c.range.m_min = range.at("m_min").get<std::uint64_t>();
        c.range.m_max = range.at("m_max").get<std::uint64_t>();
        c.range.signs.clear();
        for (const Json& s : range.at("signs")) c.range.signs.push_back(sign_from_json(s));
        const Json& cursor = j.at("cursor");
        if (!cursor.is_null()) {
            c.cursor = ScanCursor{natural_from_json(cursor.at("k")), cursor.at("m").get<std::uint64_t>(),
                                  sign_from_json(cursor.at("sign"))};
        }
        c.processed = j.at("processed").get<std::uint64_t>();
        for (const Json& r : j.at("found")) c.found.push_back(record_from_json(r));
        return c;
    } catch (const CheckpointError&) {
        throw;
    } catch (const std::exception& e) {
        throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
    }
}

}  // namespace lucasian
