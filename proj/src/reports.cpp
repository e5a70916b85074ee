#include "reports.hpp"

#include <sstream>
#include <stdexcept>

namespace joints {

namespace {

std::vector<std::pair<std::string, std::string>> parse_lines(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t colon = line.find(": ");
        if (colon == std::string::npos) throw ParseError("report parse error: bad line \"" + line + "\"");
        fields.emplace_back(line.substr(0, colon), line.substr(colon + 2));
    }
    return fields;
}

std::uint64_t to_u64(const std::string& s) {
    return std::stoull(s);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

std::string join_csv(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(',');
        out += items[i];
    }
    return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::vacuous: return "vacuous";
        case Verdict::violated: return "violated";
        case Verdict::extremal_case: return "extremal_case";
    }
    return "?";
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "holds") return Verdict::holds;
    if (name == "vacuous") return Verdict::vacuous;
    if (name == "violated") return Verdict::violated;
    if (name == "extremal_case") return Verdict::extremal_case;
    throw ParseError("unknown verdict: " + name);
}

mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational: " + text);
    if (q.get_den() == 0) throw ParseError("bad rational (zero denominator): " + text);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const mpq_class& q) {
    return q.get_str();
}

std::string emit_report(const CheckReport& r) {
    std::ostringstream out;
    out << "schema: " << kReportSchema << "\n";
    out << "type: check\n";
    out << "property: " << r.property << "\n";
    out << "instance: " << r.instance << "\n";
    out << "hypothesis: " << (r.hypothesis_holds ? "true" : "false") << "\n";
    if (r.branch) out << "branch: " << *r.branch << "\n";
    if (r.residual) out << "residual: " << rational_to_string(*r.residual) << "\n";
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.witness_edge) out << "witness-edge: " << r.witness_edge->first << " " << r.witness_edge->second << "\n";
    if (r.witness_count) out << "witness-count: " << r.witness_count->get_str() << "\n";
    if (r.exploratory) out << "exploratory: " << (*r.exploratory ? "true" : "false") << "\n";
    return out.str();
}

std::string emit_report(const SweepSummary& s) {
    std::ostringstream out;
    out << "schema: " << kReportSchema << "\n";
    out << "type: sweep\n";
    out << "properties: " << join_csv(s.properties) << "\n";
    out << "instances: " << s.instances << "\n";
    out << "violations: " << s.violations.size() << "\n";
    for (const auto& v : s.violations) out << "violation: " << v << "\n";
    out << "wall-ms: " << s.wall_ms << "\n";
    return out.str();
}

std::string emit_report(const ProbeResult& p) {
    std::ostringstream out;
    out << "schema: " << kReportSchema << "\n";
    out << "type: probe\n";
    out << "n: " << p.n << "\n";
    out << "r: " << p.r << "\n";
    out << "s: " << p.s << "\n";
    out << "steps: " << p.steps << "\n";
    out << "seed: " << p.seed << "\n";
    out << "best-js: " << p.best_js.get_str() << "\n";
    out << "ratio: " << rational_to_string(p.ratio) << "\n";
    out << "graph6: " << p.graph6 << "\n";
    return out.str();
}

std::string emit_report(const Report& report) {
    return std::visit([](const auto& r) { return emit_report(r); }, report);
}

Report parse_report(const std::string& text) {
    const auto fields = parse_lines(text);
    auto get = [&](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : fields)
            if (k == key) return v;
        throw ParseError("report missing field: " + key);
    };
    auto find = [&](const std::string& key) -> const std::string* {
        for (const auto& [k, v] : fields)
            if (k == key) return &v;
        return nullptr;
    };
    if (to_u64(get("schema")) != kReportSchema) throw ParseError("unsupported report schema");
    const std::string& type = get("type");
    if (type == "check") {
        CheckReport r;
        r.property = get("property");
        r.instance = get("instance");
        r.hypothesis_holds = get("hypothesis") == "true";
        if (const auto* b = find("branch")) r.branch = *b;
        if (const auto* res = find("residual")) r.residual = parse_rational(*res);
        r.verdict = verdict_from_name(get("verdict"));
        if (const auto* w = find("witness-edge")) {
            std::istringstream ws(*w);
            int u, v;
            if (!(ws >> u >> v)) throw ParseError("bad witness-edge: " + *w);
            r.witness_edge = {u, v};
        }
        if (const auto* c = find("witness-count")) r.witness_count = mpz_class(*c);
        if (const auto* e = find("exploratory")) r.exploratory = (*e == "true");
        return r;
    }
    if (type == "sweep") {
        SweepSummary s;
        s.properties = split_csv(get("properties"));
        s.instances = to_u64(get("instances"));
        const std::uint64_t declared = to_u64(get("violations"));
        for (const auto& [k, v] : fields)
            if (k == "violation") s.violations.push_back(v);
        if (declared != s.violations.size()) throw ParseError("violation count mismatch");
        s.wall_ms = to_u64(get("wall-ms"));
        return s;
    }
    if (type == "probe") {
        ProbeResult p;
        p.n = static_cast<int>(to_u64(get("n")));
        p.r = static_cast<int>(to_u64(get("r")));
        p.s = static_cast<int>(to_u64(get("s")));
        p.steps = to_u64(get("steps"));
        p.seed = to_u64(get("seed"));
        p.best_js = mpz_class(get("best-js"));
        p.ratio = parse_rational(get("ratio"));
        p.graph6 = get("graph6");
        return p;
    }
    throw ParseError("unknown report type: " + type);
}

}  // namespace joints
