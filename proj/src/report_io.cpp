#include "brcover/report_io.hpp"

#include <sstream>

namespace brcover {

namespace {

// 2^53 - 1
const Integer kMaxSafeInteger("9007199254740991");

std::string pad(const std::string& s, std::size_t width)
{
    return s + std::string(s.size() + 2 > width ? 2 : width - s.size(), ' ');
}

Json parameter_value(const ParameterValue& v)
{
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return format_rational(x);
            else
                return x;
        },
        v);
}

std::string parameter_text(const ParameterValue& v)
{
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>)
                return format_rational(x);
            else if constexpr (std::is_same_v<T, bool>)
                return x ? "true" : "false";
            else if constexpr (std::is_same_v<T, long>)
                return std::to_string(x);
            else
                return x;
        },
        v);
}

Json checks_to_json(const std::vector<Check>& checks)
{
    Json out = Json::array();
    for (const auto& c : checks)
        out.push_back({{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}, {"source", c.source}});
    return out;
}

void checks_to_table(std::ostream& os, const std::vector<Check>& checks)
{
    os << "verdicts\n";
    for (const auto& c : checks)
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << pad(c.name, 42) << c.evidence << "  [" << c.source << "]\n";
}

std::string optional_text(const std::optional<Integer>& x) { return x ? x->get_str() : "n/a"; }

long require_long(const Json& j, const std::string& key)
{
    if (!j.is_number_integer()) throw DomainError("'" + key + "' must be an integer");
    return j.get<long>();
}

bool require_bool(const Json& j, const std::string& key)
{
    if (!j.is_boolean()) throw DomainError("'" + key + "' must be a boolean");
    return j.get<bool>();
}

Rational rational_from_json(const Json& j, const std::string& key)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw DomainError("'" + key + "' must be an integer or a \"p/q\" string");
}

}  // namespace

// ---------------------------------------------------------------------------

Json integer_to_json(const Integer& x)
{
    if (abs(x) <= kMaxSafeInteger) return x.get_si();
    return x.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer x;
        const auto s = j.get<std::string>();
        if (s.empty() || x.set_str(s, 10) != 0) throw DomainError("not a decimal integer: '" + s + "'");
        return x;
    }
    throw DomainError("matrix entries must be integers or decimal strings");
}

Json matrix_to_json(const IntMatrix& m)
{
    Json entries = Json::array();
    for (const auto& x : m.entries()) entries.push_back(integer_to_json(x));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntMatrix matrix_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw DomainError("matrix JSON needs \"rows\", \"cols\" and \"entries\"");
    const long rows = require_long(j.at("rows"), "rows");
    const long cols = require_long(j.at("cols"), "cols");
    if (rows < 0 || cols < 0) throw DomainError("matrix shape must be nonnegative");
    if (!j.at("entries").is_array()) throw DomainError("\"entries\" must be an array");
    std::vector<Integer> entries;
    for (const auto& e : j.at("entries")) entries.push_back(integer_from_json(e));
    return IntMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

Json snf_to_json(const IntMatrix& input, const SnfResult& r)
{
    Json divisors = Json::array();
    for (const auto& x : r.divisors()) divisors.push_back(integer_to_json(x));
    return {{"input", matrix_to_json(input)}, {"u", matrix_to_json(r.u)},    {"d", matrix_to_json(r.d)},
            {"v", matrix_to_json(r.v)},        {"divisors", divisors},        {"rank", rank(input)}};
}

std::string snf_to_table(const IntMatrix& input, const SnfResult& r)
{
    std::ostringstream os;
    os << "input     " << to_string(input) << "\n"
       << "u         " << to_string(r.u) << "\n"
       << "d         " << to_string(r.d) << "\n"
       << "v         " << to_string(r.v) << "\n"
       << "divisors ";
    for (const auto& x : r.divisors()) os << ' ' << x.get_str();
    os << "\nrank      " << rank(input) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

Json report_to_json(const CoverReport& r)
{
    Json params = Json::object();
    for (const auto& p : r.parameters) params[p.name] = parameter_value(p.value);

    Json invariants = Json::object();
    invariants["euler_characteristic"] = {{"value", integer_to_json(r.cover_euler)}, {"source", "riemann_hurwitz_euler"}};
    invariants["b1"] = {{"value", r.cover_b1 ? Json(*r.cover_b1) : Json(nullptr)}, {"source", "abelianized_b1"}};
    invariants["pi_lower_bound"] = {{"value", r.pi_lower_bound ? integer_to_json(*r.pi_lower_bound) : Json(nullptr)},
                                    {"source", "pi_dimension_bound"}};
    invariants["omega_vanishes_on_pi"] = {{"value", r.omega_vanishes_on_pi.vanishes},
                                          {"evidence", r.omega_vanishes_on_pi.evidence},
                                          {"source", r.omega_vanishes_on_pi.source}};
    invariants["c1_vanishes_on_pi"] = {{"value", r.c1_vanishes_on_pi.vanishes},
                                       {"evidence", r.c1_vanishes_on_pi.evidence},
                                       {"source", r.c1_vanishes_on_pi.source}};
    invariants["kaehler"] = {{"value", r.kaehler}, {"source", "build_cyclic_cover"}};

    Json pairings = Json::array();
    for (const auto& p : r.chern_pairings) {
        pairings.push_back({{"generator", p.generator},
                            {"omega", format_rational(p.omega)},
                            {"c1", integer_to_json(p.c1)},
                            {"source", "lift_omega_pairing, lift_chern_pairing"}});
    }

    Json out = Json::object();
    out["family"] = r.family;
    out["parameters"] = params;
    out["invariants"] = invariants;
    out["pairings"] = pairings;
    out["verdicts"] = checks_to_json(r.formula_cross_checks);
    out["assumptions"] = r.assumptions;
    return out;
}

std::string report_to_table(const CoverReport& r)
{
    std::ostringstream os;
    os << "family      " << r.family << "\n";
    os << "parameters ";
    for (const auto& p : r.parameters) os << ' ' << p.name << '=' << parameter_text(p.value);
    os << "\n\n";

    os << pad("generator", 44) << pad("omega", 16) << "c1\n";
    os << std::string(42, '-') << "  " << std::string(14, '-') << "  " << std::string(10, '-') << "\n";
    for (const auto& p : r.chern_pairings)
        os << pad(p.generator, 44) << pad(format_rational(p.omega), 16) << p.c1.get_str() << "\n";

    os << "\nsummary\n";
    auto row = [&](const std::string& name, const std::string& value, const std::string& source) {
        os << "  " << pad(name, 26) << pad(value, 14) << source << "\n";
    };
    row("euler_characteristic", r.cover_euler.get_str(), "riemann_hurwitz_euler");
    row("b1", r.cover_b1 ? std::to_string(*r.cover_b1) : "n/a", "abelianized_b1");
    row("pi_lower_bound", optional_text(r.pi_lower_bound), "pi_dimension_bound");
    row("omega_vanishes_on_pi", r.omega_vanishes_on_pi.vanishes ? "yes" : "no", r.omega_vanishes_on_pi.source);
    row("c1_vanishes_on_pi", r.c1_vanishes_on_pi.vanishes ? "yes" : "no", r.c1_vanishes_on_pi.source);
    row("kaehler", r.kaehler ? "yes" : "no", "build_cyclic_cover");
    os << "\n";
    checks_to_table(os, r.formula_cross_checks);
    os << "\nassumptions\n";
    for (const auto& a : r.assumptions) os << "  - " << a << "\n";
    return os.str();
}

Json tower_to_json(long d, const Tower& t)
{
    Json out = Json::object();
    out["family"] = "tower7";
    out["parameters"] = {{"d", d}};
    out["witness"] = t.witness_label;
    out["stages"] = Json::array({report_to_json(t.stage1_report), report_to_json(t.stage2_report)});
    return out;
}

std::string tower_to_table(long d, const Tower& t)
{
    std::ostringstream os;
    os << "tower7 (d=" << d << "), witness " << t.witness_label << "\n\n";
    os << "=== stage 1 ===\n" << report_to_table(t.stage1_report);
    os << "\n=== stage 2 ===\n" << report_to_table(t.stage2_report);
    return os.str();
}

namespace {
const char* pairing_name(Pairing p) { return p == Pairing::zero ? "zero" : "nonzero"; }
}  // namespace

Json catalog_to_json(const Catalog& c)
{
    Json entries = Json::array();
    for (const auto& e : c.entries) {
        entries.push_back({{"name", e.name},
                           {"omega_on_pi", pairing_name(e.omega_on_pi)},
                           {"c1_on_pi", pairing_name(e.c1_on_pi)},
                           {"witness", e.witness},
                           {"live", e.live},
                           {"pass", e.pass},
                           {"evidence", e.evidence}});
    }
    Json out = Json::object();
    out["family"] = "catalog";
    out["parameters"] = {{"d", c.d}};
    out["entries"] = entries;
    out["verdicts"] = checks_to_json(c.checks);
    return out;
}

std::string catalog_to_table(const Catalog& c)
{
    std::ostringstream os;
    os << "independence catalog (tower degree d=" << c.d << ")\n\n";
    os << pad("omega|Pi", 10) << pad("c1|Pi", 10) << pad("source", 8) << pad("status", 8) << "entry\n";
    for (const auto& e : c.entries) {
        os << pad(pairing_name(e.omega_on_pi), 10) << pad(pairing_name(e.c1_on_pi), 10)
           << pad(e.live ? "live" : "cited", 8) << pad(e.pass ? "PASS" : "FAIL", 8) << e.name << "\n"
           << std::string(36, ' ') << e.witness << "; " << e.evidence << "\n";
    }
    os << "\n";
    checks_to_table(os, c.checks);
    return os.str();
}

Json kollar_to_json(const KollarVerdict& v)
{
    Json out = Json::object();
    out["family"] = "kollar";
    out["parameters"] = {{"omega_pullback", v.omega_pullback}, {"target_pi2_trivial", v.target_pi2_trivial}};
    out["concluded"] = v.concluded;
    out["conclusion"] = v.conclusion;
    out["failed_hypotheses"] = v.failed_hypotheses;
    return out;
}

std::string kollar_to_table(const KollarVerdict& v)
{
    std::ostringstream os;
    os << "omega_pullback      " << (v.omega_pullback ? "true" : "false") << "\n"
       << "target_pi2_trivial  " << (v.target_pi2_trivial ? "true" : "false") << "\n"
       << "conclusion          " << v.conclusion << "\n";
    for (const auto& h : v.failed_hypotheses) os << "  failed hypothesis: " << h << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------

Command parse_command(const std::string& name)
{
    if (name == "example2") return Command::example2;
    if (name == "kodaira-thurston") return Command::kodaira_thurston;
    if (name == "tower7") return Command::tower7;
    if (name == "catalog") return Command::catalog;
    if (name == "kollar") return Command::kollar;
    if (name == "snf") return Command::snf;
    throw DomainError("unknown command '" + name + "'");
}

std::string command_name(Command c)
{
    switch (c) {
    case Command::example2: return "example2";
    case Command::kodaira_thurston: return "kodaira-thurston";
    case Command::tower7: return "tower7";
    case Command::catalog: return "catalog";
    case Command::kollar: return "kollar";
    case Command::snf: return "snf";
    }
    return "unknown";
}

RunConfig run_config_from_json(const Json& j)
{
    if (!j.is_object()) throw DomainError("batch entries must be JSON objects");
    if (!j.contains("command") || !j.at("command").is_string()) throw DomainError("batch entry needs a \"command\"");
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "command") cfg.command = parse_command(value.get<std::string>());
        else if (key == "g1") cfg.g1 = require_long(value, key);
        else if (key == "g2") cfg.g2 = require_long(value, key);
        else if (key == "m1") cfg.m1 = require_long(value, key);
        else if (key == "m2") cfg.m2 = require_long(value, key);
        else if (key == "d") cfg.d = require_long(value, key);
        else if (key == "area1") cfg.area1 = rational_from_json(value, key);
        else if (key == "area2") cfg.area2 = rational_from_json(value, key);
        else if (key == "kaehler") cfg.kaehler = require_bool(value, key);
        else if (key == "omega_pullback") cfg.omega_pullback = require_bool(value, key);
        else if (key == "target_pi2_trivial") cfg.target_pi2_trivial = require_bool(value, key);
        else if (key == "matrix") {
            if (!value.is_string()) throw DomainError("'matrix' must be a path string");
            cfg.matrix_path = value.get<std::string>();
        } else {
            throw DomainError("unknown batch key '" + key + "'");
        }
    }
    return cfg;
}

std::vector<RunConfig> batch_from_json(const Json& j)
{
    if (!j.is_array()) throw DomainError("batch file must hold a JSON array of run configurations");
    std::vector<RunConfig> out;
    for (const auto& e : j) out.push_back(run_config_from_json(e));
    return out;
}

}  // namespace brcover
