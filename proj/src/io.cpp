#include "friezelab/io.hpp"

#include <fstream>
#include <string>

#include "friezelab/error.hpp"

namespace friezelab::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

bool is_decimal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

int small_int(const json& j) {
    const Integer v = integer_from_json(j);
    if (!v.fits_sint_p()) parse_error("integer out of range");
    return static_cast<int>(v.get_si());
}

std::size_t vertex_ref(const json& j, const Quiver& q) {
    if (j.is_string()) return q.vertex(j.get<std::string>());
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= q.size()) parse_error("vertex index out of range");
        return static_cast<std::size_t>(v);
    }
    parse_error("vertex must be a label or an index");
}

}  // namespace

json integer_to_json(const Integer& v) { return to_decimal(v); }

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (!is_decimal(s)) parse_error("'" + s + "' is not a decimal integer");
        return integer_from_decimal(s);
    }
    parse_error("expected an integer");
}

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [exp, coef] : p.terms()) terms.push_back({{"exp", exp}, {"coef", to_decimal(coef)}});
    return {{"vars", p.vars().names()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
    const VarList vars(field(j, "vars").get<std::vector<std::string>>());
    LaurentPoly p(vars);
    for (const auto& t : field(j, "terms")) {
        const auto exp = field(t, "exp").get<Exponent>();
        if (exp.size() != vars.size()) parse_error("exponent length does not match variable count");
        p.add_term(exp, integer_from_json(field(t, "coef")));
    }
    return p;
}

json quiver_to_json(const Quiver& q, const std::vector<bool>& frozen) {
    json fz = json::array();
    for (std::size_t i = 0; i < frozen.size(); ++i)
        if (frozen[i]) fz.push_back(q.labels()[i]);
    return {{"labels", q.labels()}, {"b", q.matrix()}, {"frozen", fz}};
}

QuiverFile quiver_from_json(const json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    ExchangeMatrix b;
    for (const auto& row : field(j, "b")) {
        std::vector<int> r;
        for (const auto& x : row) r.push_back(small_int(x));
        b.push_back(std::move(r));
    }
    QuiverFile out{Quiver(std::move(b), std::move(labels)), {}};
    out.frozen.assign(out.quiver.size(), false);
    if (j.contains("frozen")) {
        for (const auto& f : j.at("frozen")) out.frozen[vertex_ref(f, out.quiver)] = true;
    }
    return out;
}

json rep_to_json(const QuiverRep& m) {
    json maps = json::array();
    for (const auto& a : m.maps()) {
        json mat = json::array();
        for (const auto& row : a.matrix) {
            json r = json::array();
            for (const auto& x : row) {
                if (const auto* v = std::get_if<Integer>(&x)) {
                    r.push_back(to_decimal(*v));
                } else {
                    r.push_back(std::get<std::string>(x));
                }
            }
            mat.push_back(std::move(r));
        }
        maps.push_back({{"arrow", {m.quiver().labels()[a.tail], m.quiver().labels()[a.head]}}, {"matrix", mat}});
    }
    json params = json::object();
    for (const auto& [k, v] : m.params()) params[k] = to_decimal(v);
    return {{"quiver", quiver_to_json(m.quiver())}, {"dims", m.dims()}, {"maps", maps}, {"params", params}};
}

QuiverRep rep_from_json(const json& j, const std::optional<Quiver>& fallback) {
    Quiver q;
    if (j.contains("quiver")) {
        q = quiver_from_json(j.at("quiver")).quiver;
    } else if (fallback) {
        q = *fallback;
    } else {
        parse_error("representation has no quiver");
    }
    DimVector dims;
    for (const auto& d : field(j, "dims")) dims.push_back(small_int(d));
    std::map<std::string, Integer> params;
    if (j.contains("params")) {
        for (const auto& [k, v] : j.at("params").items()) params.emplace(k, integer_from_json(v));
    }
    std::vector<ArrowMap> maps;
    if (j.contains("maps")) {
        for (const auto& a : j.at("maps")) {
            const auto& arrow = field(a, "arrow");
            if (!arrow.is_array() || arrow.size() != 2) parse_error("arrow must be [tail, head]");
            ArrowMap am{vertex_ref(arrow[0], q), vertex_ref(arrow[1], q), {}};
            for (const auto& row : field(a, "matrix")) {
                std::vector<MatrixEntry> r;
                for (const auto& x : row) {
                    if (x.is_string() && !is_decimal(x.get<std::string>())) {
                        r.emplace_back(x.get<std::string>());
                    } else {
                        r.emplace_back(integer_from_json(x));
                    }
                }
                am.matrix.push_back(std::move(r));
            }
            maps.push_back(std::move(am));
        }
    }
    return QuiverRep(std::move(q), std::move(dims), std::move(maps), std::move(params));
}

std::vector<QuiverRep> tube_from_json(const json& j, const std::optional<Quiver>& fallback) {
    std::optional<Quiver> q = fallback;
    if (j.contains("quiver")) q = quiver_from_json(j.at("quiver")).quiver;
    std::vector<QuiverRep> out;
    for (const auto& r : field(j, "reps")) out.push_back(rep_from_json(r, q));
    if (out.empty()) parse_error("tube has no representations");
    return out;
}

json seed_to_json(const Seed& s) {
    json vars = json::array();
    for (const auto& v : s.vars) vars.push_back(v.to_string());
    return {{"quiver", quiver_to_json(s.quiver, s.frozen)}, {"vars", vars}};
}

json frieze_to_json(const FriezePattern& f, const std::vector<unsigned>& growth_indices) {
    json q = json::array();
    for (const auto& a : f.quiddity().entries()) q.push_back(to_decimal(a));
    json rows = json::array();
    for (int r = 1; r <= f.depth(); ++r) {
        json row = json::array();
        for (const auto& x : f.row(r)) row.push_back(to_decimal(x));
        rows.push_back(std::move(row));
    }
    json out{{"quiddity", q}, {"rows", rows}};
    if (!growth_indices.empty()) {
        json g = json::object();
        for (unsigned k : growth_indices) g[std::to_string(k)] = to_decimal(growth(f, k));
        out["growth"] = g;
    }
    return out;
}

json table_to_json(const GrassmannianTable& t) {
    json rows = json::array();
    for (const auto& r : t) rows.push_back({{"e", r.e}, {"chi", to_decimal(r.chi)}, {"held_out_prime", r.held_out}});
    return rows;
}

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::FixtureMissing, "cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

}  // namespace friezelab::io
