#include "hopfx/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hopfx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string quote(const std::string& s) { return json(s).dump(); }

// ---- canonical writer pieces -------------------------------------------

void put_string_array(std::string& out, const std::vector<std::string>& v) {
    out += '[';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += quote(v[i]);
    }
    out += ']';
}

void put_vec(std::string& out, const Vec& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    for (const Scalar& c : v) s.push_back(c.str());
    put_string_array(out, s);
}

ordered_json field_to_json(const FieldSpec& f) {
    ordered_json j;
    switch (f.kind) {
        case FieldKind::Rationals: j["kind"] = "rationals"; break;
        case FieldKind::Cyclotomic:
            j["kind"] = "cyclotomic";
            j["n"] = f.param;
            break;
        case FieldKind::PrimeField:
            j["kind"] = "prime";
            j["p"] = f.param;
            break;
    }
    return j;
}

std::string field_line(const FieldSpec& f) {
    switch (f.kind) {
        case FieldKind::Cyclotomic: return "{\"kind\": \"cyclotomic\", \"n\": " + std::to_string(f.param) + "}";
        case FieldKind::PrimeField: return "{\"kind\": \"prime\", \"p\": " + std::to_string(f.param) + "}";
        default: return "{\"kind\": \"rationals\"}";
    }
}

FieldSpec field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw std::runtime_error("field spec must be an object with a \"kind\" string");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rationals") return FieldSpec::rationals();
    if (kind == "cyclotomic") {
        if (!j.contains("n") || !j.at("n").is_number_unsigned())
            throw std::runtime_error("cyclotomic field spec needs an unsigned \"n\"");
        return FieldSpec::cyclotomic(j.at("n").get<unsigned>());
    }
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned())
            throw std::runtime_error("prime field spec needs an unsigned \"p\"");
        return FieldSpec::prime_field(j.at("p").get<unsigned>());
    }
    throw std::runtime_error("unknown field kind \"" + kind + "\"");
}

// ---- document reading helpers ------------------------------------------

const json& need(const json& j, const char* key) {
    if (!j.contains(key)) throw std::runtime_error(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

uint32_t need_index(const json& j, uint32_t dim, const char* what) {
    if (!j.is_number_unsigned()) throw std::runtime_error(std::string(what) + " index must be an unsigned integer");
    auto v = j.get<uint64_t>();
    if (v >= dim) throw std::runtime_error(std::string(what) + " index " + std::to_string(v) + " out of range");
    return (uint32_t)v;
}

Scalar need_scalar(const json& j, const FieldSpec& f, const char* what) {
    if (!j.is_string()) throw std::runtime_error(std::string(what) + " coefficient must be a scalar string");
    return Scalar::parse(f, j.get<std::string>());
}

Vec vec_from_json(const json& j, const FieldSpec& f, uint32_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw std::runtime_error(std::string(what) + " must be an array of " + std::to_string(dim) + " scalars");
    Vec v;
    v.reserve(dim);
    for (const auto& e : j) v.push_back(need_scalar(e, f, what));
    return v;
}

std::vector<std::string> poly_to_strings(const Polynomial& p) {
    std::vector<std::string> s;
    s.reserve(p.coeffs().size());
    for (const Scalar& c : p.coeffs()) s.push_back(c.str());
    return s;
}

Polynomial poly_from_json(const json& j, const FieldSpec& f, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array of coefficient strings");
    std::vector<Scalar> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(need_scalar(e, f, what));
    return Polynomial::from_coeffs(f, std::move(c));
}

std::vector<std::string> vec_to_strings(const Vec& v) {
    std::vector<std::string> s;
    s.reserve(v.size());
    for (const Scalar& c : v) s.push_back(c.str());
    return s;
}

Vec vec_from_strings(const json& j, const FieldSpec& f, const char* what) {
    if (!j.is_array()) throw std::runtime_error(std::string(what) + " must be an array of scalar strings");
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(need_scalar(e, f, what));
    return v;
}

HopfAlgebra parse_algebra_impl(const std::string& text) {
    json doc = json::parse(text);
    if (!doc.is_object()) throw std::runtime_error("document root must be an object");
    if (!need(doc, "format_version").is_number_unsigned() || doc.at("format_version").get<unsigned>() != 1)
        throw std::runtime_error("unsupported format_version (expected 1)");

    HopfAlgebra h;
    if (!need(doc, "name").is_string()) throw std::runtime_error("\"name\" must be a string");
    h.name = doc.at("name").get<std::string>();
    h.field = field_from_json(need(doc, "field"));
    if (!need(doc, "dimension").is_number_unsigned())
        throw std::runtime_error("\"dimension\" must be an unsigned integer");
    uint64_t dim = doc.at("dimension").get<uint64_t>();
    if (dim == 0 || dim > 4096) throw std::runtime_error("dimension out of supported range [1,4096]");
    h.dim = (uint32_t)dim;
    const FieldSpec& f = h.field;

    const json& labels = need(doc, "basis_labels");
    if (!labels.is_array() || labels.size() != h.dim)
        throw std::runtime_error("\"basis_labels\" must list one label per basis element");
    for (const auto& l : labels) {
        if (!l.is_string()) throw std::runtime_error("basis labels must be strings");
        h.basis_labels.push_back(l.get<std::string>());
    }

    h.mult.assign((size_t)h.dim * h.dim, SparseVec{});
    const json& mult = need(doc, "mult");
    if (!mult.is_array()) throw std::runtime_error("\"mult\" must be an array of [i, j, k, scalar] entries");
    for (const auto& e : mult) {
        if (!e.is_array() || e.size() != 4) throw std::runtime_error("each mult entry must be [i, j, k, scalar]");
        uint32_t i = need_index(e[0], h.dim, "mult");
        uint32_t j = need_index(e[1], h.dim, "mult");
        uint32_t k = need_index(e[2], h.dim, "mult");
        Scalar c = need_scalar(e[3], f, "mult");
        if (c.is_zero()) continue;
        SparseVec& row = h.mult[(size_t)i * h.dim + j];
        if (!row.empty() && row.back().idx >= k)
            throw std::runtime_error("mult entries must be strictly sorted by (i, j, k)");
        row.push_back({k, std::move(c)});
    }

    h.unit = vec_from_json(need(doc, "unit"), f, h.dim, "unit");

    h.comult.assign(h.dim, SparsePair{});
    const json& comult = need(doc, "comult");
    if (!comult.is_array()) throw std::runtime_error("\"comult\" must be an array of [i, a, b, scalar] entries");
    for (const auto& e : comult) {
        if (!e.is_array() || e.size() != 4) throw std::runtime_error("each comult entry must be [i, a, b, scalar]");
        uint32_t i = need_index(e[0], h.dim, "comult");
        uint32_t a = need_index(e[1], h.dim, "comult");
        uint32_t b = need_index(e[2], h.dim, "comult");
        Scalar c = need_scalar(e[3], f, "comult");
        if (c.is_zero()) continue;
        SparsePair& row = h.comult[i];
        if (!row.empty() && std::pair(row.back().a, row.back().b) >= std::pair(a, b))
            throw std::runtime_error("comult entries must be strictly sorted by (i, a, b)");
        row.push_back({a, b, std::move(c)});
    }

    h.counit = vec_from_json(need(doc, "counit"), f, h.dim, "counit");

    ExactMatrix s(f, h.dim, h.dim);
    const json& anti = need(doc, "antipode");
    if (!anti.is_array()) throw std::runtime_error("\"antipode\" must be an array of [i, j, scalar] entries");
    for (const auto& e : anti) {
        if (!e.is_array() || e.size() != 3) throw std::runtime_error("each antipode entry must be [i, j, scalar]");
        uint32_t i = need_index(e[0], h.dim, "antipode");
        uint32_t j = need_index(e[1], h.dim, "antipode");
        s.at(i, j) = need_scalar(e[2], f, "antipode");
    }

    std::vector<Vec> grouplikes;
    if (doc.contains("metadata")) {
        const json& meta = doc.at("metadata");
        if (!meta.is_object()) throw std::runtime_error("\"metadata\" must be an object");
        if (meta.contains("generators")) {
            for (const auto& g : meta.at("generators"))
                h.generator_hints.push_back(vec_from_json(g, f, h.dim, "generator"));
        }
        if (meta.contains("grouplikes")) {
            for (const auto& g : meta.at("grouplikes"))
                grouplikes.push_back(vec_from_json(g, f, h.dim, "grouplike"));
        }
        if (meta.contains("semisimple")) {
            if (!meta.at("semisimple").is_boolean()) throw std::runtime_error("\"semisimple\" must be a boolean");
            h.semisimple_flag = meta.at("semisimple").get<bool>();
        }
        if (meta.contains("cosemisimple")) {
            if (!meta.at("cosemisimple").is_boolean()) throw std::runtime_error("\"cosemisimple\" must be a boolean");
            h.cosemisimple_flag = meta.at("cosemisimple").get<bool>();
        }
    }

    set_antipode(h, std::move(s));
    AxiomReport rep = verify_hopf(h);
    if (!rep.all()) throw std::runtime_error("verification failed: " + rep.detail);

    for (size_t n = 0; n < grouplikes.size(); ++n) {
        if (!is_grouplike(h, grouplikes[n]))
            throw std::runtime_error("metadata grouplike " + std::to_string(n) + " is not grouplike");
    }
    h.known_grouplikes = std::move(grouplikes);
    return h;
}

}  // namespace

std::string emit_algebra(const HopfAlgebra& h) {
    std::string out;
    out += "{\n";
    out += "  \"format_version\": 1,\n";
    out += "  \"name\": " + quote(h.name) + ",\n";
    out += "  \"field\": " + field_line(h.field) + ",\n";
    out += "  \"dimension\": " + std::to_string(h.dim) + ",\n";

    out += "  \"basis_labels\": ";
    put_string_array(out, h.basis_labels);
    out += ",\n";

    out += "  \"mult\": [";
    bool first = true;
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t j = 0; j < h.dim; ++j)
            for (const SparseEntry& e : h.row(i, j)) {
                if (e.c.is_zero()) continue;
                out += first ? "\n" : ",\n";
                first = false;
                out += "    [" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(e.idx) +
                       ", " + quote(e.c.str()) + "]";
            }
    out += first ? "],\n" : "\n  ],\n";

    out += "  \"unit\": ";
    put_vec(out, h.unit);
    out += ",\n";

    out += "  \"comult\": [";
    first = true;
    for (uint32_t i = 0; i < h.dim; ++i)
        for (const PairEntry& e : h.comult[i]) {
            if (e.c.is_zero()) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    [" + std::to_string(i) + ", " + std::to_string(e.a) + ", " + std::to_string(e.b) + ", " +
                   quote(e.c.str()) + "]";
        }
    out += first ? "],\n" : "\n  ],\n";

    out += "  \"counit\": ";
    put_vec(out, h.counit);
    out += ",\n";

    out += "  \"antipode\": [";
    first = true;
    for (uint32_t i = 0; i < h.dim; ++i)
        for (uint32_t j = 0; j < h.dim; ++j) {
            const Scalar& c = h.antipode.at(i, j);
            if (c.is_zero()) continue;
            out += first ? "\n" : ",\n";
            first = false;
            out += "    [" + std::to_string(i) + ", " + std::to_string(j) + ", " + quote(c.str()) + "]";
        }
    out += first ? "]" : "\n  ]";

    bool has_meta = !h.known_grouplikes.empty() || h.semisimple_flag.has_value() ||
                    h.cosemisimple_flag.has_value() || !h.generator_hints.empty();
    if (has_meta) {
        out += ",\n  \"metadata\": {";
        std::vector<std::string> parts;
        if (!h.known_grouplikes.empty()) {
            std::string p = "    \"grouplikes\": [\n";
            for (size_t n = 0; n < h.known_grouplikes.size(); ++n) {
                p += "      ";
                put_vec(p, h.known_grouplikes[n]);
                p += n + 1 < h.known_grouplikes.size() ? ",\n" : "\n";
            }
            p += "    ]";
            parts.push_back(std::move(p));
        }
        if (h.semisimple_flag) parts.push_back(std::string("    \"semisimple\": ") + (*h.semisimple_flag ? "true" : "false"));
        if (h.cosemisimple_flag)
            parts.push_back(std::string("    \"cosemisimple\": ") + (*h.cosemisimple_flag ? "true" : "false"));
        if (!h.generator_hints.empty()) {
            std::string p = "    \"generators\": [\n";
            for (size_t n = 0; n < h.generator_hints.size(); ++n) {
                p += "      ";
                put_vec(p, h.generator_hints[n]);
                p += n + 1 < h.generator_hints.size() ? ",\n" : "\n";
            }
            p += "    ]";
            parts.push_back(std::move(p));
        }
        for (size_t n = 0; n < parts.size(); ++n) {
            out += "\n" + parts[n];
            if (n + 1 < parts.size()) out += ",";
        }
        out += "\n  }";
    }
    out += "\n}\n";
    return out;
}

HopfAlgebra parse_algebra(const std::string& text) {
    try {
        return parse_algebra_impl(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("cannot parse algebra document: ") + e.what());
    }
}

void save_algebra(const HopfAlgebra& h, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << emit_algebra(h);
    if (!out.flush()) throw std::runtime_error("write to " + path + " failed");
}

HopfAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

std::string exponent_result_to_json(const ExponentResult& r, const FieldSpec& f) {
    ordered_json j;
    j["type"] = "exponent_result";
    j["field"] = field_to_json(f);
    j["method"] = r.method;
    switch (r.status) {
        case ExpStatus::Finite: j["status"] = "finite"; break;
        case ExpStatus::Infinite: j["status"] = "infinite"; break;
        case ExpStatus::Unknown: j["status"] = "unknown"; break;
    }
    j["value"] = r.value;
    j["cap"] = r.cap;
    j["certificates"] = ordered_json::array();
    for (const InfinityCertificate& c : r.certificates) {
        ordered_json jc;
        jc["kind"] = c.kind;
        jc["grouplike"] = vec_to_strings(c.grouplike);
        jc["element"] = vec_to_strings(c.element);
        jc["u_minpoly"] = poly_to_strings(c.u_minpoly);
        jc["repeated_factor"] = poly_to_strings(c.repeated_factor);
        j["certificates"].push_back(std::move(jc));
    }
    if (r.order_certificate) {
        const OrderCertificate& c = *r.order_certificate;
        ordered_json jc;
        jc["minpoly"] = poly_to_strings(c.minpoly);
        jc["squarefree"] = c.squarefree;
        if (c.order) jc["order"] = *c.order;
        jc["cap"] = c.cap;
        if (c.char_p_ab) {
            jc["char_p_a"] = c.char_p_ab->first;
            jc["char_p_b"] = c.char_p_ab->second;
        }
        j["order_certificate"] = std::move(jc);
    }
    return j.dump(2) + "\n";
}

ExponentResult exponent_result_from_json(const std::string& text) {
    try {
        json doc = json::parse(text);
        if (!doc.is_object() || need(doc, "type").get<std::string>() != "exponent_result")
            throw std::runtime_error("not an exponent_result document");
        FieldSpec f = field_from_json(need(doc, "field"));
        ExponentResult r;
        r.method = need(doc, "method").get<std::string>();
        std::string st = need(doc, "status").get<std::string>();
        if (st == "finite")
            r.status = ExpStatus::Finite;
        else if (st == "infinite")
            r.status = ExpStatus::Infinite;
        else if (st == "unknown")
            r.status = ExpStatus::Unknown;
        else
            throw std::runtime_error("unknown status \"" + st + "\"");
        r.value = need(doc, "value").get<unsigned long>();
        r.cap = need(doc, "cap").get<unsigned long>();
        for (const auto& jc : need(doc, "certificates")) {
            InfinityCertificate c;
            c.kind = need(jc, "kind").get<std::string>();
            c.grouplike = vec_from_strings(need(jc, "grouplike"), f, "grouplike");
            c.element = vec_from_strings(need(jc, "element"), f, "element");
            c.u_minpoly = poly_from_json(need(jc, "u_minpoly"), f, "u_minpoly");
            c.repeated_factor = poly_from_json(need(jc, "repeated_factor"), f, "repeated_factor");
            r.certificates.push_back(std::move(c));
        }
        if (doc.contains("order_certificate")) {
            const json& jc = doc.at("order_certificate");
            OrderCertificate c;
            c.minpoly = poly_from_json(need(jc, "minpoly"), f, "minpoly");
            c.squarefree = need(jc, "squarefree").get<bool>();
            if (jc.contains("order")) c.order = jc.at("order").get<unsigned long>();
            c.cap = need(jc, "cap").get<unsigned long>();
            if (jc.contains("char_p_a"))
                c.char_p_ab = {jc.at("char_p_a").get<unsigned long>(), need(jc, "char_p_b").get<unsigned>()};
            r.order_certificate = std::move(c);
        }
        return r;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("cannot parse exponent result: ") + e.what());
    }
}

std::string spectrum_report_to_json(const SpectrumReport& r, const FieldSpec& f) {
    ordered_json j;
    j["type"] = "spectrum_report";
    j["field"] = field_to_json(f);
    j["u_minpoly"] = poly_to_strings(r.u_minpoly);
    j["u_squarefree"] = r.u_squarefree;
    j["u_bound_ok"] = r.u_bound_ok;
    j["u_root_order"] = r.u_root_order;
    j["root_orders"] = ordered_json::array();
    for (const auto& [n, count] : r.root_orders) j["root_orders"].push_back(ordered_json::array({n, count}));
    j["z_minpoly"] = poly_to_strings(r.z_minpoly);
    j["z_bound_ok"] = r.z_bound_ok;
    return j.dump(2) + "\n";
}

SpectrumReport spectrum_report_from_json(const std::string& text) {
    try {
        json doc = json::parse(text);
        if (!doc.is_object() || need(doc, "type").get<std::string>() != "spectrum_report")
            throw std::runtime_error("not a spectrum_report document");
        FieldSpec f = field_from_json(need(doc, "field"));
        SpectrumReport r;
        r.u_minpoly = poly_from_json(need(doc, "u_minpoly"), f, "u_minpoly");
        r.u_squarefree = need(doc, "u_squarefree").get<bool>();
        r.u_bound_ok = need(doc, "u_bound_ok").get<bool>();
        r.u_root_order = need(doc, "u_root_order").get<unsigned long>();
        for (const auto& e : need(doc, "root_orders")) {
            if (!e.is_array() || e.size() != 2) throw std::runtime_error("root_orders entries must be [order, count]");
            r.root_orders.emplace_back(e[0].get<unsigned long>(), e[1].get<unsigned>());
        }
        r.z_minpoly = poly_from_json(need(doc, "z_minpoly"), f, "z_minpoly");
        r.z_bound_ok = need(doc, "z_bound_ok").get<bool>();
        return r;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("cannot parse spectrum report: ") + e.what());
    }
}

}  // namespace hopfx
