#include "braidgal/json_io.hpp"

#include <fstream>

namespace braidgal {

using nlohmann::json;

json matrix_to_json(const LinMap &m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

LinMap matrix_from_json(const Field &f, const json &j, const std::string &where) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError(where + ": matrix needs rows, cols, entries");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1)
        throw ParseError(where + ": dimensions must be positive");
    const json &entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw ParseError(where + ": entries must hold " + std::to_string(rows) + " rows");
    LinMap m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json &row = entries.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(where + ": row " + std::to_string(i) + " must hold " + std::to_string(cols) +
                             " entries");
        for (int c = 0; c < cols; ++c) {
            if (!row.at(c).is_string())
                throw ParseError(where + ": entries are scalar strings");
            m.set(i, c, Scalar::parse(f, row.at(c).get<std::string>()));
        }
    }
    return m;
}

namespace {

json field_to_json(const Field &f) {
    if (f.is_rational())
        return json{{"kind", "rational"}};
    return json{{"kind", "fp"}, {"p", f.modulus()}};
}

Field field_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("field: needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational")
        return Field::rational();
    if (kind == "fp") {
        if (!j.contains("p"))
            throw ParseError("field: fp needs p");
        std::uint64_t p = j.at("p").get<std::uint64_t>();
        if (!is_prime_u64(p))
            throw ParseError("field: modulus " + std::to_string(p) + " is not prime");
        return Field::prime(p);
    }
    throw ParseError("field: unknown kind '" + kind + "'");
}

json base_to_json(const BaseHopf &d) {
    return json{{"dim", d.dim},
                {"mul", matrix_to_json(d.mul)},
                {"unit", matrix_to_json(d.unit)},
                {"comul", matrix_to_json(d.comul)},
                {"counit", matrix_to_json(d.counit)},
                {"antipode", matrix_to_json(d.antipode)},
                {"antipode_inv", matrix_to_json(d.antipode_inv)}};
}

BaseHopf base_from_json(const Field &f, const json &j) {
    if (!j.is_object() || !j.contains("dim"))
        throw ParseError("base_hopf: needs dim");
    int dim = j.at("dim").get<int>();
    auto mat = [&](const char *key) { return matrix_from_json(f, j.at(key), std::string("base_hopf.") + key); };
    BaseHopf d{dim, mat("mul"), mat("unit"), mat("comul"), mat("counit"), mat("antipode"), mat("antipode_inv")};
    if (d.mul.rows() != dim || d.mul.cols() != dim * dim || d.comul.rows() != dim * dim || d.antipode.rows() != dim)
        throw ParseError("base_hopf: structure map shapes do not match dim");
    return d;
}

json object_to_json(const YDObject &v) {
    return json{{"dim", v.dim}, {"action", matrix_to_json(v.action)}, {"coaction", matrix_to_json(v.coaction)}};
}

YDObject object_from_json(const Field &f, int base_dim, const json &j, const std::string &where) {
    int dim = j.at("dim").get<int>();
    YDObject v{dim, matrix_from_json(f, j.at("action"), where + ".action"),
               matrix_from_json(f, j.at("coaction"), where + ".coaction")};
    if (v.action.rows() != dim || v.action.cols() != base_dim * dim || v.coaction.rows() != base_dim * dim ||
        v.coaction.cols() != dim)
        throw ParseError(where + ": action/coaction shapes do not match dims");
    return v;
}

json algebra_to_json(const Algebra &a) {
    return json{{"object", object_to_json(a.object)},
                {"mul", matrix_to_json(a.mul)},
                {"unit", matrix_to_json(a.unit)}};
}

Algebra algebra_from_json(const Field &f, int base_dim, const json &j, const std::string &where) {
    YDObject obj = object_from_json(f, base_dim, j.at("object"), where + ".object");
    Algebra a{obj, matrix_from_json(f, j.at("mul"), where + ".mul"),
              matrix_from_json(f, j.at("unit"), where + ".unit")};
    int n = obj.dim;
    if (a.mul.rows() != n || a.mul.cols() != n * n || a.unit.rows() != n || a.unit.cols() != 1)
        throw ParseError(where + ": mul/unit shapes do not match object dim");
    return a;
}

json hopf_to_json(const HopfAlgebra &h) {
    return json{{"algebra", algebra_to_json(h.algebra)},
                {"comul", matrix_to_json(h.comul)},
                {"counit", matrix_to_json(h.counit)},
                {"antipode", matrix_to_json(h.antipode)}};
}

HopfAlgebra hopf_from_json(const Field &f, int base_dim, const json &j, const std::string &where) {
    Algebra a = algebra_from_json(f, base_dim, j.at("algebra"), where + ".algebra");
    HopfAlgebra h{a, matrix_from_json(f, j.at("comul"), where + ".comul"),
                  matrix_from_json(f, j.at("counit"), where + ".counit"),
                  matrix_from_json(f, j.at("antipode"), where + ".antipode")};
    int n = a.object.dim;
    if (h.comul.rows() != n * n || h.comul.cols() != n || h.counit.rows() != 1 || h.counit.cols() != n ||
        h.antipode.rows() != n || h.antipode.cols() != n)
        throw ParseError(where + ": coalgebra map shapes do not match dim");
    return h;
}

} // namespace

json document_to_json(const Document &doc) {
    json j;
    j["field"] = field_to_json(doc.field);
    j["base_hopf"] = base_to_json(doc.base);
    json objects = json::object();
    for (const auto &[name, v] : doc.objects)
        objects[name] = object_to_json(v);
    j["objects"] = std::move(objects);
    json morphisms = json::object();
    for (const auto &[name, m] : doc.morphisms) {
        json e = json{{"matrix", matrix_to_json(m.map)}};
        if (!m.dom.empty())
            e["dom"] = m.dom;
        if (!m.cod.empty())
            e["cod"] = m.cod;
        morphisms[name] = std::move(e);
    }
    j["morphisms"] = std::move(morphisms);
    json systems = json::object();
    for (const auto &[name, s] : doc.systems) {
        json e = json{{"kind", s.kind}};
        if (s.kind == "hopf")
            e["hopf"] = hopf_to_json(*s.hopf);
        else if (s.kind == "crossed") {
            e["B"] = algebra_to_json(s.crossed->B);
            e["H"] = hopf_to_json(s.crossed->H);
            e["alpha"] = matrix_to_json(s.crossed->alpha);
            e["sigma"] = matrix_to_json(s.crossed->sigma);
        } else if (s.kind == "comodule-algebra") {
            e["A"] = algebra_to_json(s.comodule->algebra);
            e["H"] = hopf_to_json(s.comodule->H);
            e["psi"] = matrix_to_json(s.comodule->psi);
        }
        systems[name] = std::move(e);
    }
    j["systems"] = std::move(systems);
    return j;
}

Document document_from_json(const json &j) {
    if (!j.is_object())
        throw ParseError("document must be a JSON object");
    Document doc;
    if (!j.contains("field"))
        throw ParseError("document needs a field header");
    doc.field = field_from_json(j.at("field"));
    if (j.contains("base_hopf"))
        doc.base = base_from_json(doc.field, j.at("base_hopf"));
    else
        doc.base = trivial_base(doc.field);

    if (j.contains("objects"))
        for (const auto &[name, v] : j.at("objects").items())
            doc.objects.emplace(name, object_from_json(doc.field, doc.base.dim, v, "objects." + name));

    if (j.contains("morphisms"))
        for (const auto &[name, v] : j.at("morphisms").items()) {
            Document::NamedMorphism m{matrix_from_json(doc.field, v.at("matrix"), "morphisms." + name), "", ""};
            if (v.contains("dom"))
                m.dom = v.at("dom").get<std::string>();
            if (v.contains("cod"))
                m.cod = v.at("cod").get<std::string>();
            doc.morphisms.emplace(name, std::move(m));
        }

    if (j.contains("systems"))
        for (const auto &[name, v] : j.at("systems").items()) {
            std::string where = "systems." + name;
            Document::System s;
            s.kind = v.at("kind").get<std::string>();
            if (s.kind == "hopf") {
                s.hopf = hopf_from_json(doc.field, doc.base.dim, v.at("hopf"), where);
            } else if (s.kind == "crossed") {
                Algebra b = algebra_from_json(doc.field, doc.base.dim, v.at("B"), where + ".B");
                HopfAlgebra h = hopf_from_json(doc.field, doc.base.dim, v.at("H"), where + ".H");
                LinMap alpha = matrix_from_json(doc.field, v.at("alpha"), where + ".alpha");
                LinMap sigma = matrix_from_json(doc.field, v.at("sigma"), where + ".sigma");
                try {
                    s.crossed = build_crossed_product(doc.base, b, h, alpha, sigma);
                } catch (const DimensionMismatch &e) {
                    throw ParseError(where + ": " + e.what());
                }
            } else if (s.kind == "comodule-algebra") {
                Algebra a = algebra_from_json(doc.field, doc.base.dim, v.at("A"), where + ".A");
                HopfAlgebra h = hopf_from_json(doc.field, doc.base.dim, v.at("H"), where + ".H");
                LinMap psi = matrix_from_json(doc.field, v.at("psi"), where + ".psi");
                if (psi.rows() != a.object.dim * h.dim() || psi.cols() != a.object.dim)
                    throw ParseError(where + ".psi: shape must be dim A * dim H by dim A");
                s.comodule = ComoduleAlgebra{a, h, psi};
            } else {
                throw ParseError(where + ": unknown kind '" + s.kind + "'");
            }
            doc.systems.emplace(name, std::move(s));
        }
    return doc;
}

Document load_document(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ParseError("malformed JSON in '" + path + "': " + e.what());
    }
    return document_from_json(j);
}

void save_document(const Document &doc, const std::string &path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write '" + path + "'");
    out << document_to_json(doc).dump(2) << "\n";
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

Document document_of_builtin(const Builtin &b) {
    Document doc;
    doc.field = b.D.mul.field();
    doc.base = b.D;
    Document::System s;
    if (const HopfAlgebra *h = std::get_if<HopfAlgebra>(&b.value)) {
        s.kind = "hopf";
        s.hopf = *h;
        doc.objects.emplace("H", h->algebra.object);
    } else if (const CrossedSystem *c = std::get_if<CrossedSystem>(&b.value)) {
        s.kind = "crossed";
        s.crossed = *c;
        doc.objects.emplace("B", c->B.object);
        doc.objects.emplace("H", c->H.algebra.object);
    } else {
        const ComoduleAlgebra &a = std::get<ComoduleAlgebra>(b.value);
        s.kind = "comodule-algebra";
        s.comodule = a;
        doc.objects.emplace("A", a.algebra.object);
        doc.objects.emplace("H", a.H.algebra.object);
    }
    doc.systems.emplace(b.name, std::move(s));
    return doc;
}

} // namespace braidgal
