#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "braidgal/examples.hpp"

namespace braidgal {

/// On-disk document: one JSON object with keys field, base_hopf, objects,
/// morphisms, systems. Every linear map is a dense row-major matrix of
/// scalar strings ("3/4" over the rationals, decimal residues over F_p) with
/// explicit dimensions.
struct Document {
    Document() : base(trivial_base(Field::rational())) {}

    Field field = Field::rational();
    BaseHopf base;
    std::map<std::string, YDObject> objects;

    struct NamedMorphism {
        LinMap map;
        std::string dom, cod; // optional object names
    };
    std::map<std::string, NamedMorphism> morphisms;

    struct System {
        std::string kind; // "hopf" | "crossed" | "comodule-algebra"
        std::string object;
        std::optional<HopfAlgebra> hopf;
        std::optional<CrossedSystem> crossed;
        std::optional<ComoduleAlgebra> comodule;
    };
    std::map<std::string, System> systems;
};

nlohmann::json matrix_to_json(const LinMap &m);
LinMap matrix_from_json(const Field &f, const nlohmann::json &j, const std::string &where);

nlohmann::json document_to_json(const Document &doc);
Document document_from_json(const nlohmann::json &j); // throws ParseError

Document load_document(const std::string &path);
void save_document(const Document &doc, const std::string &path);

/// Wrap a builtin in a document so every builtin can be exported and
/// re-checked from disk.
Document document_of_builtin(const Builtin &b);

} // namespace braidgal
