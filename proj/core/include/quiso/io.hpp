#ifndef QUISO_IO_HPP
#define QUISO_IO_HPP

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>

#include "quiso/decision.hpp"
#include "quiso/reduction.hpp"

namespace quiso {

/// A representation plus the field it lives over, as read from or written
/// to an interchange document.
struct Problem {
    MatrixRepresentation rep;
    FieldMode field = FieldMode::Complex;
};

/// Document layout:
///   { "quiver": { "vertices": t, "arrows": [{"name","src","tgt"}] },
///     "dims": [d_1, ..., d_t],
///     "field": "complex" | "real",
///     "matrices": { name: [[ [re, im] | x, ... ], ...] } }
/// Unknown members are rejected; plain numbers are read as zero imaginary
/// part. Entries always serialize as [re, im] pairs.
Problem parse_problem(const nlohmann::json& doc);
Problem parse_problem_text(const std::string& text);
nlohmann::json serialize_problem(const Problem& p);

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& doc);

nlohmann::json verdict_to_json(const IsometryVerdict& v);

nlohmann::json family_to_json(const IsometryFamily& fam);
IsometryFamily family_from_json(const nlohmann::json& doc, StarMode mode);

namespace presets {

Quiver loop();
Quiver kloops(int k);
Quiver parallel(int k);  // two vertices, k arrows 2 -> 1
Quiver star(int k);      // hub 1 plus k leaves, arrows leaf -> hub
Quiver complete(int t);  // loop per vertex, arrow pair per distinct pair

} // namespace presets

} // namespace quiso

#endif
