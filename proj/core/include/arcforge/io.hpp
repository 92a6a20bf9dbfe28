#pragma once

// Text formats:
//   field spec   p=3,n=2,poly=[1,0,1]        (poly optional, constant first)
//   element      [c0,c1,...]
//   point/line   [[c..],[c..],[c..]]
//   curve text   coef=[c0,c1,...] exp=e0,e1,e2    one monomial per line,
//                optional header "# field p=..,n=..,poly=[..]", '#' comments
//   curve JSON   {"field":"p=..","monomials":[{"c":[..],"e":[4,0,0]},...]}

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "arcforge/curve.hpp"
#include "arcforge/gf.hpp"
#include "arcforge/plane.hpp"

namespace arcforge::io {

/// An omitted poly comes back as an empty vector (use the default).
FieldSpec parse_field_spec(std::string_view text);
std::string format_field_spec(const FieldSpec& spec);
FieldPtr field_from_spec(const FieldSpec& spec);

Triple parse_triple(const Field& field, std::string_view text);
std::string format_triple(const Field& field, const Triple& t);

/// "l1;l2;l3", each a triple.
std::array<ProjLine, 3> parse_lines(const Field& field, std::string_view text);

std::string format_curve_text(const Curve& curve);
std::string format_curve_json(const Curve& curve);

/// Accepts either format. `field` may be null when the input names its field.
Curve parse_curve(std::string_view text, const FieldPtr& field);

/// One point per line, canonical order.
std::string format_point_list(const Field& field, const std::vector<ProjPoint>& points);

}  // namespace arcforge::io
