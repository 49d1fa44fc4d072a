#pragma once

#include "longknot/diagram.hpp"

#include <string>
#include <string_view>

namespace longknot {

/// Malformed or inconsistent Gauss-code text.
class GaussCodeError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

/// Parses tokens of the form `O<label>(<s>)` / `U<label>(<s>)`, s one of
/// `+`, `-` (U+2212 also accepted). Whitespace is ignored. Labels are
/// arbitrary identifiers; arrow ids are assigned 1..n by first occurrence.
LongGaussDiagram parse_gauss_code(std::string_view text);

/// Canonical text: labels 1..n by first occurrence, no whitespace.
std::string serialize(const LongGaussDiagram& d);

/// Same diagram with arrow ids 1..n by first occurrence.
LongGaussDiagram renumber(const LongGaussDiagram& d);

/// Link code: the long component, then each circle, separated by `|`.
/// `"O1(+)O2(-)|U2(-)U1(+)"` is a long component with one circle. Arrow ids
/// are assigned by first occurrence over the whole text.
LinkGaussDiagram parse_link_code(std::string_view text);

/// Link code with labels renumbered by first occurrence. Component order and
/// circle rotations are kept as they are.
std::string serialize(const LinkGaussDiagram& l);

LinkGaussDiagram renumber(const LinkGaussDiagram& l);

/// Serializes one cyclic or linear word using the given labelling.
std::string serialize_word(const Word& word, const SignMap& signs,
                           const std::map<ArrowId, ArrowId>& labels);

}  // namespace longknot
