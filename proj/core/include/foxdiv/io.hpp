#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "foxdiv/family.hpp"
#include "foxdiv/groupring.hpp"

namespace foxdiv {

/// Presentation text:
///
///   group                       (or: semigroup)
///   generators: x y1 y2
///   order: x x^-1 y1 y1^-1 ...  (optional, descending precedence)
///   relator: y1 x y1 x y1 = y1  (a bare word w means w = 1)
///
/// `#` starts a comment and blank lines are ignored. Errors are ParseError
/// with 1-based line and column.
Presentation parse_presentation(std::string_view text);

/// Family text:
///
///   family
///   y-generators: 1
///   w: y1
///   relator 1: u = 1, 1, 1 ; v = y1
///
/// Relators are numbered 1, 2, ... in order. The words use the alphabet
/// x, y1, ..., yN. Side conditions are not checked here (see validate_family).
FamilySpec parse_family(std::string_view text);

using ParsedInput = std::variant<Presentation, FamilySpec>;

/// Dispatches on the first keyword (group, semigroup or family).
ParsedInput parse_input_text(std::string_view text);

/// Reads and parses a file. Throws Error when it cannot be read.
ParsedInput parse_input(const std::filesystem::path& path);

/// Canonical text: always lists the order line and writes `L = R` for every
/// relator. parse_presentation(format_presentation(p)) == p.
std::string format_presentation(const Presentation& p);
std::string format_family(const FamilySpec& spec);

/// 64-bit FNV-1a hash of format_presentation(p) as 16 hex digits.
std::string fingerprint(const Presentation& p);

}  // namespace foxdiv
