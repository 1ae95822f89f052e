#pragma once

#include <string>
#include <vector>

#include "homleib/algebra.hpp"

namespace homleib {

/// A parsed algebra file. Shape and number format are already enforced;
/// the declared kind's axioms are not checked until checked() runs.
struct AlgebraFile {
    std::string name;
    AlgebraKind kind = AlgebraKind::untyped;
    std::size_t dim = 0;
    std::vector<Rational> structure;  // flat, entry (i*dim + j)*dim + k
    Matrix twist{0, 0};               // dim x dim once parsed

    AlgebraSpec checked() const;    // runs the axiom checker for the declared kind
    AlgebraSpec unchecked() const;  // no axiom enforced, for failure reporting
};

/// Accepts "builtin:<name>" or a filesystem path. The file grammar is strict
/// JSON with exactly the keys {name, kind, dim, field, product, twist}:
/// field must be "rational", product is a dim x dim x dim nested array and
/// twist a dim x dim nested array of rational strings ("p/q" or integer,
/// optional leading '-', no whitespace). Floats and bare numbers are rejected.
AlgebraFile read_algebra_source(const std::string& source);
AlgebraFile parse_algebra_text(const std::string& text);

AlgebraFile algebra_file_from_spec(const AlgebraSpec& spec);

/// Canonical form: 2-space indent, fixed key order, reduced rationals,
/// trailing newline. parse(serialize(f)) recovers f exactly, and
/// serialize(parse(text)) is byte-identical whenever text is canonical.
std::string serialize_algebra(const AlgebraFile& file);

const std::vector<std::string>& builtin_algebra_names();

}  // namespace homleib
