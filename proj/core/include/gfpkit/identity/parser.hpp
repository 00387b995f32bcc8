// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gfpkit/identity/ast.hpp"

namespace gfpkit {

/// Parses one identity definition:
///
///   identity <ID>
///   vars <v1> <v2> ...
///   constraints <cmp> ; <cmp> ; ...     (each <cmp> is <iexpr> >=|>|= <iexpr>)
///   range <var> <lo>..<hi>              (optional, repeatable)
///   lhs <expr>
///   rhs <expr>
///
/// '#' starts a comment running to the end of the line. Index variables are
/// single letters from {n m r s t i j k u v}; the symbol `alpha` may appear
/// in constraints to guard an identity to families with that normalization.
/// Expressions use Gp[...], Gs[...], d, g, alpha, Delta, S, neg_g, sqrt(...),
/// rational literals and + - * ^ ( ).
///
/// Throws SyntaxError (with line/column), UnknownSymbol or UnboundVariable.
IdentityDef parse_identity(std::string_view text, std::string_view source_name = {});

/// Reads and parses <dir>/<id>.gfpid for every entry of the manifest, in
/// canonical id order. Errors carry the offending file name.
std::vector<IdentityDef> load_corpus(const std::filesystem::path& dir);

/// Loads a single .gfpid file.
IdentityDef load_identity_file(const std::filesystem::path& file);

struct ManifestEntry {
    int proposition;
    int part;
};

/// Parses <dir>/manifest.json mapping identity id -> proposition/part.
std::map<std::string, ManifestEntry> load_manifest(const std::filesystem::path& dir);

/// Canonical corpus ordering: P1.* before P2.* before I*, numerically inside
/// each group (I2 < I10).
bool id_less(const std::string& a, const std::string& b);

}  // namespace gfpkit
