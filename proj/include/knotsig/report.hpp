#pragma once

#include <gmpxx.h>

#include <istream>
#include <json.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knotsig/braid.hpp"
#include "knotsig/checkerboard.hpp"
#include "knotsig/diagram.hpp"
#include "knotsig/quadform.hpp"
#include "knotsig/theoremlab.hpp"

namespace knotsig {

// nlohmann::json keeps object keys sorted, which gives a stable key order.
using Json = nlohmann::json;

/// "p/q" with q > 0 in lowest terms; integers render as "p/1".
std::string rational_string(const mpq_class& q);
/// Inverse of rational_string. Also accepts a bare integer.
mpq_class parse_rational(const std::string& text);

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json integer_json(const mpz_class& z);

Json to_json(const IntMatrix& m);
/// {"coefficients": [...], "offset": k} for sum c_i t^(k + i); k is a
/// half-integer string like "-1/2" when needed.
Json to_json(const IntPolynomial& p);
Json to_json(const SignatureTriple& s);

/// {"c", "s", "b1", "faces", "reduced"}; faces is null for split
/// diagrams with crossings, b1 also for non-positive ones.
Json diagram_stats(const LinkDiagram& d);
/// {"fw", "fb", "mu": [A, B], "goeritz", "signature"} for coloring A, with
/// the coloring B form under "goeritz_b". Needs a reduced positive non-split
/// diagram.
Json checkerboard_json(const LinkDiagram& d);

Json to_json(const Inequality& q);
Json to_json(const BoundCertificate& c);
Json to_json(const BoundReport& r);
Json to_json(const TwistFamilyReport& r);

enum class InputKind { kPd, kBraid };

struct CatalogueRecord {
  std::string name;
  InputKind kind = InputKind::kPd;
  std::string payload;
  PdOptions pd_options;
  std::optional<bool> positive;
  std::optional<int> expected_sigma;
  std::optional<int> expected_b1;
  std::string provenance;
  int line = 0;  ///< 1-based line in the catalogue file
};

/// One catalogue line: {"name", "pd" | "braid", optional "positive",
/// "rotation" ("ccw" | "cw"), "reverse" (labels), "expected": {"sigma",
/// "b1"}, "provenance"}. The payload is parsed once to validate it.
CatalogueRecord parse_catalogue_line(const std::string& text, int line);

struct CatalogueError {
  int line = 0;
  std::string message;
};

using CatalogueEntry = std::variant<CatalogueRecord, CatalogueError>;

/// Reads line-delimited records. Blank lines and lines starting with '#'
/// are skipped; malformed lines become CatalogueError entries.
std::vector<CatalogueEntry> read_catalogue(std::istream& in);

Json to_json(const CatalogueRecord& r);

/// The diagram a record describes (braid records use the closure).
LinkDiagram record_diagram(const CatalogueRecord& r);

}  // namespace knotsig
