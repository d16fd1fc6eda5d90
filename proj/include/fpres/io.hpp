#ifndef FPRES_IO_HPP_
#define FPRES_IO_HPP_

#include <optional>
#include <string>

#include "fpres/cayley.hpp"
#include "fpres/fp1.hpp"
#include "fpres/rees.hpp"
#include "fpres/resolution.hpp"
#include "fpres/semilattice.hpp"
#include "fpres/transfer.hpp"

namespace fpres {

/// Any of the three input kinds a file can hold.
struct ParsedInput {
  enum class Kind { Semigroup, Rees, Semilattice };
  Kind kind;
  std::optional<FiniteSemigroup> semigroup;
  std::optional<ReesMatrixData> rees;
  std::optional<StrongSemilatticeData> semilattice;

  /// The input as a plain semigroup (Rees data is built, semilattices glued).
  FiniteSemigroup as_semigroup() const;
};

// --- text formats -----------------------------------------------------------
// Semigroup: first line n, then n lines of n whitespace-separated 1-based
// indices, optionally followed by `identity = k` (1-based); `#` starts a
// comment anywhere. The Rees and semilattice formats are block-structured;
// see the README for the grammar.

FiniteSemigroup parse_semigroup_text(std::string const& text);
std::string write_semigroup_text(FiniteSemigroup const& s);

ReesMatrixData parse_rees_text(std::string const& text);
std::string write_rees_text(ReesMatrixData const& data);

StrongSemilatticeData parse_semilattice_text(std::string const& text);
std::string write_semilattice_text(StrongSemilatticeData const& data);

// --- JSON equivalents (tables 0-based) --------------------------------------

FiniteSemigroup parse_semigroup_json(std::string const& text);
std::string write_semigroup_json(FiniteSemigroup const& s);

ReesMatrixData parse_rees_json(std::string const& text);
StrongSemilatticeData parse_semilattice_json(std::string const& text);

/// Detects the kind from the content (text block keyword or JSON fields).
ParsedInput parse_input(std::string const& text);
ParsedInput load_input_file(std::string const& path);

// --- DOT exports -------------------------------------------------------------

/// Egg-box diagram: an HTML-like table, one cell per H-class (row = R-class,
/// column = L-class), idempotent-bearing cells starred.
std::string egg_box_dot(FiniteSemigroup const& s);

/// Right Cayley graph with generator names as arc labels.
std::string cayley_dot(FiniteSemigroup const& s, ElemSet const& a);

// --- reports (all JSON uses ordered keys; schema: 1) --------------------------

std::string analyze_report_json(FiniteSemigroup const& s);
std::string analyze_report_text(FiniteSemigroup const& s);

std::string resolution_report_json(Resolution const& res, ExactnessReport const& rep);
std::string resolution_report_text(Resolution const& res, ExactnessReport const& rep);

std::string bundle_report_json(TransferBundle const& bundle);
std::string bundle_report_text(TransferBundle const& bundle);

std::string pipeline_report_json(PipelineReport const& rep);
std::string fp1_report_json(FiniteSemigroup const& monoid, FP1Witness const& w,
                            std::optional<std::pair<std::size_t, ElemSet>> const& minimal,
                            CsFp1Report const* cs);
std::string semilattice_report_json(SemilatticeFpReport const& rep);
std::string bi_report_json(BiFpReport const& rep);

/// Writes text to path atomically (temp file + rename).
void write_file_atomic(std::string const& path, std::string const& text);

// --- corpus -------------------------------------------------------------------

struct CorpusSummary {
  std::string text;  // deterministic, one line per case
  bool all_pass = false;
};

/// Runs every catalog case (resolve + verify, plus the construction-specific
/// certificates where applicable) and any parseable files in `directory`;
/// cases are ordered by name so reruns are byte-identical.
CorpusSummary corpus_run(std::optional<std::string> const& directory,
                         std::size_t length_budget);

}  // namespace fpres

#endif  // FPRES_IO_HPP_
