#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "fpres/catalog.hpp"
#include "fpres/io.hpp"

using namespace fpres;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::size_t default_length() {
  if (char const* env = std::getenv("FPRES_LENGTH")) {
    return static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
  }
  return 3;
}

std::size_t max_length() {
  if (char const* env = std::getenv("FPRES_MAX_LENGTH")) {
    return static_cast<std::size_t>(std::strtoul(env, nullptr, 10));
  }
  return 4;  // practical degree budget; coefficient growth beyond is steep
}

void emit(std::string const& text, std::string const& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

SgPtr shared(FiniteSemigroup s) {
  return std::make_shared<const FiniteSemigroup>(std::move(s));
}

struct CommonOpts {
  std::string input;
  std::string out;
  std::string format = "json";
  std::size_t length = default_length();
  bool opposite = false;
  std::string cayley_gens;  // comma-separated names; switches dot output
};

FiniteSemigroup load_semigroup(CommonOpts const& opts) {
  FiniteSemigroup s = load_input_file(opts.input).as_semigroup();
  return opts.opposite ? opposite(s) : s;
}

ElemSet parse_gens(FiniteSemigroup const& s, std::string const& list) {
  ElemSet out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    bool found = false;
    for (Elem x = 0; x < s.order() && !found; ++x) {
      if (s.name(x) == item) {
        out.push_back(x);
        found = true;
      }
    }
    if (!found) {
      try {
        out.push_back(static_cast<Elem>(std::stoul(item) - 1));  // 1-based index
      } catch (std::exception const&) {
        throw Error("BadInput", "unknown generator '" + item + "'");
      }
    }
  }
  return sorted_unique(out);
}

int run_analyze(CommonOpts const& opts) {
  FiniteSemigroup s = load_semigroup(opts);
  if (opts.format == "dot") {
    if (!opts.cayley_gens.empty()) {
      emit(cayley_dot(s, parse_gens(s, opts.cayley_gens)), opts.out);
    } else {
      emit(egg_box_dot(s), opts.out);
    }
  } else if (opts.format == "text") {
    emit(analyze_report_text(s), opts.out);
  } else {
    emit(analyze_report_json(s), opts.out);
  }
  return kExitOk;
}

int run_resolve(CommonOpts const& opts) {
  FiniteSemigroup s = monoid_completion(load_semigroup(opts));
  Resolution res = augmentation_resolution(shared(std::move(s)));
  extend_resolution(res, opts.length);
  ExactnessReport rep = verify_exact(res);
  emit(opts.format == "text" ? resolution_report_text(res, rep)
                             : resolution_report_json(res, rep),
       opts.out);
  return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

int emit_bundle(TransferBundle const& bundle, CommonOpts const& opts) {
  emit(opts.format == "text" ? bundle_report_text(bundle) : bundle_report_json(bundle),
       opts.out);
  return bundle.report.all_pass() ? kExitOk : kExitVerificationFailed;
}

int run_transfer(CommonOpts const& opts, std::string const& construction) {
  FiniteSemigroup input = load_semigroup(opts);
  if (construction == "phi") {
    SgPtr s = shared(monoid_completion(input));
    Resolution res = augmentation_resolution(s);
    extend_resolution(res, opts.length);
    ElemSet ideal = minimal_ideal(*s);
    ElemSet idems;
    for (Elem x : ideal) {
      if (s->is_idempotent(x)) {
        idems.push_back(x);
      }
    }
    if (idems.empty()) {
      throw NotCompletelySimpleError("minimal ideal has no idempotent");
    }
    return emit_bundle(maximal_subgroup_restrict(res, idems.front()), opts);
  }
  if (construction == "ideal") {
    SgPtr s = shared(monoid_completion(input));
    ElemSet ideal = minimal_ideal(*s);
    SubMonoid t_sub = make_submonoid(s, ideal);  // needs an identity inside
    Resolution res_t = augmentation_resolution(t_sub.monoid);
    extend_resolution(res_t, opts.length);
    return emit_bundle(ideal_lift(res_t, s, ideal), opts);
  }
  if (construction == "cs-descend") {
    DescentContext ctx = make_descent_context(input);
    Resolution res = augmentation_resolution(ctx.S, ctx.T.elements);
    extend_resolution(res, opts.length);
    return emit_bundle(cs_descend(res, ctx), opts);
  }
  if (construction == "left-group") {
    LeftGroupContext ctx = make_left_group_context(input);
    Resolution res_h = augmentation_resolution(ctx.H.monoid);
    extend_resolution(res_h, opts.length);
    return emit_bundle(left_group_lift(res_h, ctx), opts);
  }
  if (construction == "pipeline") {
    PipelineReport rep = completely_simple_pipeline(input, opts.length);
    emit(pipeline_report_json(rep), opts.out);
    return rep.all_pass() ? kExitOk : kExitVerificationFailed;
  }
  std::cerr << "unknown construction: " << construction << "\n";
  return kExitUsage;
}

int run_fp1(CommonOpts const& opts, std::size_t cap) {
  FiniteSemigroup raw = load_semigroup(opts);
  FiniteSemigroup monoid = monoid_completion(raw);
  auto minimal = minimal_ru_genset(monoid, cap);
  FP1Witness w = minimal.has_value() ? kobayashi_check(monoid, minimal->second)
                                     : kobayashi_check(monoid, {});
  std::optional<CsFp1Report> cs;
  if (is_completely_simple(raw)) {
    cs = cs_fp1_certificate(raw);
  }
  emit(fp1_report_json(monoid, w, minimal, cs.has_value() ? &*cs : nullptr), opts.out);
  bool pass = w.agrees() && (!cs.has_value() || cs->passes());
  return pass ? kExitOk : kExitVerificationFailed;
}

int run_semilattice(CommonOpts const& opts) {
  ParsedInput input = load_input_file(opts.input);
  if (input.kind != ParsedInput::Kind::Semilattice) {
    throw Error("BadInput", "the semilattice command needs a semilattice file");
  }
  SemilatticeFpReport rep = semilattice_fp_report(*input.semilattice, opts.length);
  emit(semilattice_report_json(rep), opts.out);
  return rep.all_pass() ? kExitOk : kExitVerificationFailed;
}

int run_bi(CommonOpts const& opts) {
  BiFpReport rep = bi_fp_report(load_semigroup(opts), opts.length);
  emit(bi_report_json(rep), opts.out);
  return rep.bi_pass() ? kExitOk : kExitVerificationFailed;
}

int run_corpus(std::optional<std::string> const& dir, std::size_t length,
               std::string const& out) {
  CorpusSummary summary = corpus_run(dir, length);
  emit(summary.text, out);
  return summary.all_pass ? kExitOk : kExitVerificationFailed;
}

int run_catalog_dump(std::string const& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  for (auto const& entry : catalog()) {
    write_file_atomic((fs::path(out_dir) / (entry.name + ".sg")).string(),
                      write_semigroup_text(entry.semigroup));
  }
  write_file_atomic((fs::path(out_dir) / "clifford_two_chain.ssl").string(),
                    write_semilattice_text(two_chain_z2()));
  write_file_atomic((fs::path(out_dir) / "semilattice_diamond.ssl").string(),
                    write_semilattice_text(diamond_semilattice()));
  write_file_atomic(
      (fs::path(out_dir) / "rees_z2_2x2_norm.rees").string(),
      write_rees_text(ReesMatrixData{cyclic_group(2), 2, 2, {0, 0, 0, 1}}));
  write_file_atomic(
      (fs::path(out_dir) / "rees_z2_2x2_raw.rees").string(),
      write_rees_text(ReesMatrixData{cyclic_group(2), 2, 2, {1, 0, 0, 1}}));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup resolutions: build and certify partial free "
               "resolutions over integral monoid rings"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string construction = "pipeline";
  std::size_t cap = 6;
  std::string corpus_dir;
  std::string catalog_dir = "data/catalog";

  auto add_common = [&opts](CLI::App* cmd, bool needs_input = true) {
    auto* in = cmd->add_option("--input,-i", opts.input, "input file");
    if (needs_input) {
      in->required();
    }
    cmd->add_option("--out,-o", opts.out, "write the report here (atomic)");
    cmd->add_option("--format,-f", opts.format, "json | text | dot")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    cmd->add_option("--length,-n", opts.length, "resolution length budget");
    cmd->add_flag("--opposite", opts.opposite, "work with the opposite semigroup");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "structure report / egg box");
  add_common(analyze);
  analyze->add_option("--cayley-gens", opts.cayley_gens,
                      "with --format dot: emit the right Cayley graph on these "
                      "generators (comma-separated names or 1-based indices)");
  CLI::App* resolve = app.add_subcommand("resolve", "resolve and certify exactness");
  add_common(resolve);
  CLI::App* transfer = app.add_subcommand("transfer", "run a transfer construction");
  add_common(transfer);
  transfer
      ->add_option("--construction,-c", construction,
                   "phi | ideal | cs-descend | left-group | pipeline")
      ->check(CLI::IsMember({"phi", "ideal", "cs-descend", "left-group", "pipeline"}));
  CLI::App* fp1 = app.add_subcommand("fp1", "connectivity criterion and certificates");
  add_common(fp1);
  fp1->add_option("--cap", cap, "max witness size for the exhaustive search");
  CLI::App* pipeline = app.add_subcommand("pipeline", "completely simple end-to-end run");
  add_common(pipeline);
  CLI::App* semilattice =
      app.add_subcommand("semilattice", "lift from the bottom of a strong semilattice");
  add_common(semilattice);
  CLI::App* bi = app.add_subcommand("bi", "left and right reports side by side");
  add_common(bi);
  CLI::App* corpus = app.add_subcommand("corpus", "run the built-in catalog and a directory");
  corpus->add_option("--dir", corpus_dir, "directory of extra input files");
  corpus->add_option("--out,-o", opts.out, "write the summary here");
  corpus->add_option("--length,-n", opts.length, "resolution length budget");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "dump the built-in catalog");
  catalog_cmd->add_option("--out-dir", catalog_dir, "target directory");

  CLI11_PARSE(app, argc, argv);

  if (opts.length > max_length()) {
    std::cerr << "length " << opts.length << " exceeds the degree budget "
              << max_length() << " (override with FPRES_MAX_LENGTH)\n";
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      return run_analyze(opts);
    }
    if (resolve->parsed()) {
      return run_resolve(opts);
    }
    if (transfer->parsed()) {
      return run_transfer(opts, construction);
    }
    if (fp1->parsed()) {
      return run_fp1(opts, cap);
    }
    if (pipeline->parsed()) {
      return run_transfer(opts, "pipeline");
    }
    if (semilattice->parsed()) {
      return run_semilattice(opts);
    }
    if (bi->parsed()) {
      return run_bi(opts);
    }
    if (corpus->parsed()) {
      return run_corpus(corpus_dir.empty() ? std::nullopt
                                           : std::make_optional(corpus_dir),
                        opts.length, opts.out);
    }
    if (catalog_cmd->parsed()) {
      return run_catalog_dump(catalog_dir);
    }
  } catch (TransferVerificationError const& err) {
    // construction-level failures still produce a structured report
    std::cerr << err.what() << "\n";
    return kExitVerificationFailed;
  } catch (ParseError const& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (Error const& err) {
    std::cerr << err.what() << "\n";
    return kExitVerificationFailed;
  } catch (std::exception const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
