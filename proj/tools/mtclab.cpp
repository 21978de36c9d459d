#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mtclab/catalog.hpp"
#include "mtclab/chain.hpp"
#include "mtclab/classifier.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/io.hpp"
#include "mtclab/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFlagged = 1;
constexpr int kInputError = 2;

int emit(const mtclab::Document& doc, const std::string& format) {
  std::cout << mtclab::render(doc, mtclab::parse_format(format));
  return doc.violations ? kFlagged : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mtclab: fusion rings, modular data and rank classification"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  std::string input;
  auto* validate = app.add_subcommand("validate", "Check the fusion ring axioms");
  validate->add_option("file", input, "Fusion ring file")->required();
  auto* analyze = app.add_subcommand("analyze", "Dimensions, grading, adjoint, stabilizers, central series");
  analyze->add_option("file", input, "Fusion ring file")->required();
  auto* mverify = app.add_subcommand("modular-verify", "Balancing, modularity and S-matrix zero checks");
  mverify->add_option("file", input, "Modular data file")->required();

  int rank = 0;
  std::string trace_path;
  auto* classify = app.add_subcommand("classify", "Case analysis for MNSD modular categories of a given rank");
  classify->add_option("--rank", rank, "Odd rank")->required();
  classify->add_option("--trace", trace_path, "Write the proof trace to this file");

  int bound = 0;
  auto* oracle = app.add_subcommand("oracle-dims", "Exhaustive search for perfect-case dimension tuples");
  oracle->add_option("--rank", rank, "Odd rank")->required();
  oracle->add_option("--bound", bound, "Largest dimension tried (odd, at most 99)")->required();

  std::string out_dir;
  auto* exporter = app.add_subcommand("examples-export", "Write the bundled example catalog");
  exporter->add_option("--out", out_dir, "Output directory")->required();

  for (auto* sub : {validate, analyze, mverify, classify, oracle, exporter})
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (validate->parsed()) return emit(mtclab::validation_document(mtclab::read_fusion_ring(input)), format);
    if (analyze->parsed()) return emit(mtclab::analysis_document(mtclab::read_fusion_ring(input)), format);
    if (mverify->parsed()) return emit(mtclab::modular_document(mtclab::read_modular_data(input)), format);
    if (classify->parsed()) {
      const auto c = mtclab::classify(rank);
      if (!trace_path.empty()) mtclab::write_text_file(trace_path, mtclab::format_trace(c.trace));
      return emit(mtclab::classification_document(c), format);
    }
    if (oracle->parsed()) {
      if (rank < 1 || rank % 2 == 0) throw mtclab::InputError("rank must be odd and positive");
      return emit(mtclab::oracle_document(rank, bound, mtclab::brute_force_dims(rank, bound)), format);
    }
    if (exporter->parsed()) {
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      mtclab::Document doc{"examples-export", {{"files", {}}}, false};
      for (const auto& e : mtclab::ring_catalog()) {
        const std::string name = e.name + ".ring";
        mtclab::write_text_file(dir / name, mtclab::write_fusion_ring(e.ring));
        doc.sections[0].items.push_back({name, "rank " + std::to_string(e.ring.rank())});
      }
      for (const auto& e : mtclab::modular_catalog()) {
        const std::string name = e.name + ".modular";
        mtclab::write_text_file(dir / name, mtclab::write_modular_data(e.md));
        doc.sections[0].items.push_back({name, "rank " + std::to_string(e.md.rank()) + ", conductor " +
                                                   std::to_string(e.md.conductor())});
      }
      return emit(doc, format);
    }
  } catch (const mtclab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const mtclab::UnsupportedInput& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const mtclab::CertificationFailure& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kFlagged;
  }
  return kInputError;
}
