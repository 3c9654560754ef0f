// Command-line front end: word utilities, mapping-class actions, subgroup
// queries, and the batch verification suites over the embedded corpus.
//
// Exit codes: 0 success, 1 verification failures, 2 parse error,
// 3 unsupported presentation flavor, 4 corpus integrity failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pi1/action.hpp"
#include "pi1/folding.hpp"
#include "pi1/plus_subgroup.hpp"
#include "pi1/verify.hpp"
#include "pi1/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitCorpus = 4;

int exit_code_for(const pi1::Error& e) {
  switch (e.code()) {
    case pi1::Errc::corpus_error: return kExitCorpus;
    case pi1::Errc::requires_closed:
    case pi1::Errc::no_relator:
    case pi1::Errc::unsupported_level: return kExitUnsupported;
    default: return kExitParse;
  }
}

pi1::Level level_from(const std::string& text) {
  if (text == "pi") return pi1::Level::pi;
  if (text == "pi_plus") return pi1::Level::pi_plus;
  pi1::raise(pi1::Errc::unsupported_level, "level must be pi or pi_plus");
}

std::vector<pi1::Word> parse_generator_list(const std::string& text,
                                            const pi1::AlphabetRef& alphabet) {
  std::vector<pi1::Word> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto semi = text.find(';', start);
    std::string piece =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (piece.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(pi1::parse_word(piece, alphabet));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return gens;
}

// Generator set for member/rank: explicit --gens list, or the pi_plus
// generator expansions with --plus.
std::vector<pi1::Word> subgroup_generators(const pi1::SurfaceKind& kind,
                                           const std::string& gens_text, bool use_plus) {
  if (use_plus) {
    if (kind.orientable)
      pi1::raise(pi1::Errc::invalid_kind, "--plus needs a non-orientable surface");
    std::vector<pi1::Word> gens;
    pi1::AlphabetRef plus = pi1::Alphabet::plus(kind.genus, kind.boundary);
    for (const pi1::GenSym& s : plus->symbols())
      gens.push_back(pi1::plus_generator_expansion(kind, s));
    return gens;
  }
  if (gens_text.empty())
    pi1::raise(pi1::Errc::invalid_name, "provide --gens \"w1; w2; ...\" or --plus");
  return parse_generator_list(gens_text, pi1::Alphabet::for_kind(kind));
}

std::string load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) pi1::raise(pi1::Errc::corpus_error, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surface group word arithmetic and mapping-class action verification"};
  app.set_version_flag("--version", pi1::kVersion);
  app.require_subcommand(1);

  std::string surface_text, word_text, level_text, name_text, dir_text;
  std::string gens_text, suite_text = "all", report_path, corpus_dir, out_dir;
  std::string g_range = "1..6", n_range = "0..4";
  bool use_plus = false;
  int jobs = 1;

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("surface", surface_text)->required();
  reduce->add_option("word", word_text)->required();

  auto* wp = app.add_subcommand("wp", "word problem: trivial or nontrivial");
  wp->add_option("surface", surface_text)->required();
  wp->add_option("word", word_text)->required();
  wp->add_flag("--plus", use_plus, "use the pi_plus presentation");

  auto* apply_cmd = app.add_subcommand("apply", "apply a mapping-class generator to a word");
  apply_cmd->add_option("surface", surface_text)->required();
  apply_cmd->add_option("level", level_text)->required()->check(CLI::IsMember({"pi", "pi_plus"}));
  apply_cmd->add_option("name", name_text)->required();
  apply_cmd->add_option("dir", dir_text)->required()->check(CLI::IsMember({"fwd", "bwd"}));
  apply_cmd->add_option("word", word_text)->required();

  auto* member = app.add_subcommand("member", "subgroup membership through Stallings folding");
  member->add_option("surface", surface_text)->required();
  member->add_option("word", word_text)->required();
  member->add_option("--gens", gens_text, "semicolon-separated generator words");
  member->add_flag("--plus", use_plus, "use the pi_plus generator expansions");

  auto* rank = app.add_subcommand("rank", "rank and index of a folded subgroup graph");
  rank->add_option("surface", surface_text)->required();
  rank->add_option("--gens", gens_text, "semicolon-separated generator words");
  rank->add_flag("--plus", use_plus, "use the pi_plus generator expansions");

  auto* verify = app.add_subcommand("verify", "run a verification suite over the corpus");
  verify->add_option("suite", suite_text)
      ->check(CLI::IsMember({"replay", "inverses", "relator", "crosslevel", "iso", "closure",
                             "all"}));
  verify->add_option("--g", g_range, "genus range A..B");
  verify->add_option("--n", n_range, "boundary range A..B");
  verify->add_option("--report", report_path, "write the report to this path");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--corpus", corpus_dir,
                     "load actions.tbl and identities.tbl from this directory");

  auto* dump = app.add_subcommand("dump-corpus", "write the embedded corpus for audit");
  dump->add_option("--out", out_dir, "directory for actions.tbl and identities.tbl");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reduce) {
      pi1::SurfaceKind kind = pi1::parse_surface(surface_text);
      pi1::Word w = pi1::parse_word(word_text, pi1::Alphabet::for_kind(kind));
      std::cout << pi1::to_string(w) << "\n";
      return kExitOk;
    }

    if (*wp) {
      pi1::SurfaceKind kind = pi1::parse_surface(surface_text);
      if (use_plus) {
        pi1::PlusPresentation p = pi1::plus_presentation(kind);
        if (!p.relators.empty())
          pi1::raise(pi1::Errc::unsupported_level,
                     "no word problem for the two-relator closed pi_plus presentation");
        pi1::Word w = pi1::parse_word(word_text, p.alphabet);
        std::cout << (w.empty() ? "trivial" : "nontrivial") << "\n";
        return kExitOk;
      }
      pi1::SurfacePresentation p = pi1::pi1_presentation(kind);
      pi1::Word w = pi1::parse_word(word_text, p.alphabet);
      std::cout << (pi1::is_trivial(w, p) ? "trivial" : "nontrivial") << "\n";
      return kExitOk;
    }

    if (*apply_cmd) {
      pi1::SurfaceKind kind = pi1::parse_surface(surface_text);
      pi1::Level level = level_from(level_text);
      pi1::ActionGenName name = pi1::parse_action_name(name_text);
      pi1::AutoTable table = pi1::action_table(pi1::Corpus::embedded(), name, level, kind);
      pi1::Word w = pi1::parse_word(word_text, table.alphabet);
      pi1::Word image = pi1::apply(table, pi1::parse_direction(dir_text), w);
      std::cout << pi1::to_string(image) << "\n";
      return kExitOk;
    }

    if (*member) {
      pi1::SurfaceKind kind = pi1::parse_surface(surface_text);
      auto gens = subgroup_generators(kind, gens_text, use_plus);
      pi1::AlphabetRef alphabet = pi1::Alphabet::for_kind(kind);
      pi1::SubgroupGraph graph = pi1::SubgroupGraph::build(alphabet, gens);
      pi1::Word w = pi1::parse_word(word_text, alphabet);
      std::cout << (graph.member(w) ? "member" : "nonmember") << "\n";
      return kExitOk;
    }

    if (*rank) {
      pi1::SurfaceKind kind = pi1::parse_surface(surface_text);
      auto gens = subgroup_generators(kind, gens_text, use_plus);
      pi1::SubgroupGraph graph =
          pi1::SubgroupGraph::build(pi1::Alphabet::for_kind(kind), gens);
      std::cout << "rank: " << graph.rank() << "\n";
      auto index = graph.index();
      std::cout << "index: " << (index ? std::to_string(*index) : std::string("infinite"))
                << "\n";
      return kExitOk;
    }

    if (*verify) {
      pi1::VerifyOptions options;
      options.g_range = pi1::parse_range(g_range);
      options.n_range = pi1::parse_range(n_range);
      options.jobs = jobs;
      const pi1::Corpus* corpus = &pi1::Corpus::embedded();
      std::optional<pi1::Corpus> external;
      if (!corpus_dir.empty()) {
        std::filesystem::path dir(corpus_dir);
        external = pi1::Corpus::parse(load_file(dir / "actions.tbl"),
                                      load_file(dir / "identities.tbl"),
                                      /*enforce_checksum=*/true);
        corpus = &*external;
      }
      pi1::VerificationReport report =
          pi1::run_suite(*corpus, pi1::parse_suite(suite_text), options);
      if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        pi1::write_report(report, out);
      }
      pi1::write_report(report, std::cout);
      return report.ok() ? kExitOk : kExitFailures;
    }

    if (*dump) {
      const pi1::Corpus& corpus = pi1::Corpus::embedded();
      if (out_dir.empty()) {
        std::cout << "== actions.tbl ==\n"
                  << corpus.actions_text() << "== identities.tbl ==\n"
                  << corpus.identities_text();
        return kExitOk;
      }
      std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      std::ofstream(dir / "actions.tbl", std::ios::binary) << corpus.actions_text();
      std::ofstream(dir / "identities.tbl", std::ios::binary) << corpus.identities_text();
      return kExitOk;
    }
  } catch (const pi1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
