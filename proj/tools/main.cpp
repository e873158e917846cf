#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "braidgc/abelian.hpp"
#include "braidgc/code.hpp"
#include "braidgc/conjtable.hpp"
#include "braidgc/perm.hpp"
#include "braidgc/quotient.hpp"
#include "braidgc/schreier.hpp"
#include "braidgc/scott.hpp"
#include "braidgc/solver.hpp"
#include "braidgc/word.hpp"

namespace {

constexpr int kExitTrivial = 0;
constexpr int kExitNontrivial = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string code_path;
  std::string word_text;
  std::string format = "text";
  int n = 2;
  int degree = 2;
};

braidgc::GeneticCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw braidgc::parse_error("cannot open code file: " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return braidgc::parse_code(buf.str());
}

bool lines_mode(const Options& opt) { return opt.format == "lines"; }

int run_solve(const Options& opt) {
  braidgc::GeneticCode code = load_code(opt.code_path);
  braidgc::Word w = braidgc::Word::parse(opt.word_text);
  if (auto err = braidgc::validate_word(w, opt.n, code.generators))
    throw braidgc::parse_error(*err, 0);
  braidgc::Verdict v = braidgc::solve(w, code, opt.n);
  if (lines_mode(opt)) {
    std::cout << "verdict=" << (v.trivial ? "trivial" : "nontrivial") << '\n';
    if (v.witness) std::cout << "witness=" << *v.witness << '\n';
  } else if (v.trivial) {
    std::cout << "trivial\n";
  } else {
    std::cout << "nontrivial (" << *v.witness << ")\n";
  }
  return v.trivial ? kExitTrivial : kExitNontrivial;
}

int run_reduce(const Options& opt) {
  braidgc::Word w = braidgc::Word::parse(opt.word_text);
  std::cout << (lines_mode(opt) ? "word=" : "") << w.str() << '\n';
  return 0;
}

int run_project(const Options& opt) {
  braidgc::Word w = braidgc::Word::parse(opt.word_text);
  braidgc::Permutation p = braidgc::project(w, opt.n);
  std::cout << (lines_mode(opt) ? "permutation=" : "") << p.cycle_notation() << '\n';
  return 0;
}

int run_rewrite(const Options& opt) {
  braidgc::Word w = braidgc::Word::parse(opt.word_text);
  braidgc::Word out = braidgc::rs_rewrite(w, opt.n);
  std::cout << (lines_mode(opt) ? "word=" : "") << out.str() << '\n';
  return 0;
}

int run_collect(const Options& opt) {
  braidgc::Word w = braidgc::Word::parse(opt.word_text);
  braidgc::Collected col = braidgc::collect(w, opt.n);
  if (lines_mode(opt)) {
    std::cout << "u=" << col.u.str() << '\n' << "tail=" << col.tail.str() << '\n';
  } else {
    std::cout << "u: " << col.u.str() << '\n' << "tail: " << col.tail.str() << '\n';
  }
  return 0;
}

int run_scott(const Options& opt) {
  braidgc::ScottReport rep = braidgc::scott_refute();
  if (lines_mode(opt)) {
    for (const braidgc::ScottStep& s : rep.steps)
      std::cout << "step=" << s.name << ": " << (s.ok ? "ok" : "FAILED") << '\n';
    std::cout << "lhs=" << rep.final_lhs.str() << '\n'
              << "rhs=" << rep.final_rhs.str() << '\n'
              << "verdict=" << (rep.contradictory ? "contradictory" : "consistent") << '\n';
  } else {
    for (const braidgc::ScottStep& s : rep.steps)
      std::cout << (s.ok ? "  [ok] " : "  [FAILED] ") << s.name << " (" << s.detail << ")\n";
    std::cout << "derived equation: " << rep.final_lhs.str() << " = " << rep.final_rhs.str()
              << '\n'
              << (rep.contradictory ? "CONTRADICTORY" : "CONSISTENT") << '\n';
  }
  return rep.contradictory ? 0 : 1;
}

int run_dump(const Options& opt) {
  braidgc::GeneticCode code = load_code(opt.code_path);
  braidgc::Presentation pres = braidgc::build_braid_presentation(code, opt.n);
  if (lines_mode(opt)) {
    std::cout << "generators=";
    for (std::size_t i = 0; i < pres.generators.size(); ++i)
      std::cout << (i ? " " : "") << braidgc::symbol_text(pres.generators[i]);
    std::cout << '\n';
    for (const braidgc::Word& r : pres.relators) std::cout << "relator=" << r.str() << '\n';
  } else {
    std::cout << "generators:";
    for (const auto& g : pres.generators) std::cout << ' ' << braidgc::symbol_text(g);
    std::cout << '\n';
    for (const braidgc::Word& r : pres.relators) std::cout << r.str() << '\n';
  }
  return 0;
}

int run_quotients(const Options& opt) {
  braidgc::GeneticCode code = load_code(opt.code_path);
  braidgc::Presentation pres = braidgc::build_braid_presentation(code, opt.n);
  auto quotients = braidgc::enumerate_finite_quotients(pres, opt.degree);
  if (lines_mode(opt)) {
    std::cout << "degree=" << opt.degree << '\n' << "count=" << quotients.size() << '\n';
  } else {
    std::cout << "S_" << opt.degree << " quotient assignments: " << quotients.size() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid groups of genetic codes: presentations, word problem, verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "lines"}));
  };
  auto add_word = [&opt](CLI::App* cmd) {
    cmd->add_option("word", opt.word_text, "word in the word grammar")->required();
  };

  CLI::App* solve = app.add_subcommand("solve", "decide whether a word is trivial");
  solve->add_option("--code", opt.code_path, "genetic code file")->required();
  solve->add_option("-n", opt.n, "strand count")->required();
  add_word(solve);
  add_format(solve);

  CLI::App* reduce = app.add_subcommand("reduce", "freely reduce a word");
  add_word(reduce);
  add_format(reduce);

  CLI::App* project = app.add_subcommand("project", "image in the symmetric group");
  project->add_option("-n", opt.n, "strand count")->required();
  add_word(project);
  add_format(project);

  CLI::App* rewrite = app.add_subcommand("rewrite", "rewrite onto the strand-1 stabilizer generators");
  rewrite->add_option("-n", opt.n, "strand count")->required();
  add_word(rewrite);
  add_format(rewrite);

  CLI::App* collect = app.add_subcommand("collect", "split a stabilizer word as u * tail");
  collect->add_option("-n", opt.n, "strand count")->required();
  add_word(collect);
  add_format(collect);

  CLI::App* scott = app.add_subcommand("scott", "replay the refutation of Scott's relations");
  add_format(scott);

  CLI::App* dump = app.add_subcommand("dump-presentation", "print generators and relators");
  dump->add_option("--code", opt.code_path, "genetic code file")->required();
  dump->add_option("-n", opt.n, "strand count")->required();
  add_format(dump);

  CLI::App* quot = app.add_subcommand("quotients", "count symmetric-group quotients");
  quot->add_option("--code", opt.code_path, "genetic code file")->required();
  quot->add_option("-n", opt.n, "strand count")->required();
  quot->add_option("--degree", opt.degree, "symmetric group degree")->required();
  add_format(quot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (project->parsed()) return run_project(opt);
    if (rewrite->parsed()) return run_rewrite(opt);
    if (collect->parsed()) return run_collect(opt);
    if (scott->parsed()) return run_scott(opt);
    if (dump->parsed()) return run_dump(opt);
    if (quot->parsed()) return run_quotients(opt);
  } catch (const braidgc::parse_error& e) {
    std::cerr << "error at offset " << e.offset() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const braidgc::unsupported_base& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
