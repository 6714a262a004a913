#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "confalg/error.hpp"

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace confalg::cli;

  CLI::App app{"Checks and constructions for left-symmetric conformal algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--seed", g.seed, "Seed for randomized spot checks");
  app.add_option("--max-degree", g.max_degree, "Largest accepted degree in lm, d, d1, d2")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", g.threads, "Worker threads for identity checks");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Verify the axioms of a definition file");
  c->add_option("file", check.file, "Definition file")->required();
  c->add_option("--kind", check.kind, "Check as this kind instead of the declared one");

  OperatorArgs op;
  auto* o = app.add_subcommand("operator", "Test a named operator");
  o->add_option("file", op.file, "Definition file")->required();
  o->add_option("--op", op.op, "Operator name")->required();
  o->add_option("--test", op.test, "o, rb, nijenhuis or compatible")
      ->required()
      ->check(CLI::IsMember({"o", "rb", "nijenhuis", "compatible"}));
  o->add_option("--weight", op.weight, "Rota-Baxter weight");
  o->add_option("--with", op.with, "Second operator for --test compatible");

  DeriveArgs derive;
  auto* d = app.add_subcommand("derive", "Build a derived structure and write it as JSON");
  d->add_option("file", derive.file, "Definition file")->required();
  d->add_option("--what", derive.what,
                "commutator, horizontal, vertical, transpose, semidirect, dual, induced-ld, "
                "deformed, pseudo-hessian, canonical-r, r-from-t, dendriform-ld, "
                "dendriform-sum, quadri-succ-prec, quadri-vee-wedge, quadri-star, quadri-ld")
      ->required();
  d->add_option("--op", derive.op, "Operator used by the construction");
  d->add_option("--flavor", derive.flavor, "vertical/horizontal, or a dual flavor");
  d->add_option("--form", derive.form, "Bilinear form for pseudo-hessian");
  d->add_option("--out", derive.out, "Output file (default: standard output)");

  SequationArgs seq;
  auto* s = app.add_subcommand("sequation", "Evaluate the conformal S-equation");
  s->add_option("file", seq.file, "Definition file")->required();
  s->add_option("--r", seq.r, "Tensor name");
  s->add_flag("--canonical", seq.canonical, "Use the canonical tensor of an l-dendriform file");
  s->add_option("--flavor", seq.flavor, "vertical or horizontal (default: both)");

  SearchArgs search;
  auto* f = app.add_subcommand("search", "Enumerate operators of bounded degree on a grid");
  f->add_option("file", search.file, "Definition file")->required();
  f->add_option("--test", search.test, "rb, nijenhuis or o")->required();
  f->add_option("--weight", search.weight, "Rota-Baxter weight");
  f->add_option("--degree", search.degree, "Degree bound in d")->required();
  f->add_option("--grid", search.grid, "Comma-separated rational values")->required();
  f->add_option("--classify", search.classify, "Classify solutions (lw)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (c->parsed()) return run_check(g, check, std::cout);
    if (o->parsed()) return run_operator(g, op, std::cout);
    if (d->parsed()) return run_derive(g, derive, std::cout);
    if (s->parsed()) return run_sequation(g, seq, std::cout);
    if (f->parsed()) return run_search(g, search, std::cout);
  } catch (const confalg::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}
