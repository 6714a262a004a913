#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace confalg::cli {

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  int max_degree = 6;
  unsigned threads = 1;
};

struct CheckArgs {
  std::string file;
  std::string kind;
};

struct OperatorArgs {
  std::string file;
  std::string op;
  std::string test;
  std::string weight = "0";
  std::string with;
};

struct DeriveArgs {
  std::string file;
  std::string what;
  std::string op;
  std::string flavor;
  std::string form;
  std::string out;
};

struct SequationArgs {
  std::string file;
  std::string r;
  bool canonical = false;
  std::string flavor;
};

struct SearchArgs {
  std::string file;
  std::string test;
  std::string weight = "0";
  int degree = 0;
  std::string grid;
  std::string classify;
};

/// Each command writes its report to `out` and returns the exit code:
/// 0 when every check passes, 1 when one fails. Input errors propagate as
/// InputError and are mapped to exit code 2 by the caller.
int run_check(const GlobalOptions& g, const CheckArgs& a, std::ostream& out);
int run_operator(const GlobalOptions& g, const OperatorArgs& a, std::ostream& out);
int run_derive(const GlobalOptions& g, const DeriveArgs& a, std::ostream& out);
int run_sequation(const GlobalOptions& g, const SequationArgs& a, std::ostream& out);
int run_search(const GlobalOptions& g, const SearchArgs& a, std::ostream& out);

}  // namespace confalg::cli
