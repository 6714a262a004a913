#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "confalg/check.hpp"

namespace confalg::cli {

using Json = nlohmann::ordered_json;

/// Collects the outcome of one command and renders it either as aligned
/// text or as JSON. Rendering is deterministic: entries keep insertion
/// order.
class Report {
 public:
  Report(std::string command, std::string file);

  void add(const CheckReport& r);
  /// A named result that is not a CheckReport (counts, tables, points).
  void add_field(const std::string& key, Json value);
  /// An extra line of the text rendering.
  void add_line(std::string text);
  void set_verdict(bool v) { verdict_ = v; }

  bool verdict() const { return verdict_; }
  std::string render(bool json) const;

 private:
  std::string command_;
  std::string file_;
  bool verdict_ = true;
  std::vector<CheckReport> checks_;
  Json fields_ = Json::object();
  std::vector<std::string> lines_;
};

Json to_json(const CheckReport& r);

}  // namespace confalg::cli
