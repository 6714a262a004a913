#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace confalg::cli {

Report::Report(std::string command, std::string file)
    : command_(std::move(command)), file_(std::move(file)) {}

void Report::add(const CheckReport& r) {
  checks_.push_back(r);
  if (!r.verdict) verdict_ = false;
}

void Report::add_field(const std::string& key, Json value) { fields_[key] = std::move(value); }

void Report::add_line(std::string text) { lines_.push_back(std::move(text)); }

Json to_json(const CheckReport& r) {
  Json j;
  j["subject"] = r.subject;
  j["verdict"] = r.verdict;
  if (!r.verdict) {
    j["axiom"] = r.axiom_id;
    j["witness"] = r.witness;
    Json residual = Json::array();
    for (std::size_t k = 0; k < r.residual.size(); ++k) {
      if (r.residual[k].is_zero()) continue;
      const std::string name = k < r.residual_module.rank() ? r.residual_module.basis[k] : "";
      residual.push_back(Json{{"basis", name}, {"coeff", r.residual[k].to_string()}});
    }
    j["residual"] = residual;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string Report::render(bool json) const {
  if (json) {
    Json root;
    root["command"] = command_;
    root["file"] = file_;
    root["verdict"] = verdict_;
    Json checks = Json::array();
    for (const auto& c : checks_) checks.push_back(to_json(c));
    root["checks"] = checks;
    for (const auto& [key, value] : fields_.items()) root[key] = value;
    return root.dump(2) + "\n";
  }

  std::ostringstream os;
  os << command_ << ' ' << file_ << '\n';
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.subject.size());
  for (const auto& c : checks_) {
    os << "  " << c.subject << std::string(width - c.subject.size() + 2, ' ');
    if (c.verdict) {
      os << "pass\n";
    } else {
      std::string w;
      for (const auto& name : c.witness) w += (w.empty() ? "" : ",") + name;
      os << "FAIL " << c.axiom_id << " at (" << w << ")\n";
      os << "  " << std::string(width + 2, ' ') << "residual: " << c.residual_string() << '\n';
    }
    for (const auto& n : c.notes) os << "  " << std::string(width + 2, ' ') << "note: " << n << '\n';
  }
  for (const auto& l : lines_) os << l << '\n';
  os << "verdict: " << (verdict_ ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace confalg::cli
