#include "confalg/check.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace confalg {

std::string CheckReport::residual_string() const {
  return verdict ? std::string("0") : residual.to_string(residual_module);
}

std::string CheckReport::summary() const {
  if (verdict) return subject + ": pass";
  std::string w;
  for (const auto& name : witness) w += (w.empty() ? "" : ",") + name;
  return subject + ": FAIL " + axiom_id + " at (" + w + ") residual " + residual_string();
}

namespace {

std::vector<std::size_t> unrank(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> tuple(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    tuple[s] = index % dims[s];
    index /= dims[s];
  }
  return tuple;
}

}  // namespace

CheckReport check_tuples(const std::string& subject, const std::vector<const FreeModule*>& slots,
                         const FreeModule& residual_module, const TupleCheck& fn,
                         const CheckOptions& options) {
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto* m : slots) {
    dims.push_back(m->rank());
    total *= m->rank();
  }

  CheckReport report;
  report.subject = subject;
  report.residual_module = residual_module;

  auto fill = [&](std::size_t index, Violation v) {
    report.verdict = false;
    report.axiom_id = std::move(v.axiom_id);
    report.residual = std::move(v.residual);
    report.witness_index = unrank(index, dims);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      report.witness.push_back(slots[s]->basis[report.witness_index[s]]);
    }
  };

  const unsigned threads = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(total)));
  if (threads <= 1) {
    for (std::size_t n = 0; n < total; ++n) {
      if (auto v = fn(unrank(n, dims))) {
        fill(n, std::move(*v));
        return report;
      }
    }
    return report;
  }

  // Strided workers; a violation lowers the bound so later tuples are
  // skipped. The lowest failing index is re-evaluated for the report.
  std::atomic<std::size_t> best{total};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t n = t; n < total; n += threads) {
        if (n >= best.load()) return;
        if (fn(unrank(n, dims))) {
          std::size_t cur = best.load();
          while (n < cur && !best.compare_exchange_weak(cur, n)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (best.load() < total) fill(best.load(), std::move(*fn(unrank(best.load(), dims))));
  return report;
}

CheckReport first_failure(const std::string& subject, std::vector<CheckReport> reports) {
  CheckReport out;
  out.subject = subject;
  std::vector<std::string> notes;
  for (auto& r : reports) {
    notes.insert(notes.end(), r.notes.begin(), r.notes.end());
    if (!r.verdict && out.verdict) {
      std::string inner = r.subject;
      out = std::move(r);
      out.subject = subject;
      if (!inner.empty() && inner != subject) out.axiom_id = inner + "/" + out.axiom_id;
    }
  }
  out.notes = std::move(notes);
  return out;
}

}  // namespace confalg
