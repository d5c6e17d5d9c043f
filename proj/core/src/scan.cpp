#include "longcycle/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <memory>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {

CycleConstraint CycleConstraint::at_least(int length) {
  if (length < 3) throw DomainError("forbidden cycle length must be at least 3");
  return {Mode::AtLeast, length, -1};
}

CycleConstraint CycleConstraint::exactly(int length) {
  if (length < 3) throw DomainError("forbidden cycle length must be at least 3");
  return {Mode::Exactly, length, length};
}

CycleConstraint CycleConstraint::window(int lo, int hi) {
  if (lo < 3 || hi < lo) throw DomainError("cycle window needs 3 <= lo <= hi");
  return {Mode::Window, lo, hi};
}

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

CycleConstraint CycleConstraint::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("constraint must look like atleast:L, exactly:L or window:LO:HI");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (kind == "atleast") return at_least(parse_int(rest));
  if (kind == "exactly") return exactly(parse_int(rest));
  if (kind == "window") {
    const auto second = rest.find(':');
    if (second == std::string_view::npos) throw DomainError("window constraint needs LO:HI");
    return window(parse_int(rest.substr(0, second)), parse_int(rest.substr(second + 1)));
  }
  throw DomainError("unknown constraint kind '" + std::string(kind) + "'");
}

std::optional<int> CycleConstraint::hi() const {
  if (mode_ == Mode::AtLeast) return std::nullopt;
  return hi_;
}

bool CycleConstraint::is_free(const Graph& g, SearchBudget budget) const {
  const int top = mode_ == Mode::AtLeast ? g.order() : std::min(hi_, g.order());
  if (lo_ > top) return true;
  return !has_cycle_length_in(g, lo_, top, budget);
}

bool recheck_free(const Graph& g, const CycleConstraint& constraint, SearchBudget budget) {
  const int n = g.order();
  const int top = constraint.hi() ? std::min(*constraint.hi(), n) : n;
  if (constraint.lo() > top) return true;
  if (n <= kCycleMaskMaxOrder) {
    const std::uint64_t lengths = cycle_length_mask(g);
    for (int l = constraint.lo(); l <= top; ++l)
      if (lengths >> l & 1U) return false;
    return true;
  }
  if (!constraint.hi()) return circumference_length(g, budget) < constraint.lo();
  for (int l = constraint.lo(); l <= top; ++l)
    if (has_cycle_length_in(g, l, l, budget)) return false;
  return true;
}

std::string CycleConstraint::to_string() const {
  switch (mode_) {
    case Mode::AtLeast: return "atleast:" + std::to_string(lo_);
    case Mode::Exactly: return "exactly:" + std::to_string(lo_);
    case Mode::Window: return "window:" + std::to_string(lo_) + ":" + std::to_string(hi_);
  }
  return "?";
}

const char* to_string(TargetKind t) { return t == TargetKind::Snk ? "snk" : "snkp"; }

TargetKind parse_target(std::string_view text) {
  if (text == "snk") return TargetKind::Snk;
  if (text == "snkp") return TargetKind::SnkPlus;
  throw DomainError("target must be snk or snkp");
}

Graph target_graph(TargetKind target, int n, int k) {
  return target == TargetKind::Snk ? construct_snk(n, k) : construct_snk_plus(n, k);
}

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::TargetIsUniqueMax: return "TargetIsUniqueMax";
    case ScanVerdict::TargetTied: return "TargetTied";
    case ScanVerdict::TargetBeaten: return "TargetBeaten";
    case ScanVerdict::TargetNotFree: return "TargetNotFree";
  }
  return "?";
}

GraphStream corpus_stream(std::vector<Graph> graphs) {
  auto shared = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto index = std::make_shared<std::size_t>(0);
  return [shared, index]() -> std::optional<Graph> {
    if (*index >= shared->size()) return std::nullopt;
    return (*shared)[(*index)++];
  };
}

GraphStream enumeration_stream(int n, EnumerationOptions options) {
  auto e = std::make_shared<LabeledEnumerator>(n, options);
  return [e]() { return e->next(); };
}

namespace {

struct Evaluation {
  bool is_free = false;
  bool is_target = false;
  double mu = 0;
  std::optional<std::string> failure;
};

Evaluation evaluate(const Graph& g, int k, const CycleConstraint& constraint, TargetKind target,
                    SearchBudget budget) {
  Evaluation ev;
  try {
    ev.is_free = constraint.is_free(g, budget);
    if (ev.is_free) {
      ev.mu = spectral_radius(g).mu;
      ev.is_target = target == TargetKind::Snk ? is_snk(g, k) : is_snk_plus(g, k);
    }
  } catch (const BudgetExceeded& e) {
    ev.is_free = false;
    ev.failure = e.what();
  }
  return ev;
}

void evaluate_batch(const std::vector<Graph>& batch, std::vector<Evaluation>& out, int jobs, int k,
                    const CycleConstraint& constraint, TargetKind target, SearchBudget budget) {
  out.assign(batch.size(), {});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) {
      out[i] = evaluate(batch[i], k, constraint, target, budget);
    }
  };
  if (jobs <= 1 || batch.size() < 2) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
}

}  // namespace

ScanReport scan_extremal(const GraphStream& source, int n, int k, const CycleConstraint& constraint,
                         TargetKind target, const ScanOptions& options) {
  ScanReport report;
  report.n = n;
  report.k = k;
  report.constraint = constraint;
  report.target = target;
  const Graph target_g = target_graph(target, n, k);
  report.mu_target = spectral_radius(target_g).mu;
  // The per-graph budget is for the scanned graphs; the target always gets the default.
  report.target_free = constraint.is_free(target_g);

  const int jobs = options.jobs > 0 ? options.jobs
                                    : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  double best_mu = -1;
  std::vector<ScanRecord> candidates;
  std::vector<Graph> batch;
  std::vector<Evaluation> results;
  bool exhausted = false;

  while (!exhausted) {
    batch.clear();
    while (batch.size() < options.batch_size) {
      auto g = source();
      if (!g) {
        exhausted = true;
        break;
      }
      if (g->order() != n) {
        throw DomainError("corpus mixes orders: expected " + std::to_string(n) + ", got " +
                          std::to_string(g->order()) + " at index " +
                          std::to_string(report.count_scanned + batch.size()));
      }
      batch.push_back(std::move(*g));
    }
    evaluate_batch(batch, results, jobs, k, constraint, target, options.budget);

    for (std::size_t i = 0; i < batch.size(); ++i) {
      const std::uint64_t index = report.count_scanned++;
      const Evaluation& ev = results[i];
      if (ev.failure) {
        report.complete = false;
        report.failures.push_back({index, emit_graph6(batch[i]), *ev.failure});
        continue;
      }
      if (!ev.is_free) continue;
      ++report.count_free;
      ScanRecord rec{emit_graph6(batch[i]), n, k, constraint, ev.mu, true, ev.is_target};
      if (options.keep_free_records) report.free_records.push_back(rec);
      if (ev.mu > best_mu) {
        best_mu = ev.mu;
        std::erase_if(candidates,
                      [&](const ScanRecord& r) { return r.mu < best_mu - kMaximizerTieWindow; });
      }
      if (ev.mu >= best_mu - kMaximizerTieWindow) candidates.push_back(std::move(rec));
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const ScanRecord& a, const ScanRecord& b) { return a.graph6 < b.graph6; });
  for (const ScanRecord& r : candidates) {
    if (!recheck_free(parse_graph6(r.graph6), constraint, options.budget)) {
      throw std::logic_error("second cycle oracle disagrees on maximizer " + r.graph6);
    }
  }
  report.maximizers = std::move(candidates);

  if (!report.target_free) {
    report.verdict = ScanVerdict::TargetNotFree;
  } else if (report.maximizers.empty() || best_mu < report.mu_target - kMaximizerTieWindow) {
    report.verdict = ScanVerdict::TargetIsUniqueMax;
  } else if (best_mu > report.mu_target + kMaximizerTieWindow) {
    report.verdict = ScanVerdict::TargetBeaten;
  } else {
    const bool all_target = std::all_of(report.maximizers.begin(), report.maximizers.end(),
                                        [](const ScanRecord& r) { return r.is_target; });
    report.verdict = all_target ? ScanVerdict::TargetIsUniqueMax : ScanVerdict::TargetTied;
  }
  return report;
}

}  // namespace longcycle
