#include "attrdq/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

#include "attrdq/label_analysis.hpp"

namespace attrdq {

void annotate_columns(Dataset& dataset, const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr,
                      const std::map<std::string, std::string>& descriptions) {
  for (auto& col : dataset.columns) {
    if (auto it = descriptions.find(col.name); it != descriptions.end()) col.description = it->second;
    std::optional<std::string_view> desc;
    if (col.description) desc = *col.description;
    col.analysis = analyze_label(col.name, desc, fmts, abbr);
  }
}

QualityReport assess(const Dataset& dataset, const AnalysisOptions& options) {
  const std::size_t n = dataset.columns.size();
  std::vector<ColumnValidation> results(n);

  std::size_t workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < n && !failed.load();) {
      try {
        results[j] = validate_column(dataset.columns[j], options.markers, options.config);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  auto structural = detect_structural_conflicts(dataset, options.markers, options.config);
  return compile_report(dataset, std::move(results), std::move(structural));
}

QualityReport analyze_dataset(Dataset& dataset, const FormatsDictionary& fmts, const AbbreviationsDictionary& abbr,
                              const AnalysisOptions& options) {
  annotate_columns(dataset, fmts, abbr, options.descriptions);
  return assess(dataset, options);
}

}  // namespace attrdq
