#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "attrdq/dictionaries.hpp"
#include "attrdq/ingestion.hpp"
#include "attrdq/pipeline.hpp"
#include "attrdq/reporting.hpp"
#include "attrdq/text.hpp"

#ifndef ATTRDQ_DEFAULT_DICT_DIR
#define ATTRDQ_DEFAULT_DICT_DIR "share/attrdq"
#endif

namespace attrdq::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string input;
  std::optional<std::string> inner;
  std::string formats_path;
  std::string abbreviations_path;
  std::string delimiter = "auto";
  std::string header = "auto";
  std::string format = "json";
  std::string output;
  std::size_t max_categories = 1000;
  std::optional<std::string> missing_markers;
  std::optional<std::string> descriptions_path;
};

void add_dictionary_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--formats", cfg.formats_path, "Formats dictionary (default: <dict dir>/formats_dictionary.txt)");
  cmd.add_option("--abbreviations", cfg.abbreviations_path,
                 "Abbreviations dictionary (default: <dict dir>/abbreviations_dictionary.txt)");
}

void add_input_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("input", cfg.input, "Delimited file (.csv/.txt/.data, optionally .gz/.zip/.tar.gz)")->required();
  cmd.add_option("--inner", cfg.inner, "Member to read from a .zip or .tar.gz archive");
  cmd.add_option("--delimiter", cfg.delimiter, "Field delimiter")
      ->check(CLI::IsMember({"auto", "comma", "semicolon", "space"}));
  cmd.add_option("--header", cfg.header, "Whether the first line is a header")
      ->check(CLI::IsMember({"auto", "yes", "no"}));
  cmd.add_option("--descriptions", cfg.descriptions_path, "Column descriptions (name<TAB>description per line)");
  add_dictionary_options(cmd, cfg);
}

std::string dictionary_path(const std::string& given, const char* file) {
  return given.empty() ? default_dictionary_dir() + "/" + file : given;
}

LoadOptions load_options(const Config& cfg, const FormatsDictionary& fmts) {
  LoadOptions opts;
  opts.inner = cfg.inner;
  opts.dictionary = &fmts;
  if (cfg.delimiter != "auto") opts.delimiter = delimiter_from_name(cfg.delimiter);
  if (cfg.header == "yes") opts.header = true;
  if (cfg.header == "no") opts.header = false;
  return opts;
}

void emit(const Config& cfg, const std::string& bytes, std::ostream& out) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + cfg.output + "'");
  f << bytes;
}

int cmd_analyze(const Config& cfg, std::ostream& out) {
  const auto fmts = load_formats_dictionary_file(dictionary_path(cfg.formats_path, "formats_dictionary.txt"));
  const auto abbr =
      load_abbreviations_dictionary_file(dictionary_path(cfg.abbreviations_path, "abbreviations_dictionary.txt"));

  const auto format = report_format_from_name(cfg.format);
  if (!format) throw UsageError("unknown report format '" + cfg.format + "'");

  AnalysisOptions options;
  if (cfg.missing_markers) options.markers = MissingMarkerSet::parse(*cfg.missing_markers);
  options.config.max_categories = cfg.max_categories;
  if (cfg.descriptions_path) options.descriptions = load_descriptions(*cfg.descriptions_path);

  auto dataset = load_dataset(cfg.input, load_options(cfg, fmts));
  const auto report = analyze_dataset(dataset, fmts, abbr, options);
  emit(cfg, serialize(report, *format), out);
  return 0;
}

int cmd_detect(const Config& cfg, std::ostream& out) {
  const auto fmts = load_formats_dictionary_file(dictionary_path(cfg.formats_path, "formats_dictionary.txt"));
  const auto abbr =
      load_abbreviations_dictionary_file(dictionary_path(cfg.abbreviations_path, "abbreviations_dictionary.txt"));
  std::map<std::string, std::string> descriptions;
  if (cfg.descriptions_path) descriptions = load_descriptions(*cfg.descriptions_path);

  auto dataset = load_dataset(cfg.input, load_options(cfg, fmts));
  annotate_columns(dataset, fmts, abbr, descriptions);
  std::string text;
  for (const auto& col : dataset.columns) text += col.name + '\t' + col.analysis->format_label() + '\n';
  emit(cfg, text, out);
  return 0;
}

int cmd_dict_stats(const Config& cfg, std::ostream& out) {
  const auto fmts = load_formats_dictionary_file(dictionary_path(cfg.formats_path, "formats_dictionary.txt"));
  std::ostringstream text;
  text << "format\tfrequency\tpercentage\n";
  for (const auto& row : format_frequencies(fmts)) {
    text << row.label << '\t' << row.frequency << '\t' << std::fixed << std::setprecision(2) << row.percentage
         << '\n';
  }
  emit(cfg, text.str(), out);
  return 0;
}

}  // namespace

std::string default_dictionary_dir() {
  if (const char* env = std::getenv("ATTRDQ_DICT_DIR"); env && *env) return env;
  return ATTRDQ_DEFAULT_DICT_DIR;
}

std::map<std::string, std::string> load_descriptions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open descriptions file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto sep = t.find('\t');
    if (sep == std::string_view::npos) sep = t.find(':');
    if (sep == std::string_view::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'name<TAB>description'");
    }
    out[std::string(trim(t.substr(0, sep)))] = std::string(trim(t.substr(sep + 1)));
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Attribute-label driven data quality assessment", "attrdq"};
  app.require_subcommand(1);
  Config cfg;

  auto* analyze = app.add_subcommand("analyze", "Detect column formats, validate contents and write a report");
  add_input_options(*analyze, cfg);
  analyze->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "text", "csv"}));
  analyze->add_option("--output,-o", cfg.output, "Write the report here instead of stdout");
  analyze->add_option("--max-categories", cfg.max_categories, "Distinct values above which a categorical column "
                                                               "is flagged")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--missing-markers", cfg.missing_markers, "Comma-separated missing markers (\"\" always "
                                                                 "included)");

  auto* detect = app.add_subcommand("detect", "Print the detected format of every column");
  add_input_options(*detect, cfg);
  detect->add_option("--output,-o", cfg.output, "Write the listing here instead of stdout");

  auto* stats = app.add_subcommand("dict-stats", "Keyword frequency per format in the formats dictionary");
  add_dictionary_options(*stats, cfg);
  stats->add_option("--output,-o", cfg.output, "Write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (detect->parsed()) return cmd_detect(cfg, out);
    return cmd_dict_stats(cfg, out);
  } catch (const std::exception& e) {
    err << "attrdq: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace attrdq::cli
