#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pwwf/automorphism.hpp"
#include "pwwf/conversion.hpp"
#include "pwwf/family.hpp"
#include "pwwf/pairwise.hpp"
#include "pwwf/sturmian.hpp"
#include "pwwf/triple.hpp"
#include "pwwf/word.hpp"

namespace {

using nlohmann::json;
using namespace pwwf;

// Left-aligned columns, two-space gaps, nothing after the last cell of a row.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      if (width.size() <= c) width.resize(c + 1, 0);
      width[c] = std::max(width[c], row[c].size());
    }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out.append(width[c] - row[c].size() + 2, ' ');
    }
    out += "\n";
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += csv_cell(row[c]);
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Substitution3 parse_mode(const std::string& text) {
  DividedMode m = DividedMode::parse(text);
  if (m.segment_count() != 3)
    throw UsageError("expected a mode with three segments, like ba|ca||bac");
  return substitution_from_mode(m);
}

std::string projection_status(const Substitution2& s) {
  if (recognize_special_standard(s)) return "special-standard";
  if (recognize_special_sturmian(s)) return "special-sturmian";
  return "bad";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

constexpr Projection kProjections[] = {Projection::Apotomic, Projection::Syntonic,
                                       Projection::ApoSyntonic};

int run_classify(const std::string& mode_text, const std::string& format) {
  Substitution3 s = parse_mode(mode_text);
  ModeClassification cls = classify_mode(s);
  std::string label = mode_label(s);
  std::optional<std::string> certificate;
  if (cls.kind == ModeKind::Morphic) {
    std::string str = decide_morphic(s)->str();
    certificate = str.empty() ? "identity" : str;
  }

  std::vector<std::array<std::string, 2>> projections;
  for (Projection p : kProjections) {
    Substitution2 side = project_substitution(s, p);
    projections.push_back({divided_pair(side).str(), projection_status(side)});
  }

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["mode"] = mode_of(s).str();
    for (std::size_t i = 0; i < 3; ++i)
      j["projections"][projection_name(kProjections[i])] = {
          {"pair", projections[i][0]}, {"status", projections[i][1]}};
    j["type"] = label;
    j["decomposition"] = certificate ? json(*certificate) : json(nullptr);
    emit(render_json(j));
    return 0;
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mode", mode_of(s).str()});
  for (std::size_t i = 0; i < 3; ++i) {
    if (format == "csv") {
      rows.push_back({projection_name(kProjections[i]), projections[i][0]});
      rows.push_back({std::string(projection_name(kProjections[i])) + "-status",
                      projections[i][1]});
    } else {
      rows.push_back({projection_name(kProjections[i]), projections[i][0], projections[i][1]});
    }
  }
  rows.push_back({"type", label});
  if (certificate) rows.push_back({"decomposition", *certificate});
  if (format == "csv") {
    rows.insert(rows.begin(), {"field", "value"});
    emit(render_csv(rows));
  } else {
    emit(render_columns(rows));
  }
  return 0;
}

int run_table(long k, long n, const std::string& format) {
  std::vector<FamilyTableRow> table = family_table(FamilyParams(k, n));

  auto projection_cells = [](const FamilyTableRow& row) {
    Substitution3 s = substitution_from_mode(row.mode);
    std::array<std::string, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
      out[i] = divided_pair(project_substitution(s, kProjections[i])).str();
    return out;
  };

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["k"] = k;
    j["n"] = n;
    j["rows"] = json::array();
    for (const FamilyTableRow& row : table) {
      auto cells = projection_cells(row);
      json r;
      r["mode"] = row.mode.str();
      r["apotomic"] = cells[0];
      r["syntonic"] = cells[1];
      r["apo-syntonic"] = cells[2];
      r["type"] = row.label;
      r["decomposition"] = row.decomposition ? json(row.decomposition->str()) : json(nullptr);
      j["rows"].push_back(r);
    }
    emit(render_json(j));
    return 0;
  }

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"mode", "apotomic", "syntonic", "apo-syntonic", "type"});
  if (format == "csv") rows.back().push_back("decomposition");
  for (const FamilyTableRow& row : table) {
    auto cells = projection_cells(row);
    std::vector<std::string> r{row.mode.str(), cells[0], cells[1], cells[2], row.label};
    if (format == "csv") r.push_back(row.decomposition ? row.decomposition->str() : "");
    rows.push_back(r);
  }
  emit(format == "csv" ? render_csv(rows) : render_columns(rows));
  return 0;
}

int run_bisect(const std::string& word_text, const std::string& format) {
  Word input(word_text);
  Word image = bisect(input);
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["input"] = input.str();
    j["word"] = image.str();
    emit(render_json(j));
  } else if (format == "csv") {
    emit(render_csv({{"input", "word"}, {input.str(), image.str()}}));
  } else {
    emit(image.str() + "\n");
  }
  return 0;
}

int run_project(const std::string& mode_text, const std::string& which,
                const std::string& format) {
  Substitution3 s = parse_mode(mode_text);
  Projection p = Projection::Apotomic;
  for (Projection candidate : kProjections)
    if (which == projection_name(candidate)) p = candidate;
  std::string pair = divided_pair(project_substitution(s, p)).str();
  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["mode"] = mode_of(s).str();
    j["projection"] = which;
    j["pair"] = pair;
    emit(render_json(j));
  } else if (format == "csv") {
    emit(render_csv({{"mode", "projection", "pair"}, {mode_of(s).str(), which, pair}}));
  } else {
    emit(pair + "\n");
  }
  return 0;
}

int run_decompose(const std::string& mode_text, const std::string& format) {
  Substitution3 s = parse_mode(mode_text);
  std::optional<Decomposition> d = decide_morphic(s);
  std::vector<std::string> obstructions;
  if (!d) obstructions = morphic_obstruction_trace(s);
  std::string certificate;
  if (d) certificate = d->str().empty() ? "identity" : d->str();

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["mode"] = mode_of(s).str();
    j["morphic"] = d.has_value();
    j["decomposition"] = d ? json(certificate) : json(nullptr);
    j["obstructions"] = obstructions;
    emit(render_json(j));
  } else if (format == "csv") {
    emit(render_csv({{"mode", "morphic", "decomposition"},
                     {mode_of(s).str(), d ? "yes" : "no", certificate}}));
  } else if (d) {
    emit(certificate + "\n");
  } else {
    std::string out = "not-morphic\n";
    for (const std::string& line : obstructions) out += line + "\n";
    emit(out);
  }
  return 0;
}

int run_matrices(const std::string& mode_text, const std::string& format) {
  Substitution3 s = parse_mode(mode_text);
  Mat2 apotomic = incidence2(project_substitution(s, Projection::Apotomic));
  Mat2 syntonic = incidence2(project_substitution(s, Projection::Syntonic));
  Mat2 apo_syntonic = incidence2(project_substitution(s, Projection::ApoSyntonic));

  auto attempt = [](auto&& op) -> std::string {
    try {
      return matrix_str(op());
    } catch (const std::domain_error& e) {
      return e.what();
    }
  };
  std::string predicted = attempt([&] { return predicted_incidence_sigma(apotomic); });
  std::string predicted_g = attempt([&] { return predicted_incidence_g(apotomic); });
  std::string converted = attempt([&] { return conversion_map(apotomic); });
  std::string inverted = attempt([&] { return conversion_map_inverse(apo_syntonic); });

  std::vector<std::vector<std::string>> rows{
      {"mode", mode_of(s).str()},
      {"incidence", matrix_str(incidence3(s))},
      {"apotomic", matrix_str(apotomic)},
      {"syntonic", matrix_str(syntonic)},
      {"apo-syntonic", matrix_str(apo_syntonic)},
      {"apotomic-family", yes_no(is_apotomic_matrix(apotomic))},
      {"apo-syntonic-family", yes_no(is_apo_syntonic_matrix(apo_syntonic))},
      {"predicted-incidence", predicted},
      {"predicted-conversion", predicted_g},
      {"conversion", converted},
      {"inverse-conversion", inverted}};

  if (format == "json") {
    json j;
    j["schema"] = 1;
    for (const auto& row : rows) j[row[0]] = row[1];
    j["apotomic-family"] = is_apotomic_matrix(apotomic);
    j["apo-syntonic-family"] = is_apo_syntonic_matrix(apo_syntonic);
    emit(render_json(j));
  } else if (format == "csv") {
    rows.insert(rows.begin(), {"field", "value"});
    emit(render_csv(rows));
  } else {
    emit(render_columns(rows));
  }
  return 0;
}

int run_conjecture(long max_len, int jobs, const std::string& format) {
  ConjectureReport report = search_conjecture(max_len, jobs);

  if (format == "json") {
    json j;
    j["schema"] = 1;
    j["max-length"] = report.max_length;
    j["classes"] = report.classes_searched;
    j["counts"]["morphic"] = report.counts.morphic;
    j["counts"]["good"] = report.counts.good;
    j["counts"]["bad*"] = report.counts.bad_star;
    j["counts"]["bad**"] = report.counts.bad_double_star;
    j["counterexamples"] = json::array();
    for (const ConjectureCounterexample& ce : report.counterexamples) {
      json c;
      c["mode"] = ce.mode;
      c["family-instance"] = ce.family_instance;
      c["morphic"] = ce.morphic;
      c["detail"] = ce.detail;
      j["counterexamples"].push_back(c);
    }
    emit(render_json(j));
  } else {
    std::vector<std::vector<std::string>> rows{
        {"max-length", std::to_string(report.max_length)},
        {"classes", std::to_string(report.classes_searched)},
        {"morphic", std::to_string(report.counts.morphic)},
        {"good", std::to_string(report.counts.good)},
        {"bad*", std::to_string(report.counts.bad_star)},
        {"bad**", std::to_string(report.counts.bad_double_star)},
        {"counterexamples", std::to_string(report.counterexamples.size())}};
    if (format == "csv") {
      rows.insert(rows.begin(), {"field", "value"});
      for (const ConjectureCounterexample& ce : report.counterexamples)
        rows.push_back({"counterexample", ce.mode});
      emit(render_csv(rows));
    } else {
      std::string out = render_columns(rows);
      for (const ConjectureCounterexample& ce : report.counterexamples) {
        out += "counterexample " + ce.mode + " family-instance=" +
               yes_no(ce.family_instance) + " morphic=" + yes_no(ce.morphic) + "\n";
        for (const std::string& line : ce.detail) out += "  " + line + "\n";
      }
      emit(out);
    }
  }
  return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwise well-formed modes: classification, bisection, decomposition"};
  app.require_subcommand(1);
  std::string format = "text-table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text-table", "json", "csv"}));

  std::string mode_text, word_text, which = "apotomic";
  long k = 0, n = 1, max_len = 19;
  int jobs = 1;

  CLI::App* classify = app.add_subcommand("classify", "classify a divided mode");
  classify->add_option("mode", mode_text, "divided mode, like ba|ca||bac")->required();

  CLI::App* table = app.add_subcommand("table", "print one parametric family table");
  table->add_option("--k", k, "family parameter k")->required()->check(CLI::Range(0l, 1000000l));
  table->add_option("--n", n, "family parameter n")->required()->check(CLI::Range(1l, 1000000l));

  CLI::App* bisect_cmd = app.add_subcommand("bisect", "bisect a word over the outer letters");
  bisect_cmd->add_option("word", word_text, "word over a and c")->required();

  CLI::App* project = app.add_subcommand("project", "project a divided mode to one pair");
  project->add_option("mode", mode_text, "divided mode")->required();
  project->add_option("--which", which, "projection to take")
      ->required()
      ->check(CLI::IsMember({"apotomic", "syntonic", "apo-syntonic"}));

  CLI::App* decompose = app.add_subcommand("decompose", "decompose a mode into productions");
  decompose->add_option("mode", mode_text, "divided mode")->required();

  CLI::App* matrices = app.add_subcommand("matrices", "incidence matrices and conversions");
  matrices->add_option("mode", mode_text, "divided mode")->required();

  CLI::App* conjecture = app.add_subcommand("conjecture", "search for counterexamples");
  conjecture->add_option("--max-len", max_len, "largest mode word length")
      ->check(CLI::Range(7l, 100l));
  conjecture->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  for (CLI::App* sub : {classify, table, bisect_cmd, project, decompose, matrices, conjecture})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(mode_text, format);
    if (app.got_subcommand(table)) return run_table(k, n, format);
    if (app.got_subcommand(bisect_cmd)) return run_bisect(word_text, format);
    if (app.got_subcommand(project)) return run_project(mode_text, which, format);
    if (app.got_subcommand(decompose)) return run_decompose(mode_text, format);
    if (app.got_subcommand(matrices)) return run_matrices(mode_text, format);
    if (app.got_subcommand(conjecture)) return run_conjecture(max_len, jobs, format);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
