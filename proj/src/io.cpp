#include "sp16/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sp16/errors.hpp"

namespace sp16 {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& why) {
  throw ValidationError("set file line " + std::to_string(line_no) + ": " + why);
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string exact_with_approx(const Rational& r) {
  return r.to_string() + " (approx " + approx_string(r) + ")";
}

std::string join_coords(const CDNumber& x) {
  std::string out;
  for (const auto& c : x.coords()) {
    if (!out.empty()) out += ' ';
    out += c.to_string();
  }
  return out;
}

}  // namespace

SetFile parse_set_file(std::istream& in) {
  SetFile file;
  bool have_header = false;
  bool have_level = false;
  bool have_end = false;
  int level = 0;
  std::vector<CDNumber> elements;

  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    if (have_end) fail_at(line_no, "content after 'end'");
    const std::string& key = words[0];

    if (!have_header) {
      if (key != "sp16-set" || words.size() != 2) fail_at(line_no, "expected header 'sp16-set <version>'");
      if (words[1] != std::to_string(kSetFormatVersion)) fail_at(line_no, "unsupported format version " + words[1]);
      file.format_version = kSetFormatVersion;
      have_header = true;
    } else if (key == "level") {
      if (have_level || words.size() != 2) fail_at(line_no, "expected a single 'level <n>' line");
      if (words[1].size() != 1 || words[1][0] < '0' || words[1][0] > '4') fail_at(line_no, "level must be 0..4");
      level = words[1][0] - '0';
      have_level = true;
    } else if (key == "flags") {
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i] == "inverse_closed") file.declared.inverse_closed = true;
        else if (words[i] == "all_niner") file.declared.all_niner = true;
        else if (words[i] == "single_privileged_orthant") file.declared.single_privileged_orthant = true;
        else fail_at(line_no, "unknown flag '" + words[i] + "'");
      }
    } else if (key == "element") {
      if (!have_level) fail_at(line_no, "'element' before 'level'");
      if (words.size() - 1 != dimension(level)) {
        fail_at(line_no, "level " + std::to_string(level) + " elements need " + std::to_string(dimension(level)) +
                             " coordinates, got " + std::to_string(words.size() - 1));
      }
      std::vector<Rational> coords;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!Rational::is_canonical_text(words[i])) {
          fail_at(line_no, "coordinate '" + words[i] + "' is not a rational in lowest terms");
        }
        coords.push_back(Rational::parse(words[i]));
      }
      CDNumber x(level, std::move(coords));
      if (std::find(elements.begin(), elements.end(), x) != elements.end()) {
        fail_at(line_no, "duplicate element " + x.to_string());
      }
      elements.push_back(std::move(x));
    } else if (key == "end") {
      if (words.size() != 1) fail_at(line_no, "'end' takes no arguments");
      have_end = true;
    } else {
      fail_at(line_no, "unknown directive '" + key + "'");
    }
  }
  if (!have_header) throw ValidationError("set file: missing 'sp16-set' header");
  if (!have_level) throw ValidationError("set file: missing 'level' line");
  if (!have_end) throw ValidationError("set file: missing 'end' line (truncated file?)");

  file.set = ElementSet(level, std::move(elements));
  const SetFlags actual = compute_flags(file.set);
  if (file.declared.inverse_closed && !actual.inverse_closed) {
    throw ValidationError("set file: declared flag 'inverse_closed' does not hold");
  }
  if (file.declared.all_niner && !actual.all_niner) {
    throw ValidationError("set file: declared flag 'all_niner' does not hold");
  }
  if (file.declared.single_privileged_orthant && !actual.single_privileged_orthant) {
    throw ValidationError("set file: declared flag 'single_privileged_orthant' does not hold");
  }
  return file;
}

SetFile load_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open set file " + path.string());
  return parse_set_file(in);
}

void write_set_file(std::ostream& out, const SetFile& file) {
  out << "sp16-set " << kSetFormatVersion << '\n';
  out << "level " << file.set.level() << '\n';
  std::string flags;
  if (file.declared.inverse_closed) flags += " inverse_closed";
  if (file.declared.all_niner) flags += " all_niner";
  if (file.declared.single_privileged_orthant) flags += " single_privileged_orthant";
  if (!flags.empty()) out << "flags" << flags << '\n';
  for (const auto& x : file.set) out << "element " << join_coords(x) << '\n';
  out << "end\n";
}

void save_set_file(const std::filesystem::path& path, const SetFile& file) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write set file " + path.string());
  write_set_file(out, file);
}

SetFile make_set_file(const ElementSet& set) { return SetFile{kSetFormatVersion, set, compute_flags(set)}; }

std::string render_report(const BoundReport& r) {
  std::ostringstream out;
  out << "sp16-report " << kReportFormatVersion << '\n';
  out << "mode " << to_string(r.mode) << '\n';
  out << "side " << to_string(r.side) << '\n';
  out << "count_basis " << to_string(r.basis) << '\n';
  out << "certified " << bool_str(r.certified) << '\n';
  if (!r.certified) out << "uncertified_reason " << r.uncertified_reason << '\n';
  out << "computed " << bool_str(r.computed) << '\n';
  out << "set_size " << r.set_size << '\n';
  if (!r.computed) return out.str();

  out << "sumset_size " << r.sumset_size << '\n';
  out << "productset_size " << r.productset_size << '\n';
  out << "E " << r.E << '\n';
  out << "E_prime " << r.E_prime << '\n';
  out << "primary_count " << (r.primary == Side::left ? "ell" : "r") << '\n';
  out << "swapped " << bool_str(r.swapped) << '\n';
  out << "chosen_I " << r.chosen_I << '\n';
  out << "R_size " << r.R_size << '\n';
  for (const auto& s : r.sx) {
    out << "sx x " << s.x.to_string() << " phi " << s.phi_x.to_string() << " reps_x " << s.reps_x
        << " reps_phi " << s.reps_phi << " size " << s.size << " injective " << bool_str(s.injective)
        << " solver_recovered " << s.solver_recovered << '\n';
  }
  out << "sum_Sx " << r.sum_Sx << '\n';
  out << "union_Sx " << r.union_Sx << '\n';
  out << "ratio " << exact_with_approx(r.ratio) << '\n';
  out << "k16_lower " << exact_with_approx(r.k16_lower) << '\n';
  for (const auto& st : r.stages) {
    out << "stage " << (st.pass ? "pass" : "FAIL") << (st.informational ? " informational" : "") << " | "
        << st.name << " | " << st.lhs.to_string() << ' ' << st.relation << ' ' << st.rhs.to_string() << '\n';
  }
  out << "chain_ok " << bool_str(r.chain_ok) << '\n';
  out << "ball_lemma " << to_string(r.ball_lemma.status) << " checked " << r.ball_lemma.checked << " failures "
      << r.ball_lemma.failures << '\n';
  out << "sanity_violation " << bool_str(r.sanity_violation) << '\n';
  return out.str();
}

std::string render_search_config(const SearchConfig& c) {
  nlohmann::ordered_json j;
  j["set_size_range"] = {c.min_size, c.max_size};
  j["coordinate_bound"] = c.coordinate_bound;
  j["generator"] = to_string(c.generator);
  std::vector<std::string> moves;
  for (Move m : c.moves) moves.emplace_back(to_string(m));
  j["moves"] = moves;
  j["iterations"] = c.iterations;
  j["seed"] = c.seed;
  j["acceptance"] = to_string(c.acceptance);
  j["anneal_schedule"] = {{"initial_temperature", c.initial_temperature.to_string()},
                          {"decay", c.decay.to_string()}};
  return j.dump();
}

std::string render_history_table(const SearchRecord& record) {
  std::ostringstream out;
  out << "iteration move applied accepted candidate current best\n";
  for (const auto& h : record.history) {
    out << h.iteration << ' ' << h.move << ' ' << (h.applied ? 1 : 0) << ' ' << (h.accepted ? 1 : 0) << ' '
        << h.candidate_ratio.to_string() << ' ' << h.current_ratio.to_string() << ' ' << h.best_ratio.to_string()
        << '\n';
  }
  return out.str();
}

std::string render_search_record(const SearchRecord& record) {
  std::ostringstream out;
  out << "sp16-search " << kReportFormatVersion << '\n';
  out << "config " << render_search_config(record.config) << '\n';
  out << "evaluations " << record.evaluations << '\n';
  for (const auto& line : record.evaluation_log) out << "evaluation_log " << line << '\n';
  out << "initial_set\n";
  write_set_file(out, make_set_file(record.initial_set));
  out << "best_status " << to_string(record.best_score.status) << '\n';
  out << "best_ratio " << exact_with_approx(record.best_score.ratio) << '\n';
  out << "best_k16_lower " << exact_with_approx(record.best_score.ratio - Rational(1)) << '\n';
  out << "best_set\n";
  write_set_file(out, make_set_file(record.best_set));
  if (record.best_report) {
    out << "best_report\n" << render_report(*record.best_report);
  }
  out << "history\n" << render_history_table(record);
  return out.str();
}

namespace {

template <typename T>
T get_field(const nlohmann::json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("config field '") + name + "': wrong type");
  }
}

Rational get_rational(const nlohmann::json& j, const char* name) {
  const auto& v = j.at(name);
  try {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string("config field 'anneal_schedule.") + name +
                        "': expected an integer or a \"num/den\" string");
}

Generator parse_generator(const std::string& s) {
  if (s == "random") return Generator::random;
  if (s == "geometric") return Generator::geometric;
  if (s == "lattice_slice") return Generator::lattice_slice;
  throw ValidationError("config field 'generator': unknown value '" + s + "'");
}

Move parse_move(const std::string& s) {
  if (s == "replace_element") return Move::replace_element;
  if (s == "perturb_coordinate") return Move::perturb_coordinate;
  if (s == "add_element") return Move::add_element;
  if (s == "remove_element") return Move::remove_element;
  throw ValidationError("config field 'moves': unknown move '" + s + "'");
}

Acceptance parse_acceptance(const std::string& s) {
  if (s == "hill_climb") return Acceptance::hill_climb;
  if (s == "anneal") return Acceptance::anneal;
  throw ValidationError("config field 'acceptance': unknown value '" + s + "'");
}

}  // namespace

SearchConfig parse_search_config(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("config: top level must be an object");

  SearchConfig c;
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "set_size_range") {
      const auto range = get_field<std::vector<std::int64_t>>(j, k);
      if (range.size() != 2 || range[0] < 0 || range[1] < 0) {
        throw ValidationError("config field 'set_size_range': expected [min, max] with non-negative entries");
      }
      c.min_size = static_cast<std::size_t>(range[0]);
      c.max_size = static_cast<std::size_t>(range[1]);
    } else if (key == "coordinate_bound") {
      c.coordinate_bound = get_field<std::int64_t>(j, k);
    } else if (key == "generator") {
      c.generator = parse_generator(get_field<std::string>(j, k));
    } else if (key == "moves") {
      c.moves.clear();
      for (const auto& m : get_field<std::vector<std::string>>(j, k)) c.moves.push_back(parse_move(m));
    } else if (key == "iterations") {
      if (!value.is_number_unsigned()) {
        throw ValidationError("config field 'iterations': expected a non-negative integer");
      }
      c.iterations = value.get<std::uint64_t>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ValidationError("config field 'seed': expected a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "acceptance") {
      c.acceptance = parse_acceptance(get_field<std::string>(j, k));
    } else if (key == "anneal_schedule") {
      if (!value.is_object()) throw ValidationError("config field 'anneal_schedule': expected an object");
      for (const auto& [sub, _] : value.items()) {
        if (sub == "initial_temperature") c.initial_temperature = get_rational(value, "initial_temperature");
        else if (sub == "decay") c.decay = get_rational(value, "decay");
        else throw ValidationError("config field 'anneal_schedule." + sub + "': unknown field");
      }
    } else {
      throw ValidationError("config field '" + key + "': unknown field");
    }
  }
  validate(c);
  return c;
}

SearchConfig load_search_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_search_config(buf.str());
}

}  // namespace sp16
