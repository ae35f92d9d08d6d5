#include "cateval/data_model.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cateval {

std::string_view to_string(DataErrorKind kind) {
  switch (kind) {
    case DataErrorKind::MalformedInput: return "MalformedInput";
    case DataErrorKind::ConflictingLabel: return "ConflictingLabel";
    case DataErrorKind::ConflictingCohort: return "ConflictingCohort";
    case DataErrorKind::DuplicateId: return "DuplicateId";
    case DataErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

namespace {

std::string describe(const Violation& v) {
  std::string out{to_string(v.kind)};
  if (v.row != 0) out += ": row " + std::to_string(v.row);
  if (!v.id.empty()) out += " (ID " + v.id + ")";
  if (!v.message.empty()) out += ": " + v.message;
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool parse_label(std::string_view s, int& out) {
  if (s == "0") { out = 0; return true; }
  if (s == "1") { out = 1; return true; }
  return false;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last && std::isfinite(out);
}

}  // namespace

DataError::DataError(Violation v) : std::runtime_error(describe(v)), violation_(std::move(v)) {}

std::vector<Violation> validate_records(std::span<const PredictionRecord> records) {
  std::vector<Violation> out;
  if (records.empty()) {
    out.push_back({DataErrorKind::EmptyInput, 0, {}, "no data rows"});
    return out;
  }

  struct TesterFirst {
    int label;
    std::string_view cohort;
    std::size_t row;
  };
  std::unordered_set<std::string_view> seen_ids;
  std::unordered_map<std::string_view, TesterFirst> testers;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::size_t row = i + 1;
    if (r.id.empty()) out.push_back({DataErrorKind::MalformedInput, row, r.id, "empty ID"});
    if (r.tied_id.empty())
      out.push_back({DataErrorKind::MalformedInput, row, r.id, "empty tiedID"});
    if (r.cohort.empty())
      out.push_back({DataErrorKind::MalformedInput, row, r.id, "empty cohort"});
    for (const std::string* field : {&r.id, &r.tied_id, &r.cohort}) {
      if (field->find_first_of(",\r\n") != std::string::npos) {
        out.push_back({DataErrorKind::MalformedInput, row, r.id, "field contains a delimiter"});
        break;
      }
    }
    if (r.true_label != 0 && r.true_label != 1)
      out.push_back({DataErrorKind::MalformedInput, row, r.id, "truelabel must be 0 or 1"});
    if (r.pred_label != 0 && r.pred_label != 1)
      out.push_back({DataErrorKind::MalformedInput, row, r.id, "predlabel must be 0 or 1"});
    if (!(r.pred_proba >= 0.0 && r.pred_proba <= 1.0))
      out.push_back({DataErrorKind::MalformedInput, row, r.id, "predproba outside [0,1]"});

    if (!seen_ids.insert(r.id).second)
      out.push_back({DataErrorKind::DuplicateId, row, r.id, "repeated ID"});

    auto [it, inserted] = testers.try_emplace(r.tied_id, TesterFirst{r.true_label, r.cohort, row});
    if (!inserted) {
      if (it->second.label != r.true_label)
        out.push_back({DataErrorKind::ConflictingLabel, row, r.id,
                       "tiedID " + r.tied_id + " has truelabel " +
                           std::to_string(it->second.label) + " at row " +
                           std::to_string(it->second.row)});
      if (it->second.cohort != r.cohort)
        out.push_back({DataErrorKind::ConflictingCohort, row, r.id,
                       "tiedID " + r.tied_id + " already in cohort " +
                           std::string(it->second.cohort)});
    }
  }
  return out;
}

Dataset Dataset::from_records(std::vector<PredictionRecord> records) {
  auto violations = validate_records(records);
  if (!violations.empty()) throw DataError(std::move(violations.front()));

  Dataset d;
  d.records_ = std::move(records);
  for (std::size_t i = 0; i < d.records_.size(); ++i) {
    const auto& r = d.records_[i];
    d.tester_index_[r.tied_id].push_back(i);
    d.cohort_index_[r.cohort].insert(r.tied_id);
  }
  return d;
}

std::vector<Violation> validate_dataset(const Dataset& d) { return validate_records(d.records()); }

Dataset parse_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) throw DataError({DataErrorKind::EmptyInput, 0, {}, "empty input"});
  if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  if (line.empty() && in.peek() == std::char_traits<char>::eof())
    throw DataError({DataErrorKind::EmptyInput, 0, {}, "empty input"});
  if (line != kDatasetHeader)
    throw DataError({DataErrorKind::MalformedInput, 0, {},
                     "missing or wrong header, expected '" + std::string(kDatasetHeader) + "'"});

  std::vector<PredictionRecord> records;
  while (next_line()) {
    const std::size_t row = records.size() + 1;
    if (line.empty()) {
      // A lone trailing newline is fine; blank lines between records are not.
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw DataError({DataErrorKind::MalformedInput, row, {}, "blank line"});
    }
    const auto fields = split_fields(line);
    if (fields.size() != 6)
      throw DataError({DataErrorKind::MalformedInput, row, {},
                       "expected 6 columns, found " + std::to_string(fields.size())});

    PredictionRecord r;
    r.id = fields[0];
    r.tied_id = fields[1];
    r.cohort = fields[2];
    if (!parse_label(fields[3], r.true_label))
      throw DataError({DataErrorKind::MalformedInput, row, r.id,
                       "truelabel '" + std::string(fields[3]) + "' is not 0 or 1"});
    if (!parse_label(fields[4], r.pred_label))
      throw DataError({DataErrorKind::MalformedInput, row, r.id,
                       "predlabel '" + std::string(fields[4]) + "' is not 0 or 1"});
    if (!parse_double(fields[5], r.pred_proba))
      throw DataError({DataErrorKind::MalformedInput, row, r.id,
                       "predproba '" + std::string(fields[5]) + "' is not a number"});
    records.push_back(std::move(r));
  }
  return Dataset::from_records(std::move(records));
}

Dataset parse_dataset(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dataset(in);
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dataset(in);
}

std::string format_probability(double p) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p, std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("probability formatting failed");
  return std::string(buf, ptr);
}

void write_dataset(std::ostream& out, const Dataset& d) {
  out << kDatasetHeader << '\n';
  for (const auto& r : d.records()) {
    out << r.id << ',' << r.tied_id << ',' << r.cohort << ',' << r.true_label << ','
        << r.pred_label << ',' << format_probability(r.pred_proba) << '\n';
  }
}

std::string serialize_dataset(const Dataset& d) {
  std::ostringstream out;
  write_dataset(out, d);
  return out.str();
}

}  // namespace cateval
