#include "dataset.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "format.hpp"
#include "varbelief/state_space.hpp"

namespace vbcli {

namespace {

constexpr double kInputSumTolerance = 1e-9;

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(field);
  return fields;
}

double parse_number(const std::string& token, std::size_t line_no) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) {
    throw DatasetError("dataset: line " + std::to_string(line_no) + ": '" + token +
                       "' is not a finite number");
  }
  return value;
}

std::vector<double> renormalized(std::vector<double> mass, std::size_t line_no,
                                 const char* which) {
  double sum = 0.0;
  for (double m : mass) {
    if (m < 0.0) {
      throw DatasetError("dataset: line " + std::to_string(line_no) + ": negative " + which +
                         " probability");
    }
    sum += m;
  }
  if (std::abs(sum - 1.0) > kInputSumTolerance) {
    throw DatasetError("dataset: line " + std::to_string(line_no) + ": " + which +
                       " columns sum to " + std::to_string(sum) + " (must be 1 within 1e-9)");
  }
  for (double& m : mass) m /= sum;
  return mass;
}

}  // namespace

void write_dataset(std::ostream& out, std::span<const varbelief::UpdateObservation> observations,
                   const DatasetMeta& meta) {
  out << "# seed=" << meta.seed << " alpha=" << fmt12(meta.alpha) << " beta=" << fmt12(meta.beta)
      << " n=" << meta.n << " noise=" << fmt12(meta.noise) << "\n";
  if (observations.empty()) {
    throw DatasetError("dataset: nothing to write");
  }
  const auto& space = observations.front().prior.space();
  bool first = true;
  for (const char* prefix : {"p_", "f_", "q_"}) {
    for (std::size_t s = 0; s < space.size(); ++s) {
      if (!first) out << ',';
      first = false;
      out << prefix << space.label(s);
    }
  }
  out << "\n";
  for (const auto& o : observations) {
    for (std::size_t s = 0; s < space.size(); ++s) {
      if (s > 0) out << ',';
      out << fmt12(o.prior[s]);
    }
    for (std::size_t s = 0; s < space.size(); ++s) out << ',' << fmt12(o.likelihood_row[s]);
    for (std::size_t s = 0; s < space.size(); ++s) out << ',' << fmt12(o.posterior[s]);
    out << "\n";
  }
}

std::vector<varbelief::UpdateObservation> read_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  // Header: first non-comment line.
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    header = split_csv(line);
    break;
  }
  if (header.empty()) {
    throw DatasetError("dataset: missing header row");
  }
  if (header.size() % 3 != 0 || header.size() < 6) {
    throw DatasetError("dataset: header must hold p_/f_/q_ column triples (got " +
                       std::to_string(header.size()) + " columns)");
  }
  const std::size_t num_states = header.size() / 3;
  std::vector<std::string> labels(num_states);
  for (std::size_t s = 0; s < num_states; ++s) {
    const std::string& p_col = header[s];
    const std::string& f_col = header[num_states + s];
    const std::string& q_col = header[2 * num_states + s];
    if (p_col.rfind("p_", 0) != 0 || f_col.rfind("f_", 0) != 0 || q_col.rfind("q_", 0) != 0) {
      throw DatasetError("dataset: header columns must be ordered p_*, f_*, q_*");
    }
    labels[s] = p_col.substr(2);
    if (f_col.substr(2) != labels[s] || q_col.substr(2) != labels[s]) {
      throw DatasetError("dataset: state labels disagree across p_/f_/q_ columns");
    }
  }
  const auto space = varbelief::make_state_space(std::move(labels));

  std::vector<varbelief::UpdateObservation> observations;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (fields.size() != 3 * num_states) {
      throw DatasetError("dataset: line " + std::to_string(line_no) + ": expected " +
                         std::to_string(3 * num_states) + " columns, got " +
                         std::to_string(fields.size()));
    }
    std::vector<double> prior(num_states), row(num_states), posterior(num_states);
    for (std::size_t s = 0; s < num_states; ++s) {
      prior[s] = parse_number(fields[s], line_no);
      row[s] = parse_number(fields[num_states + s], line_no);
      posterior[s] = parse_number(fields[2 * num_states + s], line_no);
    }
    observations.emplace_back(
        varbelief::Distribution(space, renormalized(std::move(prior), line_no, "prior")),
        std::move(row),
        varbelief::Distribution(space, renormalized(std::move(posterior), line_no, "posterior")));
  }
  if (observations.empty()) {
    throw DatasetError("dataset: no observation rows");
  }
  return observations;
}

}  // namespace vbcli
