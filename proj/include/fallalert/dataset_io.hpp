#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "fallalert/error.hpp"
#include "fallalert/types.hpp"
#include "fallalert/util/digest.hpp"
#include "fallalert/util/text.hpp"

namespace fallalert {

// Canonical dataset file: delimited text with this exact header, one sample
// per row. A remap file (key=value) translates foreign column names, label
// values and location values to the canonical ones before parsing.
constexpr const char* kDatasetHeader = "subject,location,label,session,t,ax,ay,az,gx,gy,gz";

// Sessions are split where consecutive samples are further apart than this.
constexpr double kSessionGapSeconds = 0.5;

struct ColumnRemap {
  std::map<std::string, std::string> map;  // foreign name/value -> canonical

  std::string apply(const std::string& s) const {
    auto it = map.find(s);
    return it == map.end() ? s : it->second;
  }
};

inline ColumnRemap load_remap(const std::string& path) {
  return ColumnRemap{load_kv_file(path)};
}

namespace detail {

inline std::tuple<std::string, int, std::string, std::string> recording_sort_key(
    const Recording& r) {
  return {r.subject_id, static_cast<int>(r.location), r.label_string(), r.session};
}

inline void sort_canonical(std::vector<Recording>& recs) {
  std::stable_sort(recs.begin(), recs.end(), [](const Recording& a, const Recording& b) {
    return recording_sort_key(a) < recording_sort_key(b);
  });
}

}  // namespace detail

inline Dataset load_dataset(const std::string& path, const ColumnRemap& remap = {},
                            double declared_rate_hz = kDefaultSampleRateHz) {
  std::string text = read_file(path);
  std::vector<std::string> lines = split(text, '\n');
  // Drop a trailing empty line from the final newline.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  require(!lines.empty(), Errc::empty_dataset, path + " is empty");

  std::vector<std::string> header = split(std::string(trim(lines[0])), ',');
  for (auto& h : header) h = remap.apply(std::string(trim(h)));

  const std::vector<std::string> wanted = split(kDatasetHeader, ',');
  std::map<std::string, size_t> col;
  for (size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  std::vector<size_t> idx;
  for (const auto& name : wanted) {
    auto it = col.find(name);
    if (it == col.end()) fail(Errc::schema, path + ": missing column '" + name + "'");
    idx.push_back(it->second);
  }

  require(lines.size() > 1, Errc::empty_dataset, path + " has a header but no rows");

  struct Row {
    std::string subject, location, label, session;
    Sample s;
  };
  std::vector<Row> rows;
  rows.reserve(lines.size() - 1);
  for (size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    std::vector<std::string> cells = split(lines[li], ',');
    if (cells.size() < header.size())
      fail(Errc::parse, path + " row " + std::to_string(li + 1) + ": expected " +
                            std::to_string(header.size()) + " cells, got " +
                            std::to_string(cells.size()));
    const std::string where = path + " row " + std::to_string(li + 1);
    Row row;
    row.subject = std::string(trim(cells[idx[0]]));
    row.location = remap.apply(std::string(trim(cells[idx[1]])));
    row.label = remap.apply(std::string(trim(cells[idx[2]])));
    row.session = std::string(trim(cells[idx[3]]));
    row.s.t = parse_double(cells[idx[4]], where + " column t");
    row.s.ax = parse_double(cells[idx[5]], where + " column ax");
    row.s.ay = parse_double(cells[idx[6]], where + " column ay");
    row.s.az = parse_double(cells[idx[7]], where + " column az");
    row.s.gx = parse_double(cells[idx[8]], where + " column gx");
    row.s.gy = parse_double(cells[idx[9]], where + " column gy");
    row.s.gz = parse_double(cells[idx[10]], where + " column gz");
    if (!sample_in_range(row.s))
      fail(Errc::validation, where + ": sample exceeds sensor range");
    rows.push_back(std::move(row));
  }
  require(!rows.empty(), Errc::empty_dataset, path + " has no data rows");

  // Group rows by (subject, location, label, session), keeping file order
  // within a group until sorted by time.
  std::map<std::tuple<std::string, std::string, std::string, std::string>, std::vector<Sample>>
      groups;
  for (const Row& r : rows)
    groups[{r.subject, r.location, r.label, r.session}].push_back(r.s);

  Dataset ds;
  ds.provenance = path;
  for (auto& [key, samples] : groups) {
    const auto& [subject, location, label, session] = key;
    std::stable_sort(samples.begin(), samples.end(),
                     [](const Sample& a, const Sample& b) { return a.t < b.t; });
    // Split on time gaps larger than the session gap.
    std::vector<std::vector<Sample>> parts;
    parts.emplace_back();
    for (const Sample& s : samples) {
      if (!parts.back().empty() && s.t - parts.back().back().t > kSessionGapSeconds)
        parts.emplace_back();
      parts.back().push_back(s);
    }
    for (size_t p = 0; p < parts.size(); ++p) {
      Recording rec;
      rec.subject_id = subject;
      rec.location = parse_body_location(location);
      rec.label = parse_recording_label(label);
      rec.session = parts.size() == 1 ? session : session + "#" + std::to_string(p);
      rec.sample_rate_hz = declared_rate_hz;
      rec.samples = std::move(parts[p]);
      validate_recording(rec);
      ds.recordings.push_back(std::move(rec));
    }
  }
  detail::sort_canonical(ds.recordings);
  return ds;
}

// Canonical serialization: recordings sorted by (subject, location, label,
// session), shortest round-trip number formatting. Loading the output and
// saving again is byte-stable.
inline std::string serialize_dataset(const Dataset& ds) {
  std::vector<const Recording*> order;
  order.reserve(ds.recordings.size());
  for (const auto& r : ds.recordings) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const Recording* a, const Recording* b) {
    return detail::recording_sort_key(*a) < detail::recording_sort_key(*b);
  });

  std::string out(kDatasetHeader);
  out += '\n';
  for (const Recording* r : order) {
    for (const Sample& s : r->samples) {
      out += r->subject_id;
      out += ',';
      out += to_string(r->location);
      out += ',';
      out += r->label_string();
      out += ',';
      out += r->session;
      out += ',';
      out += format_double(s.t);
      for (double v : {s.ax, s.ay, s.az, s.gx, s.gy, s.gz}) {
        out += ',';
        out += format_double(v);
      }
      out += '\n';
    }
  }
  return out;
}

inline void save_dataset(const Dataset& ds, const std::string& path) {
  write_file(path, serialize_dataset(ds));
}

inline std::string dataset_digest(const Dataset& ds) {
  return digest_hex(serialize_dataset(ds));
}

}  // namespace fallalert
