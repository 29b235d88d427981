// Copyright 2026 The faddeeva-trap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "faddeeva/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include "json.hpp"  // nlohmann, vendored

#include "faddeeva/errors.hpp"

namespace faddeeva::bench {
namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// nlohmann serialises NaN as null, which is what we want.
Json sweep_json(const SweepRecord& r) {
  return Json{{"n", r.n},
              {"max_abs_err", r.max_abs_err},
              {"max_rel_err", r.max_rel_err},
              {"bound_abs", r.bound_abs},
              {"bound_rel", r.bound_rel},
              {"argmax_abs_re", r.argmax_abs.real()},
              {"argmax_abs_im", r.argmax_abs.imag()},
              {"argmax_rel_re", r.argmax_rel.real()},
              {"argmax_rel_im", r.argmax_rel.imag()}};
}

template <class T, class F>
std::string json_array(std::span<const T> items, F to) {
  Json a = Json::array();
  for (const auto& item : items) a.push_back(to(item));
  return a.dump(2) + "\n";
}

}  // namespace

Format format_for_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return Format::kJson;
  return Format::kCsv;
}

std::string to_csv(std::span<const SweepRecord> records) {
  std::string out =
      "n,max_abs_err,max_rel_err,bound_abs,bound_rel,argmax_abs_re,argmax_abs_im,argmax_rel_re,"
      "argmax_rel_im\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + ',' + num(r.max_abs_err) + ',' + num(r.max_rel_err) + ',' +
           num(r.bound_abs) + ',' + num(r.bound_rel) + ',' + num(r.argmax_abs.real()) + ',' +
           num(r.argmax_abs.imag()) + ',' + num(r.argmax_rel.real()) + ',' +
           num(r.argmax_rel.imag()) + '\n';
  }
  return out;
}

std::string to_csv(std::span<const AccuracyRow> rows) {
  std::string out = "method,max_abs,max_rel,points,argmax_abs_re,argmax_abs_im,argmax_rel_re,argmax_rel_im\n";
  for (const auto& r : rows) {
    out += '"' + r.method + "\"," + num(r.max_abs) + ',' + num(r.max_rel) + ',' +
           std::to_string(r.points) + ',' + num(r.argmax_abs.real()) + ',' +
           num(r.argmax_abs.imag()) + ',' + num(r.argmax_rel.real()) + ',' +
           num(r.argmax_rel.imag()) + '\n';
  }
  return out;
}

std::string to_csv(std::span<const TimingRecord> records) {
  std::string out = "method,mean_seconds,sd_seconds,reps,points,grid\n";
  for (const auto& r : records) {
    out += '"' + r.method + "\"," + num(r.mean_seconds) + ',' + num(r.sd_seconds) + ',' +
           std::to_string(r.reps) + ',' + std::to_string(r.points) + ",\"" + r.grid + "\"\n";
  }
  return out;
}

std::string to_csv(const reference::WeidemanModel& model) {
  std::string out = "k,a_k\n";
  for (std::size_t k = 0; k < model.coeffs.size(); ++k) {
    out += std::to_string(k + 1) + ',' + num(model.coeffs[k]) + '\n';
  }
  return out;
}

std::string to_json(std::span<const SweepRecord> records) {
  return json_array(records, sweep_json);
}

std::string to_json(std::span<const AccuracyRow> rows) {
  return json_array(rows, [](const AccuracyRow& r) {
    return Json{{"method", r.method},
                {"max_abs", r.max_abs},
                {"max_rel", r.max_rel},
                {"points", r.points},
                {"argmax_abs_re", r.argmax_abs.real()},
                {"argmax_abs_im", r.argmax_abs.imag()},
                {"argmax_rel_re", r.argmax_rel.real()},
                {"argmax_rel_im", r.argmax_rel.imag()}};
  });
}

std::string to_json(std::span<const TimingRecord> records) {
  return json_array(records, [](const TimingRecord& r) {
    return Json{{"method", r.method},     {"mean_seconds", r.mean_seconds},
                {"sd_seconds", r.sd_seconds}, {"reps", r.reps},
                {"points", r.points},     {"grid", r.grid}};
  });
}

std::string to_json(const reference::WeidemanModel& model) {
  Json j{{"n", model.n},
         {"l", model.l},
         {"coeffs", model.coeffs},
         {"max_imag_residue", model.max_imag_residue},
         {"fit_residual", model.fit_residual}};
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace faddeeva::bench
