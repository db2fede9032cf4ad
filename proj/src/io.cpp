// Copyright 2026 The cqedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cqed/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cqed/errors.hpp"
#include "cqed/spectrum.hpp"

namespace cqed {
namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& what) { fail(ErrorCode::kInvalidConfig, what); }

class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) config_error(path_ + ": expected an object");
  }

  bool has(const char* key) const { return j_.contains(key); }

  const json& raw(const char* key) {
    used_.insert(key);
    return j_.at(key);
  }

  void number(const char* key, double& out) {
    if (!has(key)) return;
    const auto& v = raw(key);
    if (!v.is_number()) config_error(where(key) + ": expected a number");
    out = v.get<double>();
  }

  void integer(const char* key, int& out) {
    if (!has(key)) return;
    const auto& v = raw(key);
    if (!v.is_number_integer()) config_error(where(key) + ": expected an integer");
    const auto wide = v.get<long long>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
      config_error(where(key) + ": integer out of range");
    }
    out = static_cast<int>(wide);
  }

  void string(const char* key, std::string& out) {
    if (!has(key)) return;
    const auto& v = raw(key);
    if (!v.is_string()) config_error(where(key) + ": expected a string");
    out = v.get<std::string>();
  }

  void finish() const {
    for (const auto& item : j_.items()) {
      if (!used_.count(item.key())) config_error(where(item.key().c_str()) + ": unknown key");
    }
  }

  std::string where(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

DetuningMode parse_detuning(const json& j) {
  Section s(j, "params.detuning_mode");
  DetuningMode d;
  std::string kind = "from_transitions";
  s.string("kind", kind);
  if (kind == "explicit") {
    d.kind = DetuningMode::Kind::kExplicit;
  } else if (kind == "from_transitions") {
    d.kind = DetuningMode::Kind::kFromTransitions;
  } else {
    config_error("params.detuning_mode.kind: expected 'explicit' or 'from_transitions'");
  }
  std::string pair = transition_pair_name(d.pair);
  s.string("pair", pair);
  d.pair = parse_transition_pair(pair);
  s.number("delta_m", d.delta_m);
  s.number("delta_n", d.delta_n);
  s.finish();
  return d;
}

CircuitParams parse_params(const json& j) {
  Section s(j, "params");
  CircuitParams p;
  s.number("c_g", p.c_g);
  s.number("c_b", p.c_b);
  s.number("c_j", p.c_j);
  s.number("c0", p.c0);
  s.number("l0", p.l0);
  s.number("half_length_l", p.half_length_l);
  s.number("c_in", p.c_in);
  s.number("e_c", p.e_c);
  s.number("e_j", p.e_j);
  s.number("x_j", p.x_j);
  s.number("kappa_m", p.kappa_m);
  s.number("kappa_n", p.kappa_n);
  s.number("n_ina", p.n_ina);
  s.number("n_inb", p.n_inb);
  s.number("drive_amplitude", p.drive_amplitude);
  s.number("drive_phase", p.drive_phase);
  if (s.has("detuning_mode")) p.detuning_mode = parse_detuning(s.raw("detuning_mode"));
  s.finish();
  return p;
}

TruncationSpec parse_trunc(const json& j) {
  Section s(j, "trunc");
  TruncationSpec t;
  s.integer("n_tl_modes", t.n_tl_modes);
  s.integer("tl_photon_cutoff", t.tl_photon_cutoff);
  s.integer("transmon_levels", t.transmon_levels);
  s.finish();
  return t;
}

std::string quartic_name(QuarticForm q) { return q == QuarticForm::kFull ? "full" : "diagonal"; }

std::string variant_name(TransmonFrequencyVariant v) {
  return v == TransmonFrequencyVariant::kDressedChargingEnergy ? "e_cm" : "e_c";
}

void parse_model(const json& j, ModelSettings& m) {
  Section s(j, "model");
  std::string quartic = quartic_name(m.spectrum.quartic);
  s.string("quartic", quartic);
  if (quartic == "diagonal") {
    m.spectrum.quartic = QuarticForm::kDiagonal;
  } else if (quartic == "full") {
    m.spectrum.quartic = QuarticForm::kFull;
  } else {
    config_error("model.quartic: expected 'diagonal' or 'full'");
  }
  s.integer("tracking_steps", m.spectrum.tracking_steps);
  s.integer("tracked_levels", m.spectrum.tracked_levels);
  std::string variant = variant_name(m.omega_n_variant);
  s.string("omega_n_variant", variant);
  if (variant == "e_c") {
    m.omega_n_variant = TransmonFrequencyVariant::kChargingEnergy;
  } else if (variant == "e_cm") {
    m.omega_n_variant = TransmonFrequencyVariant::kDressedChargingEnergy;
  } else {
    config_error("model.omega_n_variant: expected 'e_c' or 'e_cm'");
  }
  s.integer("mode_m", m.mode_m);
  s.finish();
}

SweepSpec parse_sweep(const json& j) {
  Section s(j, "sweep");
  SweepSpec spec;
  if (s.has("axes")) {
    const auto& axes = s.raw("axes");
    if (!axes.is_array()) config_error("sweep.axes: expected an array");
    for (std::size_t i = 0; i < axes.size(); ++i) {
      Section a(axes[i], "sweep.axes[" + std::to_string(i) + "]");
      SweepAxis axis;
      std::string name;
      if (!a.has("name")) config_error(a.where("name") + ": required");
      a.string("name", name);
      axis.name = parse_axis_name(name);
      for (const char* key : {"start", "stop", "count"}) {
        if (!a.has(key)) config_error(a.where(key) + ": required");
      }
      a.number("start", axis.start);
      a.number("stop", axis.stop);
      a.integer("count", axis.count);
      a.finish();
      spec.axes.push_back(axis);
    }
  }
  if (s.has("observables")) {
    const auto& obs = s.raw("observables");
    if (!obs.is_array()) config_error("sweep.observables: expected an array");
    for (const auto& o : obs) {
      if (!o.is_string()) config_error("sweep.observables: expected strings");
      spec.observables.push_back(o.get<std::string>());
    }
  }
  s.finish();
  return spec;
}

void check_config(const RunConfig& c) {
  const auto report = validate(c.params);
  if (!report.ok()) config_error("params: " + report.summary());
  try {
    check_truncation(c.model.trunc);
  } catch (const Error& e) {
    config_error(std::string("trunc: ") + e.what());
  }
  if (c.model.spectrum.tracking_steps < 1) config_error("model.tracking_steps must be >= 1");
  if (c.model.spectrum.tracked_levels < 1) config_error("model.tracked_levels must be >= 1");
  if (c.model.mode_m < 1) config_error("model.mode_m must be >= 1");
  if (!c.sweep.axes.empty()) check_axes(c.sweep.axes);
  for (const auto& o : c.sweep.observables) {
    if (!is_registered_observable(o)) config_error("unknown observable '" + o + "'");
  }
}

std::string hex_color(double r, double g, double b) {
  char buf[8];
  auto c = [](double v) { return static_cast<int>(std::lround(std::clamp(v, 0.0, 255.0))); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c(r), c(g), c(b));
  return buf;
}

std::string gradient_color(double t) {
  const auto& stops = heatmap_stops();
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * (stops.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(pos), stops.size() - 2);
  const double f = pos - i;
  auto channel = [](const std::string& hex, int k) {
    return static_cast<double>(std::stoi(hex.substr(1 + 2 * k, 2), nullptr, 16));
  };
  double rgb[3];
  for (int k = 0; k < 3; ++k) {
    rgb[k] = channel(stops[i], k) * (1.0 - f) + channel(stops[i + 1], k) * f;
  }
  return hex_color(rgb[0], rgb[1], rgb[2]);
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v == 0.0 ? 0.0 : v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<SweepAxis> default_axes(const CircuitParams& params) {
  return {{AxisName::kEjOverEc, 1.0, 80.0, 64},
          {AxisName::kXPosition, -params.half_length_l, params.half_length_l, 64}};
}

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  Section root(doc, "");
  RunConfig c;
  if (root.has("params")) c.params = parse_params(root.raw("params"));
  if (root.has("trunc")) c.model.trunc = parse_trunc(root.raw("trunc"));
  if (root.has("model")) parse_model(root.raw("model"), c.model);
  if (root.has("sweep")) c.sweep = parse_sweep(root.raw("sweep"));
  root.string("output_dir", c.output_dir);
  if (root.has("seed")) {
    const auto& v = root.raw("seed");
    if (!v.is_number_unsigned()) config_error("seed: expected a non-negative integer");
    c.seed = v.get<std::uint64_t>();
  }
  root.finish();
  check_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIo, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c, int indent) {
  const auto& p = c.params;
  json params{{"c_g", p.c_g},
              {"c_b", p.c_b},
              {"c_j", p.c_j},
              {"c0", p.c0},
              {"l0", p.l0},
              {"half_length_l", p.half_length_l},
              {"c_in", p.c_in},
              {"e_c", p.e_c},
              {"e_j", p.e_j},
              {"x_j", p.x_j},
              {"kappa_m", p.kappa_m},
              {"kappa_n", p.kappa_n},
              {"n_ina", p.n_ina},
              {"n_inb", p.n_inb},
              {"drive_amplitude", p.drive_amplitude},
              {"drive_phase", p.drive_phase},
              {"detuning_mode",
               {{"kind", p.detuning_mode.kind == DetuningMode::Kind::kExplicit ? "explicit"
                                                                              : "from_transitions"},
                {"pair", transition_pair_name(p.detuning_mode.pair)},
                {"delta_m", p.detuning_mode.delta_m},
                {"delta_n", p.detuning_mode.delta_n}}}};
  json trunc{{"n_tl_modes", c.model.trunc.n_tl_modes},
             {"tl_photon_cutoff", c.model.trunc.tl_photon_cutoff},
             {"transmon_levels", c.model.trunc.transmon_levels}};
  json model{{"quartic", quartic_name(c.model.spectrum.quartic)},
             {"tracking_steps", c.model.spectrum.tracking_steps},
             {"tracked_levels", c.model.spectrum.tracked_levels},
             {"omega_n_variant", variant_name(c.model.omega_n_variant)},
             {"mode_m", c.model.mode_m}};
  json axes = json::array();
  for (const auto& a : c.sweep.axes) {
    axes.push_back({{"name", axis_name(a.name)}, {"start", a.start}, {"stop", a.stop}, {"count", a.count}});
  }
  json doc{{"params", params},
           {"trunc", trunc},
           {"model", model},
           {"sweep", {{"axes", axes}, {"observables", c.sweep.observables}}},
           {"output_dir", c.output_dir},
           {"seed", c.seed}};
  return doc.dump(indent) + "\n";
}

std::string apply_override(const std::string& json_text, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    config_error("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("config is not valid JSON: ") + e.what());
  }
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? dot : dot - start);
    if (part.empty()) config_error("override key '" + key + "' has an empty component");
    if (!node->is_object()) config_error("override key '" + key + "' does not name an object path");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      break;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
  return doc.dump();
}

std::string format_number(double v) { return fmt("%.11e", v); }

std::string csv_text(const SweepGrid& grid) {
  std::string out;
  for (const auto& a : grid.axes) out += axis_name(a.name) + ",";
  out += "value,error_code\n";
  const std::size_t n = grid.values.size();
  std::vector<int> index(grid.axes.size(), 0);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t rest = flat;
    for (int a = static_cast<int>(grid.axes.size()) - 1; a >= 0; --a) {
      index[a] = static_cast<int>(rest % grid.axes[a].count);
      rest /= grid.axes[a].count;
    }
    for (std::size_t a = 0; a < grid.axes.size(); ++a) {
      out += format_number(grid.axes[a].value(index[a])) + ",";
    }
    const auto code = grid.error_mask[flat];
    if (code == ErrorCode::kOk) out += format_number(grid.values[flat]);
    out += "," + std::to_string(static_cast<int>(code)) + "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) fail(ErrorCode::kIo, "write to '" + path + "' failed");
}

void write_csv(const SweepGrid& grid, const std::string& path) {
  write_text_file(path, csv_text(grid));
}

const std::vector<std::string>& heatmap_stops() {
  static const std::vector<std::string> stops{"#440154", "#46327e", "#365c8d", "#277f8e",
                                              "#1fa187", "#4ac16d", "#a0da39", "#fde725"};
  return stops;
}

std::string svg_heatmap(const SweepGrid& grid) {
  if (grid.axes.size() != 2) {
    fail(ErrorCode::kUnsupported, "SVG heatmaps need exactly two axes");
  }
  const auto& ya = grid.axes[0];
  const auto& xa = grid.axes[1];
  const int nx = xa.count;
  const int ny = ya.count;

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    if (grid.error_mask[i] != ErrorCode::kOk) continue;
    lo = std::min(lo, grid.values[i]);
    hi = std::max(hi, grid.values[i]);
  }
  const bool any = lo <= hi;

  const double left = 90, top = 40, width = 560, height = 420;
  const double bar_x = left + width + 30, bar_w = 20;
  const double cw = width / nx, ch = height / ny;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"540\" "
       "viewBox=\"0 0 800 540\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"540\" fill=\"#ffffff\"/>\n";
  s << "<text x=\"" << fmt("%.1f", left + width / 2) << "\" y=\"24\" text-anchor=\"middle\" "
    << "font-size=\"15\">" << xml_escape(grid.observable) << " [" << xml_escape(grid.unit)
    << "]</text>\n";
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t flat = static_cast<std::size_t>(iy) * nx + ix;
      std::string color = "#808080";
      if (grid.error_mask[flat] == ErrorCode::kOk) {
        color = gradient_color(hi > lo ? (grid.values[flat] - lo) / (hi - lo) : 0.0);
      }
      s << "<rect x=\"" << fmt("%.3f", left + ix * cw) << "\" y=\""
        << fmt("%.3f", top + (ny - 1 - iy) * ch) << "\" width=\"" << fmt("%.3f", cw)
        << "\" height=\"" << fmt("%.3f", ch) << "\" fill=\"" << color << "\"/>\n";
    }
  }
  s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width << "\" height=\""
    << height << "\" fill=\"none\" stroke=\"#000000\"/>\n";

  const double base = top + height;
  s << "<text x=\"" << left << "\" y=\"" << base + 18 << "\" text-anchor=\"start\">"
    << fmt("%.4g", xa.start) << "</text>\n";
  s << "<text x=\"" << left + width << "\" y=\"" << base + 18 << "\" text-anchor=\"end\">"
    << fmt("%.4g", xa.stop) << "</text>\n";
  s << "<text x=\"" << fmt("%.1f", left + width / 2) << "\" y=\"" << base + 36
    << "\" text-anchor=\"middle\">" << axis_name(xa.name) << "</text>\n";
  s << "<text x=\"" << left - 6 << "\" y=\"" << base << "\" text-anchor=\"end\">"
    << fmt("%.4g", ya.start) << "</text>\n";
  s << "<text x=\"" << left - 6 << "\" y=\"" << top + 10 << "\" text-anchor=\"end\">"
    << fmt("%.4g", ya.stop) << "</text>\n";
  s << "<text x=\"24\" y=\"" << fmt("%.1f", top + height / 2) << "\" text-anchor=\"middle\" "
    << "transform=\"rotate(-90 24 " << fmt("%.1f", top + height / 2) << ")\">"
    << axis_name(ya.name) << "</text>\n";

  const auto& stops = heatmap_stops();
  s << "<defs><linearGradient id=\"bar\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\n";
  for (std::size_t k = 0; k < stops.size(); ++k) {
    s << "<stop offset=\"" << fmt("%.4f", static_cast<double>(k) / (stops.size() - 1))
      << "\" stop-color=\"" << stops[k] << "\"/>\n";
  }
  s << "</linearGradient></defs>\n";
  s << "<rect x=\"" << bar_x << "\" y=\"" << top << "\" width=\"" << bar_w << "\" height=\""
    << height << "\" fill=\"url(#bar)\" stroke=\"#000000\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    const double v = any ? lo + (hi - lo) * t : 0.0;
    s << "<text x=\"" << bar_x + bar_w + 6 << "\" y=\"" << fmt("%.1f", top + height * (1 - t) + 4)
      << "\">" << (any ? fmt("%.4g", v) : std::string("n/a")) << "</text>\n";
  }
  if (grid.masked_count() > 0) {
    s << "<rect x=\"" << bar_x << "\" y=\"" << base + 20 << "\" width=\"" << bar_w
      << "\" height=\"12\" fill=\"#808080\"/>\n";
    s << "<text x=\"" << bar_x + bar_w + 6 << "\" y=\"" << base + 30 << "\">masked</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

void write_svg_heatmap(const SweepGrid& grid, const std::string& path) {
  write_text_file(path, svg_heatmap(grid));
}

}  // namespace cqed
