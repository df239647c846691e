#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

#include "compass/error.hpp"
#include "compass/trace_io.hpp"

namespace compass {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string str(const std::string& s) { return json(s).dump(); }

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedTrace, what); }

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) malformed(where + " is not an object");
  const auto it = obj.find(key);
  if (it == obj.end()) malformed(where + " lacks \"" + key + "\"");
  return *it;
}

double real(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) malformed(where + "." + key + " is not a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) malformed(where + "." + key + " is not finite");
  return d;
}

std::uint32_t id(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    malformed(where + "." + key + " is not a node id");
  }
  return static_cast<std::uint32_t>(v.get<std::uint64_t>());
}

const json& array(const json& obj, const char* key) {
  const json& v = field(obj, key, "document");
  if (!v.is_array()) malformed(std::string("\"") + key + "\" is not an array");
  return v;
}

}  // namespace

std::string to_json(const TraceDocument& doc) {
  const Trace& t = doc.trace;
  const Program& p = t.program;
  std::string out = "{\n  \"version\": " + std::to_string(kTraceVersion) + ",\n  \"seeds\": [";
  for (std::size_t i = 0; i < p.seed_count; ++i) {
    const Point& pt = t.point(NodeId{static_cast<std::uint32_t>(i)});
    out += i ? ",\n    " : "\n    ";
    out += "{\"id\": " + std::to_string(i);
    if (i < doc.seed_names.size() && !doc.seed_names[i].empty()) out += ", \"name\": " + str(doc.seed_names[i]);
    out += ", \"x\": " + num(pt.x) + ", \"y\": " + num(pt.y) + "}";
  }
  out += p.seed_count ? "\n  ],\n  \"steps\": [" : "],\n  \"steps\": [";
  bool first = true;
  for (std::size_t i = p.seed_count; i < p.steps.size(); ++i) {
    out += first ? "\n    " : ",\n    ";
    first = false;
    out += "{\"id\": " + std::to_string(i);
    if (const auto* c = std::get_if<CircleStep>(&p.steps[i])) {
      out += ", \"op\": \"circle\", \"center\": " + std::to_string(c->center.index) +
             ", \"through\": " + std::to_string(c->through.index) + "}";
    } else {
      const auto& pick = std::get<PickStep>(p.steps[i]);
      const Point& pt = t.point(NodeId{static_cast<std::uint32_t>(i)});
      out += ", \"op\": \"pick\", \"c1\": " + std::to_string(pick.circle1.index) +
             ", \"c2\": " + std::to_string(pick.circle2.index) + ", \"selector\": \"" +
             (pick.which == Selector::Left ? "left" : "right") + "\", \"x\": " + num(pt.x) +
             ", \"y\": " + num(pt.y) + "}";
    }
  }
  out += first ? "],\n  \"outputs\": [" : "\n  ],\n  \"outputs\": [";
  for (std::size_t i = 0; i < doc.outputs.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "{\"name\": " + str(doc.outputs[i].first) + ", \"id\": " + std::to_string(doc.outputs[i].second.index) + "}";
  }
  out += doc.outputs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

TraceDocument from_json(std::string_view text, const Tolerance& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  const json& version = field(doc, "version", "document");
  if (!version.is_number_integer() || version.get<long long>() != kTraceVersion) malformed("unsupported version");

  TraceDocument out;
  Trace& t = out.trace;
  Program& p = t.program;

  const json& seeds = array(doc, "seeds");
  p.seed_count = seeds.size();
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::string where = "seeds[" + std::to_string(i) + "]";
    if (id(seeds[i], "id", where) != i) malformed(where + ".id is not " + std::to_string(i));
    const Point pt{real(seeds[i], "x", where), real(seeds[i], "y", where)};
    std::string name;
    if (const auto it = seeds[i].find("name"); it != seeds[i].end()) {
      if (!it->is_string()) malformed(where + ".name is not a string");
      name = it->get<std::string>();
    }
    out.seed_names.push_back(name);
    p.steps.emplace_back(SeedStep{i});
    t.seed_values.push_back(pt);
    t.resolved.emplace_back(pt);
  }

  const json& steps = array(doc, "steps");
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::size_t index = p.seed_count + k;
    const std::string where = "steps[" + std::to_string(k) + "]";
    if (id(steps[k], "id", where) != index) malformed(where + ".id is not " + std::to_string(index));
    const json& op = field(steps[k], "op", where);
    if (op == "circle") {
      p.steps.emplace_back(CircleStep{NodeId{id(steps[k], "center", where)}, NodeId{id(steps[k], "through", where)}});
    } else if (op == "pick") {
      const json& sel = field(steps[k], "selector", where);
      if (sel != "left" && sel != "right") malformed(where + ".selector must be \"left\" or \"right\"");
      p.steps.emplace_back(PickStep{NodeId{id(steps[k], "c1", where)}, NodeId{id(steps[k], "c2", where)},
                                    sel == "left" ? Selector::Left : Selector::Right});
    } else {
      malformed(where + " has unknown op " + op.dump());
    }
  }

  for (const json& o : array(doc, "outputs")) {
    const json& name = field(o, "name", "output");
    if (!name.is_string()) malformed("output name is not a string");
    p.outputs.push_back(NodeId{id(o, "id", "output")});
    out.outputs.emplace_back(name.get<std::string>(), p.outputs.back());
  }

  try {
    validate(p);
  } catch (const Error& e) {
    malformed(e.what());
  }

  // Circles are recomputed from their stored points; picks keep their stored
  // coordinates.
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const std::size_t index = p.seed_count + k;
    if (const auto* c = std::get_if<CircleStep>(&p.steps[index])) {
      try {
        t.resolved.emplace_back(resolve_circle(t.point(c->center), t.point(c->through), tol));
      } catch (const Error& e) {
        malformed("steps[" + std::to_string(k) + "]: " + e.what());
      }
      ++t.circle_count;
    } else {
      const std::string where = "steps[" + std::to_string(k) + "]";
      t.resolved.emplace_back(Point{real(steps[k], "x", where), real(steps[k], "y", where)});
    }
  }

  purity_audit(t);
  return out;
}

namespace {

std::string xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Box {
  double minx = std::numeric_limits<double>::infinity();
  double miny = std::numeric_limits<double>::infinity();
  double maxx = -std::numeric_limits<double>::infinity();
  double maxy = -std::numeric_limits<double>::infinity();

  void add(Point p, double r = 0.0) {
    minx = std::min(minx, p.x - r);
    miny = std::min(miny, p.y - r);
    maxx = std::max(maxx, p.x + r);
    maxy = std::max(maxy, p.y + r);
  }
};

}  // namespace

std::string to_svg(const TraceDocument& doc) {
  const Trace& t = doc.trace;
  const Program& p = t.program;
  Box box;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const NodeValue& v = t.resolved[i];
    if (const auto* pt = std::get_if<Point>(&v)) {
      box.add(*pt);
    } else {
      const auto& c = std::get<ResolvedCircle>(v);
      box.add(c.center, c.radius);
    }
  }
  if (p.steps.empty()) box = Box{-1, -1, 1, 1};
  double size = std::max(box.maxx - box.minx, box.maxy - box.miny);
  if (!(size > 0)) size = 2.0;
  const double margin = 0.1 * size;
  const double w = box.maxx - box.minx + 2 * margin;
  const double h = box.maxy - box.miny + 2 * margin;
  const double dot = size / 150;

  // SVG's y axis points down; flip so the figure keeps its orientation.
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(box.minx - margin) + " " +
         num(-(box.maxy + margin)) + " " + num(w) + " " + num(h) + "\">\n";
  out += "<style>.construction{fill:none;stroke:red;stroke-width:1;vector-effect:non-scaling-stroke}"
         ".constructed-point{fill:red}.given-point{fill:black}</style>\n";
  out += "<g transform=\"scale(1,-1)\">\n";
  for (std::size_t i = p.seed_count; i < p.steps.size(); ++i) {
    if (const auto* c = std::get_if<CircleStep>(&p.steps[i])) {
      const ResolvedCircle& rc = std::get<ResolvedCircle>(t.resolved[i]);
      out += "<circle class=\"construction\" cx=\"" + num(rc.center.x) + "\" cy=\"" + num(rc.center.y) + "\" r=\"" +
             num(rc.radius) + "\"><title>step " + std::to_string(i) + ": circle(" + std::to_string(c->center.index) +
             ", " + std::to_string(c->through.index) + ")</title></circle>\n";
    }
  }
  for (std::size_t i = p.seed_count; i < p.steps.size(); ++i) {
    if (const auto* pick = std::get_if<PickStep>(&p.steps[i])) {
      const Point& pt = std::get<Point>(t.resolved[i]);
      out += "<ellipse class=\"constructed-point\" cx=\"" + num(pt.x) + "\" cy=\"" + num(pt.y) + "\" rx=\"" + num(dot) +
             "\" ry=\"" + num(dot) + "\"><title>step " + std::to_string(i) + ": pick(" +
             std::to_string(pick->circle1.index) + ", " + std::to_string(pick->circle2.index) + ", " +
             (pick->which == Selector::Left ? "left" : "right") + ")</title></ellipse>\n";
    }
  }
  for (std::size_t i = 0; i < p.seed_count; ++i) {
    const Point& pt = std::get<Point>(t.resolved[i]);
    std::string label = "seed " + std::to_string(i);
    if (i < doc.seed_names.size() && !doc.seed_names[i].empty()) label += ": " + xml(doc.seed_names[i]);
    out += "<ellipse class=\"given-point\" cx=\"" + num(pt.x) + "\" cy=\"" + num(pt.y) + "\" rx=\"" + num(dot * 1.5) +
           "\" ry=\"" + num(dot * 1.5) + "\"><title>" + label + "</title></ellipse>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace compass
