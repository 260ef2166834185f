#include <sstream>

#include "idealkit/commands.hpp"

namespace idealkit {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& e : a)
    if (e.is_structured()) return false;
  return true;
}

bool all_scalar_lists(const Json& a) {
  for (const auto& e : a)
    if (!e.is_array() || !all_scalars(e)) return false;
  return true;
}

// ["x1", "x2"] -> (x1, x2)
std::string tuple(const Json& a) {
  std::string out = "(";
  bool first = true;
  for (const auto& e : a) {
    if (!first) out += ", ";
    out += scalar(e);
    first = false;
  }
  return out + ")";
}

std::string set_of_tuples(const Json& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : a) {
    if (!first) out += ", ";
    out += tuple(e);
    first = false;
  }
  return out + "}";
}

void render(std::ostringstream& out, const std::string& key, const Json& v, int indent);

void render_object_fields(std::ostringstream& out, const Json& obj, int indent) {
  for (const auto& [k, v] : obj.items()) render(out, k, v, indent);
}

void render(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!v.is_structured()) {
    out << pad << key << ": " << scalar(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    out << pad << key << ": " << tuple(v) << "\n";
  } else if (v.is_array() && all_scalar_lists(v)) {
    out << pad << key << ": " << set_of_tuples(v) << "\n";
  } else if (v.is_array()) {
    out << pad << key << ":\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        out << pad << "  -\n";
        render_object_fields(out, e, indent + 4);
      } else {
        render(out, "-", e, indent + 2);
      }
    }
  } else {
    out << pad << key << ":\n";
    render_object_fields(out, v, indent + 2);
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::ostringstream out;
  out << "idealkit " << scalar(report.value("command", Json("?"))) << "\n";
  for (const auto& [k, v] : report.items()) {
    if (k == "schema" || k == "command" || k == "checks" || k == "verdict") continue;
    render(out, k, v, 0);
  }
  out << "checks:\n";
  for (const auto& c : report.value("checks", Json::array())) {
    out << "  [" << (c.value("pass", false) ? "PASS" : "FAIL") << "] " << c.value("name", std::string());
    if (c.contains("detail")) out << " (" << scalar(c["detail"]) << ")";
    out << "\n";
  }
  out << "verdict: " << scalar(report.value("verdict", Json("FAIL"))) << "\n";
  return out.str();
}

}  // namespace idealkit
