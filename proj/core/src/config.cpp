#include "hetsim/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hetsim/errors.hpp"

namespace hetsim {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::kValidationError, path + ": " + why);
}

// Walks one JSON object, converting known keys and rejecting the rest.
class ObjectReader {
 public:
  ObjectReader(const json* object, std::string path) : object_(object), path_(std::move(path)) {
    if (object_ != nullptr && !object_->is_object()) invalid(display(), "expected an object");
  }

  ~ObjectReader() = default;
  ObjectReader(const ObjectReader&) = delete;
  ObjectReader& operator=(const ObjectReader&) = delete;

  const json* find(const char* key) {
    seen_.insert(key);
    if (object_ == nullptr) return nullptr;
    const auto it = object_->find(key);
    return it == object_->end() ? nullptr : &*it;
  }

  ObjectReader child(const char* key) { return ObjectReader(find(key), join(key)); }

  void read(const char* key, double& out) {
    if (const json* v = find(key)) {
      if (!v->is_number()) invalid(join(key), "expected a number");
      out = v->get<double>();
    }
  }

  void read(const char* key, int& out) {
    if (const json* v = find(key)) out = to_int(*v, join(key));
  }

  void read(const char* key, std::uint64_t& out) {
    if (const json* v = find(key)) {
      if (v->is_number_unsigned()) {
        out = v->get<std::uint64_t>();
      } else if (v->is_number_integer() && v->get<std::int64_t>() >= 0) {
        out = static_cast<std::uint64_t>(v->get<std::int64_t>());
      } else {
        invalid(join(key), "expected a non-negative integer");
      }
    }
  }

  void read(const char* key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) invalid(join(key), "expected true or false");
      out = v->get<bool>();
    }
  }

  void read(const char* key, std::vector<int>& out) {
    if (const json* v = find(key)) {
      if (!v->is_array()) invalid(join(key), "expected an array of integers");
      out.clear();
      for (const json& item : *v) out.push_back(to_int(item, join(key)));
    }
  }

  std::string join(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  void finish() const {
    if (object_ == nullptr) return;
    for (const auto& [key, value] : object_->items()) {
      if (!seen_.contains(key)) invalid(path_.empty() ? key : path_ + "." + key, "unknown key");
    }
  }

 private:
  std::string display() const { return path_.empty() ? "<root>" : path_; }

  static int to_int(const json& v, const std::string& path) {
    if (v.is_number_integer() || v.is_number_unsigned()) {
      const auto wide = v.get<std::int64_t>();
      if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        invalid(path, "integer out of range");
      }
      if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max()) {
        invalid(path, "integer out of range");
      }
      return static_cast<int>(wide);
    }
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (std::isfinite(d) && d == std::floor(d) && std::abs(d) <= std::numeric_limits<int>::max()) {
        return static_cast<int>(d);
      }
    }
    invalid(path, "expected an integer");
  }

  const json* object_;
  std::string path_;
  std::set<std::string, std::less<>> seen_;
};

int read_threshold(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "inf") return ThresholdPolicy::kNever;
  if (v.is_number_integer() || v.is_number_unsigned()) {
    const auto t = v.get<std::int64_t>();
    if (t < 0 || t >= ThresholdPolicy::kNever) invalid(path, "threshold out of range");
    return static_cast<int>(t);
  }
  invalid(path, "expected a non-negative integer or \"inf\"");
}

void read_power(ObjectReader reader, PowerParams& p) {
  reader.read("n_sec", p.sectors);
  reader.read("p_max", p.p_max);
  reader.read("p0", p.p0);
  reader.read("delta_p", p.delta_p);
  reader.read("p_sleep", p.p_sleep);
  reader.read("user_capacity", p.user_capacity);
  reader.finish();
}

void read_freespace(ObjectReader reader, FreeSpaceParams& p) {
  reader.read("alpha", p.alpha);
  reader.read("beta", p.beta);
  reader.read("g", p.breakpoint_m);
  reader.read("k", p.k);
  reader.read("p0", p.target_power_w);
  reader.read("p_max", p.max_power_w);
  reader.finish();
}

Scenario from_json(const json& doc) {
  Scenario s;
  ObjectReader root(&doc, "");

  if (const json* v = root.find("topology")) {
    if (!v->is_string()) invalid("topology", "expected a string");
    const auto kind = network_kind_from_string(v->get<std::string>());
    if (!kind) invalid("topology", "unknown topology '" + v->get<std::string>() + "'");
    s.topology = *kind;
  }
  root.read("n_users", s.n_users);
  root.read("n_hotspot", s.n_hotspot);
  root.read("n_picos", s.n_picos);
  root.read("macro_radius", s.macro_radius);
  root.read("pico_radius", s.pico_radius);
  root.read("boot_slots", s.boot_slots);
  root.read("slots", s.slots);
  root.read("realizations", s.realizations);
  root.read("seed", s.seed);
  root.read("slot_duration", s.slot_duration);
  root.read("legacy_mode", s.legacy_mode);

  {
    ObjectReader policy = root.child("policy");
    int t_activate = s.policy.t_activate();
    std::optional<int> t_deactivate = s.policy.t_deactivate();
    if (const json* v = policy.find("t_activate")) t_activate = read_threshold(*v, "policy.t_activate");
    if (const json* v = policy.find("t_deactivate")) {
      t_deactivate = v->is_null() ? std::nullopt : std::optional<int>(read_threshold(*v, "policy.t_deactivate"));
    }
    policy.finish();
    try {
      s.policy = t_deactivate ? ThresholdPolicy::two_threshold(t_activate, *t_deactivate)
                              : ThresholdPolicy::one_threshold(t_activate);
    } catch (const Error& e) {
      invalid("policy", e.what());
    }
  }
  {
    ObjectReader activity = root.child("activity");
    activity.read("uniform_prob", s.activity.uniform_prob);
    activity.read("hotspot_prob", s.activity.hotspot_prob);
    activity.finish();
  }
  {
    ObjectReader mobility = root.child("mobility");
    mobility.read("roam_speed_min", s.mobility.roam_speed_min);
    mobility.read("roam_speed_max", s.mobility.roam_speed_max);
    mobility.read("dwell_speed_min", s.mobility.dwell_speed_min);
    mobility.read("dwell_speed_max", s.mobility.dwell_speed_max);
    if (const json* v = mobility.find("hotspot_placement")) {
      const std::string name = v->is_string() ? v->get<std::string>() : "";
      if (name == "commute") {
        s.mobility.hotspot_placement = HotspotPlacement::kCommute;
      } else if (name == "in_cell") {
        s.mobility.hotspot_placement = HotspotPlacement::kInCell;
      } else {
        invalid("mobility.hotspot_placement", "expected \"commute\" or \"in_cell\"");
      }
    }
    mobility.finish();
  }
  {
    ObjectReader schedule = root.child("schedule");
    schedule.read("start_slots", s.schedule.start_slots);
    schedule.read("duration", s.schedule.duration);
    schedule.finish();
  }
  {
    ObjectReader channel = root.child("channel");
    ChannelParams& c = s.channel;
    channel.read("macro_tx_power", c.macro_tx_power_dbm);
    channel.read("pico_tx_power", c.pico_tx_power_dbm);
    channel.read("macro_antenna_gain", c.macro_antenna_gain_dbi);
    channel.read("pico_antenna_gain", c.pico_antenna_gain_dbi);
    channel.read("ue_antenna_gain", c.ue_antenna_gain_dbi);
    channel.read("macro_shadow_std", c.macro_shadow_std_db);
    channel.read("pico_shadow_std", c.pico_shadow_std_db);
    channel.read("system_bandwidth", c.system_bandwidth_hz);
    channel.read("temperature", c.temperature_k);
    channel.read("boltzmann", c.boltzmann);
    channel.finish();
  }
  {
    ObjectReader power = root.child("power");
    read_power(power.child("macro"), s.macro_power);
    read_power(power.child("pico"), s.pico_power);
    power.finish();
  }
  {
    ObjectReader legacy = root.child("legacy");
    read_freespace(legacy.child("macro"), s.legacy_macro);
    read_freespace(legacy.child("pico"), s.legacy_pico);
    legacy.finish();
  }
  root.finish();

  try {
    validate(s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNoPicosForHotspot) invalid("n_hotspot", e.what());
    throw;
  }
  return s;
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw Error(ErrorCode::kParseError, "override '" + assignment + "' is not key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;

  json* node = &doc;
  std::string path;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw Error(ErrorCode::kParseError, "override key '" + key + "' has an empty segment");
    path = path.empty() ? part : path + "." + part;
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    json& next = (*node)[part];
    if (next.is_null()) next = json::object();
    if (!next.is_object()) invalid(path, "cannot override inside a non-object value");
    node = &next;
    start = dot + 1;
  }
}

ordered_json power_json(const PowerParams& p) {
  return {{"n_sec", p.sectors},     {"p_max", p.p_max},     {"p0", p.p0},
          {"delta_p", p.delta_p},   {"p_sleep", p.p_sleep}, {"user_capacity", p.user_capacity}};
}

ordered_json freespace_json(const FreeSpaceParams& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"g", p.breakpoint_m},
          {"k", p.k},         {"p0", p.target_power_w}, {"p_max", p.max_power_w}};
}

ordered_json threshold_json(int t) { return t == ThresholdPolicy::kNever ? ordered_json("inf") : ordered_json(t); }

}  // namespace

Scenario parse_scenario(std::string_view text, std::span<const std::string> overrides) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorCode::kParseError, "scenario is not valid JSON");
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "scenario must be a JSON object");
  for (const std::string& assignment : overrides) apply_override(doc, assignment);
  return from_json(doc);
}

Scenario load_scenario(const std::filesystem::path& path, std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read scenario file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), overrides);
}

std::string serialize_scenario(const Scenario& s) {
  ordered_json doc;
  doc["topology"] = to_string(s.topology);
  doc["n_users"] = s.n_users;
  doc["n_hotspot"] = s.n_hotspot;
  doc["n_picos"] = s.n_picos;
  doc["macro_radius"] = s.macro_radius;
  doc["pico_radius"] = s.pico_radius;
  doc["policy"] = {{"t_activate", threshold_json(s.policy.t_activate())},
                   {"t_deactivate", s.policy.t_deactivate() ? threshold_json(*s.policy.t_deactivate()) : nullptr}};
  doc["boot_slots"] = s.boot_slots;
  doc["slots"] = s.slots;
  doc["realizations"] = s.realizations;
  doc["seed"] = s.seed;
  doc["slot_duration"] = s.slot_duration;
  doc["activity"] = {{"uniform_prob", s.activity.uniform_prob}, {"hotspot_prob", s.activity.hotspot_prob}};
  doc["mobility"] = {
      {"roam_speed_min", s.mobility.roam_speed_min},
      {"roam_speed_max", s.mobility.roam_speed_max},
      {"dwell_speed_min", s.mobility.dwell_speed_min},
      {"dwell_speed_max", s.mobility.dwell_speed_max},
      {"hotspot_placement", s.mobility.hotspot_placement == HotspotPlacement::kInCell ? "in_cell" : "commute"}};
  doc["schedule"] = {{"start_slots", s.schedule.start_slots}, {"duration", s.schedule.duration}};
  const ChannelParams& c = s.channel;
  doc["channel"] = {{"macro_tx_power", c.macro_tx_power_dbm},
                    {"pico_tx_power", c.pico_tx_power_dbm},
                    {"macro_antenna_gain", c.macro_antenna_gain_dbi},
                    {"pico_antenna_gain", c.pico_antenna_gain_dbi},
                    {"ue_antenna_gain", c.ue_antenna_gain_dbi},
                    {"macro_shadow_std", c.macro_shadow_std_db},
                    {"pico_shadow_std", c.pico_shadow_std_db},
                    {"system_bandwidth", c.system_bandwidth_hz},
                    {"temperature", c.temperature_k},
                    {"boltzmann", c.boltzmann}};
  doc["power"] = {{"macro", power_json(s.macro_power)}, {"pico", power_json(s.pico_power)}};
  doc["legacy_mode"] = s.legacy_mode;
  doc["legacy"] = {{"macro", freespace_json(s.legacy_macro)}, {"pico", freespace_json(s.legacy_pico)}};
  return doc.dump(2);
}

}  // namespace hetsim
