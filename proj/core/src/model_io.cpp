#include "stit/model_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "stit/error.hpp"

namespace stit {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ModelError(what); }

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(std::string(what) + " must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::size_t moment_of(const TreeOrder& order, const json& j) {
  if (!j.is_string()) fail("moment references must be names");
  const auto name = j.get<std::string>();
  auto m = order.index_of(name);
  if (!m) fail("unknown moment '" + name + "'");
  return *m;
}

std::size_t history_index(const json& j, std::size_t count) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) fail("history indices must be integers");
  const auto h = j.get<long long>();
  if (h < 0 || static_cast<std::size_t>(h) >= count) {
    fail("history index " + std::to_string(h) + " is out of range (" + std::to_string(count) +
         " histories)");
  }
  return static_cast<std::size_t>(h);
}

std::size_t point_of(const ImaginationModel& model, const json& j) {
  if (!j.is_array() || j.size() != 2) fail("points are written [moment, historyIndex]");
  const std::size_t m = moment_of(model.order(), j[0]);
  const std::size_t h = history_index(j[1], model.histories().size());
  auto p = model.point_index({m, h});
  if (!p) fail("history h" + std::to_string(h) + " does not pass through " + model.moment_name(m));
  return *p;
}

Proposition proposition_of(const ImaginationModel& model, const json& j) {
  if (!j.is_array()) fail("a proposition is a list of points");
  Proposition out;
  for (const auto& e : j) out.insert(point_of(model, e));
  return out;
}

json point_json(const ImaginationModel& model, std::size_t point) {
  const auto& p = model.points()[point];
  return json::array({model.moment_name(p.moment), p.history});
}

json proposition_json(const ImaginationModel& model, const Proposition& prop) {
  json out = json::array();
  prop.for_each([&](std::size_t i) { out.push_back(point_json(model, i)); });
  return out;
}

}  // namespace

ModelDocument parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("a model file is a JSON object");

  const auto agents = string_list(require(doc, "agents"), "agents");
  const auto moments = string_list(require(doc, "moments"), "moments");
  std::vector<std::pair<std::string, std::string>> covers;
  if (doc.contains("covers")) {
    const auto& cj = doc.at("covers");
    if (!cj.is_array()) fail("covers must be a list of [lower, upper] pairs");
    for (const auto& c : cj) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        fail("covers must be a list of [lower, upper] pairs");
      }
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  ModelDocument out{TreeOrder::from_names(moments, covers), std::nullopt, std::nullopt, std::nullopt};
  if (!out.order.acyclic()) return out;

  ImaginationModel model(out.order, agents);
  auto agent_of = [&](const std::string& name) {
    auto a = model.agent_index(name);
    if (!a) fail("unknown agent '" + name + "'");
    return *a;
  };

  if (doc.contains("choice")) {
    const auto& cj = doc.at("choice");
    if (!cj.is_object()) fail("choice must map moments to agents to cells");
    for (const auto& [mname, per_agent] : cj.items()) {
      const std::size_t m = moment_of(out.order, json(mname));
      if (!per_agent.is_object()) fail("choice at " + mname + " must map agents to cells");
      for (const auto& [aname, cells] : per_agent.items()) {
        const std::size_t a = agent_of(aname);
        if (!cells.is_array()) fail("choice cells must be lists of history indices");
        ImaginationModel::Partition part;
        for (const auto& cell : cells) {
          if (!cell.is_array()) fail("choice cells must be lists of history indices");
          std::vector<std::size_t> hs;
          for (const auto& h : cell) hs.push_back(history_index(h, model.histories().size()));
          part.push_back(std::move(hs));
        }
        model.set_choice(m, a, std::move(part));
      }
    }
  }

  if (doc.contains("neighborhoods")) {
    const auto& nj = doc.at("neighborhoods");
    if (!nj.is_object()) fail("neighborhoods must map agents to entries");
    for (const auto& [aname, entries] : nj.items()) {
      const std::size_t a = agent_of(aname);
      if (!entries.is_array()) fail("neighborhoods of " + aname + " must be a list");
      for (const auto& e : entries) {
        if (!e.is_object() || !e.contains("at")) fail("neighborhood entries need an 'at' point");
        const std::size_t p = point_of(model, e.at("at"));
        ImaginationModel::Family fam = model.neighborhood(a, p);
        if (e.contains("props")) {
          if (!e.at("props").is_array()) fail("'props' must be a list of propositions");
          for (const auto& prop : e.at("props")) {
            Proposition x = proposition_of(model, prop);
            if (std::find(fam.begin(), fam.end(), x) == fam.end()) fam.push_back(x);
          }
        }
        model.set_neighborhood(a, p, std::move(fam));
      }
    }
  }

  if (doc.contains("valuation")) {
    const auto& vj = doc.at("valuation");
    if (!vj.is_object()) fail("valuation must map variables to point lists");
    for (const auto& [var, pts] : vj.items()) model.set_valuation(var, proposition_of(model, pts));
  }

  if (doc.contains("refuting_point")) out.refuting_point = model.points()[point_of(model, doc.at("refuting_point"))];
  if (doc.contains("formula") && doc.at("formula").is_string()) out.formula = doc.at("formula").get<std::string>();
  out.model.emplace(std::move(model));
  return out;
}

ModelDocument load_model(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) fail("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string serialize_model(const ImaginationModel& model, const ModelAnnotations& notes) {
  json doc;
  doc["agents"] = model.agents();
  doc["moments"] = model.order().moments();
  json covers = json::array();
  for (auto [lo, hi] : model.order().covers()) {
    covers.push_back({model.moment_name(lo), model.moment_name(hi)});
  }
  doc["covers"] = covers;
  json hist = json::array();
  for (const auto& h : model.histories()) {
    json names = json::array();
    for (std::size_t m : h.moments) names.push_back(model.moment_name(m));
    hist.push_back(names);
  }
  doc["histories"] = hist;

  json choice = json::object();
  for (std::size_t m = 0; m < model.moment_count(); ++m) {
    for (std::size_t a = 0; a < model.agents().size(); ++a) {
      if (model.vacuous_choice(m, a)) continue;
      choice[model.moment_name(m)][model.agents()[a]] = model.choice(m, a);
    }
  }
  doc["choice"] = choice;

  json nbhd = json::object();
  for (std::size_t a = 0; a < model.agents().size(); ++a) {
    json entries = json::array();
    for (std::size_t p = 0; p < model.points().size(); ++p) {
      const auto& fam = model.neighborhood(a, p);
      if (fam.empty()) continue;
      json props = json::array();
      for (const auto& x : fam) props.push_back(proposition_json(model, x));
      entries.push_back({{"at", point_json(model, p)}, {"props", props}});
    }
    if (!entries.empty()) nbhd[model.agents()[a]] = entries;
  }
  doc["neighborhoods"] = nbhd;

  json val = json::object();
  for (const auto& [var, prop] : model.valuations()) val[var] = proposition_json(model, prop);
  doc["valuation"] = val;

  if (notes.formula) doc["formula"] = *notes.formula;
  if (notes.refuting_point) {
    auto p = model.point_index(*notes.refuting_point);
    if (!p) fail("refuting point is not a point of the model");
    doc["refuting_point"] = point_json(model, *p);
  }
  return doc.dump(2) + "\n";
}

std::string history_table(const ImaginationModel& model) {
  std::string out;
  for (std::size_t h = 0; h < model.histories().size(); ++h) {
    out += "h" + std::to_string(h) + " = [";
    const auto& ms = model.histories()[h].moments;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) out += ", ";
      out += model.moment_name(ms[i]);
    }
    out += "]\n";
  }
  return out;
}

PointRef parse_point(const ImaginationModel& model, std::string_view text) {
  const std::size_t sep = text.find_last_of(":/");
  if (sep == std::string_view::npos) fail("point must be written MOMENT:HINDEX");
  const std::string moment(text.substr(0, sep));
  std::string_view idx = text.substr(sep + 1);
  if (!idx.empty() && idx.front() == 'h') idx.remove_prefix(1);
  std::size_t h = 0;
  auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), h);
  if (idx.empty() || ec != std::errc{} || ptr != idx.data() + idx.size()) {
    fail("bad history index in point '" + std::string(text) + "'");
  }
  auto m = model.order().index_of(moment);
  if (!m) fail("unknown moment '" + moment + "'");
  if (h >= model.histories().size()) {
    fail("history index " + std::to_string(h) + " is out of range (" +
         std::to_string(model.histories().size()) + " histories)");
  }
  if (!model.passes_through(h, *m)) {
    fail("history h" + std::to_string(h) + " does not pass through " + moment);
  }
  return {*m, h};
}

}  // namespace stit
